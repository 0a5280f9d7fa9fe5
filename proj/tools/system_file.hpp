#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logdecomp/measure.hpp"
#include "logdecomp/outcome_space.hpp"
#include "logdecomp/random_variable.hpp"

namespace logdecomp::cli {

/// A system document:
///
///   {
///     "outcomes":  [{"id": "1", "p": 0.1}, ...],
///     "variables": {"X": [["1", "3"], ["2", "4"]], ...},
///     "settings":  {"base": 2 | "e" | 10, "tolerance": 1e-9, "allow_zero": false}
///   }
///
/// `settings` and each of its keys are optional.
struct SystemFile {
  OutcomeSpace space;
  /// Declaration order.
  std::vector<RandomVariable> variables;

  const RandomVariable& variable(std::string_view name) const;
  std::vector<std::string> names() const;
  Bindings bindings() const;
};

struct LoadOverrides {
  std::optional<LogBase> base;
  bool allow_zero = false;
  std::size_t max_outcomes = kDefaultMaxOutcomes;
};

/// Throws ValidationError for schema violations and invalid
/// spaces/partitions, CapacityError when the outcome count is over the limit.
SystemFile parse_system(std::string_view json_text, const LoadOverrides& overrides = {});
SystemFile load_system(const std::filesystem::path& path, const LoadOverrides& overrides = {});

}  // namespace logdecomp::cli
