#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logdecomp/log_base.hpp"

namespace logdecomp {

/// Bit i set means outcome i is a member.
using SubsetMask = std::uint64_t;

inline constexpr std::size_t kDefaultMaxOutcomes = 24;

/// Dense per-subset tables need 2^N entries; nothing above this is
/// accepted regardless of configuration.
inline constexpr std::size_t kHardMaxOutcomes = 30;

struct Outcome {
  std::string id;
  double p = 0.0;
};

struct SpaceOptions {
  LogBase base = LogBase::two;
  double tolerance = 1e-9;
  bool allow_zero = false;
  std::size_t max_outcomes = kDefaultMaxOutcomes;
};

/// The ground set: an ordered, finite list of outcomes with probabilities.
/// Immutable once created. Copies share a tag so that contents built from
/// either copy can be combined; independently created spaces never do.
class OutcomeSpace {
 public:
  /// Throws ValidationError on empty/duplicate ids, bad probabilities or a
  /// total that misses 1 by more than the tolerance; CapacityError when the
  /// outcome count exceeds options.max_outcomes.
  static OutcomeSpace create(std::vector<Outcome> outcomes, SpaceOptions options = {});

  /// Outcomes labelled "1".."N".
  static OutcomeSpace from_probabilities(std::span<const double> probabilities,
                                         SpaceOptions options = {});

  std::size_t size() const noexcept { return outcomes_.size(); }
  const std::vector<Outcome>& outcomes() const noexcept { return outcomes_; }
  const std::string& id(std::size_t index) const { return outcomes_.at(index).id; }
  double probability(std::size_t index) const { return outcomes_.at(index).p; }
  std::vector<double> probabilities() const;
  std::optional<std::size_t> index_of(std::string_view id) const;

  LogBase base() const noexcept { return options_.base; }
  double tolerance() const noexcept { return options_.tolerance; }
  bool allow_zero() const noexcept { return options_.allow_zero; }
  const SpaceOptions& options() const noexcept { return options_; }

  SubsetMask full_mask() const noexcept;
  /// Outcomes with p == 0 (only possible with allow_zero).
  SubsetMask zero_mask() const noexcept { return zero_mask_; }

  std::uint64_t tag() const noexcept { return tag_; }

  /// Same tag, different base. Used to re-express a system in other units.
  OutcomeSpace with_base(LogBase base) const;

 private:
  OutcomeSpace() = default;

  std::vector<Outcome> outcomes_;
  SpaceOptions options_;
  SubsetMask zero_mask_ = 0;
  std::uint64_t tag_ = 0;
};

/// Reads LOGDECOMP_MAX_OUTCOMES, falling back to kDefaultMaxOutcomes.
/// Throws ValidationError on a malformed value.
std::size_t max_outcomes_from_environment();

}  // namespace logdecomp
