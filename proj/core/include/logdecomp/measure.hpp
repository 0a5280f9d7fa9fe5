#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logdecomp/atom.hpp"
#include "logdecomp/content.hpp"
#include "logdecomp/formal_sum.hpp"
#include "logdecomp/loss_table.hpp"
#include "logdecomp/random_variable.hpp"
#include "logdecomp/region.hpp"

namespace logdecomp {

enum class Method { content_measure, shannon_oracle, both };

struct AtomTerm {
  Atom atom;
  long long coefficient = 1;
  double interior_loss = 0.0;
};

/// Result of an information quantity. `value` is the measure of the atom
/// set; when a Shannon formula exists it is evaluated too (`oracle_value`)
/// and `routes_agree` records whether the two are within `tolerance`.
struct QuantityReport {
  std::string quantity;
  double value = 0.0;
  LogBase base = LogBase::two;
  Method method = Method::content_measure;
  std::optional<double> oracle_value;
  bool routes_agree = true;
  double tolerance = 0.0;
  std::vector<AtomTerm> breakdown;

  double discrepancy() const { return oracle_value ? *oracle_value - value : 0.0; }
};

std::string_view to_string(Method method);

/// H(X) = L°(C(X)).
QuantityReport entropy(const LossTable& table, const RandomVariable& x);

/// H(X1,..,Xr) = L°(C(X1) ∪ .. ∪ C(Xr)).
QuantityReport joint_entropy(const LossTable& table, std::span<const RandomVariable> variables);

/// I(X;Y) = L°(C(X) ∩ C(Y)).
QuantityReport mutual_information(const LossTable& table, const RandomVariable& x,
                                  const RandomVariable& y);

/// H(X|Y) = L°(C(X) \ C(Y)).
QuantityReport conditional_entropy(const LossTable& table, const RandomVariable& x,
                                   const RandomVariable& y);

/// I(X1;..;Xr | Z1..Zs) = L°(∩ C(Xi) \ ∪ C(Zj)). Signed; not clamped.
/// Throws ValidationError for an empty variable list.
QuantityReport co_information(const LossTable& table, std::span<const RandomVariable> variables,
                              std::span<const RandomVariable> given = {});

using Bindings = std::map<std::string, RandomVariable>;

/// Contents of the region's atoms: leaves map to C(X), `~` to the complement
/// within the whole complex. Throws UnboundVariableError for a leaf missing
/// from `bindings`.
Content region_content(const OutcomeSpace& space, const RegionExpr& expr,
                       const Bindings& bindings);

/// Measure of region_content, cross-checked against the signed
/// inclusion-exclusion of joint Shannon entropies over the same cells of the
/// information diagram.
QuantityReport region_measure(const LossTable& table, const RegionExpr& expr,
                              const Bindings& bindings);

/// Measure of an arbitrary content; no oracle route.
QuantityReport content_measure(const LossTable& table, const Content& content,
                               std::string quantity = "content");

/// coefficient * H(joint of vars); a term of an entropy expression such as
/// H(X) + H(Y) - H(X,Y).
struct EntropyTerm {
  long long coefficient = 1;
  std::vector<RandomVariable> variables;
};

/// Sum of coefficient * C(joint(vars)) over the terms.
FormalSum formal_sum_of(const OutcomeSpace& space, std::span<const EntropyTerm> terms);

struct AsContentResult {
  std::optional<Content> content;
  /// Atoms whose coefficient is neither 0 nor 1, with that coefficient.
  std::vector<std::pair<Atom, long long>> offending;
};

/// The atom set of a formal sum whose coefficients are all 0 or 1.
AsContentResult as_content(const OutcomeSpace& space, const FormalSum& sum);

/// f: variable subset -> number.
using VariableQuantity = std::function<double(std::span<const RandomVariable>)>;
/// f*: contents of a variable subset -> subset of the complex.
using SetMap = std::function<Content(std::span<const Content>)>;

struct DecomposabilityFailure {
  std::vector<std::string> variables;
  double quantity = 0.0;
  double measured = 0.0;
  double discrepancy() const { return quantity - measured; }
};

struct DecomposabilityReport {
  std::size_t subsets_checked = 0;
  std::vector<DecomposabilityFailure> failures;
  bool passed() const { return failures.empty(); }
};

inline constexpr std::size_t kDefaultDecomposabilitySubsetSize = 4;

/// Checks f(A) = L°(f*(C(A))) on every nonempty subset A of `family` with at
/// most `max_subset_size` members, within `tolerance` (the space's when
/// unset). Reports every failure.
DecomposabilityReport verify_decomposability(
    const LossTable& table, std::span<const RandomVariable> family, const VariableQuantity& f,
    const SetMap& f_star, std::size_t max_subset_size = kDefaultDecomposabilitySubsetSize,
    std::optional<double> tolerance = std::nullopt);

}  // namespace logdecomp
