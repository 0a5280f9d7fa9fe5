#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "logdecomp/log_base.hpp"
#include "logdecomp/outcome_space.hpp"
#include "logdecomp/random_variable.hpp"

// Brute-force reference implementations. Nothing here touches the loss
// table, contents, or the measure code: values are computed from Shannon sums
// and literal definitions so they can stand as independent checks.
//
// Every sum is evaluated twice, in input order and in a shuffled order; if
// the passes disagree by more than the configured tolerance an
// InvariantError is thrown.
namespace logdecomp::oracle {

struct OracleConfig {
  LogBase base = LogBase::two;
  double tolerance = 1e-9;
};

/// -sum p log p with 0 log 0 = 0. Throws DomainError on negative or
/// non-finite input or a total that misses 1 by more than the tolerance.
double shannon_entropy(std::span<const double> distribution, const OracleConfig& config = {});

/// H of the joint variable, from the distribution of outcome label tuples.
double shannon_joint(const OutcomeSpace& space, std::span<const RandomVariable> variables);

/// H(vars | given) as the expectation over cells of `given` of the entropy
/// of the conditional distribution of `vars`.
double shannon_conditional(const OutcomeSpace& space, std::span<const RandomVariable> variables,
                           std::span<const RandomVariable> given);

/// H(X) + H(Y) - H(X,Y).
double shannon_mi(const OutcomeSpace& space, const RandomVariable& x, const RandomVariable& y);

/// I(X1;..;Xr | given) by the recursion
///   I(X1;..;Xr | W) = I(X1;..;Xr-1 | W) - I(X1;..;Xr-1 | Xr, W),
/// bottoming out in conditional entropies. Throws ValidationError for r = 0.
double shannon_coinfo_recursive(const OutcomeSpace& space,
                                std::span<const RandomVariable> variables,
                                std::span<const RandomVariable> given = {});

/// I-diagram region measure by signed inclusion-exclusion of joint
/// entropies. The cells of the diagram over r variables are indexed by the
/// bitmask of variables they lie inside (cell 0 lies inside none of them but
/// inside the whole outcome space); `in_region` selects the cells to add up.
double shannon_region(const OutcomeSpace& space, std::span<const RandomVariable> variables,
                      const std::function<bool(std::uint32_t inside)>& in_region);

/// Total loss straight from its definition, H(X) - H(X') for the merged
/// cells: sum p log(1/p) - (sum p) log(1/sum p).
double total_loss_direct(std::span<const double> cells, const OracleConfig& config = {});

/// L°(S) = L(S) - sum over nonempty proper T ⊂ S of L°(T), L°(single) = 0,
/// evaluated recursively (memoised per subset within one call).
double interior_loss_recursive(std::span<const double> cells, const OracleConfig& config = {});

inline constexpr std::size_t kMaxPartitionEnumeration = 12;

/// Bell(n) for n <= 25.
std::uint64_t bell_number(std::size_t n);

/// Visits every set partition of {0..n-1} once as a restricted growth string
/// (labels[0] = 0, labels[i] <= 1 + max(labels[0..i-1])), in lexicographic
/// order of the strings. Throws CapacityError for n > kMaxPartitionEnumeration.
void for_each_partition(std::size_t n,
                        const std::function<void(std::span<const std::size_t> labels)>& visit);

std::vector<std::vector<std::size_t>> enumerate_partitions(std::size_t n);

struct PartitionLawResult {
  double merged = 0.0;     // L(P(P1), .., P(Pk))
  double remainder = 0.0;  // L(Ω) - sum_i L(Pi)
  bool holds = false;
};

/// Checks that merging each part into one cell loses L(Ω) minus the losses
/// inside the parts.
PartitionLawResult partition_law_check(const OutcomeSpace& space, const RandomVariable& parts);

}  // namespace logdecomp::oracle
