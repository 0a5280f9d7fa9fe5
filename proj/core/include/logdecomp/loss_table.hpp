#pragma once

#include <vector>

#include "logdecomp/atom.hpp"
#include "logdecomp/content.hpp"
#include "logdecomp/formal_sum.hpp"
#include "logdecomp/outcome_space.hpp"

namespace logdecomp {

/// Per-subset loss values for one outcome space, filled eagerly on
/// construction and immutable afterwards (safe to share across threads).
///
/// Memory is two doubles per subset: 2^N * 16 bytes, i.e. 1 MiB at N = 16
/// and 256 MiB at N = 24.
class LossTable {
 public:
  /// `threads` > 1 splits the fill across worker threads; values are
  /// identical to the single-threaded fill.
  explicit LossTable(OutcomeSpace space, unsigned threads = 1);

  const OutcomeSpace& space() const noexcept { return space_; }
  LogBase base() const noexcept { return space_.base(); }

  /// log σ(S) = (sum of p over S) * log(sum of p over S).
  double sigma_log(SubsetMask subset) const { return sigma_log_.at(subset); }
  /// L°(S); zero for |S| <= 1 and for any S holding a zero-probability outcome.
  double interior(SubsetMask subset) const { return interior_.at(subset); }
  /// L(S), the entropy lost by merging the outcomes of S.
  double total(SubsetMask subset) const;

 private:
  OutcomeSpace space_;
  std::vector<double> sigma_log_;
  std::vector<double> interior_;
};

/// L° of one atom. Throws ValidationError when the atom is not in the
/// table's complex.
double atom_measure(const LossTable& table, Atom atom);

/// Sum of L° over the atoms, in canonical order with compensated summation.
/// Throws MixedSpaceError for a content from another space.
double measure(const LossTable& table, const Content& content);

/// Sum of coefficient * L° over the terms.
double measure(const LossTable& table, const FormalSum& sum);

}  // namespace logdecomp
