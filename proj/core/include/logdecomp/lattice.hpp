#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "logdecomp/content.hpp"
#include "logdecomp/loss_table.hpp"
#include "logdecomp/random_variable.hpp"

namespace logdecomp {

/// Partitions of one outcome space ordered by coarseness: a <= b iff every
/// part of b lies inside a part of a. Meet is the finest common coarsening,
/// join the common refinement (the joint variable).
class PartitionLattice {
 public:
  explicit PartitionLattice(std::size_t outcome_count) : outcome_count_(outcome_count) {}

  bool less_equal(const RandomVariable& a, const RandomVariable& b) const;
  RandomVariable meet(const RandomVariable& a, const RandomVariable& b) const;
  RandomVariable join(const RandomVariable& a, const RandomVariable& b) const;
  RandomVariable bottom() const { return RandomVariable::trivial(outcome_count_); }
  RandomVariable top() const { return RandomVariable::discrete(outcome_count_); }

 private:
  std::size_t outcome_count_;
};

/// True when `coarse` is a function of `fine` (every part of `fine` lies
/// inside one part of `coarse`).
bool is_coarsening(const RandomVariable& coarse, const RandomVariable& fine);

/// Parts are the connected components of "some variable puts w and w' in
/// the same part". Throws ValidationError on an empty list.
RandomVariable finest_common_coarsening(std::span<const RandomVariable> variables,
                                        std::string name = "Z");

struct CommonInformation {
  RandomVariable common;  // the extracted variable Z
  double value = 0.0;     // H(Z) = L°(C(Z))
  Content content;        // C(Z), a subset of the intersection of contents
};

/// Gács-Körner common information: Z is the finest common coarsening, the
/// value its entropy measured on C(Z). Throws InvariantError if C(Z) falls
/// outside the intersection of the inputs' contents or the content measure
/// and Shannon entropy of Z disagree.
CommonInformation gk_common_information(const LossTable& table,
                                        std::span<const RandomVariable> variables);

/// The variable whose content is exactly `s`, if any. Candidate: merge every
/// pair whose edge atom is missing from `s`, close transitively, then compare
/// contents exactly.
std::optional<RandomVariable> is_discernible(const OutcomeSpace& space, const Content& s);

inline constexpr std::size_t kDisBruteForceCap = 10;

/// Largest discernible subset of `s`, by enumerating every partition of the
/// outcome space (Bell(N) of them). Throws CapacityError when N exceeds
/// `cap`, and InvariantError if the maximal candidates are not unique.
Content dis(const OutcomeSpace& space, const Content& s, std::size_t cap = kDisBruteForceCap);

/// dis of the intersection of the variables' contents via the finest common
/// coarsening; cross-checked against the brute-force route when
/// N <= `cross_check_cap` (InvariantError on mismatch).
Content dis_of_intersection(const OutcomeSpace& space, std::span<const RandomVariable> variables,
                            std::size_t cross_check_cap = kDisBruteForceCap);

}  // namespace logdecomp
