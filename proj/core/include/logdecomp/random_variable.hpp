#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "logdecomp/content.hpp"
#include "logdecomp/outcome_space.hpp"

namespace logdecomp {

/// A discrete random variable, identified with the partition of the outcome
/// space it induces. Parts are kept in canonical form: each part lists its
/// outcome indices ascending, parts are ordered by their smallest member.
class RandomVariable {
 public:
  /// Throws ValidationError unless `parts` are nonempty, pairwise disjoint
  /// and cover {0..outcome_count-1} exactly.
  static RandomVariable from_parts(std::string name, std::vector<std::vector<std::size_t>> parts,
                                   std::size_t outcome_count);
  static RandomVariable from_masks(std::string name, std::span<const SubsetMask> parts,
                                   std::size_t outcome_count);
  /// labels[i] is the value taken at outcome i; equal labels share a part.
  static RandomVariable from_labels(std::string name, std::span<const std::size_t> labels);

  /// One part holding every outcome.
  static RandomVariable trivial(std::size_t outcome_count, std::string name = "trivial");
  /// Every outcome in its own part.
  static RandomVariable discrete(std::size_t outcome_count, std::string name = "discrete");

  const std::string& name() const noexcept { return name_; }
  std::size_t outcome_count() const noexcept { return outcome_count_; }
  std::size_t part_count() const noexcept { return masks_.size(); }
  const std::vector<SubsetMask>& part_masks() const noexcept { return masks_; }
  std::vector<std::vector<std::size_t>> parts() const;
  /// Index of the part holding `outcome`.
  std::size_t part_of(std::size_t outcome) const;

  RandomVariable renamed(std::string name) const;

  /// Same partition; names are ignored.
  bool same_partition(const RandomVariable& other) const noexcept {
    return outcome_count_ == other.outcome_count_ && masks_ == other.masks_;
  }

 private:
  RandomVariable() = default;

  std::string name_;
  std::size_t outcome_count_ = 0;
  std::vector<SubsetMask> masks_;
};

/// Parts written with outcome ids, e.g. "{1}|{2,3,4}".
std::string describe_partition(const OutcomeSpace& space, const RandomVariable& variable);

/// Common refinement: the joint variable generated by all pairwise
/// intersections of parts. Throws ValidationError on an empty list or
/// mismatched outcome counts.
RandomVariable joint(std::span<const RandomVariable> variables, std::string name = {});

/// All atoms B°(S) such that S meets at least two parts of `variable`.
Content content_of(const OutcomeSpace& space, const RandomVariable& variable);

}  // namespace logdecomp
