#include "logdecomp/lattice.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "logdecomp/error.hpp"
#include "logdecomp/measure.hpp"
#include "logdecomp/oracle.hpp"

namespace logdecomp {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<SubsetMask> components(DisjointSets& sets, std::size_t n) {
  std::vector<SubsetMask> by_root(n, 0);
  for (std::size_t i = 0; i < n; ++i) by_root[sets.find(i)] |= SubsetMask{1} << i;
  std::vector<SubsetMask> parts;
  for (SubsetMask m : by_root) {
    if (m != 0) parts.push_back(m);
  }
  return parts;
}

void require_space(const OutcomeSpace& space, const Content& s) {
  if (s.space_tag() != space.tag() || s.outcome_count() != space.size()) {
    throw MixedSpaceError("content does not belong to this space");
  }
}

}  // namespace

bool is_coarsening(const RandomVariable& coarse, const RandomVariable& fine) {
  if (coarse.outcome_count() != fine.outcome_count()) {
    throw ValidationError("variables live on different outcome spaces");
  }
  for (SubsetMask part : fine.part_masks()) {
    bool inside = false;
    for (SubsetMask c : coarse.part_masks()) {
      if ((part & ~c) == 0) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

bool PartitionLattice::less_equal(const RandomVariable& a, const RandomVariable& b) const {
  return is_coarsening(a, b);
}

RandomVariable PartitionLattice::meet(const RandomVariable& a, const RandomVariable& b) const {
  const RandomVariable pair[] = {a, b};
  return finest_common_coarsening(pair, a.name() + "^" + b.name());
}

RandomVariable PartitionLattice::join(const RandomVariable& a, const RandomVariable& b) const {
  const RandomVariable pair[] = {a, b};
  return joint(pair);
}

RandomVariable finest_common_coarsening(std::span<const RandomVariable> variables,
                                        std::string name) {
  if (variables.empty()) throw ValidationError("common coarsening of an empty variable list");
  const std::size_t n = variables.front().outcome_count();
  DisjointSets sets(n);
  for (const RandomVariable& v : variables) {
    if (v.outcome_count() != n) {
      throw ValidationError("variables live on different outcome spaces");
    }
    for (SubsetMask part : v.part_masks()) {
      const auto first = static_cast<std::size_t>(std::countr_zero(part));
      for (SubsetMask rest = part & (part - 1); rest != 0; rest &= rest - 1) {
        sets.unite(first, static_cast<std::size_t>(std::countr_zero(rest)));
      }
    }
  }
  const std::vector<SubsetMask> parts = components(sets, n);
  return RandomVariable::from_masks(std::move(name), parts, n);
}

CommonInformation gk_common_information(const LossTable& table,
                                        std::span<const RandomVariable> variables) {
  const OutcomeSpace& space = table.space();
  RandomVariable common = finest_common_coarsening(variables);
  Content content = content_of(space, common);

  Content intersection = content_of(space, variables.front());
  for (const RandomVariable& v : variables.subspan(1)) intersection &= content_of(space, v);
  if (!content.is_subset_of(intersection)) {
    throw InvariantError("content of the common variable escapes the intersection");
  }

  const QuantityReport h = entropy(table, common);
  if (!h.routes_agree) {
    throw InvariantError("entropy of the common variable disagrees with its Shannon value");
  }
  return {std::move(common), h.value, std::move(content)};
}

std::optional<RandomVariable> is_discernible(const OutcomeSpace& space, const Content& s) {
  require_space(space, s);
  const std::size_t n = space.size();
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const SubsetMask edge = (SubsetMask{1} << i) | (SubsetMask{1} << j);
      if (!s.contains_mask(edge)) sets.unite(i, j);
    }
  }
  const std::vector<SubsetMask> parts = components(sets, n);
  RandomVariable candidate = RandomVariable::from_masks("Z", parts, n);
  if (content_of(space, candidate) == s) return candidate;
  return std::nullopt;
}

Content dis(const OutcomeSpace& space, const Content& s, std::size_t cap) {
  require_space(space, s);
  const std::size_t n = space.size();
  if (n > cap || n > oracle::kMaxPartitionEnumeration) {
    throw CapacityError("maximal discernible subset by enumeration is capped at " +
                        std::to_string(std::min(cap, oracle::kMaxPartitionEnumeration)) +
                        " outcomes; " + std::to_string(n) + " outcomes would visit Bell(" +
                        std::to_string(n) + ") = " +
                        std::to_string(oracle::bell_number(std::min<std::size_t>(n, 25))) +
                        " partitions");
  }

  // C(P) ⊆ s iff every atom missing from s lies inside one part of P.
  std::vector<SubsetMask> missing;
  s.complement().for_each([&](Atom a) { missing.push_back(a.mask()); });

  // Candidates are closed under common refinement, so the unique maximum (if
  // it exists) is the common refinement of all of them.
  std::vector<SubsetMask> refinement{space.full_mask()};
  std::vector<SubsetMask> part_mask(n);
  oracle::for_each_partition(n, [&](std::span<const std::size_t> labels) {
    std::fill(part_mask.begin(), part_mask.end(), 0);
    for (std::size_t i = 0; i < n; ++i) part_mask[labels[i]] |= SubsetMask{1} << i;
    for (SubsetMask atom : missing) {
      const auto first = static_cast<std::size_t>(std::countr_zero(atom));
      if ((atom & ~part_mask[labels[first]]) != 0) return;
    }
    std::vector<SubsetMask> refined;
    for (SubsetMask a : refinement) {
      for (SubsetMask b : part_mask) {
        if ((a & b) != 0) refined.push_back(a & b);
      }
    }
    refinement = std::move(refined);
  });

  const RandomVariable maximum = RandomVariable::from_masks("Dis", refinement, n);
  Content result = content_of(space, maximum);
  if (!result.is_subset_of(s)) {
    throw InvariantError("discernible subsets of the content have no unique maximum");
  }
  return result;
}

Content dis_of_intersection(const OutcomeSpace& space, std::span<const RandomVariable> variables,
                            std::size_t cross_check_cap) {
  const RandomVariable common = finest_common_coarsening(variables);
  Content fast = content_of(space, common);
  if (space.size() <= std::min(cross_check_cap, oracle::kMaxPartitionEnumeration)) {
    Content intersection = content_of(space, variables.front());
    for (const RandomVariable& v : variables.subspan(1)) intersection &= content_of(space, v);
    if (!(dis(space, intersection, cross_check_cap) == fast)) {
      throw InvariantError("common coarsening and enumeration disagree on the maximal "
                           "discernible subset");
    }
  }
  return fast;
}

}  // namespace logdecomp
