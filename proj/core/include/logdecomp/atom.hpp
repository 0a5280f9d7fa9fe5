#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "logdecomp/outcome_space.hpp"

namespace logdecomp {

/// Points B(w) carry zero measure and are not atoms.
inline constexpr std::size_t kAtomMinSize = 2;

/// Canonical order on subsets: ascending size, then lexicographic on the
/// ascending member lists ({0,1} < {0,2} < {1,2}).
constexpr bool canonical_less(SubsetMask a, SubsetMask b) noexcept {
  const int size_a = std::popcount(a);
  const int size_b = std::popcount(b);
  if (size_a != size_b) return size_a < size_b;
  const SubsetMask diff = a ^ b;
  if (diff == 0) return false;
  // The first position where the member lists differ is the lowest bit
  // present in exactly one of them; whoever owns it has the smaller member.
  return (a & (diff & (~diff + 1))) != 0;
}

/// Interior simplex B°(S) for |S| >= 2.
class Atom {
 public:
  /// Throws ValidationError when fewer than kAtomMinSize bits are set.
  static Atom from_mask(SubsetMask mask);
  /// Members are outcome indices; order and duplicates are normalised away.
  static Atom from_members(std::span<const std::size_t> members);

  SubsetMask mask() const noexcept { return mask_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
  bool contains(std::size_t index) const noexcept {
    return index < 64 && (mask_ >> index & 1U) != 0;
  }
  std::vector<std::size_t> members() const;

  friend bool operator==(Atom a, Atom b) noexcept { return a.mask_ == b.mask_; }
  friend std::strong_ordering operator<=>(Atom a, Atom b) noexcept {
    if (a.mask_ == b.mask_) return std::strong_ordering::equal;
    return canonical_less(a.mask_, b.mask_) ? std::strong_ordering::less
                                            : std::strong_ordering::greater;
  }

 private:
  explicit Atom(SubsetMask mask) noexcept : mask_(mask) {}
  SubsetMask mask_;
};

/// Outcome ids joined by `separator`, e.g. "1;2;4".
std::string atom_label(const OutcomeSpace& space, Atom atom, std::string_view separator = ";");

/// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename Visitor>
void for_each_subset_of_size(std::size_t n, std::size_t k, Visitor&& visit) {
  if (k > n) return;
  if (k == 0) {
    visit(SubsetMask{0});
    return;
  }
  std::vector<std::size_t> index(k);
  for (std::size_t i = 0; i < k; ++i) index[i] = i;
  for (;;) {
    SubsetMask mask = 0;
    for (std::size_t i : index) mask |= SubsetMask{1} << i;
    visit(mask);
    std::size_t i = k;
    while (i > 0 && index[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++index[i - 1];
    for (std::size_t j = i; j < k; ++j) index[j] = index[j - 1] + 1;
  }
}

/// Visits every atom mask over n outcomes in canonical order.
template <typename Visitor>
void for_each_atom_mask(std::size_t n, Visitor&& visit) {
  for (std::size_t k = kAtomMinSize; k <= n; ++k) {
    for_each_subset_of_size(n, k, visit);
  }
}

/// 2^n - n - 1.
std::size_t atom_count(std::size_t outcome_count);

/// Every atom of the complex of `space` exactly once, in canonical order.
std::vector<Atom> enumerate_atoms(const OutcomeSpace& space);

}  // namespace logdecomp
