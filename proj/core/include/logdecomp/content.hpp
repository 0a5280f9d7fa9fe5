#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "logdecomp/atom.hpp"
#include "logdecomp/outcome_space.hpp"

namespace logdecomp {

/// A set of atoms of one outcome space's complex.
///
/// Stored as a dense bit vector indexed by subset mask (2^N bits), so
/// membership and the set operations are word-parallel. Masks with fewer than
/// two members are never set. Iteration is always in canonical atom order.
class Content {
 public:
  static Content none(const OutcomeSpace& space);
  static Content all(const OutcomeSpace& space);

  std::size_t outcome_count() const noexcept { return outcome_count_; }
  std::uint64_t space_tag() const noexcept { return space_tag_; }

  bool contains(Atom atom) const noexcept { return contains_mask(atom.mask()); }
  bool contains_mask(SubsetMask mask) const noexcept {
    return mask <= max_mask() && (words_[mask >> 6] >> (mask & 63) & 1U) != 0;
  }
  /// Throws ValidationError when the atom references a missing outcome.
  void insert(Atom atom);
  void erase(Atom atom) noexcept;

  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool is_subset_of(const Content& other) const;

  template <typename Visitor>
  void for_each(Visitor&& visit) const {
    if (empty()) return;
    for_each_atom_mask(outcome_count_, [&](SubsetMask mask) {
      if (contains_mask(mask)) visit(Atom::from_mask(mask));
    });
  }

  std::vector<Atom> atoms() const;

  Content& operator|=(const Content& other);
  Content& operator&=(const Content& other);
  Content& operator-=(const Content& other);

  friend Content operator|(Content a, const Content& b) { return a |= b; }
  friend Content operator&(Content a, const Content& b) { return a &= b; }
  friend Content operator-(Content a, const Content& b) { return a -= b; }

  /// Complement within the full atom set of the complex.
  Content complement() const;

  friend bool operator==(const Content& a, const Content& b) {
    return a.space_tag_ == b.space_tag_ && a.outcome_count_ == b.outcome_count_ &&
           a.words_ == b.words_;
  }

 private:
  Content(std::size_t outcome_count, std::uint64_t space_tag);

  SubsetMask max_mask() const noexcept {
    return (SubsetMask{1} << outcome_count_) - 1;
  }
  void require_same_space(const Content& other) const;
  void clear_non_atoms() noexcept;

  std::size_t outcome_count_ = 0;
  std::uint64_t space_tag_ = 0;
  std::vector<std::uint64_t> words_;
};

inline Content set_union(const Content& a, const Content& b) { return a | b; }
inline Content set_intersection(const Content& a, const Content& b) { return a & b; }
inline Content set_difference(const Content& a, const Content& b) { return a - b; }
inline Content set_complement(const Content& a) { return a.complement(); }

}  // namespace logdecomp
