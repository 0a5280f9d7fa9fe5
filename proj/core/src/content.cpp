#include "logdecomp/content.hpp"

#include "logdecomp/error.hpp"

namespace logdecomp {

Content::Content(std::size_t outcome_count, std::uint64_t space_tag)
    : outcome_count_(outcome_count),
      space_tag_(space_tag),
      words_(outcome_count >= 6 ? (std::size_t{1} << (outcome_count - 6)) : 1, 0) {}

Content Content::none(const OutcomeSpace& space) { return Content(space.size(), space.tag()); }

Content Content::all(const OutcomeSpace& space) { return none(space).complement(); }

void Content::insert(Atom atom) {
  if (atom.mask() > max_mask()) {
    throw ValidationError("atom references an outcome outside the space");
  }
  words_[atom.mask() >> 6] |= std::uint64_t{1} << (atom.mask() & 63);
}

void Content::erase(Atom atom) noexcept {
  if (atom.mask() > max_mask()) return;
  words_[atom.mask() >> 6] &= ~(std::uint64_t{1} << (atom.mask() & 63));
}

std::size_t Content::size() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Content::empty() const noexcept {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool Content::is_subset_of(const Content& other) const {
  require_same_space(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::vector<Atom> Content::atoms() const {
  std::vector<Atom> out;
  out.reserve(size());
  for_each([&](Atom a) { out.push_back(a); });
  return out;
}

Content& Content::operator|=(const Content& other) {
  require_same_space(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Content& Content::operator&=(const Content& other) {
  require_same_space(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Content& Content::operator-=(const Content& other) {
  require_same_space(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Content Content::complement() const {
  Content out = *this;
  for (std::uint64_t& w : out.words_) w = ~w;
  out.clear_non_atoms();
  return out;
}

void Content::require_same_space(const Content& other) const {
  if (space_tag_ != other.space_tag_ || outcome_count_ != other.outcome_count_) {
    throw MixedSpaceError("contents belong to different outcome spaces");
  }
}

void Content::clear_non_atoms() noexcept {
  // Bits beyond 2^N in a short single word.
  if (outcome_count_ < 6) {
    words_[0] &= (std::uint64_t{1} << (std::size_t{1} << outcome_count_)) - 1;
  }
  words_[0] &= ~std::uint64_t{1};  // empty set
  for (std::size_t i = 0; i < outcome_count_; ++i) {
    const SubsetMask single = SubsetMask{1} << i;
    words_[single >> 6] &= ~(std::uint64_t{1} << (single & 63));
  }
}

}  // namespace logdecomp
