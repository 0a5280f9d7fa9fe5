#include "logdecomp/formal_sum.hpp"

#include "logdecomp/error.hpp"

namespace logdecomp {

void FormalSum::add(Atom atom, long long coefficient) {
  if (outcome_count_ < 64 && atom.mask() >> outcome_count_ != 0) {
    throw ValidationError("atom references an outcome outside the space");
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(atom, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void FormalSum::add(const Content& content, long long coefficient) {
  if (content.space_tag() != space_tag_ || content.outcome_count() != outcome_count_) {
    throw MixedSpaceError("content and formal sum belong to different outcome spaces");
  }
  content.for_each([&](Atom atom) { add(atom, coefficient); });
}

long long FormalSum::coefficient(Atom atom) const {
  const auto it = terms_.find(atom);
  return it == terms_.end() ? 0 : it->second;
}

}  // namespace logdecomp
