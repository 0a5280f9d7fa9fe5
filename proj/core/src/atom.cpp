#include "logdecomp/atom.hpp"

#include "logdecomp/error.hpp"

namespace logdecomp {

Atom Atom::from_mask(SubsetMask mask) {
  if (static_cast<std::size_t>(std::popcount(mask)) < kAtomMinSize) {
    throw ValidationError("an atom needs at least " + std::to_string(kAtomMinSize) + " outcomes");
  }
  return Atom(mask);
}

Atom Atom::from_members(std::span<const std::size_t> members) {
  SubsetMask mask = 0;
  for (std::size_t m : members) {
    if (m >= 64) throw ValidationError("outcome index " + std::to_string(m) + " out of range");
    mask |= SubsetMask{1} << m;
  }
  return from_mask(mask);
}

std::vector<std::size_t> Atom::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (SubsetMask rest = mask_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

std::string atom_label(const OutcomeSpace& space, Atom atom, std::string_view separator) {
  std::string out;
  for (std::size_t m : atom.members()) {
    if (!out.empty()) out += separator;
    out += space.id(m);
  }
  return out;
}

std::size_t atom_count(std::size_t outcome_count) {
  if (outcome_count >= 64) throw CapacityError("atom count overflows 64 bits");
  return static_cast<std::size_t>((std::uint64_t{1} << outcome_count) - outcome_count - 1);
}

std::vector<Atom> enumerate_atoms(const OutcomeSpace& space) {
  std::vector<Atom> atoms;
  atoms.reserve(atom_count(space.size()));
  for_each_atom_mask(space.size(), [&](SubsetMask mask) { atoms.push_back(Atom::from_mask(mask)); });
  return atoms;
}

}  // namespace logdecomp
