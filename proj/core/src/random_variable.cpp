#include "logdecomp/random_variable.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "logdecomp/error.hpp"

namespace logdecomp {

namespace {

SubsetMask lowest_bit(SubsetMask m) { return m & (~m + 1); }

void canonicalize(std::vector<SubsetMask>& masks) {
  std::sort(masks.begin(), masks.end(),
            [](SubsetMask a, SubsetMask b) { return lowest_bit(a) < lowest_bit(b); });
}

void require_outcome_count(std::size_t outcome_count) {
  if (outcome_count == 0 || outcome_count > kHardMaxOutcomes) {
    throw ValidationError("a random variable needs between 1 and " +
                          std::to_string(kHardMaxOutcomes) + " outcomes");
  }
}

}  // namespace

RandomVariable RandomVariable::from_masks(std::string name, std::span<const SubsetMask> parts,
                                          std::size_t outcome_count) {
  require_outcome_count(outcome_count);
  const SubsetMask full = (SubsetMask{1} << outcome_count) - 1;
  SubsetMask covered = 0;
  for (SubsetMask part : parts) {
    if (part == 0) throw ValidationError("variable '" + name + "' has an empty part");
    if ((part & ~full) != 0) {
      throw ValidationError("variable '" + name + "' references an outcome outside the space");
    }
    if ((covered & part) != 0) {
      throw ValidationError("variable '" + name + "' has overlapping parts");
    }
    covered |= part;
  }
  if (covered != full) {
    throw ValidationError("variable '" + name + "' does not cover every outcome");
  }
  RandomVariable v;
  v.name_ = std::move(name);
  v.outcome_count_ = outcome_count;
  v.masks_.assign(parts.begin(), parts.end());
  canonicalize(v.masks_);
  return v;
}

RandomVariable RandomVariable::from_parts(std::string name,
                                          std::vector<std::vector<std::size_t>> parts,
                                          std::size_t outcome_count) {
  require_outcome_count(outcome_count);
  std::vector<SubsetMask> masks;
  masks.reserve(parts.size());
  for (const auto& part : parts) {
    SubsetMask mask = 0;
    for (std::size_t index : part) {
      if (index >= outcome_count) {
        throw ValidationError("variable '" + name + "' references outcome index " +
                              std::to_string(index) + " outside the space");
      }
      const SubsetMask bit = SubsetMask{1} << index;
      if ((mask & bit) != 0) {
        throw ValidationError("variable '" + name + "' lists an outcome twice in one part");
      }
      mask |= bit;
    }
    masks.push_back(mask);
  }
  return from_masks(std::move(name), masks, outcome_count);
}

RandomVariable RandomVariable::from_labels(std::string name, std::span<const std::size_t> labels) {
  require_outcome_count(labels.size());
  std::map<std::size_t, SubsetMask> by_label;
  for (std::size_t i = 0; i < labels.size(); ++i) by_label[labels[i]] |= SubsetMask{1} << i;
  std::vector<SubsetMask> masks;
  for (const auto& [label, mask] : by_label) masks.push_back(mask);
  return from_masks(std::move(name), masks, labels.size());
}

RandomVariable RandomVariable::trivial(std::size_t outcome_count, std::string name) {
  require_outcome_count(outcome_count);
  const SubsetMask full = (SubsetMask{1} << outcome_count) - 1;
  return from_masks(std::move(name), std::span<const SubsetMask>(&full, 1), outcome_count);
}

RandomVariable RandomVariable::discrete(std::size_t outcome_count, std::string name) {
  require_outcome_count(outcome_count);
  std::vector<SubsetMask> masks;
  for (std::size_t i = 0; i < outcome_count; ++i) masks.push_back(SubsetMask{1} << i);
  return from_masks(std::move(name), masks, outcome_count);
}

std::vector<std::vector<std::size_t>> RandomVariable::parts() const {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(masks_.size());
  for (SubsetMask mask : masks_) {
    auto& part = out.emplace_back();
    for (SubsetMask rest = mask; rest != 0; rest &= rest - 1) {
      part.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
  }
  return out;
}

std::size_t RandomVariable::part_of(std::size_t outcome) const {
  const SubsetMask bit = SubsetMask{1} << outcome;
  for (std::size_t i = 0; i < masks_.size(); ++i) {
    if ((masks_[i] & bit) != 0) return i;
  }
  throw ValidationError("outcome index " + std::to_string(outcome) + " outside the space");
}

RandomVariable RandomVariable::renamed(std::string name) const {
  RandomVariable copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::string describe_partition(const OutcomeSpace& space, const RandomVariable& variable) {
  std::string out;
  for (const auto& part : variable.parts()) {
    if (!out.empty()) out += '|';
    out += '{';
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (i != 0) out += ',';
      out += space.id(part[i]);
    }
    out += '}';
  }
  return out;
}

RandomVariable joint(std::span<const RandomVariable> variables, std::string name) {
  if (variables.empty()) throw ValidationError("joint of an empty variable list");
  const std::size_t n = variables.front().outcome_count();
  std::vector<SubsetMask> parts = variables.front().part_masks();
  for (const RandomVariable& v : variables.subspan(1)) {
    if (v.outcome_count() != n) {
      throw ValidationError("variables in a joint must share an outcome space");
    }
    std::vector<SubsetMask> refined;
    for (SubsetMask a : parts) {
      for (SubsetMask b : v.part_masks()) {
        if ((a & b) != 0) refined.push_back(a & b);
      }
    }
    parts = std::move(refined);
  }
  if (name.empty()) {
    for (const RandomVariable& v : variables) {
      if (!name.empty()) name += ',';
      name += v.name();
    }
  }
  return RandomVariable::from_masks(std::move(name), parts, n);
}

Content content_of(const OutcomeSpace& space, const RandomVariable& variable) {
  if (variable.outcome_count() != space.size()) {
    throw ValidationError("variable '" + variable.name() + "' is not a partition of this space");
  }
  // An atom lies outside the content iff all of its members share a part,
  // so clear every submask of every part.
  Content out = Content::all(space);
  for (SubsetMask part : variable.part_masks()) {
    if (std::popcount(part) < 2) continue;
    for (SubsetMask sub = part; sub != 0; sub = (sub - 1) & part) {
      if (std::popcount(sub) >= 2) out.erase(Atom::from_mask(sub));
    }
  }
  return out;
}

}  // namespace logdecomp
