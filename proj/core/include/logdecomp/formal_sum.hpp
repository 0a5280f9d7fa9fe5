#pragma once

#include <cstdint>
#include <map>

#include "logdecomp/atom.hpp"
#include "logdecomp/content.hpp"
#include "logdecomp/outcome_space.hpp"

namespace logdecomp {

/// Integer combination of atoms. Zero coefficients are never stored; the
/// map's ordering is the canonical atom order.
class FormalSum {
 public:
  explicit FormalSum(const OutcomeSpace& space)
      : outcome_count_(space.size()), space_tag_(space.tag()) {}

  std::size_t outcome_count() const noexcept { return outcome_count_; }
  std::uint64_t space_tag() const noexcept { return space_tag_; }

  void add(Atom atom, long long coefficient);
  /// Adds `coefficient` to every atom of `content`.
  void add(const Content& content, long long coefficient);

  long long coefficient(Atom atom) const;
  const std::map<Atom, long long>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  std::size_t outcome_count_;
  std::uint64_t space_tag_;
  std::map<Atom, long long> terms_;
};

}  // namespace logdecomp
