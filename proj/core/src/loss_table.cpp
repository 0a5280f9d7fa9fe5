#include "logdecomp/loss_table.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include "logdecomp/compensated_sum.hpp"
#include "logdecomp/error.hpp"

namespace logdecomp {

namespace {

// Runs body(begin, end) over [0, count) split into `threads` contiguous
// chunks and waits for all of them.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  if (threads <= 1 || count < 4096) {
    body(std::size_t{0}, count);
    return;
  }
  std::vector<std::jthread> workers;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (std::size_t begin = 0; begin < count; begin += chunk) {
    workers.emplace_back([=, &body] { body(begin, std::min(count, begin + chunk)); });
  }
}

}  // namespace

LossTable::LossTable(OutcomeSpace space, unsigned threads) : space_(std::move(space)) {
  const std::size_t n = space_.size();
  const std::size_t count = std::size_t{1} << n;
  const std::vector<double> p = space_.probabilities();
  const LogBase base = space_.base();

  // Subset sums accumulate in ascending index order, matching a direct
  // left-to-right evaluation of the same sum.
  std::vector<double> subset_sum(count, 0.0);
  for (std::size_t mask = 1; mask < count; ++mask) {
    const int high = std::bit_width(mask) - 1;
    subset_sum[mask] = subset_sum[mask ^ (std::size_t{1} << high)] + p[high];
  }

  sigma_log_.assign(count, 0.0);
  parallel_for(count, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t mask = begin; mask < end; ++mask) {
      const double s = subset_sum[mask];
      sigma_log_[mask] = s > 0.0 ? s * log_in(base, s) : 0.0;
    }
  });

  // Inclusion-exclusion over every subset at once: after processing bit i,
  // entry S holds the alternating sum over subsets that agree with S off
  // bits 0..i. The singleton (modular) part of L has zero inversion on
  // |S| >= 2, so inverting log σ yields L° there directly.
  interior_ = sigma_log_;
  for (std::size_t bit = 0; bit < n; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    parallel_for(count, threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t mask = begin; mask < end; ++mask) {
        if ((mask & step) != 0) interior_[mask] -= interior_[mask ^ step];
      }
    });
  }
  const SubsetMask zeros = space_.zero_mask();
  for (std::size_t mask = 0; mask < count; ++mask) {
    if (std::popcount(mask) < 2 || (mask & zeros) != 0) interior_[mask] = 0.0;
  }
}

double LossTable::total(SubsetMask subset) const {
  double value = sigma_log(subset);
  for (SubsetMask rest = subset; rest != 0; rest &= rest - 1) {
    value -= sigma_log_[rest & (~rest + 1)];
  }
  return value;
}

double atom_measure(const LossTable& table, Atom atom) {
  if ((atom.mask() & ~table.space().full_mask()) != 0) {
    throw ValidationError("atom references an outcome outside the space");
  }
  return table.interior(atom.mask());
}

double measure(const LossTable& table, const Content& content) {
  if (content.space_tag() != table.space().tag() ||
      content.outcome_count() != table.space().size()) {
    throw MixedSpaceError("content does not belong to the loss table's space");
  }
  CompensatedSum sum;
  content.for_each([&](Atom atom) { sum += table.interior(atom.mask()); });
  return sum.value();
}

double measure(const LossTable& table, const FormalSum& formal) {
  if (formal.space_tag() != table.space().tag() ||
      formal.outcome_count() != table.space().size()) {
    throw MixedSpaceError("formal sum does not belong to the loss table's space");
  }
  CompensatedSum sum;
  for (const auto& [atom, coefficient] : formal.terms()) {
    sum += static_cast<double>(coefficient) * table.interior(atom.mask());
  }
  return sum.value();
}

}  // namespace logdecomp
