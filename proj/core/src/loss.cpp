#include "logdecomp/loss.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "logdecomp/compensated_sum.hpp"
#include "logdecomp/error.hpp"
#include "logdecomp/outcome_space.hpp"

namespace logdecomp {

namespace {

void check_arguments(std::span<const double> probabilities) {
  if (probabilities.empty()) throw DomainError("loss functions need at least one argument");
  if (probabilities.size() > kMaxLossArguments) {
    throw CapacityError("loss functions accept at most " + std::to_string(kMaxLossArguments) +
                        " arguments");
  }
  for (double p : probabilities) {
    if (!std::isfinite(p) || p < 0.0) {
      throw DomainError("loss arguments must be finite and non-negative");
    }
  }
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// (x+y)log(x+y) - x log x - y log y, written as two non-negative terms.
double merge_gain(double x, double y) {
  double gain = 0.0;
  if (x > 0.0 && y > 0.0) {
    gain = x * std::log1p(y / x) + y * std::log1p(x / y);
  }
  return gain;
}

}  // namespace

double total_loss(std::span<const double> probabilities, LogBase base) {
  check_arguments(probabilities);
  double total = 0.0;
  for (double p : probabilities) total += p;
  CompensatedSum sum;
  for (double p : probabilities) {
    if (p > 0.0) sum += p * std::log(total / p);
  }
  return from_nats(base, sum.value());
}

double interior_loss(std::span<const double> probabilities, LogBase base) {
  check_arguments(probabilities);
  const std::size_t n = probabilities.size();
  if (n == 1) return 0.0;

  const auto pivot_it = std::max_element(probabilities.begin(), probabilities.end());
  const double pivot = *pivot_it;
  std::vector<double> rest(probabilities.begin(), probabilities.end());
  rest.erase(rest.begin() + (pivot_it - probabilities.begin()));

  const std::size_t m = rest.size();
  const SubsetMask count = SubsetMask{1} << m;
  std::vector<double> subset_sum(count, 0.0);
  CompensatedSum sum;
  for (SubsetMask mask = 1; mask < count; ++mask) {
    const int high = std::bit_width(mask) - 1;
    subset_sum[mask] = subset_sum[mask ^ (SubsetMask{1} << high)] + rest[high];
    const double term = merge_gain(pivot, subset_sum[mask]);
    const bool negative = ((m - static_cast<std::size_t>(std::popcount(mask))) & 1U) != 0;
    sum += negative ? -term : term;
  }
  return from_nats(base, sum.value());
}

double interior_loss_identity(std::span<const double> probabilities, LogBase base) {
  check_arguments(probabilities);
  const std::size_t n = probabilities.size();
  if (n == 1) return 0.0;

  // log A_k for k = 1..n.
  std::vector<CompensatedSum> log_a(n + 1);
  const SubsetMask count = SubsetMask{1} << n;
  std::vector<double> subset_sum(count, 0.0);
  for (SubsetMask mask = 1; mask < count; ++mask) {
    const int high = std::bit_width(mask) - 1;
    subset_sum[mask] = subset_sum[mask ^ (SubsetMask{1} << high)] + probabilities[high];
    log_a[static_cast<std::size_t>(std::popcount(mask))] += xlogx(subset_sum[mask]);
  }
  CompensatedSum sum;
  for (std::size_t k = 1; k <= n; ++k) {
    const double term = log_a[k].value();
    sum += ((n - k) & 1U) != 0 ? -term : term;
  }
  return from_nats(base, sum.value());
}

}  // namespace logdecomp
