#include "logdecomp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <string>

#include "logdecomp/error.hpp"

namespace logdecomp::oracle {

namespace {

double plain_sum(std::span<const double> terms) {
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

double checked_sum(std::vector<double> terms, double tolerance) {
  const double forward = plain_sum(terms);
  std::mt19937 shuffle_rng(0x5eedU + static_cast<unsigned>(terms.size()));
  std::shuffle(terms.begin(), terms.end(), shuffle_rng);
  const double shuffled = plain_sum(terms);
  if (std::fabs(forward - shuffled) > tolerance) {
    throw InvariantError("oracle summation passes disagree: " + std::to_string(forward) +
                         " vs " + std::to_string(shuffled));
  }
  return forward;
}

double log_base(LogBase base, double x) {
  switch (base) {
    case LogBase::two:
      return std::log(x) / std::log(2.0);
    case LogBase::ten:
      return std::log(x) / std::log(10.0);
    case LogBase::e:
      break;
  }
  return std::log(x);
}

void check_cells(std::span<const double> cells) {
  if (cells.empty()) throw DomainError("oracle needs at least one cell");
  for (double c : cells) {
    if (!std::isfinite(c) || c < 0.0) throw DomainError("oracle cells must be finite and >= 0");
  }
}

OracleConfig config_of(const OutcomeSpace& space) {
  return {space.base(), std::max(space.tolerance(), 1e-12)};
}

void check_variables(const OutcomeSpace& space, std::span<const RandomVariable> variables) {
  for (const RandomVariable& v : variables) {
    if (v.outcome_count() != space.size()) {
      throw ValidationError("variable '" + v.name() + "' is not a partition of this space");
    }
  }
}

using Label = std::vector<std::size_t>;

Label label_of(std::span<const RandomVariable> variables, std::size_t outcome) {
  Label label;
  label.reserve(variables.size());
  for (const RandomVariable& v : variables) label.push_back(v.part_of(outcome));
  return label;
}

double entropy_of_masses(const std::map<Label, double>& masses, const OracleConfig& config) {
  std::vector<double> terms;
  for (const auto& [label, p] : masses) {
    if (p > 0.0) terms.push_back(-p * log_base(config.base, p));
  }
  return checked_sum(std::move(terms), config.tolerance);
}

}  // namespace

double shannon_entropy(std::span<const double> distribution, const OracleConfig& config) {
  check_cells(distribution);
  const double total = plain_sum(distribution);
  if (std::fabs(total - 1.0) > std::max(config.tolerance, 1e-9)) {
    throw DomainError("distribution sums to " + std::to_string(total) + ", not 1");
  }
  std::vector<double> terms;
  for (double p : distribution) {
    if (p > 0.0) terms.push_back(-p * log_base(config.base, p));
  }
  return checked_sum(std::move(terms), config.tolerance);
}

double shannon_joint(const OutcomeSpace& space, std::span<const RandomVariable> variables) {
  check_variables(space, variables);
  std::map<Label, double> masses;
  for (std::size_t i = 0; i < space.size(); ++i) {
    masses[label_of(variables, i)] += space.probability(i);
  }
  return entropy_of_masses(masses, config_of(space));
}

double shannon_conditional(const OutcomeSpace& space, std::span<const RandomVariable> variables,
                           std::span<const RandomVariable> given) {
  check_variables(space, variables);
  check_variables(space, given);
  const OracleConfig config = config_of(space);

  // cell of `given` -> (its mass, joint masses of `variables` inside it)
  std::map<Label, std::pair<double, std::map<Label, double>>> cells;
  for (std::size_t i = 0; i < space.size(); ++i) {
    auto& cell = cells[label_of(given, i)];
    cell.first += space.probability(i);
    cell.second[label_of(variables, i)] += space.probability(i);
  }
  std::vector<double> terms;
  for (const auto& [label, cell] : cells) {
    const double mass = cell.first;
    if (mass <= 0.0) continue;
    std::map<Label, double> conditional;
    for (const auto& [x, p] : cell.second) conditional[x] = p / mass;
    terms.push_back(mass * entropy_of_masses(conditional, config));
  }
  return checked_sum(std::move(terms), config.tolerance);
}

double shannon_mi(const OutcomeSpace& space, const RandomVariable& x, const RandomVariable& y) {
  const RandomVariable both[] = {x, y};
  const double hx = shannon_joint(space, std::span<const RandomVariable>(&x, 1));
  const double hy = shannon_joint(space, std::span<const RandomVariable>(&y, 1));
  const double hxy = shannon_joint(space, both);
  return hx + hy - hxy;
}

double shannon_coinfo_recursive(const OutcomeSpace& space,
                                std::span<const RandomVariable> variables,
                                std::span<const RandomVariable> given) {
  if (variables.empty()) throw ValidationError("co-information of an empty variable list");
  if (variables.size() == 1) return shannon_conditional(space, variables, given);
  const auto head = variables.first(variables.size() - 1);
  std::vector<RandomVariable> extended(given.begin(), given.end());
  extended.push_back(variables.back());
  return shannon_coinfo_recursive(space, head, given) -
         shannon_coinfo_recursive(space, head, extended);
}

double shannon_region(const OutcomeSpace& space, std::span<const RandomVariable> variables,
                      const std::function<bool(std::uint32_t)>& in_region) {
  check_variables(space, variables);
  const std::size_t r = variables.size();
  if (r > 16) throw CapacityError("region oracle supports at most 16 variables");
  const OracleConfig config = config_of(space);
  const std::uint32_t cell_count = std::uint32_t{1} << r;

  const RandomVariable discrete = RandomVariable::discrete(space.size());
  const double universe = shannon_joint(space, std::span<const RandomVariable>(&discrete, 1));

  // h[D] = measure of everything outside the variables not in D
  //      = H(Ω) - H(X_{V \ D}).
  std::vector<double> outside(cell_count);
  for (std::uint32_t d = 0; d < cell_count; ++d) {
    std::vector<RandomVariable> complement;
    for (std::size_t i = 0; i < r; ++i) {
      if ((d >> i & 1U) == 0) complement.push_back(variables[i]);
    }
    const double h = complement.empty() ? 0.0 : shannon_joint(space, complement);
    outside[d] = universe - h;
  }

  std::vector<double> terms;
  for (std::uint32_t cell = 0; cell < cell_count; ++cell) {
    if (!in_region(cell)) continue;
    // Cell inside exactly `cell`: alternating sum of outside[D] over D ⊆ cell.
    std::vector<double> cell_terms;
    for (std::uint32_t d = cell;; d = (d - 1) & cell) {
      const bool negative = ((std::popcount(cell) - std::popcount(d)) & 1) != 0;
      cell_terms.push_back(negative ? -outside[d] : outside[d]);
      if (d == 0) break;
    }
    terms.push_back(checked_sum(std::move(cell_terms), config.tolerance));
  }
  return checked_sum(std::move(terms), config.tolerance);
}

double total_loss_direct(std::span<const double> cells, const OracleConfig& config) {
  check_cells(cells);
  std::vector<double> terms;
  double merged = 0.0;
  for (double p : cells) {
    if (p > 0.0) terms.push_back(p * log_base(config.base, 1.0 / p));
    merged += p;
  }
  if (merged > 0.0) terms.push_back(-merged * log_base(config.base, 1.0 / merged));
  return checked_sum(std::move(terms), config.tolerance);
}

double interior_loss_recursive(std::span<const double> cells, const OracleConfig& config) {
  check_cells(cells);
  const std::size_t n = cells.size();
  if (n > 16) throw CapacityError("recursive interior loss supports at most 16 cells");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<double> memo(full + 1, 0.0);
  std::vector<bool> known(full + 1, false);

  std::function<double(std::uint32_t)> interior = [&](std::uint32_t subset) -> double {
    if (std::popcount(subset) <= 1) return 0.0;
    if (known[subset]) return memo[subset];
    std::vector<double> selected;
    for (std::size_t i = 0; i < n; ++i) {
      if ((subset >> i & 1U) != 0) selected.push_back(cells[i]);
    }
    std::vector<double> terms{total_loss_direct(selected, config)};
    for (std::uint32_t proper = (subset - 1) & subset; proper != 0;
         proper = (proper - 1) & subset) {
      terms.push_back(-interior(proper));
    }
    memo[subset] = checked_sum(std::move(terms), config.tolerance);
    known[subset] = true;
    return memo[subset];
  };
  return interior(full);
}

std::uint64_t bell_number(std::size_t n) {
  if (n > 25) throw CapacityError("Bell numbers beyond n = 25 overflow 64 bits");
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

void for_each_partition(std::size_t n,
                        const std::function<void(std::span<const std::size_t>)>& visit) {
  if (n > kMaxPartitionEnumeration) {
    throw CapacityError("partition enumeration is capped at n = " +
                        std::to_string(kMaxPartitionEnumeration) + " (Bell(" + std::to_string(n) +
                        ") = " + std::to_string(bell_number(std::min<std::size_t>(n, 25))) + ")");
  }
  std::vector<std::size_t> labels(n, 0);
  // allowed[i] = max(labels[0..i-1]) + 1, the largest label position i may take.
  std::vector<std::size_t> allowed(n, 0);
  if (n == 0) {
    visit(labels);
    return;
  }
  for (std::size_t i = 1; i < n; ++i) allowed[i] = 1;
  for (;;) {
    visit(labels);
    std::size_t i = n;
    while (i > 1 && labels[i - 1] == allowed[i - 1]) --i;
    if (i <= 1) return;
    ++labels[i - 1];
    for (std::size_t j = i; j < n; ++j) {
      labels[j] = 0;
      allowed[j] = std::max(allowed[j - 1], labels[j - 1] + 1);
    }
  }
}

std::vector<std::vector<std::size_t>> enumerate_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for_each_partition(n, [&](std::span<const std::size_t> labels) {
    out.emplace_back(labels.begin(), labels.end());
  });
  return out;
}

PartitionLawResult partition_law_check(const OutcomeSpace& space, const RandomVariable& parts) {
  check_variables(space, std::span<const RandomVariable>(&parts, 1));
  const OracleConfig config = config_of(space);
  const std::vector<double> all = space.probabilities();

  std::vector<double> part_masses;
  std::vector<double> remainder_terms{total_loss_direct(all, config)};
  for (const auto& part : parts.parts()) {
    std::vector<double> cells;
    for (std::size_t i : part) cells.push_back(all[i]);
    part_masses.push_back(plain_sum(cells));
    remainder_terms.push_back(-total_loss_direct(cells, config));
  }
  PartitionLawResult result;
  result.merged = total_loss_direct(part_masses, config);
  result.remainder = checked_sum(std::move(remainder_terms), config.tolerance);
  result.holds = std::fabs(result.merged - result.remainder) <= config.tolerance;
  return result;
}

}  // namespace logdecomp::oracle
