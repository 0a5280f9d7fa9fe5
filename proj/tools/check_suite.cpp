#include "check_suite.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <optional>
#include <random>

#include "logdecomp/atom.hpp"
#include "logdecomp/lattice.hpp"
#include "logdecomp/loss.hpp"
#include "logdecomp/loss_table.hpp"
#include "logdecomp/measure.hpp"
#include "logdecomp/oracle.hpp"

namespace logdecomp::cli {

namespace {

constexpr std::size_t kExhaustiveAdditivityLimit = 12;
constexpr std::size_t kPerturbationLimit = 12;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void record(double error, double tolerance, const std::string& what) {
    ++result_.cases;
    if (std::isfinite(error)) result_.max_error = std::max(result_.max_error, error);
    if (!(error <= tolerance) && result_.passed) {
      result_.passed = false;
      result_.detail = what + " (error " + format_double(error) + ")";
    }
  }

  void violation(const std::string& what) {
    ++result_.cases;
    if (result_.passed) {
      result_.passed = false;
      result_.detail = what;
    }
  }

  void pass() { ++result_.cases; }

  void skip(std::string why) {
    result_.skipped = true;
    result_.detail = std::move(why);
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::vector<double> probabilities_of(const OutcomeSpace& space, SubsetMask subset) {
  std::vector<double> out;
  for (SubsetMask rest = subset; rest != 0; rest &= rest - 1) {
    out.push_back(space.probability(static_cast<std::size_t>(std::countr_zero(rest))));
  }
  return out;
}

std::vector<double> random_tuple(std::mt19937_64& rng, std::size_t n) {
  // (0, 10]
  std::uniform_real_distribution<double> dist(0.0, 10.0);
  std::vector<double> out(n);
  for (double& v : out) {
    do {
      v = 10.0 - dist(rng);
    } while (!(v > 0.0));
  }
  return out;
}

OutcomeSpace perturb(const OutcomeSpace& space, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> scale(0.5, 1.5);
  std::vector<Outcome> outcomes = space.outcomes();
  double total = 0.0;
  for (Outcome& o : outcomes) {
    o.p *= scale(rng);
    total += o.p;
  }
  for (Outcome& o : outcomes) o.p /= total;
  SpaceOptions options = space.options();
  options.tolerance = std::max(options.tolerance, 1e-12);
  return OutcomeSpace::create(std::move(outcomes), options);
}

std::vector<std::vector<RandomVariable>> variable_groups(const std::vector<RandomVariable>& vars,
                                                         std::size_t min_size,
                                                         std::size_t max_size) {
  std::vector<std::vector<RandomVariable>> groups;
  const std::size_t r = std::min<std::size_t>(vars.size(), 16);
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << r); ++subset) {
    const auto size = static_cast<std::size_t>(std::popcount(subset));
    if (size < min_size || size > max_size) continue;
    auto& group = groups.emplace_back();
    for (std::size_t i = 0; i < r; ++i) {
      if ((subset >> i & 1U) != 0) group.push_back(vars[i]);
    }
  }
  return groups;
}

std::string names_of(const std::vector<RandomVariable>& group) {
  std::string out;
  for (const RandomVariable& v : group) {
    if (!out.empty()) out += ',';
    out += v.name();
  }
  return out;
}

CheckResult check_additivity(const LossTable& table, const CheckOptions& options,
                             std::mt19937_64& rng) {
  Check check("additivity");
  const OutcomeSpace& space = table.space();
  const double tol = space.tolerance();
  const oracle::OracleConfig config{space.base(), std::max(tol, 1e-12)};
  auto verify = [&](SubsetMask subset) {
    double sum = 0.0;
    for (SubsetMask t = subset;; t = (t - 1) & subset) {
      sum += table.interior(t);
      if (t == 0) break;
    }
    const double direct = oracle::total_loss_direct(probabilities_of(space, subset), config);
    check.record(std::fabs(sum - direct), tol, "subset mask " + std::to_string(subset));
  };
  if (space.size() <= kExhaustiveAdditivityLimit) {
    for (SubsetMask s = 1; s <= space.full_mask(); ++s) verify(s);
  } else {
    std::uniform_int_distribution<SubsetMask> pick(1, space.full_mask());
    for (std::size_t i = 0; i < options.trials; ++i) verify(pick(rng));
  }
  return check.done();
}

CheckResult check_sign(const LossTable& table, const CheckOptions& options,
                       std::mt19937_64& rng) {
  Check check("sign");
  const OutcomeSpace& space = table.space();
  const double tol = space.tolerance();
  for_each_atom_mask(space.size(), [&](SubsetMask mask) {
    if ((mask & space.zero_mask()) != 0) return;
    const double signed_value =
        (std::popcount(mask) % 2 == 0 ? 1.0 : -1.0) * table.interior(mask);
    if (signed_value < -tol) {
      check.violation("atom " + atom_label(space, Atom::from_mask(mask)) + " has the wrong sign");
    } else {
      check.pass();
    }
  });
  std::uniform_int_distribution<std::size_t> arity(2, 6);
  for (std::size_t i = 0; i < options.trials; ++i) {
    const std::vector<double> tuple = random_tuple(rng, arity(rng));
    const double value = interior_loss(tuple, space.base());
    const double expected = tuple.size() % 2 == 0 ? 1.0 : -1.0;
    if (!(value * expected > 0.0)) {
      check.violation("random tuple of size " + std::to_string(tuple.size()) +
                      " has the wrong sign");
    } else {
      check.pass();
    }
  }
  return check.done();
}

CheckResult check_derivative_sign(const OutcomeSpace& space, const CheckOptions& options,
                                  std::mt19937_64& rng) {
  Check check("derivative-sign");
  constexpr double kStep = 1e-5;
  constexpr double kRelativeTolerance = 1e-4;
  std::uniform_int_distribution<std::size_t> arity(2, 6);
  for (std::size_t i = 0; i < options.trials; ++i) {
    std::vector<double> tuple = random_tuple(rng, arity(rng));
    const std::size_t n = tuple.size();
    tuple[0] = std::max(tuple[0], 2 * kStep);
    const double x = tuple[0];
    tuple[0] = x + kStep;
    const double up = interior_loss(tuple, space.base());
    tuple[0] = x - kStep;
    const double down = interior_loss(tuple, space.base());
    tuple[0] = x;
    const double at = interior_loss(tuple, space.base());
    const double slope = (up - down) / (2 * kStep);
    // |L°| grows toward its limit as one argument grows, so the slope carries
    // the sign of L° itself.
    const double expected = n % 2 == 0 ? 1.0 : -1.0;
    if (slope * expected < -kRelativeTolerance * std::max(std::fabs(at), 1e-300)) {
      check.violation("slope at a tuple of size " + std::to_string(n) + " has the wrong sign");
    } else {
      check.pass();
    }
  }
  return check.done();
}

// Random sub-tuples of the system's positive probabilities (at least
// `min_size` of them), falling back to random tuples for small systems.
std::vector<double> system_tuple(const OutcomeSpace& space, std::size_t min_size,
                                 std::mt19937_64& rng) {
  std::vector<double> positive;
  for (double p : space.probabilities()) {
    if (p > 0.0) positive.push_back(p);
  }
  if (positive.size() < min_size) return random_tuple(rng, min_size);
  std::shuffle(positive.begin(), positive.end(), rng);
  std::uniform_int_distribution<std::size_t> size(min_size,
                                                  std::min<std::size_t>(positive.size(), 7));
  positive.resize(size(rng));
  return positive;
}

CheckResult check_limit_zero(const OutcomeSpace& space, const CheckOptions& options,
                             std::mt19937_64& rng) {
  Check check("limit-zero");
  for (std::size_t i = 0; i < options.trials; ++i) {
    std::vector<double> tuple = system_tuple(space, 1, rng);
    tuple.push_back(1e-12);
    check.record(std::fabs(interior_loss(tuple, space.base())), 1e-9,
                 "tuple of size " + std::to_string(tuple.size()));
  }
  return check.done();
}

CheckResult check_limit_infinity(const OutcomeSpace& space, const CheckOptions& options,
                                 std::mt19937_64& rng) {
  Check check("limit-infinity");
  // Needs two fixed arguments: L°(p, x) = L(p, x) diverges like p log x.
  for (std::size_t i = 0; i < options.trials; ++i) {
    std::vector<double> tuple = system_tuple(space, 2, rng);
    const double base_value = std::fabs(interior_loss(tuple, space.base()));
    tuple.push_back(1e12);
    const double extended = std::fabs(interior_loss(tuple, space.base()));
    check.record(std::fabs(extended - base_value), 1e-6,
                 "tuple of size " + std::to_string(tuple.size()));
  }
  return check.done();
}

CheckResult check_magnitude(const OutcomeSpace& space, const CheckOptions& options,
                            std::mt19937_64& rng) {
  Check check("magnitude");
  std::uniform_real_distribution<double> tau_dist(0.0, 10.0);
  for (std::size_t i = 0; i < options.trials; ++i) {
    std::vector<double> tuple = system_tuple(space, 2, rng);
    const double before = std::fabs(interior_loss(tuple, space.base()));
    tuple.push_back(tau_dist(rng));
    const double after = std::fabs(interior_loss(tuple, space.base()));
    if (!(after < before)) {
      check.violation("appending an argument did not shrink |L°| for a tuple of size " +
                      std::to_string(tuple.size()));
    } else {
      check.pass();
    }
  }
  return check.done();
}

CheckResult check_routes(const LossTable& table, const CheckOptions& options,
                         std::mt19937_64& rng) {
  Check check("route-equality");
  const OutcomeSpace& space = table.space();
  const double tol = space.tolerance();
  const oracle::OracleConfig config{space.base(), std::max(tol, 1e-12)};
  std::vector<SubsetMask> atoms;
  for_each_atom_mask(space.size(), [&](SubsetMask mask) {
    if (std::popcount(mask) <= 8) atoms.push_back(mask);
  });
  if (atoms.size() > options.trials) {
    std::shuffle(atoms.begin(), atoms.end(), rng);
    atoms.resize(options.trials);
    std::sort(atoms.begin(), atoms.end(), canonical_less);
  }
  for (SubsetMask mask : atoms) {
    const std::vector<double> p = probabilities_of(space, mask);
    const double table_value = table.interior(mask);
    const double pivoted = interior_loss(p, space.base());
    const double identity = interior_loss_identity(p, space.base());
    const double recursive = oracle::interior_loss_recursive(p, config);
    const double error = std::max({std::fabs(table_value - pivoted),
                                   std::fabs(pivoted - identity),
                                   std::fabs(identity - recursive)});
    check.record(error, tol, "atom " + atom_label(space, Atom::from_mask(mask)));
  }
  return check.done();
}

void yeung_on(const LossTable& table, const std::vector<RandomVariable>& vars, Check& check,
              const std::string& label) {
  for (const auto& group : variable_groups(vars, 1, 3)) {
    Bindings bindings;
    std::vector<std::string> names;
    for (const RandomVariable& v : group) {
      bindings.emplace(v.name(), v);
      names.push_back(v.name());
    }
    const std::size_t r = group.size();
    for (std::uint32_t cell = 1; cell < (std::uint32_t{1} << r); ++cell) {
      // Inside the chosen variables, outside the others.
      std::optional<RegionExpr> expr;
      for (std::size_t i = 0; i < r; ++i) {
        if ((cell >> i & 1U) == 0) continue;
        RegionExpr leaf = RegionExpr::variable(names[i]);
        expr = expr ? RegionExpr::binary(RegionOp::intersection, *expr, leaf) : leaf;
      }
      for (std::size_t i = 0; i < r; ++i) {
        if ((cell >> i & 1U) != 0) continue;
        expr = RegionExpr::binary(RegionOp::difference, *expr, RegionExpr::variable(names[i]));
      }
      const QuantityReport report = region_measure(table, *expr, bindings);
      check.record(std::fabs(report.discrepancy()), report.tolerance,
                   label + " region " + to_string(*expr));
    }
  }
}

void gk_on(const LossTable& table, const std::vector<RandomVariable>& vars, Check& check,
           const std::string& label) {
  const OutcomeSpace& space = table.space();
  for (const auto& group : variable_groups(vars, 2, 3)) {
    const CommonInformation gk = gk_common_information(table, group);
    Content intersection = content_of(space, group.front());
    for (std::size_t i = 1; i < group.size(); ++i) intersection &= content_of(space, group[i]);
    const double brute = measure(table, dis(space, intersection));
    check.record(std::fabs(brute - gk.value), space.tolerance(),
                 label + " variables " + names_of(group));
  }
}

CheckResult check_yeung(const LossTable& table, const std::vector<RandomVariable>& vars,
                        const CheckOptions& options, std::mt19937_64& rng) {
  Check check("yeung-consistency");
  if (vars.empty()) {
    check.skip("no variables declared");
    return check.done();
  }
  yeung_on(table, vars, check, "system");
  if (table.space().size() <= kPerturbationLimit) {
    for (std::size_t i = 0; i < options.trials; ++i) {
      const LossTable perturbed(perturb(table.space(), rng), options.threads);
      yeung_on(perturbed, vars, check, "perturbation " + std::to_string(i));
    }
  }
  return check.done();
}

CheckResult check_gk(const LossTable& table, const std::vector<RandomVariable>& vars,
                     const CheckOptions& options, std::mt19937_64& rng) {
  Check check("gk-dis");
  if (vars.size() < 2) {
    check.skip("needs at least two variables");
    return check.done();
  }
  if (table.space().size() > kDisBruteForceCap) {
    check.skip("more than " + std::to_string(kDisBruteForceCap) +
               " outcomes; enumeration of partitions skipped");
    return check.done();
  }
  gk_on(table, vars, check, "system");
  for (std::size_t i = 0; i < options.trials; ++i) {
    const LossTable perturbed(perturb(table.space(), rng), options.threads);
    gk_on(perturbed, vars, check, "perturbation " + std::to_string(i));
  }
  return check.done();
}

CheckResult check_partition_law(const LossTable& table, const std::vector<RandomVariable>& vars,
                                const CheckOptions& options, std::mt19937_64& rng) {
  Check check("partition-law");
  const OutcomeSpace& space = table.space();
  const double tol = std::max(space.tolerance(), 1e-12);
  auto verify = [&](const RandomVariable& parts, const std::string& label) {
    const oracle::PartitionLawResult law = oracle::partition_law_check(space, parts);
    // The merged loss is also the measure of everything outside the parts'
    // closed simplices, i.e. the content of the partition.
    const double measured = measure(table, content_of(space, parts));
    check.record(std::max(std::fabs(law.merged - law.remainder), std::fabs(law.merged - measured)),
                 tol, label);
  };
  for (const RandomVariable& v : vars) verify(v, "variable " + v.name());
  std::uniform_int_distribution<std::size_t> label_dist(0, space.size() - 1);
  std::vector<std::size_t> labels(space.size());
  for (std::size_t i = 0; i < options.trials; ++i) {
    for (std::size_t& l : labels) l = label_dist(rng);
    verify(RandomVariable::from_labels("random", labels), "random partition " + std::to_string(i));
  }
  return check.done();
}

CheckResult check_entropy(const LossTable& table, const std::vector<RandomVariable>& vars) {
  Check check("entropy-equality");
  for (const RandomVariable& v : vars) {
    const QuantityReport h = entropy(table, v);
    check.record(std::fabs(h.discrepancy()), h.tolerance, "H(" + v.name() + ")");
  }
  for (const auto& pair : variable_groups(vars, 2, 2)) {
    const QuantityReport mi = mutual_information(table, pair[0], pair[1]);
    check.record(std::fabs(mi.discrepancy()), mi.tolerance, mi.quantity);
    if (mi.value < -1e-12) check.violation(mi.quantity + " is negative");
  }
  return check.done();
}

}  // namespace

std::vector<CheckResult> run_checks(const SystemFile& system, const CheckOptions& options) {
  std::mt19937_64 rng(options.seed);
  const LossTable table(system.space, options.threads);
  std::vector<CheckResult> results;
  results.push_back(check_additivity(table, options, rng));
  results.push_back(check_sign(table, options, rng));
  results.push_back(check_derivative_sign(system.space, options, rng));
  results.push_back(check_limit_zero(system.space, options, rng));
  results.push_back(check_limit_infinity(system.space, options, rng));
  results.push_back(check_magnitude(system.space, options, rng));
  results.push_back(check_routes(table, options, rng));
  results.push_back(check_entropy(table, system.variables));
  results.push_back(check_yeung(table, system.variables, options, rng));
  results.push_back(check_gk(table, system.variables, options, rng));
  results.push_back(check_partition_law(table, system.variables, options, rng));
  return results;
}

}  // namespace logdecomp::cli
