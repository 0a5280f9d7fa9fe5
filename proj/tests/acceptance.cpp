// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "logdecomp/atom.hpp"
#include "logdecomp/lattice.hpp"
#include "logdecomp/loss.hpp"
#include "logdecomp/loss_table.hpp"
#include "logdecomp/measure.hpp"
#include "logdecomp/oracle.hpp"
#include "logdecomp/region.hpp"
#include "support.hpp"

namespace {

using namespace logdecomp;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  double max_error = 0.0;
  std::size_t cases = 0;
  std::string note;

  void error(double e, double tolerance) {
    ++cases;
    if (std::isfinite(e)) max_error = std::max(max_error, e);
    if (!(e <= tolerance)) passed = false;
  }
  void require(bool ok) {
    ++cases;
    if (!ok) passed = false;
  }
};

int failures = 0;

void report(int id, const char* name, const Outcome& o, Clock::time_point start) {
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (!o.passed) ++failures;
  std::printf("%s %2d %-22s cases=%-7zu max_error=%-9.3g time=%.2fs%s%s\n",
              o.passed ? "PASS" : "FAIL", id, name, o.cases, o.max_error, seconds,
              o.note.empty() ? "" : "  ", o.note.c_str());
  std::fflush(stdout);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct System {
  OutcomeSpace space;
  std::vector<RandomVariable> vars;
};

std::vector<System> population(std::uint64_t seed, std::size_t count, std::size_t min_n,
                               std::size_t max_n, std::size_t variables) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(min_n, max_n);
  std::vector<System> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = size(rng);
    OutcomeSpace space = testing::random_space(rng, n);
    out.push_back({space, testing::random_variables(rng, n, variables)});
  }
  return out;
}

void entropy_equality(const std::vector<System>& systems) {
  const auto start = Clock::now();
  Outcome o;
  for (const System& s : systems) {
    const LossTable table(s.space);
    const double measured = measure(table, content_of(s.space, s.vars[0]));
    o.error(std::fabs(measured - oracle::shannon_joint(s.space, std::span(s.vars).first(1))), 1e-9);
  }
  if (seconds_since(start) >= 10.0) o.passed = false;
  report(1, "entropy-equality", o, start);
}

void mutual_information_equality(const std::vector<System>& systems) {
  const auto start = Clock::now();
  Outcome o;
  for (const System& s : systems) {
    const LossTable table(s.space);
    const auto& x = s.vars[0];
    const auto& y = s.vars[1];
    const double measured = measure(table, content_of(s.space, x) & content_of(s.space, y));
    const double shannon = oracle::shannon_joint(s.space, std::span(&x, 1)) +
                           oracle::shannon_joint(s.space, std::span(&y, 1)) -
                           oracle::shannon_joint(s.space, std::span(s.vars).first(2));
    o.error(std::fabs(measured - shannon), 1e-9);
  }
  const OutcomeSpace fig = testing::fig_space();
  const LossTable table(fig);
  const double mi = mutual_information(table, testing::parts_of("X", {{1, 3}, {2, 4}}, 4),
                                       testing::parts_of("Y", {{1, 2}, {3, 4}}, 4))
                        .value;
  o.error(std::fabs(mi - 0.0058021490143458365), 1e-9);
  char note[64];
  std::snprintf(note, sizeof note, "fig2 I(X;Y)=%.10f", mi);
  o.note = note;
  report(2, "mutual-information", o, start);
}

void co_information_equality() {
  const auto start = Clock::now();
  Outcome o;
  const std::vector<std::string> names{"A", "B", "C", "D"};
  const RegionExpr triple = parse_region("A & B & C", names);
  const RegionExpr quad = parse_region("A & B & C & D", names);
  for (const System& s : population(3, 1000, 2, 10, 4)) {
    const LossTable table(s.space);
    Bindings bindings;
    for (std::size_t i = 0; i < 4; ++i) bindings.emplace(names[i], s.vars[i]);
    for (std::size_t r = 3; r <= 4; ++r) {
      const double shannon = oracle::shannon_coinfo_recursive(s.space, std::span(s.vars).first(r));
      const double measured =
          measure(table, region_content(s.space, r == 3 ? triple : quad, bindings));
      o.error(std::fabs(measured - shannon), 1e-9);
    }
  }
  const std::vector<double> quarter(4, 0.25);
  const OutcomeSpace xor_space = OutcomeSpace::from_probabilities(quarter);
  const std::vector<RandomVariable> xor_vars{testing::parts_of("A", {{1, 2}, {3, 4}}, 4),
                                             testing::parts_of("B", {{1, 3}, {2, 4}}, 4),
                                             testing::parts_of("C", {{1, 4}, {2, 3}}, 4)};
  const double xor_value = co_information(LossTable(xor_space), xor_vars).value;
  o.error(std::fabs(xor_value + 1.0), 1e-12);
  char note[64];
  std::snprintf(note, sizeof note, "xor=%.17g", xor_value);
  o.note = note;
  report(3, "co-information", o, start);
}

void sign_theorem() {
  const auto start = Clock::now();
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> arity(2, 6);

  std::size_t m0_violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto tuple = testing::random_tuple(rng, arity(rng));
    const double sign = tuple.size() % 2 == 0 ? 1.0 : -1.0;
    if (!(interior_loss(tuple) * sign > 0.0)) ++m0_violations;
  }

  // Central differences, step 1e-5; stated sign (-1)^(n+1).
  std::size_t m1_points = 0;
  std::size_t m1_violations = 0;
  std::size_t m1_observed_minus_one_pow_n = 0;
  for (int i = 0; i < 100; ++i) {
    auto tuple = testing::random_tuple(rng, arity(rng));
    const std::size_t n = tuple.size();
    const double x = std::max(tuple[0], 1e-3);
    tuple[0] = x;
    const double at = interior_loss(tuple);
    tuple[0] = x + 1e-5;
    const double up = interior_loss(tuple);
    tuple[0] = x - 1e-5;
    const double down = interior_loss(tuple);
    const double slope = (up - down) / 2e-5;
    const double stated = (n + 1) % 2 == 0 ? 1.0 : -1.0;
    ++m1_points;
    if (slope * stated < -1e-4 * std::fabs(at)) ++m1_violations;
    if (slope * -stated > 0.0) ++m1_observed_minus_one_pow_n;
  }

  Outcome o;
  o.cases = 10000 + m1_points;
  o.passed = m0_violations == 0 && m1_violations == 0;
  char note[200];
  std::snprintf(note, sizeof note,
                "m=0 violations %zu/10000; m=1 violations of (-1)^(n+1) %zu/%zu, slope has sign "
                "(-1)^n at %zu/%zu",
                m0_violations, m1_violations, m1_points, m1_observed_minus_one_pow_n, m1_points);
  o.note = note;
  report(4, "sign-theorem", o, start);
}

void additivity() {
  const auto start = Clock::now();
  std::mt19937_64 rng(5);
  Outcome o;
  for (std::size_t n = 1; n <= 10; ++n) {
    const LossTable table(testing::random_space(rng, n));
    for (SubsetMask s = 1; s < (SubsetMask{1} << n); ++s) {
      double sum = 0.0;
      for (SubsetMask t = s; t != 0; t = (t - 1) & s) {
        if (std::popcount(t) >= 2) sum += table.interior(t);
      }
      std::vector<double> p;
      for (std::size_t i = 0; i < n; ++i) {
        if ((s >> i & 1U) != 0) p.push_back(table.space().probability(i));
      }
      o.error(std::fabs(sum - oracle::total_loss_direct(p)), 1e-9);
    }
  }
  report(5, "additivity", o, start);
}

void limits_and_magnitude() {
  const auto start = Clock::now();
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> tau(0.0, 10.0);
  Outcome o;
  double zero_error = 0.0;
  double infinity_error = 0.0;
  std::size_t magnitude_violations = 0;
  for (int i = 0; i < 10000; ++i) {
    // Limit at 0: any number of fixed arguments.
    auto tuple = testing::random_tuple(rng, 1 + i % 6);
    tuple.push_back(1e-12);
    const double z = std::fabs(interior_loss(tuple));
    zero_error = std::max(zero_error, z);
    o.error(z, 1e-9);

    // Limit at infinity and magnitude: two or more fixed arguments.
    auto fixed = testing::random_tuple(rng, 2 + i % 5);
    const double before = std::fabs(interior_loss(fixed));
    fixed.push_back(1e12);
    const double inf = std::fabs(std::fabs(interior_loss(fixed)) - before);
    infinity_error = std::max(infinity_error, inf);
    o.error(inf, 1e-6);
    fixed.back() = tau(rng);
    const bool shrinks = std::fabs(interior_loss(fixed)) < before;
    if (!shrinks) ++magnitude_violations;
    o.require(shrinks);
  }
  char note[160];
  std::snprintf(note, sizeof note, "limit0 %.3g, limit_inf %.3g (n>=3), magnitude violations %zu",
                zero_error, infinity_error, magnitude_violations);
  o.note = note;
  report(6, "limits-magnitude", o, start);
}

void route_equality() {
  const auto start = Clock::now();
  std::mt19937_64 rng(7);
  Outcome o;
  for (int i = 0; i < 1000; ++i) {
    const auto p = testing::dirichlet(rng, 1 + i % 8);
    const double pivoted = interior_loss(p);
    const double identity = interior_loss_identity(p);
    const double recursive = oracle::interior_loss_recursive(p);
    o.error(std::max({std::fabs(pivoted - identity), std::fabs(pivoted - recursive),
                      std::fabs(identity - recursive)}),
            1e-9);
  }
  report(7, "route-equality", o, start);
}

void gk_dis() {
  const auto start = Clock::now();
  Outcome o;
  const OutcomeSpace fig = testing::fig_space();
  const LossTable fig_table(fig);
  const std::vector<RandomVariable> fig_vars{testing::parts_of("X", {{1}, {3}, {2, 4}}, 4),
                                             testing::parts_of("Y", {{1}, {2}, {3, 4}}, 4)};
  const CommonInformation fig_gk = gk_common_information(fig_table, fig_vars);
  o.require(describe_partition(fig, fig_gk.common) == "{1}|{2,3,4}");
  const std::vector<double> split{0.1, 0.9};
  o.error(std::fabs(fig_gk.value - oracle::shannon_entropy(split)), 1e-9);

  std::mt19937_64 rng(8);
  for (const System& s : population(8, 200, 2, 7, 3)) {
    const LossTable table(s.space);
    const std::size_t r = 2 + static_cast<std::size_t>(rng() % 2);
    const auto vars = std::span(s.vars).first(r);
    Content both = Content::all(s.space);
    for (const auto& v : vars) both &= content_of(s.space, v);
    const CommonInformation gk = gk_common_information(table, vars);
    o.error(std::fabs(measure(table, dis(s.space, both)) - gk.value), 1e-9);
  }
  if (seconds_since(start) >= 60.0) o.passed = false;
  o.note = "fig4 Z=" + describe_partition(fig, fig_gk.common);
  report(8, "gk-dis", o, start);
}

void yeung_regions() {
  const auto start = Clock::now();
  Outcome o;
  const std::vector<std::string> names{"A", "B", "C"};
  std::vector<RegionExpr> cells;
  for (unsigned cell = 1; cell < 8; ++cell) {
    std::optional<RegionExpr> inside;
    std::optional<RegionExpr> outside;
    for (unsigned i = 0; i < 3; ++i) {
      const RegionExpr v = RegionExpr::variable(names[i]);
      if ((cell >> i & 1U) != 0) {
        inside = inside ? RegionExpr::binary(RegionOp::intersection, *inside, v) : v;
      } else {
        outside = outside ? RegionExpr::binary(RegionOp::set_union, *outside, v) : v;
      }
    }
    cells.push_back(outside ? RegionExpr::binary(RegionOp::difference, *inside, *outside)
                            : *inside);
  }
  for (const System& s : population(9, 200, 2, 6, 3)) {
    const LossTable table(s.space);
    const Bindings bindings{{"A", s.vars[0]}, {"B", s.vars[1]}, {"C", s.vars[2]}};
    for (unsigned cell = 1; cell < 8; ++cell) {
      const Content c = region_content(s.space, cells[cell - 1], bindings);
      const double measured = measure(table, c);
      const double shannon =
          oracle::shannon_region(s.space, s.vars, [&](std::uint32_t in) { return in == cell; });
      o.error(std::fabs(measured - shannon), 1e-9);
    }
  }
  report(9, "yeung-regions", o, start);
}

void performance() {
  const auto start = Clock::now();
  Outcome o;
  std::mt19937_64 rng(10);
  const auto p = testing::dirichlet(rng, 16);
  std::ostringstream doc;
  doc.precision(17);
  doc << "{\"outcomes\": [";
  for (std::size_t i = 0; i < p.size(); ++i) {
    doc << (i ? ", " : "") << "{\"id\": \"w" << i + 1 << "\", \"p\": " << p[i] << "}";
  }
  doc << "], \"variables\": {\"X\": [[\"w1\", \"w2\"], [";
  for (std::size_t i = 3; i <= 16; ++i) doc << (i > 3 ? ", " : "") << "\"w" << i << "\"";
  doc << "]]}, \"settings\": {\"tolerance\": 1e-12}}";
  const auto path = std::filesystem::temp_directory_path() / "logdecomp_acceptance_n16.json";
  std::ofstream(path) << doc.str();

  std::vector<std::string> outputs;
  double worst = 0.0;
  for (int run = 0; run < 2; ++run) {
    const auto t0 = Clock::now();
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"atoms", path.string(), "--format", "csv"}, out, err);
    worst = std::max(worst, seconds_since(t0));
    o.require(code == 0);
    outputs.push_back(out.str());
  }
  const std::size_t rows =
      static_cast<std::size_t>(std::count(outputs[0].begin(), outputs[0].end(), '\n')) - 1;
  o.require(rows == 65519);
  o.require(outputs[0] == outputs[1]);
  if (worst >= 5.0) o.passed = false;
  char note[120];
  std::snprintf(note, sizeof note, "rows=%zu slowest run %.2fs, identical=%s", rows, worst,
                outputs[0] == outputs[1] ? "yes" : "no");
  o.note = note;
  report(10, "n16-performance", o, start);
}

void partition_law() {
  const auto start = Clock::now();
  std::mt19937_64 rng(11);
  Outcome o;
  for (std::size_t n = 1; n <= 6; ++n) {
    const OutcomeSpace space = testing::random_space(rng, n);
    const LossTable table(space);
    oracle::for_each_partition(n, [&](std::span<const std::size_t> labels) {
      const RandomVariable parts = RandomVariable::from_labels("P", labels);
      const auto law = oracle::partition_law_check(space, parts);
      o.require(law.holds);
      o.error(std::fabs(law.merged - law.remainder), 1e-9);
      o.error(std::fabs(measure(table, content_of(space, parts)) - law.merged), 1e-9);
    });
  }
  report(11, "partition-law", o, start);
}

}  // namespace

int main() {
  const auto systems = population(1, 1000, 2, 10, 2);
  entropy_equality(systems);
  mutual_information_equality(systems);
  co_information_equality();
  sign_theorem();
  additivity();
  limits_and_magnitude();
  route_equality();
  gk_dis();
  yeung_regions();
  performance();
  partition_law();
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
