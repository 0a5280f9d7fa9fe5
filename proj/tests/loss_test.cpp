#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "logdecomp/atom.hpp"
#include "logdecomp/error.hpp"
#include "logdecomp/loss.hpp"
#include "logdecomp/loss_table.hpp"
#include "logdecomp/oracle.hpp"
#include "support.hpp"

namespace logdecomp {
namespace {

// Values below come from an independent mpmath evaluation.
TEST(Loss, FrozenValues) {
  const std::vector<double> three{0.1, 0.2, 0.3};
  const std::vector<double> two{0.1, 0.2};
  const std::vector<double> flat(4, 0.25);
  EXPECT_NEAR(total_loss(three), 0.8754887502163469, 1e-13);
  EXPECT_NEAR(interior_loss(two), 0.2754887502163469, 1e-13);
  EXPECT_NEAR(interior_loss(three), -0.2099865470109875, 1e-13);
  EXPECT_NEAR(interior_loss(flat), 0.24511249783653177, 1e-13);
  EXPECT_NEAR(interior_loss_identity(three), -0.2099865470109875, 1e-12);
}

TEST(Loss, Degenerate) {
  const std::vector<double> one{0.3};
  EXPECT_EQ(interior_loss(one), 0.0);
  EXPECT_EQ(total_loss(one), 0.0);
  const std::vector<double> with_zero{0.2, 0.0, 0.5};
  EXPECT_NEAR(interior_loss(with_zero), 0.0, 1e-15);
  const std::vector<double> two{0.1, 0.2};
  EXPECT_DOUBLE_EQ(interior_loss(two), total_loss(two));
  EXPECT_THROW(interior_loss(std::vector<double>{}), DomainError);
  EXPECT_THROW(interior_loss(std::vector<double>{0.1, -0.2}), DomainError);
  EXPECT_THROW(interior_loss(std::vector<double>(25, 0.01)), CapacityError);
}

TEST(Loss, Bases) {
  const std::vector<double> three{0.1, 0.2, 0.3};
  const double bits = interior_loss(three, LogBase::two);
  EXPECT_NEAR(interior_loss(three, LogBase::e), bits * std::log(2.0), 1e-14);
  EXPECT_NEAR(interior_loss(three, LogBase::ten), bits * std::log10(2.0), 1e-14);
}

TEST(Loss, SignAlternates) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> arity(2, 6);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto tuple = testing::random_tuple(rng, arity(rng));
    const double v = interior_loss(tuple);
    const double sign = tuple.size() % 2 == 0 ? 1.0 : -1.0;
    ASSERT_GT(v * sign, 0.0) << "n=" << tuple.size();
  }
}

// |L°| rises toward its limit as one argument grows, so the slope has sign (-1)^n.
TEST(Loss, SlopeCarriesTheSignOfTheAtom) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> arity(2, 6);
  for (int trial = 0; trial < 100; ++trial) {
    auto tuple = testing::random_tuple(rng, arity(rng));
    const double x = std::max(tuple[0], 1e-3);
    tuple[0] = x + 1e-5;
    const double up = interior_loss(tuple);
    tuple[0] = x - 1e-5;
    const double down = interior_loss(tuple);
    const double sign = tuple.size() % 2 == 0 ? 1.0 : -1.0;
    ASSERT_GT((up - down) * sign, 0.0) << "n=" << tuple.size();
  }
}

TEST(Loss, LimitAtZero) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    auto tuple = testing::random_tuple(rng, 1 + trial % 6);
    tuple.push_back(1e-12);
    ASSERT_LE(std::fabs(interior_loss(tuple)), 1e-9);
  }
}

TEST(Loss, LimitAtInfinity) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 1000; ++trial) {
    auto tuple = testing::random_tuple(rng, 2 + trial % 5);
    const double before = std::fabs(interior_loss(tuple));
    tuple.push_back(1e12);
    ASSERT_NEAR(std::fabs(interior_loss(tuple)), before, 1e-6);
  }
}

// With a single fixed argument the limit does not exist: L°(p, x) grows like p log x.
TEST(Loss, PairDivergesAtInfinity) {
  const std::vector<double> small{0.5, 1e6};
  const std::vector<double> large{0.5, 1e12};
  EXPECT_NEAR(interior_loss(large) - interior_loss(small), 0.5 * std::log2(1e6), 1e-6);
}

TEST(Loss, MagnitudeDecreases) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> tau(0.0, 10.0);
  for (int trial = 0; trial < 10000; ++trial) {
    auto tuple = testing::random_tuple(rng, 2 + trial % 5);
    const double before = std::fabs(interior_loss(tuple));
    tuple.push_back(tau(rng));
    ASSERT_LT(std::fabs(interior_loss(tuple)), before);
  }
}

TEST(Loss, RoutesAgree) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const auto p = testing::dirichlet(rng, n);
    const double direct = interior_loss(p);
    ASSERT_NEAR(interior_loss_identity(p), direct, 1e-9);
    ASSERT_NEAR(oracle::interior_loss_recursive(p), direct, 1e-9);
  }
}

TEST(LossTable, MatchesPerAtomEvaluation) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 2; n <= 9; ++n) {
    const OutcomeSpace space = testing::random_space(rng, n);
    const LossTable table(space);
    for_each_atom_mask(n, [&](SubsetMask mask) {
      std::vector<double> p;
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i & 1U) != 0) p.push_back(space.probability(i));
      }
      ASSERT_NEAR(table.interior(mask), interior_loss(p), 1e-12);
    });
  }
}

TEST(LossTable, Additivity) {
  std::mt19937_64 rng(8);
  for (std::size_t n = 1; n <= 10; ++n) {
    const LossTable table(testing::random_space(rng, n));
    for (SubsetMask s = 1; s < (SubsetMask{1} << n); ++s) {
      double sum = 0.0;
      for (SubsetMask t = s; t != 0; t = (t - 1) & s) sum += table.interior(t);
      ASSERT_NEAR(sum, table.total(s), 1e-9);
    }
  }
}

TEST(LossTable, ThreadsDoNotChangeResults) {
  std::mt19937_64 rng(9);
  const OutcomeSpace space = testing::random_space(rng, 14);
  const LossTable serial(space, 1);
  const LossTable parallel(space, 4);
  for (SubsetMask s = 0; s < (SubsetMask{1} << 14); ++s) {
    ASSERT_EQ(serial.interior(s), parallel.interior(s));
  }
}

TEST(LossTable, ZeroProbabilityAtoms) {
  SpaceOptions options;
  options.allow_zero = true;
  const OutcomeSpace space = OutcomeSpace::create({{"a", 0.5}, {"b", 0.0}, {"c", 0.5}}, options);
  const LossTable table(space);
  EXPECT_EQ(table.interior(0b011), 0.0);
  EXPECT_EQ(table.interior(0b111), 0.0);
  EXPECT_NEAR(table.interior(0b101), 1.0, 1e-15);
}

}  // namespace
}  // namespace logdecomp
