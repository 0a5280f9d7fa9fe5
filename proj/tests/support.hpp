#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "logdecomp/outcome_space.hpp"
#include "logdecomp/random_variable.hpp"

namespace logdecomp::testing {

// Flat Dirichlet draw, renormalized so the sum is 1 to within an ulp or two.
inline std::vector<double> dirichlet(std::mt19937_64& rng, std::size_t n) {
  std::gamma_distribution<double> gamma(1.0, 1.0);
  std::vector<double> p(n);
  double total = 0.0;
  for (double& v : p) {
    do {
      v = gamma(rng);
    } while (!(v > 1e-6));
    total += v;
  }
  for (double& v : p) v /= total;
  return p;
}

inline OutcomeSpace random_space(std::mt19937_64& rng, std::size_t n,
                                 LogBase base = LogBase::two) {
  SpaceOptions options;
  options.base = base;
  return OutcomeSpace::from_probabilities(dirichlet(rng, n), options);
}

inline RandomVariable random_variable(std::mt19937_64& rng, std::size_t n, std::string name) {
  std::uniform_int_distribution<std::size_t> parts(1, n);
  std::uniform_int_distribution<std::size_t> label(0, parts(rng) - 1);
  std::vector<std::size_t> labels(n);
  for (std::size_t& l : labels) l = label(rng);
  return RandomVariable::from_labels(std::move(name), labels);
}

inline std::vector<RandomVariable> random_variables(std::mt19937_64& rng, std::size_t n,
                                                    std::size_t count) {
  std::vector<RandomVariable> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_variable(rng, n, std::string(1, static_cast<char>('A' + i))));
  }
  return out;
}

// Positive reals in (0, 10].
inline std::vector<double> random_tuple(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(0.0, 10.0);
  std::vector<double> out(n);
  for (double& v : out) v = 10.0 - dist(rng);
  return out;
}

inline RandomVariable parts_of(std::string name, std::vector<std::vector<std::size_t>> parts,
                               std::size_t n) {
  for (auto& part : parts) {
    for (std::size_t& i : part) --i;  // fixtures are written 1-based
  }
  return RandomVariable::from_parts(std::move(name), std::move(parts), n);
}

inline OutcomeSpace fig_space() {
  const std::vector<double> p{0.1, 0.2, 0.3, 0.4};
  return OutcomeSpace::from_probabilities(p);
}

}  // namespace logdecomp::testing
