#include "logdecomp/outcome_space.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include "logdecomp/error.hpp"

namespace logdecomp {

namespace {

std::uint64_t next_tag() {
  static std::atomic<std::uint64_t> counter{0};
  return ++counter;
}

}  // namespace

OutcomeSpace OutcomeSpace::create(std::vector<Outcome> outcomes, SpaceOptions options) {
  if (outcomes.empty()) {
    throw ValidationError("outcome space must contain at least one outcome");
  }
  if (!(options.tolerance >= 0.0) || !std::isfinite(options.tolerance)) {
    throw ValidationError("tolerance must be a finite non-negative number");
  }
  const std::size_t limit = std::min(options.max_outcomes, kHardMaxOutcomes);
  if (outcomes.size() > limit) {
    throw CapacityError("outcome space has " + std::to_string(outcomes.size()) +
                        " outcomes; the limit is " + std::to_string(limit) + " (" +
                        std::to_string((1ULL << std::min<std::size_t>(outcomes.size(), 63)) -
                                       outcomes.size() - 1) +
                        " atoms requested)");
  }

  OutcomeSpace space;
  std::unordered_set<std::string> seen;
  double total = 0.0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    if (o.id.empty()) {
      throw ValidationError("outcome " + std::to_string(i) + " has an empty id");
    }
    if (!seen.insert(o.id).second) {
      throw ValidationError("duplicate outcome id '" + o.id + "'");
    }
    if (!std::isfinite(o.p) || o.p < 0.0 || o.p > 1.0) {
      throw ValidationError("probability of outcome '" + o.id + "' is not in [0, 1]");
    }
    if (o.p == 0.0) {
      if (!options.allow_zero) {
        throw ValidationError("outcome '" + o.id +
                              "' has probability 0 (zero-probability outcomes are not allowed)");
      }
      space.zero_mask_ |= SubsetMask{1} << i;
    }
    total += o.p;
  }
  if (std::fabs(total - 1.0) > options.tolerance) {
    throw ValidationError("probabilities sum to " + std::to_string(total) + ", not 1");
  }

  space.outcomes_ = std::move(outcomes);
  space.options_ = options;
  space.tag_ = next_tag();
  return space;
}

OutcomeSpace OutcomeSpace::from_probabilities(std::span<const double> probabilities,
                                              SpaceOptions options) {
  std::vector<Outcome> outcomes;
  outcomes.reserve(probabilities.size());
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    outcomes.push_back({std::to_string(i + 1), probabilities[i]});
  }
  return create(std::move(outcomes), options);
}

std::vector<double> OutcomeSpace::probabilities() const {
  std::vector<double> out;
  out.reserve(outcomes_.size());
  for (const auto& o : outcomes_) out.push_back(o.p);
  return out;
}

std::optional<std::size_t> OutcomeSpace::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    if (outcomes_[i].id == id) return i;
  }
  return std::nullopt;
}

SubsetMask OutcomeSpace::full_mask() const noexcept {
  return outcomes_.size() >= 64 ? ~SubsetMask{0} : (SubsetMask{1} << outcomes_.size()) - 1;
}

OutcomeSpace OutcomeSpace::with_base(LogBase base) const {
  OutcomeSpace copy = *this;
  copy.options_.base = base;
  return copy;
}

std::size_t max_outcomes_from_environment() {
  const char* raw = std::getenv("LOGDECOMP_MAX_OUTCOMES");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxOutcomes;
  char* end = nullptr;
  const unsigned long value = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) {
    throw ValidationError(std::string("LOGDECOMP_MAX_OUTCOMES is not a positive integer: ") + raw);
  }
  return static_cast<std::size_t>(value);
}

}  // namespace logdecomp
