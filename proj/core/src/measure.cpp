#include "logdecomp/measure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "logdecomp/error.hpp"
#include "logdecomp/oracle.hpp"

namespace logdecomp {

namespace {

std::string join_names(std::span<const RandomVariable> variables, std::string_view separator) {
  std::string out;
  for (const RandomVariable& v : variables) {
    if (!out.empty()) out += separator;
    out += v.name();
  }
  return out;
}

QuantityReport report(const LossTable& table, const Content& content, std::string quantity,
                      std::optional<double> oracle_value) {
  QuantityReport r;
  r.quantity = std::move(quantity);
  r.base = table.base();
  r.tolerance = table.space().tolerance();
  r.value = measure(table, content);
  content.for_each([&](Atom atom) { r.breakdown.push_back({atom, 1, table.interior(atom.mask())}); });
  r.oracle_value = oracle_value;
  if (oracle_value) {
    r.method = Method::both;
    r.routes_agree = std::fabs(*oracle_value - r.value) <= r.tolerance;
  }
  return r;
}

Content union_of_contents(const OutcomeSpace& space, std::span<const RandomVariable> variables) {
  Content out = Content::none(space);
  for (const RandomVariable& v : variables) out |= content_of(space, v);
  return out;
}

void require_variables(std::span<const RandomVariable> variables, const char* what) {
  if (variables.empty()) throw ValidationError(std::string(what) + " of an empty variable list");
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::content_measure:
      return "content-measure";
    case Method::shannon_oracle:
      return "shannon-oracle";
    case Method::both:
      break;
  }
  return "both";
}

QuantityReport entropy(const LossTable& table, const RandomVariable& x) {
  const OutcomeSpace& space = table.space();
  const Content content = content_of(space, x);
  const double shannon = oracle::shannon_joint(space, std::span<const RandomVariable>(&x, 1));
  return report(table, content, "H(" + x.name() + ")", shannon);
}

QuantityReport joint_entropy(const LossTable& table, std::span<const RandomVariable> variables) {
  require_variables(variables, "joint entropy");
  const OutcomeSpace& space = table.space();
  const Content content = union_of_contents(space, variables);
  return report(table, content, "H(" + join_names(variables, ",") + ")",
                oracle::shannon_joint(space, variables));
}

QuantityReport mutual_information(const LossTable& table, const RandomVariable& x,
                                  const RandomVariable& y) {
  const OutcomeSpace& space = table.space();
  const Content content = content_of(space, x) & content_of(space, y);
  return report(table, content, "I(" + x.name() + ";" + y.name() + ")",
                oracle::shannon_mi(space, x, y));
}

QuantityReport conditional_entropy(const LossTable& table, const RandomVariable& x,
                                   const RandomVariable& y) {
  const OutcomeSpace& space = table.space();
  const Content content = content_of(space, x) - content_of(space, y);
  const double shannon = oracle::shannon_conditional(
      space, std::span<const RandomVariable>(&x, 1), std::span<const RandomVariable>(&y, 1));
  return report(table, content, "H(" + x.name() + "|" + y.name() + ")", shannon);
}

QuantityReport co_information(const LossTable& table, std::span<const RandomVariable> variables,
                              std::span<const RandomVariable> given) {
  require_variables(variables, "co-information");
  const OutcomeSpace& space = table.space();
  Content content = content_of(space, variables.front());
  for (const RandomVariable& v : variables.subspan(1)) content &= content_of(space, v);
  content -= union_of_contents(space, given);

  std::string quantity = variables.size() == 1 ? "H(" : "I(";
  quantity += join_names(variables, ";");
  if (!given.empty()) quantity += "|" + join_names(given, ",");
  quantity += ")";
  return report(table, content, std::move(quantity),
                oracle::shannon_coinfo_recursive(space, variables, given));
}

Content region_content(const OutcomeSpace& space, const RegionExpr& expr,
                       const Bindings& bindings) {
  return evaluate(
      expr,
      [&](const std::string& name) {
        const auto it = bindings.find(name);
        if (it == bindings.end()) throw UnboundVariableError("unbound variable '" + name + "'");
        return content_of(space, it->second);
      },
      [](const Content& c) { return c.complement(); },
      [](RegionOp op, const Content& a, const Content& b) {
        switch (op) {
          case RegionOp::set_union:
            return a | b;
          case RegionOp::difference:
            return a - b;
          case RegionOp::intersection:
            break;
        }
        return a & b;
      });
}

QuantityReport region_measure(const LossTable& table, const RegionExpr& expr,
                              const Bindings& bindings) {
  const OutcomeSpace& space = table.space();
  const Content content = region_content(space, expr, bindings);

  const std::vector<std::string> names = expr.variables();
  std::vector<RandomVariable> variables;
  for (const std::string& name : names) variables.push_back(bindings.at(name));

  const auto in_region = [&](std::uint32_t inside) {
    return evaluate(
        expr,
        [&](const std::string& name) {
          const auto pos = static_cast<std::size_t>(
              std::find(names.begin(), names.end(), name) - names.begin());
          return (inside >> pos & 1U) != 0;
        },
        [](bool v) { return !v; },
        [](RegionOp op, bool a, bool b) {
          switch (op) {
            case RegionOp::set_union:
              return a || b;
            case RegionOp::difference:
              return a && !b;
            case RegionOp::intersection:
              break;
          }
          return a && b;
        });
  };
  return report(table, content, to_string(expr),
                oracle::shannon_region(space, variables, in_region));
}

QuantityReport content_measure(const LossTable& table, const Content& content,
                               std::string quantity) {
  return report(table, content, std::move(quantity), std::nullopt);
}

FormalSum formal_sum_of(const OutcomeSpace& space, std::span<const EntropyTerm> terms) {
  FormalSum sum(space);
  for (const EntropyTerm& term : terms) {
    if (term.variables.empty()) continue;
    sum.add(content_of(space, joint(term.variables)), term.coefficient);
  }
  return sum;
}

AsContentResult as_content(const OutcomeSpace& space, const FormalSum& sum) {
  if (sum.space_tag() != space.tag() || sum.outcome_count() != space.size()) {
    throw MixedSpaceError("formal sum does not belong to this space");
  }
  AsContentResult result;
  Content content = Content::none(space);
  for (const auto& [atom, coefficient] : sum.terms()) {
    if (coefficient == 1) {
      content.insert(atom);
    } else {
      result.offending.emplace_back(atom, coefficient);
    }
  }
  if (result.offending.empty()) result.content = std::move(content);
  return result;
}

DecomposabilityReport verify_decomposability(const LossTable& table,
                                             std::span<const RandomVariable> family,
                                             const VariableQuantity& f, const SetMap& f_star,
                                             std::size_t max_subset_size,
                                             std::optional<double> tolerance) {
  if (family.size() > 20) throw CapacityError("decomposability checks support at most 20 variables");
  const OutcomeSpace& space = table.space();
  const double tol = tolerance.value_or(space.tolerance());

  std::vector<Content> contents;
  contents.reserve(family.size());
  for (const RandomVariable& v : family) contents.push_back(content_of(space, v));

  DecomposabilityReport result;
  const std::uint32_t count = std::uint32_t{1} << family.size();
  for (std::size_t size = 1; size <= std::min(max_subset_size, family.size()); ++size) {
    for (std::uint32_t subset = 1; subset < count; ++subset) {
      if (static_cast<std::size_t>(std::popcount(subset)) != size) continue;
      std::vector<RandomVariable> chosen;
      std::vector<Content> chosen_contents;
      for (std::size_t i = 0; i < family.size(); ++i) {
        if ((subset >> i & 1U) != 0) {
          chosen.push_back(family[i]);
          chosen_contents.push_back(contents[i]);
        }
      }
      ++result.subsets_checked;
      const double quantity = f(chosen);
      const double measured = measure(table, f_star(chosen_contents));
      if (!(std::fabs(quantity - measured) <= tol)) {
        DecomposabilityFailure failure;
        for (const RandomVariable& v : chosen) failure.variables.push_back(v.name());
        failure.quantity = quantity;
        failure.measured = measured;
        result.failures.push_back(std::move(failure));
      }
    }
  }
  return result;
}

}  // namespace logdecomp
