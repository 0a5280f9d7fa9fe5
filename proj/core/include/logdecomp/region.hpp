#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace logdecomp {

/// Binary operators in increasing binding strength after `|`:
/// union < difference < intersection. Complement (`~`, prefix) binds
/// tightest. All binary operators are left-associative.
enum class RegionOp { set_union, difference, intersection };

/// Immutable expression tree over variable names describing a region of an
/// information diagram. Cheap to copy (shared nodes).
class RegionExpr {
 public:
  enum class Kind { variable, complement, binary };

  static RegionExpr variable(std::string name);
  static RegionExpr complement(RegionExpr operand);
  static RegionExpr binary(RegionOp op, RegionExpr lhs, RegionExpr rhs);

  Kind kind() const noexcept;
  /// Variable name; only for Kind::variable.
  const std::string& name() const;
  /// Operand of a complement.
  const RegionExpr& operand() const;
  RegionOp op() const;
  const RegionExpr& lhs() const;
  const RegionExpr& rhs() const;

  /// Distinct variable names in order of first appearance.
  std::vector<std::string> variables() const;

  friend bool operator==(const RegionExpr& a, const RegionExpr& b);

 private:
  struct Node;
  explicit RegionExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

char symbol(RegionOp op) noexcept;

/// Parses the region grammar:
///
///   union        := difference ( '|' difference )*
///   difference   := intersection ( '\' intersection )*
///   intersection := unary ( '&' unary )*
///   unary        := '~' unary | '(' union ')' | identifier
///   identifier   := [A-Za-z_][A-Za-z0-9_]*
///
/// Whitespace is ignored. Every identifier must appear in `declared`.
/// Throws ParseError carrying the 0-based offset of the offending token.
RegionExpr parse_region(std::string_view text, std::span<const std::string> declared);

/// Prints with the minimum parentheses needed to parse back to the same tree.
std::string to_string(const RegionExpr& expr);

/// Folds the tree bottom-up. `leaf(name)`, `negate(value)` and
/// `combine(op, lhs, rhs)` produce values of the same type.
template <typename Leaf, typename Negate, typename Combine>
auto evaluate(const RegionExpr& expr, const Leaf& leaf, const Negate& negate,
              const Combine& combine) -> decltype(leaf(expr.name())) {
  switch (expr.kind()) {
    case RegionExpr::Kind::variable:
      return leaf(expr.name());
    case RegionExpr::Kind::complement:
      return negate(evaluate(expr.operand(), leaf, negate, combine));
    case RegionExpr::Kind::binary:
      break;
  }
  return combine(expr.op(), evaluate(expr.lhs(), leaf, negate, combine),
                 evaluate(expr.rhs(), leaf, negate, combine));
}

}  // namespace logdecomp
