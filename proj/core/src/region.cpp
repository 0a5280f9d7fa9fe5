#include "logdecomp/region.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

#include "logdecomp/error.hpp"

namespace logdecomp {

struct RegionExpr::Node {
  Kind kind = Kind::variable;
  std::string name;
  RegionOp op = RegionOp::set_union;
  std::vector<RegionExpr> children;
};

RegionExpr RegionExpr::variable(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::variable;
  node->name = std::move(name);
  return RegionExpr(std::move(node));
}

RegionExpr RegionExpr::complement(RegionExpr operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::complement;
  node->children.push_back(std::move(operand));
  return RegionExpr(std::move(node));
}

RegionExpr RegionExpr::binary(RegionOp op, RegionExpr lhs, RegionExpr rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::binary;
  node->op = op;
  node->children.push_back(std::move(lhs));
  node->children.push_back(std::move(rhs));
  return RegionExpr(std::move(node));
}

RegionExpr::Kind RegionExpr::kind() const noexcept { return node_->kind; }

const std::string& RegionExpr::name() const {
  if (node_->kind != Kind::variable) throw std::logic_error("region node is not a variable");
  return node_->name;
}

const RegionExpr& RegionExpr::operand() const {
  if (node_->kind != Kind::complement) throw std::logic_error("region node is not a complement");
  return node_->children[0];
}

RegionOp RegionExpr::op() const {
  if (node_->kind != Kind::binary) throw std::logic_error("region node is not binary");
  return node_->op;
}

const RegionExpr& RegionExpr::lhs() const {
  if (node_->kind != Kind::binary) throw std::logic_error("region node is not binary");
  return node_->children[0];
}

const RegionExpr& RegionExpr::rhs() const {
  if (node_->kind != Kind::binary) throw std::logic_error("region node is not binary");
  return node_->children[1];
}

std::vector<std::string> RegionExpr::variables() const {
  std::vector<std::string> out;
  evaluate(
      *this,
      [&](const std::string& name) {
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
        return 0;
      },
      [](int) { return 0; }, [](RegionOp, int, int) { return 0; });
  return out;
}

bool operator==(const RegionExpr& a, const RegionExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case RegionExpr::Kind::variable:
      return a.name() == b.name();
    case RegionExpr::Kind::complement:
      return a.operand() == b.operand();
    case RegionExpr::Kind::binary:
      break;
  }
  return a.op() == b.op() && a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

char symbol(RegionOp op) noexcept {
  switch (op) {
    case RegionOp::set_union:
      return '|';
    case RegionOp::difference:
      return '\\';
    case RegionOp::intersection:
      break;
  }
  return '&';
}

namespace {

int precedence(RegionOp op) {
  switch (op) {
    case RegionOp::set_union:
      return 1;
    case RegionOp::difference:
      return 2;
    case RegionOp::intersection:
      break;
  }
  return 3;
}

constexpr int kUnaryPrecedence = 4;

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> declared)
      : text_(text), declared_(declared) {}

  RegionExpr parse() {
    RegionExpr expr = parse_binary(1);
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return expr;
  }

 private:
  // Precedence climbing over the three left-associative binary levels.
  RegionExpr parse_binary(int min_precedence) {
    RegionExpr lhs = parse_unary();
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) return lhs;
      const auto op = binary_at(text_[pos_]);
      if (!op || precedence(*op) < min_precedence) return lhs;
      ++pos_;
      RegionExpr rhs = parse_binary(precedence(*op) + 1);
      lhs = RegionExpr::binary(*op, std::move(lhs), std::move(rhs));
    }
  }

  RegionExpr parse_unary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("expected an operand", pos_);
    const char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return RegionExpr::complement(parse_unary());
    }
    if (c == '(') {
      const std::size_t open = pos_++;
      RegionExpr inner = parse_binary(1);
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError("unbalanced '(' opened at " + std::to_string(open), pos_);
      }
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (std::find(declared_.begin(), declared_.end(), name) == declared_.end()) {
        throw ParseError("unknown variable '" + name + "'", start);
      }
      return RegionExpr::variable(std::move(name));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  static std::optional<RegionOp> binary_at(char c) {
    switch (c) {
      case '|':
        return RegionOp::set_union;
      case '\\':
        return RegionOp::difference;
      case '&':
        return RegionOp::intersection;
      default:
        return std::nullopt;
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::span<const std::string> declared_;
  std::size_t pos_ = 0;
};

int precedence_of(const RegionExpr& expr) {
  switch (expr.kind()) {
    case RegionExpr::Kind::variable:
    case RegionExpr::Kind::complement:
      return kUnaryPrecedence;
    case RegionExpr::Kind::binary:
      break;
  }
  return precedence(expr.op());
}

void print(const RegionExpr& expr, std::string& out) {
  auto child = [&](const RegionExpr& c, bool parenthesize) {
    if (parenthesize) out += '(';
    print(c, out);
    if (parenthesize) out += ')';
  };
  switch (expr.kind()) {
    case RegionExpr::Kind::variable:
      out += expr.name();
      return;
    case RegionExpr::Kind::complement:
      out += '~';
      child(expr.operand(), expr.operand().kind() == RegionExpr::Kind::binary);
      return;
    case RegionExpr::Kind::binary:
      break;
  }
  const int p = precedence(expr.op());
  child(expr.lhs(), precedence_of(expr.lhs()) < p);
  out += ' ';
  out += symbol(expr.op());
  out += ' ';
  child(expr.rhs(), precedence_of(expr.rhs()) <= p);
}

}  // namespace

RegionExpr parse_region(std::string_view text, std::span<const std::string> declared) {
  return Parser(text, declared).parse();
}

std::string to_string(const RegionExpr& expr) {
  std::string out;
  print(expr, out);
  return out;
}

}  // namespace logdecomp
