#include "mislab/complexity.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>

namespace mislab {

// ---------------------------------------------------------------------------
// Expression

Expression Expression::one() {
  return Expression(std::make_shared<const Node>(
      Node{Kind::One, 1, 1, Expression(nullptr), Expression(nullptr)}));
}

Expression Expression::sum(const Expression& lhs, const Expression& rhs) {
  return Expression(std::make_shared<const Node>(
      Node{Kind::Sum, lhs.value() + rhs.value(), lhs.ones() + rhs.ones(), lhs, rhs}));
}

Expression Expression::product(const Expression& lhs, const Expression& rhs) {
  return Expression(std::make_shared<const Node>(
      Node{Kind::Product, lhs.value() * rhs.value(), lhs.ones() + rhs.ones(), lhs, rhs}));
}

const Expression& Expression::lhs() const {
  if (kind() == Kind::One) throw std::logic_error("the expression 1 has no operands");
  return node_->lhs;
}

const Expression& Expression::rhs() const {
  if (kind() == Kind::One) throw std::logic_error("the expression 1 has no operands");
  return node_->rhs;
}

bool operator==(const Expression& a, const Expression& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.ones() != b.ones() || a.value() != b.value()) return false;
  if (a.kind() == Expression::Kind::One) return true;
  return a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument("syntax error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse() {
    if (peek() == '\0') fail("empty expression");
    Expression e = parse_sum();
    if (peek() != '\0') fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  // Next significant character, '\0' at end of input.
  char peek() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  Expression parse_sum() {
    Expression lhs = parse_product();
    if (peek() == '+') {
      ++pos_;
      return Expression::sum(lhs, parse_sum());
    }
    return lhs;
  }

  Expression parse_product() {
    bool bare = false;
    Expression lhs = parse_factor(bare);
    const char next = peek();
    if (next == '*') {
      ++pos_;
      return Expression::product(lhs, parse_product());
    }
    if (next == '(') return Expression::product(lhs, parse_product());
    if (next == '1') {
      if (bare) fail("adjacent 1s; write products of bare 1s with '*'");
      return Expression::product(lhs, parse_product());
    }
    if (next >= '0' && next <= '9') fail(std::string("digit '") + next + "' not allowed, only 1");
    return lhs;
  }

  Expression parse_factor(bool& bare) {
    const char ch = peek();
    if (ch == '1') {
      ++pos_;
      bare = true;
      return Expression::one();
    }
    if (ch == '(') {
      ++pos_;
      Expression inner = parse_sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      bare = false;
      return inner;
    }
    if (ch >= '0' && ch <= '9') fail(std::string("digit '") + ch + "' not allowed, only 1");
    if (ch == '\0') fail("unexpected end of expression");
    fail(std::string("unexpected '") + ch + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_sum(const Expression& e);

std::string format_product(const Expression& e) {
  using Kind = Expression::Kind;
  if (e.kind() == Kind::One) return "1";
  if (e.kind() == Kind::Sum) return "(" + format_sum(e) + ")";
  const Expression& l = e.lhs();
  const Expression& r = e.rhs();
  const std::string left = l.kind() == Kind::One ? "1" : "(" + format_sum(l) + ")";
  const std::string right = format_product(r);
  const bool clash = left.back() == '1' && right.front() == '1';
  return left + (clash ? "*" : "") + right;
}

std::string format_sum(const Expression& e) {
  if (e.kind() != Expression::Kind::Sum) return format_product(e);
  const Expression& l = e.lhs();
  const std::string left =
      l.kind() == Expression::Kind::Sum ? "(" + format_sum(l) + ")" : format_product(l);
  return left + "+" + format_sum(e.rhs());
}

Graph build_graph(const Expression& e) {
  switch (e.kind()) {
    case Expression::Kind::One:
      return complete_graph(1);
    case Expression::Kind::Sum:
      return join(build_graph(e.lhs()), build_graph(e.rhs()));
    case Expression::Kind::Product:
      return disjoint_union(build_graph(e.lhs()), build_graph(e.rhs()));
  }
  throw std::logic_error("unknown expression kind");
}

}  // namespace

Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string format_expression(const Expression& e) { return format_sum(e); }

Graph graph_from_expression(const Expression& e) {
  if (e.ones() > kMaxVertices) {
    throw std::invalid_argument("expression uses " + std::to_string(e.ones()) +
                                " ones; graphs are limited to 128 vertices");
  }
  return build_graph(e);
}

// ---------------------------------------------------------------------------
// Complexity table

namespace {

constexpr std::uint8_t kUnset = std::numeric_limits<std::uint8_t>::max();

// c(x) >= 3 log_3 x, since x <= ell(c(x)) <= 3^(c(x)/3).
double log3_bound(double x) { return 3.0 * std::log(x) / std::log(3.0); }

}  // namespace

ComplexityTable::ComplexityTable(std::size_t limit, SumScan scan) {
  if (limit == 0) throw std::invalid_argument("complexity table limit must be positive");
  if (limit > kMaxComplexityLimit) {
    const double mib = static_cast<double>(limit) * 10.0 / (1024.0 * 1024.0);
    throw std::invalid_argument("complexity table limit " + std::to_string(limit) +
                                " above 10^7 (would need about " +
                                std::to_string(static_cast<long long>(mib)) + " MiB)");
  }
  c_.assign(limit + 1, kUnset);
  choice_.assign(limit + 1, 0);
  c_[1] = 1;

  // Best factorisation found so far for each m, pushed forward from its
  // larger factor: (value, smallest d achieving it).
  std::vector<std::uint8_t> prod_best;
  std::vector<std::int32_t> prod_d;
  if (scan == SumScan::Pruned) {
    prod_best.assign(limit + 1, kUnset);
    prod_d.assign(limit + 1, 0);
  }

  for (std::size_t m = 2; m <= limit; ++m) {
    unsigned best = std::numeric_limits<unsigned>::max();
    std::int32_t how = 0;
    for (std::size_t i = 1; i <= m / 2; ++i) {
      if (scan == SumScan::Pruned &&
          log3_bound(static_cast<double>(i) * static_cast<double>(m - i)) > best - 1e-9) {
        break;
      }
      const unsigned v = unsigned{c_[i]} + c_[m - i];
      if (v < best) {
        best = v;
        how = static_cast<std::int32_t>(i);
      }
    }
    if (scan == SumScan::Pruned) {
      if (prod_best[m] != kUnset && prod_best[m] < best) {
        best = prod_best[m];
        how = -prod_d[m];
      }
    } else {
      for (std::size_t d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        const unsigned v = unsigned{c_[d]} + c_[m / d];
        if (v < best) {
          best = v;
          how = -static_cast<std::int32_t>(d);
        }
      }
    }
    if (best >= kUnset) throw std::logic_error("complexity exceeds table cell width");
    c_[m] = static_cast<std::uint8_t>(best);
    choice_[m] = how;

    if (scan == SumScan::Pruned) {
      if (best + 1e-9 < log3_bound(static_cast<double>(m))) {
        throw std::logic_error("complexity below 3 log_3 m at m = " + std::to_string(m));
      }
      for (std::size_t k = 2; k <= m && k * m <= limit; ++k) {
        const std::size_t target = k * m;
        const unsigned v = unsigned{c_[k]} + best;
        if (v < prod_best[target] ||
            (v == prod_best[target] && static_cast<std::int32_t>(k) < prod_d[target])) {
          prod_best[target] = static_cast<std::uint8_t>(v);
          prod_d[target] = static_cast<std::int32_t>(k);
        }
      }
    }
  }
}

std::size_t ComplexityTable::operator[](std::size_t m) const {
  if (m == 0 || m > limit()) {
    throw std::out_of_range("m = " + std::to_string(m) + " outside table range 1.." +
                            std::to_string(limit()));
  }
  return c_[m];
}

ComplexityTable complexity_table(std::size_t limit) { return ComplexityTable(limit); }

Expression minimal_expression(std::size_t m, const ComplexityTable& table) {
  if (m == 0 || m > table.limit()) {
    throw std::out_of_range("minimal_expression: m = " + std::to_string(m) +
                            " outside table range 1.." + std::to_string(table.limit()));
  }
  if (m == 1) return Expression::one();
  const std::int32_t how = table.choice(m);
  if (how > 0) {
    const auto i = static_cast<std::size_t>(how);
    return Expression::sum(minimal_expression(i, table), minimal_expression(m - i, table));
  }
  const auto d = static_cast<std::size_t>(-how);
  return Expression::product(minimal_expression(d, table), minimal_expression(m / d, table));
}

void write_complexity_csv(std::ostream& out, const ComplexityTable& table) {
  for (std::size_t m = 1; m <= table.limit(); ++m) out << m << ',' << table[m] << '\n';
}

}  // namespace mislab
