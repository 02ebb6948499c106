#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mislab/bignat.hpp"
#include "mislab/graph.hpp"

namespace mislab {

/// Binary expression over the constant 1 with + and *. Nodes are shared and
/// immutable; value and one-count are cached at construction.
class Expression {
 public:
  enum class Kind { One, Sum, Product };

  static Expression one();
  static Expression sum(const Expression& lhs, const Expression& rhs);
  static Expression product(const Expression& lhs, const Expression& rhs);

  Kind kind() const;
  const BigNat& value() const;
  std::size_t ones() const;
  /// Children of a Sum or Product; throws std::logic_error on One.
  const Expression& lhs() const;
  const Expression& rhs() const;

  /// Structural equality.
  friend bool operator==(const Expression& a, const Expression& b);

 private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Expression::Node {
  Kind kind;
  BigNat value;
  std::size_t ones;
  Expression lhs;
  Expression rhs;
};

inline Expression::Kind Expression::kind() const { return node_->kind; }
inline const BigNat& Expression::value() const { return node_->value; }
inline std::size_t Expression::ones() const { return node_->ones; }

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  /// Zero-based offset into the input.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar (whitespace ignored, + and * both right-associative):
///   sum     := product ('+' sum)?
///   product := factor (('*' | juxtaposition) product)?
///   factor  := '1' | '(' sum ')'
/// Juxtaposition needs a parenthesis on at least one side; "11" is rejected.
Expression parse_expression(std::string_view text);

/// Fewest parentheses, products by juxtaposition ('*' only between two bare 1s).
/// parse_expression(format_expression(e)) == e.
std::string format_expression(const Expression& e);

/// One -> K_1, Sum -> join, Product -> disjoint union. The result has e.ones()
/// vertices and e.value() maximal independent sets. Throws for ones > 128.
Graph graph_from_expression(const Expression& e);

inline constexpr std::size_t kMaxComplexityLimit = 10'000'000;

/// c(m) for 1 <= m <= limit, with a back-pointer per entry.
class ComplexityTable {
 public:
  /// How the sum half of the recurrence is scanned. Pruned stops the summand
  /// scan once c(i) + c(m-i) >= 3 log_3(i (m-i)) cannot beat the best so far;
  /// Exhaustive scans every i <= m/2. Both give identical tables.
  enum class SumScan { Pruned, Exhaustive };

  /// Throws for limit == 0 or limit > 10^7.
  explicit ComplexityTable(std::size_t limit, SumScan scan = SumScan::Pruned);

  std::size_t limit() const { return c_.size() - 1; }
  /// Throws std::out_of_range outside 1..limit.
  std::size_t operator[](std::size_t m) const;

  /// Back-pointer of m >= 2: positive for a split m = i + (m-i), negative for
  /// a factorisation m = d * (m/d).
  std::int32_t choice(std::size_t m) const { return choice_.at(m); }

 private:
  std::vector<std::uint8_t> c_;
  std::vector<std::int32_t> choice_;
};

ComplexityTable complexity_table(std::size_t limit);

/// Expression with value m and exactly table[m] ones, following the recorded
/// first minimiser (summands by ascending i, then divisors by ascending d).
Expression minimal_expression(std::size_t m, const ComplexityTable& table);

/// "m,c" lines for m = 1..limit, no header.
void write_complexity_csv(std::ostream& out, const ComplexityTable& table);

}  // namespace mislab
