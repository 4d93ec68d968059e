#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "multibasis/rational.hpp"

namespace multibasis {

/// Syntax error with 1-based position and the tokens that would have been
/// accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column, std::vector<std::string> expected);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_, column_;
  std::vector<std::string> expected_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression tree. Numbers are non-negative integers; negative values and
/// fractions are built with Neg and Div.
struct Expr {
  enum class Kind { Number, Param, Element, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind = Kind::Number;
  Rational number;
  std::string name;         ///< parameter name or basis prefix
  std::vector<int> vector;  ///< basis element index
  int exponent = 0;         ///< Pow
  ExprPtr lhs, rhs;         ///< Neg and Pow use lhs only
  int line = 1, column = 1;
};

/// expr   := term (('+' | '-') term)*
/// term   := factor (('*' | '/') factor)*
/// factor := '-' factor | atom ('^' nat)?
/// atom   := '(' expr ')' | nat | name | PREFIX '[' int (',' int)* ']'
/// A prefix is a name, optionally preceded by '^' (as in ^K).
ExprPtr parse_expression(const std::string& text);

/// Canonical text with the fewest parentheses that parse back to the same tree.
std::string print_expression(const Expr& e);

/// Structural equality, ignoring source positions.
bool same_tree(const Expr& a, const Expr& b);

/// Longest basis-element vector in the tree (0 when there is none).
std::size_t max_vector_length(const Expr& e);

/// Largest exponent accepted after '^'.
inline constexpr int kMaxExponent = 255;

}  // namespace multibasis
