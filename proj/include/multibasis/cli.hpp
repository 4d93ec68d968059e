#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "multibasis/applications.hpp"
#include "multibasis/expression.hpp"

namespace multibasis {

/// Engine failure while evaluating, tagged with the offending subexpression.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Text, Structured };

struct SessionConfig {
  std::vector<std::string> params;  ///< coefficient parameters; empty means rationals
  std::size_t nvars = 0;            ///< 0: longest vector in the input
  std::optional<RootType> type;     ///< default for K literals and operators
  std::string basis;                ///< picks the member of a family sharing a prefix
  OutputFormat format = OutputFormat::Text;
};

/// Result of evaluating an expression over coefficients C.
template <Coefficient C>
struct Value {
  enum class Kind { Scalar, Combination, Polynomial };
  Kind kind = Kind::Scalar;
  C scalar = C::zero();
  std::optional<BasisExpansion<C>> combination;
  std::optional<Polynomial<C>> polynomial;

  Polynomial<C> expanded(std::size_t nvars) const;
};

/// Basis names accepted by --basis and --to.
const std::vector<std::string>& cli_basis_names();

/// True when the expression or the configuration needs y-coefficients.
bool needs_double_coefficients(const Expr& e, const SessionConfig& cfg, const std::string& target = "");

/// Evaluation session: owns the coefficient ring and one instance of every
/// basis. C is ParamFraction or YPolynomial.
template <Coefficient C>
class Session {
 public:
  explicit Session(SessionConfig cfg);

  const SessionConfig& config() const { return cfg_; }
  /// Throws EvalError for names that do not exist over C.
  BasisPtr<C> basis(const std::string& cli_name) const;
  std::string cli_name(const BasisPtr<C>& b) const;

  Value<C> eval(const Expr& e) const;
  std::size_t nvars_for(const Expr& e) const;
  /// Parameter or y-variable named `name`.
  C symbol(const std::string& name) const;

 private:
  struct Impl;
  SessionConfig cfg_;
  std::shared_ptr<const Impl> impl_;
};

/// Polynomial written with named variables, e.g. "x1^2 - x1*x2"; negative
/// exponents become divisions.
std::string named_polynomial(const Polynomial<Rational>& p, const std::vector<std::string>& names);
/// var1, var2, ..., varn
std::vector<std::string> numbered(const std::string& var, std::size_t n);

/// Runs one command line (without the program name). Exit status 0 on
/// success, 2 on usage or parse errors, 3 on engine errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multibasis
