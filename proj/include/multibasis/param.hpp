#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "multibasis/rational.hpp"

namespace multibasis {

/// Ordered list of parameter names (q, t1, t2, ...) fixed when a coefficient
/// ring is built.
class ParamSpace {
 public:
  explicit ParamSpace(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const ParamSpace& a, const ParamSpace& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using ParamSpacePtr = std::shared_ptr<const ParamSpace>;

class ParameterMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse polynomial with rational coefficients in the parameters of a
/// ParamSpace. Exponents are non-negative. Constants may carry no space at all
/// and adopt the space of whatever they are combined with.
class ParamPolynomial {
 public:
  using Monomial = std::vector<int>;
  /// Graded-lexicographic, largest first.
  struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
  };
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  ParamPolynomial() = default;
  ParamPolynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  ParamPolynomial(long c) : ParamPolynomial(Rational(c)) {}  // NOLINT

  static ParamPolynomial variable(ParamSpacePtr space, std::size_t index, int power = 1);
  static ParamPolynomial from_terms(ParamSpacePtr space, TermMap terms);

  const ParamSpacePtr& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  std::size_t nparams() const { return space_ ? space_->size() : 0; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Value of a constant polynomial; throws if not constant.
  Rational constant_value() const;
  int total_degree() const;
  /// Graded-lex leading term.
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  int degree_in(std::size_t var) const;
  int min_degree_in(std::size_t var) const;
  /// Coefficient of var^k, as a polynomial not involving var.
  ParamPolynomial coefficient_in(std::size_t var, int k) const;
  /// Multiplies by the monomial with the given exponents (may be negative as
  /// long as the result stays a polynomial).
  ParamPolynomial shifted(const Monomial& by) const;
  /// Componentwise minimum exponent over the support.
  Monomial monomial_content() const;
  /// Positive rational r such that this/r has coprime integer coefficients;
  /// the sign follows the leading coefficient.
  Rational rational_content() const;

  ParamPolynomial operator-() const;
  ParamPolynomial& operator+=(const ParamPolynomial& o);
  ParamPolynomial& operator-=(const ParamPolynomial& o);
  friend ParamPolynomial operator+(ParamPolynomial a, const ParamPolynomial& b) { return a += b; }
  friend ParamPolynomial operator-(ParamPolynomial a, const ParamPolynomial& b) { return a -= b; }
  friend ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b);
  ParamPolynomial scaled(const Rational& c) const;
  ParamPolynomial pow(int e) const;

  friend bool operator==(const ParamPolynomial& a, const ParamPolynomial& b);

  /// Exact quotient, or nullopt when `d` does not divide this polynomial.
  std::optional<ParamPolynomial> exact_quotient(const ParamPolynomial& d) const;

  std::string to_string() const;

  /// Space able to hold both operands; throws ParameterMismatch.
  static ParamSpacePtr common_space(const ParamSpacePtr& a, const ParamSpacePtr& b);
  /// Re-expresses the polynomial over `target` (constants only may change space).
  ParamPolynomial in_space(const ParamSpacePtr& target) const;

 private:
  void add_term(Monomial m, const Rational& c);

  ParamSpacePtr space_;
  TermMap terms_;
};

/// Greatest common divisor, normalised to have integer coprime coefficients
/// and a positive leading coefficient. gcd(0, 0) = 0.
ParamPolynomial gcd(const ParamPolynomial& a, const ParamPolynomial& b);

/// Pseudo-remainder of a by b with respect to one parameter.
ParamPolynomial pseudo_remainder(const ParamPolynomial& a, const ParamPolynomial& b, std::size_t var);

/// Element of the fraction field of ParamPolynomial.
///
/// Stored reduced: the gcd of numerator and denominator is removed and the
/// denominator has coprime integer coefficients with a positive leading
/// coefficient. Equality is decided by cross-multiplication, so it does not
/// depend on the reduction.
class ParamFraction {
 public:
  ParamFraction() : den_(1) {}
  ParamFraction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  ParamFraction(long c) : ParamFraction(Rational(c)) {}  // NOLINT
  ParamFraction(ParamPolynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT
  /// Throws DivisionByZero when den is zero.
  ParamFraction(ParamPolynomial num, ParamPolynomial den, bool full_reduce = true);

  static ParamFraction zero() { return {}; }
  static ParamFraction one() { return ParamFraction(1); }
  static ParamFraction from_rational(const Rational& r) { return ParamFraction(r); }

  const ParamPolynomial& numerator() const { return num_; }
  const ParamPolynomial& denominator() const { return den_; }
  ParamSpacePtr space() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  ParamFraction operator-() const;
  friend ParamFraction operator+(const ParamFraction& a, const ParamFraction& b);
  friend ParamFraction operator-(const ParamFraction& a, const ParamFraction& b);
  friend ParamFraction operator*(const ParamFraction& a, const ParamFraction& b);
  /// Throws DivisionByZero.
  friend ParamFraction operator/(const ParamFraction& a, const ParamFraction& b);
  ParamFraction& operator+=(const ParamFraction& o) { return *this = *this + o; }
  ParamFraction& operator-=(const ParamFraction& o) { return *this = *this - o; }
  ParamFraction& operator*=(const ParamFraction& o) { return *this = *this * o; }

  friend bool operator==(const ParamFraction& a, const ParamFraction& b);

  std::optional<ParamFraction> inverse() const;
  std::optional<ParamFraction> divide(const ParamFraction& d) const;
  ParamFraction pow(int e) const;

  std::string to_string() const;
  bool is_atomic() const;

 private:
  ParamPolynomial num_;
  ParamPolynomial den_;
};

/// Only strips rational content and shared monomial factors, leaving any
/// non-monomial common factor in place.
ParamFraction normalize_light(const ParamPolynomial& num, const ParamPolynomial& den);

class UnknownParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Factory for the fraction field Q(p1, ..., pk) over a declared parameter
/// list; asking for an undeclared parameter is an error.
class ParamRing {
 public:
  explicit ParamRing(std::vector<std::string> names);

  const ParamSpacePtr& space() const { return space_; }
  bool has(const std::string& name) const { return space_->index_of(name).has_value(); }
  /// Throws UnknownParameter.
  ParamFraction param(const std::string& name) const;

 private:
  ParamSpacePtr space_;
};

}  // namespace multibasis
