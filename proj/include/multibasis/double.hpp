#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "multibasis/bases.hpp"

namespace multibasis {

/// Polynomial in y_1, y_2, ... over the rationals, used as the coefficient
/// ring of double polynomials. Operands with different y counts are padded
/// with zeros to the larger count.
class YPolynomial {
 public:
  YPolynomial() : p_(1) {}
  YPolynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  YPolynomial(long c) : YPolynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit YPolynomial(Polynomial<Rational> p) : p_(std::move(p)) {}

  static YPolynomial zero() { return YPolynomial(); }
  static YPolynomial one() { return YPolynomial(Rational(1)); }
  static YPolynomial from_rational(const Rational& r) { return YPolynomial(r); }
  /// y_j among ny variables, 1-based.
  static YPolynomial variable(std::size_t ny, std::size_t j) {
    return YPolynomial(Polynomial<Rational>::variable(ny, j));
  }

  std::size_t nvars() const { return p_.nvars(); }
  const Polynomial<Rational>& poly() const { return p_; }
  YPolynomial padded(std::size_t ny) const;

  bool is_zero() const { return p_.is_zero(); }
  bool is_constant() const;
  Rational constant_value() const;
  /// Value with every y_j set to `value`.
  Rational specialize(const Rational& value) const;

  YPolynomial operator-() const { return YPolynomial(-p_); }
  friend YPolynomial operator+(const YPolynomial& a, const YPolynomial& b);
  friend YPolynomial operator-(const YPolynomial& a, const YPolynomial& b);
  friend YPolynomial operator*(const YPolynomial& a, const YPolynomial& b);
  friend bool operator==(const YPolynomial& a, const YPolynomial& b);

  std::optional<YPolynomial> divide(const YPolynomial& d) const;

  /// "y(2,1,0)-y(2,0,1)"; constants print as rationals.
  std::string to_string() const;
  bool is_atomic() const { return is_constant(); }

 private:
  Polynomial<Rational> p_;
};

using DoublePolynomial = Polynomial<YPolynomial>;

/// Largest y count among the coefficients.
std::size_t y_nvars(const DoublePolynomial& p);
/// Pads every coefficient to `ny` y-variables (default: y_nvars(p)).
DoublePolynomial uniform_y(const DoublePolynomial& p, std::size_t ny = 0);
/// Every y_j set to `value`.
Polynomial<Rational> specialize_y(const DoublePolynomial& p, const Rational& value);
/// Rational x-polynomial seen as a double polynomial with constant coefficients.
DoublePolynomial lift_x(const Polynomial<Rational>& p);
/// Exchanges the roles of x and y. The result has y_nvars(p) x-variables and
/// p.nvars() y-variables.
DoublePolynomial swap_coeffs_elements(const DoublePolynomial& p);

/// Double Schubert polynomials: dominant case prod_i prod_{j <= l_i} (x_i - y_j)
/// with max(l) y-variables, divided differences in x.
BasisPtr<YPolynomial> double_schubert_basis();
/// Double Grothendieck polynomials: dominant case prod_i prod_{j <= l_i}
/// (1 - y_j / x_i), isobaric divided differences in x. Expansion only.
BasisPtr<YPolynomial> double_grothendieck_basis();

/// Greedy elimination of a double polynomial into an x-basis over y-polynomials.
inline BasisExpansion<YPolynomial> double_to_x_basis(const DoublePolynomial& p, const BasisPtr<YPolynomial>& xbasis) {
  return to_basis(xbasis, uniform_y(p));
}

/// Finite sum of c * Bx_u * By_w where each side carries its own single
/// variable basis (null means monomials). `main_var` names the side indexed
/// by u, the other side plays the coefficient role.
class DoubleExpansion {
 public:
  using Key = std::pair<ExponentVector, ExponentVector>;

  DoubleExpansion(BasisPtr<Rational> main_basis, std::size_t main_nvars, BasisPtr<Rational> coeff_basis,
                  std::size_t coeff_nvars, std::string main_var = "x", std::string coeff_var = "y");

  static DoubleExpansion element(BasisPtr<Rational> main_basis, const ExponentVector& u,
                                 BasisPtr<Rational> coeff_basis, const ExponentVector& w);
  static DoubleExpansion from_polynomial(const DoublePolynomial& p);

  const BasisPtr<Rational>& main_basis() const { return main_; }
  const BasisPtr<Rational>& coeff_basis() const { return coeff_; }
  std::size_t main_nvars() const { return nmain_; }
  std::size_t coeff_nvars() const { return ncoeff_; }
  const std::map<Key, Rational>& terms() const { return terms_; }

  void add_term(const ExponentVector& u, const ExponentVector& w, const Rational& c);

  /// Main side rewritten in `basis` (null: monomials).
  DoubleExpansion change_main_basis(const BasisPtr<Rational>& basis) const;
  /// Coefficient side rewritten in `basis` (null: monomials).
  DoubleExpansion change_coeffs_bases(const BasisPtr<Rational>& basis) const;
  DoubleExpansion expand() const { return change_main_basis(nullptr); }
  DoubleExpansion swap_coeffs_elements() const;

  /// Both sides in monomials, main side as x.
  DoublePolynomial to_polynomial() const;

  friend bool operator==(const DoubleExpansion& a, const DoubleExpansion& b);
  std::string to_string() const;

 private:
  BasisPtr<Rational> main_, coeff_;
  std::size_t nmain_, ncoeff_;
  std::string main_var_, coeff_var_;
  std::map<Key, Rational> terms_;
};

}  // namespace multibasis
