#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "multibasis/rational.hpp"

namespace multibasis {

/// Interface every coefficient ring plugs into the polynomial engine with.
///
/// `divide` is exact division: it returns nullopt when the quotient does not
/// exist in the ring (or the divisor is zero). `is_atomic` tells the printer
/// whether the coefficient can precede a monomial without parentheses.
template <class C>
concept Coefficient = std::regular<C> && requires(const C& a, const C& b, const Rational& r) {
  { C::zero() } -> std::same_as<C>;
  { C::one() } -> std::same_as<C>;
  { C::from_rational(r) } -> std::same_as<C>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a + b } -> std::same_as<C>;
  { a - b } -> std::same_as<C>;
  { a * b } -> std::same_as<C>;
  { -a } -> std::same_as<C>;
  { a.divide(b) } -> std::same_as<std::optional<C>>;
  { a.to_string() } -> std::same_as<std::string>;
  { a.is_atomic() } -> std::convertible_to<bool>;
};

/// Renders `coeff*body` in the printed style: unit coefficients are elided and
/// compound coefficients are parenthesised.
template <Coefficient C>
std::string format_term(const C& coeff, const std::string& body) {
  if (coeff == C::one()) return body;
  if (coeff == -C::one()) return "-" + body;
  if (coeff.is_atomic()) return coeff.to_string() + "*" + body;
  return "(" + coeff.to_string() + ")*" + body;
}

/// Joins already formatted terms with " + " / " - ".
std::string join_terms(const std::vector<std::string>& terms);

}  // namespace multibasis
