#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multibasis/coefficient.hpp"
#include "multibasis/exponent.hpp"

namespace multibasis {

class VariableCountMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SubstitutionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// How a monomial is rendered: `x[1, 2]` for the monomial basis, `x(1, 2)`
/// for ambient-space bases and basis expansions.
enum class Brackets { Square, Round };

/// Sparse Laurent polynomial in `nvars` variables over the coefficient ring C.
///
/// Terms are kept in lexicographic order of their exponent vectors and never
/// hold a zero coefficient. The variable count is part of the value: binary
/// operations on polynomials with different counts throw
/// VariableCountMismatch.
template <Coefficient C>
class Polynomial {
 public:
  using Coeff = C;
  using TermMap = std::map<ExponentVector, C>;

  explicit Polynomial(std::size_t nvars = 1) : nvars_(nvars) {
    if (nvars == 0) throw std::invalid_argument("a polynomial needs at least one variable");
  }

  static Polynomial monomial(ExponentVector v, C c = C::one()) {
    Polynomial p(v.size());
    if (!c.is_zero()) p.terms_.emplace(std::move(v), std::move(c));
    return p;
  }
  static Polynomial constant(std::size_t nvars, C c) { return monomial(ExponentVector(nvars), std::move(c)); }
  static Polynomial one(std::size_t nvars) { return constant(nvars, C::one()); }
  /// The variable x_i, 1-based.
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    if (i == 0 || i > nvars) throw std::out_of_range("variable index out of range");
    return monomial(unit_vector(nvars, i));
  }
  /// Sum of coeff * x^v; the variable count is the longest vector, shorter
  /// vectors are padded with zeros.
  static Polynomial from_terms(const std::vector<std::pair<std::vector<int>, C>>& terms) {
    std::size_t n = 1;
    for (const auto& [v, c] : terms) n = std::max(n, v.size());
    Polynomial p(n);
    for (const auto& [v, c] : terms) p.add_term(ExponentVector(v).resized(n), c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  C coefficient(const ExponentVector& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? C::zero() : it->second;
  }

  /// Adds c*x^v in place, dropping the term if it cancels.
  void add_term(const ExponentVector& v, const C& c) {
    if (v.size() != nvars_) throw VariableCountMismatch("exponent vector length does not match variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(v, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& [v, c] : p.terms_) c = -c;
    return p;
  }
  Polynomial& operator+=(const Polynomial& o) {
    check_same(o);
    for (const auto& [v, c] : o.terms_) add_term(v, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_same(o);
    for (const auto& [v, c] : o.terms_) add_term(v, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    Polynomial out(a.nvars_);
    for (const auto& [va, ca] : a.terms_)
      for (const auto& [vb, cb] : b.terms_) out.add_term(va + vb, ca * cb);
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const C& s) const {
    Polynomial p(nvars_);
    if (s.is_zero()) return p;
    for (const auto& [v, c] : terms_) p.add_term(v, c * s);
    return p;
  }
  /// Multiplication by the monomial x^shift.
  Polynomial shifted(const ExponentVector& shift) const {
    Polynomial p(nvars_);
    for (const auto& [v, c] : terms_) p.terms_.emplace(v + shift, c);
    return p;
  }

  Polynomial pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power of a polynomial; use subs_var for Laurent inverses");
    Polynomial result = one(nvars_), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Pads every exponent vector with zeros, or truncates when every dropped
  /// entry is zero.
  Polynomial change_nb_variables(std::size_t m) const {
    Polynomial p(m);
    for (const auto& [v, c] : terms_) {
      for (std::size_t i = m; i < v.size(); ++i)
        if (v[i] != 0)
          throw VariableCountMismatch("cannot drop variable x" + std::to_string(i + 1) +
                                      " which occurs with exponent " + std::to_string(v[i]));
      p.terms_.emplace(v.resized(m), c);
    }
    return p;
  }

  /// Applies f to every exponent vector; f must be injective on the support
  /// or the colliding coefficients are summed.
  template <class F>
  Polynomial map_exponents(F&& f) const {
    Polynomial p(nvars_);
    for (const auto& [v, c] : terms_) p.add_term(f(v), c);
    return p;
  }

  template <class F>
  Polynomial map_coefficients(F&& f) const {
    Polynomial p(nvars_);
    for (const auto& [v, c] : terms_) p.add_term(v, f(c));
    return p;
  }

  template <Coefficient D, class F>
  Polynomial<D> map_coefficients_to(F&& f) const {
    Polynomial<D> p(nvars_);
    for (const auto& [v, c] : terms_) p.add_term(v, f(c));
    return p;
  }

  /// Leading exponent under an order (largest, or smallest when `min`).
  const ExponentVector& leading_exponent(MonomialOrder order, bool min) const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      int c = compare(order, it->first, best->first);
      if (min ? c < 0 : c > 0) best = it;
    }
    return best->first;
  }

  /// Terms sorted by total degree, ties lexicographic.
  std::vector<std::pair<ExponentVector, C>> graded_terms() const {
    std::vector<std::pair<ExponentVector, C>> out(terms_.begin(), terms_.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return compare(MonomialOrder::Graded, a.first, b.first) < 0;
    });
    return out;
  }

  std::string to_string(Brackets br = Brackets::Square, const std::string& var = "x") const {
    std::vector<std::string> parts;
    for (const auto& [v, c] : graded_terms()) {
      std::string body = var + (br == Brackets::Square ? "[" : "(") + v.joined() + (br == Brackets::Square ? "]" : ")");
      parts.push_back(format_term(c, body));
    }
    return join_terms(parts);
  }

 private:
  void check_same(const Polynomial& o) const {
    if (o.nvars_ != nvars_)
      throw VariableCountMismatch("polynomials have " + std::to_string(nvars_) + " and " +
                                  std::to_string(o.nvars_) + " variables; use change_nb_variables");
  }

  std::size_t nvars_;
  TermMap terms_;
};

/// Exact quotient of Laurent polynomials, or nullopt when d does not divide p
/// (or when a leading coefficient is not divisible in C).
template <Coefficient C>
std::optional<Polynomial<C>> exact_divide(const Polynomial<C>& p, const Polynomial<C>& d) {
  if (p.nvars() != d.nvars()) throw VariableCountMismatch("exact_divide: variable counts differ");
  if (d.is_zero()) return std::nullopt;
  std::size_t n = p.nvars();
  if (p.is_zero()) return Polynomial<C>(n);
  auto low = [n](const Polynomial<C>& f) {
    ExponentVector m = f.begin()->first;
    for (const auto& [v, c] : f)
      for (std::size_t i = 0; i < n; ++i) m[i] = std::min(m[i], v[i]);
    return m;
  };
  ExponentVector lp = low(p), ld = low(d);
  Polynomial<C> r = p.shifted(-lp), dd = d.shifted(-ld);
  const auto& [dv, dc] = *dd.terms().rbegin();
  Polynomial<C> q(n);
  while (!r.is_zero()) {
    const auto& [rv, rc] = *r.terms().rbegin();
    ExponentVector m = rv - dv;
    if (!m.is_nonnegative()) return std::nullopt;
    auto c = rc.divide(dc);
    if (!c) return std::nullopt;
    Polynomial<C> t = Polynomial<C>::monomial(m, *c);
    q += t;
    r -= t * dd;
  }
  return q.shifted(lp - ld);
}

/// Simultaneous substitution x_i -> value_i (1-based indices).
///
/// Negative powers of a single-term value use its exact inverse. A negative
/// power of a compound value u is handled by clearing: the polynomial is
/// multiplied through by u^k, substituted, and divided exactly by u^k; if that
/// division is not exact the result would leave the Laurent ring and a
/// SubstitutionError is thrown.
template <Coefficient C>
Polynomial<C> subs_var(const Polynomial<C>& p, const std::vector<std::pair<std::size_t, Polynomial<C>>>& assignments) {
  std::size_t n = p.nvars();
  std::vector<const Polynomial<C>*> value(n, nullptr);
  for (const auto& [i, val] : assignments) {
    if (i == 0 || i > n) throw std::out_of_range("subs_var: variable index " + std::to_string(i) + " out of range");
    if (val.nvars() != n) throw VariableCountMismatch("subs_var: substituted value has a different variable count");
    value[i - 1] = &val;
  }
  // clearing exponents for compound values
  std::vector<int> clear(n, 0);
  std::vector<std::optional<Polynomial<C>>> inverse(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!value[i]) continue;
    int lo = 0;
    for (const auto& [v, c] : p) lo = std::min(lo, v[i]);
    if (lo >= 0) continue;
    const Polynomial<C>& u = *value[i];
    if (u.size() == 1) {
      const auto& [uv, uc] = *u.begin();
      auto ic = C::one().divide(uc);
      if (!ic) throw SubstitutionError("x" + std::to_string(i + 1) + "^" + std::to_string(lo) +
                                       ": substituted monomial has a non-invertible coefficient");
      inverse[i] = Polynomial<C>::monomial(-uv, *ic);
    } else if (u.is_zero()) {
      throw SubstitutionError("x" + std::to_string(i + 1) + "^" + std::to_string(lo) + ": substituted value is zero");
    } else {
      clear[i] = -lo;
    }
  }
  std::vector<std::map<int, Polynomial<C>>> power_cache(n);
  auto power = [&](std::size_t i, int e) -> const Polynomial<C>& {
    auto it = power_cache[i].find(e);
    if (it != power_cache[i].end()) return it->second;
    Polynomial<C> val = e >= 0 ? value[i]->pow(e) : inverse[i]->pow(-e);
    return power_cache[i].emplace(e, std::move(val)).first->second;
  };
  Polynomial<C> out(n);
  for (const auto& [v, c] : p) {
    ExponentVector rest = v;
    Polynomial<C> term = Polynomial<C>::constant(n, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (!value[i]) continue;
      rest[i] = 0;
      int e = v[i] + clear[i];
      if (e != 0) term *= power(i, e);
    }
    out += term.shifted(rest);
  }
  Polynomial<C> denom = Polynomial<C>::one(n);
  for (std::size_t i = 0; i < n; ++i)
    if (clear[i] > 0) denom *= value[i]->pow(clear[i]);
  if (denom == Polynomial<C>::one(n)) return out;
  auto q = exact_divide(out, denom);
  if (!q) {
    for (std::size_t i = 0; i < n; ++i)
      if (clear[i] > 0)
        throw SubstitutionError("x" + std::to_string(i + 1) + "^" + std::to_string(-clear[i]) +
                                ": negative power of a non-invertible value does not clear");
  }
  return *q;
}

}  // namespace multibasis
