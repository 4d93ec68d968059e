#include "multibasis/param.hpp"

#include <algorithm>
#include <cstdint>
#include <cctype>
#include <numeric>
#include <set>

namespace multibasis {

ParamSpace::ParamSpace(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])))
      throw std::invalid_argument("invalid parameter name '" + n + "'");
    for (char ch : n)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
        throw std::invalid_argument("invalid parameter name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate parameter name '" + n + "'");
  }
}

std::optional<std::size_t> ParamSpace::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

// ---------------------------------------------------------------------------
// ParamPolynomial

bool ParamPolynomial::GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

ParamPolynomial::ParamPolynomial(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

ParamPolynomial ParamPolynomial::variable(ParamSpacePtr space, std::size_t index, int power) {
  if (!space || index >= space->size()) throw std::out_of_range("parameter index out of range");
  if (power < 0) throw std::invalid_argument("parameter polynomials have non-negative exponents");
  ParamPolynomial p;
  p.space_ = std::move(space);
  Monomial m(p.space_->size(), 0);
  m[index] = power;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

ParamPolynomial ParamPolynomial::from_terms(ParamSpacePtr space, TermMap terms) {
  ParamPolynomial p;
  p.space_ = std::move(space);
  std::size_t n = p.nparams();
  for (auto& [m, c] : terms) {
    if (m.size() != n) throw std::invalid_argument("parameter exponent length mismatch");
    for (int e : m)
      if (e < 0) throw std::invalid_argument("negative parameter exponent");
    if (!c.is_zero()) p.terms_.emplace(m, c);
  }
  return p;
}

ParamSpacePtr ParamPolynomial::common_space(const ParamSpacePtr& a, const ParamSpacePtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (*a == *b) return a;
  throw ParameterMismatch("coefficients live in different parameter rings");
}

ParamPolynomial ParamPolynomial::in_space(const ParamSpacePtr& target) const {
  if (space_ == target || !target) return *this;
  if (space_) {
    if (*space_ == *target) {
      ParamPolynomial p = *this;
      p.space_ = target;
      return p;
    }
    throw ParameterMismatch("coefficients live in different parameter rings");
  }
  ParamPolynomial p;
  p.space_ = target;
  for (const auto& [m, c] : terms_) p.terms_.emplace(Monomial(target->size(), 0), c);
  return p;
}

void ParamPolynomial::add_term(Monomial m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool ParamPolynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

Rational ParamPolynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("not a constant parameter polynomial");
  return terms_.empty() ? Rational() : terms_.begin()->second;
}

int ParamPolynomial::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& m = terms_.begin()->first;
  return std::accumulate(m.begin(), m.end(), 0);
}

int ParamPolynomial::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  if (var >= nparams()) return d;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

int ParamPolynomial::min_degree_in(std::size_t var) const {
  if (terms_.empty() || var >= nparams()) return 0;
  int d = terms_.begin()->first[var];
  for (const auto& [m, c] : terms_) d = std::min(d, m[var]);
  return d;
}

ParamPolynomial ParamPolynomial::coefficient_in(std::size_t var, int k) const {
  ParamPolynomial p;
  p.space_ = space_;
  for (const auto& [m, c] : terms_) {
    int e = var < m.size() ? m[var] : 0;
    if (e != k) continue;
    Monomial mm = m;
    if (var < mm.size()) mm[var] = 0;
    p.terms_.emplace(std::move(mm), c);
  }
  return p;
}

ParamPolynomial ParamPolynomial::shifted(const Monomial& by) const {
  if (std::all_of(by.begin(), by.end(), [](int e) { return e == 0; })) return *this;
  if (by.size() != nparams()) throw std::invalid_argument("monomial length mismatch");
  ParamPolynomial p;
  p.space_ = space_;
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    for (std::size_t i = 0; i < mm.size(); ++i) {
      mm[i] += by[i];
      if (mm[i] < 0) throw std::invalid_argument("shift would create a negative parameter exponent");
    }
    p.terms_.emplace(std::move(mm), c);
  }
  return p;
}

ParamPolynomial::Monomial ParamPolynomial::monomial_content() const {
  Monomial out(nparams(), 0);
  if (terms_.empty()) return out;
  out = terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(out[i], m[i]);
  return out;
}

Rational ParamPolynomial::rational_content() const {
  if (terms_.empty()) return Rational(1);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_class n = abs(c.numerator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_class d = c.denominator();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  Rational r(mpq_class(num_gcd, den_lcm));
  return leading_coefficient().sign() < 0 ? -r : r;
}

ParamPolynomial ParamPolynomial::operator-() const {
  ParamPolynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

ParamPolynomial& ParamPolynomial::operator+=(const ParamPolynomial& o) {
  ParamSpacePtr s = common_space(space_, o.space_);
  ParamPolynomial other = o.in_space(s);
  if (s != space_) *this = in_space(s);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ParamPolynomial& ParamPolynomial::operator-=(const ParamPolynomial& o) { return *this += -o; }

ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b) {
  ParamSpacePtr s = ParamPolynomial::common_space(a.space_, b.space_);
  ParamPolynomial la = a.in_space(s), lb = b.in_space(s);
  ParamPolynomial out;
  out.space_ = s;
  std::size_t n = out.nparams();
  for (const auto& [ma, ca] : la.terms_)
    for (const auto& [mb, cb] : lb.terms_) {
      ParamPolynomial::Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

ParamPolynomial ParamPolynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return ParamPolynomial();
  ParamPolynomial p = *this;
  for (auto& [m, v] : p.terms_) v *= c;
  return p;
}

ParamPolynomial ParamPolynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power of a parameter polynomial");
  ParamPolynomial result(1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const ParamPolynomial& a, const ParamPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.space_ == b.space_ || !a.space_ || !b.space_ || *a.space_ == *b.space_) {
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (ia->second != ib->second) return false;
      const auto& ma = ia->first;
      const auto& mb = ib->first;
      // constants without space compare equal to all-zero monomials
      bool za = std::all_of(ma.begin(), ma.end(), [](int e) { return e == 0; });
      bool zb = std::all_of(mb.begin(), mb.end(), [](int e) { return e == 0; });
      if (za != zb) return false;
      if (!za && ma != mb) return false;
    }
    return true;
  }
  return false;
}

std::optional<ParamPolynomial> ParamPolynomial::exact_quotient(const ParamPolynomial& d) const {
  if (d.is_zero()) return std::nullopt;
  ParamSpacePtr s = common_space(space_, d.space_);
  ParamPolynomial r = in_space(s), dd = d.in_space(s);
  ParamPolynomial q;
  q.space_ = s;
  if (dd.is_constant()) return r.scaled(*dd.constant_value().inverse());
  const Monomial& ld = dd.leading_monomial();
  const Rational& lc = dd.leading_coefficient();
  std::size_t n = q.nparams();
  while (!r.is_zero()) {
    Monomial m(n);
    const Monomial& lr = r.leading_monomial();
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = lr[i] - ld[i];
      if (m[i] < 0) return std::nullopt;
    }
    Rational c = r.leading_coefficient() / lc;
    for (const auto& [md, cd] : dd.terms_) {
      Monomial mm(n);
      for (std::size_t i = 0; i < n; ++i) mm[i] = md[i] + m[i];
      r.add_term(std::move(mm), -(c * cd));
    }
    q.add_term(std::move(m), c);
  }
  return q;
}

std::string ParamPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += space_->name(i);
      if (m[i] != 1) mono += "^" + std::to_string(m[i]);
    }
    std::string t;
    if (mono.empty())
      t = c.to_string();
    else if (c.is_one())
      t = mono;
    else if (c == Rational(-1))
      t = "-" + mono;
    else
      t = c.to_string() + "*" + mono;
    parts.push_back(t);
  }
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i)
    out += (parts[i][0] == '-' ? "" : "+") + parts[i];
  return out;
}

// ---------------------------------------------------------------------------
// gcd

namespace {

ParamPolynomial normalized(const ParamPolynomial& p) {
  if (p.is_zero()) return p;
  return p.scaled(*p.rational_content().inverse());
}

ParamPolynomial primitive_gcd(const ParamPolynomial& a, const ParamPolynomial& b);

ParamPolynomial content_in(const ParamPolynomial& a, std::size_t var) {
  ParamPolynomial g;
  int lo = a.min_degree_in(var), hi = a.degree_in(var);
  for (int k = hi; k >= lo; --k) {
    ParamPolynomial c = a.coefficient_in(var, k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalized(c) : primitive_gcd(g, c);
    if (g.is_constant()) return ParamPolynomial(1);
  }
  return g;
}

ParamPolynomial primitive_part(const ParamPolynomial& a, std::size_t var) {
  ParamPolynomial c = content_in(a, var);
  return normalized(*a.exact_quotient(c));
}

int highest_var(const ParamPolynomial& a) {
  for (std::size_t v = a.nparams(); v-- > 0;)
    if (a.degree_in(v) > 0) return static_cast<int>(v);
  return -1;
}

// gcd of two nonzero polynomials with no monomial content assumption
ParamPolynomial primitive_gcd(const ParamPolynomial& a, const ParamPolynomial& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) return ParamPolynomial(1);
  if (auto q = a.exact_quotient(b)) return normalized(b);
  if (auto q = b.exact_quotient(a)) return normalized(a);
  int va = highest_var(a), vb = highest_var(b);
  int v = std::max(va, vb);
  auto var = static_cast<std::size_t>(v);
  if (a.degree_in(var) == 0) return primitive_gcd(a, content_in(b, var));
  if (b.degree_in(var) == 0) return primitive_gcd(content_in(a, var), b);
  ParamPolynomial ca = content_in(a, var), cb = content_in(b, var);
  ParamPolynomial c = primitive_gcd(ca, cb);
  ParamPolynomial pa = normalized(*a.exact_quotient(ca));
  ParamPolynomial pb = normalized(*b.exact_quotient(cb));
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    ParamPolynomial r = pseudo_remainder(pa, pb, var);
    pa = pb;
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      pa = ParamPolynomial(1);
      break;
    }
    pb = primitive_part(r, var);
  }
  if (!pa.is_constant()) pa = primitive_part(pa, var);
  return normalized(c * pa);
}

// Arithmetic modulo a prime, used for a quick coprimality certificate.
constexpr std::uint64_t kPrime = 2147483647ULL;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) { return a * b % kPrime; }

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mod_mul(a, a))
    if (e & 1) r = mod_mul(r, a);
  return r;
}

std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kPrime - 2); }

std::optional<std::uint64_t> mod_value(const Rational& c) {
  std::uint64_t n = mpz_fdiv_ui(c.raw().get_num_mpz_t(), kPrime);
  std::uint64_t d = mpz_fdiv_ui(c.raw().get_den_mpz_t(), kPrime);
  if (d == 0) return std::nullopt;
  return mod_mul(n, mod_inv(d));
}

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// a restricted to one parameter, the others evaluated at fixed points
std::optional<ModPoly> restrict_mod(const ParamPolynomial& a, std::size_t var) {
  ModPoly out(static_cast<std::size_t>(a.degree_in(var)) + 1, 0);
  for (const auto& [m, c] : a.terms()) {
    auto v = mod_value(c);
    if (!v) return std::nullopt;
    std::uint64_t x = *v;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != var && m[j]) x = mod_mul(x, mod_pow(1009 + 7919 * j, static_cast<std::uint64_t>(m[j])));
    std::size_t k = var < m.size() ? static_cast<std::size_t>(m[var]) : 0;
    out[k] = (out[k] + x) % kPrime;
  }
  return out;
}

std::size_t mod_gcd_degree(ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    std::uint64_t inv = mod_inv(b.back());
    while (a.size() >= b.size()) {
      std::uint64_t f = mod_mul(a.back(), inv);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[i + shift] = (a[i + shift] + kPrime - mod_mul(f, b[i])) % kPrime;
      trim(a);
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// True only when a and b certainly have no non-constant common factor.
// A common factor depending on a parameter survives in the restriction as
// long as one operand keeps its degree there.
bool certainly_coprime(const ParamPolynomial& a, const ParamPolynomial& b) {
  std::size_t n = std::max(a.nparams(), b.nparams());
  for (std::size_t var = 0; var < n; ++var) {
    int da = a.degree_in(var), db = b.degree_in(var);
    if (da == 0 || db == 0) continue;
    auto ra = restrict_mod(a, var), rb = restrict_mod(b, var);
    if (!ra || !rb) return false;
    bool kept = ra->back() != 0 || rb->back() != 0;
    if (!kept || mod_gcd_degree(*ra, *rb) != 0) return false;
  }
  return true;
}

}  // namespace

ParamPolynomial pseudo_remainder(const ParamPolynomial& a, const ParamPolynomial& b, std::size_t var) {
  if (b.is_zero()) throw DivisionByZero();
  int db = b.degree_in(var);
  ParamPolynomial lb = b.coefficient_in(var, db);
  ParamPolynomial r = a;
  std::size_t n = std::max(a.nparams(), b.nparams());
  while (!r.is_zero() && r.degree_in(var) >= db) {
    int dr = r.degree_in(var);
    ParamPolynomial lr = r.coefficient_in(var, dr);
    ParamPolynomial::Monomial shift(n, 0);
    shift[var] = dr - db;
    ParamPolynomial bs = b * lr;
    r = r * lb - bs.shifted(shift);
    if (!r.is_zero()) r = normalized(r);
  }
  return r;
}

ParamPolynomial gcd(const ParamPolynomial& a, const ParamPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return ParamPolynomial();
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  ParamSpacePtr s = ParamPolynomial::common_space(a.space(), b.space());
  ParamPolynomial la = a.in_space(s), lb = b.in_space(s);
  auto ma = la.monomial_content(), mb = lb.monomial_content();
  std::size_t n = std::max(ma.size(), mb.size());
  ma.resize(n, 0);
  mb.resize(n, 0);
  ParamPolynomial::Monomial common(n), na(n), nb(n);
  for (std::size_t i = 0; i < n; ++i) {
    common[i] = std::min(ma[i], mb[i]);
    na[i] = -ma[i];
    nb[i] = -mb[i];
  }
  ParamPolynomial pa = la.shifted(na), pb = lb.shifted(nb);
  if (certainly_coprime(pa, pb)) return ParamPolynomial(1).in_space(s).shifted(common);
  ParamPolynomial g = primitive_gcd(pa, pb).in_space(s);
  return g.shifted(common);
}

// ---------------------------------------------------------------------------
// ParamFraction

namespace {

void strip_light(ParamPolynomial& num, ParamPolynomial& den) {
  ParamSpacePtr s = ParamPolynomial::common_space(num.space(), den.space());
  num = num.in_space(s);
  den = den.in_space(s);
  auto mn = num.monomial_content(), md = den.monomial_content();
  if (!mn.empty() && mn.size() == md.size()) {
    ParamPolynomial::Monomial common(mn.size());
    bool any = false;
    for (std::size_t i = 0; i < mn.size(); ++i) {
      common[i] = -std::min(mn[i], md[i]);
      any = any || common[i] != 0;
    }
    if (any) {
      num = num.shifted(common);
      den = den.shifted(common);
    }
  }
  Rational c = den.rational_content();
  if (!c.is_one()) {
    Rational inv = *c.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
}

}  // namespace

ParamFraction::ParamFraction(ParamPolynomial num, ParamPolynomial den, bool full_reduce)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    num_ = ParamPolynomial();
    den_ = ParamPolynomial(1);
    return;
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(*den_.constant_value().inverse());
    den_ = ParamPolynomial(1);
    return;
  }
  if (full_reduce && !den_.is_monomial()) {
    ParamPolynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.exact_quotient(g);
      den_ = *den_.exact_quotient(g);
    }
  }
  strip_light(num_, den_);
  if (den_.is_constant()) {
    num_ = num_.scaled(*den_.constant_value().inverse());
    den_ = ParamPolynomial(1);
  }
}

ParamFraction normalize_light(const ParamPolynomial& num, const ParamPolynomial& den) {
  return ParamFraction(num, den, false);
}

ParamSpacePtr ParamFraction::space() const { return num_.space() ? num_.space() : den_.space(); }

ParamFraction ParamFraction::operator-() const {
  ParamFraction f = *this;
  f.num_ = -f.num_;
  return f;
}

ParamFraction operator+(const ParamFraction& a, const ParamFraction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return ParamFraction(a.num_ + b.num_, a.den_);
  if (a.den_.is_constant()) return ParamFraction(a.num_ * b.den_ + b.num_, b.den_, false);
  if (b.den_.is_constant()) return ParamFraction(a.num_ + b.num_ * a.den_, a.den_, false);
  // only the common factor of the denominators can cancel
  ParamPolynomial d = gcd(a.den_, b.den_);
  if (d.is_constant()) return ParamFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, false);
  ParamPolynomial ad = *a.den_.exact_quotient(d), bd = *b.den_.exact_quotient(d);
  ParamPolynomial num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return ParamFraction();
  ParamPolynomial g = gcd(num, d);
  if (!g.is_constant()) {
    num = *num.exact_quotient(g);
    d = *d.exact_quotient(g);
  }
  return ParamFraction(std::move(num), ad * bd * d, false);
}

ParamFraction operator-(const ParamFraction& a, const ParamFraction& b) { return a + (-b); }

ParamFraction operator*(const ParamFraction& a, const ParamFraction& b) {
  if (a.is_zero() || b.is_zero()) return ParamFraction();
  if (a.den_.is_constant() && b.den_.is_constant()) return ParamFraction(a.num_ * b.num_, a.den_ * b.den_);
  // cross-cancel first to keep the operands small
  ParamPolynomial g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  ParamPolynomial an = *a.num_.exact_quotient(g1), bd = *b.den_.exact_quotient(g1);
  ParamPolynomial bn = *b.num_.exact_quotient(g2), ad = *a.den_.exact_quotient(g2);
  return ParamFraction(an * bn, ad * bd, false);
}

ParamFraction operator/(const ParamFraction& a, const ParamFraction& b) {
  auto inv = b.inverse();
  if (!inv) throw DivisionByZero();
  return a * *inv;
}

bool operator==(const ParamFraction& a, const ParamFraction& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::optional<ParamFraction> ParamFraction::inverse() const {
  if (is_zero()) return std::nullopt;
  return ParamFraction(den_, num_, false);
}

std::optional<ParamFraction> ParamFraction::divide(const ParamFraction& d) const {
  if (d.is_zero()) return std::nullopt;
  return *this / d;
}

ParamFraction ParamFraction::pow(int e) const {
  if (e < 0) {
    auto inv = inverse();
    if (!inv) throw DivisionByZero();
    return inv->pow(-e);
  }
  return ParamFraction(num_.pow(e), den_.pow(e), false);
}

std::string ParamFraction::to_string() const {
  if (den_.is_constant() && den_.constant_value().is_one()) return num_.to_string();
  auto wrap = [](const ParamPolynomial& p) {
    std::string s = p.to_string();
    return p.terms().size() == 1 ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

bool ParamFraction::is_atomic() const {
  if (num_.terms().size() != 1) return false;
  if (is_constant()) return true;
  if (num_.leading_coefficient().sign() < 0) return false;
  return den_.terms().size() == 1;
}

// ---------------------------------------------------------------------------

ParamRing::ParamRing(std::vector<std::string> names)
    : space_(std::make_shared<const ParamSpace>(std::move(names))) {}

ParamFraction ParamRing::param(const std::string& name) const {
  auto idx = space_->index_of(name);
  if (!idx) throw UnknownParameter("parameter '" + name + "' is not declared in this coefficient ring");
  return ParamFraction(ParamPolynomial::variable(space_, *idx));
}

}  // namespace multibasis
