#include "multibasis/double.hpp"

#include <algorithm>

namespace multibasis {

YPolynomial::YPolynomial(const Rational& c) : p_(Polynomial<Rational>::constant(1, c)) {}

YPolynomial YPolynomial::padded(std::size_t ny) const {
  if (ny <= p_.nvars()) return *this;
  return YPolynomial(p_.change_nb_variables(ny));
}

bool YPolynomial::is_constant() const {
  if (p_.is_zero()) return true;
  return p_.size() == 1 && p_.begin()->first.is_zero();
}

Rational YPolynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("y-polynomial " + to_string() + " is not a constant");
  return p_.is_zero() ? Rational(0) : p_.begin()->second;
}

Rational YPolynomial::specialize(const Rational& value) const {
  Rational out(0);
  for (const auto& [v, c] : p_) {
    Rational t = c;
    for (int e : v) {
      if (e < 0 && value.is_zero()) throw DivisionByZero();
      t *= value.pow(e);
    }
    out += t;
  }
  return out;
}

namespace {

std::pair<Polynomial<Rational>, Polynomial<Rational>> aligned(const YPolynomial& a, const YPolynomial& b) {
  std::size_t n = std::max(a.nvars(), b.nvars());
  return {a.padded(n).poly(), b.padded(n).poly()};
}

}  // namespace

YPolynomial operator+(const YPolynomial& a, const YPolynomial& b) {
  auto [x, y] = aligned(a, b);
  return YPolynomial(x + y);
}

YPolynomial operator-(const YPolynomial& a, const YPolynomial& b) {
  auto [x, y] = aligned(a, b);
  return YPolynomial(x - y);
}

YPolynomial operator*(const YPolynomial& a, const YPolynomial& b) {
  auto [x, y] = aligned(a, b);
  return YPolynomial(x * y);
}

bool operator==(const YPolynomial& a, const YPolynomial& b) {
  auto [x, y] = aligned(a, b);
  return x == y;
}

std::optional<YPolynomial> YPolynomial::divide(const YPolynomial& d) const {
  if (d.is_zero()) return std::nullopt;
  if (d.is_constant()) return YPolynomial(p_.scaled(*d.constant_value().inverse()));
  auto [x, y] = aligned(*this, d);
  auto q = exact_divide(x, y);
  if (!q) return std::nullopt;
  return YPolynomial(std::move(*q));
}

std::string YPolynomial::to_string() const {
  if (is_constant()) return constant_value().to_string();
  std::string out;
  for (const auto& [v, c] : p_.graded_terms()) {
    std::string body;
    if (v.is_zero()) {
      body = c.to_string();
    } else {
      std::string vec;
      for (std::size_t i = 0; i < v.size(); ++i) vec += (i ? "," : "") + std::to_string(v[i]);
      body = format_term(c, "y(" + vec + ")");
    }
    out += (out.empty() || body[0] == '-' ? "" : "+") + body;
  }
  return out;
}

std::size_t y_nvars(const DoublePolynomial& p) {
  std::size_t n = 1;
  for (const auto& [v, c] : p) n = std::max(n, c.nvars());
  return n;
}

DoublePolynomial uniform_y(const DoublePolynomial& p, std::size_t ny) {
  if (ny == 0) ny = y_nvars(p);
  return p.map_coefficients([ny](const YPolynomial& c) { return c.padded(ny); });
}

Polynomial<Rational> specialize_y(const DoublePolynomial& p, const Rational& value) {
  Polynomial<Rational> out(p.nvars());
  for (const auto& [v, c] : p) out.add_term(v, c.specialize(value));
  return out;
}

DoublePolynomial lift_x(const Polynomial<Rational>& p) {
  return p.template map_coefficients_to<YPolynomial>([](const Rational& c) { return YPolynomial(c); });
}

DoublePolynomial swap_coeffs_elements(const DoublePolynomial& p) {
  std::size_t ny = y_nvars(p);
  DoublePolynomial out(ny);
  for (const auto& [u, c] : p) {
    YPolynomial full = c.padded(ny);
    for (const auto& [w, r] : full.poly()) out.add_term(w, YPolynomial(Polynomial<Rational>::monomial(u, r)));
  }
  return out;
}

namespace {

// The index reached from v by the raising recursion; all of its entries
// bound the y-variables needed.
int dominant_max(const ExponentVector& v) {
  ExponentVector w = v;
  while (auto i = detail::find_ascent(w, AscentChoice::First)) w = detail::raise_swap(w, *i);
  int m = 0;
  for (int x : w) m = std::max(m, x);
  return m;
}

}  // namespace

BasisPtr<YPolynomial> double_schubert_basis() {
  BasisDescriptor<YPolynomial> d;
  d.name = "double_schubert";
  d.prefix = "YY";
  d.order = LeadOrder::GradedMaxLexMin;
  d.type = RootType::A;
  d.rule = [](const ExponentVector& v, const RuleContext<YPolynomial>& ctx) {
    using R = Reduction<YPolynomial>;
    auto i = detail::find_ascent(v, ctx.choice);
    if (i) return R::step(detail::raise_swap(v, *i), operator_step<YPolynomial>(OperatorKind::Newton, *i, RootType::A));
    std::size_t n = v.size();
    std::size_t ny = static_cast<std::size_t>(std::max(1, dominant_max(v)));
    DoublePolynomial p = DoublePolynomial::one(n);
    for (std::size_t k = 1; k <= n; ++k)
      for (int j = 1; j <= v[k - 1]; ++j)
        p *= DoublePolynomial::variable(n, k) -
             DoublePolynomial::constant(n, YPolynomial::variable(ny, static_cast<std::size_t>(j)));
    return R::base_case(uniform_y(p, ny));
  };
  return make_basis(std::move(d));
}

BasisPtr<YPolynomial> double_grothendieck_basis() {
  BasisDescriptor<YPolynomial> d;
  d.name = "double_grothendieck";
  d.prefix = "GG";
  d.order = LeadOrder::LexMin;
  d.type = RootType::A;
  d.invertible = false;
  d.rule = [](const ExponentVector& v, const RuleContext<YPolynomial>& ctx) {
    using R = Reduction<YPolynomial>;
    auto i = detail::find_ascent(v, ctx.choice);
    if (i) return R::step(detail::raise_swap(v, *i), operator_step<YPolynomial>(OperatorKind::Isobaric, *i, RootType::A));
    std::size_t n = v.size();
    std::size_t ny = static_cast<std::size_t>(std::max(1, dominant_max(v)));
    DoublePolynomial p = DoublePolynomial::one(n);
    for (std::size_t k = 1; k <= n; ++k)
      for (int j = 1; j <= v[k - 1]; ++j)
        p *= DoublePolynomial::one(n) -
             DoublePolynomial::monomial(-unit_vector(n, k), YPolynomial::variable(ny, static_cast<std::size_t>(j)));
    return R::base_case(uniform_y(p, ny));
  };
  return make_basis(std::move(d));
}

// ---------------------------------------------------------------------------
// DoubleExpansion

namespace {

Polynomial<Rational> side_expand(const BasisPtr<Rational>& b, const ExponentVector& v) {
  return b ? b->expand(v) : Polynomial<Rational>::monomial(v);
}

std::vector<std::pair<ExponentVector, Rational>> side_convert(const BasisPtr<Rational>& b,
                                                              const Polynomial<Rational>& p) {
  std::vector<std::pair<ExponentVector, Rational>> out;
  if (!b) {
    for (const auto& [v, c] : p) out.emplace_back(v, c);
    return out;
  }
  for (const auto& [v, c] : to_basis(b, p)) out.emplace_back(v, c);
  return out;
}

std::string side_label(const BasisPtr<Rational>& b, const std::string& var, const ExponentVector& v, bool spaced) {
  std::string vec;
  for (std::size_t i = 0; i < v.size(); ++i) vec += (i ? (spaced ? ", " : ",") : "") + std::to_string(v[i]);
  if (!b) return var + "[" + vec + "]";
  return b->prefix() + var + "(" + vec + ")";
}

}  // namespace

DoubleExpansion::DoubleExpansion(BasisPtr<Rational> main_basis, std::size_t main_nvars, BasisPtr<Rational> coeff_basis,
                                 std::size_t coeff_nvars, std::string main_var, std::string coeff_var)
    : main_(std::move(main_basis)),
      coeff_(std::move(coeff_basis)),
      nmain_(main_nvars),
      ncoeff_(coeff_nvars),
      main_var_(std::move(main_var)),
      coeff_var_(std::move(coeff_var)) {}

DoubleExpansion DoubleExpansion::element(BasisPtr<Rational> main_basis, const ExponentVector& u,
                                         BasisPtr<Rational> coeff_basis, const ExponentVector& w) {
  DoubleExpansion e(std::move(main_basis), u.size(), std::move(coeff_basis), w.size());
  e.add_term(u, w, Rational(1));
  return e;
}

DoubleExpansion DoubleExpansion::from_polynomial(const DoublePolynomial& p) {
  std::size_t ny = y_nvars(p);
  DoubleExpansion e(nullptr, p.nvars(), nullptr, ny);
  for (const auto& [u, c] : p) {
    YPolynomial full = c.padded(ny);
    for (const auto& [w, r] : full.poly()) e.add_term(u, w, r);
  }
  return e;
}

void DoubleExpansion::add_term(const ExponentVector& u, const ExponentVector& w, const Rational& c) {
  if (u.size() != nmain_ || w.size() != ncoeff_)
    throw VariableCountMismatch("double expansion term (" + u.joined() + ") x (" + w.joined() + ") has the wrong shape");
  if (main_) main_->check_index(u);
  if (coeff_) coeff_->check_index(w);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{u, w}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DoubleExpansion DoubleExpansion::change_main_basis(const BasisPtr<Rational>& basis) const {
  std::map<ExponentVector, Polynomial<Rational>> by_coeff;
  for (const auto& [k, c] : terms_) {
    auto it = by_coeff.try_emplace(k.second, Polynomial<Rational>(nmain_)).first;
    it->second += side_expand(main_, k.first).scaled(c);
  }
  DoubleExpansion out(basis, nmain_, coeff_, ncoeff_, main_var_, coeff_var_);
  for (const auto& [w, p] : by_coeff)
    for (const auto& [u, c] : side_convert(basis, p)) out.add_term(u, w, c);
  return out;
}

DoubleExpansion DoubleExpansion::change_coeffs_bases(const BasisPtr<Rational>& basis) const {
  return swap_coeffs_elements().change_main_basis(basis).swap_coeffs_elements();
}

DoubleExpansion DoubleExpansion::swap_coeffs_elements() const {
  DoubleExpansion out(coeff_, ncoeff_, main_, nmain_, coeff_var_, main_var_);
  for (const auto& [k, c] : terms_) out.add_term(k.second, k.first, c);
  return out;
}

DoublePolynomial DoubleExpansion::to_polynomial() const {
  DoubleExpansion flat = change_main_basis(nullptr).change_coeffs_bases(nullptr);
  DoublePolynomial out(nmain_);
  for (const auto& [k, c] : flat.terms_)
    out.add_term(k.first, YPolynomial(Polynomial<Rational>::monomial(k.second, c)));
  return uniform_y(out, ncoeff_);
}

bool operator==(const DoubleExpansion& a, const DoubleExpansion& b) {
  return a.main_ == b.main_ && a.coeff_ == b.coeff_ && a.nmain_ == b.nmain_ && a.ncoeff_ == b.ncoeff_ &&
         a.main_var_ == b.main_var_ && a.terms_ == b.terms_;
}

std::string DoubleExpansion::to_string() const {
  std::map<ExponentVector, std::vector<std::pair<ExponentVector, Rational>>> grouped;
  for (const auto& [k, c] : terms_) grouped[k.first].emplace_back(k.second, c);
  std::vector<std::pair<ExponentVector, std::string>> parts;
  for (const auto& [u, coeffs] : grouped) {
    std::string inner;
    for (const auto& [w, c] : coeffs) {
      std::string t = format_term(c, side_label(coeff_, coeff_var_, w, false));
      inner += (inner.empty() || t[0] == '-' ? "" : "+") + t;
    }
    parts.emplace_back(u, "(" + inner + ")*" + side_label(main_, main_var_, u, true));
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const auto& a, const auto& b) { return compare(MonomialOrder::Graded, a.first, b.first) < 0; });
  std::vector<std::string> out;
  for (auto& [u, s] : parts) out.push_back(std::move(s));
  return join_terms(out);
}

}  // namespace multibasis
