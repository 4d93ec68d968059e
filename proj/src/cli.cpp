#include "multibasis/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <map>
#include <ostream>

namespace multibasis {

namespace {

using Kind = Expr::Kind;

const std::map<std::string, std::vector<std::string>>& families() {
  static const std::map<std::string, std::vector<std::string>> f = {
      {"m", {"monomial", "ambient-A", "ambient-B", "ambient-C", "ambient-D"}},
      {"x", {"monomial", "ambient-A", "ambient-B", "ambient-C", "ambient-D"}},
      {"Y", {"schubert"}},
      {"K", {"key-A", "key-B", "key-C", "key-D"}},
      {"^K", {"key-hat"}},
      {"G", {"groth-pos", "groth-neg"}},
      {"M", {"macdonald"}},
      {"YY", {"double-schubert"}},
      {"GG", {"double-groth"}},
  };
  return f;
}

bool is_double_name(const std::string& name) { return name == "double-schubert" || name == "double-groth"; }

std::optional<std::size_t> y_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'y' || name.size() > 6) return std::nullopt;
  std::size_t k = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    k = 10 * k + static_cast<std::size_t>(name[i] - '0');
  }
  if (k == 0) return std::nullopt;
  return k;
}

bool contains_double(const Expr& e, const SessionConfig& cfg) {
  if (e.kind == Kind::Element && (e.name == "YY" || e.name == "GG")) return true;
  if (e.kind == Kind::Param && y_index(e.name) &&
      std::find(cfg.params.begin(), cfg.params.end(), e.name) == cfg.params.end())
    return true;
  return (e.lhs && contains_double(*e.lhs, cfg)) || (e.rhs && contains_double(*e.rhs, cfg));
}

template <Coefficient C>
void add_common_bases(std::map<std::string, BasisPtr<C>>& t) {
  t["monomial"] = monomial_basis<C>();
  t["schubert"] = schubert_basis<C>();
  t["key-hat"] = key_hat_basis<C>();
  t["groth-pos"] = grothendieck_positive_basis<C>();
  t["groth-neg"] = grothendieck_negative_basis<C>();
  for (RootType r : {RootType::A, RootType::B, RootType::C, RootType::D}) {
    std::string letter(1, type_letter(r));
    t["ambient-" + letter] = ambient_basis<C>(r);
    t["key-" + letter] = key_basis<C>(r);
  }
}

Polynomial<ParamFraction> normalized(const Polynomial<ParamFraction>& p) { return p; }
Polynomial<YPolynomial> normalized(const Polynomial<YPolynomial>& p) { return uniform_y(p); }

std::string monomial_text(const ExponentVector& v, const std::vector<std::string>& names) {
  std::string num, den;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    int e = v[i] < 0 ? -v[i] : v[i];
    std::string f = names[i] + (e == 1 ? "" : "^" + std::to_string(e));
    std::string& side = v[i] > 0 ? num : den;
    side += (side.empty() ? "" : "*") + f;
  }
  if (den.empty()) return num;
  bool many = den.find('*') != std::string::npos;
  return (num.empty() ? "1" : num) + "/" + (many ? "(" + den + ")" : den);
}

}  // namespace

std::string named_polynomial(const Polynomial<Rational>& p, const std::vector<std::string>& names) {
  std::vector<std::string> parts;
  for (const auto& [v, c] : p.graded_terms()) {
    std::string m = monomial_text(v, names);
    if (m.empty()) {
      parts.push_back(c.to_string());
    } else if (m.rfind("1/", 0) == 0) {
      parts.push_back(c.to_string() + m.substr(1));
    } else {
      parts.push_back(format_term(c, m));
    }
  }
  return join_terms(parts);
}

std::vector<std::string> numbered(const std::string& var, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(var + std::to_string(i));
  return out;
}

namespace {

/// Coefficient in the expression grammar.
std::string coeff_text(const ParamFraction& c) { return c.to_string(); }
std::string coeff_text(const YPolynomial& c) { return named_polynomial(c.poly(), numbered("y", c.nvars())); }

}  // namespace

const std::vector<std::string>& cli_basis_names() {
  static const std::vector<std::string> names = {
      "monomial", "ambient-A", "ambient-B", "ambient-C", "ambient-D", "schubert",  "key-A",           "key-B",
      "key-C",    "key-D",     "key-hat",   "groth-pos", "groth-neg", "macdonald", "double-schubert", "double-groth"};
  return names;
}

bool needs_double_coefficients(const Expr& e, const SessionConfig& cfg, const std::string& target) {
  return contains_double(e, cfg) || is_double_name(cfg.basis) || is_double_name(target);
}

template <Coefficient C>
Polynomial<C> Value<C>::expanded(std::size_t nvars) const {
  switch (kind) {
    case Kind::Scalar: return Polynomial<C>::constant(nvars, scalar);
    case Kind::Combination: return expand_combination(*combination);
    case Kind::Polynomial: return *polynomial;
  }
  return Polynomial<C>(nvars);
}

template <Coefficient C>
struct Session<C>::Impl {
  std::optional<ParamRing> ring;
  std::map<std::string, BasisPtr<C>> bases;
  std::string missing_hint;
};

namespace {

void add_specific(std::map<std::string, BasisPtr<ParamFraction>>& t, const ParamRing& ring, std::string& hint) {
  if (ring.has("t1") && ring.has("t2") && ring.has("q"))
    t["macdonald"] = macdonald_basis(ring);
  else
    hint = "the macdonald basis needs --params t1,t2,q";
}

void add_specific(std::map<std::string, BasisPtr<YPolynomial>>& t) {
  t["double-schubert"] = double_schubert_basis();
  t["double-groth"] = double_grothendieck_basis();
}

}  // namespace

template <Coefficient C>
Session<C>::Session(SessionConfig cfg) : cfg_(std::move(cfg)) {
  auto impl = std::make_shared<Impl>();
  add_common_bases(impl->bases);
  if constexpr (std::is_same_v<C, ParamFraction>) {
    impl->ring.emplace(cfg_.params);
    add_specific(impl->bases, *impl->ring, impl->missing_hint);
  } else {
    if (!cfg_.params.empty()) throw EvalError("parameters cannot be combined with the double bases");
    add_specific(impl->bases);
    impl->missing_hint = "the macdonald basis is not available with y-coefficients";
  }
  if (!cfg_.basis.empty() && std::find(cli_basis_names().begin(), cli_basis_names().end(), cfg_.basis) ==
                                 cli_basis_names().end())
    throw EvalError("unknown basis '" + cfg_.basis + "'");
  impl_ = impl;
}

template <Coefficient C>
BasisPtr<C> Session<C>::basis(const std::string& name) const {
  auto it = impl_->bases.find(name);
  if (it != impl_->bases.end()) return it->second;
  if (name == "macdonald") throw EvalError(impl_->missing_hint);
  if (is_double_name(name)) throw EvalError("basis " + name + " needs y-coefficients");
  throw EvalError("unknown basis '" + name + "'");
}

template <Coefficient C>
std::string Session<C>::cli_name(const BasisPtr<C>& b) const {
  for (const auto& [n, p] : impl_->bases)
    if (p == b) return n;
  return b->name();
}

template <Coefficient C>
C Session<C>::symbol(const std::string& name) const {
  if constexpr (std::is_same_v<C, ParamFraction>) {
    if (!impl_->ring->has(name)) throw EvalError("parameter '" + name + "' is not declared (use --params)");
    return impl_->ring->param(name);
  } else {
    auto k = y_index(name);
    if (!k) throw EvalError("unknown symbol '" + name + "'; with y-coefficients only y1, y2, ... are defined");
    return YPolynomial::variable(*k, *k);
  }
}

template <Coefficient C>
std::size_t Session<C>::nvars_for(const Expr& e) const {
  std::size_t longest = max_vector_length(e);
  if (cfg_.nvars == 0) return std::max<std::size_t>(longest, 1);
  if (longest > cfg_.nvars)
    throw EvalError("a vector of length " + std::to_string(longest) + " does not fit --nvars " +
                    std::to_string(cfg_.nvars));
  return cfg_.nvars;
}

namespace {

template <Coefficient C>
struct Evaluator {
  const Session<C>& s;
  std::size_t n;

  using V = Value<C>;

  static V scalar(C c) {
    V v;
    v.scalar = std::move(c);
    return v;
  }
  static V poly(Polynomial<C> p) {
    V v;
    v.kind = V::Kind::Polynomial;
    v.polynomial = std::move(p);
    return v;
  }
  static V comb(BasisExpansion<C> e) {
    V v;
    v.kind = V::Kind::Combination;
    v.combination = std::move(e);
    return v;
  }

  static bool monomial_family(const BasisPtr<C>& b) { return b->family() == "monomial"; }

  BasisPtr<C> resolve(const std::string& prefix) const {
    auto it = families().find(prefix);
    if (it == families().end()) throw EvalError("unknown basis prefix '" + prefix + "'");
    const auto& members = it->second;
    const std::string& wanted = s.config().basis;
    if (std::find(members.begin(), members.end(), wanted) != members.end()) return s.basis(wanted);
    if (prefix == "K" && s.config().type) return s.basis(std::string("key-") + type_letter(*s.config().type));
    return s.basis(members.front());
  }

  V add(const V& a, const V& b, bool subtract) const {
    C sign = subtract ? -C::one() : C::one();
    if (a.kind == V::Kind::Scalar && b.kind == V::Kind::Scalar) return scalar(a.scalar + sign * b.scalar);
    if (a.kind == V::Kind::Combination && b.kind == V::Kind::Combination &&
        a.combination->basis() == b.combination->basis())
      return comb(*a.combination + b.combination->scaled(sign));
    for (const V* c : {&a, &b}) {
      const V* other = c == &a ? &b : &a;
      if (c->kind == V::Kind::Combination && other->kind == V::Kind::Scalar && monomial_family(c->combination->basis())) {
        BasisExpansion<C> e = *c->combination;
        if (c == &b) e = e.scaled(sign);
        e.add_term(ExponentVector(n), c == &a ? sign * b.scalar : a.scalar);
        return comb(std::move(e));
      }
    }
    return poly(a.expanded(n) + b.expanded(n).scaled(sign));
  }

  V mul(const V& a, const V& b) const {
    if (a.kind == V::Kind::Scalar && b.kind == V::Kind::Scalar) return scalar(a.scalar * b.scalar);
    if (a.kind == V::Kind::Scalar || b.kind == V::Kind::Scalar) {
      const V& s_ = a.kind == V::Kind::Scalar ? a : b;
      const V& o = a.kind == V::Kind::Scalar ? b : a;
      if (o.kind == V::Kind::Combination) return comb(o.combination->scaled(s_.scalar));
      return poly(o.polynomial->scaled(s_.scalar));
    }
    Polynomial<C> product = a.expanded(n) * b.expanded(n);
    if (a.kind == V::Kind::Combination && b.kind == V::Kind::Combination &&
        a.combination->basis() == b.combination->basis() && monomial_family(a.combination->basis()))
      return comb(to_basis(a.combination->basis(), product));
    return poly(std::move(product));
  }

  V eval(const Expr& e) const {
    try {
      return eval_node(e);
    } catch (const EvalError&) {
      throw;
    } catch (const std::exception& ex) {
      throw EvalError("in '" + print_expression(e) + "': " + ex.what());
    }
  }

  V eval_node(const Expr& e) const {
    switch (e.kind) {
      case Kind::Number: return scalar(C::from_rational(e.number));
      case Kind::Param: return scalar(s.symbol(e.name));
      case Kind::Element: {
        BasisPtr<C> b = resolve(e.name);
        std::vector<int> v = e.vector;
        v.resize(n, 0);
        return comb(BasisExpansion<C>::element(b, ExponentVector(std::move(v))));
      }
      case Kind::Neg: return mul(scalar(-C::one()), eval(*e.lhs));
      case Kind::Add: return add(eval(*e.lhs), eval(*e.rhs), false);
      case Kind::Sub: return add(eval(*e.lhs), eval(*e.rhs), true);
      case Kind::Mul: return mul(eval(*e.lhs), eval(*e.rhs));
      case Kind::Div: {
        V num = eval(*e.lhs), den = eval(*e.rhs);
        if (den.kind != V::Kind::Scalar) throw EvalError("in '" + print_expression(e) + "': only division by scalars is supported");
        if (den.scalar.is_zero()) throw DivisionByZero();
        if (num.kind == V::Kind::Scalar) {
          auto q = num.scalar.divide(den.scalar);
          if (!q) throw EvalError("in '" + print_expression(e) + "': the quotient is not in the coefficient ring");
          return scalar(*q);
        }
        V out;
        out.kind = num.kind;
        if (num.kind == V::Kind::Combination) {
          BasisExpansion<C> r(num.combination->basis(), n);
          for (const auto& [v, c] : *num.combination) r.add_term(v, divided(c, den.scalar, e));
          out.combination = std::move(r);
        } else {
          Polynomial<C> r(n);
          for (const auto& [v, c] : *num.polynomial) r.add_term(v, divided(c, den.scalar, e));
          out.polynomial = std::move(r);
        }
        return out;
      }
      case Kind::Pow: {
        V base = eval(*e.lhs);
        V out = scalar(C::one());
        for (int k = 0; k < e.exponent; ++k) out = k == 0 ? base : mul(out, base);
        return out;
      }
    }
    throw EvalError("unknown expression node");
  }

  static C divided(const C& c, const C& d, const Expr& e) {
    auto q = c.divide(d);
    if (!q) throw EvalError("in '" + print_expression(e) + "': a coefficient is not divisible by the divisor");
    return *q;
  }
};

}  // namespace

template <Coefficient C>
Value<C> Session<C>::eval(const Expr& e) const {
  Evaluator<C> ev{*this, nvars_for(e)};
  return ev.eval(e);
}

template struct Value<ParamFraction>;
template struct Value<YPolynomial>;
template class Session<ParamFraction>;
template class Session<YPolynomial>;

// ---------------------------------------------------------------------------
// Commands

namespace {

struct Options {
  std::string command;
  std::string expression;
  std::string to;
  std::string op;
  std::size_t index = 0;
  std::string type;
  std::string params_list;
  std::vector<std::string> params;
  std::string format = "text";
  std::size_t nvars = 0;
  std::string basis;
  std::string permutation;
  std::string variables = "x1,x2,x3";
  std::string alphabets = "x1,x2;x1,x3;x2,x3";
  std::string indices = "0,0;0,1;1,1";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

SessionConfig make_config(const Options& o) {
  SessionConfig cfg;
  cfg.params = o.params;
  cfg.nvars = o.nvars;
  if (!o.type.empty()) cfg.type = parse_root_type(o.type);
  cfg.basis = o.basis;
  cfg.format = o.format == "structured" ? OutputFormat::Structured : OutputFormat::Text;
  return cfg;
}

using json = nlohmann::json;

template <Coefficient C>
void emit_terms(std::ostream& out, const Session<C>& s, const std::string& basis_name, std::size_t nvars,
                const std::vector<std::pair<ExponentVector, C>>& terms, const std::string& text) {
  if (s.config().format == OutputFormat::Text) {
    out << text << "\n";
    return;
  }
  json j;
  j["basis"] = basis_name;
  j["nvars"] = nvars;
  j["params"] = s.config().params;
  j["terms"] = json::array();
  for (const auto& [v, c] : terms) {
    std::vector<int> vec(v.begin(), v.end());
    j["terms"].push_back({{"vector", vec}, {"coeff", coeff_text(c)}});
  }
  out << j.dump(2) << "\n";
}

template <Coefficient C>
void emit_polynomial(std::ostream& out, const Session<C>& s, const Polynomial<C>& p, Brackets br) {
  auto terms = p.graded_terms();
  emit_terms(out, s, "monomial", p.nvars(), terms, p.to_string(br));
}

template <Coefficient C>
void emit_combination(std::ostream& out, const Session<C>& s, const BasisExpansion<C>& e) {
  std::vector<std::pair<ExponentVector, C>> terms(e.begin(), e.end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return compare(MonomialOrder::Graded, a.first, b.first) < 0; });
  std::string name = s.cli_name(e.basis());
  std::string text = name == "monomial" ? expand_combination(e).to_string(Brackets::Square) : e.to_string();
  emit_terms(out, s, name, e.nvars(), terms, text);
}

OperatorKind operator_kind(const std::string& op) {
  if (op == "dd") return OperatorKind::Newton;
  if (op == "pi") return OperatorKind::Isobaric;
  if (op == "pihat") return OperatorKind::IsobaricHat;
  if (op == "T") return OperatorKind::Hecke;
  throw UsageError("unknown operator '" + op + "'");
}

template <Coefficient C>
void run_expression_command(const Options& o, std::ostream& out) {
  Session<C> s(make_config(o));
  ExprPtr e = parse_expression(o.expression);
  std::size_t n = s.nvars_for(*e);
  Value<C> v = s.eval(*e);
  using VK = typename Value<C>::Kind;
  bool from_monomials = v.kind != VK::Combination || s.cli_name(v.combination->basis()) == "monomial";

  if (o.command == "expand") {
    emit_polynomial(out, s, v.expanded(n), from_monomials ? Brackets::Square : Brackets::Round);
    return;
  }
  if (o.command == "convert") {
    BasisPtr<C> target = s.basis(o.to);
    if (o.to == "monomial") {
      emit_polynomial(out, s, v.expanded(n), Brackets::Square);
      return;
    }
    emit_combination(out, s, to_basis(target, normalized(v.expanded(n))));
    return;
  }
  // op
  OperatorKind kind = operator_kind(o.op);
  std::optional<C> t1, t2;
  if (kind == OperatorKind::Hecke) {
    t1 = s.symbol("t1");
    t2 = s.symbol("t2");
  }
  const C* p1 = t1 ? &*t1 : nullptr;
  const C* p2 = t2 ? &*t2 : nullptr;
  if (o.index == 0) throw EvalError("operator index must be at least 1");
  if (v.kind == VK::Combination && v.combination->basis()->family() == "monomial" && v.combination->basis()->type()) {
    RootType bt = *v.combination->basis()->type();
    if (s.config().type && *s.config().type != bt)
      throw EvalError(std::string("basis ") + s.cli_name(v.combination->basis()) + " only carries operators of type " +
                      type_letter(bt));
    BasisExpansion<C> r = ambient_operator(*v.combination, kind, o.index, p1, p2);
    if (o.to.empty()) {
      emit_combination(out, s, r);
      return;
    }
    v = Value<C>();
    v.kind = VK::Combination;
    v.combination = r;
  } else {
    RootType type = s.config().type.value_or(RootType::A);
    Polynomial<C> p = v.expanded(n);
    Polynomial<C> r = apply_operator(kind, p, root_datum(type, o.index, n), p1, p2);
    if (o.to.empty()) {
      emit_polynomial(out, s, r, Brackets::Square);
      return;
    }
    v = Value<C>();
    v.kind = VK::Polynomial;
    v.polynomial = r;
  }
  if (o.to == "monomial") {
    emit_polynomial(out, s, v.expanded(n), Brackets::Square);
    return;
  }
  emit_combination(out, s, to_basis(s.basis(o.to), normalized(v.expanded(n))));
}

void run_proj_deg(const Options& o, std::ostream& out) {
  Permutation w = Permutation::parse(o.permutation);
  Rational d = proj_deg(w);
  if (o.format == "structured") {
    json j;
    j["permutation"] = w.one_line();
    j["degree"] = d.to_string();
    out << j.dump(2) << "\n";
  } else {
    out << d.to_string() << "\n";
  }
}

void run_schur_det(const Options& o, std::ostream& out) {
  std::vector<std::string> vars = split(o.variables, ',');
  std::vector<std::vector<std::string>> alphabets;
  for (const auto& a : split(o.alphabets, ';')) alphabets.push_back(split(a, ','));
  std::vector<ExponentVector> indices;
  for (const auto& item : split(o.indices, ';')) {
    std::vector<int> v;
    for (const auto& x : split(item, ',')) {
      std::size_t used = 0;
      int k = 0;
      try {
        k = std::stoi(x, &used);
      } catch (const std::exception&) {
        throw UsageError("malformed index '" + item + "'");
      }
      if (used != x.size()) throw UsageError("malformed index '" + item + "'");
      v.push_back(k);
    }
    indices.emplace_back(std::move(v));
  }
  PolynomialMatrix m = schur_matrix(vars, alphabets, indices);
  Polynomial<Rational> det = determinant(m, vars.size());
  if (o.format == "structured") {
    json j;
    j["variables"] = vars;
    j["matrix"] = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (const auto& entry : row) r.push_back(named_polynomial(entry, vars));
      j["matrix"].push_back(r);
    }
    j["determinant"] = named_polynomial(det, vars);
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& row : m) {
    out << "[";
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? ", " : "") << named_polynomial(row[k], vars);
    out << "]\n";
  }
  out << "det = " << named_polynomial(det, vars) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Polynomial bases: expansion, conversion and operators", "multibasis"};
  app.require_subcommand(1);
  auto* expand = app.add_subcommand("expand", "expand an expression into monomials");
  auto* convert = app.add_subcommand("convert", "rewrite an expression in another basis");
  auto* op = app.add_subcommand("op", "apply a divided difference or Hecke operator");
  auto* pd = app.add_subcommand("proj-deg", "projective degree of a Schubert variety");
  auto* sd = app.add_subcommand("schur-det", "Schur matrix of specialized double Schubert polynomials");

  auto names = cli_basis_names();
  for (auto* sub : {expand, convert, op}) {
    sub->add_option("expression", o.expression, "expression, e.g. \"Y[1,2,2] + Y[3,4]\"")->required();
    sub->add_option("--basis", o.basis, "basis for prefixes shared by a family (G, K, m)")
        ->check(CLI::IsMember(names));
    sub->add_option("--params", o.params_list, "coefficient parameters, e.g. t1,t2,q");
    sub->add_option("--nvars", o.nvars, "number of variables (default: longest vector)");
    sub->add_option("--type", o.type, "root system type")->check(CLI::IsMember({"A", "B", "C", "D"}));
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "structured"}));
  }
  convert->add_option("--to", o.to, "target basis")->required()->check(CLI::IsMember(names));
  op->add_option("--op", o.op, "operator")->required()->check(CLI::IsMember({"dd", "pi", "pihat", "T"}));
  op->add_option("--i", o.index, "operator index (1-based)")->required();
  op->add_option("--to", o.to, "basis of the result")->check(CLI::IsMember(names));
  pd->add_option("permutation", o.permutation, "one-line notation, e.g. 2143 or 2,1,4,3")->required();
  pd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "structured"}));
  sd->add_option("--variables", o.variables, "comma separated variable names");
  sd->add_option("--alphabets", o.alphabets, "alphabets separated by ';', letters by ','");
  sd->add_option("--indices", o.indices, "weakly increasing indices separated by ';'");
  sd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "structured"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  o.command = app.get_subcommands().front()->get_name();
  if (!o.params_list.empty()) o.params = split(o.params_list, ',');
  try {
    if (o.command == "proj-deg") {
      run_proj_deg(o, out);
    } else if (o.command == "schur-det") {
      run_schur_det(o, out);
    } else {
      ExprPtr probe = parse_expression(o.expression);
      SessionConfig cfg = make_config(o);
      if (needs_double_coefficients(*probe, cfg, o.to))
        run_expression_command<YPolynomial>(o, out);
      else
        run_expression_command<ParamFraction>(o, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidPermutation& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (...) {
    err << "error: unknown failure\n";
    return 3;
  }
  return 0;
}

}  // namespace multibasis
