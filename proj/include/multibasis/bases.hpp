#pragma once

#include <optional>
#include <string>

#include "multibasis/basis.hpp"
#include "multibasis/param.hpp"

namespace multibasis {

namespace detail {

/// Position (1-based) of the first or last i with v_i < v_{i+1}.
inline std::optional<std::size_t> find_ascent(const ExponentVector& v, AscentChoice choice) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] < v[i + 1]) {
      found = i + 1;
      if (choice == AscentChoice::First) break;
    }
  }
  return found;
}

/// (..., v_{i+1} + 1, v_i, ...)
inline ExponentVector raise_swap(ExponentVector v, std::size_t i) {
  int a = v[i - 1];
  v[i - 1] = v[i] + 1;
  v[i] = a;
  return v;
}

/// First or last simple root of the rank-n system with negative pairing.
inline std::optional<std::size_t> find_negative_root(const ExponentVector& v, RootType type, AscentChoice choice) {
  std::optional<std::size_t> found;
  std::size_t count = simple_root_count(type, v.size());
  for (std::size_t i = 1; i <= count; ++i) {
    if (pairing(v, simple_root_datum(type, i, v.size())) < 0) {
      found = i;
      if (choice == AscentChoice::First) break;
    }
  }
  return found;
}

template <Coefficient C>
StepOperator<C> simple_root_operator(OperatorKind kind, std::size_t i, RootType type) {
  return operator_step<C>(kind, i, type, true);
}

}  // namespace detail

/// tau_i(f) = d_i(f) + pi_i(f^{s_i}), the operator of the positive-exponent
/// Grothendieck recursion.
template <Coefficient C>
Polynomial<C> grothendieck_tau(const Polynomial<C>& f, std::size_t i) {
  RootDatum d = root_datum(RootType::A, i, f.nvars());
  return divided_difference(f, d) + isobaric(act_reflection(f, d), d);
}

/// Every index expands to its own monomial.
template <Coefficient C>
BasisPtr<C> monomial_basis() {
  BasisDescriptor<C> d;
  d.name = "monomial";
  d.prefix = "x";
  d.domain = IndexDomain::Integer;
  d.order = LeadOrder::LexMin;
  d.family = "monomial";
  d.rule = [](const ExponentVector& v, const RuleContext<C>&) {
    return Reduction<C>::base_case(Polynomial<C>::monomial(v));
  };
  return make_basis(std::move(d));
}

/// Monomials tagged with a root system. Operators applied through
/// ambient_operator use the simple roots of that system.
template <Coefficient C>
BasisPtr<C> ambient_basis(RootType type) {
  BasisDescriptor<C> d;
  d.name = std::string("ambient_") + type_letter(type);
  d.prefix = "x";
  d.domain = IndexDomain::Integer;
  d.order = LeadOrder::LexMin;
  d.type = type;
  d.family = "monomial";
  d.rule = [](const ExponentVector& v, const RuleContext<C>&) {
    return Reduction<C>::base_case(Polynomial<C>::monomial(v));
  };
  return make_basis(std::move(d));
}

/// Operator `kind` at simple root i of the basis's root system, result kept
/// in the same basis. Untyped bases are treated as type A.
template <Coefficient C>
BasisExpansion<C> ambient_operator(const BasisExpansion<C>& e, OperatorKind kind, std::size_t i,
                                   const C* t1 = nullptr, const C* t2 = nullptr) {
  RootType type = e.basis()->type().value_or(RootType::A);
  RootDatum d = simple_root_datum(type, i, e.nvars());
  return to_basis(e.basis(), apply_operator(kind, expand_combination(e), d, t1, t2));
}

template <Coefficient C>
BasisPtr<C> schubert_basis() {
  BasisDescriptor<C> d;
  d.name = "schubert";
  d.prefix = "Y";
  d.order = LeadOrder::LexMin;
  d.type = RootType::A;
  d.rule = [](const ExponentVector& v, const RuleContext<C>& ctx) {
    auto i = detail::find_ascent(v, ctx.choice);
    if (!i) return Reduction<C>::base_case(Polynomial<C>::monomial(v));
    return Reduction<C>::step(detail::raise_swap(v, *i), operator_step<C>(OperatorKind::Newton, *i, RootType::A));
  };
  return make_basis(std::move(d));
}

/// Demazure characters. Type A is indexed by N^n; types B, C, D by Z^n and
/// use the simple roots of the rank-n system.
template <Coefficient C>
BasisPtr<C> key_basis(RootType type = RootType::A) {
  BasisDescriptor<C> d;
  d.name = type == RootType::A ? "key" : std::string("key_") + type_letter(type);
  d.prefix = "K";
  d.domain = type == RootType::A ? IndexDomain::Natural : IndexDomain::Integer;
  d.order = LeadOrder::LexMin;
  d.type = type;
  d.family = "key";
  d.rule = [type](const ExponentVector& v, const RuleContext<C>& ctx) {
    auto i = detail::find_negative_root(v, type, ctx.choice);
    if (!i) return Reduction<C>::base_case(Polynomial<C>::monomial(v));
    RootDatum datum = simple_root_datum(type, *i, v.size());
    return Reduction<C>::step(reflect(v, datum), detail::simple_root_operator<C>(OperatorKind::Isobaric, *i, type));
  };
  return make_basis(std::move(d));
}

template <Coefficient C>
BasisPtr<C> key_hat_basis() {
  BasisDescriptor<C> d;
  d.name = "key_hat";
  d.prefix = "^K";
  d.order = LeadOrder::LexMin;
  d.type = RootType::A;
  d.rule = [](const ExponentVector& v, const RuleContext<C>& ctx) {
    auto i = detail::find_negative_root(v, RootType::A, ctx.choice);
    if (!i) return Reduction<C>::base_case(Polynomial<C>::monomial(v));
    RootDatum datum = simple_root_datum(RootType::A, *i, v.size());
    return Reduction<C>::step(reflect(v, datum),
                              detail::simple_root_operator<C>(OperatorKind::IsobaricHat, *i, RootType::A));
  };
  return make_basis(std::move(d));
}

/// Grothendieck polynomials in x_i^{-1}; dominant case prod (1 - x_i^{-1})^{v_i}.
/// Only expansion is offered.
template <Coefficient C>
BasisPtr<C> grothendieck_negative_basis() {
  BasisDescriptor<C> d;
  d.name = "grothendieck_negative";
  d.prefix = "G";
  d.order = LeadOrder::LexMin;
  d.type = RootType::A;
  d.family = "grothendieck";
  d.invertible = false;
  d.rule = [](const ExponentVector& v, const RuleContext<C>& ctx) {
    auto i = detail::find_ascent(v, ctx.choice);
    if (!i) {
      std::size_t n = v.size();
      Polynomial<C> p = Polynomial<C>::one(n);
      for (std::size_t k = 1; k <= n; ++k)
        p *= (Polynomial<C>::one(n) - Polynomial<C>::monomial(-unit_vector(n, k))).pow(v[k - 1]);
      return Reduction<C>::base_case(std::move(p));
    }
    return Reduction<C>::step(detail::raise_swap(v, *i), operator_step<C>(OperatorKind::Isobaric, *i, RootType::A));
  };
  return make_basis(std::move(d));
}

/// Grothendieck polynomials after x_i -> 1 - x_i^{-1}: dominant case x^v,
/// step operator tau_i.
template <Coefficient C>
BasisPtr<C> grothendieck_positive_basis() {
  BasisDescriptor<C> d;
  d.name = "grothendieck_positive";
  d.prefix = "G";
  d.order = LeadOrder::GradedMinLexMin;
  d.type = RootType::A;
  d.family = "grothendieck";
  d.rule = [](const ExponentVector& v, const RuleContext<C>& ctx) {
    auto i = detail::find_ascent(v, ctx.choice);
    if (!i) return Reduction<C>::base_case(Polynomial<C>::monomial(v));
    std::size_t idx = *i;
    StepOperator<C> tau{"tau" + std::to_string(idx), [idx](const Polynomial<C>& f) { return grothendieck_tau(f, idx); }};
    return Reduction<C>::step(detail::raise_swap(v, idx), std::move(tau));
  };
  return make_basis(std::move(d));
}

/// Conventions of the nonsymmetric Macdonald recursion, fixed by calibration
/// against the two printed n = 2 fixtures and applied unchanged for every n.
///
/// Raising: for v weakly increasing with v_n >= 1 and w = (v_n - 1, v_1, ..., v_{n-1}),
///   M_v = (x_n + q^k t2) * M_w(q^a x_n, q^b x_1, ..., q^b x_{n-1}).
/// Exchange: for a descent v_i > v_{i+1} and w = s_i v,
///   M_v = (T_i - (t1 + t2) / (1 - r)) M_w,  r = e_{i+1}(w) / e_i(w),
/// where e_j(w) = q^{w_j} tau^{-k_j}, tau = -t1/t2 and
/// k_j = #{l < j : w_l >= w_j} + #{l > j : w_l > w_j}.
struct MacdonaldConvention {
  int last_shift = 0;       ///< a
  int rest_shift = -1;      ///< b
  int constant_qpower = 0;  ///< k
};

/// Nonsymmetric Macdonald basis over Q(t1, t2, q). The ring must declare the
/// three parameters. Raising steps are taken only from weakly increasing
/// indices; AscentChoice picks the first or the last descent for exchanges.
BasisPtr<ParamFraction> macdonald_basis(const ParamRing& ring, MacdonaldConvention conv = {});

/// Raising operator of the recursion, exposed for tests.
Polynomial<ParamFraction> macdonald_raise(const Polynomial<ParamFraction>& f, const ParamFraction& q,
                                          const ParamFraction& t2, const MacdonaldConvention& conv);

}  // namespace multibasis
