#include "multibasis/bases.hpp"

namespace multibasis {

namespace {

// k_j = #{l < j : w_l >= w_j} + #{l > j : w_l > w_j}
int spectral_exponent(const ExponentVector& w, std::size_t j) {
  int k = 0;
  for (std::size_t l = 0; l < w.size(); ++l) {
    if (l < j && w[l] >= w[j]) ++k;
    if (l > j && w[l] > w[j]) ++k;
  }
  return k;
}

bool weakly_increasing(const ExponentVector& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] > v[i + 1]) return false;
  return true;
}

std::optional<std::size_t> find_descent(const ExponentVector& v, AscentChoice choice) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] > v[i + 1]) {
      found = i + 1;
      if (choice == AscentChoice::First) break;
    }
  }
  return found;
}

}  // namespace

Polynomial<ParamFraction> macdonald_raise(const Polynomial<ParamFraction>& f, const ParamFraction& q,
                                          const ParamFraction& t2, const MacdonaldConvention& conv) {
  std::size_t n = f.nvars();
  int a = conv.last_shift, b = conv.rest_shift;
  Polynomial<ParamFraction> moved(n);
  for (const auto& [e, c] : f) {
    // x^e evaluated at (q^a x_n, q^b x_1, ..., q^b x_{n-1})
    ExponentVector target(n);
    int qpow = a * e[0];
    for (std::size_t j = 1; j < n; ++j) {
      target[j - 1] = e[j];
      qpow += b * e[j];
    }
    target[n - 1] = e[0];
    moved.add_term(target, c * q.pow(qpow));
  }
  Polynomial<ParamFraction> factor = Polynomial<ParamFraction>::variable(n, n) + Polynomial<ParamFraction>::constant(n, t2 * q.pow(conv.constant_qpower));
  return factor * moved;
}

BasisPtr<ParamFraction> macdonald_basis(const ParamRing& ring, MacdonaldConvention conv) {
  for (const char* name : {"t1", "t2", "q"})
    if (!ring.has(name))
      throw UnknownParameter(std::string("the Macdonald basis needs parameter '") + name + "' in the coefficient ring");
  ParamFraction t1 = ring.param("t1"), t2 = ring.param("t2"), q = ring.param("q");
  ParamFraction tau = -t1 / t2;

  BasisDescriptor<ParamFraction> d;
  d.name = "macdonald";
  d.prefix = "M";
  d.order = LeadOrder::GradedDominanceMax;
  d.type = RootType::A;
  d.params = {{"t1", t1}, {"t2", t2}, {"q", q}};
  d.depth_bound = [](const ExponentVector& v) {
    std::size_t s = 0;
    for (int x : v) s += static_cast<std::size_t>(x < 0 ? -x : x);
    return 4 * (s * v.size() + v.size() * v.size());
  };
  d.rule = [=](const ExponentVector& v, const RuleContext<ParamFraction>& ctx) {
    using R = Reduction<ParamFraction>;
    std::size_t n = v.size();
    if (v.is_zero()) return R::base_case(Polynomial<ParamFraction>::one(n));
    bool can_raise = v[n - 1] >= 1 && weakly_increasing(v);
    if (can_raise) {
      ExponentVector w(n);
      w[0] = v[n - 1] - 1;
      for (std::size_t j = 1; j < n; ++j) w[j] = v[j - 1];
      StepOperator<ParamFraction> raise{"raise", [=](const Polynomial<ParamFraction>& f) {
                                           return macdonald_raise(f, q, t2, conv);
                                         }};
      return R::step(w, std::move(raise));
    }
    // v != 0 is not weakly increasing with v_n >= 1, so it has a descent
    std::size_t i = *find_descent(v, ctx.choice);
    ExponentVector w = v;
    std::swap(w[i - 1], w[i]);
    int dq = w[i] - w[i - 1];
    int dk = spectral_exponent(w, i - 1) - spectral_exponent(w, i);
    ParamFraction r = q.pow(dq) * tau.pow(dk);
    ParamFraction c = -(t1 + t2) / (ParamFraction(1) - r);
    StepOperator<ParamFraction> hecke{"T" + std::to_string(i), [=](const Polynomial<ParamFraction>& f) {
                                        return hecke_T(f, i, t1, t2);
                                      }};
    R out;
    out.steps.push_back({w, std::move(hecke), ParamFraction::one()});
    out.steps.push_back({w, identity_operator<ParamFraction>(), c});
    return out;
  };
  return make_basis(std::move(d));
}

}  // namespace multibasis
