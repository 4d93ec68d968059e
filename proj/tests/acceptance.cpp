#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "multibasis/applications.hpp"
#include "multibasis/bases.hpp"
#include "multibasis/double.hpp"
#include "multibasis/weyl.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

using QBasis = BasisPtr<Rational>;
using QExp = BasisExpansion<Rational>;

// Collects failed checks for one criterion.
struct Report {
  int checks = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

QExp E(const QBasis& b, const std::string& s) {
  auto terms = listing(s);
  QExp e(b, terms.front().first.size());
  for (const auto& [v, c] : terms) e.add_term(ExponentVector(v), c);
  return e;
}

FPoly to_frac(const QPoly& p) {
  FPoly out(p.nvars());
  for (const auto& [v, c] : p) out.add_term(v, ParamFraction(c));
  return out;
}

YPolynomial Yc(const std::string& s) { return YPolynomial(LP(s)); }

DoublePolynomial DP(std::initializer_list<std::pair<std::vector<int>, const char*>> terms) {
  DoublePolynomial p(terms.begin()->first.size());
  for (const auto& [v, c] : terms) p.add_term(ExponentVector(v), Yc(c));
  return p;
}

std::vector<ExponentVector> all_indices(std::size_t n, int lo, int hi) {
  std::vector<ExponentVector> out;
  std::vector<int> e(n, lo);
  for (;;) {
    out.emplace_back(e);
    std::size_t k = 0;
    while (k < n && e[k] == hi) e[k++] = lo;
    if (k == n) break;
    ++e[k];
  }
  return out;
}

template <Coefficient C>
bool triangular_at(const BasisPtr<C>& b, const ExponentVector& v) {
  Polynomial<C> p = b->expand(v);
  if (p.coefficient(v).is_zero()) return false;
  for (const auto& [u, c] : p)
    if (u != v && !order_before(b->order(), v, u)) return false;
  return true;
}

template <Coefficient C>
BasisExpansion<C> random_combination(Rng& rng, const BasisPtr<C>& b, int lo, int hi) {
  std::size_t n = rng.uniform(1, 3);
  BasisExpansion<C> e(b, n);
  int terms = rng.uniform(1, 3);
  for (int k = 0; k < terms; ++k) e.add_term(rng.vec(n, lo, hi), C(Rational(rng.uniform(-3, 3))));
  return e;
}

const ParamRing& mac_ring() {
  static const ParamRing ring({"t1", "t2", "q"});
  return ring;
}

void fixtures(Report& r) {
  QPoly p = LP("x(1, 1, 2) + x(2, 3, 0)");
  r.check(p * p == LP("x(2, 2, 4) + 2*x(3, 4, 2) + x(4, 6, 0)"), "square");
  r.check(divided_difference(p, 2, RootType::A) == LP("-x(1, 1, 1) + x(2, 1, 1) + x(2, 2, 0) + x(2, 0, 2)"),
          "type A divided difference");
  r.check(divided_difference(p, 2, RootType::B) ==
              LP("x(1, -1, 2) + x(1, 0, 2) + x(2, 0, 0) + x(2, -3, 0) + x(2, -2, 0) + x(2, -1, 0) + x(2, 1, 0) + "
                 "x(2, 2, 0)"),
          "type B divided difference");
  r.check(divided_difference(p, 2, RootType::C) == LP("x(1, 0, 2) + x(2, 0, 0) + x(2, -2, 0) + x(2, 2, 0)"),
          "type C divided difference");
  r.check(divided_difference(p, 2, RootType::D) ==
              LP("x(0, 0, 0) + x(-2, -2, 0) + x(-1, -1, 0) + x(1, 1, 0) + x(1, 0, 2) + x(2, 2, 0) + x(0, -1, 2)"),
          "type D divided difference");
  r.check(isobaric(p, 2) == LP("x(2, 1, 2) + x(2, 2, 1) + x(2, 3, 0) + x(2, 0, 3)"), "isobaric");

  auto mb = ambient_basis<Rational>(RootType::B);
  QExp amb = E(mb, "x(1, 1, 2) + x(2, 3, 0)");
  r.check(ambient_operator(amb, OperatorKind::Newton, 2) == E(mb, "-x(1, 1, 1) + x(2, 1, 1) + x(2, 2, 0) + x(2, 0, 2)"),
          "ambient B at index 2");
  r.check(ambient_operator(amb, OperatorKind::Newton, 3) == E(mb, "x(1, 1, 0) + x(1, 1, -2) + x(1, 1, -1) + x(1, 1, 1)"),
          "ambient B at index 3");

  auto Y = schubert_basis<Rational>();
  QPoly m = LP("x[1, 2, 4] + x[2, 3, 0]");
  QExp ys = E(Y, "Y(1, 2, 2) + Y(3, 4, 0)");
  r.check(expand_combination(ys) == LP("x(1, 2, 2) + x(2, 1, 2) + x(2, 2, 1) + x(3, 4, 0) + x(4, 3, 0)"),
          "Schubert expansion");
  r.check(to_basis(Y, m) == E(Y, "Y(1, 2, 4) - Y(1, 3, 3) - Y(1, 4, 2) - Y(2, 1, 4) + Y(2, 3, 0) + Y(2, 3, 2) + "
                                 "Y(2, 4, 1) + Y(3, 1, 3) - Y(3, 2, 0) - Y(3, 2, 2) - Y(4, 2, 1) + Y(5, 1, 1)"),
          "Schubert conversion");
  r.check(multiply_in_basis(ys, E(Y, "Y(3, 1, 2)")) ==
              E(Y, "Y(4, 3, 4) + Y(5, 2, 4) + Y(6, 5, 2) + Y(6, 6, 1) + Y(7, 4, 2) + Y(7, 5, 1)"),
          "Schubert product");

  auto K = key_basis<Rational>();
  QExp ks = E(K, "K(2, 1, 4) + K(3, 5, 1)");
  r.check(expand_combination(ks) == LP("x(2, 1, 4) + x(2, 2, 3) + x(2, 3, 2) + x(2, 4, 1) + x(3, 1, 3) + "
                                       "x(3, 2, 2) + x(3, 3, 1) + x(3, 5, 1) + x(4, 1, 2) + x(4, 2, 1) + "
                                       "x(4, 4, 1) + x(5, 3, 1)"),
          "Key expansion");
  r.check(convert(ks, Y) == E(Y, "Y(2, 1, 4) + Y(3, 5, 1) - Y(5, 1, 1)"), "Key in Schubert");
  r.check(to_basis(K, m) == E(K, "K(1, 2, 4) - K(1, 3, 3) - K(1, 4, 2) - K(2, 1, 4) + K(2, 3, 0) + K(2, 3, 2) + "
                                 "K(2, 4, 1) + K(3, 1, 3) - K(3, 2, 0) - K(3, 2, 2) + K(4, 1, 2) - K(4, 2, 1)"),
          "Key conversion");

  auto Kh = key_hat_basis<Rational>();
  QExp khs = E(Kh, "^K(2, 1, 4) + ^K(3, 5, 1)");
  r.check(expand_combination(khs) ==
              LP("x(2, 1, 4) + x(2, 2, 3) + x(2, 3, 2) + x(3, 1, 3) + x(3, 2, 2) + x(3, 5, 1) + x(4, 4, 1)"),
          "Key-hat expansion");
  r.check(convert(khs, Y) ==
              E(Y, "Y(2, 1, 4) - Y(2, 4, 1) + Y(3, 5, 1) - Y(4, 1, 2) + Y(4, 2, 1) - Y(5, 1, 1) - Y(5, 3, 1)"),
          "Key-hat in Schubert");
  r.check(to_basis(Kh, m) == E(Kh, "^K(1, 2, 4) - ^K(1, 3, 3) + ^K(2, 3, 0) + ^K(2, 3, 2)"), "Key-hat conversion");

  auto KB = key_basis<Rational>(RootType::B);
  r.check(KB->expand(V({1, 2, -2})) ==
              LP("x(1, 2, 0) + x(1, 2, -2) + x(1, 2, -1) + x(1, 2, 1) + x(1, 2, 2) + x(2, 1, 0) + x(2, 1, -2) + "
                 "x(2, 1, -1) + x(2, 1, 1) + x(2, 1, 2) + x(2, 2, 0) + x(2, 2, -1) + x(2, 2, 1)"),
          "type B Key expansion");
  r.check(to_basis(KB, LP("x[-2, 1, 1] + x[1, -1, 1]")) ==
              E(KB, "K(0, 0, 0) + K(-2, 1, 1) - K(-1, 1, 1) - K(-1, 1, 2) - K(-1, 0, 1) - 2*K(1, 0, 0) - "
                    "K(1, -2, 1) + K(1, -1, 0) + 2*K(1, -1, 1) + K(1, -1, 2) + K(1, 1, 0) - K(1, 1, -1) - "
                    "2*K(1, 0, 1) + K(0, 1, 1) + K(0, 0, 1)"),
          "type B Key conversion");

  auto Gn = grothendieck_negative_basis<Rational>();
  auto Gp = grothendieck_positive_basis<Rational>();
  QPoly gneg = expand_combination(E(Gn, "G(1, 2) + G(2, 2)"));
  QPoly gpos = expand_combination(E(Gp, "G(1, 2) + G(2, 2)"));
  r.check(gneg == LP("2*x(0, 0) + x(-2, 0) - x(-2, -1) - 3*x(-1, 0) - x(-1, -2) + 4*x(-1, -1) + x(0, -2) - "
                     "3*x(0, -1)"),
          "negative Grothendieck expansion");
  r.check(gpos == LP("x(1, 2) + x(2, 1)"), "positive Grothendieck expansion");
  std::vector<std::pair<std::size_t, QPoly>> sub;
  for (std::size_t i = 1; i <= 2; ++i) sub.emplace_back(i, QPoly::one(2) - QPoly::monomial(-unit_vector(2, i)));
  r.check(subs_var(gpos, sub) == gneg, "Grothendieck substitution bridge");

  const auto& R = mac_ring();
  auto Mac = macdonald_basis(R);
  ParamFraction t1 = R.param("t1"), t2 = R.param("t2"), q = R.param("q");
  FPoly mac(2);
  mac.add_term(V({0, 0}), t2.pow(3));
  mac.add_term(V({1, 0}), t2 * t2 / q);
  mac.add_term(V({1, 1}), (t2 * q + t2) / (q * q));
  mac.add_term(V({1, 2}), ParamFraction(1) / (q * q));
  mac.add_term(V({0, 1}), (t2 * t2 * q + t2 * t2) / q);
  mac.add_term(V({0, 2}), t2 / q);
  r.check(Mac->expand(V({1, 2})) == mac, "Macdonald expansion");
  BasisExpansion<ParamFraction> want(Mac, 2);
  want.add_term(V({0, 0}), -t1 * t2);
  want.add_term(V({1, 0}), ParamFraction(1));
  want.add_term(V({1, 1}), q);
  want.add_term(V({0, 1}), (t1 * t2 * q * q + t2 * t2 * q - t1 * t2 - t2 * t2) / (-t1 * q - t2));
  r.check(to_basis(Mac, FPoly::monomial(V({1, 1}))) == want, "Macdonald conversion");

  auto YY = double_schubert_basis();
  auto GG = double_grothendieck_basis();
  auto Yx = schubert_basis<YPolynomial>();
  DoublePolynomial yy = YY->expand(V({1, 2}));
  r.check(yy == DP({{{0, 0}, "-y(2,1,0) - y(2,0,1)"},
                    {{1, 0}, "y(1,1,0) + y(1,0,1) + y(2,0,0)"},
                    {{1, 1}, "-2*y(1,0,0) - y(0,1,0) - y(0,0,1)"},
                    {{1, 2}, "y(0,0,0)"},
                    {{2, 0}, "-y(1,0,0)"},
                    {{2, 1}, "y(0,0,0)"},
                    {{0, 1}, "y(1,1,0) + y(1,0,1) + y(2,0,0)"},
                    {{0, 2}, "-y(1,0,0)"}}),
          "double Schubert expansion");
  r.check(GG->expand(V({1, 2})) == DP({{{0, 0}, "y(0,0,0)"},
                                       {{-2, -2}, "-y(2,1,1)"},
                                       {{-2, -1}, "y(1,1,1)"},
                                       {{-1, 0}, "-y(1,0,0)"},
                                       {{-1, -2}, "y(1,1,1)"},
                                       {{-1, -1}, "y(2,0,0) - y(0,1,1)"},
                                       {{0, -1}, "-y(1,0,0)"}}),
          "double Grothendieck expansion");
  BasisExpansion<YPolynomial> yx(Yx, 2);
  yx.add_term(V({1, 2}), YPolynomial(1));
  yx.add_term(V({0, 0}), Yc("-y(2,1,0) - y(2,0,1)"));
  yx.add_term(V({1, 1}), Yc("-y(1,0,0) - y(0,1,0) - y(0,0,1)"));
  yx.add_term(V({0, 1}), Yc("y(1,1,0) + y(1,0,1) + y(2,0,0)"));
  yx.add_term(V({0, 2}), Yc("-y(1,0,0)"));
  r.check(double_to_x_basis(yy, Yx) == yx, "x-Schubert form of the double Schubert polynomial");
}

void s4_table(Report& r) {
  std::map<std::string, long> table = {
      {"1234", 720}, {"1324", 280}, {"2134", 220}, {"1243", 220}, {"2143", 78}, {"1342", 48},
      {"3124", 48},  {"1423", 46},  {"2314", 46},  {"3214", 16},  {"1432", 16}, {"3142", 14},
      {"2413", 12},  {"2341", 6},   {"4123", 6},   {"3241", 3},   {"4213", 3},  {"4132", 3},
      {"2431", 3},   {"3412", 2},   {"3421", 1},   {"4231", 1},   {"4312", 1},  {"4321", 1}};
  auto perms = all_permutations(4);
  r.check(perms.size() == 24, "24 permutations");
  for (const auto& w : perms) {
    auto it = table.find(w.to_string());
    r.check(it != table.end() && proj_deg(w) == Rational(it->second), "degree of " + w.to_string());
  }
}

void schur(Report& r) {
  std::vector<std::string> vars = {"x1", "x2", "x3"};
  PolynomialMatrix mat = schur_matrix(vars, {{"x1", "x2"}, {"x1", "x3"}, {"x2", "x3"}}, {V({0, 0}), V({0, 1}), V({1, 1})});
  QPoly one = LP("x(0, 0, 0)"), zero(3);
  PolynomialMatrix want = {{one, one, one},
                           {zero, LP("-x(0, 1, 0) + x(0, 0, 1)"), LP("-x(1, 0, 0) + x(0, 0, 1)")},
                           {zero, zero, LP("x(2, 0, 0) - x(1, 1, 0) - x(1, 0, 1) + x(0, 1, 1)")}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      r.check(mat.size() == 3 && mat[i].size() == 3 && mat[i][j] == want[i][j],
              "entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
  QPoly det = determinant(mat);
  r.check(det == LP("-x(2, 1, 0) + x(1, 2, 0) + x(2, 0, 1) - x(0, 2, 1) - x(1, 0, 2) + x(0, 1, 2)"), "determinant");
  QPoly vandermonde = LP("x(0, 1, 0) - x(0, 0, 1)") * LP("x(0, 1, 0) - x(1, 0, 0)") * LP("x(1, 0, 0) - x(0, 0, 1)");
  auto quotient = exact_divide(det, vandermonde);
  r.check(quotient && (*quotient == one || *quotient == -one), "Vandermonde quotient is a unit");
}

void properties(Report& r) {
  const ParamRing ring({"t1", "t2"});
  ParamFraction t1 = ring.param("t1"), t2 = ring.param("t2");
  auto T = [&](const FPoly& p, std::size_t i) { return hecke_T(p, i, t1, t2); };
  using Op = std::function<QPoly(const QPoly&, std::size_t)>;
  std::vector<std::pair<std::string, Op>> ops = {
      {"d", [](const QPoly& p, std::size_t i) { return divided_difference(p, i); }},
      {"pi", [](const QPoly& p, std::size_t i) { return isobaric(p, i); }},
      {"pihat", [](const QPoly& p, std::size_t i) { return isobaric_hat(p, i); }},
  };
  Rng rng(2024);
  for (int k = 0; k < 100; ++k) {
    QPoly p = rng.poly(4, 3, -2, 3);
    for (const auto& [name, op] : ops) {
      for (std::size_t i = 1; i <= 2; ++i)
        r.check(op(op(op(p, i), i + 1), i) == op(op(op(p, i + 1), i), i + 1), "braid " + name);
      r.check(op(op(p, 1), 3) == op(op(p, 3), 1), "commutation " + name);
    }
    FPoly f = to_frac(p);
    for (std::size_t i = 1; i <= 2; ++i) r.check(T(T(T(f, i), i + 1), i) == T(T(T(f, i + 1), i), i + 1), "braid T");
    r.check(T(T(f, 1), 3) == T(T(f, 3), 1), "commutation T");
  }

  Rng rng2(31);
  for (RootType t : {RootType::A, RootType::B, RootType::C, RootType::D}) {
    std::string letter(1, type_letter(t));
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t i = 1; i <= n; ++i) {
        if (!index_in_range(t, i, n)) continue;
        for (int k = 0; k < 8; ++k) {
          QPoly p = rng2.poly(n, 4, -3, 4);
          if (t != RootType::B)
            r.check(divided_difference(divided_difference(p, i, t), i, t).is_zero(), "nilpotence " + letter);
          QPoly pi = isobaric(p, i, t);
          r.check(isobaric(pi, i, t) == pi, "idempotence " + letter);
          QPoly ph = isobaric_hat(p, i, t);
          r.check(isobaric_hat(ph, i, t) == -ph, "hat relation " + letter);
        }
      }
  }

  Rng rng3(8);
  for (int k = 0; k < 30; ++k) {
    FPoly f = to_frac(rng3.poly(3, 4, -3, 4));
    for (std::size_t i = 1; i <= 2; ++i) {
      FPoly Tf = T(f, i);
      r.check(T(Tf, i) == Tf.scaled(t1 + t2) - f.scaled(t1 * t2), "Hecke quadratic");
    }
  }

  Rng rng4(9);
  for (int k = 0; k < 60; ++k) {
    QPoly f = rng4.poly(3, 3, -2, 3), g = rng4.poly(3, 3, -2, 3);
    for (std::size_t i = 1; i <= 2; ++i)
      r.check(divided_difference(f * g, i) ==
                  divided_difference(f, i) * g + act_reflection(f, i, RootType::A) * divided_difference(g, i),
              "Leibniz");
  }
}

void round_trips(Report& r) {
  Rng rng(555);
  std::vector<QBasis> bases = {schubert_basis<Rational>(), key_basis<Rational>(), key_basis<Rational>(RootType::B),
                               key_hat_basis<Rational>(), grothendieck_positive_basis<Rational>()};
  for (const auto& b : bases) {
    int lo = b->domain() == IndexDomain::Integer ? -3 : 0;
    for (int k = 0; k < 100; ++k) {
      QExp e = random_combination(rng, b, lo, 3);
      r.check(to_basis(b, expand_combination(e)) == e, b->name() + " round trip " + e.to_string());
    }
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& v : all_indices(n, lo, 3))
        r.check(triangular_at(b, v), b->name() + " triangular at " + v.joined());
  }
  auto Mac = macdonald_basis(mac_ring());
  for (int k = 0; k < 100; ++k) {
    auto e = random_combination(rng, Mac, 0, 3);
    r.check(to_basis(Mac, expand_combination(e)) == e, "macdonald round trip " + e.to_string());
  }
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& v : all_indices(n, 0, 3)) r.check(triangular_at(Mac, v), "macdonald triangular at " + v.joined());
}

void confluence(Report& r) {
  Rng rng(77);
  for (const auto& b : {schubert_basis<Rational>(), key_basis<Rational>()})
    for (int k = 0; k < 50; ++k) {
      ExponentVector v = rng.vec(rng.uniform(2, 4), 0, 4);
      r.check(b->expand(v, AscentChoice::First) == b->expand(v, AscentChoice::Last), b->name() + " at " + v.joined());
    }
}

bool run(int number, const std::string& label, const std::function<void(Report&)>& body, double limit) {
  Report r;
  auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = r.failures.empty() && secs <= limit;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << " (" << label << ", " << r.checks << " checks, "
       << secs << "s, limit " << limit << "s)";
  std::cout << line.str() << "\n";
  for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i) std::cout << "  failed: " << r.failures[i] << "\n";
  if (secs > limit) std::cout << "  over the time limit\n";
  return ok;
}

}  // namespace

int main() {
  bool ok = true;
  bool fixtures_ok = run(1, "fixture suite", fixtures, 10);
  bool table_ok = run(2, "S4 projective degrees", s4_table, 60);
  bool schur_ok = run(3, "Schur determinant", schur, 10);
  ok = fixtures_ok && table_ok && schur_ok;
  ok = run(4, "operator relations", properties, 60) && ok;
  ok = run(5, "round trips and triangularity", round_trips, 300) && ok;
  ok = run(6, "first and last ascent agree", confluence, 60) && ok;
  bool reproduced = fixtures_ok && table_ok && schur_ok;
  std::cout << "criterion 7: " << (reproduced ? "PASS" : "FAIL")
            << " (no large-scale claims; criteria 1 to 3 reproduce every reference output in full)\n";
  return ok ? 0 : 1;
}
