#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multibasis/double.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

// y-coefficients are written as printed sums, constants as y(0,...,0)
YPolynomial Yc(const std::string& s) { return YPolynomial(LP(s)); }

DoublePolynomial DP(std::initializer_list<std::pair<std::vector<int>, const char*>> terms) {
  std::size_t n = terms.begin()->first.size();
  DoublePolynomial p(n);
  for (const auto& [v, c] : terms) p.add_term(ExponentVector(v), Yc(c));
  return p;
}

const BasisPtr<YPolynomial>& YY() {
  static const BasisPtr<YPolynomial> b = double_schubert_basis();
  return b;
}
const BasisPtr<YPolynomial>& GG() {
  static const BasisPtr<YPolynomial> b = double_grothendieck_basis();
  return b;
}
const BasisPtr<YPolynomial>& Yx() {
  static const BasisPtr<YPolynomial> b = schubert_basis<YPolynomial>();
  return b;
}

DoublePolynomial random_double(Rng& rng, std::size_t n, std::size_t ny) {
  DoublePolynomial p(n);
  for (int k = 0; k < 3; ++k) p.add_term(rng.vec(n, 0, 3), YPolynomial(rng.poly(ny, 2, 0, 2)));
  return p;
}

std::vector<ExponentVector> all_indices(std::size_t n, int hi) {
  std::vector<ExponentVector> out;
  std::vector<int> e(n, 0);
  for (;;) {
    out.emplace_back(e);
    std::size_t k = 0;
    while (k < n && e[k] == hi) e[k++] = 0;
    if (k == n) break;
    ++e[k];
  }
  return out;
}

}  // namespace

TEST_CASE("y-polynomial coefficients") {
  YPolynomial y1 = YPolynomial::variable(1, 1), y2 = YPolynomial::variable(2, 2);
  CHECK(y1 + y2 == Yc("y(1,0) + y(0,1)"));
  CHECK(y1 * y2 == Yc("y(1,1)"));
  CHECK(YPolynomial(3) == Yc("3*y(0,0,0)"));
  CHECK((y1 * y2).divide(y2) == y1.padded(2));
  CHECK_FALSE(y1.divide(y1 + y2).has_value());
  CHECK(Yc("y(2,1,0) - y(0,1,1)").to_string() == "-y(0,1,1)+y(2,1,0)");
  CHECK(Yc("y(1,0) + 2*y(0,0)").specialize(Rational(3)) == Rational(5));
}

TEST_CASE("double arithmetic") {
  DoublePolynomial a = DP({{{1, 0}, "y(1,0)"}}), b = DP({{{0, 1}, "y(0,1)"}});
  CHECK(a * b == DP({{{1, 1}, "y(1,1)"}}));
  CHECK(a + DoublePolynomial(2) == a);
  // (x1 - y1)(x1 - y2)
  DoublePolynomial x1 = DoublePolynomial::variable(1, 1);
  DoublePolynomial f = (x1 - DoublePolynomial::constant(1, YPolynomial::variable(2, 1))) *
                       (x1 - DoublePolynomial::constant(1, YPolynomial::variable(2, 2)));
  CHECK(f == DP({{{2}, "y(0,0)"}, {{1}, "-y(1,0) - y(0,1)"}, {{0}, "y(1,1)"}}));
  CHECK_THROWS_AS(a + DoublePolynomial(3), VariableCountMismatch);
}

TEST_CASE("double Schubert fixture") {
  DoublePolynomial expected = DP({{{0, 0}, "-y(2,1,0) - y(2,0,1)"},
                                  {{1, 0}, "y(1,1,0) + y(1,0,1) + y(2,0,0)"},
                                  {{1, 1}, "-2*y(1,0,0) - y(0,1,0) - y(0,0,1)"},
                                  {{1, 2}, "y(0,0,0)"},
                                  {{2, 0}, "-y(1,0,0)"},
                                  {{2, 1}, "y(0,0,0)"},
                                  {{0, 1}, "y(1,1,0) + y(1,0,1) + y(2,0,0)"},
                                  {{0, 2}, "-y(1,0,0)"}});
  DoublePolynomial got = YY()->expand(V({1, 2}));
  CHECK(got == expected);
  CHECK(y_nvars(got) == 3);
  for (const auto& [v, c] : got) CHECK(c.nvars() == 3);
  CHECK(YY()->expand(V({1})) == DP({{{1}, "y(0)"}, {{0}, "-y(1)"}}));
  CHECK(got.to_string(Brackets::Round).find("(-y(1,0,0))*x(2, 0)") != std::string::npos);
}

TEST_CASE("double Grothendieck fixture") {
  DoublePolynomial expected = DP({{{0, 0}, "y(0,0,0)"},
                                  {{-2, -2}, "-y(2,1,1)"},
                                  {{-2, -1}, "y(1,1,1)"},
                                  {{-1, 0}, "-y(1,0,0)"},
                                  {{-1, -2}, "y(1,1,1)"},
                                  {{-1, -1}, "y(2,0,0) - y(0,1,1)"},
                                  {{0, -1}, "-y(1,0,0)"}});
  CHECK(GG()->expand(V({1, 2})) == expected);
  CHECK(GG()->expand(V({1})) == DP({{{0}, "y(0)"}, {{-1}, "-y(1)"}}));
}

TEST_CASE("Schubert form of a double Schubert polynomial") {
  BasisExpansion<YPolynomial> want(Yx(), 2);
  want.add_term(V({1, 2}), YPolynomial(1));
  want.add_term(V({0, 0}), Yc("-y(2,1,0) - y(2,0,1)"));
  want.add_term(V({1, 1}), Yc("-y(1,0,0) - y(0,1,0) - y(0,0,1)"));
  want.add_term(V({0, 1}), Yc("y(1,1,0) + y(1,0,1) + y(2,0,0)"));
  want.add_term(V({0, 2}), Yc("-y(1,0,0)"));
  CHECK(double_to_x_basis(YY()->expand(V({1, 2})), Yx()) == want);
}

TEST_CASE("unitriangularity against the x-Schubert basis") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& v : all_indices(n, 3)) {
      CAPTURE(v.joined());
      CHECK(double_to_x_basis(YY()->expand(v), Yx()).coefficient(v) == YPolynomial(1));
    }
}

TEST_CASE("specializing y") {
  auto Y = schubert_basis<Rational>();
  auto G = grothendieck_negative_basis<Rational>();
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& v : all_indices(n, 3)) {
      CAPTURE(v.joined());
      CHECK(specialize_y(YY()->expand(v), Rational(0)) == Y->expand(v));
      CHECK(specialize_y(GG()->expand(v), Rational(1)) == G->expand(v));
    }
}

TEST_CASE("swapping the roles of x and y") {
  Rng rng(17);
  for (int k = 0; k < 40; ++k) {
    DoublePolynomial a = random_double(rng, 3, 2), b = random_double(rng, 3, 2);
    CHECK(swap_coeffs_elements(swap_coeffs_elements(a)) == uniform_y(a));
    CHECK(swap_coeffs_elements(a * b) == swap_coeffs_elements(a) * swap_coeffs_elements(b));
    CHECK(swap_coeffs_elements(a + b) == swap_coeffs_elements(a) + swap_coeffs_elements(b));
  }
  // x^(1,0) y_2
  DoublePolynomial p = DP({{{1, 0}, "y(0,1)"}});
  CHECK(swap_coeffs_elements(p) == DP({{{0, 1}, "y(1,0)"}}));
}

TEST_CASE("x operators ignore y multiplication") {
  Rng rng(23);
  for (int k = 0; k < 40; ++k) {
    DoublePolynomial f = random_double(rng, 3, 2);
    DoublePolynomial g = DoublePolynomial::constant(3, YPolynomial(rng.poly(2, 3, 0, 2)));
    for (std::size_t i = 1; i <= 2; ++i) {
      CHECK(divided_difference(g * f, i) == g * divided_difference(f, i));
      CHECK(isobaric(g * f, i) == g * isobaric(f, i));
    }
  }
}

TEST_CASE("round trips through double bases") {
  Rng rng(31);
  for (int k = 0; k < 50; ++k) {
    std::size_t n = rng.uniform(1, 3);
    BasisExpansion<YPolynomial> e(YY(), n);
    for (int t = 0; t < 3; ++t) e.add_term(rng.vec(n, 0, 3), YPolynomial(rng.uniform(-3, 3)));
    DoublePolynomial p = expand_combination(e);
    CHECK(expand_combination(double_to_x_basis(p, Yx())) == uniform_y(p));
    CHECK(to_basis(YY(), uniform_y(p)) == e);
  }
  // constant y-coefficients behave like the single-variable conversion
  auto Y = schubert_basis<Rational>();
  QPoly q = LP("x(1, 2, 4) + x(2, 3, 0)");
  auto single = to_basis(Y, q);
  auto doubled = double_to_x_basis(lift_x(q), Yx());
  CHECK(single.size() == doubled.size());
  for (const auto& [v, c] : single) CHECK(doubled.coefficient(v) == YPolynomial(c));
}

TEST_CASE("coefficient bases and display") {
  auto Ys = schubert_basis<Rational>();
  DoubleExpansion pol = DoubleExpansion::element(Ys, V({1, 1, 2}), Ys, V({2, 1, 3}));
  CHECK(pol.to_string() == "(Yy(2,1,3))*Yx(1, 1, 2)");
  DoubleExpansion flat = pol.expand();
  CHECK(flat.to_string() == "(Yy(2,1,3))*x[1, 1, 2] + (Yy(2,1,3))*x[1, 2, 1] + (Yy(2,1,3))*x[2, 1, 1]");
  std::string coeff = "(y[2,1,3]+y[2,2,2]+y[2,3,1]+y[3,1,2]+y[3,2,1]+y[4,1,1])";
  CHECK(pol.change_coeffs_bases(nullptr).to_string() == coeff + "*Yx(1, 1, 2)");
  CHECK(flat.change_coeffs_bases(nullptr).to_string() ==
        coeff + "*x[1, 1, 2] + " + coeff + "*x[1, 2, 1] + " + coeff + "*x[2, 1, 1]");
  CHECK(flat.swap_coeffs_elements().to_string() == "(x[1,1,2]+x[1,2,1]+x[2,1,1])*Yy(2, 1, 3)");
  CHECK(flat.swap_coeffs_elements().swap_coeffs_elements() == flat);
  CHECK(pol.change_coeffs_bases(Ys) == pol);
  CHECK(pol.change_coeffs_bases(nullptr).change_coeffs_bases(Ys) == pol);
  CHECK(pol.to_polynomial() == flat.change_coeffs_bases(nullptr).to_polynomial());
  CHECK(DoubleExpansion::from_polynomial(pol.to_polynomial()) == pol.expand().change_coeffs_bases(nullptr));
}
