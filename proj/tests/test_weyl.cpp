#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "multibasis/weyl.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

const QPoly& sample_input() {
  static const QPoly p = P({{{1, 1, 2}, 1}, {{2, 3, 0}, 1}});
  return p;
}

FPoly to_frac(const QPoly& p) {
  FPoly out(p.nvars());
  for (const auto& [v, c] : p) out.add_term(v, ParamFraction(c));
  return out;
}

const ParamRing& hecke_ring() {
  static const ParamRing ring({"t1", "t2"});
  return ring;
}

}  // namespace

TEST_CASE("pairing") {
  CHECK(pairing(V({4, 1}), root_datum(RootType::A, 1, 2)) == 3);
  CHECK(pairing(V({2, 3, 0}), root_datum(RootType::B, 2, 3)) == 6);
  for (RootType t : {RootType::A, RootType::B, RootType::C, RootType::D})
    CHECK(pairing(V({0, 0, 0}), root_datum(t, 2, 3)) == 0);
}

TEST_CASE("root data table") {
  auto d = root_datum(RootType::D, 3, 4);
  CHECK(d.root == V({0, 1, 1, 0}));
  CHECK(d.coroot == V({0, 1, 1, 0}));
  CHECK(d.shift == V({0, 0, 1, 0}));
  auto b = root_datum(RootType::B, 1, 2);
  CHECK(b.root == V({1, 0}));
  CHECK(b.coroot == V({2, 0}));
  auto c = root_datum(RootType::C, 2, 2);
  CHECK(c.root == V({0, 2}));
  CHECK(c.coroot == V({0, 1}));
  CHECK_THROWS_AS(root_datum(RootType::A, 2, 2), IndexOutOfRange);
  CHECK_THROWS_AS(root_datum(RootType::D, 1, 3), IndexOutOfRange);
  CHECK_THROWS_AS(root_datum(RootType::B, 0, 3), IndexOutOfRange);
  // simple roots of the rank-3 system: type A below n, typed root at n
  CHECK(simple_root_datum(RootType::C, 1, 3).root == V({1, -1, 0}));
  CHECK(simple_root_datum(RootType::C, 3, 3).root == V({0, 0, 2}));
  CHECK(simple_root_datum(RootType::D, 3, 3).root == V({0, 1, 1}));
  CHECK(simple_root_count(RootType::A, 3) == 2);
  CHECK(simple_root_count(RootType::B, 3) == 3);
}

TEST_CASE("divided difference reference outputs") {
  CHECK(divided_difference(P({{{4, 1}, 1}}), 1) == P({{{3, 1}, 1}, {{2, 2}, 1}, {{1, 3}, 1}}));
  const QPoly& p = sample_input();
  CHECK(divided_difference(p, 2, RootType::A) ==
        P({{{1, 1, 1}, -1}, {{2, 1, 1}, 1}, {{2, 2, 0}, 1}, {{2, 0, 2}, 1}}));
  CHECK(divided_difference(p, 2, RootType::C) ==
        P({{{1, 0, 2}, 1}, {{2, 0, 0}, 1}, {{2, -2, 0}, 1}, {{2, 2, 0}, 1}}));
  CHECK(divided_difference(p, 2, RootType::B) == P({{{1, -1, 2}, 1},
                                                     {{1, 0, 2}, 1},
                                                     {{2, 0, 0}, 1},
                                                     {{2, -3, 0}, 1},
                                                     {{2, -2, 0}, 1},
                                                     {{2, -1, 0}, 1},
                                                     {{2, 1, 0}, 1},
                                                     {{2, 2, 0}, 1}}));
  CHECK(divided_difference(p, 2, RootType::D) == P({{{0, 0, 0}, 1},
                                                     {{-2, -2, 0}, 1},
                                                     {{-1, -1, 0}, 1},
                                                     {{1, 1, 0}, 1},
                                                     {{1, 0, 2}, 1},
                                                     {{2, 2, 0}, 1},
                                                     {{0, -1, 2}, 1}}));
  CHECK_THROWS_AS(divided_difference(p, 3, RootType::A), IndexOutOfRange);
  CHECK_THROWS_AS(divided_difference(p, 1, RootType::D), IndexOutOfRange);
}

TEST_CASE("isobaric reference output and small cases") {
  CHECK(isobaric(sample_input(), 2) == P({{{2, 1, 2}, 1}, {{2, 2, 1}, 1}, {{2, 3, 0}, 1}, {{2, 0, 3}, 1}}));
  CHECK(isobaric(P({{{0, 1}, 1}}), 1).is_zero());
  CHECK(isobaric(P({{{0, 0}, 1}}), 1) == P({{{0, 0}, 1}}));
  CHECK(isobaric_hat(P({{{1, 0}, 1}}), 1) == P({{{0, 1}, 1}}));
  CHECK(isobaric_hat(P({{{1, 1}, 1}, {{2, 0}, 1}, {{0, 2}, 1}}), 1).is_zero());
  CHECK(isobaric_hat(P({{{0, 1}, 1}}), 1) == P({{{0, 1}, -1}}));
}

TEST_CASE("isobaric agrees with the fraction definition") {
  // f pi = (x_i f - x_{i+1} f^s) / (x_i - x_{i+1})
  Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    QPoly f = rng.poly(3, 4, -3, 4);
    for (std::size_t i = 1; i <= 2; ++i) {
      QPoly xi = QPoly::variable(3, i), xj = QPoly::variable(3, i + 1);
      auto q = exact_divide(xi * f - xj * act_reflection(f, i, RootType::A), xi - xj);
      REQUIRE(q.has_value());
      CHECK(isobaric(f, i) == *q);
      auto d = exact_divide(f - act_reflection(f, i, RootType::A), xi - xj);
      REQUIRE(d.has_value());
      CHECK(divided_difference(f, i) == *d);
    }
  }
}

TEST_CASE("type C string sum agrees with the fraction definition") {
  Rng rng(6);
  for (int k = 0; k < 50; ++k) {
    std::size_t n = rng.uniform(1, 3);
    QPoly f = rng.poly(n, 4, -3, 4);
    for (std::size_t i = 1; i <= n; ++i) {
      QPoly xi = QPoly::variable(n, i);
      QPoly denom = xi - QPoly::monomial(-unit_vector(n, i));
      auto q = exact_divide(f - act_reflection(f, i, RootType::C), denom);
      REQUIRE(q.has_value());
      CHECK(divided_difference(f, i, RootType::C) == *q);
    }
  }
}

TEST_CASE("Hecke examples") {
  const auto& R = hecke_ring();
  ParamFraction t1 = R.param("t1"), t2 = R.param("t2");
  FPoly sym = to_frac(P({{{1, 1}, 1}, {{2, 0}, 1}, {{0, 2}, 1}}));
  CHECK(hecke_T(sym, 1, t1, t2) == sym.scaled(t1));
  FPoly x10 = to_frac(P({{{1, 0}, 1}})), x01 = to_frac(P({{{0, 1}, 1}}));
  CHECK(hecke_T(x10, 1, t1, t2) == (x10 + x01).scaled(t1 + t2) - x01.scaled(t2));
  CHECK(hecke_T(FPoly(2), 1, t1, t2).is_zero());
  auto d = root_datum(RootType::B, 1, 2);
  CHECK_THROWS(apply_operator(OperatorKind::Hecke, x10, d, &t1, &t2));
  auto a = root_datum(RootType::A, 1, 2);
  CHECK_THROWS(apply_operator(OperatorKind::Hecke, x10, a));
}

TEST_CASE("braid relations in type A, n = 4") {
  const auto& R = hecke_ring();
  ParamFraction t1 = R.param("t1"), t2 = R.param("t2");
  Rng rng(2024);
  using Op = std::function<QPoly(const QPoly&, std::size_t)>;
  std::vector<std::pair<const char*, Op>> ops = {
      {"d", [](const QPoly& p, std::size_t i) { return divided_difference(p, i); }},
      {"pi", [](const QPoly& p, std::size_t i) { return isobaric(p, i); }},
      {"pihat", [](const QPoly& p, std::size_t i) { return isobaric_hat(p, i); }},
  };
  auto T = [&](const FPoly& p, std::size_t i) { return hecke_T(p, i, t1, t2); };
  for (int k = 0; k < 100; ++k) {
    QPoly p = rng.poly(4, 3, -2, 3);
    for (const auto& [name, op] : ops) {
      CAPTURE(name);
      for (std::size_t i = 1; i <= 2; ++i)
        CHECK(op(op(op(p, i), i + 1), i) == op(op(op(p, i + 1), i), i + 1));
      CHECK(op(op(p, 1), 3) == op(op(p, 3), 1));
    }
    FPoly f = to_frac(p);
    for (std::size_t i = 1; i <= 2; ++i) CHECK(T(T(T(f, i), i + 1), i) == T(T(T(f, i + 1), i), i + 1));
    CHECK(T(T(f, 1), 3) == T(T(f, 3), 1));
  }
}

TEST_CASE("nilpotence and idempotence for all types") {
  Rng rng(31);
  for (RootType t : {RootType::A, RootType::B, RootType::C, RootType::D}) {
    for (std::size_t n = 2; n <= 4; ++n) {
      for (std::size_t i = 1; i <= n; ++i) {
        if (!index_in_range(t, i, n)) continue;
        for (int k = 0; k < 8; ++k) {
          QPoly p = rng.poly(n, 4, -3, 4);
          CAPTURE(type_letter(t));
          CAPTURE(i);
          if (t != RootType::B) CHECK(divided_difference(divided_difference(p, i, t), i, t).is_zero());
          QPoly pi = isobaric(p, i, t);
          CHECK(isobaric(pi, i, t) == pi);
          QPoly ph = isobaric_hat(p, i, t);
          CHECK(isobaric_hat(ph, i, t) == -ph);
          CHECK(support_ok(pi));
        }
      }
    }
  }
}

TEST_CASE("Hecke quadratic relation") {
  const auto& R = hecke_ring();
  ParamFraction t1 = R.param("t1"), t2 = R.param("t2");
  Rng rng(8);
  for (int k = 0; k < 30; ++k) {
    FPoly f = to_frac(rng.poly(3, 4, -3, 4));
    for (std::size_t i = 1; i <= 2; ++i) {
      FPoly Tf = hecke_T(f, i, t1, t2);
      CHECK(hecke_T(Tf, i, t1, t2) == Tf.scaled(t1 + t2) - f.scaled(t1 * t2));
    }
  }
}

TEST_CASE("Leibniz rule for the type A divided difference") {
  Rng rng(9);
  for (int k = 0; k < 60; ++k) {
    QPoly f = rng.poly(3, 3, -2, 3), g = rng.poly(3, 3, -2, 3);
    for (std::size_t i = 1; i <= 2; ++i)
      CHECK(divided_difference(f * g, i) ==
            divided_difference(f, i) * g + act_reflection(f, i, RootType::A) * divided_difference(g, i));
  }
}
