#pragma once

#include <initializer_list>
#include <cctype>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multibasis/param.hpp"
#include "multibasis/polynomial.hpp"
#include "multibasis/rational.hpp"

namespace testing_support {

using namespace multibasis;
using QPoly = Polynomial<Rational>;
using FPoly = Polynomial<ParamFraction>;

using Terms = std::initializer_list<std::pair<std::vector<int>, long>>;

inline QPoly P(Terms terms) {
  std::vector<std::pair<std::vector<int>, Rational>> v;
  for (const auto& [e, c] : terms) v.emplace_back(e, Rational(c));
  return QPoly::from_terms(v);
}

inline ExponentVector V(std::initializer_list<int> v) { return ExponentVector(v); }

/// Every stored coefficient is nonzero and every vector has the right length.
template <class Poly>
bool support_ok(const Poly& p) {
  for (const auto& [v, c] : p) {
    if (c.is_zero()) return false;
    if (v.size() != p.nvars()) return false;
  }
  return true;
}

/// Reads a printed listing such as "2*x(1, 0) - Y(0, -1) + K[2, 2]" into
/// (vector, rational coefficient) pairs; the prefix is ignored.
inline std::vector<std::pair<std::vector<int>, Rational>> listing(const std::string& s) {
  std::vector<std::pair<std::vector<int>, Rational>> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && s[i] == ' ') ++i;
  };
  auto number = [&] {
    bool neg = false;
    if (s[i] == '-') neg = true, ++i;
    long x = 0;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad listing: " + s);
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) x = 10 * x + (s[i++] - '0');
    return neg ? -x : x;
  };
  skip();
  while (i < s.size()) {
    long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    long coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = number();
      if (s[i] != '*') throw std::invalid_argument("bad listing: " + s);
      ++i;
    }
    while (i < s.size() && s[i] != '(' && s[i] != '[') ++i;
    ++i;
    std::vector<int> v;
    for (;;) {
      skip();
      v.push_back(static_cast<int>(number()));
      skip();
      if (s[i] == ',') {
        ++i;
        continue;
      }
      ++i;
      break;
    }
    out.emplace_back(v, Rational(sign * coeff));
    skip();
  }
  return out;
}

inline QPoly LP(const std::string& s) { return QPoly::from_terms(listing(s)); }

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  Rational rational(int range = 9) {
    int num = uniform(-range, range);
    int den = uniform(1, range);
    return Rational(num, den);
  }
  ExponentVector vec(std::size_t n, int lo, int hi) {
    ExponentVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = uniform(lo, hi);
    return v;
  }
  QPoly poly(std::size_t n, int terms, int lo, int hi) {
    QPoly p(n);
    for (int k = 0; k < terms; ++k) p.add_term(vec(n, lo, hi), Rational(uniform(-4, 4)));
    return p;
  }
};

}  // namespace testing_support
