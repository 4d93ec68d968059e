#pragma once

#include <stdexcept>
#include <string>

#include "multibasis/exponent.hpp"
#include "multibasis/polynomial.hpp"

namespace multibasis {

enum class RootType { A, B, C, D };

char type_letter(RootType t);
/// Throws std::invalid_argument on anything other than A/B/C/D.
RootType parse_root_type(const std::string& s);

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Data driving the string-sum operators at one index:
/// pairing c = <v, coroot>, reflection v -> v - c*root, and the shift/sign
/// used by the Newton operator.
struct RootDatum {
  RootType type;
  std::size_t index;  // 1-based
  ExponentVector root;
  ExponentVector coroot;
  ExponentVector shift;
  int sign = 1;
};

/// True when i is a legal index for the generalized operator of `type` in n variables
/// (A: 1 <= i < n, B/C: 1 <= i <= n, D: 2 <= i <= n).
bool index_in_range(RootType type, std::size_t i, std::size_t n);

/// Generalized datum: the operator of the given type placed at index i.
RootDatum root_datum(RootType type, std::size_t i, std::size_t n);

/// Datum of the i-th simple root of the root system of `type` and rank n:
/// indices below n are type A, the last index carries the type-specific root.
/// Type A has indices 1..n-1 only.
RootDatum simple_root_datum(RootType type, std::size_t i, std::size_t n);
/// Number of simple roots of the rank-n system (n-1 for A, n otherwise).
std::size_t simple_root_count(RootType type, std::size_t n);

inline int pairing(const ExponentVector& v, const RootDatum& d) {
  if (v.size() != d.coroot.size()) throw VariableCountMismatch("pairing: length mismatch");
  return dot(v, d.coroot);
}

inline ExponentVector reflect(const ExponentVector& v, const RootDatum& d) {
  return v - pairing(v, d) * d.root;
}

template <Coefficient C>
Polynomial<C> act_reflection(const Polynomial<C>& p, const RootDatum& d) {
  return p.map_exponents([&](const ExponentVector& v) { return reflect(v, d); });
}

template <Coefficient C>
Polynomial<C> act_reflection(const Polynomial<C>& p, std::size_t i, RootType type) {
  return act_reflection(p, root_datum(type, i, p.nvars()));
}

/// Newton divided difference on the root string of each monomial.
template <Coefficient C>
Polynomial<C> divided_difference(const Polynomial<C>& p, const RootDatum& d) {
  Polynomial<C> out(p.nvars());
  for (const auto& [v, coeff] : p) {
    int c = pairing(v, d);
    if (c == 0) continue;
    ExponentVector start = c > 0 ? v : v - c * d.root;
    int len = c > 0 ? c : -c;
    C s = (c > 0) == (d.sign > 0) ? coeff : -coeff;
    ExponentVector w = start - d.shift;
    for (int k = 0; k < len; ++k) {
      out.add_term(w, s);
      w -= d.root;
    }
  }
  return out;
}

template <Coefficient C>
Polynomial<C> divided_difference(const Polynomial<C>& p, std::size_t i, RootType type = RootType::A) {
  return divided_difference(p, root_datum(type, i, p.nvars()));
}

/// Isobaric divided difference (Demazure operator).
template <Coefficient C>
Polynomial<C> isobaric(const Polynomial<C>& p, const RootDatum& d) {
  Polynomial<C> out(p.nvars());
  for (const auto& [v, coeff] : p) {
    int c = pairing(v, d);
    if (c >= 0) {
      ExponentVector w = v;
      for (int k = 0; k <= c; ++k) {
        out.add_term(w, coeff);
        w -= d.root;
      }
    } else if (c <= -2) {
      ExponentVector w = v;
      C neg = -coeff;
      for (int k = 1; k <= -c - 1; ++k) {
        w += d.root;
        out.add_term(w, neg);
      }
    }
  }
  return out;
}

template <Coefficient C>
Polynomial<C> isobaric(const Polynomial<C>& p, std::size_t i, RootType type = RootType::A) {
  return isobaric(p, root_datum(type, i, p.nvars()));
}

template <Coefficient C>
Polynomial<C> isobaric_hat(const Polynomial<C>& p, const RootDatum& d) {
  return isobaric(p, d) - p;
}

template <Coefficient C>
Polynomial<C> isobaric_hat(const Polynomial<C>& p, std::size_t i, RootType type = RootType::A) {
  return isobaric_hat(p, root_datum(type, i, p.nvars()));
}

/// Hecke generator (t1 + t2) * pi_i - t2 * s_i, type A only.
template <Coefficient C>
Polynomial<C> hecke_T(const Polynomial<C>& p, std::size_t i, const C& t1, const C& t2) {
  RootDatum d = root_datum(RootType::A, i, p.nvars());
  return isobaric(p, d).scaled(t1 + t2) - act_reflection(p, d).scaled(t2);
}

enum class OperatorKind { Newton, Isobaric, IsobaricHat, Hecke };

/// Dispatches on the operator kind; Hecke needs the two parameters.
template <Coefficient C>
Polynomial<C> apply_operator(OperatorKind kind, const Polynomial<C>& p, const RootDatum& d,
                             const C* t1 = nullptr, const C* t2 = nullptr) {
  switch (kind) {
    case OperatorKind::Newton: return divided_difference(p, d);
    case OperatorKind::Isobaric: return isobaric(p, d);
    case OperatorKind::IsobaricHat: return isobaric_hat(p, d);
    case OperatorKind::Hecke:
      if (d.type != RootType::A) throw std::invalid_argument("the Hecke operator is only defined in type A");
      if (!t1 || !t2) throw std::invalid_argument("the Hecke operator needs parameters t1 and t2");
      return hecke_T(p, d.index, *t1, *t2);
  }
  throw std::logic_error("unknown operator kind");
}

}  // namespace multibasis
