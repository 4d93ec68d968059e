#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace multibasis {

/// Exponent vector of a Laurent monomial; doubles as a basis index.
/// Entries may be negative. Ordering is lexicographic, left to right.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<int> init) : e_(init) {}
  explicit ExponentVector(std::vector<int> v) : e_(std::move(v)) {}

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }
  const std::vector<int>& entries() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x >= 0; });
  }

  ExponentVector& operator+=(const ExponentVector& o) {
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  ExponentVector& operator-=(const ExponentVector& o) {
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  friend ExponentVector operator*(int k, ExponentVector a) {
    for (auto& x : a.e_) x *= k;
    return a;
  }
  ExponentVector operator-() const { return -1 * *this; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) { return a.e_ <=> b.e_; }

  /// Resized copy: padded with zeros or truncated.
  ExponentVector resized(std::size_t n) const {
    std::vector<int> v = e_;
    v.resize(n, 0);
    return ExponentVector(std::move(v));
  }

  /// "1, 2, 3"
  std::string joined(const char* sep = ", ") const {
    std::string out;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) out += sep;
      out += std::to_string(e_[i]);
    }
    return out;
  }

 private:
  std::vector<int> e_;
};

/// Unit vector e_i (1-based index).
inline ExponentVector unit_vector(std::size_t n, std::size_t i) {
  ExponentVector v(n);
  v[i - 1] = 1;
  return v;
}

inline int dot(const ExponentVector& a, const ExponentVector& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Total orders used to pick leading terms.
enum class MonomialOrder {
  Lex,              ///< lexicographic
  Graded,           ///< total degree, ties lexicographic
  GradedDominance,  ///< total degree, then decreasingly sorted vector, then lexicographic
};

/// Three-way comparison of two exponent vectors under `order`.
inline int compare(MonomialOrder order, const ExponentVector& a, const ExponentVector& b) {
  auto sgn = [](auto c) { return c < 0 ? -1 : (c > 0 ? 1 : 0); };
  if (order != MonomialOrder::Lex) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
  }
  if (order == MonomialOrder::GradedDominance) {
    std::vector<int> sa = a.entries(), sb = b.entries();
    std::sort(sa.begin(), sa.end(), std::greater<>());
    std::sort(sb.begin(), sb.end(), std::greater<>());
    if (sa != sb) return sa < sb ? -1 : 1;
  }
  return sgn(a <=> b);
}

struct ExponentHash {
  std::size_t operator()(const ExponentVector& v) const {
    std::size_t h = v.size();
    for (int x : v) h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace multibasis
