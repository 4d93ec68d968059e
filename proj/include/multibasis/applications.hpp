#pragma once

#include <string>
#include <vector>

#include "multibasis/double.hpp"

namespace multibasis {

class InvalidPermutation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Permutation of 1..n in one-line notation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);
  /// Digits "2143" or comma separated "2,1,4,3".
  static Permutation parse(const std::string& s);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return w_.size(); }
  const std::vector<int>& one_line() const { return w_; }
  int operator[](std::size_t i) const { return w_[i]; }
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

/// code_i = #{j > i : w_j < w_i}
ExponentVector lehmer_code(const Permutation& w);
int permutation_length(const Permutation& w);
/// All permutations of size n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

/// h = (n-1) x_1 + (n-2) x_2 + ... + x_{n-1}
Polynomial<Rational> chern_form(std::size_t n);

/// Coefficient of Y(n-1, ..., 0) in h^d Y_code(w), d = n(n-1)/2 - length(w).
Rational proj_deg(const Permutation& w);

using PolynomialMatrix = std::vector<std::vector<Polynomial<Rational>>>;

class SchurMatrixError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Row u, column A: YY(u) with x_i -> A_i and y_j -> variables[j], as a
/// polynomial in the listed variables.
PolynomialMatrix schur_matrix(const std::vector<std::string>& variables,
                              const std::vector<std::vector<std::string>>& alphabets,
                              const std::vector<ExponentVector>& indices);

/// Fraction-free (Bareiss) elimination; every division is exact.
/// `nvars` is used for the empty matrix only.
Polynomial<Rational> determinant(PolynomialMatrix m, std::size_t nvars = 1);

}  // namespace multibasis
