#include "multibasis/applications.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace multibasis {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  if (w_.empty()) throw InvalidPermutation("empty permutation");
  std::vector<bool> seen(w_.size() + 1, false);
  for (int x : w_) {
    if (x < 1 || static_cast<std::size_t>(x) > w_.size() || seen[x])
      throw InvalidPermutation("not a permutation of 1.." + std::to_string(w_.size()) + ": " + to_string());
    seen[x] = true;
  }
}

Permutation Permutation::parse(const std::string& s) {
  std::vector<int> w;
  if (s.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t next = s.find(',', pos);
      std::string item = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      std::size_t used = 0;
      int x = 0;
      try {
        x = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw InvalidPermutation("malformed permutation '" + s + "'");
      }
      if (used != item.size()) throw InvalidPermutation("malformed permutation '" + s + "'");
      w.push_back(x);
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  } else {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidPermutation("malformed permutation '" + s + "'");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(i + 1);
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
  std::string out;
  bool digits = w_.size() < 10;
  for (std::size_t i = 0; i < w_.size(); ++i) out += (digits || i == 0 ? "" : ",") + std::to_string(w_[i]);
  return out;
}

ExponentVector lehmer_code(const Permutation& w) {
  std::size_t n = w.size();
  ExponentVector code(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (w[j] < w[i]) ++code[i];
  return code;
}

int permutation_length(const Permutation& w) { return lehmer_code(w).degree(); }

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> w = Permutation::identity(n).one_line();
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Polynomial<Rational> chern_form(std::size_t n) {
  if (n < 2) throw std::invalid_argument("chern_form needs n >= 2");
  Polynomial<Rational> h(n);
  for (std::size_t i = 1; i < n; ++i)
    h += Polynomial<Rational>::variable(n, i).scaled(Rational(static_cast<long>(n - i)));
  return h;
}

Rational proj_deg(const Permutation& w) {
  std::size_t n = w.size();
  if (n == 1) return Rational(1);
  static const BasisPtr<Rational> Y = schubert_basis<Rational>();
  int d = static_cast<int>(n * (n - 1) / 2) - permutation_length(w);
  Polynomial<Rational> f = chern_form(n).pow(d) * Y->expand(lehmer_code(w));
  ExponentVector top(n);
  for (std::size_t i = 0; i < n; ++i) top[i] = static_cast<int>(n - 1 - i);
  return to_basis(Y, f).coefficient(top);
}

PolynomialMatrix schur_matrix(const std::vector<std::string>& variables,
                              const std::vector<std::vector<std::string>>& alphabets,
                              const std::vector<ExponentVector>& indices) {
  if (alphabets.size() != indices.size())
    throw SchurMatrixError("schur_matrix: " + std::to_string(indices.size()) + " indices but " +
                           std::to_string(alphabets.size()) + " alphabets");
  std::map<std::string, std::size_t> position;
  for (std::size_t k = 0; k < variables.size(); ++k)
    if (!position.emplace(variables[k], k).second) throw SchurMatrixError("repeated variable " + variables[k]);
  std::size_t nv = variables.size();
  std::vector<std::vector<std::size_t>> slots;
  for (const auto& a : alphabets) {
    std::vector<std::size_t> s;
    for (const auto& name : a) {
      auto it = position.find(name);
      if (it == position.end()) throw SchurMatrixError("alphabet letter " + name + " is not a listed variable");
      s.push_back(it->second);
    }
    slots.push_back(std::move(s));
  }
  static const BasisPtr<YPolynomial> YY = double_schubert_basis();
  PolynomialMatrix m;
  for (const auto& u : indices) {
    DoublePolynomial p = uniform_y(YY->expand(u));
    std::size_t ny = y_nvars(p);
    std::vector<Polynomial<Rational>> row;
    for (const auto& s : slots) {
      if (s.size() != u.size())
        throw SchurMatrixError("alphabet of size " + std::to_string(s.size()) + " cannot be substituted into YY(" +
                               u.joined() + ")");
      Polynomial<Rational> entry(nv);
      for (const auto& [xv, c] : p) {
        ExponentVector e(nv);
        for (std::size_t i = 0; i < xv.size(); ++i) e[s[i]] += xv[i];
        for (const auto& [yv, r] : c.poly()) {
          ExponentVector f = e;
          for (std::size_t j = 0; j < ny; ++j) {
            if (yv[j] == 0) continue;
            if (j >= nv)
              throw SchurMatrixError("YY(" + u.joined() + ") needs y" + std::to_string(j + 1) + " but only " +
                                     std::to_string(nv) + " variables are listed");
            f[j] += yv[j];
          }
          entry.add_term(f, r);
        }
      }
      row.push_back(std::move(entry));
    }
    m.push_back(std::move(row));
  }
  return m;
}

Polynomial<Rational> determinant(PolynomialMatrix m, std::size_t nvars) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Polynomial<Rational>::one(nvars);
  std::size_t nv = m[0][0].nvars();
  Polynomial<Rational> prev = Polynomial<Rational>::one(nv);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Polynomial<Rational>(nv);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial<Rational> num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_divide(num, prev);
        if (!q) throw std::logic_error("Bareiss step did not divide exactly");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Polynomial<Rational>(nv);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace multibasis
