#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "multibasis/polynomial.hpp"
#include "multibasis/weyl.hpp"

namespace multibasis {

class BasisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class RecursionLimitExceeded : public BasisError {
 public:
  using BasisError::BasisError;
};
class NonTriangularBasis : public BasisError {
 public:
  using BasisError::BasisError;
};
class OutsideIndexDomain : public BasisError {
 public:
  using BasisError::BasisError;
};
class DuplicateBasis : public BasisError {
 public:
  using BasisError::BasisError;
};

enum class IndexDomain { Natural, Integer };

/// Order in which the greedy conversion picks leading terms. The basis element
/// indexed by v must contain x^v, and all its other monomials must come after
/// v in this order.
enum class LeadOrder {
  LexMin,              ///< smallest lexicographic first
  GradedMinLexMin,     ///< smallest degree first, then smallest lexicographic
  GradedMaxLexMax,     ///< largest degree first, then largest lexicographic
  GradedMaxLexMin,     ///< largest degree first, then smallest lexicographic
  GradedDominanceMax,  ///< largest degree, then largest sorted vector, then largest lexicographic
};

/// Which admissible reduction step a rule should take when several exist.
enum class AscentChoice { First, Last };

/// Operator applied to the expansion of a parent index.
template <Coefficient C>
struct StepOperator {
  std::string label;
  std::function<Polynomial<C>(const Polynomial<C>&)> apply;
};

template <Coefficient C>
StepOperator<C> identity_operator() {
  return {"id", [](const Polynomial<C>& p) { return p; }};
}

template <Coefficient C>
StepOperator<C> operator_step(OperatorKind kind, std::size_t i, RootType type, bool simple_root_system = false) {
  static const char* names[] = {"d", "pi", "pihat", "T"};
  std::string label = std::string(names[static_cast<int>(kind)]) + std::to_string(i) + type_letter(type);
  return {label, [=](const Polynomial<C>& p) {
            RootDatum d = simple_root_system ? simple_root_datum(type, i, p.nvars()) : root_datum(type, i, p.nvars());
            return apply_operator(kind, p, d);
          }};
}

template <Coefficient C>
struct ReductionStep {
  ExponentVector parent;
  StepOperator<C> op;
  C scalar = C::one();
};

/// Outcome of one application of a reduction rule: either a base-case
/// polynomial or a weighted sum of operators applied to parent expansions.
template <Coefficient C>
struct Reduction {
  std::optional<Polynomial<C>> base;
  std::vector<ReductionStep<C>> steps;

  static Reduction base_case(Polynomial<C> p) { return Reduction{std::move(p), {}}; }
  static Reduction step(ExponentVector parent, StepOperator<C> op, C scalar = C::one()) {
    Reduction r;
    r.steps.push_back({std::move(parent), std::move(op), std::move(scalar)});
    return r;
  }
};

/// Context handed to rules: step selection preference and the named scalar
/// parameters bound when the basis was registered.
template <Coefficient C>
struct RuleContext {
  AscentChoice choice = AscentChoice::First;
  const std::map<std::string, C>* params = nullptr;

  const C& param(const std::string& name) const {
    if (params) {
      auto it = params->find(name);
      if (it != params->end()) return it->second;
    }
    throw std::invalid_argument("basis parameter '" + name + "' is not bound");
  }
};

template <Coefficient C>
using ReductionRule = std::function<Reduction<C>(const ExponentVector&, const RuleContext<C>&)>;

/// Default recursion bound: 4 * (sum |v_i| + n^2).
inline std::size_t default_depth_bound(const ExponentVector& v) {
  std::size_t s = 0;
  for (int x : v) s += static_cast<std::size_t>(x < 0 ? -x : x);
  return 4 * (s + v.size() * v.size());
}

template <Coefficient C>
struct BasisDescriptor {
  std::string name;
  std::string prefix;
  IndexDomain domain = IndexDomain::Natural;
  LeadOrder order = LeadOrder::LexMin;
  ReductionRule<C> rule;
  std::map<std::string, C> params;
  std::optional<RootType> type;
  /// Variants of one family (the two Grothendieck bases) may share a prefix.
  std::string family;
  std::function<std::size_t(const ExponentVector&)> depth_bound = default_depth_bound;
  /// Expansions whose support are not basis indices (e.g. the negative
  /// Grothendieck basis) cannot be inverted greedily.
  bool invertible = true;
};

inline bool order_before(LeadOrder order, const ExponentVector& a, const ExponentVector& b) {
  switch (order) {
    case LeadOrder::LexMin: return compare(MonomialOrder::Lex, a, b) < 0;
    case LeadOrder::GradedMinLexMin: return compare(MonomialOrder::Graded, a, b) < 0;
    case LeadOrder::GradedMaxLexMax: return compare(MonomialOrder::Graded, a, b) > 0;
    case LeadOrder::GradedMaxLexMin: {
      int da = a.degree(), db = b.degree();
      return da != db ? da > db : compare(MonomialOrder::Lex, a, b) < 0;
    }
    case LeadOrder::GradedDominanceMax: return compare(MonomialOrder::GradedDominance, a, b) > 0;
  }
  return false;
}

/// A linear basis of the Laurent polynomials indexed by integer vectors,
/// defined by a reduction rule. Expansions are memoized per (index, choice);
/// the cache is guarded by a mutex so concurrent expand calls are safe.
template <Coefficient C>
class Basis {
 public:
  explicit Basis(BasisDescriptor<C> d) : d_(std::move(d)) {
    if (!d_.rule) throw std::invalid_argument("basis '" + d_.name + "' has no reduction rule");
  }

  const std::string& name() const { return d_.name; }
  const std::string& prefix() const { return d_.prefix; }
  IndexDomain domain() const { return d_.domain; }
  LeadOrder order() const { return d_.order; }
  std::optional<RootType> type() const { return d_.type; }
  bool invertible() const { return d_.invertible; }
  const std::string& family() const { return d_.family; }
  const BasisDescriptor<C>& descriptor() const { return d_; }

  void check_index(const ExponentVector& v) const {
    if (v.size() == 0) throw OutsideIndexDomain("basis " + d_.name + ": empty index vector");
    if (d_.domain == IndexDomain::Natural && !v.is_nonnegative())
      throw OutsideIndexDomain("basis " + d_.name + ": index (" + v.joined() + ") has a negative entry");
  }

  Polynomial<C> expand(const ExponentVector& v, AscentChoice choice = AscentChoice::First) const {
    check_index(v);
    return expand_impl(v, choice, 0, d_.depth_bound(v), v);
  }

  std::size_t cache_size() const {
    std::lock_guard lock(mu_);
    return cache_.size();
  }
  void clear_cache() const {
    std::lock_guard lock(mu_);
    cache_.clear();
  }

 private:
  struct Key {
    ExponentVector v;
    AscentChoice choice;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return ExponentHash{}(k.v) * 2 + (k.choice == AscentChoice::Last ? 1 : 0);
    }
  };

  Polynomial<C> expand_impl(const ExponentVector& v, AscentChoice choice, std::size_t depth, std::size_t bound,
                            const ExponentVector& top) const {
    {
      std::lock_guard lock(mu_);
      auto it = cache_.find(Key{v, choice});
      if (it != cache_.end()) return it->second;
    }
    if (depth > bound)
      throw RecursionLimitExceeded("basis " + d_.name + ": expanding index (" + top.joined() +
                                   ") exceeded the recursion depth bound " + std::to_string(bound));
    RuleContext<C> ctx{choice, &d_.params};
    Reduction<C> r = d_.rule(v, ctx);
    Polynomial<C> result(v.size());
    if (r.base) {
      if (r.base->nvars() != v.size())
        throw BasisError("basis " + d_.name + ": base case has the wrong variable count");
      result = *r.base;
    } else {
      if (r.steps.empty())
        throw BasisError("basis " + d_.name + ": rule returned neither a base case nor a step");
      for (const auto& s : r.steps) {
        if (s.parent.size() != v.size())
          throw BasisError("basis " + d_.name + ": step parent has the wrong length");
        if (d_.domain == IndexDomain::Natural && !s.parent.is_nonnegative())
          throw BasisError("basis " + d_.name + ": step parent (" + s.parent.joined() + ") leaves the index domain");
        Polynomial<C> parent = expand_impl(s.parent, choice, depth + 1, bound, top);
        result += s.op.apply(parent).scaled(s.scalar);
      }
    }
    std::lock_guard lock(mu_);
    cache_.emplace(Key{v, choice}, result);
    return result;
  }

  BasisDescriptor<C> d_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Key, Polynomial<C>, KeyHash> cache_;
};

template <Coefficient C>
using BasisPtr = std::shared_ptr<const Basis<C>>;

template <Coefficient C>
BasisPtr<C> make_basis(BasisDescriptor<C> d) {
  return std::make_shared<const Basis<C>>(std::move(d));
}

/// Finite linear combination of basis elements.
template <Coefficient C>
class BasisExpansion {
 public:
  using TermMap = std::map<ExponentVector, C>;

  BasisExpansion(BasisPtr<C> basis, std::size_t nvars) : basis_(std::move(basis)), nvars_(nvars) {
    if (!basis_) throw std::invalid_argument("expansion without a basis");
  }

  static BasisExpansion element(BasisPtr<C> basis, const ExponentVector& v, C c = C::one()) {
    BasisExpansion e(std::move(basis), v.size());
    e.add_term(v, c);
    return e;
  }

  const BasisPtr<C>& basis() const { return basis_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  C coefficient(const ExponentVector& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? C::zero() : it->second;
  }

  void add_term(const ExponentVector& v, const C& c) {
    if (v.size() != nvars_) throw VariableCountMismatch("basis index length does not match");
    basis_->check_index(v);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(v, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BasisExpansion& operator+=(const BasisExpansion& o) {
    check_same(o);
    for (const auto& [v, c] : o.terms_) add_term(v, c);
    return *this;
  }
  BasisExpansion& operator-=(const BasisExpansion& o) {
    check_same(o);
    for (const auto& [v, c] : o.terms_) add_term(v, -c);
    return *this;
  }
  friend BasisExpansion operator+(BasisExpansion a, const BasisExpansion& b) { return a += b; }
  friend BasisExpansion operator-(BasisExpansion a, const BasisExpansion& b) { return a -= b; }
  BasisExpansion scaled(const C& s) const {
    BasisExpansion e(basis_, nvars_);
    for (const auto& [v, c] : terms_) e.add_term(v, c * s);
    return e;
  }

  friend bool operator==(const BasisExpansion& a, const BasisExpansion& b) {
    return a.basis_ == b.basis_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    std::vector<std::pair<ExponentVector, C>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return compare(MonomialOrder::Graded, a.first, b.first) < 0;
    });
    std::vector<std::string> parts;
    for (const auto& [v, c] : sorted) parts.push_back(format_term(c, basis_->prefix() + "(" + v.joined() + ")"));
    return join_terms(parts);
  }

 private:
  void check_same(const BasisExpansion& o) const {
    if (o.basis_ != basis_) throw std::invalid_argument("expansions live in different bases");
    if (o.nvars_ != nvars_) throw VariableCountMismatch("expansions have different variable counts");
  }

  BasisPtr<C> basis_;
  std::size_t nvars_;
  TermMap terms_;
};

template <Coefficient C>
Polynomial<C> expand_combination(const BasisExpansion<C>& e, AscentChoice choice = AscentChoice::First) {
  Polynomial<C> out(e.nvars());
  for (const auto& [v, c] : e) out += e.basis()->expand(v, choice).scaled(c);
  return out;
}

/// Greedy triangular elimination of p into `basis`.
template <Coefficient C>
BasisExpansion<C> to_basis(const BasisPtr<C>& basis, const Polynomial<C>& p) {
  if (!basis->invertible())
    throw NonTriangularBasis("basis " + basis->name() + " does not support conversion into it");
  BasisExpansion<C> result(basis, p.nvars());
  Polynomial<C> work = p;
  std::optional<ExponentVector> previous;
  const LeadOrder order = basis->order();
  while (!work.is_zero()) {
    ExponentVector v;
    if (order == LeadOrder::LexMin) {
      v = work.begin()->first;
    } else {
      auto best = work.begin();
      for (auto it = work.begin(); it != work.end(); ++it)
        if (order_before(order, it->first, best->first)) best = it;
      v = best->first;
    }
    if (basis->domain() == IndexDomain::Natural && !v.is_nonnegative())
      throw OutsideIndexDomain("basis " + basis->name() + ": monomial x(" + v.joined() +
                               ") is outside the span of this basis");
    if (previous && !order_before(order, *previous, v))
      throw NonTriangularBasis("basis " + basis->name() + ": leading index (" + v.joined() +
                               ") did not advance past (" + previous->joined() + ")");
    Polynomial<C> element = basis->expand(v);
    C lead = element.coefficient(v);
    if (lead.is_zero())
      throw NonTriangularBasis("basis " + basis->name() + ": element (" + v.joined() + ") does not contain x^v");
    auto c = work.coefficient(v).divide(lead);
    if (!c)
      throw NonTriangularBasis("basis " + basis->name() + ": leading coefficient of (" + v.joined() +
                               ") does not divide");
    result.add_term(v, *c);
    work -= element.scaled(*c);
    previous = v;
  }
  return result;
}

template <Coefficient C>
BasisExpansion<C> convert(const BasisExpansion<C>& e, const BasisPtr<C>& target) {
  if (e.basis() == target) return e;
  return to_basis(target, expand_combination(e));
}

template <Coefficient C>
BasisExpansion<C> multiply_in_basis(const BasisExpansion<C>& a, const BasisExpansion<C>& b) {
  if (a.basis() != b.basis()) throw std::invalid_argument("multiply_in_basis: operands live in different bases");
  return to_basis(a.basis(), expand_combination(a) * expand_combination(b));
}

/// Named collection of bases with unique names and display prefixes.
template <Coefficient C>
class BasisRegistry {
 public:
  BasisPtr<C> add(BasisPtr<C> b) {
    std::lock_guard lock(mu_);
    if (by_name_.count(b->name())) throw DuplicateBasis("a basis named '" + b->name() + "' is already registered");
    for (const auto& [n, other] : by_name_)
      if (other->prefix() == b->prefix() && (b->family().empty() || other->family() != b->family()))
        throw DuplicateBasis("display prefix '" + b->prefix() + "' is already used by basis '" + n + "'");
    by_name_.emplace(b->name(), b);
    return b;
  }
  /// Registers a user-defined basis.
  BasisPtr<C> register_custom_basis(BasisDescriptor<C> d) { return add(make_basis(std::move(d))); }

  BasisPtr<C> find(const std::string& name) const {
    std::lock_guard lock(mu_);
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : it->second;
  }
  BasisPtr<C> find_prefix(const std::string& prefix) const {
    std::lock_guard lock(mu_);
    for (const auto& [n, b] : by_name_)
      if (b->prefix() == prefix) return b;
    return nullptr;
  }
  std::vector<std::string> names() const {
    std::lock_guard lock(mu_);
    std::vector<std::string> out;
    for (const auto& [n, b] : by_name_) out.push_back(n);
    return out;
  }

 private:
  mutable std::mutex mu_;
  std::map<std::string, BasisPtr<C>> by_name_;
};

}  // namespace multibasis
