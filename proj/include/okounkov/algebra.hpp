#pragma once

// Laurent polynomials over Q, additive monomial orders and the valuation
// they induce, finite-dimensional subspaces with products and powers, and
// the graded semigroup of valuation images of the powers of a subspace.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "okounkov/geometry.hpp"
#include "okounkov/semigroup.hpp"

namespace okounkov {

using Exponent = LatticePoint;

/// Additive total order on Z^n. Lex compares x_1 first, smaller first;
/// graded lex compares grading . e first and breaks ties lexicographically.
class MonomialOrder {
 public:
  enum class Kind { lex, grlex };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}); }
  static MonomialOrder graded_lex(std::vector<std::int64_t> grading) {
    if (grading.empty()) throw InputError("grlex needs a grading vector");
    for (auto g : grading) {
      if (g <= 0) throw InputError("grlex grading entries must be positive");
    }
    return MonomialOrder(Kind::grlex, std::move(grading));
  }

  Kind kind() const { return kind_; }
  const std::vector<std::int64_t>& grading() const { return grading_; }

  bool less(const Exponent& a, const Exponent& b) const {
    if (kind_ == Kind::grlex) {
      if (grading_.size() != a.size()) throw InputError("grading length mismatch");
      std::int64_t da = 0, db = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        da += grading_[i] * a[i];
        db += grading_[i] * b[i];
      }
      if (da != db) return da < db;
    }
    return a < b;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::vector<std::int64_t> g) : kind_(k), grading_(std::move(g)) {}
  Kind kind_;
  std::vector<std::int64_t> grading_;
};

class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw InputError("polynomial dimension must be positive");
  }

  static LaurentPolynomial monomial(const Exponent& e, const Rational& c = 1) {
    LaurentPolynomial p(e.size());
    p.add_term(e, c);
    return p;
  }

  std::size_t dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponent& e, const Rational& c) {
    if (e.size() != dim_) throw InputError("exponent has wrong dimension");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SupportSet support() const {
    if (is_zero()) throw InputError("zero polynomial has empty support");
    std::vector<LatticePoint> pts;
    for (const auto& [e, c] : terms_) pts.push_back(e);
    return SupportSet(dim_, std::move(pts));
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  /// this -= s * o
  void subtract_multiple(const Rational& s, const LaurentPolynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -s * c);
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const Rational& s, const LaurentPolynomial& a) {
    LaurentPolynomial r(a.dim_);
    if (s == 0) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
    return r;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    a.check(b);
    LaurentPolynomial r(a.dim_);
    Exponent e(a.dim_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void check(const LaurentPolynomial& o) const {
    if (o.dim_ != dim_) throw InputError("polynomial dimension mismatch");
  }

  std::size_t dim_;
  std::map<Exponent, Rational> terms_;
};

/// The order-minimal exponent of the support of f (f != 0).
inline Exponent valuation(const LaurentPolynomial& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw InputError("valuation of the zero polynomial");
  if (ord.kind() == MonomialOrder::Kind::lex) return f.terms().begin()->first;
  const Exponent* best = nullptr;
  for (const auto& [e, c] : f.terms()) {
    if (best == nullptr || ord.less(e, *best)) best = &e;
  }
  return *best;
}

namespace detail {

/// Gaussian elimination against the order: the result spans the same space
/// and has pairwise distinct valuations, each element monic at its valuation.
inline std::vector<LaurentPolynomial> echelonize(const std::vector<LaurentPolynomial>& gens,
                                                 const MonomialOrder& ord) {
  std::vector<LaurentPolynomial> basis;
  std::map<Exponent, std::size_t> pivot;
  for (const auto& g : gens) {
    LaurentPolynomial f = g;
    while (!f.is_zero()) {
      const Exponent e = valuation(f, ord);
      auto it = pivot.find(e);
      if (it == pivot.end()) {
        f = (1 / f.coefficient(e)) * f;
        pivot.emplace(e, basis.size());
        basis.push_back(std::move(f));
        break;
      }
      f.subtract_multiple(f.coefficient(e), basis[it->second]);
    }
  }
  return basis;
}

}  // namespace detail

class LaurentSubspace {
 public:
  /// Span of nonzero generators; the basis is echelonized under lex.
  static LaurentSubspace span(std::size_t dim, const std::vector<LaurentPolynomial>& gens) {
    for (const auto& g : gens) {
      if (g.dim() != dim) throw InputError("generator dimension mismatch");
    }
    LaurentSubspace s(dim);
    s.basis_ = detail::echelonize(gens, MonomialOrder::lex());
    if (s.basis_.empty()) throw InputError("subspace must be nonzero");
    return s;
  }

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<LaurentPolynomial>& basis() const { return basis_; }

  bool contains(const LaurentPolynomial& f) const {
    if (f.is_zero()) return true;
    std::vector<LaurentPolynomial> gens = basis_;
    gens.push_back(f);
    return detail::echelonize(gens, MonomialOrder::lex()).size() == basis_.size();
  }

  friend bool operator==(const LaurentSubspace& a, const LaurentSubspace& b) {
    if (a.dim_ != b.dim_ || a.dimension() != b.dimension()) return false;
    std::vector<LaurentPolynomial> gens = a.basis_;
    gens.insert(gens.end(), b.basis_.begin(), b.basis_.end());
    return detail::echelonize(gens, MonomialOrder::lex()).size() == a.dimension();
  }

 private:
  explicit LaurentSubspace(std::size_t dim) : dim_(dim) {}
  std::size_t dim_;
  std::vector<LaurentPolynomial> basis_;
};

/// L_A = span{z^a : a in A}.
inline LaurentSubspace monomial_subspace(const SupportSet& a) {
  std::vector<LaurentPolynomial> gens;
  for (const auto& e : a) gens.push_back(LaurentPolynomial::monomial(e));
  return LaurentSubspace::span(a.dim(), gens);
}

/// Span of all products fg, f in L1, g in L2.
inline LaurentSubspace product(const LaurentSubspace& l1, const LaurentSubspace& l2) {
  if (l1.ambient_dim() != l2.ambient_dim()) throw InputError("product: dimension mismatch");
  std::vector<LaurentPolynomial> gens;
  gens.reserve(l1.dimension() * l2.dimension());
  for (const auto& f : l1.basis()) {
    for (const auto& g : l2.basis()) gens.push_back(f * g);
  }
  return LaurentSubspace::span(l1.ambient_dim(), gens);
}

/// L^k by binary exponentiation.
inline LaurentSubspace power(const LaurentSubspace& l, unsigned k) {
  if (k == 0) throw InputError("power: k must be positive");
  LaurentSubspace base = l;
  std::optional<LaurentSubspace> acc;
  while (true) {
    if (k & 1u) acc = acc ? product(*acc, base) : base;
    k >>= 1;
    if (k == 0) break;
    base = product(base, base);
  }
  return *acc;
}

/// v(L \ {0}); its cardinality equals dim L.
struct ValuationImage {
  SupportSet exponents;
};

inline ValuationImage valuation_image(const LaurentSubspace& l, const MonomialOrder& ord) {
  std::vector<LatticePoint> pts;
  for (const auto& f : detail::echelonize(l.basis(), ord)) pts.push_back(valuation(f, ord));
  return {SupportSet(l.ambient_dim(), std::move(pts))};
}

/// S_k = v(L^k) for k = 1..k_max.
inline GradedSemigroupSlice semigroup_of_subspace(const LaurentSubspace& l, const MonomialOrder& ord,
                                                  std::size_t k_max) {
  if (k_max == 0) throw InputError("k_max must be positive");
  GradedSemigroupSlice s{l.ambient_dim(), {}};
  LaurentSubspace cur = l;
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (k > 1) cur = product(cur, l);
    s.levels.push_back(valuation_image(cur, ord).exponents);
  }
  return s;
}

struct HilbertPoint {
  std::size_t k = 0;
  std::size_t dim = 0;
};

/// H_L(k) = dim L^k for k = 1..k_max.
inline std::vector<HilbertPoint> hilbert_function(const LaurentSubspace& l, std::size_t k_max) {
  if (k_max == 0) throw InputError("k_max must be positive");
  std::vector<HilbertPoint> out;
  LaurentSubspace cur = l;
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (k > 1) cur = product(cur, l);
    out.push_back({k, cur.dimension()});
  }
  return out;
}

/// Eventual polynomial behaviour of a Hilbert function read off the tail of
/// its difference table.
struct HilbertTail {
  std::size_t degree = 0;
  Integer leading_difference;  // degree-th difference = degree! * leading coefficient
  Rational leading_coefficient;
  bool stable = false;         // the degree-th difference repeats on the tail
};

inline HilbertTail fit_hilbert_tail(const std::vector<HilbertPoint>& h) {
  std::vector<Integer> row;
  for (const auto& p : h) row.emplace_back(static_cast<unsigned long>(p.dim));
  HilbertTail t;
  for (std::size_t d = 0; row.size() >= 2; ++d) {
    // row holds the d-th differences; check whether its tail is constant.
    const std::size_t window = std::min<std::size_t>(3, row.size());
    bool constant_tail = true;
    for (std::size_t i = row.size() - window; i + 1 < row.size(); ++i) {
      if (row[i] != row.back()) constant_tail = false;
    }
    if (constant_tail) {
      t.degree = d;
      t.leading_difference = row.back();
      t.leading_coefficient = make_rational(row.back(), factorial(static_cast<unsigned>(d)));
      t.stable = window == 3;
      return t;
    }
    std::vector<Integer> next;
    for (std::size_t i = 1; i < row.size(); ++i) next.push_back(row[i] - row[i - 1]);
    row = std::move(next);
  }
  t.degree = h.size();
  return t;
}

inline ConeSection newton_okounkov_body(const LaurentSubspace& l, const MonomialOrder& ord,
                                        std::size_t k_max) {
  return newton_body(semigroup_of_subspace(l, ord, k_max));
}

struct SuperadditivityReport {
  LatticePolytope sum;      // approximation(L1) + approximation(L2)
  LatticePolytope product;  // approximation(L1 L2)
  bool holds = false;       // sum contained in product
};

inline SuperadditivityReport superadditivity_check(const LaurentSubspace& l1, const LaurentSubspace& l2,
                                                   const MonomialOrder& ord, std::size_t k_max) {
  if (l1.ambient_dim() != l2.ambient_dim()) throw InputError("superadditivity: dimension mismatch");
  const auto d1 = newton_okounkov_body(l1, ord, k_max).polytope;
  const auto d2 = newton_okounkov_body(l2, ord, k_max).polytope;
  const auto d12 = newton_okounkov_body(product(l1, l2), ord, k_max).polytope;
  SuperadditivityReport r{minkowski_sum(d1, d2), d12, false};
  r.holds = r.product.contains(r.sum);
  return r;
}

}  // namespace okounkov
