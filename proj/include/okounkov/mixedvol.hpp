#pragma once

// Mixed volumes by polarization of the volume polynomial, with an
// independent interpolation route, and exact checks of the classical
// inequalities built on them (Alexandrov-Fenchel, Brunn-Minkowski type,
// the planar isoperimetric form).

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "okounkov/detail/linalg.hpp"
#include "okounkov/geometry.hpp"
#include "okounkov/root_compare.hpp"

namespace okounkov {

/// n bodies in R^n.
using BodyTuple = std::vector<LatticePolytope>;

inline std::size_t validate_tuple(const BodyTuple& t) {
  if (t.empty()) throw InputError("body tuple is empty");
  const std::size_t n = t.front().ambient_dim();
  for (const auto& b : t) {
    if (b.ambient_dim() != n) throw InputError("body tuple: dimension mismatch");
  }
  if (t.size() != n) throw InputError("body tuple length must equal the ambient dimension");
  return n;
}

/// V(D_1..D_n) = (1/n!) sum over nonempty I of (-1)^(n-|I|) Vol(sum_{i in I} D_i).
inline Rational mixed_volume(const BodyTuple& t) {
  const std::size_t n = validate_tuple(t);
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::optional<LatticePolytope>> sums(subsets);
  Rational total = 0;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    const std::size_t rest = mask & (mask - 1);
    sums[mask] = rest == 0 ? t[low] : minkowski_sum(*sums[rest], t[low]);
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if ((n - size) % 2 == 0) {
      total += sums[mask]->volume();
    } else {
      total -= sums[mask]->volume();
    }
  }
  return total / Rational(factorial(static_cast<unsigned>(n)));
}

namespace detail {

inline void compositions(std::size_t parts, unsigned total, std::vector<unsigned>& cur,
                         std::vector<std::vector<unsigned>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(parts, total - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Interpolation oracle (n <= 3): samples P(l) = Vol(l_1 D_1 + ... + l_n D_n)
/// on the principal lattice {l in N^n : |l| = n}, solves exactly for the
/// coefficients of the homogeneous degree-n polynomial, and returns the
/// coefficient of l_1...l_n divided by n!.
inline Rational mixed_volume_interp(const BodyTuple& t) {
  const std::size_t n = validate_tuple(t);
  if (n > 3) throw InputError("mixed_volume_interp: dimension must be <= 3");
  std::vector<std::vector<unsigned>> nodes;
  std::vector<unsigned> cur;
  detail::compositions(n, static_cast<unsigned>(n), cur, nodes);
  const auto& monomials = nodes;

  detail::RationalMatrix a;
  std::vector<Rational> values;
  for (const auto& lambda : nodes) {
    std::vector<Rational> row;
    for (const auto& beta : monomials) {
      Rational term = 1;
      for (std::size_t i = 0; i < n; ++i) term *= pow(Rational(lambda[i]), beta[i]);
      row.push_back(term);
    }
    a.push_back(std::move(row));
    std::optional<LatticePolytope> body;
    for (std::size_t i = 0; i < n; ++i) {
      if (lambda[i] == 0) continue;
      LatticePolytope scaled = scale(t[i], Rational(lambda[i]));
      body = body ? minkowski_sum(*body, scaled) : scaled;
    }
    values.push_back(body->volume());
  }
  const std::vector<Rational> coeffs = detail::solve(std::move(a), std::move(values));
  const std::vector<unsigned> ones(n, 1);
  for (std::size_t j = 0; j < monomials.size(); ++j) {
    if (monomials[j] == ones) return coeffs[j] / Rational(factorial(static_cast<unsigned>(n)));
  }
  throw InputError("mixed_volume_interp: internal monomial lookup failed");
}

struct Multiplicity {
  LatticePolytope body;
  unsigned count = 1;
};

/// (k_1 * D_1, ..., k_r * D_r, D_{m+1}, ..., D_n)
struct MultiplicityTuple {
  std::vector<Multiplicity> repeated;
  std::vector<LatticePolytope> rest;

  unsigned repeated_total() const {
    unsigned m = 0;
    for (const auto& r : repeated) m += r.count;
    return m;
  }

  BodyTuple expand() const {
    BodyTuple t;
    for (const auto& r : repeated) {
      if (r.count == 0) throw InputError("multiplicity must be positive");
      for (unsigned i = 0; i < r.count; ++i) t.push_back(r.body);
    }
    t.insert(t.end(), rest.begin(), rest.end());
    if (t.empty() || t.size() != t.front().ambient_dim()) {
      throw InputError("multiplicities plus remaining bodies must sum to the dimension");
    }
    return t;
  }
};

inline Rational mixed_volume_repeated(const MultiplicityTuple& t) {
  return mixed_volume(t.expand());
}

/// Both sides exact; `holds` is lhs >= rhs (or lhs <= rhs where noted).
struct InequalityReport {
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

/// V(D1,D2,D3..)^2 >= V(D1,D1,D3..) V(D2,D2,D3..).
inline InequalityReport check_alexandrov_fenchel(const BodyTuple& t) {
  const std::size_t n = validate_tuple(t);
  if (n < 2) throw InputError("Alexandrov-Fenchel check needs n >= 2");
  BodyTuple first = t, second = t;
  first[1] = t[0];
  second[0] = t[1];
  InequalityReport r;
  const Rational v = mixed_volume(t);
  r.lhs = v * v;
  r.rhs = mixed_volume(first) * mixed_volume(second);
  r.holds = r.lhs >= r.rhs;
  return r;
}

/// F(D) + F(D') <= F(D + D') with F(D) = V(m*D, fixed)^(1/m).
struct RootSumReport {
  unsigned m = 1;
  Rational a;  // F(D)^m
  Rational b;  // F(D')^m
  Rational c;  // F(D + D')^m
  Comparison relation = Comparison::equal;  // sign of c^(1/m) - a^(1/m) - b^(1/m)
  bool holds = false;
  double lhs = 0;  // a^(1/m) + b^(1/m), for display
  double rhs = 0;  // c^(1/m)
};

inline RootSumReport make_root_sum_report(unsigned m, Rational a, Rational b, Rational c) {
  RootSumReport r;
  r.m = m;
  r.relation = compare_root_sum(a, b, c, m);
  r.holds = r.relation != Comparison::less;
  r.lhs = std::pow(a.get_d(), 1.0 / m) + std::pow(b.get_d(), 1.0 / m);
  r.rhs = std::pow(c.get_d(), 1.0 / m);
  r.a = std::move(a);
  r.b = std::move(b);
  r.c = std::move(c);
  return r;
}

inline RootSumReport check_generalized_bm(unsigned m, const LatticePolytope& body,
                                          const LatticePolytope& other,
                                          const std::vector<LatticePolytope>& fixed) {
  const std::size_t n = body.ambient_dim();
  if (m == 0 || m > n) throw InputError("generalized BM: need 0 < m <= n");
  if (fixed.size() != n - m) throw InputError("generalized BM: fixed must hold n - m bodies");
  auto f = [&](const LatticePolytope& d) {
    return mixed_volume_repeated(MultiplicityTuple{{{d, m}}, fixed});
  };
  return make_root_sum_report(m, f(body), f(other), f(minkowski_sum(body, other)));
}

struct IsoperimetricReport {
  Rational area1;
  Rational area2;
  Rational mixed_area;
  Rational lhs;  // area1 * area2
  Rational rhs;  // mixed_area^2
  bool holds = false;
  bool expansion_identity = false;  // Area(D1+D2) = Area(D1) + 2A + Area(D2)
};

/// Area(D1) Area(D2) <= A(D1, D2)^2 in the plane.
inline IsoperimetricReport check_isoperimetric(const LatticePolytope& d1, const LatticePolytope& d2) {
  if (d1.ambient_dim() != 2 || d2.ambient_dim() != 2) {
    throw InputError("isoperimetric check requires planar bodies");
  }
  IsoperimetricReport r;
  r.area1 = d1.volume();
  r.area2 = d2.volume();
  r.mixed_area = mixed_volume({d1, d2});
  r.lhs = r.area1 * r.area2;
  r.rhs = r.mixed_area * r.mixed_area;
  r.holds = r.lhs <= r.rhs;
  r.expansion_identity =
      minkowski_sum(d1, d2).volume() == r.area1 + 2 * r.mixed_area + r.area2;
  return r;
}

/// V^m(k_1*D_1, ..., k_r*D_r, fixed) >= prod_j V^{k_j}(m*D_j, fixed).
inline InequalityReport check_af_corollary(const MultiplicityTuple& t) {
  const unsigned m = t.repeated_total();
  InequalityReport r;
  r.lhs = pow(mixed_volume_repeated(t), m);
  r.rhs = 1;
  for (const auto& rep : t.repeated) {
    const Rational v = mixed_volume_repeated(MultiplicityTuple{{{rep.body, m}}, t.rest});
    r.rhs *= pow(v, rep.count);
  }
  r.holds = r.lhs >= r.rhs;
  return r;
}

}  // namespace okounkov
