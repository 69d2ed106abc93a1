#pragma once

// Sumsets, completions, difference lattices and finite slices of graded
// semigroups in N x Z^n together with their Newton convex bodies and the
// asymptotic diagnostics (point densities, interior saturation margins).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include "okounkov/geometry.hpp"

namespace okounkov {

inline SupportSet sumset(const SupportSet& a, const SupportSet& b) {
  if (a.dim() != b.dim()) throw InputError("sumset: dimension mismatch");
  std::vector<LatticePoint> out;
  out.reserve(a.size() * b.size());
  for (const auto& p : a) {
    for (const auto& q : b) {
      LatticePoint s(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
      out.push_back(std::move(s));
    }
  }
  return SupportSet(a.dim(), std::move(out));
}

/// k*A = A + ... + A (k copies).
inline SupportSet sumset_power(const SupportSet& a, unsigned k) {
  if (k == 0) throw InputError("sumset_power: k must be positive");
  SupportSet acc = a;
  for (unsigned i = 1; i < k; ++i) acc = sumset(acc, a);
  return acc;
}

/// Lattice points of conv(A).
inline SupportSet completion(const SupportSet& a) { return lattice_points(convex_hull(a)); }

/// Truth of: completion(compl(A) + compl(C)) == completion(compl(B) + compl(C))
///           implies compl(A) == compl(B).
inline bool check_cancelation(const SupportSet& a, const SupportSet& b, const SupportSet& c) {
  if (a.dim() != b.dim() || a.dim() != c.dim()) throw InputError("cancelation: dimension mismatch");
  const SupportSet ca = completion(a), cb = completion(b), cc = completion(c);
  const bool premise = completion(sumset(ca, cc)) == completion(sumset(cb, cc));
  return !premise || ca == cb;
}

/// Elementary divisors (positive, each dividing the next) of an integer matrix.
inline std::vector<Integer> smith_normal_form(std::vector<std::vector<Integer>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<Integer> divisors;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (m[r][c] != 0 && (pr == rows || abs(m[r][c]) < abs(m[pr][pc]))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == rows) return divisors;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m[r][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m[t][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][c].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (m[r][c] % m[t][t] != 0) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      for (std::size_t c = t; c < cols; ++c) m[t][c] += m[bad_row][c];
    }
    divisors.push_back(abs(m[t][t]));
  }
  return divisors;
}

/// Index of a subgroup of Z^n; empty when the subgroup has rank < n.
struct LatticeIndex {
  std::optional<Integer> value;
  bool finite() const { return value.has_value(); }
  bool is_one() const { return value && *value == 1; }
};

/// Index in Z^n of the group generated by all differences a - b with a, b in
/// the same set.
inline LatticeIndex difference_lattice_index(const std::vector<SupportSet>& sets) {
  if (sets.empty()) throw InputError("difference_lattice_index: no sets");
  const std::size_t n = sets.front().dim();
  std::vector<std::vector<Integer>> rows;
  for (const auto& s : sets) {
    if (s.dim() != n) throw InputError("difference_lattice_index: dimension mismatch");
    const auto& base = s.points().front();
    for (std::size_t i = 1; i < s.size(); ++i) {
      std::vector<Integer> r(n);
      for (std::size_t c = 0; c < n; ++c) r[c] = static_cast<long>(s.points()[i][c] - base[c]);
      rows.push_back(std::move(r));
    }
  }
  const auto divisors = smith_normal_form(std::move(rows));
  if (divisors.size() < n) return {};
  Integer index = 1;
  for (const auto& d : divisors) index *= d;
  return {index};
}

/// Levels S_1..S_kmax of a graded semigroup; levels[k-1] holds S_k.
struct GradedSemigroupSlice {
  std::size_t dim = 0;
  std::vector<SupportSet> levels;

  std::size_t k_max() const { return levels.size(); }
  const SupportSet& level(std::size_t k) const { return levels.at(k - 1); }

  void validate() const {
    if (levels.empty()) throw InputError("graded slice has no levels");
    for (const auto& l : levels) {
      if (l.dim() != dim) throw InputError("graded slice: level dimension mismatch");
    }
  }

  /// S_j + S_k subset of S_{j+k} whenever j + k <= k_max.
  bool is_superadditive() const {
    for (std::size_t j = 1; j <= k_max(); ++j) {
      for (std::size_t k = j; j + k <= k_max(); ++k) {
        if (!sumset(level(j), level(k)).is_subset_of(level(j + k))) return false;
      }
    }
    return true;
  }
};

/// S_k = k*A for k = 1..k_max.
inline GradedSemigroupSlice sumset_slice(const SupportSet& a, std::size_t k_max) {
  if (k_max == 0) throw InputError("k_max must be positive");
  GradedSemigroupSlice s{a.dim(), {a}};
  for (std::size_t k = 2; k <= k_max; ++k) s.levels.push_back(sumset(s.levels.back(), a));
  return s;
}

struct ConeSection {
  LatticePolytope polytope;
  std::size_t level_used = 0;
};

namespace detail {

inline std::vector<RationalPoint> scaled_level(const SupportSet& level, std::size_t k) {
  std::vector<RationalPoint> pts;
  const Rational inv(1, static_cast<unsigned long>(k));
  for (const auto& p : level) pts.push_back(inv * to_rational_point(p));
  return pts;
}

}  // namespace detail

/// conv of {x/j : x in S_j, j <= k_max}: an inner approximation of the
/// Newton convex body, nondecreasing in k_max.
inline ConeSection newton_body(const GradedSemigroupSlice& s) {
  s.validate();
  std::vector<RationalPoint> pts;
  for (std::size_t k = 1; k <= s.k_max(); ++k) {
    auto lvl = detail::scaled_level(s.level(k), k);
    pts.insert(pts.end(), lvl.begin(), lvl.end());
  }
  return {convex_hull(pts), s.k_max()};
}

struct DensityEntry {
  std::size_t k = 0;
  Rational ratio;   // #S_k / k^n
  Rational volume;  // Vol of the approximation built from levels <= k
};

struct DensityReport {
  std::vector<DensityEntry> entries;
  LatticeIndex index;
  bool ample = false;
  Rational target_volume;
};

inline DensityReport density_sequence(const GradedSemigroupSlice& s) {
  s.validate();
  DensityReport r;
  r.index = difference_lattice_index(s.levels);
  r.ample = r.index.is_one();
  std::vector<RationalPoint> hull_pts;
  for (std::size_t k = 1; k <= s.k_max(); ++k) {
    auto lvl = detail::scaled_level(s.level(k), k);
    hull_pts.insert(hull_pts.end(), lvl.begin(), lvl.end());
    const LatticePolytope body = convex_hull(hull_pts);
    hull_pts = body.vertices();
    Integer kn;
    mpz_ui_pow_ui(kn.get_mpz_t(), k, s.dim);
    r.entries.push_back({k, make_rational(Integer(static_cast<unsigned long>(s.level(k).size())), kn),
                         body.volume()});
  }
  r.target_volume = r.entries.back().volume;
  return r;
}

struct MarginEntry {
  std::size_t k = 0;
  std::size_t missing_count = 0;    // deep lattice points of k*conv(A) absent from S_k
  std::size_t missing_total = 0;    // all lattice points of k*conv(A) absent from S_k
  double max_missing_depth = 0;     // largest boundary distance among absent points
};

namespace detail {

inline SupportSet require_sumset_generated(const GradedSemigroupSlice& s) {
  s.validate();
  const SupportSet& a = s.level(1);
  if (!difference_lattice_index({a}).is_one()) {
    throw InputError("interior_margin: generating set is not ample");
  }
  SupportSet acc = a;
  for (std::size_t k = 2; k <= s.k_max(); ++k) {
    acc = sumset(acc, a);
    if (!(acc == s.level(k))) throw InputError("interior_margin: levels are not sumset powers");
  }
  return a;
}

}  // namespace detail

/// For each k, counts lattice points of k*conv(A) at distance > C from its
/// boundary that are missing from S_k. Depth comparisons are exact: a point
/// x is deep when every facet a.x <= b has (b - a.x)^2 > C^2 |a|^2.
inline std::vector<MarginEntry> interior_margin(const GradedSemigroupSlice& s, const Rational& c) {
  if (c < 0) throw InputError("interior_margin: C must be nonnegative");
  const SupportSet a = detail::require_sumset_generated(s);
  const LatticePolytope base = convex_hull(a);
  std::vector<MarginEntry> out;
  for (std::size_t k = 1; k <= s.k_max(); ++k) {
    const LatticePolytope body = scale(base, Rational(static_cast<unsigned long>(k)));
    const SupportSet& level = s.level(k);
    MarginEntry e{k, 0, 0, 0.0};
    for (const auto& p : lattice_point_list(body)) {
      if (level.contains(p)) continue;
      ++e.missing_total;
      const RationalPoint x = to_rational_point(p);
      bool deep = true;
      double depth = std::numeric_limits<double>::infinity();
      for (const auto& h : body.inequalities()) {
        const Rational slack = h.slack(x);
        Rational norm2 = 0;
        for (const auto& v : h.normal) norm2 += v * v;
        if (slack <= 0 || slack * slack <= c * c * norm2) deep = false;
        depth = std::min(depth, slack.get_d() / std::sqrt(norm2.get_d()));
      }
      if (deep) ++e.missing_count;
      e.max_missing_depth = std::max(e.max_missing_depth, depth);
    }
    out.push_back(e);
  }
  return out;
}

struct MarginSearch {
  std::optional<Rational> constant;  // smallest candidate with no deep gaps at any k
  std::vector<MarginEntry> entries;  // table at the chosen (or largest) candidate
};

inline MarginSearch find_margin_constant(const GradedSemigroupSlice& s,
                                         const std::vector<Rational>& candidates = {0, 1, 2, 4, 8}) {
  MarginSearch r;
  for (const auto& c : candidates) {
    r.entries = interior_margin(s, c);
    const bool ok = std::all_of(r.entries.begin(), r.entries.end(),
                                [](const MarginEntry& e) { return e.missing_count == 0; });
    if (ok) {
      r.constant = c;
      return r;
    }
  }
  return r;
}

}  // namespace okounkov
