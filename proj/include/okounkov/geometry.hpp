#pragma once

// Exact rational convex geometry in ambient dimension 1..4: hulls in
// V-representation, Minkowski sums, dilations, volumes, lattice points and a
// floating-point Hausdorff distance for diagnostics.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "okounkov/detail/hull_kernel.hpp"
#include "okounkov/detail/linalg.hpp"
#include "okounkov/rational.hpp"

namespace okounkov {

inline constexpr std::size_t kMaxDim = 4;

class RationalPoint {
 public:
  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    for (auto& c : coords_) c.canonicalize();
  }
  RationalPoint(std::initializer_list<Rational> coords)
      : RationalPoint(std::vector<Rational>(coords)) {}

  static RationalPoint zero(std::size_t dim) {
    return RationalPoint(std::vector<Rational>(dim, Rational(0)));
  }

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(),
                                        b.coords_.begin(), b.coords_.end());
  }
  friend RationalPoint operator+(const RationalPoint& a, const RationalPoint& b) {
    std::vector<Rational> c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] + b[i];
    return RationalPoint(std::move(c));
  }
  friend RationalPoint operator-(const RationalPoint& a, const RationalPoint& b) {
    std::vector<Rational> c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] - b[i];
    return RationalPoint(std::move(c));
  }
  friend RationalPoint operator*(const Rational& s, const RationalPoint& a) {
    std::vector<Rational> c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = s * a[i];
    return RationalPoint(std::move(c));
  }

  std::vector<double> to_doubles() const {
    std::vector<double> out;
    out.reserve(dim());
    for (const auto& c : coords_) out.push_back(c.get_d());
    return out;
  }

 private:
  std::vector<Rational> coords_;
};

using LatticePoint = std::vector<std::int64_t>;

inline RationalPoint to_rational_point(const LatticePoint& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (auto v : p) c.emplace_back(static_cast<long>(v));
  return RationalPoint(std::move(c));
}

/// Finite nonempty set of integer vectors, kept sorted and deduplicated.
class SupportSet {
 public:
  SupportSet(std::size_t dim, std::vector<LatticePoint> points)
      : dim_(dim), points_(std::move(points)) {
    if (dim_ == 0) throw InputError("support set dimension must be positive");
    if (points_.empty()) throw InputError("support set must be nonempty");
    for (const auto& p : points_) {
      if (p.size() != dim_) throw InputError("support point has wrong dimension");
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<LatticePoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const LatticePoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
  }
  bool is_subset_of(const SupportSet& other) const {
    return std::includes(other.points_.begin(), other.points_.end(),
                         points_.begin(), points_.end());
  }

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  std::size_t dim_;
  std::vector<LatticePoint> points_;
};

/// normal . x <= offset (or == offset for an equation).
struct HalfSpace {
  std::vector<Rational> normal;
  Rational offset;

  Rational slack(const RationalPoint& x) const {
    Rational s = offset;
    for (std::size_t i = 0; i < normal.size(); ++i) s -= normal[i] * x[i];
    return s;
  }
};

class LatticePolytope;
LatticePolytope convex_hull(const std::vector<RationalPoint>& points);

/// A rational polytope in V-representation with its derived H-description,
/// a triangulation into affine_dim-simplices and its exact volume.
class LatticePolytope {
 public:
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == ambient_dim_; }
  const std::vector<RationalPoint>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& inequalities() const { return inequalities_; }
  const std::vector<HalfSpace>& equations() const { return equations_; }
  /// Each simplex lists affine_dim+1 indices into vertices().
  const std::vector<std::vector<std::size_t>>& simplices() const { return simplices_; }
  const Rational& volume() const { return volume_; }

  bool contains(const RationalPoint& x) const {
    if (x.dim() != ambient_dim_) throw InputError("point dimension mismatch");
    for (const auto& e : equations_) {
      if (e.slack(x) != 0) return false;
    }
    for (const auto& h : inequalities_) {
      if (h.slack(x) < 0) return false;
    }
    return true;
  }

  bool contains(const LatticePolytope& inner) const {
    for (const auto& v : inner.vertices()) {
      if (!contains(v)) return false;
    }
    return true;
  }

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

 private:
  friend LatticePolytope convex_hull(const std::vector<RationalPoint>& points);

  std::size_t ambient_dim_ = 0;
  std::size_t affine_dim_ = 0;
  std::vector<RationalPoint> vertices_;
  std::vector<HalfSpace> inequalities_;
  std::vector<HalfSpace> equations_;
  std::vector<std::vector<std::size_t>> simplices_;
  Rational volume_ = 0;
};

namespace detail {

struct FullDimHull {
  std::vector<std::size_t> vertex_index;             // into the input list
  std::vector<std::vector<std::size_t>> simplices;    // into vertex_index order
  std::vector<std::vector<mpz_class>> normals;
  std::vector<mpz_class> offsets;
  mpz_class abs_det_sum;                              // d! * volume (scaled coords)
};

template <class Int>
std::vector<std::size_t> affine_basis_indices(const std::vector<std::vector<Int>>& pts,
                                              std::size_t d) {
  RationalMatrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> row(d);
    for (std::size_t c = 0; c < d; ++c) {
      row[c] = Rational(to_mpz(pts[i][c]) - to_mpz(pts[0][c]));
    }
    diffs.push_back(std::move(row));
  }
  const Echelon e = echelon(diffs, d);
  std::vector<std::size_t> idx{0};
  for (std::size_t r : e.row_order) idx.push_back(r + 1);
  return idx;
}

template <class Int>
FullDimHull full_dim_hull(const std::vector<std::vector<Int>>& pts, std::size_t d) {
  // Pass 1 on every point identifies the facet hyperplanes and hence the
  // extreme points; pass 2 reruns on the extreme points alone so that the
  // boundary triangulation only uses vertices.
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(0x5eed);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng() % i]);
  }
  std::vector<std::vector<Int>> shuffled;
  shuffled.reserve(pts.size());
  for (std::size_t i : order) shuffled.push_back(pts[i]);
  const auto init = affine_basis_indices(shuffled, d);
  const HullResult<Int> first = BeneathBeyond<Int>(shuffled, d).run(init);

  std::vector<bool> on_boundary(shuffled.size(), false);
  for (const auto& s : first.boundary) {
    for (std::size_t i : s) on_boundary[i] = true;
  }
  std::vector<std::size_t> vertex_local;
  for (std::size_t i = 0; i < shuffled.size(); ++i) {
    if (!on_boundary[i]) continue;
    RationalMatrix tight;
    for (std::size_t f = 0; f < first.normals.size(); ++f) {
      Int s(0);
      for (std::size_t c = 0; c < d; ++c) s += first.normals[f][c] * shuffled[i][c];
      if (s == first.offsets[f]) {
        std::vector<Rational> row(d);
        for (std::size_t c = 0; c < d; ++c) row[c] = Rational(to_mpz(first.normals[f][c]));
        tight.push_back(std::move(row));
      }
    }
    if (tight.size() >= d && rank(tight, d) == d) vertex_local.push_back(i);
  }

  std::vector<std::vector<Int>> vpts;
  for (std::size_t i : vertex_local) vpts.push_back(shuffled[i]);
  const auto vinit = affine_basis_indices(vpts, d);
  const HullResult<Int> second = BeneathBeyond<Int>(vpts, d).run(vinit);

  FullDimHull out;
  for (std::size_t i : vertex_local) out.vertex_index.push_back(order[i]);
  for (std::size_t f = 0; f < second.normals.size(); ++f) {
    std::vector<mpz_class> n;
    for (const auto& v : second.normals[f]) n.push_back(to_mpz(v));
    out.normals.push_back(std::move(n));
    out.offsets.push_back(to_mpz(second.offsets[f]));
  }
  std::vector<Int> m(d * d);
  for (const auto& s : second.boundary) {
    if (std::find(s.begin(), s.end(), std::size_t{0}) != s.end()) continue;
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) m[r * d + c] = vpts[s[r]][c] - vpts[0][c];
    }
    const Int det = small_det(m, d);
    if (det == 0) continue;
    out.abs_det_sum += to_mpz(abs_int(det));
    std::vector<std::size_t> simplex{0};
    simplex.insert(simplex.end(), s.begin(), s.end());
    out.simplices.push_back(std::move(simplex));
  }
  return out;
}

}  // namespace detail

/// Convex hull of a nonempty point list of uniform dimension 1..4.
inline LatticePolytope convex_hull(const std::vector<RationalPoint>& input) {
  if (input.empty()) throw InputError("convex_hull: empty input");
  const std::size_t n = input.front().dim();
  if (n == 0 || n > kMaxDim) throw InputError("convex_hull: dimension must be in 1..4");
  for (const auto& p : input) {
    if (p.dim() != n) throw InputError("convex_hull: dimension mismatch among points");
  }
  std::vector<RationalPoint> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  detail::RationalMatrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back((pts[i] - pts[0]).coords());
  const detail::Echelon ech = detail::echelon(diffs, n);
  const std::size_t d = ech.rows.size();

  LatticePolytope poly;
  poly.ambient_dim_ = n;
  poly.affine_dim_ = d;
  for (auto& c : detail::nullspace(diffs, n)) {
    HalfSpace e{c, 0};
    for (std::size_t i = 0; i < n; ++i) e.offset += c[i] * pts[0][i];
    poly.equations_.push_back(std::move(e));
  }

  auto unit = [n](std::size_t axis, int sign) {
    std::vector<Rational> v(n, Rational(0));
    v[axis] = sign;
    return v;
  };

  std::vector<std::size_t> vertex_index;
  std::vector<std::vector<std::size_t>> simplices;
  if (d == 0) {
    vertex_index = {0};
    simplices = {{0}};
  } else if (d == 1) {
    const std::size_t axis = ech.pivots[0];
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i][axis] < pts[lo][axis]) lo = i;
      if (pts[i][axis] > pts[hi][axis]) hi = i;
    }
    vertex_index = {lo, hi};
    simplices = {{0, 1}};
    poly.inequalities_.push_back({unit(axis, 1), pts[hi][axis]});
    poly.inequalities_.push_back({unit(axis, -1), -pts[lo][axis]});
    if (n == 1) poly.volume_ = pts[hi][0] - pts[lo][0];
  } else {
    std::vector<std::size_t> axes = ech.pivots;
    std::sort(axes.begin(), axes.end());
    mpz_class scale = 1;
    for (const auto& p : pts) {
      for (std::size_t a : axes) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), p[a].get_den_mpz_t());
    }
    std::vector<std::vector<mpz_class>> big(pts.size(), std::vector<mpz_class>(d));
    mpz_class max_abs = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t c = 0; c < d; ++c) {
        Rational v = pts[i][axes[c]] * scale;
        big[i][c] = v.get_num();
        if (abs(big[i][c]) > max_abs) max_abs = abs(big[i][c]);
      }
    }
    detail::FullDimHull h;
    if (max_abs < (mpz_class(1) << 22)) {
      std::vector<std::vector<detail::int128>> small(pts.size(), std::vector<detail::int128>(d));
      for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t c = 0; c < d; ++c) small[i][c] = big[i][c].get_si();
      }
      h = detail::full_dim_hull(small, d);
    } else {
      h = detail::full_dim_hull(big, d);
    }
    vertex_index = h.vertex_index;
    simplices = h.simplices;
    for (std::size_t f = 0; f < h.normals.size(); ++f) {
      HalfSpace hs{std::vector<Rational>(n, Rational(0)), Rational(h.offsets[f]) / scale};
      for (std::size_t c = 0; c < d; ++c) hs.normal[axes[c]] = Rational(h.normals[f][c]);
      hs.offset.canonicalize();
      poly.inequalities_.push_back(std::move(hs));
    }
    if (d == n) {
      mpz_class denom = factorial(static_cast<unsigned>(n));
      mpz_class sp;
      mpz_pow_ui(sp.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(n));
      poly.volume_ = make_rational(h.abs_det_sum, denom * sp);
    }
  }

  // Canonical lexicographic vertex order; remap simplices accordingly.
  std::vector<std::size_t> perm(vertex_index.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return pts[vertex_index[a]] < pts[vertex_index[b]];
  });
  std::vector<std::size_t> rank_of(perm.size());
  for (std::size_t r = 0; r < perm.size(); ++r) {
    rank_of[perm[r]] = r;
    poly.vertices_.push_back(pts[vertex_index[perm[r]]]);
  }
  for (auto& s : simplices) {
    for (auto& i : s) i = rank_of[i];
    poly.simplices_.push_back(std::move(s));
  }
  return poly;
}

inline LatticePolytope convex_hull(const SupportSet& a) {
  std::vector<RationalPoint> pts;
  pts.reserve(a.size());
  for (const auto& p : a) pts.push_back(to_rational_point(p));
  return convex_hull(pts);
}

inline LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw InputError("minkowski_sum: dimension mismatch");
  std::vector<RationalPoint> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  }
  return convex_hull(sums);
}

inline LatticePolytope scale(const LatticePolytope& p, const Rational& lambda) {
  if (lambda < 0) throw InputError("scale: negative factor");
  if (lambda == 0) return convex_hull({RationalPoint::zero(p.ambient_dim())});
  std::vector<RationalPoint> pts;
  for (const auto& v : p.vertices()) pts.push_back(lambda * v);
  return convex_hull(pts);
}

inline LatticePolytope translate(const LatticePolytope& p, const RationalPoint& t) {
  if (t.dim() != p.ambient_dim()) throw InputError("translate: dimension mismatch");
  std::vector<RationalPoint> pts;
  for (const auto& v : p.vertices()) pts.push_back(v + t);
  return convex_hull(pts);
}

inline const Rational& volume(const LatticePolytope& p) { return p.volume(); }

/// All integer points of P (boundary included), in lexicographic order.
inline std::vector<LatticePoint> lattice_point_list(const LatticePolytope& p) {
  const std::size_t n = p.ambient_dim();
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = ceil(mn).get_si();
    hi[i] = floor(mx).get_si();
    if (lo[i] > hi[i]) return {};
  }
  std::vector<LatticePoint> out;
  LatticePoint cur = lo;
  std::vector<Rational> coords(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) coords[i] = Rational(static_cast<long>(cur[i]));
    if (p.contains(RationalPoint(coords))) out.push_back(cur);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
      if (i == 0) return out;
    }
  }
}

/// Lattice points as a SupportSet; throws when P contains no integer point.
inline SupportSet lattice_points(const LatticePolytope& p) {
  auto pts = lattice_point_list(p);
  if (pts.empty()) throw InputError("lattice_points: polytope contains no lattice point");
  return SupportSet(p.ambient_dim(), std::move(pts));
}

namespace detail {

inline double dist_point_simplex(const std::vector<double>& x,
                                 const std::vector<std::vector<double>>& simplex) {
  const std::size_t k = simplex.size();
  const std::size_t n = x.size();
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<const std::vector<double>*> face;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) face.push_back(&simplex[i]);
    }
    const std::size_t m = face.size() - 1;
    const auto& s0 = *face[0];
    std::vector<std::vector<double>> e(m, std::vector<double>(n));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t c = 0; c < n; ++c) e[i][c] = (*face[i + 1])[c] - s0[c];
    }
    std::vector<std::vector<double>> g(m, std::vector<double>(m + 1, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t c = 0; c < n; ++c) g[i][j] += e[i][c] * e[j][c];
      }
      for (std::size_t c = 0; c < n; ++c) g[i][m] += e[i][c] * (x[c] - s0[c]);
    }
    bool ok = true;
    for (std::size_t col = 0; col < m && ok; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < m; ++r) {
        if (std::abs(g[r][col]) > std::abs(g[piv][col])) piv = r;
      }
      if (std::abs(g[piv][col]) < 1e-300) {
        ok = false;
        break;
      }
      std::swap(g[piv], g[col]);
      for (std::size_t r = 0; r < m; ++r) {
        if (r == col) continue;
        const double f = g[r][col] / g[col][col];
        for (std::size_t c = col; c <= m; ++c) g[r][c] -= f * g[col][c];
      }
    }
    if (!ok) continue;
    std::vector<double> t(m);
    double total = 0;
    for (std::size_t i = 0; i < m; ++i) {
      t[i] = g[i][m] / g[i][i];
      total += t[i];
      if (t[i] < -1e-12) ok = false;
    }
    if (!ok || total > 1 + 1e-12) continue;
    double d2 = 0;
    for (std::size_t c = 0; c < n; ++c) {
      double y = s0[c];
      for (std::size_t i = 0; i < m; ++i) y += t[i] * e[i][c];
      d2 += (y - x[c]) * (y - x[c]);
    }
    best = std::min(best, std::sqrt(d2));
  }
  return best;
}

}  // namespace detail

/// Euclidean distance from x to P (0 inside), double precision.
inline double distance_to(const LatticePolytope& p, const std::vector<double>& x) {
  std::vector<std::vector<double>> verts;
  for (const auto& v : p.vertices()) verts.push_back(v.to_doubles());
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : p.simplices()) {
    std::vector<std::vector<double>> simplex;
    for (std::size_t i : s) simplex.push_back(verts[i]);
    best = std::min(best, detail::dist_point_simplex(x, simplex));
  }
  return best;
}

/// Symmetric Hausdorff distance (n <= 3). The distance to a convex body is a
/// convex function, so each one-sided supremum is attained at a vertex.
inline double hausdorff_distance(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw InputError("hausdorff_distance: dimension mismatch");
  if (p.ambient_dim() > 3) throw InputError("hausdorff_distance: dimension must be <= 3");
  double h = 0;
  for (const auto& v : p.vertices()) h = std::max(h, distance_to(q, v.to_doubles()));
  for (const auto& v : q.vertices()) h = std::max(h, distance_to(p, v.to_doubles()));
  return h;
}

}  // namespace okounkov
