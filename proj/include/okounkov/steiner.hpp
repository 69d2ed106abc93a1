#pragma once

// Planar Steiner symmetrization in exact rational frames, an approximate
// iteration toward the disc, and section profiles Vol(h D1 + (1-h) D2).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

#include "okounkov/geometry.hpp"
#include "okounkov/random.hpp"
#include "okounkov/root_compare.hpp"

namespace okounkov {

namespace detail {

inline Rational cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Andrew's monotone chain; strict turns only, counterclockwise from the
/// lexicographically smallest point.
inline std::vector<RationalPoint> ccw_hull(std::vector<RationalPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<RationalPoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace detail

class ConvexPolygon {
 public:
  /// Vertices must already be counterclockwise and strictly convex.
  explicit ConvexPolygon(std::vector<RationalPoint> vertices) : v_(std::move(vertices)) {
    if (v_.size() < 3) throw InputError("polygon needs at least 3 vertices");
    for (const auto& p : v_) {
      if (p.dim() != 2) throw InputError("polygon vertices must be planar");
    }
    const std::size_t n = v_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (detail::cross(v_[i], v_[(i + 1) % n], v_[(i + 2) % n]) <= 0) {
        throw InputError("polygon is not strictly convex and counterclockwise");
      }
    }
    area_ = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = v_[i];
      const auto& b = v_[(i + 1) % n];
      area_ += a[0] * b[1] - a[1] * b[0];
    }
    area_ /= 2;
    // Local convexity with positive turning can still wind more than once:
    // the cycle must coincide with the hull cycle.
    const auto h = detail::ccw_hull(v_);
    const auto start = std::find(v_.begin(), v_.end(), h.front());
    if (h.size() != n || start == v_.end() || !std::equal(start, v_.end(), h.begin()) ||
        !std::equal(v_.begin(), start, h.begin() + (v_.end() - start))) {
      throw InputError("polygon winds more than once");
    }
    if (area_ <= 0) throw InputError("polygon is degenerate");
  }

  /// Convex hull of arbitrary planar points; throws when the hull has no area.
  static ConvexPolygon hull_of(std::vector<RationalPoint> pts) {
    auto h = detail::ccw_hull(std::move(pts));
    if (h.size() < 3) throw InputError("degenerate polygon (zero area)");
    return ConvexPolygon(std::move(h));
  }

  static ConvexPolygon from_polytope(const LatticePolytope& p) {
    if (p.ambient_dim() != 2) throw InputError("polygon requires a planar polytope");
    return hull_of(p.vertices());
  }

  LatticePolytope to_polytope() const { return convex_hull(v_); }

  const std::vector<RationalPoint>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  const Rational& area() const { return area_; }

  double perimeter() const {
    double s = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) {
      const RationalPoint d = v_[(i + 1) % v_.size()] - v_[i];
      s += std::sqrt(Rational(d[0] * d[0] + d[1] * d[1]).get_d());
    }
    return s;
  }

  RationalPoint centroid() const {
    Rational cx = 0, cy = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) {
      const auto& a = v_[i];
      const auto& b = v_[(i + 1) % v_.size()];
      const Rational w = a[0] * b[1] - a[1] * b[0];
      cx += (a[0] + b[0]) * w;
      cy += (a[1] + b[1]) * w;
    }
    return {cx / (6 * area_), cy / (6 * area_)};
  }

  /// Same vertex cycle up to rotation (vertices start at the lex minimum).
  friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
    return detail::ccw_hull(a.v_) == detail::ccw_hull(b.v_);
  }

 private:
  std::vector<RationalPoint> v_;
  Rational area_;
};

/// Mirror image of p in the line through the origin orthogonal to u.
inline RationalPoint reflect(const RationalPoint& p, const RationalPoint& u) {
  const Rational t = (p[0] * u[0] + p[1] * u[1]) / (u[0] * u[0] + u[1] * u[1]);
  return {p[0] - 2 * t * u[0], p[1] - 2 * t * u[1]};
}

/// Symmetrization along the chord direction u about the line H through the
/// origin orthogonal to u. Exact for any nonzero rational u.
inline ConvexPolygon steiner_symmetrize(const ConvexPolygon& p, const RationalPoint& u) {
  if (u.dim() != 2) throw InputError("direction must be planar");
  const Rational uu = u[0] * u[0] + u[1] * u[1];
  if (uu == 0) throw InputError("direction must be nonzero");
  const RationalPoint w{-u[1], u[0]};

  // Frame coordinates: x = t*w + s*u.
  struct Ts {
    Rational t, s;
  };
  std::vector<Ts> f;
  for (const auto& v : p.vertices()) {
    f.push_back({(v[0] * w[0] + v[1] * w[1]) / uu, (v[0] * u[0] + v[1] * u[1]) / uu});
  }
  std::vector<Rational> breaks;
  for (const auto& x : f) breaks.push_back(x.t);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const std::size_t n = f.size();
  std::vector<RationalPoint> out;
  for (const Rational& t : breaks) {
    bool any = false;
    Rational lo, hi;
    auto take = [&](const Rational& s) {
      if (!any) {
        lo = hi = s;
        any = true;
      } else {
        lo = std::min(lo, s);
        hi = std::max(hi, s);
      }
    };
    for (std::size_t i = 0; i < n; ++i) {
      const Ts& a = f[i];
      const Ts& b = f[(i + 1) % n];
      if (a.t == t) take(a.s);
      if ((a.t < t && t < b.t) || (b.t < t && t < a.t)) {
        take(a.s + (t - a.t) * (b.s - a.s) / (b.t - a.t));
      }
    }
    const Rational half = (hi - lo) / 2;
    out.push_back({t * w[0] + half * u[0], t * w[1] + half * u[1]});
    out.push_back({t * w[0] - half * u[0], t * w[1] - half * u[1]});
  }
  return ConvexPolygon::hull_of(std::move(out));
}

/// Vertex set invariant under reflection across H.
inline bool is_mirror_symmetric(const ConvexPolygon& p, const RationalPoint& u) {
  std::vector<RationalPoint> a = p.vertices(), b;
  for (const auto& v : a) b.push_back(reflect(v, u));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

/// Hausdorff distance from a convex polygon to the disc of equal area
/// centred at its centroid: max over directions of |h_P - r|.
inline double hausdorff_to_disc(const ConvexPolygon& p) {
  const double area = p.area().get_d();
  const double r = std::sqrt(area / std::numbers::pi);
  const auto c = p.centroid().to_doubles();
  double far = 0, near = std::numeric_limits<double>::infinity();
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto a = v[i].to_doubles();
    const auto b = v[(i + 1) % v.size()].to_doubles();
    far = std::max(far, std::hypot(a[0] - c[0], a[1] - c[1]));
    const double ex = b[0] - a[0], ey = b[1] - a[1];
    near = std::min(near, std::abs(ex * (c[1] - a[1]) - ey * (c[0] - a[0])) / std::hypot(ex, ey));
  }
  return std::max({far - r, r - near, 0.0});
}

struct IterationConfig {
  std::size_t max_vertices = 128;  // Visvalingam pruning above this count
  int grid_bits = 40;              // vertices snapped to multiples of 2^-grid_bits
};

struct IterationRow {
  int round = 0;
  RationalPoint direction;
  Rational area;                 // exact area of the polygon after this round
  bool step_preserved = false;   // exact symmetrization kept the area
  Rational approximation_loss;   // cumulative |area change| from snapping and pruning
  double perimeter = 0;
  double hausdorff = 0;
  std::size_t vertices = 0;
};

namespace detail {

inline Rational snap(const Rational& q, int bits) {
  Integer scaled = q.get_num();
  scaled <<= bits;
  Integer r;
  // round half away from zero
  Integer twice = 2 * scaled + (scaled >= 0 ? Integer(q.get_den()) : Integer(-q.get_den()));
  Integer den2 = 2 * Integer(q.get_den());
  mpz_tdiv_q(r.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
  Integer den = 1;
  den <<= bits;
  return make_rational(r, den);
}

/// Drops the vertex spanning the smallest triangle with its neighbours until
/// at most `cap` remain. Each step shrinks the polygon to a convex subset.
inline std::vector<RationalPoint> prune(std::vector<RationalPoint> v, std::size_t cap) {
  while (v.size() > cap && v.size() > 3) {
    const std::size_t n = v.size();
    std::size_t best = 0;
    Rational best_area;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational a = cross(v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
      if (i == 0 || a < best_area) {
        best = i;
        best_area = a;
      }
    }
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return v;
}

}  // namespace detail

/// Random rational directions with integer coordinates in [-10, 10].
inline std::vector<IterationRow> iterate_symmetrize(const ConvexPolygon& start, int rounds,
                                                    std::uint64_t seed, const IterationConfig& cfg = {}) {
  if (rounds < 1) throw InputError("rounds must be at least 1");
  Rng rng(seed, 0x57e1);
  ConvexPolygon cur = start;
  Rational loss = 0;
  std::vector<IterationRow> rows;
  for (int r = 1; r <= rounds; ++r) {
    std::int64_t a = 0, b = 0;
    while (a == 0 && b == 0) {
      a = rng.uniform_int(-10, 10);
      b = rng.uniform_int(-10, 10);
    }
    const RationalPoint u{Rational(a), Rational(b)};
    const ConvexPolygon sym = steiner_symmetrize(cur, u);
    IterationRow row;
    row.round = r;
    row.direction = u;
    row.step_preserved = sym.area() == cur.area();

    std::vector<RationalPoint> snapped;
    for (const auto& v : sym.vertices()) {
      snapped.push_back({detail::snap(v[0], cfg.grid_bits), detail::snap(v[1], cfg.grid_bits)});
    }
    ConvexPolygon next = ConvexPolygon::hull_of(std::move(snapped));
    next = ConvexPolygon(detail::prune(next.vertices(), cfg.max_vertices));
    loss += abs(next.area() - sym.area());

    row.area = next.area();
    row.approximation_loss = loss;
    row.perimeter = next.perimeter();
    row.hausdorff = hausdorff_to_disc(next);
    row.vertices = next.size();
    rows.push_back(std::move(row));
    cur = std::move(next);
  }
  return rows;
}

struct ProfileEntry {
  Rational h;
  Rational volume;  // Vol(h D1 + (1 - h) D2)
};

/// Volumes at h = j / samples, j = 0..samples.
inline std::vector<ProfileEntry> section_profile(const LatticePolytope& d1, const LatticePolytope& d2,
                                                 int samples) {
  if (d1.ambient_dim() != d2.ambient_dim()) throw InputError("section_profile: dimension mismatch");
  if (d1.ambient_dim() > 3) throw InputError("section_profile: dimension must be <= 3");
  if (samples < 3) throw InputError("section_profile: need at least 3 samples");
  std::vector<ProfileEntry> out;
  for (int j = 0; j <= samples; ++j) {
    const Rational h = make_rational(j, samples);
    const LatticePolytope body = minkowski_sum(scale(d1, h), scale(d2, 1 - h));
    out.push_back({h, body.volume()});
  }
  return out;
}

struct ConcavityReport {
  int triples = 0;
  int violations = 0;
  int first_violation = -1;  // index j of the middle sample
  bool endpoint_bm = false;  // Vol^(1/n)(D1) + Vol^(1/n)(D2) <= Vol^(1/n)(D1 + D2)
  bool holds() const { return violations == 0 && endpoint_bm; }
};

/// Midpoint concavity of V^(1/n) on consecutive samples, by exact comparison
/// of (2^n V_j)^(1/n) with V_{j-1}^(1/n) + V_{j+1}^(1/n).
inline ConcavityReport check_profile_concavity(const LatticePolytope& d1, const LatticePolytope& d2,
                                               const std::vector<ProfileEntry>& profile) {
  const unsigned n = static_cast<unsigned>(d1.ambient_dim());
  ConcavityReport r;
  const Rational two_n = pow(Rational(2), n);
  for (std::size_t j = 1; j + 1 < profile.size(); ++j) {
    ++r.triples;
    const Comparison c = compare_root_sum(profile[j - 1].volume, profile[j + 1].volume,
                                          two_n * profile[j].volume, n);
    if (c == Comparison::less) {
      if (r.first_violation < 0) r.first_violation = static_cast<int>(j);
      ++r.violations;
    }
  }
  r.endpoint_bm =
      compare_root_sum(d1.volume(), d2.volume(), minkowski_sum(d1, d2).volume(), n) != Comparison::less;
  return r;
}

/// Hull of random lattice points in [lo, hi]^2 with positive area.
inline ConvexPolygon random_convex_polygon(Rng& rng, std::size_t points, std::int64_t lo, std::int64_t hi) {
  if (points < 3) throw InputError("random polygon needs at least 3 points");
  while (true) {
    std::vector<RationalPoint> pts;
    for (std::size_t i = 0; i < points; ++i) {
      pts.push_back({Rational(rng.uniform_int(lo, hi)), Rational(rng.uniform_int(lo, hi))});
    }
    auto h = detail::ccw_hull(pts);
    if (h.size() >= 3) return ConvexPolygon(std::move(h));
  }
}

}  // namespace okounkov
