#pragma once

// Exact beneath-beyond convex hull for full-dimensional integer point sets in
// dimension 2..4. Templated on the integer type so small inputs run on
// __int128 and large ones fall back to GMP integers.
//
// The boundary is kept as a simplicial complex (facet simplices may be
// coplanar); a facet is visible from a point only when the point lies
// strictly on its positive side.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace okounkov::detail {

using int128 = __int128;

inline int128 abs_int(int128 v) { return v < 0 ? -v : v; }
inline mpz_class abs_int(const mpz_class& v) { return abs(v); }

inline int128 gcd_int(int128 a, int128 b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
inline mpz_class gcd_int(const mpz_class& a, const mpz_class& b) {
  return gcd(a, b);
}

inline int sign_int(int128 v) { return (v > 0) - (v < 0); }
inline int sign_int(const mpz_class& v) { return sgn(v); }

inline mpz_class to_mpz(int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}
inline const mpz_class& to_mpz(const mpz_class& v) { return v; }

/// Determinant of a k x k row-major matrix by Laplace expansion (k <= 4).
template <class Int>
Int small_det(const std::vector<Int>& m, std::size_t k) {
  if (k == 0) return Int(1);
  if (k == 1) return m[0];
  if (k == 2) return m[0] * m[3] - m[1] * m[2];
  Int total(0);
  std::vector<Int> minor((k - 1) * (k - 1));
  for (std::size_t col = 0; col < k; ++col) {
    if (m[col] == 0) continue;
    for (std::size_t r = 1; r < k; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < k; ++c) {
        if (c == col) continue;
        minor[(r - 1) * (k - 1) + cc++] = m[r * k + c];
      }
    }
    Int term = m[col] * small_det(minor, k - 1);
    if (col % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

template <class Int>
struct HullFacet {
  std::vector<std::size_t> idx;  // d point indices
  std::vector<Int> normal;       // outward
  Int offset;                    // normal . x <= offset on the hull
  bool alive = true;
};

template <class Int>
struct HullResult {
  std::vector<std::vector<Int>> normals;  // unique primitive facet normals
  std::vector<Int> offsets;
  std::vector<std::vector<std::size_t>> boundary;  // simplices, d indices each
};

template <class Int>
class BeneathBeyond {
 public:
  BeneathBeyond(const std::vector<std::vector<Int>>& pts, std::size_t dim)
      : pts_(pts), d_(dim) {}

  /// `initial` holds d+1 affinely independent point indices.
  HullResult<Int> run(const std::vector<std::size_t>& initial) {
    interior_.assign(d_, Int(0));
    for (std::size_t i : initial) {
      for (std::size_t c = 0; c < d_; ++c) interior_[c] += pts_[i][c];
    }
    for (std::size_t skip = 0; skip < initial.size(); ++skip) {
      std::vector<std::size_t> f;
      for (std::size_t j = 0; j < initial.size(); ++j) {
        if (j != skip) f.push_back(initial[j]);
      }
      add_facet(std::move(f));
    }
    std::vector<bool> used(pts_.size(), false);
    for (std::size_t i : initial) used[i] = true;
    for (std::size_t p = 0; p < pts_.size(); ++p) {
      if (!used[p]) insert(p);
    }
    return collect();
  }

 private:
  Int side(const HullFacet<Int>& f, const std::vector<Int>& p) const {
    Int s(0);
    for (std::size_t c = 0; c < d_; ++c) s += f.normal[c] * p[c];
    return s - f.offset;
  }

  void add_facet(std::vector<std::size_t> idx) {
    HullFacet<Int> f;
    const auto& q0 = pts_[idx[0]];
    std::vector<Int> rows((d_ - 1) * d_);
    for (std::size_t r = 1; r < d_; ++r) {
      for (std::size_t c = 0; c < d_; ++c) {
        rows[(r - 1) * d_ + c] = pts_[idx[r]][c] - q0[c];
      }
    }
    f.normal.resize(d_);
    std::vector<Int> minor((d_ - 1) * (d_ - 1));
    for (std::size_t j = 0; j < d_; ++j) {
      for (std::size_t r = 0; r + 1 < d_; ++r) {
        std::size_t cc = 0;
        for (std::size_t c = 0; c < d_; ++c) {
          if (c == j) continue;
          minor[r * (d_ - 1) + cc++] = rows[r * d_ + c];
        }
      }
      Int m = small_det(minor, d_ - 1);
      f.normal[j] = (j % 2 == 0) ? m : Int(-m);
    }
    f.offset = Int(0);
    for (std::size_t c = 0; c < d_; ++c) f.offset += f.normal[c] * q0[c];
    // interior_ is (d+1) times an interior point.
    Int probe(0);
    for (std::size_t c = 0; c < d_; ++c) probe += f.normal[c] * interior_[c];
    probe -= Int(static_cast<long>(d_ + 1)) * f.offset;
    if (sign_int(probe) > 0) {
      for (auto& v : f.normal) v = -v;
      f.offset = -f.offset;
    }
    f.idx = std::move(idx);
    facets_.push_back(std::move(f));
  }

  void insert(std::size_t p) {
    const auto& pt = pts_[p];
    std::vector<std::size_t> visible;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      if (facets_[i].alive && sign_int(side(facets_[i], pt)) > 0) {
        visible.push_back(i);
      }
    }
    if (visible.empty()) return;
    std::map<std::vector<std::size_t>, int> ridges;
    for (std::size_t fi : visible) {
      auto& f = facets_[fi];
      f.alive = false;
      for (std::size_t skip = 0; skip < d_; ++skip) {
        std::vector<std::size_t> r;
        r.reserve(d_ - 1);
        for (std::size_t j = 0; j < d_; ++j) {
          if (j != skip) r.push_back(f.idx[j]);
        }
        std::sort(r.begin(), r.end());
        ++ridges[r];
      }
    }
    for (auto& [ridge, count] : ridges) {
      if (count != 1) continue;
      std::vector<std::size_t> idx = ridge;
      idx.push_back(p);
      add_facet(std::move(idx));
    }
    if (facets_.size() > 64 && 2 * alive_count() < facets_.size()) compact();
  }

  std::size_t alive_count() const {
    return static_cast<std::size_t>(std::count_if(
        facets_.begin(), facets_.end(), [](const auto& f) { return f.alive; }));
  }

  void compact() {
    std::erase_if(facets_, [](const auto& f) { return !f.alive; });
  }

  HullResult<Int> collect() const {
    HullResult<Int> out;
    std::map<std::vector<mpz_class>, std::size_t> seen;
    for (const auto& f : facets_) {
      if (!f.alive) continue;
      out.boundary.push_back(f.idx);
      Int g(0);
      for (const auto& v : f.normal) g = gcd_int(g, v);
      std::vector<Int> n = f.normal;
      for (auto& v : n) v /= g;
      Int off = f.offset / g;
      std::vector<mpz_class> key;
      for (const auto& v : n) key.push_back(to_mpz(v));
      key.push_back(to_mpz(off));
      if (seen.emplace(std::move(key), out.normals.size()).second) {
        out.normals.push_back(std::move(n));
        out.offsets.push_back(off);
      }
    }
    return out;
  }

  const std::vector<std::vector<Int>>& pts_;
  std::size_t d_;
  std::vector<Int> interior_;
  std::vector<HullFacet<Int>> facets_;
};

}  // namespace okounkov::detail
