#pragma once

// Deterministic random streams and generators for fuzz instances.
// Every stream is identified by (seed, stream index) so that trials are
// reproducible independently of evaluation order.

#include <cstdint>
#include <random>
#include <vector>

#include "okounkov/geometry.hpp"

namespace okounkov {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// mt19937_64 with portable integer/real draws (the standard distributions
/// are implementation-defined, these are not).
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream)
      : engine_(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Random lattice point in the box [lo, hi]^dim.
inline LatticePoint random_lattice_point(Rng& rng, std::size_t dim, std::int64_t lo,
                                         std::int64_t hi) {
  LatticePoint p(dim);
  for (auto& c : p) c = rng.uniform_int(lo, hi);
  return p;
}

/// Support of `count` random points (duplicates collapse) in [lo, hi]^dim.
inline SupportSet random_support(Rng& rng, std::size_t dim, std::size_t count,
                                 std::int64_t lo, std::int64_t hi) {
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < count; ++i) pts.push_back(random_lattice_point(rng, dim, lo, hi));
  return SupportSet(dim, std::move(pts));
}

/// Hull of 1..max_points random lattice points in [0, box]^dim; may be
/// lower-dimensional.
inline LatticePolytope random_lattice_polytope(Rng& rng, std::size_t dim,
                                               std::size_t max_points, std::int64_t box) {
  const auto count = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(max_points)));
  return convex_hull(random_support(rng, dim, count, 0, box));
}

/// Full-dimensional random lattice polytope (rejection sampling).
inline LatticePolytope random_full_polytope(Rng& rng, std::size_t dim, std::size_t max_points,
                                            std::int64_t box) {
  while (true) {
    const auto count = static_cast<std::size_t>(
        rng.uniform_int(static_cast<std::int64_t>(dim) + 1, static_cast<std::int64_t>(max_points)));
    auto p = convex_hull(random_support(rng, dim, count, 0, box));
    if (p.full_dimensional()) return p;
  }
}

}  // namespace okounkov
