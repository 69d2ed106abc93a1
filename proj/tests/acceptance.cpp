// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "okounkov/bkk.hpp"
#include "okounkov/cli.hpp"
#include "okounkov/random.hpp"
#include "okounkov/steiner.hpp"

using namespace okounkov;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int id, const char* title, double time_limit, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit > 0 && secs >= time_limit) {
    v.require(false, "time limit " + std::to_string(time_limit) + " s exceeded");
    v.pass = false;
  }
  if (!v.pass) ++failures;
  std::printf("%s %2d %s (%.2f s)%s%s\n", v.pass ? "PASS" : "FAIL", id, title, secs, v.detail.empty() ? "" : ": ",
              v.detail.c_str());
  std::fflush(stdout);
}

SupportSet simplex_vertices(std::size_t n, std::int64_t d) {
  std::vector<LatticePoint> pts{LatticePoint(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    LatticePoint e(n, 0);
    e[i] = d;
    pts.push_back(e);
  }
  return SupportSet(n, pts);
}

std::string str(const Integer& z) { return to_string(z); }

// Convex subset of p spanned by a nonempty subset of its vertices.
LatticePolytope sub_body(Rng& rng, const LatticePolytope& p) {
  std::vector<RationalPoint> keep;
  for (const auto& v : p.vertices()) {
    if (rng.uniform_int(0, 1) == 1) keep.push_back(v);
  }
  if (keep.empty()) keep.push_back(p.vertices().front());
  return convex_hull(keep);
}

LaurentSubspace random_subspace(Rng& rng) {
  std::vector<LaurentPolynomial> gens;
  const int g = static_cast<int>(rng.uniform_int(1, 2));
  for (int i = 0; i < g; ++i) {
    LaurentPolynomial f(2);
    while (f.is_zero()) {
      const int terms = static_cast<int>(rng.uniform_int(1, 3));
      for (int t = 0; t < terms; ++t) {
        f.add_term(random_lattice_point(rng, 2, 0, 1), make_rational(rng.uniform_int(-3, 3), 1));
      }
    }
    gens.push_back(f);
  }
  return LaurentSubspace::span(2, gens);
}

// Rational points on the unit circle near angles 2*pi*j/64.
LatticePolytope rational_64gon() {
  std::vector<RationalPoint> pts;
  Integer scale = 1;
  scale <<= 30;
  for (int j = 0; j < 16; ++j) {
    const double half = std::numbers::pi * j / 64;  // half of the angle 2*pi*j/64
    const Rational t = make_rational(Integer(static_cast<long>(std::llround(std::tan(half) * scale.get_d()))), scale);
    const Rational d = 1 + t * t;
    const Rational x = (1 - t * t) / d, y = 2 * t / d;
    pts.push_back({x, y});
    pts.push_back({-y, x});
    pts.push_back({-x, -y});
    pts.push_back({y, -x});
  }
  return convex_hull(pts);
}

}  // namespace

int main() {
  criterion(1, "root count equals n! Vol for vertices of d*simplex, d = 1..3", 10, [] {
    Verdict v;
    for (std::int64_t d = 1; d <= 3; ++d) {
      const auto a = simplex_vertices(2, d);
      const auto r = verify_bkk({a, a}, 5, static_cast<std::uint64_t>(d));
      v.require(r.predicted == d * d, "predicted " + str(r.predicted) + " for d=" + std::to_string(d));
      v.require(r.modal && *r.modal == d * d && r.trials.size() >= 5, "count mismatch for d=" + std::to_string(d));
    }
    return v;
  });

  criterion(2, "Bernstein example and 20 random support pairs", 60, [] {
    Verdict v;
    const SupportSet a1(2, {{0, 0}, {1, 0}, {0, 1}}), a2(2, {{0, 0}, {1, 1}});
    v.require(mixed_volume({convex_hull(a1), convex_hull(a2)}) == 1, "mixed area of the example");
    const auto ex = verify_bkk({a1, a2}, 5, 0);
    v.require(ex.predicted == 2 && ex.agreed, "example counted differently");
    Rng rng(202, 0);
    int degenerate = 0;
    for (int i = 0; i < 20; ++i) {
      const auto p = random_support(rng, 2, static_cast<std::size_t>(rng.uniform_int(1, 5)), 0, 3);
      const auto q = random_support(rng, 2, static_cast<std::size_t>(rng.uniform_int(1, 5)), 0, 3);
      const auto r = verify_bkk({p, q}, 5, static_cast<std::uint64_t>(100 + i));
      degenerate += r.degenerate_trials;
      for (int c : r.trials) v.require(Integer(c) == r.predicted, "pair " + std::to_string(i) + " counted " +
                                                                    std::to_string(c) + " vs " + str(r.predicted));
    }
    if (v.pass) v.detail = std::to_string(degenerate) + " degenerate trials replaced";
    return v;
  });

  criterion(3, "counts unchanged by completing the supports (n = 1, 2)", 0, [] {
    Verdict v;
    Rng rng(303, 0);
    for (int i = 0; i < 10; ++i) {
      const auto a = random_support(rng, 1, 4, -4, 4);
      const auto r = verify_bkk({a}, 5, static_cast<std::uint64_t>(i));
      v.require(r.completion_agreed && r.agreed, "n=1 instance " + std::to_string(i));
      v.require(r.trials == r.completion_trials, "n=1 trial counts differ at " + std::to_string(i));
    }
    for (int i = 0; i < 10; ++i) {
      const auto a = random_support(rng, 2, 4, 0, 3), b = random_support(rng, 2, 4, 0, 3);
      const auto r = verify_bkk({a, b}, 5, static_cast<std::uint64_t>(i));
      v.require(r.completion_agreed && r.agreed, "n=2 instance " + std::to_string(i));
      for (int c : r.completion_trials) v.require(c == *r.modal, "n=2 completion trial differs at " + std::to_string(i));
    }
    return v;
  });

  criterion(4, "mixed volume axioms (500 each) and interpolation oracle (200)", 0, [] {
    Verdict v;
    Rng rng(404, 0);
    auto tuple = [&](std::size_t n) {
      BodyTuple t;
      for (std::size_t j = 0; j < n; ++j) t.push_back(random_lattice_polytope(rng, n, 5, 3));
      return t;
    };
    auto dim = [&] { return static_cast<std::size_t>(rng.uniform_int(1, 3)); };
    for (int i = 0; i < 500; ++i) {
      auto t = tuple(dim());
      const Rational base = mixed_volume(t);
      std::vector<std::size_t> perm(t.size());
      for (std::size_t j = 0; j < perm.size(); ++j) perm[j] = j;
      while (std::next_permutation(perm.begin(), perm.end())) {
        BodyTuple p;
        for (auto j : perm) p.push_back(t[j]);
        v.require(mixed_volume(p) == base, "symmetry");
      }
    }
    for (int i = 0; i < 500; ++i) {
      const std::size_t n = dim();
      auto t = tuple(n);
      const auto extra = random_lattice_polytope(rng, n, 5, 3);
      const Rational lambda = make_rational(rng.uniform_int(0, 6), rng.uniform_int(1, 4));
      BodyTuple sum = t, other = t;
      sum[0] = minkowski_sum(scale(t[0], lambda), extra);
      other[0] = extra;
      v.require(mixed_volume(sum) == lambda * mixed_volume(t) + mixed_volume(other), "multilinearity");
    }
    for (int i = 0; i < 500; ++i) {
      const std::size_t n = dim();
      const auto k = random_lattice_polytope(rng, n, 6, 3);
      v.require(mixed_volume(BodyTuple(n, k)) == k.volume(), "diagonal");
    }
    for (int i = 0; i < 500; ++i) v.require(mixed_volume(tuple(dim())) >= 0, "nonnegativity");
    for (int i = 0; i < 500; ++i) {
      const auto big = tuple(dim());
      BodyTuple small;
      for (const auto& b : big) small.push_back(sub_body(rng, b));
      v.require(mixed_volume(small) <= mixed_volume(big), "monotonicity");
    }
    for (int i = 0; i < 200; ++i) {
      const auto t = tuple(dim());
      v.require(mixed_volume(t) == mixed_volume_interp(t), "interpolation oracle disagrees");
    }
    return v;
  });

  criterion(5, "Alexandrov-Fenchel on 500 triples in R^3 and 100 quadruples in R^4", 300, [] {
    Verdict v;
    Rng rng(505, 0);
    for (int i = 0; i < 500; ++i) {
      BodyTuple t;
      for (int j = 0; j < 3; ++j) t.push_back(random_lattice_polytope(rng, 3, 6, 3));
      v.require(check_alexandrov_fenchel(t).holds, "violation in R^3 at " + std::to_string(i));
    }
    for (int i = 0; i < 100; ++i) {
      BodyTuple t;
      for (int j = 0; j < 4; ++j) t.push_back(random_lattice_polytope(rng, 4, 5, 2));
      v.require(check_alexandrov_fenchel(t).holds, "violation in R^4 at " + std::to_string(i));
    }
    return v;
  });

  criterion(6, "mixed area with a 64-gon disc is half the perimeter; 300 isoperimetric pairs", 0, [] {
    Verdict v;
    const auto disc = rational_64gon();
    v.require(disc.vertices().size() == 64, "64-gon construction");
    const auto square = convex_hull(std::vector<RationalPoint>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    const double a = mixed_volume({square, disc}).get_d();
    v.require(std::abs(a - 2.0) <= 0.01 * 2.0, "A(square, 64-gon) = " + std::to_string(a));
    if (v.pass) v.detail = "A(square, 64-gon) = " + io::format_double(a);
    Rng rng(606, 0);
    for (int i = 0; i < 300; ++i) {
      const auto p = random_lattice_polytope(rng, 2, 7, 5), q = random_lattice_polytope(rng, 2, 7, 5);
      const auto r = check_isoperimetric(p, q);
      v.require(r.holds && r.expansion_identity, "violation at pair " + std::to_string(i));
    }
    return v;
  });

  criterion(7, "sumset densities: simplex, {0,1,3}, non-ample {0,2}", 0, [] {
    Verdict v;
    const auto s = density_sequence(sumset_slice(SupportSet(2, {{0, 0}, {1, 0}, {0, 1}}), 40));
    const Rational r40 = s.entries.back().ratio;
    v.require(r40 == Rational(861, 1600), "ratio(40) = " + to_string(r40));
    v.require(std::abs(r40.get_d() - 0.5) < 0.04, "ratio(40) far from 1/2");
    const auto g = density_sequence(sumset_slice(SupportSet(1, {{0}, {1}, {3}}), 50));
    v.require(std::abs(g.entries.back().ratio.get_d() - 3) < 0.1, "ratio(50) for {0,1,3}");
    const auto e = density_sequence(sumset_slice(SupportSet(1, {{0}, {2}}), 200));
    v.require(!e.ample && e.index.value && *e.index.value == 2, "{0,2} not flagged with index 2");
    v.require(std::abs(e.entries.back().ratio.get_d() - 1) < 0.01, "{0,2} ratio does not approach 1");
    v.require(e.target_volume == 2, "{0,2} hull length");
    return v;
  });

  criterion(8, "Newton-Okounkov bodies, Hilbert degree, superadditivity, leading coefficient", 0, [] {
    Verdict v;
    Rng rng(808, 0);
    for (int i = 0; i < 10; ++i) {
      const auto a = random_support(rng, 2, 5, -2, 2);
      const auto l = monomial_subspace(a);
      for (std::size_t k = 1; k <= 4; ++k) {
        v.require(newton_okounkov_body(l, MonomialOrder::lex(), k).polytope == convex_hull(a),
                  "monomial body differs from hull");
      }
    }
    std::vector<LaurentPolynomial> gens{LaurentPolynomial::monomial({0, 0})};
    LaurentPolynomial xy(2);
    xy.add_term({1, 0}, 1);
    xy.add_term({0, 1}, 1);
    gens.push_back(xy);
    const auto line = LaurentSubspace::span(2, gens);
    const auto body = newton_okounkov_body(line, MonomialOrder::lex(), 8).polytope;
    const auto tail = fit_hilbert_tail(hilbert_function(line, 8));
    v.require(body.affine_dim() == 1 && tail.degree == 1 && tail.stable, "span{1, x+y}");
    for (int i = 0; i < 100; ++i) {
      const auto a = random_subspace(rng), b = random_subspace(rng);
      v.require(superadditivity_check(a, b, MonomialOrder::lex(), 8).holds, "superadditivity pair " + std::to_string(i));
    }
    int tested = 0;
    while (tested < 10) {
      const auto a = random_support(rng, 2, 5, 0, 3);
      if (!difference_lattice_index({a}).is_one()) continue;
      ++tested;
      const auto t = fit_hilbert_tail(hilbert_function(monomial_subspace(a), 14));
      const Integer expected = bkk_number({a, a});
      v.require(t.degree == 2 && t.stable && t.leading_difference == expected,
                "leading difference " + str(t.leading_difference) + " vs " + str(expected));
    }
    return v;
  });

  criterion(9, "Hodge analogue (300), algebraic AF (100, n = 3), algebraic BM (100)", 0, [] {
    Verdict v;
    Rng rng(909, 0);
    for (int i = 0; i < 300; ++i) {
      const auto a = random_support(rng, 2, 5, 0, 3), b = random_support(rng, 2, 5, 0, 3);
      v.require(check_hodge_analogue(a, b).holds, "Hodge analogue at " + std::to_string(i));
    }
    for (int i = 0; i < 100; ++i) {
      std::vector<SupportSet> s;
      for (int j = 0; j < 3; ++j) s.push_back(random_support(rng, 3, 5, 0, 2));
      v.require(check_algebraic_af(s).holds, "algebraic AF at " + std::to_string(i));
    }
    for (int i = 0; i < 100; ++i) {
      const auto a = random_support(rng, 2, 5, 0, 3), b = random_support(rng, 2, 5, 0, 3);
      v.require(check_algebraic_bm(a, b).holds, "algebraic BM at " + std::to_string(i));
    }
    return v;
  });

  criterion(10, "Steiner symmetrization: area, perimeter, convergence, section profile", 0, [] {
    Verdict v;
    Rng rng(1010, 0);
    for (int i = 0; i < 200; ++i) {
      const auto p = random_convex_polygon(rng, static_cast<std::size_t>(rng.uniform_int(3, 10)), -8, 8);
      std::int64_t a = 0, b = 0;
      while (a == 0 && b == 0) {
        a = rng.uniform_int(-6, 6);
        b = rng.uniform_int(-6, 6);
      }
      const auto s = steiner_symmetrize(p, {Rational(a), Rational(b)});
      v.require(s.area() == p.area(), "area changed at " + std::to_string(i));
    }
    ConvexPolygon quad = random_convex_polygon(rng, 4, 0, 6);
    while (quad.size() != 4) quad = random_convex_polygon(rng, 4, 0, 6);
    const auto rows = iterate_symmetrize(quad, 50, 1010);
    double prev = quad.perimeter();
    for (const auto& r : rows) {
      v.require(r.step_preserved, "symmetrization step changed area at round " + std::to_string(r.round));
      v.require(r.perimeter <= prev + 1e-9, "perimeter increased at round " + std::to_string(r.round));
      prev = r.perimeter;
    }
    const double radius = std::sqrt(quad.area().get_d() / std::numbers::pi);
    const double ratio = rows.back().hausdorff / radius;
    v.require(ratio < 0.05, "Hausdorff/radius = " + io::format_double(ratio));
    for (int i = 0; i < 100; ++i) {
      const auto d1 = random_lattice_polytope(rng, 2, 6, 4), d2 = random_lattice_polytope(rng, 2, 6, 4);
      const auto rep = check_profile_concavity(d1, d2, section_profile(d1, d2, 10));
      v.require(rep.holds(), "profile concavity at " + std::to_string(i));
    }
    if (v.pass) {
      v.detail = "Hausdorff/radius " + io::format_double(ratio) + ", area lost to pruning " +
                 io::format_double(Rational(rows.back().approximation_loss / quad.area()).get_d()) + " (relative)";
    }
    return v;
  });

  criterion(11, "selftest reports are byte-identical across runs", 0, [] {
    Verdict v;
    cli::Command c;
    c.name = "selftest";
    c.seed = 11;
    std::ostringstream a, b, err;
    const int ca = cli::run(c, a, err), cb = cli::run(c, b, err);
    v.require(ca == 0 && cb == 0, "selftest reported failures: " + err.str());
    v.require(a.str() == b.str() && !a.str().empty(), "reports differ");
    return v;
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
