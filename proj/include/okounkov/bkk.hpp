#pragma once

// Generic torus root counting for sparse systems in one and two variables,
// compared against n! times the mixed volume of the Newton polytopes.
//
// One variable: Aberth-Ehrlich on the monomial-normalized polynomial.
// Two variables: eliminate y with a Sylvester resultant (evaluated on roots
// of unity and interpolated), lift each resultant root back to candidate y
// values, polish every candidate with Newton's method on the full system and
// count distinct polished torus solutions.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numbers>
#include <optional>
#include <thread>
#include <vector>

#include "okounkov/algebra.hpp"
#include "okounkov/mixedvol.hpp"
#include "okounkov/random.hpp"
#include "okounkov/semigroup.hpp"

namespace okounkov {

using Complex = std::complex<double>;

class ComplexLaurentPolynomial {
 public:
  explicit ComplexLaurentPolynomial(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw InputError("polynomial dimension must be positive");
  }

  std::size_t dim() const { return dim_; }
  const std::map<Exponent, Complex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, Complex c) {
    if (e.size() != dim_) throw InputError("exponent has wrong dimension");
    if (c == Complex(0)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Complex(0)) terms_.erase(it);
    }
  }

  SupportSet support() const {
    std::vector<LatticePoint> pts;
    for (const auto& [e, c] : terms_) pts.push_back(e);
    return SupportSet(dim_, std::move(pts));
  }

  Complex operator()(const std::vector<Complex>& z) const {
    Complex s = 0;
    for (const auto& [e, c] : terms_) {
      Complex t = c;
      for (std::size_t i = 0; i < dim_; ++i) t *= std::pow(z[i], static_cast<int>(e[i]));
      s += t;
    }
    return s;
  }

  /// Sum of |c| |z^e|, the natural scale for relative residuals.
  double magnitude(const std::vector<Complex>& z) const {
    double s = 0;
    for (const auto& [e, c] : terms_) {
      double t = std::abs(c);
      for (std::size_t i = 0; i < dim_; ++i) t *= std::pow(std::abs(z[i]), static_cast<double>(e[i]));
      s += t;
    }
    return s;
  }

  /// Multiply by z^shift (torus roots are unchanged).
  ComplexLaurentPolynomial shifted(const Exponent& shift) const {
    ComplexLaurentPolynomial r(dim_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      for (std::size_t i = 0; i < dim_; ++i) f[i] += shift[i];
      r.terms_.emplace(std::move(f), c);
    }
    return r;
  }

  friend ComplexLaurentPolynomial operator*(const ComplexLaurentPolynomial& a,
                                            const ComplexLaurentPolynomial& b) {
    if (a.dim_ != b.dim_) throw InputError("polynomial dimension mismatch");
    ComplexLaurentPolynomial r(a.dim_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(a.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const ComplexLaurentPolynomial&, const ComplexLaurentPolynomial&) = default;

 private:
  std::size_t dim_;
  std::map<Exponent, Complex> terms_;
};

/// Tolerances of the numeric side.
struct SolverConfig {
  double residual_tol = 1e-8;     // relative residual accepted for a root
  double separation_floor = 1e-6; // closer distinct roots make a trial degenerate
  double zero_floor = 1e-8;       // |coordinate| below this is off the torus
  int max_iterations = 500;
};

/// n! V(conv A_1, ..., conv A_n) for n supports in Z^n.
inline Integer bkk_number(const std::vector<SupportSet>& supports) {
  if (supports.empty()) throw InputError("bkk_number: no supports");
  const std::size_t n = supports.size();
  BodyTuple bodies;
  for (const auto& a : supports) {
    if (a.dim() != n) throw InputError("bkk_number: need n supports in Z^n");
    bodies.push_back(convex_hull(a));
  }
  const Rational v = mixed_volume(bodies) * Rational(factorial(static_cast<unsigned>(n)));
  if (!is_integer(v)) throw std::logic_error("bkk_number: non-integral mixed volume count");
  return v.get_num();
}

/// Coefficients i.i.d. uniform (by area) on the annulus 1/2 <= |c| <= 1.
inline std::vector<ComplexLaurentPolynomial> random_generic_system(const std::vector<SupportSet>& supports,
                                                                   std::uint64_t seed,
                                                                   std::uint64_t stream = 0) {
  Rng rng(seed, stream);
  std::vector<ComplexLaurentPolynomial> out;
  for (const auto& a : supports) {
    ComplexLaurentPolynomial p(a.dim());
    for (const auto& e : a) {
      const double r = std::sqrt(0.25 + 0.75 * rng.uniform01());
      const double phase = 2 * std::numbers::pi * rng.uniform01();
      p.add_term(e, std::polar(r, phase));
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace detail {

using CPoly = std::vector<Complex>;  // coefficients, lowest degree first

inline Complex horner(const CPoly& p, Complex z) {
  Complex s = 0;
  for (std::size_t i = p.size(); i-- > 0;) s = s * z + p[i];
  return s;
}

inline double horner_magnitude(const CPoly& p, double r) {
  double s = 0;
  for (std::size_t i = p.size(); i-- > 0;) s = s * r + std::abs(p[i]);
  return s;
}

inline void trim_leading(CPoly& p, double rel = 0.0) {
  double mx = 0;
  for (const auto& c : p) mx = std::max(mx, std::abs(c));
  while (!p.empty() && std::abs(p.back()) <= rel * mx) p.pop_back();
}

struct RootResult {
  std::vector<Complex> roots;
  bool converged = false;
};

/// Aberth-Ehrlich simultaneous iteration followed by Newton polishing.
inline RootResult aberth(CPoly p, int max_iterations) {
  trim_leading(p);
  RootResult out;
  if (p.size() <= 1) {
    out.converged = true;
    return out;
  }
  const std::size_t deg = p.size() - 1;
  CPoly dp(deg);
  for (std::size_t i = 1; i <= deg; ++i) dp[i - 1] = static_cast<double>(i) * p[i];
  double radius = std::abs(p[0]) > 0 ? std::pow(std::abs(p[0]) / std::abs(p[deg]), 1.0 / deg) : 1.0;
  if (!(radius > 0) || !std::isfinite(radius)) radius = 1.0;
  std::vector<Complex> z(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    z[i] = std::polar(radius, 2 * std::numbers::pi * (i + 0.25) / deg + 0.4);
  }
  for (int it = 0; it < max_iterations; ++it) {
    double worst = 0;
    for (std::size_t i = 0; i < deg; ++i) {
      const Complex pv = horner(p, z[i]);
      if (pv == Complex(0)) continue;
      const Complex ratio = pv / horner(dp, z[i]);
      Complex sum = 0;
      for (std::size_t j = 0; j < deg; ++j) {
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      }
      const Complex w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[i])));
    }
    if (worst < 1e-15) {
      out.converged = true;
      break;
    }
  }
  for (auto& r : z) {
    for (int k = 0; k < 3; ++k) {
      const Complex d = horner(dp, r);
      if (d == Complex(0)) break;
      const Complex step = horner(p, r) / d;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      r -= step;
    }
  }
  out.roots = std::move(z);
  return out;
}

inline double min_separation(const std::vector<Complex>& z) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      best = std::min(best, std::abs(z[i] - z[j]) / std::max(1.0, std::max(std::abs(z[i]), std::abs(z[j]))));
    }
  }
  return best;
}

/// Dense coefficients c[i][j] of x^i y^j after shifting exponents to be >= 0.
struct Dense2 {
  std::vector<std::vector<Complex>> c;
  std::size_t deg_x = 0, deg_y = 0;
};

inline Dense2 normalize2(const ComplexLaurentPolynomial& p) {
  std::int64_t mx = std::numeric_limits<std::int64_t>::max(), my = mx;
  for (const auto& [e, c] : p.terms()) {
    mx = std::min(mx, e[0]);
    my = std::min(my, e[1]);
  }
  Dense2 d;
  for (const auto& [e, c] : p.terms()) {
    d.deg_x = std::max<std::size_t>(d.deg_x, static_cast<std::size_t>(e[0] - mx));
    d.deg_y = std::max<std::size_t>(d.deg_y, static_cast<std::size_t>(e[1] - my));
  }
  d.c.assign(d.deg_x + 1, std::vector<Complex>(d.deg_y + 1, 0.0));
  for (const auto& [e, c] : p.terms()) d.c[e[0] - mx][e[1] - my] += c;
  return d;
}

/// Coefficients in y of p(x0, y).
inline CPoly at_x(const Dense2& p, Complex x0) {
  CPoly out(p.deg_y + 1, 0.0);
  Complex xp = 1;
  for (std::size_t i = 0; i <= p.deg_x; ++i) {
    for (std::size_t j = 0; j <= p.deg_y; ++j) out[j] += p.c[i][j] * xp;
    xp *= x0;
  }
  return out;
}

/// Coefficients in x of p(x, y0) (used when p does not involve y).
inline CPoly x_only(const Dense2& p) {
  CPoly out(p.deg_x + 1, 0.0);
  for (std::size_t i = 0; i <= p.deg_x; ++i) out[i] = p.c[i][0];
  return out;
}

inline Complex complex_det(std::vector<std::vector<Complex>> m) {
  const std::size_t n = m.size();
  Complex det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    if (m[piv][col] == Complex(0)) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

inline Complex sylvester_det(const CPoly& a, const CPoly& b) {
  const std::size_t da = a.size() - 1, db = b.size() - 1, n = da + db;
  std::vector<std::vector<Complex>> m(n, std::vector<Complex>(n, 0.0));
  for (std::size_t r = 0; r < db; ++r) {
    for (std::size_t k = 0; k <= da; ++k) m[r][r + k] = a[da - k];
  }
  for (std::size_t r = 0; r < da; ++r) {
    for (std::size_t k = 0; k <= db; ++k) m[db + r][r + k] = b[db - k];
  }
  return complex_det(std::move(m));
}

/// Res_y(p1, p2) as a polynomial in x, by evaluation on roots of unity and
/// inverse DFT. Coefficients below `rel` times the largest are dropped.
inline CPoly resultant_y(const Dense2& p1, const Dense2& p2, double rel = 1e-10) {
  const std::size_t bound = p2.deg_y * p1.deg_x + p1.deg_y * p2.deg_x;
  const std::size_t samples = bound + 1;
  std::vector<Complex> values(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    const Complex x = std::polar(1.0, 2 * std::numbers::pi * j / samples);
    values[j] = sylvester_det(at_x(p1, x), at_x(p2, x));
  }
  CPoly coeffs(samples, 0.0);
  for (std::size_t k = 0; k < samples; ++k) {
    Complex s = 0;
    for (std::size_t j = 0; j < samples; ++j) {
      s += values[j] * std::polar(1.0, -2 * std::numbers::pi * static_cast<double>((j * k) % samples) / samples);
    }
    coeffs[k] = s / static_cast<double>(samples);
  }
  double mx = 0;
  for (const auto& c : coeffs) mx = std::max(mx, std::abs(c));
  for (auto& c : coeffs) {
    if (std::abs(c) <= rel * mx) c = 0;
  }
  trim_leading(coeffs);
  return coeffs;
}

}  // namespace detail

struct RootCount1D {
  int count = 0;
  int degree = 0;  // max - min exponent
  double max_residual = 0;
  double min_separation = std::numeric_limits<double>::infinity();
};

/// Distinct validated torus roots of a univariate Laurent polynomial.
inline RootCount1D solve_roots_1d(const ComplexLaurentPolynomial& p, const SolverConfig& cfg = {}) {
  if (p.dim() != 1) throw InputError("count_roots_1d: polynomial must be univariate");
  if (p.is_zero()) throw InputError("count_roots_1d: zero polynomial");
  const std::int64_t lo = p.terms().begin()->first[0];
  const std::int64_t hi = p.terms().rbegin()->first[0];
  detail::CPoly c(static_cast<std::size_t>(hi - lo) + 1, 0.0);
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e[0] - lo)] = v;
  RootCount1D r;
  r.degree = static_cast<int>(hi - lo);
  if (r.degree == 0) return r;
  const auto roots = detail::aberth(c, cfg.max_iterations);
  std::vector<Complex> good;
  for (const auto& z : roots.roots) {
    const double res = std::abs(detail::horner(c, z)) / detail::horner_magnitude(c, std::abs(z));
    r.max_residual = std::max(r.max_residual, res);
    if (res < cfg.residual_tol && std::abs(z) > cfg.zero_floor) good.push_back(z);
  }
  if (!roots.converged && good.size() != roots.roots.size()) {
    throw NumericError("count_roots_1d: root finder did not converge");
  }
  r.min_separation = detail::min_separation(good);
  if (r.min_separation < cfg.separation_floor) {
    throw NumericError("count_roots_1d: clustered roots");
  }
  r.count = static_cast<int>(good.size());
  return r;
}

inline int count_roots_1d(const ComplexLaurentPolynomial& p, const SolverConfig& cfg = {}) {
  return solve_roots_1d(p, cfg).count;
}

struct Solve2D {
  int count = 0;
  bool degenerate = false;
  double max_residual = 0;
  double min_separation = std::numeric_limits<double>::infinity();
  std::vector<std::pair<Complex, Complex>> solutions;
};

namespace detail {

struct Jet {
  Complex value, dx, dy;
  double magnitude;
};

inline Jet jet(const Dense2& p, Complex x, Complex y) {
  Jet j{0.0, 0.0, 0.0, 0.0};
  const double ax = std::abs(x), ay = std::abs(y);
  for (std::size_t i = 0; i <= p.deg_x; ++i) {
    for (std::size_t k = 0; k <= p.deg_y; ++k) {
      const Complex c = p.c[i][k];
      if (c == Complex(0)) continue;
      const Complex xi = std::pow(x, static_cast<int>(i)), yk = std::pow(y, static_cast<int>(k));
      j.value += c * xi * yk;
      if (i > 0) j.dx += c * static_cast<double>(i) * std::pow(x, static_cast<int>(i) - 1) * yk;
      if (k > 0) j.dy += c * static_cast<double>(k) * xi * std::pow(y, static_cast<int>(k) - 1);
      j.magnitude += std::abs(c) * std::pow(ax, static_cast<double>(i)) * std::pow(ay, static_cast<double>(k));
    }
  }
  return j;
}

struct Polished {
  Complex x, y;
  double residual;
  double conditioning;  // |det J| relative to the Jacobian row norms
  bool ok;
};

inline Polished newton2(const Dense2& p1, const Dense2& p2, Complex x, Complex y) {
  for (int it = 0; it < 60; ++it) {
    const Jet a = jet(p1, x, y), b = jet(p2, x, y);
    const Complex det = a.dx * b.dy - a.dy * b.dx;
    if (det == Complex(0)) break;
    const Complex sx = (a.value * b.dy - a.dy * b.value) / det;
    const Complex sy = (a.dx * b.value - a.value * b.dx) / det;
    if (!std::isfinite(std::abs(sx)) || !std::isfinite(std::abs(sy))) return {x, y, 1.0, 0.0, false};
    x -= sx;
    y -= sy;
    if (std::abs(sx) + std::abs(sy) < 1e-15 * (1.0 + std::abs(x) + std::abs(y))) break;
  }
  const Jet a = jet(p1, x, y), b = jet(p2, x, y);
  const double res = std::max(std::abs(a.value) / a.magnitude, std::abs(b.value) / b.magnitude);
  const double na = std::abs(a.dx) + std::abs(a.dy), nb = std::abs(b.dx) + std::abs(b.dy);
  const double cond = std::abs(a.dx * b.dy - a.dy * b.dx) / std::max(na * nb, 1e-300);
  const bool finite = std::isfinite(std::abs(x)) && std::isfinite(std::abs(y)) && std::isfinite(res);
  return {x, y, finite ? res : 1.0, cond, finite};
}

}  // namespace detail

/// Counts isolated solutions of p1 = p2 = 0 in (C*)^2.
inline Solve2D solve_system_2d(const ComplexLaurentPolynomial& p1, const ComplexLaurentPolynomial& p2,
                               const SolverConfig& cfg = {}) {
  if (p1.dim() != 2 || p2.dim() != 2) throw InputError("count_solutions_2d: need bivariate polynomials");
  if (p1.is_zero() || p2.is_zero()) throw InputError("count_solutions_2d: zero polynomial");
  Solve2D out;
  // A monomial never vanishes on the torus.
  if (p1.terms().size() == 1 || p2.terms().size() == 1) return out;
  const detail::Dense2 a = detail::normalize2(p1), b = detail::normalize2(p2);

  std::vector<Complex> xs;
  const detail::Dense2* lift = &a;   // polynomial whose y-roots give candidates
  if (a.deg_y == 0 && b.deg_y == 0) {
    // Both depend on x alone: generically no common root, hence no solution.
    const auto ra = detail::aberth(detail::x_only(a), cfg.max_iterations);
    const auto xb = detail::x_only(b);
    for (const auto& z : ra.roots) {
      if (std::abs(detail::horner(xb, z)) / detail::horner_magnitude(xb, std::abs(z)) < cfg.residual_tol) {
        out.degenerate = true;
      }
    }
    return out;
  }
  if (a.deg_y == 0) {
    xs = detail::aberth(detail::x_only(a), cfg.max_iterations).roots;
    lift = &b;
  } else if (b.deg_y == 0) {
    xs = detail::aberth(detail::x_only(b), cfg.max_iterations).roots;
  } else {
    const detail::CPoly res = detail::resultant_y(a, b);
    if (res.empty()) {
      out.degenerate = true;  // common factor
      return out;
    }
    xs = detail::aberth(res, cfg.max_iterations).roots;
  }

  std::vector<std::pair<Complex, Complex>> accepted;
  for (const Complex& x0 : xs) {
    if (std::abs(x0) <= cfg.zero_floor) continue;
    const auto ys = detail::aberth(detail::at_x(*lift, x0), cfg.max_iterations).roots;
    for (const Complex& y0 : ys) {
      if (std::abs(y0) <= cfg.zero_floor || !std::isfinite(std::abs(y0))) continue;
      const detail::Jet ja = detail::jet(a, x0, y0), jb = detail::jet(b, x0, y0);
      const double pre = std::max(std::abs(ja.value) / ja.magnitude, std::abs(jb.value) / jb.magnitude);
      if (!(pre < 1e-3)) continue;
      const detail::Polished s = detail::newton2(a, b, x0, y0);
      if (!s.ok || s.residual >= cfg.residual_tol) continue;
      if (std::abs(s.x) <= cfg.zero_floor || std::abs(s.y) <= cfg.zero_floor) continue;
      bool duplicate = false;
      for (const auto& [ux, uy] : accepted) {
        const double scale = 1.0 + std::abs(ux) + std::abs(uy);
        if (std::abs(ux - s.x) + std::abs(uy - s.y) < 1e-9 * scale) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      if (s.conditioning < 1e-10) out.degenerate = true;
      out.max_residual = std::max(out.max_residual, s.residual);
      accepted.emplace_back(s.x, s.y);
    }
  }
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    for (std::size_t j = i + 1; j < accepted.size(); ++j) {
      const auto& [x1, y1] = accepted[i];
      const auto& [x2, y2] = accepted[j];
      const double scale = std::max(1.0, std::abs(x1) + std::abs(y1));
      out.min_separation = std::min(out.min_separation, (std::abs(x1 - x2) + std::abs(y1 - y2)) / scale);
    }
  }
  if (out.min_separation < cfg.separation_floor) out.degenerate = true;
  out.count = static_cast<int>(accepted.size());
  out.solutions = std::move(accepted);
  return out;
}

inline int count_solutions_2d(const ComplexLaurentPolynomial& p1, const ComplexLaurentPolynomial& p2,
                              double tol = 1e-8) {
  SolverConfig cfg;
  cfg.residual_tol = tol;
  const Solve2D s = solve_system_2d(p1, p2, cfg);
  if (s.degenerate) throw NumericError("count_solutions_2d: degenerate system");
  return s.count;
}

struct CountReport {
  Integer predicted;
  std::vector<int> trials;     // counts of non-degenerate trials
  std::optional<int> modal;    // strict-majority count, if any
  bool agreed = false;         // modal == predicted
  int degenerate_trials = 0;
  std::vector<int> completion_trials;
  std::optional<int> completion_modal;
  bool completion_agreed = false;  // completion modal == modal
  double max_residual = 0;
  double min_separation = std::numeric_limits<double>::infinity();

  bool inconclusive() const { return !modal || !completion_modal; }
};

inline std::size_t default_thread_count() {
  if (const char* env = std::getenv("OKOUNKOV_LAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  return 1;
}

namespace detail {

struct TrialOutcome {
  bool degenerate = true;
  int count = 0;
  double residual = 0;
  double separation = std::numeric_limits<double>::infinity();
};

inline TrialOutcome run_trial(const std::vector<SupportSet>& supports, std::uint64_t seed,
                              std::uint64_t stream, const SolverConfig& cfg) {
  const auto system = random_generic_system(supports, seed, stream);
  TrialOutcome t;
  try {
    if (supports.size() == 1) {
      const RootCount1D r = solve_roots_1d(system[0], cfg);
      t = {false, r.count, r.max_residual, r.min_separation};
    } else {
      const Solve2D s = solve_system_2d(system[0], system[1], cfg);
      t = {s.degenerate, s.count, s.max_residual, s.min_separation};
    }
  } catch (const NumericError&) {
    t.degenerate = true;
  }
  return t;
}

/// Runs trials on consecutive streams (in parallel batches), replacing
/// degenerate ones up to a retry cap.
inline std::vector<TrialOutcome> run_trials(const std::vector<SupportSet>& supports, int trials,
                                            std::uint64_t seed, std::uint64_t stream_base,
                                            const SolverConfig& cfg, std::size_t threads,
                                            int& degenerate) {
  std::vector<TrialOutcome> good;
  std::uint64_t next = 0;
  const std::uint64_t cap = static_cast<std::uint64_t>(trials) * 3;
  while (static_cast<int>(good.size()) < trials && next < cap) {
    const std::uint64_t batch = std::min<std::uint64_t>(static_cast<std::uint64_t>(trials) - good.size(), cap - next);
    std::vector<TrialOutcome> results(batch);
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, batch));
    if (workers == 1) {
      for (std::uint64_t i = 0; i < batch; ++i) results[i] = run_trial(supports, seed, stream_base + next + i, cfg);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::uint64_t i = w; i < batch; i += workers) {
            results[i] = run_trial(supports, seed, stream_base + next + i, cfg);
          }
        });
      }
      for (auto& th : pool) th.join();
    }
    next += batch;
    for (const auto& r : results) {
      if (r.degenerate) {
        ++degenerate;
      } else {
        good.push_back(r);
      }
    }
  }
  return good;
}

inline std::optional<int> strict_majority(const std::vector<int>& counts) {
  std::map<int, int> freq;
  for (int c : counts) ++freq[c];
  for (const auto& [value, f] : freq) {
    if (2 * f > static_cast<int>(counts.size())) return value;
  }
  return std::nullopt;
}

}  // namespace detail

/// Compares the modal numeric count over `trials` random systems with the
/// mixed-volume prediction, and repeats the count on the completed supports.
inline CountReport verify_bkk(const std::vector<SupportSet>& supports, int trials, std::uint64_t seed,
                              const SolverConfig& cfg = {}, std::size_t threads = default_thread_count()) {
  const std::size_t n = supports.size();
  if (n != 1 && n != 2) throw InputError("verify_bkk: numeric counting supports n = 1 or 2");
  if (trials < 3) throw InputError("verify_bkk: need at least 3 trials");
  CountReport rep;
  rep.predicted = bkk_number(supports);
  std::vector<SupportSet> completed;
  for (const auto& a : supports) completed.push_back(completion(a));

  const auto base = detail::run_trials(supports, trials, seed, 0, cfg, threads, rep.degenerate_trials);
  const auto comp = detail::run_trials(completed, trials, seed, std::uint64_t{1} << 32, cfg, threads,
                                       rep.degenerate_trials);
  for (const auto& t : base) {
    rep.trials.push_back(t.count);
    rep.max_residual = std::max(rep.max_residual, t.residual);
    rep.min_separation = std::min(rep.min_separation, t.separation);
  }
  for (const auto& t : comp) rep.completion_trials.push_back(t.count);
  rep.modal = detail::strict_majority(rep.trials);
  rep.completion_modal = detail::strict_majority(rep.completion_trials);
  rep.agreed = rep.modal && Integer(*rep.modal) == rep.predicted;
  rep.completion_agreed = rep.modal && rep.completion_modal && *rep.modal == *rep.completion_modal;
  return rep;
}

/// [L,L][G,G] <= [L,G]^2 for monomial subspaces of Laurent polynomials in 2 variables.
inline InequalityReport check_hodge_analogue(const SupportSet& l, const SupportSet& g) {
  InequalityReport r;
  const Integer lg = bkk_number({l, g});
  r.lhs = Rational(bkk_number({l, l}) * bkk_number({g, g}));
  r.rhs = Rational(lg * lg);
  r.holds = r.lhs <= r.rhs;
  return r;
}

/// [L1,L2,L3..]^2 >= [L1,L1,L3..][L2,L2,L3..] for monomial subspaces.
inline InequalityReport check_algebraic_af(const std::vector<SupportSet>& supports) {
  if (supports.size() < 2) throw InputError("algebraic AF needs n >= 2");
  std::vector<SupportSet> first = supports, second = supports;
  first[1] = supports[0];
  second[0] = supports[1];
  InequalityReport r;
  const Integer v = bkk_number(supports);
  r.lhs = Rational(v * v);
  r.rhs = Rational(bkk_number(first) * bkk_number(second));
  r.holds = r.lhs >= r.rhs;
  return r;
}

/// [L..L]^(1/n) + [G..G]^(1/n) <= [LG..LG]^(1/n), with L_A L_B = L_{A+B}.
inline RootSumReport check_algebraic_bm(const SupportSet& l, const SupportSet& g) {
  const std::size_t n = l.dim();
  auto self = [n](const SupportSet& a) { return bkk_number(std::vector<SupportSet>(n, a)); };
  return make_root_sum_report(static_cast<unsigned>(n), Rational(self(l)), Rational(self(g)),
                              Rational(self(sumset(l, g))));
}

}  // namespace okounkov
