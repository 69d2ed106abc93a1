#pragma once

// Exact decisions about sums of m-th roots of nonnegative rationals.

#include <optional>

#include "okounkov/rational.hpp"

namespace okounkov {

enum class Comparison { less, equal, greater };

inline Comparison compare(const Rational& x, const Rational& y) {
  const int s = cmp(x, y);
  return s < 0 ? Comparison::less : (s > 0 ? Comparison::greater : Comparison::equal);
}

/// q^(1/m) when it is rational.
inline std::optional<Rational> exact_root(const Rational& q, unsigned m) {
  if (q < 0) return std::nullopt;
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), q.get_num_mpz_t(), m) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), q.get_den_mpz_t(), m) == 0) return std::nullopt;
  return make_rational(rn, rd);
}

namespace detail {

/// r with r <= 2^bits * q^(1/m) < r + 1.
inline Integer scaled_floor_root(const Rational& q, unsigned m, unsigned long bits) {
  Integer num = q.get_num();
  num <<= bits * m;
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), m);
  return r;
}

}  // namespace detail

/// Sign of c^(1/m) - (a^(1/m) + b^(1/m)) for a, b, c >= 0.
///
/// m = 1, 2 are decided by exact rational algebra. For m >= 3 the equality
/// case can only occur when a/c and b/c are both rational m-th powers
/// (linear independence of real radicals), which is tested exactly; otherwise
/// the two sides differ and dyadic interval bounds are refined until they
/// separate. Throws InconclusiveError once `max_bits` is exceeded.
inline Comparison compare_root_sum(const Rational& a, const Rational& b, const Rational& c,
                                   unsigned m, unsigned long max_bits = 1u << 14) {
  if (m == 0) throw InputError("compare_root_sum: m must be positive");
  if (a < 0 || b < 0 || c < 0) throw InputError("compare_root_sum: negative argument");
  if (m == 1) return compare(c, a + b);
  if (a == 0) return compare(c, b);
  if (b == 0) return compare(c, a);
  if (c == 0) return Comparison::less;
  if (m == 2) {
    const Rational d = c - a - b;
    if (d < 0) return Comparison::less;
    return compare(d * d, 4 * a * b);
  }
  const auto ru = exact_root(a / c, m);
  const auto rw = exact_root(b / c, m);
  if (ru && rw) return compare(Rational(1), *ru + *rw);
  for (unsigned long bits = 64; bits <= max_bits; bits *= 2) {
    const Integer la = detail::scaled_floor_root(a, m, bits);
    const Integer lb = detail::scaled_floor_root(b, m, bits);
    const Integer lc = detail::scaled_floor_root(c, m, bits);
    if (lc > la + lb + 2) return Comparison::greater;
    if (lc + 1 < la + lb) return Comparison::less;
  }
  throw InconclusiveError("compare_root_sum: undecided after refinement cap");
}

}  // namespace okounkov
