#pragma once

// Exact arithmetic primitives shared by every module: GMP-backed rationals
// and integers, string round-tripping in canonical "p/q" form, and the
// exception hierarchy used across the library.

#include <gmpxx.h>

#include <cstdint>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

namespace okounkov {

using Integer = mpz_class;
using Rational = mpq_class;

/// Malformed or inconsistent input (bad dimensions, bad JSON, bad arity).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numeric decision could not be made within the configured budget.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric routine failed to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw InputError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(Integer(static_cast<long>(num)),
                       Integer(static_cast<long>(den)));
}

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
inline Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw InputError("not a rational: '" + text + "'");
  }
  Integer num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  Integer den = 1;
  if (m[2].matched) {
    const std::string d = m[2].str();
    den = Integer(d.front() == '+' ? d.substr(1) : d);
  }
  return make_rational(num, den);
}

/// Canonical decimal "p/q" (or "p" when the denominator is 1).
inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// q^e for a nonnegative integer exponent.
inline Rational pow(const Rational& q, unsigned e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
  return make_rational(num, den);
}

inline Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace okounkov
