#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace maxgenus {

/// Arbitrary-precision integer used for every class coefficient, degree and genus.
using Integer = mpz_class;
/// Exact rational; only the printed closed-form bound and total-transform fractions use it.
using Rational = mpq_class;

/// A caller supplied parameters outside an operation's domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input text could not be parsed (divisor class strings, CLI ranges).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity failed; never returned silently.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

// Floor/ceil division with a positive divisor, matching Euclidean division.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer binomial(const Integer& n, unsigned long k) {
  if (n < 0) {
    return 0;
  }
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool fits_int64(const Integer& z) { return z.fits_slong_p(); }

inline std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) {
    throw ParameterError("integer " + z.get_str() + " does not fit in 64 bits");
  }
  return z.get_si();
}

}  // namespace maxgenus
