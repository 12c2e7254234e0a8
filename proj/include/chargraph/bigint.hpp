#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chargraph {

using BigInt = mpz_class;

/// Raised for argument errors (out-of-range indices, malformed parameters).
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two independent computations disagree, or an internal
/// invariant does not hold. Always indicates a bug.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Raised when a computation would exceed the resources it is allowed.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Extended gcd: returns g = gcd(a, b) >= 0 with u*a + v*b = g.
inline BigInt extended_gcd(const BigInt& a, const BigInt& b, BigInt& u, BigInt& v) {
  BigInt g;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Exact division; the caller guarantees d | a.
inline BigInt exact_div(const BigInt& a, const BigInt& d) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline bool divides(const BigInt& d, const BigInt& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Balanced quotient: q with a - q*d in (-|d|/2, |d|/2]. d must be nonzero.
inline BigInt balanced_quotient(const BigInt& a, const BigInt& d) {
  BigInt ad = abs(d);
  BigInt q, r;
  // floor division by |d| puts r in [0, |d|)
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), ad.get_mpz_t());
  if (2 * r > ad) {
    r -= ad;
    q += 1;
  }
  if (sgn(d) < 0) q = -q;
  return q;
}

inline BigInt balanced_remainder(const BigInt& a, const BigInt& d) {
  return a - balanced_quotient(a, d) * d;
}

inline std::string to_string(const BigInt& a) { return a.get_str(); }

inline BigInt parse_bigint(const std::string& s) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) throw ArgumentError("not an integer: '" + s + "'");
  return v;
}

}  // namespace chargraph
