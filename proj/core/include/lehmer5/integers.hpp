#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lehmer5 {

using Int = mpz_class;
using Rat = mpq_class;

/// Least non-negative residue of a modulo m (m > 0).
inline Int mod_nonneg(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Inverse of a modulo m; throws if gcd(a, m) != 1.
inline Int mod_inverse(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("mod_inverse: not invertible");
  return r;
}

/// Nearest integer to q, ties rounded up.
inline Int round_nearest(const Rat& q) {
  Int num = q.get_num(), den = q.get_den();  // den > 0, canonical
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), Int(2 * num + den).get_mpz_t(), Int(2 * den).get_mpz_t());
  return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

/// "p/q" for non-integers, plain decimal otherwise.
inline std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Int parse_int(const std::string& s) { return Int(s, 10); }

inline Rat parse_rat(const std::string& s) {
  Rat q(s, 10);
  q.canonicalize();
  return q;
}

inline int parity_sign(long k) { return (k % 2) ? -1 : 1; }

}  // namespace lehmer5
