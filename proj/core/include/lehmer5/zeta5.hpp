#pragma once

#include <array>
#include <string>

#include "lehmer5/integers.hpp"

namespace lehmer5 {

/// Element of Z[zeta_5] in coordinates on the power basis {1, z, z^2, z^3},
/// with z^4 rewritten as -1-z-z^2-z^3. The representation is canonical:
/// two values are equal iff their coordinates are equal.
struct CycInt {
  std::array<Int, 4> c{};

  CycInt() = default;
  explicit CycInt(Int c0) : c{std::move(c0), 0, 0, 0} {}
  CycInt(Int c0, Int c1, Int c2, Int c3)
      : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static CycInt zeta();                 // z
  static CycInt zeta_pow(int k);        // z^k, any k
  static CycInt golden_ratio();         // (1+sqrt5)/2 = -z^2-z^3

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
  bool is_one() const { return c[0] == 1 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

  std::string str() const;
};

bool operator==(const CycInt& a, const CycInt& b);
inline bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }
CycInt operator+(const CycInt& a, const CycInt& b);
CycInt operator-(const CycInt& a, const CycInt& b);
CycInt operator-(const CycInt& a);
CycInt operator*(const CycInt& a, const CycInt& b);

/// Image in Z[z]/(1-z) = F_5 as a symmetric representative in {-2,...,2}.
struct QuinticResidue {
  int value = 0;
  friend bool operator==(QuinticResidue a, QuinticResidue b) { return a.value == b.value; }
  friend QuinticResidue operator*(QuinticResidue a, QuinticResidue b) {
    int v = (a.value * b.value) % 5;
    if (v > 2) v -= 5;
    if (v < -2) v += 5;
    return {v};
  }
};

CycInt cyc_mul(const CycInt& x, const CycInt& y);

/// zeta -> zeta^j for j in {1,2,3,4}; j=1 is the identity.
CycInt galois_apply(const CycInt& x, int j);

/// Product of x with its three Galois conjugates; always a rational integer
/// (and non-negative, Q(zeta_5) being totally imaginary).
Int cyc_norm(const CycInt& x);

bool divides(const CycInt& d, const CycInt& x);
CycInt div_exact(const CycInt& d, const CycInt& x);

QuinticResidue residue_mod_one_minus_zeta(const CycInt& x);

/// u_lambda * lambda with u_lambda in {1, -1, (1+sqrt5)/2, -(1+sqrt5)/2}
/// chosen so the result is == 1 mod (1-zeta). Requires residue != 0.
CycInt unit_normalize(const CycInt& lambda);

/// Norm-Euclidean descent; result is unit-normalized when its residue != 0.
CycInt cyc_gcd(CycInt x, CycInt y);

/// Prime element above p for p == 1 (mod 5), as cyc_gcd(p, zeta - r) for a
/// root r of X^4+X^3+X^2+X+1 mod p. |norm| of the result is p.
CycInt split_prime(const Int& p);

}  // namespace lehmer5
