#pragma once

#include <array>

#include "lehmer5/factor.hpp"
#include "lehmer5/integers.hpp"

namespace lehmer5 {

/// All rational invariants of K_n. Immutable after construction.
struct FieldInvariants {
  Int n;
  Int delta;  // n^3+5n^2+10n+7, sign kept
  Int Delta;  // n^4+5n^3+15n^2+25n+25, always > 0
  Factorization factorization;  // of Delta
  Int a, b, c, d, e;            // Delta = a b^2 c^3 d^4 e^5
  Int conductor;
  Int field_disc;               // conductor^4
  int legendre_n5;              // (n/5); 0 in the wild case 5 | n
  bool tame;                    // 5 does not divide n
};

Int compute_delta(const Int& n);
Int compute_Delta(const Int& n);

/// Per prime p^m in the factorization: m = 5q + r puts p^q into e and p into
/// a, b, c or d for r = 1, 2, 3, 4. Returns (a, b, c, d, e).
std::array<Int, 5> abcde_decompose(const Factorization& f);

/// 5^c * prod of p != 5 with v_p(Delta) != 0 mod 5; c = 2 iff 5 | n.
Int conductor_from(const Int& n, const Factorization& delta_factors);

/// +1 for n = +-1 mod 5, -1 for n = +-2; throws on 5 | n.
int legendre_n5(const Int& n);

FieldInvariants compute_invariants(const Int& n, const std::vector<Int>& hints = {},
                                   const FactorOptions& opt = {});

}  // namespace lehmer5
