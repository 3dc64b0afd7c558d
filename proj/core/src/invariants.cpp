#include "lehmer5/invariants.hpp"

#include "lehmer5/errors.hpp"

namespace lehmer5 {

Int compute_delta(const Int& n) { return ((n + 5) * n + 10) * n + 7; }

Int compute_Delta(const Int& n) { return (((n + 5) * n + 15) * n + 25) * n + 25; }

std::array<Int, 5> abcde_decompose(const Factorization& f) {
  Int a = 1, b = 1, c = 1, d = 1, e = 1;
  for (const auto& [p, m] : f) {
    unsigned q = m / 5, r = m % 5;
    if (q) e *= pow_int(p, q);
    switch (r) {
      case 1: a *= p; break;
      case 2: b *= p; break;
      case 3: c *= p; break;
      case 4: d *= p; break;
      default: break;
    }
  }
  return {a, b, c, d, e};
}

Int conductor_from(const Int& n, const Factorization& delta_factors) {
  Int f = mpz_divisible_ui_p(n.get_mpz_t(), 5) ? Int(25) : Int(1);
  for (const auto& [p, m] : delta_factors) {
    if (p == 5) continue;
    if (m % 5 != 0) f *= p;
  }
  return f;
}

int legendre_n5(const Int& n) {
  switch (mpz_fdiv_ui(n.get_mpz_t(), 5)) {
    case 1:
    case 4:
      return 1;
    case 2:
    case 3:
      return -1;
    default:
      throw WildRamification("legendre_n5: 5 divides n");
  }
}

FieldInvariants compute_invariants(const Int& n, const std::vector<Int>& hints,
                                   const FactorOptions& opt) {
  FieldInvariants inv;
  inv.n = n;
  inv.delta = compute_delta(n);
  inv.Delta = compute_Delta(n);
  if (inv.Delta <= 0) throw InternalError("Delta_n must be positive");
  inv.factorization = factor_integer(inv.Delta, hints, opt);
  auto [a, b, c, d, e] = abcde_decompose(inv.factorization);
  inv.a = a; inv.b = b; inv.c = c; inv.d = d; inv.e = e;
  inv.conductor = conductor_from(n, inv.factorization);
  inv.field_disc = pow_int(inv.conductor, 4);
  inv.tame = !mpz_divisible_ui_p(n.get_mpz_t(), 5);
  inv.legendre_n5 = inv.tame ? legendre_n5(n) : 0;
  return inv;
}

}  // namespace lehmer5
