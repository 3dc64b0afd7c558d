// Exact identity checkers shared by the unit tests and the acceptance suite.
#pragma once

#include "lehmer5/quintic_field.hpp"

namespace lehmer5::checks {

// prod(rho^(i) - rho^(i+1)) = delta*Delta and prod(rho^(i) - rho^(i+2)) = -Delta
inline bool half_d_products(const FieldContext& ctx) {
  FieldElement p1(Rat(1)), p2(Rat(1));
  for (int i = 0; i < 5; ++i) {
    p1 = ctx.mul(p1, ctx.rho_conjugate(i) - ctx.rho_conjugate((i + 1) % 5));
    p2 = ctx.mul(p2, ctx.rho_conjugate(i) - ctx.rho_conjugate((i + 2) % 5));
  }
  return p1 == FieldElement(Rat(ctx.delta() * ctx.Delta())) &&
         p2 == FieldElement(Rat(-ctx.Delta()));
}

// rho^2, rho^3, rho^4 as the -1/n^2 weighted conjugate combinations (n != 0)
inline bool power_identities(const FieldContext& ctx) {
  const Int& n = ctx.n();
  if (n == 0) return false;
  auto matches = [&](const std::array<Int, 5>& w, int power) {
    FieldElement want;
    want.c[power] = 1;
    return Rat(-1, n * n) * ctx.conjugate_combination(w) == want;
  };
  std::array<Int, 5> w2 = {(((n + 2) * n + 3) * n + 4) * n + 4,
                           2 * ((n + 2) * n + 2),
                           (2 + n) * ((n + 1) * n + 2),
                           (2 + n) * (2 + n),
                           (2 + n) * ((n + 1) * n + 2)};
  std::array<Int, 5> w3 = {
      -((n * n + 3 * n + 3) * ((((n + 1) * n + 4) * n + 2) * n + 1)),
      -((1 + n) * (((2 * n + 4) * n + 6) * n + 3)),
      -((1 + n) * (1 + n) * (((n + 2) * n + 3) * n + 3)),
      -((1 + n) * (1 + n) * ((n + 3) * n + 3)),
      -(((((n + 4) * n + 9) * n + 13) * n + 9) * n + 3)};
  std::array<Int, 5> w4 = {
      ((((((((n + 6) * n + 21) * n + 50) * n + 86) * n + 105) * n + 99) * n + 72) * n + 32),
      ((((((2 * n + 10) * n + 30) * n + 60) * n + 83) * n + 72) * n + 32),
      (((((((n + 6) * n + 20) * n + 47) * n + 80) * n + 94) * n + 72) * n + 32),
      ((((((n + 7) * n + 24) * n + 51) * n + 75) * n + 72) * n + 32),
      (((((((n + 6) * n + 21) * n + 49) * n + 80) * n + 93) * n + 72) * n + 32)};
  return matches(w2, 2) && matches(w3, 3) && matches(w4, 4);
}

}  // namespace lehmer5::checks
