#pragma once

#include <array>

#include "lehmer5/invariants.hpp"
#include "lehmer5/quintic_field.hpp"
#include "lehmer5/zeta5.hpp"

namespace lehmer5 {

/// The four Galois-conjugate cyclotomic factors of Delta_n.
struct PeriodFactors {
  CycInt A;  // n+2+2z^4+z^2
  CycInt B;  // n+2+2z^2+z
  CycInt C;  // n+2+2z^3+z^4
  CycInt D;  // n+2+2z+z^3
};

/// Asserts A*B*C*D = Delta_n.
PeriodFactors period_factors(const Int& n);

/// alpha_1 | A with norm bc^2d^3e^3, alpha_2 | B with norm bcd^2e^2,
/// alpha_3 | C with norm cde; each == 1 mod (1-zeta). Prime elements are
/// chosen conjugate-by-conjugate against a running cofactor of the target.
std::array<CycInt, 3> compute_alphas(const FieldInvariants& inv, const PeriodFactors& pf);

/// beta coordinates of the product and m = ((n/5) bc^2d^3e^4 - n^2 sum beta)/5.
std::pair<std::array<Int, 4>, Int> compute_beta_m(const CycInt& product,
                                                  const FieldInvariants& inv);

struct NibGenerator {
  std::array<Int, 4> beta;
  Int m;
  Int denom;  // b c^2 d^3 e^4
  FieldElement alpha;
  bool certified = false;
};

/// alpha = (beta_0 rho + beta_1 rho^(1) + beta_2 rho^(2) + beta_3 rho^(3) - m)/denom.
/// Throws WildRamification when 5 | n (no NIB exists).
NibGenerator build_nib_generator(const FieldContext& ctx, const FieldInvariants& inv);

/// Assembles the generator element from given data and certifies it.
NibGenerator make_generator(const FieldContext& ctx, const FieldInvariants& inv,
                            std::array<Int, 4> beta, Int m, Int denom);

/// All five conjugates integral and disc of the conjugate tuple = conductor^4.
bool certify_nib(const FieldContext& ctx, const FieldElement& x, const Int& conductor);

/// (n^2 - (n/5))/5 + rho; requires Delta_n square-free and 5 not dividing n.
FieldElement squarefree_generator(const FieldContext& ctx, const FieldInvariants& inv);

bool delta_is_squarefree(const FieldInvariants& inv);

}  // namespace lehmer5
