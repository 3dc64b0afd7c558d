#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lehmer5/nib.hpp"

namespace lehmer5 {

/// +-sigma^ell (1-sigma^2-sigma^3)^k in Z[G]^x.
struct GroupRingUnit {
  int sign = 1;
  int ell = 0;  // mod 5
  long k = 0;

  friend bool operator==(const GroupRingUnit& a, const GroupRingUnit& b) {
    return a.sign == b.sign && a.ell == b.ell && a.k == b.k;
  }
};

GroupRingUnit compose(const GroupRingUnit& a, const GroupRingUnit& b);
GroupRingUnit inverse(const GroupRingUnit& u);

/// L_0 = 2, L_1 = 1, L_k = L_{k-1} + L_{k-2}; L_{-k} = (-1)^k L_k.
Int lucas(long k);

/// a_k, b_k, c_k with the Lucas closed forms; exact division by 5 asserted.
struct AbcTriple {
  Int a, b, c;
};
AbcTriple abc(long k);

/// sign * sigma^ell ((a_k + b_k(sigma+sigma^4) - c_k(sigma^2+sigma^3)).x)
FieldElement act_unit(const FieldContext& ctx, const GroupRingUnit& u, const FieldElement& x);

/// The five linear combinations theta_t(k) of beta under (1-sigma^2-sigma^3)^k.
std::array<Int, 5> theta(long k, const std::array<Int, 4>& beta);

/// xi_k = (sum_t theta_t(k) rho^(t) - (-1)^k m) / denom.
FieldElement xi(const FieldContext& ctx, const NibGenerator& gen, long k);

/// Streams all 10 generators per k over [k_min, k_max], each certified.
void enumerate(const FieldContext& ctx, const FieldInvariants& inv, const NibGenerator& gen,
               long k_min, long k_max,
               const std::function<void(const GroupRingUnit&, const FieldElement&, bool)>& sink);

std::vector<std::pair<GroupRingUnit, FieldElement>> enumerate(const FieldContext& ctx,
                                                              const FieldInvariants& inv,
                                                              const NibGenerator& gen,
                                                              long k_min, long k_max);

/// The unit with |k| <= bound mapping x to y, if any.
std::optional<GroupRingUnit> orbit_match(const FieldContext& ctx, const FieldElement& x,
                                         const FieldElement& y, long bound = 10);

}  // namespace lehmer5
