#pragma once

#include <array>

#include "lehmer5/invariants.hpp"
#include "lehmer5/quintic_field.hpp"

namespace lehmer5 {

/// The explicit integral basis {1, phi_1, phi_2, phi_3, phi_4} of O_{K_n}
/// together with its provenance values u, t, T.
struct IntegralBasis {
  Int u;             // 5u = 1 (mod Delta)
  Int t;             // least non-negative solution of the t-congruence
  FieldElement T;    // (f_n(rho) - f_n(t)) / (rho - t)
  std::array<FieldElement, 4> phi;
  std::array<Int, 4> denominators;  // e, cde^2, bcd^2e^3, bc^2d^3e^4*delta
  bool certified = false;
};

/// Least non-negative u with 5u = 1 (mod Delta); requires gcd(5, Delta) = 1.
Int compute_u(const Int& Delta);

/// Least non-negative residue mod Delta*delta^2 of the explicit congruence;
/// postconditions t = -u n^2 (mod Delta) and t = -(n^2+3n+4) (mod delta^2).
Int compute_t(const Int& n, const Int& Delta, const Int& delta, const Int& u);

/// Degree-4 expansion of the difference quotient; integral by construction.
FieldElement compute_T(const FieldContext& ctx, const Int& t);

/// Certifies with is_integral on each phi_i and disc = conductor^4.
/// Throws WildRamification when 5 | n and CertificationFailed on a failed
/// certification (the construction guarantees success).
IntegralBasis build_integral_basis(const FieldContext& ctx, const FieldInvariants& inv);

/// {1, phi_1, ..., phi_4} as a tuple for disc_of_tuple.
std::array<FieldElement, 5> basis_tuple(const IntegralBasis& basis);

}  // namespace lehmer5
