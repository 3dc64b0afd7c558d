#include "lehmer5/integral_basis.hpp"

#include "lehmer5/errors.hpp"

namespace lehmer5 {

Int compute_u(const Int& Delta) {
  if (mpz_divisible_ui_p(Delta.get_mpz_t(), 5))
    throw WildRamification("compute_u: 5 divides Delta_n");
  return mod_inverse(Int(5), Delta);
}

Int compute_t(const Int& n, const Int& Delta, const Int& delta, const Int& u) {
  Int rhs = (n * n + 3 * n + 4) *
                ((((((11 * n + 110) * n + 440) * n + 903) * n + 940) * n + 390)) * Delta -
            u * n * n * (((11 * n + 55) * n + 110) * n + 199) * delta * delta;
  Int t = mod_nonneg(rhs, Delta * delta * delta);
  if (mod_nonneg(t + u * n * n, Delta) != 0)
    throw InternalError("compute_t: t != -u n^2 (mod Delta)");
  if (mod_nonneg(t + n * n + 3 * n + 4, delta * delta) != 0)
    throw InternalError("compute_t: t != -(n^2+3n+4) (mod delta^2)");
  return t;
}

FieldElement compute_T(const FieldContext& ctx, const Int& t) {
  const Int& n = ctx.n();
  Int c3 = ((2 * n + 6) * n + 10) * n + 10;
  Int c2 = (((n + 5) * n + 11) * n + 15) * n + 5;
  Int c1 = ((n + 4) * n + 10) * n + 10;
  FieldElement T;
  T.c[4] = 1;
  T.c[3] = Rat(t + n * n);
  T.c[2] = Rat(t * t + n * n * t - c3);
  T.c[1] = Rat(t * t * t + n * n * t * t - c3 * t + c2);
  T.c[0] = Rat(t * t * t * t + n * n * t * t * t - c3 * t * t + c2 * t + c1);
  return T;
}

IntegralBasis build_integral_basis(const FieldContext& ctx, const FieldInvariants& inv) {
  if (!inv.tame)
    throw WildRamification("build_integral_basis: 5 | n, K_n is wildly ramified");

  IntegralBasis basis;
  basis.u = compute_u(inv.Delta);
  basis.t = compute_t(ctx.n(), inv.Delta, inv.delta, basis.u);
  basis.T = compute_T(ctx, basis.t);

  FieldElement rt;
  rt.c[0] = Rat(-basis.t);
  rt.c[1] = 1;
  FieldElement rt2 = ctx.mul(rt, rt);
  FieldElement rt3 = ctx.mul(rt2, rt);

  const Int &b = inv.b, &c = inv.c, &d = inv.d, &e = inv.e;
  basis.denominators = {e, c * d * e * e, b * c * d * d * e * e * e,
                        b * c * c * d * d * d * pow_int(e, 4) * inv.delta};
  basis.phi[0] = Rat(1, basis.denominators[0]) * rt;
  basis.phi[1] = Rat(1, basis.denominators[1]) * rt2;
  basis.phi[2] = Rat(1, basis.denominators[2]) * rt3;
  Rat inv_d4(1);
  inv_d4 /= Rat(basis.denominators[3]);
  basis.phi[3] = inv_d4 * basis.T;

  for (const FieldElement& phi : basis.phi)
    if (!ctx.is_integral(phi))
      throw CertificationFailed("integral basis: phi_i is not integral");
  if (ctx.disc_of_tuple(basis_tuple(basis)) != Rat(inv.field_disc))
    throw CertificationFailed("integral basis: disc != conductor^4");
  basis.certified = true;
  return basis;
}

std::array<FieldElement, 5> basis_tuple(const IntegralBasis& basis) {
  return {FieldElement(Rat(1)), basis.phi[0], basis.phi[1], basis.phi[2], basis.phi[3]};
}

}  // namespace lehmer5
