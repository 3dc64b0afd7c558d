#include "lehmer5/nib.hpp"

#include "lehmer5/errors.hpp"

namespace lehmer5 {

PeriodFactors period_factors(const Int& n) {
  PeriodFactors pf{CycInt(n, -2, -1, -2), CycInt(n + 2, 1, 2, 0), CycInt(n + 1, -1, -1, 1),
                   CycInt(n + 2, 2, 0, 1)};
  if (pf.A * pf.B * pf.C * pf.D != CycInt(compute_Delta(n)))
    throw InternalError("period_factors: A*B*C*D != Delta_n");
  return pf;
}

namespace {

// one of alpha_1, alpha_2, alpha_3: product over `primes` of a conjugate of
// split_prime(p) dividing the running cofactor of `target`
CycInt alpha_for_target(const std::vector<Int>& primes, const CycInt& target) {
  CycInt lambda(Int(1));
  CycInt cofactor = target;
  for (const Int& p : primes) {
    CycInt pi = split_prime(p);
    bool chosen = false;
    for (int j = 1; j <= 4 && !chosen; ++j) {
      CycInt cand = galois_apply(pi, j);
      if (divides(cand, cofactor)) {
        lambda = lambda * cand;
        cofactor = div_exact(cand, cofactor);
        chosen = true;
      }
    }
    if (!chosen)
      throw NoDividingConjugate("no conjugate of a prime above " + p.get_str() +
                                " divides the period factor");
  }
  return unit_normalize(lambda);
}

}  // namespace

std::array<CycInt, 3> compute_alphas(const FieldInvariants& inv, const PeriodFactors& pf) {
  if (!inv.tame) throw WildRamification("compute_alphas: 5 | n");
  // multiplicities in b c^2 d^3 e^3, b c d^2 e^2 and c d e per prime of Delta
  std::vector<Int> s1, s2, s3;
  for (const auto& [p, m] : inv.factorization) {
    unsigned q = m / 5, r = m % 5;
    unsigned m1 = (r == 2 ? 1 : r == 3 ? 2 : r == 4 ? 3 : 0) + 3 * q;
    unsigned m2 = (r == 2 ? 1 : r == 3 ? 1 : r == 4 ? 2 : 0) + 2 * q;
    unsigned m3 = (r == 3 || r == 4 ? 1 : 0) + q;
    for (unsigned i = 0; i < m1; ++i) s1.push_back(p);
    for (unsigned i = 0; i < m2; ++i) s2.push_back(p);
    for (unsigned i = 0; i < m3; ++i) s3.push_back(p);
  }
  std::array<CycInt, 3> alphas = {alpha_for_target(s1, pf.A), alpha_for_target(s2, pf.B),
                                  alpha_for_target(s3, pf.C)};
  const Int &b = inv.b, &c = inv.c, &d = inv.d, &e = inv.e;
  if (cyc_norm(alphas[0]) != b * pow_int(c, 2) * pow_int(d, 3) * pow_int(e, 3) ||
      cyc_norm(alphas[1]) != b * c * pow_int(d, 2) * pow_int(e, 2) ||
      cyc_norm(alphas[2]) != c * d * e)
    throw InternalError("compute_alphas: norm mismatch");
  return alphas;
}

std::pair<std::array<Int, 4>, Int> compute_beta_m(const CycInt& product,
                                                  const FieldInvariants& inv) {
  if (residue_mod_one_minus_zeta(product).value != 1)
    throw InternalError("compute_beta_m: product is not 1 mod (1-zeta)");
  std::array<Int, 4> beta = {product.c[0], product.c[1], product.c[2], product.c[3]};
  Int denom = inv.b * pow_int(inv.c, 2) * pow_int(inv.d, 3) * pow_int(inv.e, 4);
  Int num = inv.legendre_n5 * denom -
            inv.n * inv.n * (beta[0] + beta[1] + beta[2] + beta[3]);
  if (!mpz_divisible_ui_p(num.get_mpz_t(), 5))
    throw NonIntegralM("compute_beta_m: 5 does not divide the m numerator");
  return {beta, num / 5};
}

NibGenerator make_generator(const FieldContext& ctx, const FieldInvariants& inv,
                            std::array<Int, 4> beta, Int m, Int denom) {
  NibGenerator gen;
  gen.beta = std::move(beta);
  gen.m = std::move(m);
  gen.denom = std::move(denom);
  FieldElement combo =
      ctx.conjugate_combination({gen.beta[0], gen.beta[1], gen.beta[2], gen.beta[3], Int(0)});
  combo.c[0] -= Rat(gen.m);
  gen.alpha = Rat(1, gen.denom) * combo;
  gen.certified = certify_nib(ctx, gen.alpha, inv.conductor);
  return gen;
}

NibGenerator build_nib_generator(const FieldContext& ctx, const FieldInvariants& inv) {
  if (!inv.tame)
    throw WildRamification(
        "build_nib_generator: 5 | n, K_n is wildly ramified and has no NIB "
        "(Hilbert-Speiser)");
  PeriodFactors pf = period_factors(ctx.n());
  auto alphas = compute_alphas(inv, pf);
  CycInt product = alphas[0] * alphas[1] * alphas[2];
  auto [beta, m] = compute_beta_m(product, inv);
  Int denom = inv.b * pow_int(inv.c, 2) * pow_int(inv.d, 3) * pow_int(inv.e, 4);
  return make_generator(ctx, inv, beta, m, denom);
}

bool certify_nib(const FieldContext& ctx, const FieldElement& x, const Int& conductor) {
  auto conj = ctx.conjugate_tuple(x);
  for (const FieldElement& y : conj)
    if (!ctx.is_integral(y)) return false;
  return ctx.disc_of_tuple(conj) == Rat(pow_int(conductor, 4));
}

bool delta_is_squarefree(const FieldInvariants& inv) {
  return inv.b == 1 && inv.c == 1 && inv.d == 1 && inv.e == 1;
}

FieldElement squarefree_generator(const FieldContext& ctx, const FieldInvariants& inv) {
  if (!inv.tame) throw WildRamification("squarefree_generator: 5 | n");
  if (!delta_is_squarefree(inv))
    throw NotSquarefree("squarefree_generator: Delta_n is not square-free");
  Int v = (ctx.n() * ctx.n() - inv.legendre_n5) / 5;
  FieldElement g = FieldElement::rho();
  g.c[0] = Rat(v);
  return g;
}

}  // namespace lehmer5
