#include "lehmer5/nib_enum.hpp"

#include "lehmer5/errors.hpp"

namespace lehmer5 {

GroupRingUnit compose(const GroupRingUnit& a, const GroupRingUnit& b) {
  return {a.sign * b.sign, (a.ell + b.ell) % 5, a.k + b.k};
}

GroupRingUnit inverse(const GroupRingUnit& u) { return {u.sign, (5 - u.ell) % 5, -u.k}; }

Int lucas(long k) {
  if (k < 0) return parity_sign(k) * lucas(-k);
  if (k == 0) return 2;
  Int a = 2, b = 1;
  for (long i = 1; i < k; ++i) {
    Int next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return b;
}

namespace {

Int exact_fifth(Int v, const char* what) {
  if (!mpz_divisible_ui_p(v.get_mpz_t(), 5))
    throw InternalError(std::string("abc: ") + what + " is not divisible by 5");
  return v / 5;
}

}  // namespace

AbcTriple abc(long k) {
  return {exact_fifth(parity_sign(k) + 2 * lucas(2 * k), "a_k"),
          exact_fifth(parity_sign(k) + lucas(2 * k - 1), "b_k"),
          exact_fifth(parity_sign(k + 1) + lucas(2 * k + 1), "c_k")};
}

FieldElement act_unit(const FieldContext& ctx, const GroupRingUnit& u, const FieldElement& x) {
  AbcTriple t = abc(u.k);
  FieldElement y = Rat(t.a) * x +
                   Rat(t.b) * (ctx.apply_sigma(x, 1) + ctx.apply_sigma(x, 4)) -
                   Rat(t.c) * (ctx.apply_sigma(x, 2) + ctx.apply_sigma(x, 3));
  y = ctx.apply_sigma(y, u.ell);
  return u.sign < 0 ? -y : y;
}

std::array<Int, 5> theta(long k, const std::array<Int, 4>& beta) {
  AbcTriple t = abc(k);
  const Int &b0 = beta[0], &b1 = beta[1], &b2 = beta[2], &b3 = beta[3];
  return {t.a * b0 + t.b * b1 - t.c * b2 - t.c * b3,
          t.b * b0 + t.a * b1 + t.b * b2 - t.c * b3,
          -t.c * b0 + t.b * b1 + t.a * b2 + t.b * b3,
          -t.c * b0 - t.c * b1 + t.b * b2 + t.a * b3,
          t.b * b0 - t.c * b1 - t.c * b2 + t.b * b3};
}

FieldElement xi(const FieldContext& ctx, const NibGenerator& gen, long k) {
  FieldElement combo = ctx.conjugate_combination(theta(k, gen.beta));
  combo.c[0] -= Rat(parity_sign(k) * gen.m);
  return Rat(1, gen.denom) * combo;
}

void enumerate(const FieldContext& ctx, const FieldInvariants& inv, const NibGenerator& gen,
               long k_min, long k_max,
               const std::function<void(const GroupRingUnit&, const FieldElement&, bool)>& sink) {
  for (long k = k_min; k <= k_max; ++k) {
    FieldElement xik = xi(ctx, gen, k);
    for (int ell = 0; ell < 5; ++ell) {
      FieldElement shifted = ctx.apply_sigma(xik, ell);
      for (int sign : {1, -1}) {
        FieldElement out = sign < 0 ? -shifted : shifted;
        sink({sign, ell, k}, out, certify_nib(ctx, out, inv.conductor));
      }
    }
  }
}

std::vector<std::pair<GroupRingUnit, FieldElement>> enumerate(const FieldContext& ctx,
                                                              const FieldInvariants& inv,
                                                              const NibGenerator& gen,
                                                              long k_min, long k_max) {
  std::vector<std::pair<GroupRingUnit, FieldElement>> out;
  enumerate(ctx, inv, gen, k_min, k_max,
            [&](const GroupRingUnit& u, const FieldElement& x, bool) { out.emplace_back(u, x); });
  return out;
}

std::optional<GroupRingUnit> orbit_match(const FieldContext& ctx, const FieldElement& x,
                                         const FieldElement& y, long bound) {
  for (long k = -bound; k <= bound; ++k) {
    GroupRingUnit u{1, 0, k};
    FieldElement base = act_unit(ctx, u, x);
    for (int ell = 0; ell < 5; ++ell) {
      FieldElement shifted = ctx.apply_sigma(base, ell);
      if (shifted == y) return GroupRingUnit{1, ell, k};
      if (-shifted == y) return GroupRingUnit{-1, ell, k};
    }
  }
  return std::nullopt;
}

}  // namespace lehmer5
