#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lehmer5/errors.hpp"
#include "lehmer5/integral_basis.hpp"

using namespace lehmer5;

TEST_CASE("compute_u") {
  CHECK(compute_u(Int(55451)) == 44361);
  CHECK(compute_u(Int(4204181)) == 3363345);
  CHECK(compute_u(Int(11)) == 9);
  CHECK_THROWS_AS(compute_u(Int(25)), WildRamification);
}

TEST_CASE("compute_t against printed values") {
  {
    Int n(14), D = compute_Delta(n), d = compute_delta(n);
    CHECK(compute_t(n, D, d, compute_u(D)) == Int("645583287961"));
  }
  {
    Int n(44), D = compute_Delta(n), d = compute_delta(n);
    CHECK(compute_t(n, D, d, compute_u(D)) == Int("30447786579308863"));
  }
  for (long nv : {-2L, -1L, 1L, 2L, 3L, 7L, 23L}) {
    Int n(nv), D = compute_Delta(n), d = compute_delta(n);
    Int t = compute_t(n, D, d, compute_u(D));
    CHECK(mod_nonneg(t + n * n + 3 * n + 4, d * d) == 0);
    CHECK(t >= 0);
    CHECK(t < D * d * d);
  }
}

TEST_CASE("T expansion") {
  FieldContext ctx{Int(14)};
  Int t("645583287961");
  FieldElement T = compute_T(ctx, t);
  CHECK(T.c[4] == Rat(1));
  CHECK(T.c[3] == Rat(Int("645583288157")));
  CHECK(T.c[2] == Rat(Int("416777781821069771971063")));
  CHECK(T.c[1] == Rat(Int("269064770737138517575467371288327050")));
  CHECK(T.c[0] == Rat(Int("173703719366954541829067611507591745478095648728")));
}

TEST_CASE("telescoping identity (rho - t) T = -f(t)") {
  for (long nv : {-2L, 1L, 2L, 14L}) {
    FieldContext ctx{Int(nv)};
    Int D = ctx.Delta(), d = ctx.delta();
    Int t = compute_t(ctx.n(), D, d, compute_u(D));
    FieldElement rt;
    rt.c[0] = Rat(-t);
    rt.c[1] = 1;
    Int ft = 0;
    for (int i = 5; i >= 0; --i) ft = ft * t + ctx.f_coeffs()[i];
    CHECK(ctx.mul(rt, compute_T(ctx, t)) == FieldElement(Rat(-ft)));
  }
}

TEST_CASE("basis for n = 14") {
  Int n(14);
  FieldContext ctx{n};
  auto inv = compute_invariants(n);
  IntegralBasis basis = build_integral_basis(ctx, inv);
  CHECK(basis.certified);
  CHECK(basis.u == 44361);
  CHECK(basis.denominators == std::array<Int, 4>{Int(1), Int(1), Int(71), Int(71) * 3871});
  CHECK(ctx.disc_of_tuple(basis_tuple(basis)) == Rat(pow_int(Int(11 * 71), 4)));
}

TEST_CASE("basis for n = 44") {
  Int n(44);
  FieldContext ctx{n};
  auto inv = compute_invariants(n);
  IntegralBasis basis = build_integral_basis(ctx, inv);
  CHECK(basis.certified);
  CHECK(basis.u == 3363345);
  CHECK(basis.denominators ==
        std::array<Int, 4>{Int(1), Int(41), Int(41), Int(41) * 41 * 95311});
  CHECK(ctx.disc_of_tuple(basis_tuple(basis)) == Rat(pow_int(Int(41) * 61, 4)));
}

TEST_CASE("basis for n = 1 specializes to unit denominators") {
  Int n(1);
  FieldContext ctx{n};
  auto inv = compute_invariants(n);
  IntegralBasis basis = build_integral_basis(ctx, inv);
  CHECK(basis.certified);
  CHECK(basis.denominators == std::array<Int, 4>{Int(1), Int(1), Int(1), Int(23)});
  // phi_1 = rho - t, phi_4 = T / delta
  FieldElement rt;
  rt.c[0] = Rat(-basis.t);
  rt.c[1] = 1;
  CHECK(basis.phi[0] == rt);
}

TEST_CASE("negative delta keeps its sign in the phi_4 denominator") {
  // delta(-2) = -1, delta(-7) = -161: the T/denominator quotient stays exact
  for (long nv : {-1L, -2L, -7L}) {
    Int n(nv);
    FieldContext ctx{n};
    auto inv = compute_invariants(n);
    IntegralBasis basis = build_integral_basis(ctx, inv);
    CHECK(basis.certified);
    CHECK(basis.denominators[3] ==
          inv.b * inv.c * inv.c * pow_int(inv.d, 3) * pow_int(inv.e, 4) * inv.delta);
    if (inv.delta < 0) CHECK(basis.denominators[3] < 0);
    CHECK(ctx.disc_of_tuple(basis_tuple(basis)) == Rat(inv.field_disc));
  }
}

TEST_CASE("derivative divisibilities behind the construction") {
  for (long nv : {-2L, 1L, 2L, 14L, 44L}) {
    Int n(nv), D = compute_Delta(n), d = compute_delta(n);
    Int u = compute_u(D), t = compute_t(n, D, d, u);
    std::array<Int, 6> f = {Int(1), ((n + 4) * n + 10) * n + 10,
                            (((n + 5) * n + 11) * n + 15) * n + 5,
                            -(((2 * n + 6) * n + 10) * n + 10), n * n, Int(1)};
    auto eval = [&](const std::array<Int, 6>& p, const Int& x, int deg) {
      Int v = 0;
      for (int i = deg; i >= 0; --i) v = v * x + p[i];
      return v;
    };
    // f(t) = 0 mod Delta delta^2 and f'(t) = 0 mod Delta delta
    Int ft = eval(f, t, 5);
    std::array<Int, 6> fp{};
    for (int i = 1; i <= 5; ++i) fp[i - 1] = i * f[i];
    Int fpt = eval(fp, t, 4);
    CHECK(mod_nonneg(ft, D * d * d) == 0);
    CHECK(mod_nonneg(fpt, D * d) == 0);

    // f^(k)(-u n^2)/k! = 0 mod Delta for k = 0..4
    Int v = -u * n * n;
    std::array<Int, 6> g = f;
    Int factorial = 1;
    for (int k = 0; k <= 4; ++k) {
      Int val = eval(g, v, 5 - k);
      CHECK(mod_nonneg(val / factorial, D) == 0);
      for (int i = 1; i <= 5 - k; ++i) g[i - 1] = i * g[i];
      factorial *= (k + 1);
    }
  }
}

TEST_CASE("wild ramification is refused") {
  Int n(5);
  FieldContext ctx{n};
  auto inv = compute_invariants(n);
  CHECK_THROWS_AS(build_integral_basis(ctx, inv), WildRamification);
}
