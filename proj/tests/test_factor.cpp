#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lehmer5/factor.hpp"
#include "lehmer5/invariants.hpp"

using namespace lehmer5;

TEST_CASE("is_prime") {
  CHECK(is_prime(Int(2)));
  CHECK(is_prime(Int(3)));
  CHECK(is_prime(Int(97)));
  CHECK(is_prime(Int(1000000007)));
  CHECK(is_prime(Int("197859618251")));
  CHECK(is_prime(Int("833201")));
  CHECK_FALSE(is_prime(Int(0)));
  CHECK_FALSE(is_prime(Int(1)));
  CHECK_FALSE(is_prime(Int(-7)));
  CHECK_FALSE(is_prime(Int(561)));    // Carmichael
  CHECK_FALSE(is_prime(Int("3215031751")));  // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("factor examples") {
  CHECK(factor_integer(Int(55451)) == Factorization{{Int(11), 1}, {Int(71), 2}});
  CHECK(factor_integer(Int(1)) == Factorization{});

  Int D7721 = compute_Delta(Int(7721));
  Factorization want{{Int(11), 5}, {Int(26501), 1}, {Int(833201), 1}};
  CHECK(factor_integer(D7721) == want);
  CHECK(factor_integer(D7721, {Int(26501), Int(833201)}) == want);
}

TEST_CASE("bad hints") {
  CHECK_THROWS_AS(factor_integer(Int(100), {Int(4)}), std::invalid_argument);
  CHECK_THROWS_AS(factor_integer(Int(0)), std::invalid_argument);
}

TEST_CASE("budget exhaustion carries the cofactor") {
  Int n = Int(1000003) * Int(1000033);
  FactorOptions opt;
  opt.trial_bound = 100;
  opt.rho_budget = 0;
  try {
    factor_integer(n, {}, opt);
    FAIL("expected FactorizationIncomplete");
  } catch (const FactorizationIncomplete& e) {
    CHECK(e.cofactor == n);
  }
  // hints rescue the same call
  CHECK(factor_integer(n, {Int(1000003)}, opt) ==
        Factorization{{Int(1000003), 1}, {Int(1000033), 1}});
}

TEST_CASE("reassembly on random inputs") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 25; ++i) {
    Int n = Int(static_cast<unsigned long>(rng() % 1000000000ULL)) + 2;
    Factorization f = factor_integer(n);
    CHECK(factorization_product(f) == n);
    for (const auto& [p, m] : f) {
      CHECK(is_prime(p));
      CHECK(m >= 1);
    }
  }
}
