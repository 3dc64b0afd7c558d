#pragma once

#include <utility>
#include <vector>

#include "lehmer5/errors.hpp"
#include "lehmer5/integers.hpp"

namespace lehmer5 {

/// (prime, multiplicity) pairs sorted by prime.
using Factorization = std::vector<std::pair<Int, unsigned>>;

struct FactorOptions {
  unsigned long trial_bound = 1000000;
  unsigned long long rho_budget = 100000000;
};

/// Deterministic Miller-Rabin (13-prime base set) below 3.317e24,
/// mpz_probab_prime_p beyond.
bool is_prime(const Int& n);

/// Hint primes are divided out first, then sieved trial division, then
/// Brent's rho under the iteration budget. Every reported prime is certified
/// by is_prime. Throws FactorizationIncomplete when the budget runs out.
Factorization factor_integer(const Int& N, const std::vector<Int>& hints = {},
                             const FactorOptions& opt = {});

Int factorization_product(const Factorization& f);

}  // namespace lehmer5
