#include "lehmer5/factor.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace lehmer5 {

namespace {

const std::vector<unsigned long>& sieve_primes() {
  static const std::vector<unsigned long> primes = [] {
    const unsigned long limit = 1000000;
    std::vector<bool> comp(limit + 1, false);
    std::vector<unsigned long> ps;
    for (unsigned long i = 2; i <= limit; ++i) {
      if (comp[i]) continue;
      ps.push_back(i);
      for (unsigned long j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return ps;
  }();
  return primes;
}

bool miller_rabin(const Int& n, const Int& base) {
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Int x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's cycle-finding variant; returns a nontrivial factor or 0 when the
// shared budget is exhausted. n must be odd composite.
Int brent_rho(const Int& n, unsigned long c0, unsigned long long& budget) {
  for (unsigned long c = c0; c < c0 + 32; ++c) {
    Int y = 2, g = 1, q = 1, x, ys;
    unsigned long r = 1;
    const unsigned long mbatch = 128;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        unsigned long lim = std::min(mbatch, r - k);
        if (budget < lim) return 0;
        budget -= lim;
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += mbatch;
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      do {
        if (budget == 0) return 0;
        --budget;
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
    // cycle degenerated; retry with the next polynomial
  }
  return 0;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static const unsigned long small[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                        23, 29, 31, 37, 41, 43, 47};
  for (unsigned long p : small) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  static const Int det_limit("3317044064679887385961981");
  if (n < det_limit) {
    static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long b : bases)
      if (!miller_rabin(n, Int(b))) return false;
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Factorization factor_integer(const Int& N, const std::vector<Int>& hints,
                             const FactorOptions& opt) {
  if (N < 1) throw std::invalid_argument("factor_integer: N must be >= 1");
  std::map<Int, unsigned> acc;
  Int n = N;

  for (const Int& h : hints) {
    if (h < 2 || !is_prime(h))
      throw std::invalid_argument("factor hint " + h.get_str() + " is not prime");
    while (mpz_divisible_p(n.get_mpz_t(), h.get_mpz_t())) {
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), h.get_mpz_t());
      ++acc[h];
    }
  }

  for (unsigned long p : sieve_primes()) {
    if (p > opt.trial_bound) break;
    if (n == 1) break;
    if (Int(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++acc[Int(p)];
    }
  }

  unsigned long long budget = opt.rho_budget;
  std::vector<Int> pending;
  if (n != 1) pending.push_back(n);
  while (!pending.empty()) {
    Int m = pending.back();
    pending.pop_back();
    if (m == 1) continue;
    if (is_prime(m)) {
      ++acc[m];
      continue;
    }
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      Int r;
      mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
      pending.push_back(r);
      pending.push_back(r);
      continue;
    }
    Int g = brent_rho(m, 1, budget);
    if (g == 0) {
      Int cof = m;
      for (const Int& rest : pending) cof *= rest;
      throw FactorizationIncomplete(cof);
    }
    pending.push_back(g);
    pending.push_back(m / g);
  }

  Factorization out(acc.begin(), acc.end());
  return out;
}

Int factorization_product(const Factorization& f) {
  Int p = 1;
  for (const auto& [q, m] : f) p *= pow_int(q, m);
  return p;
}

}  // namespace lehmer5
