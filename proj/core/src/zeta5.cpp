#include "lehmer5/zeta5.hpp"

#include <random>

#include "lehmer5/errors.hpp"
#include "lehmer5/factor.hpp"

namespace lehmer5 {

namespace {

// reduce coordinates on {1, z, z^2, z^3, z^4} to the canonical basis
CycInt reduce5(const std::array<Int, 5>& e) {
  return CycInt(e[0] - e[4], e[1] - e[4], e[2] - e[4], e[3] - e[4]);
}

}  // namespace

CycInt CycInt::zeta() { return CycInt(0, 1, 0, 0); }

CycInt CycInt::zeta_pow(int k) {
  int r = ((k % 5) + 5) % 5;
  std::array<Int, 5> e{};
  e[r] = 1;
  return reduce5(e);
}

CycInt CycInt::golden_ratio() { return CycInt(0, 0, -1, -1); }

std::string CycInt::str() const {
  std::string s = c[0].get_str();
  static const char* base[] = {"", " z", " z^2", " z^3"};
  for (int i = 1; i < 4; ++i) {
    if (c[i] == 0) continue;
    s += (c[i] > 0 ? " + " : " - ");
    Int a = abs(c[i]);
    if (a != 1) s += a.get_str();
    s += base[i] + 1;  // skip leading space
  }
  return s;
}

bool operator==(const CycInt& a, const CycInt& b) { return a.c == b.c; }

CycInt operator+(const CycInt& a, const CycInt& b) {
  return CycInt(a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]);
}

CycInt operator-(const CycInt& a, const CycInt& b) {
  return CycInt(a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]);
}

CycInt operator-(const CycInt& a) { return CycInt(-a.c[0], -a.c[1], -a.c[2], -a.c[3]); }

CycInt operator*(const CycInt& a, const CycInt& b) { return cyc_mul(a, b); }

CycInt cyc_mul(const CycInt& x, const CycInt& y) {
  std::array<Int, 7> e{};
  for (int i = 0; i < 4; ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < 4; ++j) e[i + j] += x.c[i] * y.c[j];
  }
  e[0] += e[5];  // z^5 = 1
  e[1] += e[6];  // z^6 = z
  return reduce5({e[0], e[1], e[2], e[3], e[4]});
}

CycInt galois_apply(const CycInt& x, int j) {
  if (j < 1 || j > 4) throw std::invalid_argument("galois_apply: j must be in {1,2,3,4}");
  std::array<Int, 5> e{};
  for (int i = 0; i < 4; ++i) e[(i * j) % 5] += x.c[i];
  return reduce5(e);
}

Int cyc_norm(const CycInt& x) {
  CycInt p = x * galois_apply(x, 2) * galois_apply(x, 3) * galois_apply(x, 4);
  if (p.c[1] != 0 || p.c[2] != 0 || p.c[3] != 0)
    throw InternalError("cyc_norm: product of conjugates is not rational");
  return p.c[0];
}

bool divides(const CycInt& d, const CycInt& x) {
  if (d.is_zero()) throw std::invalid_argument("divides: zero divisor");
  Int nd = cyc_norm(d);
  CycInt co = x * galois_apply(d, 2) * galois_apply(d, 3) * galois_apply(d, 4);
  for (const Int& v : co.c)
    if (!mpz_divisible_p(v.get_mpz_t(), nd.get_mpz_t())) return false;
  return true;
}

CycInt div_exact(const CycInt& d, const CycInt& x) {
  if (d.is_zero()) throw std::invalid_argument("div_exact: zero divisor");
  Int nd = cyc_norm(d);
  CycInt co = x * galois_apply(d, 2) * galois_apply(d, 3) * galois_apply(d, 4);
  CycInt q;
  for (int i = 0; i < 4; ++i) {
    if (!mpz_divisible_p(co.c[i].get_mpz_t(), nd.get_mpz_t()))
      throw Error("div_exact: not a divisor");
    mpz_divexact(q.c[i].get_mpz_t(), co.c[i].get_mpz_t(), nd.get_mpz_t());
  }
  return q;
}

QuinticResidue residue_mod_one_minus_zeta(const CycInt& x) {
  Int s = x.c[0] + x.c[1] + x.c[2] + x.c[3];
  int r = static_cast<int>(mpz_fdiv_ui(s.get_mpz_t(), 5));
  if (r > 2) r -= 5;
  return {r};
}

CycInt unit_normalize(const CycInt& lambda) {
  switch (residue_mod_one_minus_zeta(lambda).value) {
    case 1:
      return lambda;
    case -1:
      return -lambda;
    case 2:
      return CycInt::golden_ratio() * lambda;
    case -2:
      return -(CycInt::golden_ratio() * lambda);
    default:
      throw Error("unit_normalize: lambda lies in (1-zeta)");
  }
}

namespace {

// exact coordinates of x/y in Q(zeta)
std::array<Rat, 4> rational_quotient(const CycInt& x, const CycInt& y) {
  Int nd = cyc_norm(y);
  CycInt co = x * galois_apply(y, 2) * galois_apply(y, 3) * galois_apply(y, 4);
  std::array<Rat, 4> q;
  for (int i = 0; i < 4; ++i) {
    q[i] = Rat(co.c[i], nd);
    q[i].canonicalize();
  }
  return q;
}

}  // namespace

CycInt cyc_gcd(CycInt x, CycInt y) {
  if (x.is_zero() && y.is_zero()) throw std::invalid_argument("cyc_gcd(0, 0)");
  int iterations = 0;
  while (!y.is_zero()) {
    if (++iterations > 10000) throw InternalError("cyc_gcd: descent did not terminate");
    auto qr = rational_quotient(x, y);
    CycInt q(round_nearest(qr[0]), round_nearest(qr[1]), round_nearest(qr[2]),
             round_nearest(qr[3]));
    CycInt r = x - q * y;
    Int ny = abs(cyc_norm(y));
    if (!r.is_zero() && abs(cyc_norm(r)) >= ny) {
      // nearest rounding missed; search quotient offsets in {-1,0,1}^4
      bool found = false;
      Int best_norm;
      CycInt best_r;
      for (int d0 = -1; d0 <= 1; ++d0)
        for (int d1 = -1; d1 <= 1; ++d1)
          for (int d2 = -1; d2 <= 1; ++d2)
            for (int d3 = -1; d3 <= 1; ++d3) {
              CycInt r2 = x - (q + CycInt(d0, d1, d2, d3)) * y;
              Int nr = abs(cyc_norm(r2));
              if (r2.is_zero() || nr < ny) {
                if (!found || nr < best_norm) {
                  found = true;
                  best_norm = nr;
                  best_r = r2;
                }
              }
            }
      if (!found) throw InternalError("cyc_gcd: no norm-reducing remainder");
      r = best_r;
    }
    x = y;
    y = r;
  }
  if (residue_mod_one_minus_zeta(x).value != 0) return unit_normalize(x);
  return x;
}

CycInt split_prime(const Int& p) {
  if (mod_nonneg(p, 5) != 1)
    throw UnsplittablePrime("split_prime: " + p.get_str() + " is not 1 mod 5");
  if (!is_prime(p)) throw std::invalid_argument("split_prime: p must be prime");
  Int exp = (p - 1) / 5;
  auto fifth_root = [&](const Int& g) {
    Int r;
    mpz_powm(r.get_mpz_t(), g.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    return r;
  };
  auto try_root = [&](const Int& r) -> CycInt {
    CycInt pi = cyc_gcd(CycInt(p), CycInt(-r, 1, 0, 0));
    if (abs(cyc_norm(pi)) == p) return pi;
    return CycInt();  // zero = failure
  };
  if (p < 1000000) {
    for (Int g = 2; g < p; ++g) {
      Int r = fifth_root(g);
      if (r == 1) continue;
      CycInt pi = try_root(r);
      if (!pi.is_zero()) return pi;
    }
  } else {
    std::mt19937_64 rng(static_cast<unsigned long>(mpz_fdiv_ui(p.get_mpz_t(), 0xffffffffUL)));
    for (int attempt = 0; attempt < 64; ++attempt) {
      Int g = Int(static_cast<unsigned long>(rng())) % (p - 2) + 2;
      Int r = fifth_root(g);
      if (r == 1) continue;
      CycInt pi = try_root(r);
      if (!pi.is_zero()) return pi;
    }
    for (Int g = 2; g < 10000; ++g) {
      Int r = fifth_root(g);
      if (r == 1) continue;
      CycInt pi = try_root(r);
      if (!pi.is_zero()) return pi;
    }
  }
  throw InternalError("split_prime: no prime element found for " + p.get_str());
}

}  // namespace lehmer5
