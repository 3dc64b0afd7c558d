#include "lehmer5/quintic_field.hpp"

#include <vector>

#include "lehmer5/errors.hpp"
#include "lehmer5/invariants.hpp"

namespace lehmer5 {

bool FieldElement::is_zero() const {
  for (const Rat& v : c)
    if (v != 0) return false;
  return true;
}

std::string FieldElement::str() const {
  std::string s;
  static const char* base[] = {"1", "rho", "rho^2", "rho^3", "rho^4"};
  for (int i = 0; i < 5; ++i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += sgn(c[i]) < 0 ? " - " : " + ";
    else if (sgn(c[i]) < 0) s += "-";
    Rat a = abs(c[i]);
    if (a != 1 || i == 0) s += to_string(a);
    if (i > 0) {
      if (a != 1) s += "*";
      s += base[i];
    }
  }
  return s.empty() ? "0" : s;
}

bool operator==(const FieldElement& a, const FieldElement& b) { return a.c == b.c; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement r;
  for (int i = 0; i < 5; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  FieldElement r;
  for (int i = 0; i < 5; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

FieldElement operator-(const FieldElement& a) {
  FieldElement r;
  for (int i = 0; i < 5; ++i) r.c[i] = -a.c[i];
  return r;
}

FieldElement operator*(const Rat& s, const FieldElement& a) {
  FieldElement r;
  for (int i = 0; i < 5; ++i) r.c[i] = s * a.c[i];
  return r;
}

namespace {

// dense univariate polynomials over Q, constant term first, for the
// extended-Euclid inverse in the constructor
using Poly = std::vector<Rat>;

int degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  return r;
}

Poly poly_scale(const Rat& s, const Poly& a) {
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Poly poly_shift_mul(const Poly& a, const Rat& s, int k) {  // s * X^k * a
  Poly r(a.size() + k);
  for (size_t i = 0; i < a.size(); ++i) r[i + k] = s * a[i];
  return r;
}

// remainder and the cofactor update for the extended gcd
void poly_divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  int db = degree(b);
  rem = a;
  quo.assign(std::max<int>(degree(a) - db + 1, 1), Rat(0));
  for (int da = degree(rem); da >= db && da >= 0; da = degree(rem)) {
    Rat f = rem[da] / b[db];
    quo[da - db] += f;
    rem = poly_sub(rem, poly_shift_mul(b, f, da - db));
  }
}

}  // namespace

FieldContext::FieldContext(Int n) : n_(std::move(n)) {
  delta_ = compute_delta(n_);
  Delta_ = compute_Delta(n_);
  disc_f_ = delta_ * delta_ * pow_int(Delta_, 4);
  f_ = {Int(1),
        ((n_ + 4) * n_ + 10) * n_ + 10,
        (((n_ + 5) * n_ + 11) * n_ + 15) * n_ + 5,
        -(((2 * n_ + 6) * n_ + 10) * n_ + 10),
        n_ * n_,
        Int(1)};

  // reduction rows: rho^{5+k} on the power basis (integer since f_n is monic)
  for (int j = 0; j < 5; ++j) red_[0][j] = -f_[j];
  for (int k = 1; k < 4; ++k) {
    const auto& prev = red_[k - 1];
    for (int j = 0; j < 5; ++j)
      red_[k][j] = (j > 0 ? prev[j - 1] : Int(0)) + prev[4] * red_[0][j];
  }

  // sigma(rho) = (n+2 + n rho - rho^2) * (1 + (n+2) rho)^{-1}
  FieldElement num;
  num.c[0] = Rat(n_ + 2);
  num.c[1] = Rat(n_);
  num.c[2] = -1;
  FieldElement den;
  den.c[0] = 1;
  den.c[1] = Rat(n_ + 2);
  FieldElement s1 = mul(num, invert(den));

  sig_[0] = FieldElement::rho();
  for (int i = 1; i < 5; ++i) sig_[i] = eval_poly_at(sig_[i - 1].c, s1);
  if (eval_poly_at(sig_[4].c, s1) != sig_[0])
    throw InternalError("FieldContext: sigma^5 != id");
  FieldElement fval =
      eval_poly_at({Rat(f_[0]), Rat(f_[1]), Rat(f_[2]), Rat(f_[3]), Rat(f_[4])}, s1);
  FieldElement s2 = mul(s1, s1);
  fval = fval + mul(s1, mul(s2, s2));  // + s1^5, f_n being monic
  if (!fval.is_zero()) throw InternalError("FieldContext: f_n(sigma(rho)) != 0");

  for (int i = 0; i < 5; ++i) {
    FieldElement pw(Rat(1));
    for (int j = 0; j < 5; ++j) {
      for (int r = 0; r < 5; ++r) sigmat_[i][r][j] = pw.c[r];
      if (j < 4) pw = mul(pw, sig_[i]);
    }
  }
}

FieldElement FieldContext::eval_poly_at(const std::array<Rat, 5>& coeffs,
                                        const FieldElement& x) const {
  FieldElement acc;
  for (int i = 4; i >= 0; --i) {
    acc = mul(acc, x);
    acc.c[0] += coeffs[i];
  }
  return acc;
}

FieldElement FieldContext::mul(const FieldElement& a, const FieldElement& b) const {
  std::array<Rat, 9> conv{};
  for (int i = 0; i < 5; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < 5; ++j) {
      if (b.c[j] == 0) continue;
      conv[i + j] += a.c[i] * b.c[j];
    }
  }
  FieldElement r;
  for (int j = 0; j < 5; ++j) {
    r.c[j] = conv[j];
    for (int k = 0; k < 4; ++k)
      if (conv[5 + k] != 0) r.c[j] += conv[5 + k] * Rat(red_[k][j]);
  }
  return r;
}

FieldElement FieldContext::invert(const FieldElement& a) const {
  if (a.is_zero()) throw std::invalid_argument("invert: zero element");
  // extended Euclid on (f, a): r0 = f, r1 = a, track s with s*a = r (mod f)
  Poly r0(f_.size());
  for (size_t i = 0; i < f_.size(); ++i) r0[i] = Rat(f_[i]);
  Poly r1(a.c.begin(), a.c.end());
  Poly s0 = {Rat(0)}, s1 = {Rat(1)};
  while (degree(r1) > 0) {
    Poly q, rem;
    poly_divmod(r0, r1, q, rem);
    Poly s2 = s0;
    for (int i = 0; i <= degree(q); ++i)
      if (q[i] != 0) s2 = poly_sub(s2, poly_shift_mul(s1, q[i], i));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degree(r1) != 0) throw InternalError("invert: f_n not coprime to element");
  Poly inv = poly_scale(Rat(1) / r1[0], s1);
  // inv has degree < 5 since deg(a) < 5 and f is irreducible
  FieldElement out;
  for (size_t i = 0; i < inv.size() && i < 5; ++i) out.c[i] = inv[i];
  if (inv.size() > 5)
    for (size_t i = 5; i < inv.size(); ++i)
      if (inv[i] != 0) throw InternalError("invert: degree overflow");
  return out;
}

FieldElement FieldContext::apply_sigma(const FieldElement& x, int i) const {
  const Mat5& M = sigmat_[norm5(i)];
  FieldElement y;
  for (int r = 0; r < 5; ++r) {
    Rat acc;
    for (int j = 0; j < 5; ++j)
      if (x.c[j] != 0 && M[r][j] != 0) acc += M[r][j] * x.c[j];
    y.c[r] = acc;
  }
  return y;
}

std::array<FieldElement, 5> FieldContext::conjugate_tuple(const FieldElement& x) const {
  std::array<FieldElement, 5> t;
  for (int i = 0; i < 5; ++i) t[i] = apply_sigma(x, i);
  return t;
}

Mat5 FieldContext::mult_matrix(const FieldElement& x) const {
  Mat5 M;
  FieldElement col = x;
  for (int j = 0; j < 5; ++j) {
    for (int r = 0; r < 5; ++r) M[r][j] = col.c[r];
    if (j < 4) {
      // multiply by rho: shift up and reduce the spilled rho^5 term
      FieldElement nxt;
      for (int r = 4; r >= 1; --r) nxt.c[r] = col.c[r - 1];
      if (col.c[4] != 0)
        for (int r = 0; r < 5; ++r) nxt.c[r] += col.c[4] * Rat(red_[0][r]);
      col = nxt;
    }
  }
  return M;
}

Rat FieldContext::trace(const FieldElement& x) const {
  Mat5 M = mult_matrix(x);
  Rat t;
  for (int i = 0; i < 5; ++i) t += M[i][i];
  return t;
}

std::array<Rat, 6> FieldContext::char_poly(const FieldElement& x) const {
  // Faddeev-LeVerrier
  Mat5 A = mult_matrix(x);
  auto mat_mul = [](const Mat5& P, const Mat5& Q) {
    Mat5 R;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        Rat acc;
        for (int k = 0; k < 5; ++k)
          if (P[i][k] != 0 && Q[k][j] != 0) acc += P[i][k] * Q[k][j];
        R[i][j] = acc;
      }
    return R;
  };
  auto tr = [](const Mat5& P) {
    Rat t;
    for (int i = 0; i < 5; ++i) t += P[i][i];
    return t;
  };
  std::array<Rat, 6> cp;
  cp[5] = 1;
  Mat5 Mk = A;
  Rat ck = -tr(Mk);
  cp[4] = ck;
  for (int k = 2; k <= 5; ++k) {
    for (int i = 0; i < 5; ++i) Mk[i][i] += ck;
    Mk = mat_mul(A, Mk);
    ck = -tr(Mk) / k;
    cp[5 - k] = ck;
  }
  return cp;
}

bool FieldContext::is_integral(const FieldElement& x) const {
  for (const Rat& co : char_poly(x))
    if (co.get_den() != 1) return false;
  return true;
}

Rat FieldContext::disc_of_tuple(const std::array<FieldElement, 5>& xs) const {
  Mat5 M;
  for (int j = 0; j < 5; ++j)
    for (int r = 0; r < 5; ++r) M[r][j] = xs[j].c[r];
  // determinant by exact Gaussian elimination
  Rat det = 1;
  for (int col = 0; col < 5; ++col) {
    int piv = -1;
    for (int r = col; r < 5; ++r)
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      std::swap(M[piv], M[col]);
      det = -det;
    }
    det *= M[col][col];
    Rat inv = Rat(1) / M[col][col];
    for (int r = col + 1; r < 5; ++r) {
      if (M[r][col] == 0) continue;
      Rat f = M[r][col] * inv;
      for (int j = col; j < 5; ++j) M[r][j] -= f * M[col][j];
    }
  }
  return det * det * Rat(disc_f_);
}

FieldElement FieldContext::conjugate_combination(const std::array<Int, 5>& w) const {
  FieldElement acc;
  for (int t = 0; t < 5; ++t)
    if (w[t] != 0) acc = acc + Rat(w[t]) * sig_[t];
  return acc;
}

}  // namespace lehmer5
