#pragma once

#include <array>
#include <string>

#include "lehmer5/integers.hpp"

namespace lehmer5 {

/// Element of K_n = Q[X]/(f_n) in canonical degree-reduced form:
/// exact rational coefficients on {1, rho, rho^2, rho^3, rho^4}.
struct FieldElement {
  std::array<Rat, 5> c{};

  FieldElement() = default;
  explicit FieldElement(Rat c0) { c[0] = std::move(c0); }
  explicit FieldElement(const Int& c0) { c[0] = Rat(c0); }

  static FieldElement rho() {
    FieldElement x;
    x.c[1] = 1;
    return x;
  }

  bool is_zero() const;
  std::string str() const;  // polynomial in rho
};

bool operator==(const FieldElement& a, const FieldElement& b);
inline bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);
FieldElement operator*(const Rat& s, const FieldElement& a);

using Mat5 = std::array<std::array<Rat, 5>, 5>;

/// The field K_n: caches f_n, the sigma images of rho and their matrices.
/// Immutable after construction; all operations are const and pure.
class FieldContext {
 public:
  /// Builds sigma(rho) = (n+2+n rho-rho^2)/(1+(n+2)rho) via extended Euclid
  /// mod f_n and verifies sigma^5 = id and f_n(sigma(rho)) = 0.
  explicit FieldContext(Int n);

  const Int& n() const { return n_; }
  const Int& delta() const { return delta_; }
  const Int& Delta() const { return Delta_; }
  /// Coefficients of f_n, constant term first; [5] = 1.
  const std::array<Int, 6>& f_coeffs() const { return f_; }
  /// sigma^i(rho)
  const FieldElement& rho_conjugate(int i) const { return sig_[norm5(i)]; }

  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement invert(const FieldElement& a) const;

  FieldElement apply_sigma(const FieldElement& x, int i) const;
  std::array<FieldElement, 5> conjugate_tuple(const FieldElement& x) const;

  /// Matrix of multiplication by x on the power basis.
  Mat5 mult_matrix(const FieldElement& x) const;
  Rat trace(const FieldElement& x) const;
  /// Monic degree-5 characteristic polynomial, constant term first.
  std::array<Rat, 6> char_poly(const FieldElement& x) const;
  bool is_integral(const FieldElement& x) const;

  /// d(x1,...,x5) = det(coordinate matrix)^2 * delta^2 Delta^4.
  Rat disc_of_tuple(const std::array<FieldElement, 5>& xs) const;

  /// sum_t w[t] * sigma^t(rho)
  FieldElement conjugate_combination(const std::array<Int, 5>& w) const;

 private:
  static int norm5(int i) { return ((i % 5) + 5) % 5; }
  FieldElement eval_poly_at(const std::array<Rat, 5>& coeffs, const FieldElement& x) const;

  Int n_, delta_, Delta_, disc_f_;
  std::array<Int, 6> f_;
  std::array<std::array<Int, 5>, 4> red_;  // rho^{5+k} on the power basis
  std::array<FieldElement, 5> sig_;
  std::array<Mat5, 5> sigmat_;
};

}  // namespace lehmer5
