#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tschirn/rat.hpp"

namespace tschirn {

// Dense univariate polynomial over Rat, coefficients ascending.
// No trailing zero coefficients are stored; the zero polynomial has an
// empty coefficient vector and no degree (degree() must not be called on it).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { prune(); }
  UniPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { prune(); }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Rat& r);
  static UniPoly monomial(const Rat& r, int k);
  static UniPoly var() { return monomial(Rat(1), 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  // Degree of a nonzero polynomial. The zero polynomial has none.
  int degree() const;
  const Rat& lc() const;
  Rat coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly scaled(const Rat& r) const;
  UniPoly shifted(int k) const;  // multiply by x^k, k >= 0
  UniPoly pow(int k) const;

  // Quotient and remainder; divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
  // Division known to be exact; throws std::domain_error on nonzero remainder.
  static UniPoly div_exact(const UniPoly& a, const UniPoly& b);

  UniPoly derivative() const;
  UniPoly monic() const;  // leading coefficient scaled to 1; zero stays zero

  // x^d * p(1/x): coefficient reversal within width d (requires d >= degree).
  UniPoly reversed(int d) const;

  // p(x + c).
  UniPoly translated(const Rat& c) const;

  std::string str(const std::string& var = "x") const;

 private:
  void prune();
  std::vector<Rat> c_;
};

// Monic greatest common divisor; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Largest squarefree divisor with the same roots, monic.
UniPoly squarefree_part(const UniPoly& p);

// Yun decomposition p = lc * prod A_i^i with the A_i squarefree, pairwise
// coprime, monic. Entry i-1 of the result holds A_i.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

// Product of the A_i with i >= 2: the squarefree modulus carrying every
// prime whose square divides p. Constant 1 when p is squarefree.
UniPoly squarefree_deficient_part(const UniPoly& p);

// Resultant of two scalar polynomials (Euclidean remainder bookkeeping).
// Res(a, b) = lc(b)^deg(a) when deg(b) = 0; zero inputs give 0.
Rat resultant(const UniPoly& a, const UniPoly& b);

// Unique interpolating polynomial of degree < points.size() through the
// given (x, y) pairs; the x values must be pairwise distinct.
UniPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points);

}  // namespace tschirn
