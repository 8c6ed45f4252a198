#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tschirn/rat.hpp"
#include "tschirn/unipoly.hpp"

namespace tschirn {

// Sparse bivariate polynomial in a base variable x and a fiber variable w.
// Keys are (base exponent, fiber exponent); no zero coefficients stored.
class BiPoly {
 public:
  BiPoly() = default;

  // Fiber-dense view: entry i is the x-coefficient of w^i.
  static BiPoly from_fiber_coeffs(const std::vector<UniPoly>& coeffs);
  static BiPoly from_unipoly_base(const UniPoly& p);  // polynomial in x alone
  static BiPoly monomial(const Rat& c, int dx, int dw);

  bool is_zero() const { return t_.empty(); }
  int fiber_degree() const;  // nonzero input
  int base_degree() const;
  UniPoly coeff_of_fiber(int i) const;
  std::vector<UniPoly> fiber_coeffs() const;  // size fiber_degree()+1
  const std::map<std::pair<int, int>, Rat>& terms() const { return t_; }

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly d_base() const;
  BiPoly d_fiber() const;

  UniPoly eval_base(const Rat& x0) const;       // polynomial in w
  Rat eval(const Rat& x0, const Rat& w0) const;

  // z^width * F(x, 1/z); width must be >= fiber_degree.
  BiPoly fiber_reversed(int width) const;

  std::string str(const std::string& base = "x", const std::string& fiber = "w") const;

 private:
  void set(int dx, int dw, const Rat& c);
  std::map<std::pair<int, int>, Rat> t_;
};

// Resultant of F and G with respect to the fiber variable: the determinant
// of the Sylvester matrix over Q[x], computed by evaluation/interpolation at
// base points where neither leading fiber coefficient vanishes. It vanishes
// at x0 exactly when F(x0,.) and G(x0,.) share a root or both leading
// coefficients vanish. Both inputs must be nonzero with fiber degree >= 0;
// at least one must have fiber degree >= 1.
UniPoly resultant_fiber(const BiPoly& F, const BiPoly& G);

}  // namespace tschirn
