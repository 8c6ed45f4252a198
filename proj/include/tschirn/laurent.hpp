#pragma once

#include <map>
#include <string>

#include "tschirn/rat.hpp"
#include "tschirn/unipoly.hpp"

namespace tschirn {

// Sparse Laurent polynomial over Rat. No zero coefficients are stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rat& c) { set(0, c); }
  static LaurentPoly monomial(const Rat& c, int k);
  static LaurentPoly from_unipoly(const UniPoly& p, int shift = 0);

  bool is_zero() const { return t_.empty(); }
  int min_exp() const;
  int max_exp() const;
  Rat coeff(int k) const;
  const std::map<int, Rat>& terms() const { return t_; }

  // Single term; unit of the Laurent ring.
  bool is_monomial() const { return t_.size() == 1; }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly shifted(int k) const;  // multiply by x^k, any sign
  LaurentPoly scaled(const Rat& r) const;

  // x^(-min_exp) * this as a plain polynomial (zero gives zero).
  UniPoly cleared() const;

  std::string str(const std::string& var = "x") const;

 private:
  void set(int k, const Rat& c);
  std::map<int, Rat> t_;
};

}  // namespace tschirn
