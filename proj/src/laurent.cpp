#include "tschirn/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace tschirn {

void LaurentPoly::set(int k, const Rat& c) {
  if (c.is_zero())
    t_.erase(k);
  else
    t_[k] = c;
}

LaurentPoly LaurentPoly::monomial(const Rat& c, int k) {
  LaurentPoly p;
  p.set(k, c);
  return p;
}

LaurentPoly LaurentPoly::from_unipoly(const UniPoly& p, int shift) {
  LaurentPoly r;
  for (size_t i = 0; i < p.coeffs().size(); ++i)
    r.set(static_cast<int>(i) + shift, p.coeffs()[i]);
  return r;
}

int LaurentPoly::min_exp() const {
  if (is_zero()) throw std::domain_error("LaurentPoly::min_exp: zero");
  return t_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (is_zero()) throw std::domain_error("LaurentPoly::max_exp: zero");
  return t_.rbegin()->first;
}

Rat LaurentPoly::coeff(int k) const {
  auto it = t_.find(k);
  return it == t_.end() ? Rat(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [k, c] : b.t_) r.set(k, r.coeff(k) + c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [k, c] : b.t_) r.set(k, r.coeff(k) - c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) r.set(ka + kb, r.coeff(ka + kb) + ca * cb);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : t_) r.t_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& s) const {
  LaurentPoly r;
  if (s.is_zero()) return r;
  for (const auto& [e, c] : t_) r.t_[e] = c * s;
  return r;
}

UniPoly LaurentPoly::cleared() const {
  if (is_zero()) return UniPoly();
  const int lo = min_exp();
  std::vector<Rat> c(static_cast<size_t>(max_exp() - lo) + 1, Rat(0));
  for (const auto& [e, v] : t_) c[static_cast<size_t>(e - lo)] = v;
  return UniPoly(std::move(c));
}

std::string LaurentPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    const Rat a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (e == 0 || !a.is_one()) os << a.str();
    if (e != 0) {
      if (!a.is_one()) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace tschirn
