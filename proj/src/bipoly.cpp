#include "tschirn/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace tschirn {

void BiPoly::set(int dx, int dw, const Rat& c) {
  if (c.is_zero())
    t_.erase({dx, dw});
  else
    t_[{dx, dw}] = c;
}

BiPoly BiPoly::from_fiber_coeffs(const std::vector<UniPoly>& coeffs) {
  BiPoly r;
  for (size_t i = 0; i < coeffs.size(); ++i)
    for (size_t j = 0; j < coeffs[i].coeffs().size(); ++j)
      r.set(static_cast<int>(j), static_cast<int>(i), coeffs[i].coeffs()[j]);
  return r;
}

BiPoly BiPoly::from_unipoly_base(const UniPoly& p) { return from_fiber_coeffs({p}); }

BiPoly BiPoly::monomial(const Rat& c, int dx, int dw) {
  if (dx < 0 || dw < 0) throw std::invalid_argument("BiPoly::monomial: negative exponent");
  BiPoly r;
  r.set(dx, dw, c);
  return r;
}

int BiPoly::fiber_degree() const {
  if (is_zero()) throw std::domain_error("BiPoly::fiber_degree: zero");
  int d = 0;
  for (const auto& [k, c] : t_) d = std::max(d, k.second);
  return d;
}

int BiPoly::base_degree() const {
  if (is_zero()) throw std::domain_error("BiPoly::base_degree: zero");
  int d = 0;
  for (const auto& [k, c] : t_) d = std::max(d, k.first);
  return d;
}

UniPoly BiPoly::coeff_of_fiber(int i) const {
  std::vector<Rat> c;
  for (const auto& [k, v] : t_) {
    if (k.second != i) continue;
    if (static_cast<size_t>(k.first) >= c.size()) c.resize(static_cast<size_t>(k.first) + 1, Rat(0));
    c[static_cast<size_t>(k.first)] = v;
  }
  return UniPoly(std::move(c));
}

std::vector<UniPoly> BiPoly::fiber_coeffs() const {
  std::vector<UniPoly> out(static_cast<size_t>(fiber_degree()) + 1);
  for (size_t i = 0; i < out.size(); ++i) out[i] = coeff_of_fiber(static_cast<int>(i));
  return out;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [k, c] : b.t_) {
    auto it = r.t_.find(k);
    if (it == r.t_.end()) {
      r.t_[k] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) r.t_.erase(it);
    }
  }
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) {
      std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
      auto it = r.t_.find(k);
      if (it == r.t_.end()) {
        Rat v = ca * cb;
        if (!v.is_zero()) r.t_[k] = v;
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.t_.erase(it);
      }
    }
  return r;
}

BiPoly BiPoly::d_base() const {
  BiPoly r;
  for (const auto& [k, c] : t_)
    if (k.first > 0) r.set(k.first - 1, k.second, c * Rat(k.first));
  return r;
}

BiPoly BiPoly::d_fiber() const {
  BiPoly r;
  for (const auto& [k, c] : t_)
    if (k.second > 0) r.set(k.first, k.second - 1, c * Rat(k.second));
  return r;
}

UniPoly BiPoly::eval_base(const Rat& x0) const {
  std::vector<Rat> c;
  for (const auto& [k, v] : t_) {
    if (static_cast<size_t>(k.second) >= c.size()) c.resize(static_cast<size_t>(k.second) + 1, Rat(0));
    c[static_cast<size_t>(k.second)] += v * x0.pow(k.first);
  }
  return UniPoly(std::move(c));
}

Rat BiPoly::eval(const Rat& x0, const Rat& w0) const {
  return eval_base(x0).eval(w0);
}

BiPoly BiPoly::fiber_reversed(int width) const {
  if (is_zero()) return *this;
  if (width < fiber_degree())
    throw std::invalid_argument("BiPoly::fiber_reversed: width below fiber degree");
  BiPoly r;
  for (const auto& [k, c] : t_) r.set(k.first, width - k.second, c);
  return r;
}

std::string BiPoly::str(const std::string& base, const std::string& fiber) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  auto cs = fiber_coeffs();
  bool first = true;
  for (size_t i = cs.size(); i-- > 0;) {
    if (cs[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << cs[i].str(base) << ")";
    if (i > 0) {
      os << "*" << fiber;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly resultant_fiber(const BiPoly& F, const BiPoly& G) {
  if (F.is_zero() || G.is_zero())
    throw std::invalid_argument("resultant_fiber: zero input");
  const int dF = F.fiber_degree(), dG = G.fiber_degree();
  if (dF == 0 && dG == 0)
    throw std::invalid_argument("resultant_fiber: both inputs constant in the fiber variable");
  if (dF == 0) return F.coeff_of_fiber(0).pow(dG);
  if (dG == 0) return G.coeff_of_fiber(0).pow(dF);

  const UniPoly lcF = F.coeff_of_fiber(dF), lcG = G.coeff_of_fiber(dG);
  const int bound = dG * F.base_degree() + dF * G.base_degree();
  std::vector<std::pair<Rat, Rat>> points;
  points.reserve(static_cast<size_t>(bound) + 1);
  for (long step = 0; static_cast<int>(points.size()) <= bound; ++step) {
    const Rat x0(step % 2 == 0 ? step / 2 : -(step / 2 + 1));
    if (lcF.eval(x0).is_zero() || lcG.eval(x0).is_zero()) continue;
    // Leading coefficients survive, so the Sylvester matrix specializes.
    points.emplace_back(x0, resultant(F.eval_base(x0), G.eval_base(x0)));
  }
  return lagrange_interpolate(points);
}

}  // namespace tschirn
