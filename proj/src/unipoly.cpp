#include "tschirn/unipoly.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace tschirn {

void UniPoly::prune() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& r) {
  UniPoly p;
  if (!r.is_zero()) p.c_ = {r};
  return p;
}

UniPoly UniPoly::monomial(const Rat& r, int k) {
  UniPoly p;
  if (r.is_zero()) return p;
  if (k < 0) throw std::invalid_argument("UniPoly::monomial: negative exponent");
  p.c_.assign(static_cast<size_t>(k) + 1, Rat(0));
  p.c_.back() = r;
  return p;
}

int UniPoly::degree() const {
  if (is_zero()) throw std::domain_error("UniPoly::degree: zero polynomial");
  return static_cast<int>(c_.size()) - 1;
}

const Rat& UniPoly::lc() const {
  if (is_zero()) throw std::domain_error("UniPoly::lc: zero polynomial");
  return c_.back();
}

Rat UniPoly::coeff(int i) const {
  if (i < 0 || static_cast<size_t>(i) >= c_.size()) return Rat(0);
  return c_[static_cast<size_t>(i)];
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.prune();
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
  r.prune();
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  UniPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.prune();
  return r;
}

UniPoly UniPoly::scaled(const Rat& r) const {
  if (r.is_zero()) return UniPoly();
  UniPoly p = *this;
  for (auto& c : p.c_) c *= r;
  return p;
}

UniPoly UniPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("UniPoly::shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  UniPoly p;
  p.c_.assign(static_cast<size_t>(k), Rat(0));
  p.c_.insert(p.c_.end(), c_.begin(), c_.end());
  return p;
}

UniPoly UniPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("UniPoly::pow: negative exponent");
  UniPoly acc = UniPoly::constant(Rat(1));
  UniPoly base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("UniPoly::divrem: division by zero");
  UniPoly q, r = a;
  const int db = b.degree();
  const Rat lb = b.lc();
  if (!r.is_zero() && r.degree() >= db) {
    q.c_.assign(static_cast<size_t>(r.degree() - db) + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= db) {
      const int k = r.degree() - db;
      const Rat f = r.lc() / lb;
      q.c_[static_cast<size_t>(k)] = f;
      for (size_t i = 0; i < b.c_.size(); ++i)
        r.c_[static_cast<size_t>(k) + i] -= f * b.c_[i];
      r.prune();
    }
    q.prune();
  }
  return {q, r};
}

UniPoly UniPoly::div_exact(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("UniPoly::div_exact: nonzero remainder");
  return q;
}

UniPoly UniPoly::derivative() const {
  UniPoly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rat(static_cast<long>(i));
  r.prune();
  return r;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lc().inv());
}

UniPoly UniPoly::reversed(int d) const {
  if (is_zero()) return *this;
  if (d < degree()) throw std::invalid_argument("UniPoly::reversed: width below degree");
  UniPoly r;
  r.c_.assign(static_cast<size_t>(d) + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[static_cast<size_t>(d) - i] = c_[i];
  r.prune();
  return r;
}

UniPoly UniPoly::translated(const Rat& c) const {
  // Horner in (x + c).
  UniPoly shift{c, Rat(1)};
  UniPoly acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * shift + UniPoly::constant(c_[i]);
  return acc;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rat& c = c_[i];
    if (c.is_zero()) continue;
    const Rat a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (i == 0 || !a.is_one()) os << a.str();
    if (i > 0) {
      if (!a.is_one()) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// Integer polynomial helpers backing the primitive-remainder-sequence gcd.
using ZPoly = std::vector<mpz_class>;

void zprune(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class zcontent(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void zmake_primitive(ZPoly& p) {
  mpz_class g = zcontent(p);
  if (g == 0 || g == 1) return;
  for (auto& c : p) c /= g;
}

ZPoly to_zpoly(const UniPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  ZPoly z(p.coeffs().size());
  for (size_t i = 0; i < z.size(); ++i) {
    const Rat& c = p.coeffs()[i];
    z[i] = c.num() * (l / c.den());
  }
  zprune(z);
  return z;
}

// r = lc(b)^(deg a - deg b + 1) * a  mod  b, computed in place over Z.
ZPoly zpseudo_rem(ZPoly a, const ZPoly& b) {
  const size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (a.size() > db) {
    const size_t k = a.size() - 1 - db;
    mpz_class head = a.back();
    for (auto& c : a) c *= lb;
    for (size_t i = 0; i < b.size(); ++i) a[k + i] -= head * b[i];
    zprune(a);
    if (a.empty()) break;
  }
  return a;
}

UniPoly from_zpoly_monic(const ZPoly& z) {
  std::vector<Rat> c(z.size());
  for (size_t i = 0; i < z.size(); ++i) c[i] = Rat(z[i]);
  return UniPoly(std::move(c)).monic();
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  ZPoly x = to_zpoly(a), y = to_zpoly(b);
  if (x.size() < y.size()) std::swap(x, y);
  zmake_primitive(x);
  zmake_primitive(y);
  while (y.size() > 1) {
    ZPoly r = zpseudo_rem(x, y);
    if (r.empty()) return from_zpoly_monic(y);
    zmake_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  // Degree-zero remainder: the inputs are coprime.
  return UniPoly::constant(Rat(1));
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
  if (p.degree() == 0) return UniPoly::constant(Rat(1));
  UniPoly g = gcd(p, p.derivative());
  if (g.degree() == 0) return p.monic();
  return UniPoly::div_exact(p, g).monic();
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
  std::vector<UniPoly> out;
  UniPoly f = p.monic();
  if (f.degree() == 0) return out;
  // Yun's algorithm.
  UniPoly fp = f.derivative();
  UniPoly a0 = gcd(f, fp);
  UniPoly w = UniPoly::div_exact(f, a0);
  UniPoly y = UniPoly::div_exact(fp, a0);
  UniPoly z = y - w.derivative();
  while (true) {
    if (w.degree() == 0) break;
    UniPoly ai = gcd(w, z).monic();
    out.push_back(ai);
    w = UniPoly::div_exact(w, ai);
    if (w.degree() == 0) break;
    y = UniPoly::div_exact(z, ai);
    z = y - w.derivative();
  }
  return out;
}

UniPoly squarefree_deficient_part(const UniPoly& p) {
  auto parts = squarefree_decomposition(p);
  UniPoly out = UniPoly::constant(Rat(1));
  for (size_t i = 1; i < parts.size(); ++i) out = out * parts[i];
  return out.monic();
}

Rat resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return Rat(0);
  const int da = a.degree(), db = b.degree();
  if (da < db) {
    Rat sign = (da % 2 == 1 && db % 2 == 1) ? Rat(-1) : Rat(1);
    return sign * resultant(b, a);
  }
  if (db == 0) return b.lc().pow(da);
  UniPoly r = UniPoly::divrem(a, b).second;
  if (r.is_zero()) return Rat(0);
  const int dr = r.degree();
  Rat sign = (da % 2 == 1 && db % 2 == 1) ? Rat(-1) : Rat(1);
  return sign * b.lc().pow(da - dr) * resultant(b, r);
}

UniPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
  const size_t n = points.size();
  if (n == 0) return UniPoly();
  // Newton divided differences, then expansion of the Newton basis.
  std::vector<Rat> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i) {
      const Rat dx = points[i].first - points[i - level].first;
      if (dx.is_zero())
        throw std::invalid_argument("lagrange_interpolate: repeated x value");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
      if (i == level) break;
    }
  UniPoly acc = UniPoly::constant(dd[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    UniPoly lin{-points[i].first, Rat(1)};
    acc = acc * lin + UniPoly::constant(dd[i]);
  }
  return acc;
}

}  // namespace tschirn
