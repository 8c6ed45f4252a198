#include "tschirn/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace tschirn {

Rat::Rat(long n, long d) : v_(n, d) {
  if (d == 0) throw std::domain_error("Rat: zero denominator");
  v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) {
  if (d == 0) throw std::domain_error("Rat: zero denominator");
  v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("Rat::parse: bad rational '" + s + "'");
  if (v.get_den() == 0) throw std::invalid_argument("Rat::parse: zero denominator");
  v.canonicalize();
  return Rat(v);
}

std::string Rat::str() const { return v_.get_str(); }

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::inv() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(mpq_class(1) / v_);
}

Rat Rat::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(k));
  return Rat(n, d);
}

Rat Rat::sqrt_exact() const {
  if (sign() < 0) throw std::domain_error("Rat: square root of negative value");
  mpz_class n, d, rn, rd;
  n = v_.get_num();
  d = v_.get_den();
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  if (rn * rn != n || rd * rd != d)
    throw std::domain_error("Rat: value is not a rational square");
  return Rat(rn, rd);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace tschirn
