#include "tschirn/polymat.hpp"

#include <sstream>
#include <stdexcept>

namespace tschirn {

PolyMatrix PolyMatrix::identity(size_t n) {
  PolyMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = UniPoly::constant(Rat(1));
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("PolyMatrix: shape mismatch");
  PolyMatrix r(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("PolyMatrix: shape mismatch");
  PolyMatrix r(a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("PolyMatrix: shape mismatch");
  PolyMatrix r(a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
  return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

PolyMatrix PolyMatrix::scaled(const UniPoly& f) const {
  PolyMatrix r(r_, c_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * f;
  return r;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix r(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : e_)
    if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_identity() const {
  if (r_ != c_) return false;
  return *this == identity(r_);
}

std::string PolyMatrix::str(const std::string& var) const {
  std::ostringstream os;
  for (size_t i = 0; i < r_; ++i) {
    os << "[ ";
    for (size_t j = 0; j < c_; ++j) os << at(i, j).str(var) << (j + 1 < c_ ? ", " : " ");
    os << "]\n";
  }
  return os.str();
}

UniPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square input required");
  const size_t n = m.rows();
  if (n == 0) return UniPoly::constant(Rat(1));
  PolyMatrix a = m;
  UniPoly prev = UniPoly::constant(Rat(1));
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      size_t sw = n;
      for (size_t i = k + 1; i < n; ++i)
        if (!a.at(i, k).is_zero()) {
          sw = i;
          break;
        }
      if (sw == n) return UniPoly();
      for (size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(sw, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a.at(i, j) = UniPoly::div_exact(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
    prev = a.at(k, k);
  }
  UniPoly d = a.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

PolyMatrix adjugate(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("adjugate: square input required");
  const size_t n = m.rows();
  PolyMatrix adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj.at(0, 0) = UniPoly::constant(Rat(1));
    return adj;
  }
  PolyMatrix minor(n - 1, n - 1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      for (size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(mr, mc) = m.at(r, c);
          ++mc;
        }
        ++mr;
      }
      UniPoly d = determinant(minor);
      adj.at(j, i) = ((i + j) % 2 == 0) ? d : -d;
    }
  return adj;
}

PolyMatrix inverse_unimodular(const PolyMatrix& m) {
  UniPoly d = determinant(m);
  if (d.is_zero() || d.degree() != 0)
    throw std::invalid_argument("inverse_unimodular: determinant is not a nonzero constant");
  return adjugate(m).scaled(UniPoly::constant(d.coeff(0).inv()));
}

HermiteResult hermite_form(const PolyMatrix& m) {
  const size_t rows = m.rows(), cols = m.cols();
  if (rows > cols) throw std::invalid_argument("hermite_form: more rows than columns");
  HermiteResult res{m, PolyMatrix::identity(cols)};
  PolyMatrix& h = res.h;
  PolyMatrix& u = res.u;

  auto col_swap = [&](size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < rows; ++i) std::swap(h.at(i, a), h.at(i, b));
    for (size_t i = 0; i < cols; ++i) std::swap(u.at(i, a), u.at(i, b));
  };
  auto col_axpy = [&](size_t dst, const UniPoly& f, size_t src) {
    if (f.is_zero()) return;
    for (size_t i = 0; i < rows; ++i) h.at(i, dst) -= f * h.at(i, src);
    for (size_t i = 0; i < cols; ++i) u.at(i, dst) -= f * u.at(i, src);
  };
  auto col_scale = [&](size_t c, const Rat& s) {
    for (size_t i = 0; i < rows; ++i) h.at(i, c) = h.at(i, c).scaled(s);
    for (size_t i = 0; i < cols; ++i) u.at(i, c) = u.at(i, c).scaled(s);
  };

  for (size_t i = 0; i < rows; ++i) {
    while (true) {
      // Pivot: lowest-degree nonzero entry in row i among columns >= i,
      // ties broken by the smaller column index.
      size_t pc = cols;
      for (size_t j = i; j < cols; ++j) {
        if (h.at(i, j).is_zero()) continue;
        if (pc == cols || h.at(i, j).degree() < h.at(i, pc).degree()) pc = j;
      }
      if (pc == cols) throw std::invalid_argument("hermite_form: rank deficient input");
      col_swap(i, pc);
      bool cleared = true;
      for (size_t j = i + 1; j < cols; ++j) {
        if (h.at(i, j).is_zero()) continue;
        auto [q, r] = UniPoly::divrem(h.at(i, j), h.at(i, i));
        col_axpy(j, q, i);
        if (!h.at(i, j).is_zero()) cleared = false;
      }
      if (cleared) break;
    }
    col_scale(i, h.at(i, i).lc().inv());
    // Reduce entries left of the diagonal in this row.
    for (size_t j = 0; j < i; ++j) {
      if (h.at(i, j).is_zero()) continue;
      auto [q, r] = UniPoly::divrem(h.at(i, j), h.at(i, i));
      col_axpy(j, q, i);
    }
  }
  return res;
}

FracMatrix FracMatrix::identity(size_t n) {
  return FracMatrix{PolyMatrix::identity(n), UniPoly::constant(Rat(1))};
}

void FracMatrix::simplify() {
  if (den.is_zero()) throw std::invalid_argument("FracMatrix: zero denominator");
  UniPoly g = den;
  for (size_t i = 0; i < num.rows() && !g.is_constant(); ++i)
    for (size_t j = 0; j < num.cols() && !g.is_constant(); ++j)
      g = gcd(g, num.at(i, j));
  if (!g.is_constant()) {
    for (size_t i = 0; i < num.rows(); ++i)
      for (size_t j = 0; j < num.cols(); ++j)
        num.at(i, j) = UniPoly::div_exact(num.at(i, j), g);
    den = UniPoly::div_exact(den, g);
  }
  const Rat s = den.lc().inv();
  den = den.scaled(s);
  num = num.scaled(UniPoly::constant(s));
}

FracMatrix operator*(const FracMatrix& a, const FracMatrix& b) {
  FracMatrix r{a.num * b.num, a.den * b.den};
  r.simplify();
  return r;
}

FracMatrix FracMatrix::inverse() const {
  UniPoly d = determinant(num);
  if (d.is_zero()) throw std::invalid_argument("FracMatrix::inverse: singular matrix");
  FracMatrix r{adjugate(num).scaled(den), d};
  r.simplify();
  return r;
}

bool FracMatrix::equals(const FracMatrix& o) const {
  if (rows() != o.rows() || cols() != o.cols()) return false;
  return num.scaled(o.den) == o.num.scaled(den);
}

LaurentMatrix LaurentMatrix::identity(size_t n) {
  LaurentMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(Rat(1));
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("LaurentMatrix: shape mismatch");
  LaurentMatrix r(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return r;
}

bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

std::optional<int> LaurentMatrix::min_exp() const {
  std::optional<int> v;
  for (const auto& e : e_)
    if (!e.is_zero()) v = v ? std::min(*v, e.min_exp()) : e.min_exp();
  return v;
}

std::optional<int> LaurentMatrix::max_exp() const {
  std::optional<int> v;
  for (const auto& e : e_)
    if (!e.is_zero()) v = v ? std::max(*v, e.max_exp()) : e.max_exp();
  return v;
}

LaurentMatrix LaurentMatrix::shifted(int k) const {
  LaurentMatrix r(r_, c_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].shifted(k);
  return r;
}

std::string LaurentMatrix::str(const std::string& var) const {
  std::ostringstream os;
  for (size_t i = 0; i < r_; ++i) {
    os << "[ ";
    for (size_t j = 0; j < c_; ++j) os << at(i, j).str(var) << (j + 1 < c_ ? ", " : " ");
    os << "]\n";
  }
  return os.str();
}

LaurentPoly determinant(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square input required");
  const size_t n = m.rows();
  if (n == 0) return LaurentPoly(Rat(1));
  const auto lo = m.min_exp();
  if (!lo) return LaurentPoly();
  const int shift = std::min(0, *lo);
  PolyMatrix p(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const LaurentPoly e = m.at(i, j).shifted(-shift);
      p.at(i, j) = e.is_zero() ? UniPoly() : e.cleared().shifted(e.min_exp());
    }
  const UniPoly d = determinant(p);
  return LaurentPoly::from_unipoly(d, shift * static_cast<int>(n));
}

LaurentMatrix to_laurent(const PolyMatrix& m, int shift) {
  LaurentMatrix r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      r.at(i, j) = LaurentPoly::from_unipoly(m.at(i, j), shift);
  return r;
}

LaurentMatrix to_laurent(const FracMatrix& m) {
  FracMatrix f = m;
  f.simplify();
  // Denominator must be a monomial: cancel the x-power, reject the rest.
  const UniPoly& d = f.den;
  const int k = [&] {
    for (int i = 0; i < d.degree(); ++i)
      if (!d.coeff(i).is_zero())
        throw std::invalid_argument("to_laurent: denominator is not a monomial");
    return d.degree();
  }();
  const Rat s = d.lc().inv();
  LaurentMatrix r(f.rows(), f.cols());
  for (size_t i = 0; i < f.rows(); ++i)
    for (size_t j = 0; j < f.cols(); ++j)
      r.at(i, j) = LaurentPoly::from_unipoly(f.num.at(i, j).scaled(s), -k);
  return r;
}

FracMatrix to_frac(const LaurentMatrix& m) {
  const auto lo = m.min_exp();
  const int shift = lo ? std::min(0, *lo) : 0;
  PolyMatrix num(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      const LaurentPoly e = m.at(i, j).shifted(-shift);
      num.at(i, j) = e.is_zero() ? UniPoly() : e.cleared().shifted(e.min_exp());
    }
  FracMatrix r{num, UniPoly::monomial(Rat(1), -shift)};
  return r;
}

std::vector<std::vector<Rat>> rat_kernel(const std::vector<std::vector<Rat>>& rows) {
  const size_t nr = rows.size();
  const size_t nc = nr == 0 ? 0 : rows[0].size();
  std::vector<std::vector<Rat>> m = rows;
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < nc && r < nr; ++c) {
    size_t pr = nr;
    for (size_t i = r; i < nr; ++i)
      if (!m[i][c].is_zero()) {
        pr = i;
        break;
      }
    if (pr == nr) continue;
    std::swap(m[r], m[pr]);
    const Rat inv = m[r][c].inv();
    for (size_t j = c; j < nc; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < nr; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rat f = m[i][c];
      for (size_t j = c; j < nc; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(nc, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> kernel;
  for (size_t c = 0; c < nc; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(nc, Rat(0));
    v[c] = Rat(1);
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][c];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace tschirn
