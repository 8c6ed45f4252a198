#include "tschirn/birkhoff.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "tschirn/errors.hpp"

namespace tschirn {

SplittingType SplittingType::of(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<int>());
  return SplittingType{std::move(v)};
}

std::string SplittingType::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) os << ",";
    os << d[i];
  }
  os << ")";
  return os.str();
}

namespace {

// Degree of the highest nonzero entry in a matrix row; nullopt for a zero row.
std::optional<int> row_degree(const PolyMatrix& m, size_t i) {
  std::optional<int> r;
  for (size_t j = 0; j < m.cols(); ++j) {
    if (m.at(i, j).is_zero()) continue;
    int d = m.at(i, j).degree();
    if (!r || d > *r) r = d;
  }
  return r;
}

void require_transition(const LaurentMatrix& t) {
  if (t.rows() == 0 || t.rows() != t.cols())
    throw std::invalid_argument("transition matrix must be square and nonempty");
  const LaurentPoly det = determinant(t);
  if (det.is_zero() || !det.is_monomial())
    throw std::invalid_argument("transition matrix must have unit (monomial) determinant");
}

}  // namespace

BirkhoffFactorization birkhoff_factorize(const LaurentMatrix& t, long iteration_cap) {
  require_transition(t);
  const size_t m = t.rows();
  if (iteration_cap <= 0) iteration_cap = 64L * static_cast<long>(m) * static_cast<long>(m);

  // Clear denominators: work with the polynomial matrix x^N * t.
  const int n_shift = std::max(0, -*t.min_exp());
  PolyMatrix work(m, m);
  {
    const LaurentMatrix shifted = t.shifted(n_shift);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        const LaurentPoly& e = shifted.at(i, j);
        if (e.is_zero()) continue;
        work.at(i, j) = e.cleared().shifted(e.min_exp());
      }
  }

  // Row-reduce: combine rows to kill leading-coefficient dependencies.  Each
  // step strictly drops the total row degree, which is bounded below by the
  // degree of the (monomial) determinant, so termination is guaranteed; the
  // cap only guards against an internal error.
  PolyMatrix v = PolyMatrix::identity(m);  // accumulated row operations: work = v * (x^N t)
  long iters = 0;
  while (true) {
    std::vector<int> r(m);
    for (size_t i = 0; i < m; ++i) {
      auto d = row_degree(work, i);
      if (!d) throw ContractViolation("zero row during factorization of a unit-determinant matrix");
      r[i] = *d;
    }
    // Leading-row-coefficient matrix.
    std::vector<std::vector<Rat>> lm_t(m, std::vector<Rat>(m));  // transposed, as rows
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) lm_t[j][i] = work.at(i, j).coeff(r[i]);
    const auto kernel = rat_kernel(lm_t);  // left kernel vectors of LM
    if (kernel.empty()) break;

    const std::vector<Rat>& q = kernel.front();
    size_t pivot = m;
    for (size_t i = 0; i < m; ++i) {
      if (q[i].is_zero()) continue;
      if (pivot == m || r[i] > r[pivot]) pivot = i;
    }
    if (pivot == m) throw ContractViolation("empty kernel vector");

    std::vector<UniPoly> new_row(m), new_vrow(m);
    for (size_t i = 0; i < m; ++i) {
      if (q[i].is_zero()) continue;
      const int sh = r[pivot] - r[i];
      for (size_t j = 0; j < m; ++j) {
        new_row[j] = new_row[j] + work.at(i, j).scaled(q[i]).shifted(sh);
        new_vrow[j] = new_vrow[j] + v.at(i, j).scaled(q[i]).shifted(sh);
      }
    }
    auto check = [&] {
      for (size_t j = 0; j < m; ++j)
        if (!new_row[j].is_zero() && new_row[j].degree() >= r[pivot]) return false;
      return true;
    }();
    if (!check) throw ContractViolation("row operation failed to reduce degree");
    for (size_t j = 0; j < m; ++j) {
      work.at(pivot, j) = new_row[j];
      v.at(pivot, j) = new_vrow[j];
    }
    if (++iters > iteration_cap) throw ContractViolation("factorization iteration cap exceeded");
  }

  // work is row-reduced: work = v * x^N * t, so x^N * t = v^{-1} * work and
  // t = v^{-1} * diag(x^{r_i - N}) * (diag(x^{-r_i}) * work).
  std::vector<int> r(m);
  for (size_t i = 0; i < m; ++i) r[i] = *row_degree(work, i);

  std::vector<size_t> order(m);
  for (size_t i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return r[a] > r[b]; });

  const PolyMatrix v_inv = inverse_unimodular(v);
  BirkhoffFactorization out;
  out.p = PolyMatrix(m, m);
  out.q = LaurentMatrix(m, m);
  out.exponents.resize(m);
  for (size_t a = 0; a < m; ++a) {
    const size_t i = order[a];
    out.exponents[a] = r[i] - n_shift;
    for (size_t j = 0; j < m; ++j) {
      out.p.at(j, a) = v_inv.at(j, i);  // permute columns of v^{-1}
      if (!work.at(i, j).is_zero())
        out.q.at(a, j) = LaurentPoly::from_unipoly(work.at(i, j), -r[i]);
    }
  }

  // q must be unimodular over Q[1/x]: nonpositive support with monomial det.
  if (auto mx = out.q.max_exp(); mx && *mx > 0)
    throw ContractViolation("factor q has positive exponents");
  {
    const LaurentPoly dq = determinant(out.q);
    if (dq.is_zero() || !dq.is_monomial())
      throw ContractViolation("factor q does not have monomial determinant");
  }

  // Exact refactorization check on every call.
  LaurentMatrix diag(m, m);
  for (size_t a = 0; a < m; ++a) diag.at(a, a) = LaurentPoly::monomial(Rat(1), out.exponents[a]);
  if (!(to_laurent(out.p, 0) * diag * out.q == t))
    throw ContractViolation("refactorization identity failed");

  return out;
}

SplittingType splitting_type(const LaurentMatrix& t) {
  return birkhoff_factorize(t).splitting();
}

CohomologyDims cohomology_dims(const SplittingType& s, int k) {
  CohomologyDims out;
  for (int d : s.d) {
    out.h0 += std::max(0, d + k + 1);
    out.h1 += std::max(0, -(d + k) - 1);
  }
  return out;
}

long h0_oracle(const LaurentMatrix& t, int k, int window) {
  require_transition(t);
  const size_t m = t.rows();
  const int lo = *t.min_exp(), hi = *t.max_exp();
  if (window <= 0) window = std::max(std::abs(lo), std::abs(hi)) + 2;
  if (std::abs(k) > window)
    throw std::invalid_argument("twist outside supported window");

  // w = t^{-1}, exact Laurent inverse (unit determinant makes it Laurent).
  const LaurentMatrix w = to_laurent(to_frac(t).inverse());

  // A global section is v in Q[x]^m (chart-0 regular) with x^{-k} w v having
  // only nonpositive exponents (chart-infinity regular after the twist).
  // Sections have degree at most max_exp(t) + k componentwise, so unknowns
  // are the coefficients v_{j,s}, 0 <= s <= nv.
  const int nv = std::max(0, hi + k);
  const size_t unknowns = m * static_cast<size_t>(nv + 1);

  const int w_hi = *w.max_exp();
  // Coefficient of x^p in (w v)_i must vanish for p in [k+1, w_hi + nv].
  std::vector<std::vector<Rat>> rows;
  for (size_t i = 0; i < m; ++i) {
    for (int p = k + 1; p <= w_hi + nv; ++p) {
      std::vector<Rat> row(unknowns);
      bool nonzero = false;
      for (size_t j = 0; j < m; ++j) {
        for (int s = 0; s <= nv; ++s) {
          const Rat c = w.at(i, j).coeff(p - s);
          if (c.is_zero()) continue;
          row[j * (nv + 1) + s] = c;
          nonzero = true;
        }
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return static_cast<long>(unknowns);
  const auto kernel = rat_kernel(rows);
  return static_cast<long>(kernel.size());
}

}  // namespace tschirn
