#include "tschirn/funcfield.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "tschirn/errors.hpp"
#include "tschirn/quotient.hpp"

namespace tschirn {

BiPoly CoverEquation::monic_model() const {
  std::vector<UniPoly> co(static_cast<size_t>(m) + 1);
  co[m] = UniPoly::constant(Rat(1));
  for (int j = 1; j <= m; ++j) co[m - j] = b[j - 1];
  return BiPoly::from_fiber_coeffs(co);
}

UniPoly CoverEquation::discriminant() const {
  const BiPoly f = monic_model();
  return resultant_fiber(f, f.d_fiber());
}

CoverEquation make_integral(const BiPoly& chart_equation) {
  if (chart_equation.is_zero() || chart_equation.fiber_degree() < 1)
    throw std::invalid_argument("chart equation must have fiber degree at least 1");
  const int m = chart_equation.fiber_degree();
  CoverEquation eq;
  eq.m = m;
  eq.chart = chart_equation.fiber_coeffs();
  eq.scale = eq.chart[m];
  eq.b.resize(m);
  // Multiplying by scale^(m-1) and substituting eta = scale * w gives
  // b_j = a_{m-j} * scale^{j-1}.
  UniPoly pw = UniPoly::constant(Rat(1));
  for (int j = 1; j <= m; ++j) {
    eq.b[j - 1] = eq.chart[m - j] * pw;
    if (j < m) pw = pw * eq.scale;
  }
  return eq;
}

PolyMatrix companion_matrix(const CoverEquation& eq) {
  const int m = eq.m;
  PolyMatrix c(m, m);
  for (int j = 0; j + 1 < m; ++j) c.at(j + 1, j) = UniPoly::constant(Rat(1));
  for (int i = 0; i < m; ++i) c.at(i, m - 1) = -eq.b[m - 1 - i];
  return c;
}

namespace {

std::vector<PolyMatrix> companion_powers(const CoverEquation& eq) {
  const size_t m = eq.m;
  std::vector<PolyMatrix> p;
  p.push_back(PolyMatrix::identity(m));
  if (m > 1) {
    const PolyMatrix c = companion_matrix(eq);
    for (size_t i = 1; i < m; ++i) p.push_back(c * p.back());
  }
  return p;
}

// Power-basis multiplication matrix of the element whose numerator is
// column a of n (the common denominator is handled by callers).
PolyMatrix column_mult(const std::vector<PolyMatrix>& pows, const PolyMatrix& n, size_t a) {
  const size_t m = n.rows();
  PolyMatrix out(m, m);
  for (size_t i = 0; i < m; ++i) {
    if (n.at(i, a).is_zero()) continue;
    out = out + pows[i].scaled(n.at(i, a));
  }
  return out;
}

// Membership of num/den given a precomputed basis inverse.
bool contains_with_inv(const FracMatrix& inv, const std::vector<UniPoly>& num,
                       const UniPoly& den) {
  const size_t m = inv.rows();
  const UniPoly d = inv.den * den;
  for (size_t i = 0; i < m; ++i) {
    UniPoly s;
    for (size_t j = 0; j < m && j < num.size(); ++j) s += inv.num.at(i, j) * num[j];
    if (s.is_zero()) continue;
    if (!UniPoly::divrem(s, d).second.is_zero()) return false;
  }
  return true;
}

// Column-style Hermite form of the wide block [g*I | extra]; returns the
// leading m x m triangular block, the canonical basis of the spanned module.
PolyMatrix ideal_hnf(const UniPoly& g, const std::vector<std::vector<UniPoly>>& extra,
                     size_t m) {
  PolyMatrix w(m, m + extra.size());
  for (size_t i = 0; i < m; ++i) w.at(i, i) = g;
  for (size_t c = 0; c < extra.size(); ++c)
    for (size_t i = 0; i < m && i < extra[c].size(); ++i) w.at(i, m + c) = extra[c][i];
  const PolyMatrix h = hermite_form(w).h;
  PolyMatrix out(m, m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) out.at(i, j) = h.at(i, j);
  return out;
}

// One multiplier-ring pass at the squarefree modulus g: radical of (g) by
// the trace-form kernel, then the ring of multipliers of that ideal.
// Returns the possibly enlarged order and whether it grew.
std::pair<Lattice, bool> maximalize_step(const CoverEquation& eq, const Lattice& l,
                                         const UniPoly& g) {
  const size_t m = eq.m;
  const QuotientCtx ctx(g);
  const auto mm = mult_matrices(eq, l);

  // Trace form T[a][b] = Tr(basis_a * basis_b) mod g; its kernel is the
  // radical of g in the order (characteristic zero).
  std::vector<std::vector<UniPoly>> tf(m, std::vector<UniPoly>(m));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a; b < m; ++b) {
      UniPoly tr;
      for (size_t r = 0; r < m; ++r)
        for (size_t k = 0; k < m; ++k) tr += ctx.mul(mm[a].at(r, k), mm[b].at(k, r));
      tf[a][b] = tf[b][a] = ctx.reduce(tr);
    }
  const auto rad = kernel_mod(tf, ctx);

  const PolyMatrix j = ideal_hnf(g, rad, m);
  const UniPoly jdet = determinant(j);
  const PolyMatrix jadj = adjugate(j);

  // Action of each basis element on the radical ideal, written in the ideal
  // basis: A_a = J^{-1} (M_a J).  Exact because the ideal is order-stable.
  std::vector<std::vector<UniPoly>> rows(m * m, std::vector<UniPoly>(m));
  try {
    for (size_t a = 0; a < m; ++a) {
      const PolyMatrix act = jadj * (mm[a] * j);
      for (size_t r = 0; r < m; ++r)
        for (size_t c = 0; c < m; ++c)
          rows[r * m + c][a] = ctx.reduce(UniPoly::div_exact(act.at(r, c), jdet));
    }
  } catch (const std::domain_error&) {
    throw ContractViolation("radical ideal is not stable under the order");
  }

  // y with (y mod g) killing I/gI; the multipliers y/g enlarge the order.
  const auto ker = kernel_mod(rows, ctx);
  if (ker.empty()) return {l, false};

  const PolyMatrix u = ideal_hnf(g, ker, m);
  FracMatrix nb = l.basis * FracMatrix{u, g};
  nb.simplify();
  return {Lattice{nb, l.at_infinity}, true};
}

}  // namespace

std::vector<PolyMatrix> mult_matrices(const CoverEquation& eq, const Lattice& l) {
  const size_t m = eq.m;
  const auto pows = companion_powers(eq);
  const FracMatrix inv = l.basis.inverse();
  std::vector<PolyMatrix> out;
  for (size_t a = 0; a < m; ++a) {
    FracMatrix f = inv * FracMatrix{column_mult(pows, l.basis.num, a), l.basis.den} * l.basis;
    f.simplify();
    if (!f.den.is_constant()) throw ContractViolation("lattice is not multiplicatively closed");
    out.push_back(f.num);
  }
  return out;
}

bool lattice_contains(const Lattice& l, const std::vector<UniPoly>& num, const UniPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  return contains_with_inv(l.basis.inverse(), num, den);
}

bool lattice_equal(const Lattice& a, const Lattice& b) {
  if (a.at_infinity != b.at_infinity) return false;
  if (a.basis.rows() != b.basis.rows()) return false;
  auto contained = [](const Lattice& inner, const Lattice& outer) {
    FracMatrix w = outer.basis.inverse() * inner.basis;
    w.simplify();
    return w.den.is_constant();
  };
  return contained(a, b) && contained(b, a);
}

bool multiplicatively_closed(const CoverEquation& eq, const Lattice& l) {
  const size_t m = eq.m;
  const auto pows = companion_powers(eq);
  const FracMatrix inv = l.basis.inverse();
  const UniPoly den2 = l.basis.den * l.basis.den;
  for (size_t a = 0; a < m; ++a) {
    const PolyMatrix pa = column_mult(pows, l.basis.num, a);
    for (size_t bc = a; bc < m; ++bc) {
      std::vector<UniPoly> prod(m);
      for (size_t i = 0; i < m; ++i)
        for (size_t k = 0; k < m; ++k) prod[i] += pa.at(i, k) * l.basis.num.at(k, bc);
      if (!contains_with_inv(inv, prod, den2)) return false;
    }
  }
  return true;
}

Lattice close_lattice(const CoverEquation& eq, Lattice start) {
  const UniPoly disc = eq.discriminant();
  if (disc.is_zero())
    throw InvalidInstance("vanishing discriminant: the cover equation is not reduced");
  std::vector<UniPoly> work;
  {
    const UniPoly d = squarefree_deficient_part(disc);
    if (!d.is_constant()) work.push_back(d);
  }
  long guard = 8L * (disc.is_constant() ? 1 : disc.degree() + 1) + 32;
  while (!work.empty()) {
    if (--guard < 0) throw ContractViolation("integral closure failed to terminate");
    const UniPoly g = work.back();
    work.pop_back();
    if (g.is_constant()) continue;
    try {
      auto [next, grew] = maximalize_step(eq, start, g);
      if (grew) {
        start = next;
        work.push_back(g);
      }
    } catch (const SplitEvent& ev) {
      work.push_back(ev.g1);
      work.push_back(ev.g2);
    }
  }
  return start;
}

Lattice integral_closure(const CoverEquation& eq) {
  if (eq.m < 1) throw std::invalid_argument("cover degree must be positive");
  return close_lattice(eq, Lattice{FracMatrix::identity(eq.m), false});
}

int infinity_shift(const CoverEquation& eq, int e) {
  if (e < 1) throw std::invalid_argument("surface degree must be positive");
  if (eq.scale.is_zero()) throw std::invalid_argument("cover equation lacks its scale record");
  return e + eq.scale.degree();
}

CoverEquation mirror_equation(const CoverEquation& eq, int e) {
  const int s = infinity_shift(eq, e);
  CoverEquation out;
  out.m = eq.m;
  out.scale = eq.scale.reversed(eq.scale.degree());
  out.b.resize(eq.m);
  for (int j = 1; j <= eq.m; ++j) {
    const UniPoly& bj = eq.b[j - 1];
    if (bj.is_zero()) continue;
    if (bj.degree() > j * s)
      throw InvalidInstance("model not normalized at the infinity chart",
                            "coefficient " + std::to_string(j) + " too wide");
    out.b[j - 1] = bj.reversed(j * s);
  }
  return out;
}

Lattice closure_at_infinity(const CoverEquation& eq, int e) {
  Lattice l = integral_closure(mirror_equation(eq, e));
  l.at_infinity = true;
  return l;
}

FracMatrix ambient_from_infinity(const FracMatrix& b1, int shift) {
  const size_t m = b1.rows();
  const int dd = b1.den.is_zero() ? 0 : b1.den.degree();
  int lmax = dd;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < b1.cols(); ++j)
      if (!b1.num.at(i, j).is_zero()) lmax = std::max(lmax, b1.num.at(i, j).degree());

  FracMatrix out;
  out.num = PolyMatrix(m, b1.cols());
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < b1.cols(); ++j) {
      const UniPoly& n = b1.num.at(i, j);
      if (n.is_zero()) continue;
      const int dn = n.degree();
      out.num.at(i, j) =
          n.reversed(dn).shifted(lmax - dn + static_cast<int>(m - 1 - i) * shift);
    }
  out.den = b1.den.reversed(dd).shifted(lmax - dd + static_cast<int>(m - 1) * shift);
  out.simplify();
  return out;
}

LaurentMatrix transition_matrix(const CoverEquation& eq, int e, const Lattice& m0,
                                const Lattice& m1) {
  if (m0.at_infinity || !m1.at_infinity)
    throw std::invalid_argument("transition expects a chart-zero lattice and an infinity lattice");
  const int s = infinity_shift(eq, e);
  FracMatrix t = m0.basis.inverse() * ambient_from_infinity(m1.basis, s);
  t.simplify();

  int k = -1;
  size_t nonzero = 0;
  const auto& dc = t.den.coeffs();
  for (size_t i = 0; i < dc.size(); ++i)
    if (!dc[i].is_zero()) {
      ++nonzero;
      k = static_cast<int>(i);
    }
  if (nonzero != 1)
    throw ContractViolation("transition matrix is not Laurent: a chart lattice is not maximal");

  const Rat lead = t.den.coeff(k);
  LaurentMatrix out(t.rows(), t.cols());
  for (size_t i = 0; i < t.rows(); ++i)
    for (size_t j = 0; j < t.cols(); ++j)
      if (!t.num.at(i, j).is_zero())
        out.at(i, j) = LaurentPoly::from_unipoly(t.num.at(i, j).scaled(lead.inv()), -k);

  const LaurentPoly d = determinant(out);
  if (d.is_zero() || !d.is_monomial())
    throw ContractViolation("transition determinant is not a unit");
  return out;
}

PointIdeal point_ideal(const CoverEquation& eq, const Lattice& ring, const Rat& x0,
                       const Rat& eta0) {
  const size_t m = eq.m;
  const FracMatrix inv = ring.basis.inverse();

  // Multiplication by eta on the ring basis; polynomial since eta is integral.
  FracMatrix ne = inv * FracMatrix{companion_matrix(eq) * ring.basis.num, ring.basis.den};
  ne.simplify();
  if (!ne.den.is_constant()) throw ContractViolation("eta does not stabilize the ring lattice");

  // Evaluation at the point is a left eigenvector of the fiber action at x0.
  std::vector<std::vector<Rat>> rows(m, std::vector<Rat>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      rows[i][j] = ne.num.at(j, i).eval(x0);
      if (i == j) rows[i][j] -= eta0;
    }
  const auto evs = rat_kernel(rows);
  if (evs.empty()) throw InvalidInstance("point is not on the cover");
  if (evs.size() > 1)
    throw InvalidInstance("fiber value does not separate the point over its base value");
  const std::vector<Rat>& lam = evs.front();

  // The functional must not kill 1, whose ring coordinates are polynomial.
  {
    Rat v;
    for (size_t i = 0; i < m; ++i) {
      const UniPoly wi = UniPoly::div_exact(inv.num.at(i, 0), inv.den);
      v += lam[i] * wi.eval(x0);
    }
    if (v.is_zero()) throw InvalidInstance("evaluation functional degenerates at the point");
  }

  std::vector<std::vector<UniPoly>> extra;
  for (const auto& v : rat_kernel({std::vector<Rat>(lam)})) {
    std::vector<UniPoly> col(m);
    for (size_t i = 0; i < m; ++i)
      if (!v[i].is_zero()) col[i] = UniPoly::constant(v[i]);
    extra.push_back(std::move(col));
  }
  const UniPoly gx{-x0, Rat(1)};
  PointIdeal p;
  p.x0 = x0;
  FracMatrix pb = ring.basis * FracMatrix{ideal_hnf(gx, extra, m), UniPoly::constant(Rat(1))};
  pb.simplify();
  p.lat = Lattice{pb, ring.at_infinity};
  return p;
}

Lattice colon_lattice(const CoverEquation& eq, const Lattice& m, const PointIdeal& p) {
  const size_t n = eq.m;
  const auto pows = companion_powers(eq);
  const FracMatrix inv = m.basis.inverse();
  const FracMatrix& q = p.lat.basis;

  // E_a(r, c) = coordinate r in m of (basis_a of m) * (generator c of p),
  // evaluated at the point's base value.
  std::vector<std::vector<std::vector<Rat>>> ea;
  for (size_t a = 0; a < n; ++a) {
    FracMatrix w = inv * FracMatrix{column_mult(pows, m.basis.num, a) * q.num, m.basis.den * q.den};
    w.simplify();
    if (!w.den.is_constant())
      throw ContractViolation("product of the lattice with the point ideal left the lattice");
    std::vector<std::vector<Rat>> mat(n, std::vector<Rat>(n));
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) mat[r][c] = w.num.at(r, c).eval(p.x0);
    ea.push_back(std::move(mat));
  }

  // y = sum y_a basis_a with y * P inside (x - x0) * m: a scalar system on
  // the residues y_a(x0).
  std::vector<std::vector<Rat>> rows(n * n, std::vector<Rat>(n));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c)
      for (size_t a = 0; a < n; ++a) rows[r * n + c][a] = ea[a][r][c];
  const auto ker = rat_kernel(rows);

  std::vector<std::vector<UniPoly>> extra;
  for (const auto& v : ker) {
    std::vector<UniPoly> col(n);
    for (size_t i = 0; i < n; ++i)
      if (!v[i].is_zero()) col[i] = UniPoly::constant(v[i]);
    extra.push_back(std::move(col));
  }
  const UniPoly gx{-p.x0, Rat(1)};
  FracMatrix nb = m.basis * FracMatrix{ideal_hnf(gx, extra, n), gx};
  nb.simplify();
  return Lattice{nb, m.at_infinity};
}

}  // namespace tschirn
