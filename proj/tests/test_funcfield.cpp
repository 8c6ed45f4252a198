#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "tschirn/birkhoff.hpp"
#include "tschirn/errors.hpp"
#include "tschirn/funcfield.hpp"

using namespace tschirn;

namespace {

UniPoly up(const std::vector<long>& cs) {
  std::vector<Rat> v(cs.begin(), cs.end());
  return UniPoly(std::move(v));
}

Lattice power_lattice(int m) { return Lattice{FracMatrix::identity(static_cast<size_t>(m)), false}; }

// f(x, ell*w), expanded term by term: the substitution identity oracle for
// make_integral.
BiPoly subst_fiber_scale(const BiPoly& f, const UniPoly& ell) {
  BiPoly out;
  for (const auto& [key, c] : f.terms()) {
    BiPoly term = BiPoly::monomial(c, key.first, key.second);
    if (key.second > 0) term = term * BiPoly::from_unipoly_base(ell.pow(key.second));
    out = out + term;
  }
  return out;
}

bool ref_divides(const UniPoly& d, const UniPoly& p) {
  if (p.is_zero()) return true;
  if (d.is_zero()) return false;
  return UniPoly::divrem(p, d).second.is_zero();
}

// Index of the power-basis order inside an over-lattice: the inverse of the
// basis determinant, which must be a polynomial.
UniPoly order_index(const Lattice& l) {
  const UniPoly detn = determinant(l.basis.num);
  REQUIRE(!detn.is_zero());
  UniPoly denp = UniPoly::constant(Rat(1));
  for (size_t i = 0; i < l.basis.rows(); ++i) denp = denp * l.basis.den;
  return UniPoly::div_exact(denp, detn).monic();
}

long draw(std::mt19937_64& gen, long lo, long hi) {
  return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1));
}

UniPoly random_poly(std::mt19937_64& gen, int max_deg, long bound) {
  const int deg = static_cast<int>(draw(gen, -1, max_deg));
  if (deg < 0) return UniPoly();
  std::vector<Rat> cs(static_cast<size_t>(deg) + 1);
  for (int i = 0; i < deg; ++i) cs[static_cast<size_t>(i)] = Rat(draw(gen, -bound, bound));
  long lead = draw(gen, -bound, bound);
  if (lead == 0) lead = 1;
  cs[static_cast<size_t>(deg)] = Rat(lead);
  return UniPoly(std::move(cs));
}

}  // namespace

TEST_CASE("make_integral: scaling bookkeeping") {
  // Already monic: w^2 - p(x).
  const UniPoly p = up({0, -1, 0, 1});  // x^3 - x, squarefree
  const BiPoly hyper = BiPoly::monomial(Rat(1), 0, 2) - BiPoly::from_unipoly_base(p);
  const CoverEquation eq = make_integral(hyper);
  CHECK(eq.m == 2);
  CHECK(eq.scale == UniPoly::constant(Rat(1)));
  CHECK(eq.b[0].is_zero());
  CHECK(eq.b[1] == -p);

  // x w^2 + w + 1 becomes eta^2 + eta + x under eta = x w.
  std::vector<UniPoly> chart = {UniPoly::constant(Rat(1)), UniPoly::constant(Rat(1)),
                                up({0, 1})};
  const CoverEquation eq2 = make_integral(BiPoly::from_fiber_coeffs(chart));
  CHECK(eq2.scale == up({0, 1}));
  CHECK(eq2.b[0] == UniPoly::constant(Rat(1)));
  CHECK(eq2.b[1] == up({0, 1}));

  // Constant leading coefficient: 2 w^2 + w + 3 -> eta^2 + eta + 6, eta = 2w.
  std::vector<UniPoly> cchart = {UniPoly::constant(Rat(3)), UniPoly::constant(Rat(1)),
                                 UniPoly::constant(Rat(2))};
  const CoverEquation eq3 = make_integral(BiPoly::from_fiber_coeffs(cchart));
  CHECK(eq3.scale == UniPoly::constant(Rat(2)));
  CHECK(eq3.b[0] == UniPoly::constant(Rat(1)));
  CHECK(eq3.b[1] == UniPoly::constant(Rat(6)));

  // No fiber variable at all: not a cover.
  CHECK_THROWS_AS(make_integral(BiPoly::from_unipoly_base(up({1, 1}))),
                  std::invalid_argument);

  // Substitution identity f(x, scale * w) = scale^(m-1) * chart, on randoms.
  std::mt19937_64 gen(41);
  for (int i = 0; i < 40; ++i) {
    const int m = static_cast<int>(draw(gen, 2, 4));
    std::vector<UniPoly> cs(static_cast<size_t>(m) + 1);
    for (int j = 0; j < m; ++j) cs[static_cast<size_t>(j)] = random_poly(gen, 2, 4);
    UniPoly lead = random_poly(gen, 1, 3);
    if (lead.is_zero()) lead = up({0, 1});
    cs[static_cast<size_t>(m)] = lead;
    const BiPoly chart_eq = BiPoly::from_fiber_coeffs(cs);
    const CoverEquation e = make_integral(chart_eq);
    const BiPoly lhs = subst_fiber_scale(e.monic_model(), e.scale);
    const BiPoly rhs = BiPoly::from_unipoly_base(e.scale.pow(m - 1)) * chart_eq;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("companion matrix and multiplication matrices") {
  // eta^2 + eta + x: eta * eta = -x - eta.
  std::vector<UniPoly> chart = {UniPoly::constant(Rat(1)), UniPoly::constant(Rat(1)),
                                up({0, 1})};
  const CoverEquation eq = make_integral(BiPoly::from_fiber_coeffs(chart));
  const PolyMatrix c = companion_matrix(eq);
  CHECK(c.at(0, 0).is_zero());
  CHECK(c.at(1, 0) == UniPoly::constant(Rat(1)));
  CHECK(c.at(0, 1) == up({0, -1}));
  CHECK(c.at(1, 1) == UniPoly::constant(Rat(-1)));

  // The power order is closed under multiplication; its mult matrices start
  // with the identity and the companion matrix.
  const Lattice pw = power_lattice(2);
  const auto mm = mult_matrices(eq, pw);
  REQUIRE(mm.size() == 2);
  CHECK(mm[0] == PolyMatrix::identity(2));
  CHECK(mm[1] == c);
  CHECK(multiplicatively_closed(eq, pw));

  // (1, eta/x) is not an order for eta^2 - (x+1).
  const BiPoly noncl = BiPoly::monomial(Rat(1), 0, 2) - BiPoly::from_unipoly_base(up({1, 1}));
  const CoverEquation eqn = make_integral(noncl);
  FracMatrix fm;
  fm.num = PolyMatrix(2, 2);
  fm.num.at(0, 0) = up({0, 1});
  fm.num.at(1, 1) = UniPoly::constant(Rat(1));
  fm.den = up({0, 1});
  const Lattice bad{fm, false};
  CHECK(!multiplicatively_closed(eqn, bad));
  CHECK_THROWS_AS(mult_matrices(eqn, bad), ContractViolation);
}

TEST_CASE("lattice membership and equality") {
  const Lattice pw = power_lattice(2);
  CHECK(lattice_contains(pw, {up({0, 1}), UniPoly()}, UniPoly::constant(Rat(1))));
  CHECK(lattice_contains(pw, {UniPoly(), up({0, 0, 7})}, UniPoly::constant(Rat(1))));
  CHECK(!lattice_contains(pw, {UniPoly(), UniPoly::constant(Rat(1))}, up({0, 1})));
  CHECK(!lattice_contains(pw, {UniPoly::constant(Rat(1)), UniPoly()}, up({2, 1})));

  // Same module through a unimodular basis change.
  FracMatrix changed = FracMatrix::identity(2);
  changed.num.at(0, 1) = up({3, 2});
  CHECK(lattice_equal(pw, Lattice{changed, false}));

  FracMatrix strict;
  strict.num = PolyMatrix(2, 2);
  strict.num.at(0, 0) = up({0, 1});
  strict.num.at(1, 1) = UniPoly::constant(Rat(1));
  strict.den = up({0, 1});
  CHECK(!lattice_equal(pw, Lattice{strict, false}));
}

TEST_CASE("integral closure: worked examples") {
  // Squarefree discriminant: the power basis is already maximal.
  const UniPoly p = up({0, -1, 0, 1});  // x^3 - x
  const BiPoly hyper = BiPoly::monomial(Rat(1), 0, 2) - BiPoly::from_unipoly_base(p);
  const CoverEquation eq = make_integral(hyper);
  const Lattice cl = integral_closure(eq);
  CHECK(lattice_equal(cl, power_lattice(2)));
  CHECK(multiplicatively_closed(eq, cl));
  CHECK(lattice_equal(close_lattice(eq, cl), cl));

  // eta^2 - x^2 (x+1): the closure acquires eta/x.
  const UniPoly q = up({0, 0, 1, 1});  // x^2 (x+1)
  const BiPoly sing = BiPoly::monomial(Rat(1), 0, 2) - BiPoly::from_unipoly_base(q);
  const CoverEquation eq2 = make_integral(sing);
  const Lattice cl2 = integral_closure(eq2);
  FracMatrix want;
  want.num = PolyMatrix(2, 2);
  want.num.at(0, 0) = up({0, 1});
  want.num.at(1, 1) = UniPoly::constant(Rat(1));
  want.den = up({0, 1});
  CHECK(lattice_equal(cl2, Lattice{want, false}));
  CHECK(lattice_contains(cl2, {UniPoly(), UniPoly::constant(Rat(1))}, up({0, 1})));
  CHECK(!lattice_contains(cl2, {UniPoly(), UniPoly::constant(Rat(1))}, up({0, 0, 1})));
  CHECK(multiplicatively_closed(eq2, cl2));
  CHECK(lattice_equal(close_lattice(eq2, cl2), cl2));
  // eta/x satisfies T^2 - (x+1): its square lands on the base coordinate.
  // Check the discriminant accounting: index 1/x, index^2 = x^2 divides disc.
  const UniPoly idx = order_index(cl2);
  CHECK(idx == up({0, 1}));
  CHECK(ref_divides(idx * idx, eq2.discriminant()));

  // Rank one: the closure is trivially the power basis.
  const BiPoly line = BiPoly::monomial(Rat(1), 0, 1) - BiPoly::from_unipoly_base(up({0, 0, 1}));
  const CoverEquation eq1 = make_integral(line);
  CHECK(lattice_equal(integral_closure(eq1), power_lattice(1)));

  // Vanishing discriminant (double line): rejected.
  const BiPoly dbl = BiPoly::monomial(Rat(1), 0, 2);
  CHECK_THROWS_AS(integral_closure(make_integral(dbl)), InvalidInstance);
}

TEST_CASE("integral closure: idempotence, multiplicativity, index accounting on randoms") {
  std::mt19937_64 gen(42);
  int done = 0;
  while (done < 25) {
    const int m = static_cast<int>(draw(gen, 2, 3));
    CoverEquation eq;
    eq.m = m;
    eq.b.resize(static_cast<size_t>(m));
    eq.scale = UniPoly::constant(Rat(1));
    const bool plant = done % 2 == 1;  // half the samples get a forced x-defect
    for (int j = 1; j <= m; ++j) {
      UniPoly bj = random_poly(gen, 2, 3);
      if (plant) bj = bj.shifted(j);  // x^j divides b_j: eta/x is integral
      eq.b[static_cast<size_t>(j) - 1] = bj;
    }
    eq.chart = eq.monic_model().fiber_coeffs();
    if (eq.discriminant().is_zero()) continue;
    ++done;

    const Lattice cl = integral_closure(eq);
    // Contains the power order.
    for (int i = 0; i < m; ++i) {
      std::vector<UniPoly> unit(static_cast<size_t>(m));
      unit[static_cast<size_t>(i)] = UniPoly::constant(Rat(1));
      CHECK(lattice_contains(cl, unit, UniPoly::constant(Rat(1))));
    }
    // Ring, stable under re-closure.
    CHECK(multiplicatively_closed(eq, cl));
    CHECK(lattice_equal(close_lattice(eq, cl), cl));
    // Square of the order index divides the model discriminant.
    const UniPoly idx = order_index(cl);
    CHECK(ref_divides(idx * idx, eq.discriminant()));
    if (plant) {
      // The planted defect: eta/x must have been absorbed.
      std::vector<UniPoly> eta_over_x(static_cast<size_t>(m));
      eta_over_x[1] = UniPoly::constant(Rat(1));
      CHECK(lattice_contains(cl, eta_over_x, up({0, 1})));
    }
  }
}

TEST_CASE("mirror equation and closure at infinity") {
  // w^2 + x w + (x^2 + 1) on the degree-1 surface.
  std::vector<UniPoly> chart = {up({1, 0, 1}), up({0, 1}), UniPoly::constant(Rat(1))};
  const CoverEquation eq = make_integral(BiPoly::from_fiber_coeffs(chart));
  CHECK(infinity_shift(eq, 1) == 1);
  CHECK(infinity_shift(eq, 3) == 3);

  const CoverEquation mir = mirror_equation(eq, 1);
  CHECK(mir.m == 2);
  CHECK(mir.b[0] == UniPoly::constant(Rat(1)));  // x * (1/x')
  CHECK(mir.b[1] == up({1, 0, 1}));              // (x^2+1) * (1/x')^2

  const Lattice m1 = closure_at_infinity(eq, 1);
  CHECK(m1.at_infinity);
  CHECK(lattice_equal(m1, Lattice{FracMatrix::identity(2), true}));

  // Scale degree shifts the rescaling exponent: eta = x w has shift e + 1.
  std::vector<UniPoly> nonmonic = {UniPoly::constant(Rat(1)), UniPoly::constant(Rat(1)),
                                   up({0, 1})};
  const CoverEquation eq2 = make_integral(BiPoly::from_fiber_coeffs(nonmonic));
  CHECK(infinity_shift(eq2, 1) == 2);

  // Coefficient degree exceeding the mirror width: leading form vanishes at
  // the base point at infinity.
  const BiPoly toobig = BiPoly::monomial(Rat(1), 0, 2) - BiPoly::monomial(Rat(1), 3, 0);
  CHECK_THROWS_AS(mirror_equation(make_integral(toobig), 1), InvalidInstance);
}

TEST_CASE("transition matrix: identity, diagonal, invariance") {
  // Rank one: equal power-basis lattices glue by the identity.
  const BiPoly line = BiPoly::monomial(Rat(1), 0, 1) - BiPoly::from_unipoly_base(up({0, 0, 1}));
  const CoverEquation eq1 = make_integral(line);
  const LaurentMatrix t1 = transition_matrix(eq1, 2, integral_closure(eq1),
                                             closure_at_infinity(eq1, 2));
  CHECK(t1 == LaurentMatrix::identity(1));
  CHECK(splitting_type(t1) == SplittingType::of({0}));

  // Hyperelliptic double cover on the degree-1 surface: diag(1, 1/x).
  std::vector<UniPoly> chart = {up({1, 0, 1}), up({0, 1}), UniPoly::constant(Rat(1))};
  const CoverEquation eq = make_integral(BiPoly::from_fiber_coeffs(chart));
  const Lattice m0 = integral_closure(eq);
  const Lattice m1 = closure_at_infinity(eq, 1);
  const LaurentMatrix t = transition_matrix(eq, 1, m0, m1);
  CHECK(t.at(0, 0) == LaurentPoly(Rat(1)));
  CHECK(t.at(1, 1) == LaurentPoly::monomial(Rat(1), -1));
  CHECK(t.at(0, 1).is_zero());
  CHECK(t.at(1, 0).is_zero());
  CHECK(splitting_type(t) == SplittingType::of({0, -1}));

  // Unimodular change of the chart-zero basis leaves the type alone.
  FracMatrix shear = FracMatrix::identity(2);
  shear.num.at(0, 1) = up({1, 2, 1});
  Lattice m0b{m0.basis * shear, false};
  const LaurentMatrix tb = transition_matrix(eq, 1, m0b, m1);
  CHECK(splitting_type(tb) == SplittingType::of({0, -1}));

  // Chart-role misuse is rejected.
  CHECK_THROWS_AS(transition_matrix(eq, 1, m1, m0), std::invalid_argument);
}

TEST_CASE("point ideals and colon lattices") {
  // eta^2 - (x - 1), ramified rational point (1, 0).
  const BiPoly curve = BiPoly::monomial(Rat(1), 0, 2) - BiPoly::from_unipoly_base(up({-1, 1}));
  const CoverEquation eq = make_integral(curve);
  const Lattice ring = integral_closure(eq);
  CHECK(lattice_equal(ring, power_lattice(2)));

  const PointIdeal pt = point_ideal(eq, ring, Rat(1), Rat(0));
  FracMatrix want;
  want.num = PolyMatrix(2, 2);
  want.num.at(0, 0) = up({-1, 1});
  want.num.at(1, 1) = UniPoly::constant(Rat(1));
  want.den = UniPoly::constant(Rat(1));
  CHECK(lattice_equal(pt.lat, Lattice{want, false}));

  // Off-curve points and unseparated fiber values are rejected.
  CHECK_THROWS_AS(point_ideal(eq, ring, Rat(0), Rat(5)), InvalidInstance);
  // Over x0 = 2 the fiber is eta^2 = 1 with two points; eta = 1 separates.
  const PointIdeal pt2 = point_ideal(eq, ring, Rat(2), Rat(1));
  CHECK(pt2.x0 == Rat(2));

  // Colon by the point: sections with a simple pole, basis (1, eta/(x-1)).
  const Lattice col = colon_lattice(eq, ring, pt);
  FracMatrix cwant;
  cwant.num = PolyMatrix(2, 2);
  cwant.num.at(0, 0) = up({-1, 1});
  cwant.num.at(1, 1) = UniPoly::constant(Rat(1));
  cwant.den = up({-1, 1});
  CHECK(lattice_equal(col, Lattice{cwant, false}));
  // eta/(x-1) * eta = 1 stays in the ring: membership both ways.
  CHECK(lattice_contains(col, {UniPoly::constant(Rat(1)), UniPoly()},
                         UniPoly::constant(Rat(1))));
  CHECK(lattice_contains(col, {UniPoly(), UniPoly::constant(Rat(1))}, up({-1, 1})));

  // Colon by the unit ideal returns the lattice unchanged.
  const PointIdeal unit{ring, Rat(1)};
  CHECK(lattice_equal(colon_lattice(eq, ring, unit), ring));

  // Double colon: colength grows to two.
  const Lattice col2 = colon_lattice(eq, col, pt);
  FracMatrix change = col2.basis.inverse() * ring.basis;
  change.simplify();
  CHECK(change.den.is_constant());
  const UniPoly det2 = determinant(change.num);
  REQUIRE(!det2.is_zero());
  CHECK(det2.degree() == 2);
  FracMatrix change1 = col2.basis.inverse() * col.basis;
  change1.simplify();
  CHECK(change1.den.is_constant());  // col2 contains col
}

TEST_CASE("m=1 point ideal is the base maximal ideal") {
  const BiPoly line = BiPoly::monomial(Rat(1), 0, 1) - BiPoly::monomial(Rat(1), 1, 0);
  const CoverEquation eq = make_integral(line);  // eta - x
  const Lattice ring = integral_closure(eq);
  const PointIdeal pt = point_ideal(eq, ring, Rat(0), Rat(0));
  FracMatrix want;
  want.num = PolyMatrix(1, 1);
  want.num.at(0, 0) = up({0, 1});
  want.den = UniPoly::constant(Rat(1));
  CHECK(lattice_equal(pt.lat, Lattice{want, false}));
}
