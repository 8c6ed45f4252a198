#pragma once

#include <vector>

#include "tschirn/bipoly.hpp"
#include "tschirn/polymat.hpp"

namespace tschirn {

// Monic integral model eta^m + b_1 eta^(m-1) + ... + b_m of a degree-m cover
// of the affine base line, obtained from a chart equation by the
// leading-coefficient substitution eta = scale(x) * w.
struct CoverEquation {
  int m = 0;
  std::vector<UniPoly> b;      // b[j-1] multiplies eta^(m-j), j = 1..m
  UniPoly scale;               // eta = scale * w
  std::vector<UniPoly> chart;  // original chart coefficients of w^0..w^m

  BiPoly monic_model() const;    // fiber variable = eta
  UniPoly discriminant() const;  // resultant of the model and its eta-derivative
};

// Builds the monic model from a chart equation sum_i a_i(x) w^i. Requires
// fiber degree >= 1 and a nonzero leading fiber coefficient.
CoverEquation make_integral(const BiPoly& chart_equation);

// Free module of rank m over the chart's polynomial ring inside the cover's
// function algebra, presented by basis columns in the eta power basis.
// at_infinity marks the base ring Q[x'] with x' = 1/x; such a basis matrix
// is written in x' (and in powers of the rescaled eta' = x^(-shift) eta).
struct Lattice {
  FracMatrix basis;
  bool at_infinity = false;
};

// Multiplication-by-eta matrix on the power basis (companion matrix).
PolyMatrix companion_matrix(const CoverEquation& eq);

// Multiplication matrices of the basis elements acting on the lattice,
// entries in the base polynomial ring; throws ContractViolation when the
// lattice is not closed under these products (not an order).
std::vector<PolyMatrix> mult_matrices(const CoverEquation& eq, const Lattice& l);

// Exact membership of (num / den), given in power-basis coordinates.
bool lattice_contains(const Lattice& l, const std::vector<UniPoly>& num, const UniPoly& den);

// Equality as modules (mutual containment); tags must agree.
bool lattice_equal(const Lattice& a, const Lattice& b);

// Whether all pairwise products of basis elements stay inside the lattice.
bool multiplicatively_closed(const CoverEquation& eq, const Lattice& l);

// Integral closure of the base polynomial ring in the cover's function
// algebra: Round-2-style enlargement of the power-basis order, localized at
// the squarefree-deficient part of the discriminant, with dynamic evaluation
// on the moduli (split on zero divisors). Reducible-but-reduced inputs yield
// the normalization of the product; a vanishing discriminant raises
// InvalidInstance.
Lattice integral_closure(const CoverEquation& eq);

// The same enlargement worklist started from a given order; exposed for the
// idempotence self-check (running it on a closure returns it unchanged).
Lattice close_lattice(const CoverEquation& eq, Lattice start);

// Exponent of the fiber rescaling across base charts on the degree-e
// surface: eta' = x^(-shift) * eta with shift = e + deg(scale).
int infinity_shift(const CoverEquation& eq, int e);

// The cover equation over x' = 1/x for eta' (coefficient j reversed to width
// j * shift). Requires the model to be normalized so the widths bound the
// degrees, i.e. the leading form must not vanish at the base point at
// infinity; otherwise InvalidInstance.
CoverEquation mirror_equation(const CoverEquation& eq, int e);

// Integral closure over Q[x'] of the mirror equation, tagged at_infinity.
Lattice closure_at_infinity(const CoverEquation& eq, int e);

// Basis of an infinity lattice rewritten in the chart-zero power basis of
// eta; entries acquire monomial denominators through x' = 1/x and the
// diagonal rescaling by x^(-i*shift).
FracMatrix ambient_from_infinity(const FracMatrix& b1, int shift);

// Gluing matrix T = (basis of m0)^(-1) * (ambient basis of m1). Laurent
// entries and unit determinant are asserted; failure (a non-maximal lattice
// or singular input slipping through) raises ContractViolation.
LaurentMatrix transition_matrix(const CoverEquation& eq, int e, const Lattice& m0,
                                const Lattice& m1);

// Elements of a ring lattice vanishing at the rational point (x0, eta0).
struct PointIdeal {
  Lattice lat;  // basis in the ambient power basis
  Rat x0;
};

// The point must lie on the cover and be separated from the other points
// over x0 by its eta value (unique evaluation functional up to scale);
// otherwise InvalidInstance.
PointIdeal point_ideal(const CoverEquation& eq, const Lattice& ring, const Rat& x0,
                       const Rat& eta0);

// {g in the function algebra : g * P inside M}: sections with at most a
// simple pole at the point of P, relative to the target lattice M.
Lattice colon_lattice(const CoverEquation& eq, const Lattice& m, const PointIdeal& p);

}  // namespace tschirn
