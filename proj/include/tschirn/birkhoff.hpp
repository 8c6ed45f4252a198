#pragma once

#include "tschirn/polymat.hpp"
#include "tschirn/splitting.hpp"

namespace tschirn {

// T = P * diag(x^{d_i}) * Q with P unimodular over Q[x] (constant nonzero
// determinant, polynomial entries) and Q unimodular over Q[1/x] (entries
// supported in nonpositive exponents, determinant a nonzero constant times
// a power of x).  Exponents are sorted descending.
struct BirkhoffFactorization {
  PolyMatrix p;
  std::vector<int> exponents;
  LaurentMatrix q;

  SplittingType splitting() const { return SplittingType::of(exponents); }
};

// Requires t square with monomial (unit) determinant; throws
// std::invalid_argument otherwise.  The refactorization identity
// p * diag * q == t is re-checked exactly on every call and a failure
// raises ContractViolation.  iteration_cap <= 0 selects the default bound.
BirkhoffFactorization birkhoff_factorize(const LaurentMatrix& t, long iteration_cap = 0);

SplittingType splitting_type(const LaurentMatrix& t);

struct CohomologyDims {
  long h0 = 0;
  long h1 = 0;
  friend bool operator==(const CohomologyDims& a, const CohomologyDims& b) {
    return a.h0 == b.h0 && a.h1 == b.h1;
  }
};

// Dimensions of the cohomology of (sum of line bundles of degrees d_i)
// twisted by degree k.
CohomologyDims cohomology_dims(const SplittingType& s, int k);

// Factorization-free section count for the bundle glued by t, twisted by k:
// counts polynomial vectors v (the chart-0 side) whose transport
// x^{-k} * t^{-1} * v has only nonpositive exponents (the chart-infinity
// side is regular).  Works directly from a linear system over Q.
// k is accepted within |k| <= window; window <= 0 selects the default
// max(|min_exp|, |max_exp|) + 2.  Outside it throws std::invalid_argument.
long h0_oracle(const LaurentMatrix& t, int k, int window = 0);

}  // namespace tschirn
