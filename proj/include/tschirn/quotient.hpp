#pragma once

#include <vector>

#include "tschirn/unipoly.hpp"

namespace tschirn {

// Raised when an inversion attempt modulo g meets a zero divisor. Carries a
// proper monic factorization g = g1 * g2 with gcd(g1, g2) = 1 (g squarefree),
// so the computation can be redone on each factor.
struct SplitEvent {
  UniPoly g1, g2;
};

// Arithmetic in Q[x]/(g) for a monic squarefree modulus g treated as if it
// were prime. Inversion of a zero divisor throws SplitEvent.
class QuotientCtx {
 public:
  explicit QuotientCtx(const UniPoly& g);

  const UniPoly& modulus() const { return g_; }

  UniPoly reduce(const UniPoly& p) const;
  UniPoly add(const UniPoly& a, const UniPoly& b) const { return reduce(a + b); }
  UniPoly sub(const UniPoly& a, const UniPoly& b) const { return reduce(a - b); }
  UniPoly mul(const UniPoly& a, const UniPoly& b) const { return reduce(a * b); }
  bool is_zero(const UniPoly& p) const { return reduce(p).is_zero(); }

  // Inverse of a unit. Throws std::domain_error on zero, SplitEvent on a
  // nonzero zero divisor.
  UniPoly invert(const UniPoly& p) const;

  // Reduced p when p is a unit or zero; splits when p is a zero divisor.
  // Lets callers establish "unit or zero" before structural decisions.
  UniPoly unit_or_zero(const UniPoly& p) const;

 private:
  UniPoly g_;
};

// Basis of the column kernel of the matrix over Q[x]/(g), entries reduced.
// rows is a row-major rectangular matrix. Throws SplitEvent when the rank
// differs between the prime factors of the modulus.
std::vector<std::vector<UniPoly>> kernel_mod(const std::vector<std::vector<UniPoly>>& rows,
                                             const QuotientCtx& ctx);

// Dense polynomial in the fiber variable with coefficients in Q[x]/(g).
using FiberPoly = std::vector<UniPoly>;

// Strips leading coefficients that vanish mod g; splits when a leading
// coefficient is a zero divisor (degree would differ between factors).
void fiber_normalize(FiberPoly& p, const QuotientCtx& ctx);

// Monic gcd in (Q[x]/(g))[w] by the Euclidean algorithm with dynamic
// evaluation; gcd(p, 0) = monic p. Empty result encodes gcd(0, 0).
FiberPoly fiber_gcd_mod(FiberPoly a, FiberPoly b, const QuotientCtx& ctx);

}  // namespace tschirn
