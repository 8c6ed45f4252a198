#pragma once

#include <utility>

#include "tschirn/rat.hpp"
#include "tschirn/splitting.hpp"

namespace tschirn {

// Decomposable ruled surface P(O + O(-e)) over a smooth base curve of genus
// gamma, with an auxiliary effective twist divisor of degree delta upstairs.
struct SurfaceModel {
  int gamma = 0;  // base genus
  int e = 1;      // degree of the twisting line bundle; the -e section exists
  int delta = 0;  // degree of the base twist divisor (0 or 1 in verified runs)

  SurfaceModel(int gamma_, int e_, int delta_ = 0);

  int canonical_base_degree() const { return 2 * gamma - 2; }
};

// Numerical class a*Y0 + b*F: Y0 the section of self-intersection -e, F a fiber.
struct DivisorClass {
  long a = 0;
  long b = 0;

  friend DivisorClass operator+(DivisorClass l, DivisorClass r) { return {l.a + r.a, l.b + r.b}; }
  friend DivisorClass operator-(DivisorClass l, DivisorClass r) { return {l.a - r.a, l.b - r.b}; }
  friend bool operator==(DivisorClass l, DivisorClass r) { return l.a == r.a && l.b == r.b; }
  DivisorClass scaled(long k) const { return {k * a, k * b}; }
};

inline DivisorClass section_class() { return {1, 0}; }          // Y0
inline DivisorClass fiber_class() { return {0, 1}; }            // F
inline DivisorClass tautological_class(const SurfaceModel& s) { return {1, s.e}; }  // H

// Whether the secant curve misses (A) or passes through (B) the cone vertex;
// equivalently, class mH (A) versus mH + F (B).
enum class CoverCase { A, B };

enum class Hypothesis { Guaranteed, Unknown };

struct ConeNumerics {
  int r = 0;                   // ambient projective dimension of the cone
  int base_degree = 0;         // degree of the embedded base curve
  long image_degree = 0;       // degree of the secant curve's image
  bool through_vertex = false;
};

struct PushforwardDegrees {
  std::vector<int> direct;  // degrees of the direct image summands
  std::vector<int> r1;      // degrees of the first higher direct image summands
};

struct RecognizedCover {
  bool consistent = false;
  CoverCase cover_case = CoverCase::A;
  long m = 0;
};

// Bilinear intersection form with Y0^2 = -e, Y0.F = 1, F^2 = 0.
long intersect(DivisorClass d1, DivisorClass d2, const SurfaceModel& s);

// K = -2*Y0 + (2*gamma - 2 - e)*F; meets every fiber in -2.
DivisorClass canonical_class(const SurfaceModel& s);

// g with 2g - 2 = (K + D).D.
long adjunction_genus(DivisorClass d, const SurfaceModel& s);

// Closed genus forms for the two secant families.
long genus_formula(long m, int e, int gamma, CoverCase c);

// Exact roots (ascending) of the adjunction constraint on the Y0-coefficient
// of a degree-(m e) secant class; one root is always m.
std::pair<Rat, Rat> adjunction_quadratic_roots(long m, int e, int gamma);

// Inverts the degree/genus forms: given the image curve's degree and genus,
// decide which family it belongs to and recover the cover degree.
RecognizedCover recognize_cover(long d, long g, int e, int gamma, bool through_vertex);

// Chartwise pushforwards of the k-th fiber power for the rank-2 split bundle
// O + O(e): direct image Sym^k for k >= 0, first higher image for k <= -2.
PushforwardDegrees pushforward_Ok(int k, int e);

// Predicted splitting of the pushforward of the structure sheaf: {0} and
// -ke-delta for k = 1..m-1.
SplittingType predict_pushforward(long m, int e, int delta, int gamma);

// Predicted splitting of the pushforward of the one-pole twist: {0, -e} and
// -ke-delta for k = 2..m-1.
SplittingType predict_twisted_pushforward(long m, int e, int delta, int gamma);

// Complement of the trivial summand: -ke-delta for k = 1..m-1 (rank m-1).
SplittingType predict_complement(long m, int e, int delta, int gamma);

// Degree criterion for nonspeciality of every intermediate twist; never
// asserts failure, only guarantee or ignorance.
Hypothesis hypothesis_check(long m, int e, int delta, int gamma);

// Numerics of the cone image: ambient dimension e - gamma + 1, image degree
// m e (vertex avoided) or m e + 1 (vertex hit once).
ConeNumerics cone_numerics(long m, int e, int gamma, CoverCase c);

// h1 of the direct image of the structure sheaf read off the splitting; the
// independent genus oracle.  Requires a zero entry and no positive entries.
long genus_from_splitting(const SplittingType& t);

}  // namespace tschirn
