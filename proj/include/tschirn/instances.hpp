#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tschirn/bipoly.hpp"
#include "tschirn/rat.hpp"

namespace tschirn {

// Binary form of degree deg in (s, t); co[k] multiplies s^(deg-k) t^k.
struct BinForm {
  int deg = 0;
  std::vector<Rat> co;  // size deg + 1

  static BinForm zero(int deg);
  // Homogenize a polynomial of degree <= deg to a degree-deg form.
  static BinForm from_unipoly(const UniPoly& p, int deg);

  bool is_zero() const;
  Rat eval(const Rat& s, const Rat& t) const;
  UniPoly at_zero() const;      // c(x, 1), the chart-at-zero dehomogenization
  UniPoly at_infinity() const;  // c(1, x')
  BinForm translated(const Rat& q) const;  // c(s + q t, t)
  BinForm swapped() const;                 // c(t, s)

  friend bool operator==(const BinForm& a, const BinForm& b) {
    return a.deg == b.deg && a.co == b.co;
  }
};

// Curve of class m H + delta F on the degree-e surface, in Cox coordinates:
// F = sum_i c_i(s, t) u^(m-i) v^i with deg c_i = (m-i) e + delta.
struct CoxCurve {
  int m = 2, e = 1, delta = 0;
  std::vector<BinForm> c;  // size m + 1

  void validate() const;  // degree bookkeeping, c_0 and c_m nonzero

  BiPoly chart_w0() const;  // sum c_i(x,1) w^i       (leading coeff c_m)
  BiPoly chart_z0() const;  // sum c_i(x,1) z^(m-i)   (leading coeff c_0)
  BiPoly chart_w1() const;  // sum c_i(1,x') w^i
  BiPoly chart_z1() const;  // sum c_i(1,x') z^(m-i)
};

std::array<BiPoly, 4> chart_equations(const CoxCurve& x);

struct SmoothnessVerdict {
  bool smooth = true;
  std::string chart;  // chart that witnessed the failure
  UniPoly witness;    // nonconstant: its roots are singular base values; zero: unlocated
  std::string note;
};

// Decision procedure for the emptiness of {F = dF/dbase = dF/dfiber = 0}
// over the algebraic closure on one affine chart.
SmoothnessVerdict singular_base_witness(const BiPoly& f);

// Runs the chart engine on all four charts.
SmoothnessVerdict smoothness_check(const CoxCurve& x);

// Root of the linear form c_m for delta = 1; nullopt when it lies at the
// base point at infinity.
std::optional<Rat> base_point(const CoxCurve& x);

// Base coordinate change moving the base point to x = 0: an (s,t) swap when
// q sat at infinity, else the shift x -> x + shift.  Old coordinates are
// recovered as x_old = x_new + shift (after the optional swap).
struct BaseChange {
  bool swapped = false;
  Rat shift;
};

std::pair<CoxCurve, BaseChange> normalize_base_point(const CoxCurve& x);

struct GeneratedInstance {
  CoxCurve curve;  // already base-point-normalized for delta = 1
  int rejections = 0;
};

// Rejection-samples integer-coefficient forms in [-bound, bound] until the
// instance is valid and smooth (and, for delta = 1, the base point is
// separated on the fiber).  Deterministic in (seed, m, e, delta).
GeneratedInstance random_instance(int m, int e, int delta, unsigned long long seed, long bound);

// Homogeneous ternary form of degree deg; key (a, b) multiplies
// X^a Y^b Z^(deg-a-b).
struct TriPoly {
  int deg = 0;
  std::map<std::pair<int, int>, Rat> t;

  void set(int a, int b, const Rat& c);
  Rat coeff(int a, int b) const;
  bool is_zero() const { return t.empty(); }
  Rat eval(const Rat& x, const Rat& y, const Rat& z) const;

  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator+(const TriPoly& a, const TriPoly& b);

  // G(M v): linear substitution by columns of m acting on new coordinates.
  TriPoly substituted(const std::array<std::array<Rat, 3>, 3>& m) const;

  // Affine chart with variable `which` (0 = X, 1 = Y, 2 = Z) set to 1; the
  // remaining two variables become (base, fiber) in index order.
  BiPoly dehomog(int which) const;

  // g_j(X, Y): the degree-j coefficient form of Z^(deg-j).
  BinForm z_coefficient(int j) const;
};

struct PlaneCurve {
  TriPoly g;
  std::array<Rat, 3> p;     // projection center
  std::array<Rat, 3> line;  // target line, as the coefficients of its form

  void validate() const;  // g nonzero, P not on L
};

// Chart engine on the three affine charts of the plane.
SmoothnessVerdict plane_smoothness(const TriPoly& g);

// The form after the projective change mapping P to (0:0:1) and L to Z = 0.
TriPoly normalize_plane(const PlaneCurve& c);

// Intersection multiplicity of the curve with its tangent line at P.
// Requires P on the curve and the curve smooth at P.
int tangency_order(const PlaneCurve& c);

enum class PlaneCase { NotThrough, Through };

struct PlaneToCox {
  CoxCurve cox;                // on the e = 1 surface
  PlaneCase tag = PlaneCase::NotThrough;
  int cover_degree = 0;        // m (case a) or m - 1 (case b)
};

// Projection from P onto L as Cox data: (m, delta=0) when P is off the
// curve, (m-1, delta=1) when P lies on it with tangency exactly two.
// Tangency three or more, or a singular P, raises InvalidInstance.
PlaneToCox plane_to_cox(const PlaneCurve& c);

struct GeneratedPlane {
  PlaneCurve curve;
  int rejections = 0;
};

// Random smooth plane curve of the given degree with P = (0:0:1) and
// L = {Z = 0}; Through forces P on the curve with simple tangency.
GeneratedPlane random_plane_curve(int degree, PlaneCase tag, unsigned long long seed, long bound);

}  // namespace tschirn
