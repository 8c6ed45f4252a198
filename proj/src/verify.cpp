#include "tschirn/verify.hpp"

#include <chrono>

#include "tschirn/errors.hpp"

namespace tschirn {

namespace {

// Exactly one summand with a nonnegative degree, and that degree is zero:
// h0 of the pushforward is 1, i.e. the cover is connected.
void connectedness_gate(const SplittingType& s) {
  int nonneg = 0;
  bool zero_seen = false;
  for (int d : s.d) {
    if (d >= 0) {
      ++nonneg;
      zero_seen = zero_seen || d == 0;
    }
  }
  if (nonneg != 1 || !zero_seen)
    throw InvalidInstance("cover is not connected (reducible instance)",
                          "splitting " + s.str());
}

}  // namespace

VerifyReport verify_instance(const CoxCurve& input, const VerifyOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  input.validate();

  VerifyReport rep;
  rep.m = input.m;
  rep.e = input.e;
  rep.delta = input.delta;

  auto [x, change] = normalize_base_point(input);
  rep.change = change;

  if (!opts.force) {
    SmoothnessVerdict v = smoothness_check(x);
    if (!v.smooth) {
      std::string w = v.note + " on chart " + v.chart;
      if (!v.witness.is_zero() && v.witness.degree() >= 1)
        w += ", base locus " + v.witness.str();
      throw InvalidInstance("instance is singular", w);
    }
  }

  if (x.delta == 1 && x.c[static_cast<size_t>(x.m - 1)].eval(Rat(0), Rat(1)).is_zero())
    throw InvalidInstance("fiber coordinate does not separate the base point",
                          "c_(m-1) vanishes at the base point");

  const CoverEquation eq = make_integral(x.chart_w0());
  const Lattice m0 = integral_closure(eq);
  const Lattice m1 = closure_at_infinity(eq, x.e);
  const LaurentMatrix t = transition_matrix(eq, x.e, m0, m1);
  rep.computed = splitting_type(t);
  connectedness_gate(rep.computed);
  rep.h0_structure = h0_oracle(t, 0);

  rep.predicted = predict_pushforward(x.m, x.e, x.delta, 0);
  rep.splitting_match = rep.predicted == rep.computed;

  rep.genus_splitting = genus_from_splitting(rep.computed);
  rep.genus_adjunction =
      adjunction_genus(DivisorClass{x.m, static_cast<long>(x.m) * x.e + x.delta},
                       SurfaceModel(0, x.e, x.delta));
  rep.genus_closed_form =
      genus_formula(x.m, x.e, 0, x.delta == 0 ? CoverCase::A : CoverCase::B);
  rep.genus_match = rep.genus_splitting == rep.genus_adjunction &&
                    rep.genus_adjunction == rep.genus_closed_form;

  if (x.delta == 1) {
    rep.has_twist = true;
    // The base point sits on the contracted section: over x = 0 the monic
    // model degenerates to eta^(m-1) * (eta + c_(m-1)(0)), so the point is
    // the unique one with a nonzero eta value.
    const Rat eta0 = -x.c[static_cast<size_t>(x.m - 1)].eval(Rat(0), Rat(1));
    const PointIdeal p = point_ideal(eq, m0, Rat(0), eta0);
    const Lattice twisted = colon_lattice(eq, m0, p);
    const LaurentMatrix tt = transition_matrix(eq, x.e, twisted, m1);
    rep.computed_twist = splitting_type(tt);
    rep.predicted_twist = predict_twisted_pushforward(x.m, x.e, x.delta, 0);
    rep.twist_match = rep.predicted_twist == rep.computed_twist;
    const long h0_twist = h0_oracle(tt, 0);
    rep.twist_consistent = h0_twist == cohomology_dims(rep.computed_twist, 0).h0 &&
                           rep.computed_twist.sum() == rep.computed.sum() + 1;
  }

  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

PlaneReport verify_plane(const PlaneCurve& c, const VerifyOptions& opts) {
  c.validate();
  if (!opts.force) {
    SmoothnessVerdict v = plane_smoothness(c.g);
    if (!v.smooth) {
      std::string w = v.note + " on chart " + v.chart;
      if (!v.witness.is_zero() && v.witness.degree() >= 1)
        w += ", base locus " + v.witness.str();
      throw InvalidInstance("plane curve is singular", w);
    }
  }
  PlaneToCox conv = plane_to_cox(c);
  PlaneReport out;
  out.tag = conv.tag;
  out.cover_degree = conv.cover_degree;
  if (conv.tag == PlaneCase::Through) out.tangency = tangency_order(c);
  // The plane gate already certified smoothness of the curve upstairs.
  VerifyOptions inner = opts;
  inner.force = true;
  out.report = verify_instance(conv.cox, inner);
  return out;
}

}  // namespace tschirn
