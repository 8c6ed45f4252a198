#pragma once

#include <string>

#include "tschirn/birkhoff.hpp"
#include "tschirn/funcfield.hpp"
#include "tschirn/geometry.hpp"
#include "tschirn/instances.hpp"
#include "tschirn/splitting.hpp"

namespace tschirn {

struct VerifyOptions {
  bool force = false;  // skip the smoothness gate (negative-control plumbing)
};

struct VerifyReport {
  int m = 0, e = 0, delta = 0;
  BaseChange change;  // base normalization that was applied

  SplittingType predicted;
  SplittingType computed;
  bool splitting_match = false;

  long genus_splitting = 0;
  long genus_adjunction = 0;
  long genus_closed_form = 0;
  bool genus_match = false;

  long h0_structure = 0;  // independent oracle on the transition matrix; 1 = connected

  bool has_twist = false;  // delta = 1 route below
  SplittingType predicted_twist;
  SplittingType computed_twist;
  bool twist_match = false;
  bool twist_consistent = false;  // oracle h0 and degree bookkeeping for the twist

  long elapsed_ms = 0;

  bool ok() const {
    return splitting_match && genus_match && h0_structure == 1 &&
           (!has_twist || (twist_match && twist_consistent));
  }
};

// Full verification pipeline: validation, smoothness and connectedness
// gates, chartwise integral closures, transition matrix, factorization,
// comparison against the symbolic predictions, genus cross-checks, and (for
// delta = 1) the twisted route through the colon lattice at the base point.
// Throws InvalidInstance (exit-code-2 conditions) or ContractViolation.
VerifyReport verify_instance(const CoxCurve& x, const VerifyOptions& opts = {});

struct PlaneReport {
  PlaneCase tag = PlaneCase::NotThrough;
  int cover_degree = 0;
  int tangency = 0;  // Through case only
  VerifyReport report;
};

// Projection pipeline: plane smoothness gate, conversion to Cox data, then
// verify_instance on the resulting cover.
PlaneReport verify_plane(const PlaneCurve& c, const VerifyOptions& opts = {});

}  // namespace tschirn
