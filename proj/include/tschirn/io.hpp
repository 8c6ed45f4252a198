#pragma once

#include <optional>
#include <string>

#include "tschirn/instances.hpp"
#include "tschirn/verify.hpp"

namespace tschirn {

// One instance file: Cox data, a plane-curve section, or both.  Suite
// goldens may carry an expected outcome ("match", "singular", "reducible",
// "tangency") and a force flag that skips the smoothness gate.
struct InstanceFile {
  std::optional<CoxCurve> cox;
  std::optional<PlaneCurve> plane;
  std::string expect = "match";
  bool force = false;
};

// Malformed documents raise std::invalid_argument (usage-level errors).
InstanceFile parse_instance_text(const std::string& text);
InstanceFile load_instance_file(const std::string& path);

std::string instance_to_text(const CoxCurve& x, bool pretty = false);
std::string plane_instance_to_text(const PlaneCurve& c, bool pretty = false);
std::string report_to_text(const VerifyReport& r, bool pretty = false);
std::string plane_report_to_text(const PlaneReport& r, bool pretty = false);
std::string error_to_text(const std::string& kind, const std::string& reason,
                          const std::string& witness, bool pretty = false);

}  // namespace tschirn
