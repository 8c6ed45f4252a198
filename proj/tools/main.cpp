#include <cctype>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tschirn/errors.hpp"
#include "tschirn/geometry.hpp"
#include "tschirn/io.hpp"
#include "tschirn/suite.hpp"
#include "tschirn/verify.hpp"

namespace {

using namespace tschirn;
using nlohmann::json;

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

// Class grammar: signed terms over the symbols H (tautological), F (fiber),
// Y0 (the negative section), e.g. "3H", "2H+F", "Y0-2F".
DivisorClass parse_class(const std::string& text, int e) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  DivisorClass out{0, 0};
  size_t i = 0;
  bool any = false;
  long sign = 1;
  while (i < s.size()) {
    if (s[i] == '+') {
      sign = 1;
      ++i;
      continue;
    }
    if (s[i] == '-') {
      sign = -1;
      ++i;
      continue;
    }
    long coef = 1;
    bool digits = false;
    long acc = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      acc = acc * 10 + (s[i] - '0');
      ++i;
      digits = true;
    }
    if (digits) coef = acc;
    if (i >= s.size()) throw std::invalid_argument("divisor class term lacks a symbol: " + text);
    if (s[i] == 'H') {
      out.a += sign * coef;
      out.b += sign * coef * e;
      ++i;
    } else if (s[i] == 'F') {
      out.b += sign * coef;
      ++i;
    } else if (s[i] == 'Y' && i + 1 < s.size() && s[i + 1] == '0') {
      out.a += sign * coef;
      i += 2;
    } else {
      throw std::invalid_argument("unknown divisor class symbol in: " + text);
    }
    sign = 1;
    any = true;
  }
  if (!any) throw std::invalid_argument("empty divisor class: " + text);
  return out;
}

json class_to_json(DivisorClass d) { return {{"a", d.a}, {"b", d.b}}; }

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

int exit_for_report(bool ok) { return ok ? 0 : 3; }

struct PredictArgs {
  int m = 2, e = 1, delta = 0, gamma = 0;
  bool pretty = false;
};

int cmd_predict(const PredictArgs& a) {
  if (a.m < 2 || a.e < 1 || a.delta < 0 || a.delta > 1 || a.gamma < 0)
    throw std::invalid_argument("need m >= 2, e >= 1, delta in {0,1}, gamma >= 0");
  const CoverCase cc = a.delta == 0 ? CoverCase::A : CoverCase::B;
  json j;
  j["m"] = a.m;
  j["e"] = a.e;
  j["delta"] = a.delta;
  j["gamma"] = a.gamma;
  j["pushforward"] = predict_pushforward(a.m, a.e, a.delta, a.gamma).d;
  j["twisted_pushforward"] = predict_twisted_pushforward(a.m, a.e, a.delta, a.gamma).d;
  j["complement"] = predict_complement(a.m, a.e, a.delta, a.gamma).d;
  j["hypothesis"] =
      hypothesis_check(a.m, a.e, a.delta, a.gamma) == Hypothesis::Guaranteed ? "guaranteed"
                                                                             : "unknown";
  j["genus"] = genus_formula(a.m, a.e, a.gamma, cc);
  if (a.e >= 2 * a.gamma - 1) {
    const ConeNumerics cn = cone_numerics(a.m, a.e, a.gamma, cc);
    j["cone"] = {{"r", cn.r},
                 {"base_degree", cn.base_degree},
                 {"image_degree", cn.image_degree},
                 {"through_vertex", cn.through_vertex}};
  } else {
    j["cone"] = nullptr;
  }
  std::cout << dump(j, a.pretty) << "\n";
  return 0;
}

struct VerifyArgs {
  std::string file;
  int m = 0, e = 0, delta = 0;
  unsigned long long seed = 1;
  long bound = 3;
  bool force = false, pretty = false;
};

int cmd_verify(const VerifyArgs& a) {
  VerifyOptions opts;
  opts.force = a.force;
  if (!a.file.empty()) {
    InstanceFile f = load_instance_file(a.file);
    opts.force = opts.force || f.force;
    if (f.cox) {
      VerifyReport rep = verify_instance(*f.cox, opts);
      std::cout << report_to_text(rep, a.pretty) << "\n";
      return exit_for_report(rep.ok());
    }
    PlaneReport rep = verify_plane(*f.plane, opts);
    std::cout << plane_report_to_text(rep, a.pretty) << "\n";
    return exit_for_report(rep.report.ok());
  }
  if (a.m < 2 || a.e < 1) throw std::invalid_argument("generator mode needs --m >= 2 and --e >= 1");
  GeneratedInstance gi = random_instance(a.m, a.e, a.delta, a.seed, a.bound);
  VerifyReport rep = verify_instance(gi.curve, opts);
  std::cout << report_to_text(rep, a.pretty) << "\n";
  return exit_for_report(rep.ok());
}

struct PlaneArgs {
  std::string file;
  int degree = 0;
  std::string which = "a";
  unsigned long long seed = 1;
  long bound = 3;
  bool force = false, pretty = false;
};

int cmd_plane(const PlaneArgs& a) {
  VerifyOptions opts;
  opts.force = a.force;
  if (!a.file.empty()) {
    InstanceFile f = load_instance_file(a.file);
    if (!f.plane) throw std::invalid_argument("file has no plane section: " + a.file);
    opts.force = opts.force || f.force;
    PlaneReport rep = verify_plane(*f.plane, opts);
    std::cout << plane_report_to_text(rep, a.pretty) << "\n";
    return exit_for_report(rep.report.ok());
  }
  if (a.degree < 2) throw std::invalid_argument("generator mode needs --degree >= 2");
  const PlaneCase tag = a.which == "b" ? PlaneCase::Through : PlaneCase::NotThrough;
  GeneratedPlane gp = random_plane_curve(a.degree, tag, a.seed, a.bound);
  PlaneReport rep = verify_plane(gp.curve, opts);
  std::cout << plane_report_to_text(rep, a.pretty) << "\n";
  return exit_for_report(rep.report.ok());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact splitting-type prediction and verification for covers of the line"};
  app.require_subcommand(1);

  PredictArgs pa;
  CLI::App* predict = app.add_subcommand("predict", "symbolic splitting predictions");
  predict->add_option("--m", pa.m, "cover degree")->required();
  predict->add_option("--e", pa.e, "surface degree")->required();
  predict->add_option("--delta", pa.delta, "twist degree (0 or 1)");
  predict->add_option("--gamma", pa.gamma, "base genus");
  predict->add_flag("--pretty", pa.pretty, "indented output");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "verify an instance end to end");
  verify->add_option("--file", va.file, "instance file");
  verify->add_option("--m", va.m, "cover degree (generator mode)");
  verify->add_option("--e", va.e, "surface degree (generator mode)");
  verify->add_option("--delta", va.delta, "twist degree (generator mode)");
  verify->add_option("--seed", va.seed, "generator seed");
  verify->add_option("--bound", va.bound, "coefficient bound");
  verify->add_flag("--force", va.force, "skip the smoothness gate");
  verify->add_flag("--pretty", va.pretty, "indented output");

  PlaneArgs la;
  CLI::App* plane = app.add_subcommand("plane", "project a plane curve and verify");
  plane->add_option("--file", la.file, "plane curve file");
  plane->add_option("--degree", la.degree, "curve degree (generator mode)");
  plane->add_option("--case", la.which, "projection case: a (off the curve) or b (on it)")
      ->check(CLI::IsMember({"a", "b"}));
  plane->add_option("--seed", la.seed, "generator seed");
  plane->add_option("--bound", la.bound, "coefficient bound");
  plane->add_flag("--force", la.force, "skip the smoothness gate");
  plane->add_flag("--pretty", la.pretty, "indented output");

  std::string d1 = "H", d2 = "H", cls = "H";
  int ge = 1, ggamma = 0, pk = 0;
  bool gpretty = false;
  CLI::App* intersectc = app.add_subcommand("intersect", "intersection pairing of two classes");
  intersectc->add_option("--d1", d1, "first class (e.g. H, 3H+F, Y0)");
  intersectc->add_option("--d2", d2, "second class");
  intersectc->add_option("--e", ge, "surface degree")->required();
  intersectc->add_option("--gamma", ggamma, "base genus");
  intersectc->add_flag("--pretty", gpretty, "indented output");

  CLI::App* adjunction = app.add_subcommand("adjunction", "adjunction genus of a class");
  adjunction->add_option("--class", cls, "divisor class (e.g. 3H)");
  adjunction->add_option("--e", ge, "surface degree")->required();
  adjunction->add_option("--gamma", ggamma, "base genus");
  adjunction->add_flag("--pretty", gpretty, "indented output");

  CLI::App* pushforward = app.add_subcommand("pushforward", "fiber-power pushforward degrees");
  pushforward->add_option("--k", pk, "fiber power")->required();
  pushforward->add_option("--e", ge, "surface degree")->required();
  pushforward->add_flag("--pretty", gpretty, "indented output");

  SuiteOptions so;
  bool spretty = false;
  int sdelta = -1;
  CLI::App* suite = app.add_subcommand("suite", "run the verification matrix");
  suite->add_option("--jobs", so.jobs, "worker threads");
  suite->add_option("--timeout-ms", so.timeout_ms, "per-row time budget");
  suite->add_option("--bound", so.bound, "coefficient bound");
  suite->add_option("--seed", so.seed, "base seed");
  suite->add_option("--delta", sdelta, "restrict to one twist family (0 or 1)");
  suite->add_option("--data-dir", so.data_dir, "golden corpus directory");
  suite->add_option("--scale", so.scale, "matrix size: smoke or full")
      ->check(CLI::IsMember({"smoke", "full"}));
  suite->add_flag("--pretty", spretty, "indented output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (predict->parsed()) return cmd_predict(pa);
    if (verify->parsed()) return cmd_verify(va);
    if (plane->parsed()) return cmd_plane(la);
    if (intersectc->parsed()) {
      const SurfaceModel s(ggamma, ge);
      const DivisorClass c1 = parse_class(d1, ge), c2 = parse_class(d2, ge);
      json j{{"d1", class_to_json(c1)},
             {"d2", class_to_json(c2)},
             {"e", ge},
             {"gamma", ggamma},
             {"product", intersect(c1, c2, s)}};
      std::cout << dump(j, gpretty) << "\n";
      return 0;
    }
    if (adjunction->parsed()) {
      const SurfaceModel s(ggamma, ge);
      const DivisorClass c1 = parse_class(cls, ge);
      json j{{"class", class_to_json(c1)},
             {"e", ge},
             {"gamma", ggamma},
             {"genus", adjunction_genus(c1, s)}};
      std::cout << dump(j, gpretty) << "\n";
      return 0;
    }
    if (pushforward->parsed()) {
      const PushforwardDegrees pf = pushforward_Ok(pk, ge);
      json j{{"k", pk}, {"e", ge}, {"direct", pf.direct}, {"r1", pf.r1}};
      std::cout << dump(j, gpretty) << "\n";
      return 0;
    }
    if (suite->parsed()) {
      if (!suite->count("--scale")) so.scale = env_or("TSCHIRN_SUITE_SCALE", "smoke");
      if (!suite->count("--data-dir")) so.data_dir = env_or("TSCHIRN_DATA_DIR", "data");
      so.delta_filter = sdelta;
      const SuiteResult r = run_suite(so);
      std::cout << suite_to_text(r, spretty) << "\n";
      return r.all_pass ? 0 : 3;
    }
    throw std::invalid_argument("no subcommand selected");
  } catch (const InvalidInstance& ex) {
    std::cout << error_to_text("invalid_instance", ex.reason, ex.witness) << "\n";
    return 2;
  } catch (const ContractViolation& ex) {
    std::cout << error_to_text("contract_violation", ex.what(), "") << "\n";
    return 3;
  } catch (const std::invalid_argument& ex) {
    std::cout << error_to_text("usage", ex.what(), "") << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cout << error_to_text("internal", ex.what(), "") << "\n";
    return 3;
  }
}
