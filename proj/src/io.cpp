#include "tschirn/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tschirn {

namespace {

using nlohmann::json;

Rat rat_from_json(const json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  throw std::invalid_argument("rational values must be \"p/q\" strings or integers");
}

json rat_to_json(const Rat& r) { return r.str(); }

CoxCurve cox_from_json(const json& j) {
  CoxCurve x;
  x.m = j.at("m").get<int>();
  x.e = j.at("e").get<int>();
  x.delta = j.value("delta", 0);
  const json& co = j.at("coefficients");
  if (!co.is_object()) throw std::invalid_argument("coefficients must be an object keyed by index");
  x.c.resize(static_cast<size_t>(x.m) + 1);
  for (int i = 0; i <= x.m; ++i) {
    const std::string key = std::to_string(i);
    if (!co.contains(key)) throw std::invalid_argument("missing coefficient c_" + key);
    const json& arr = co.at(key);
    if (!arr.is_array()) throw std::invalid_argument("coefficient c_" + key + " must be an array");
    const int deg = (x.m - i) * x.e + x.delta;
    if (arr.size() > static_cast<size_t>(deg) + 1)
      throw std::invalid_argument("coefficient c_" + key + " has more than " +
                                  std::to_string(deg + 1) + " entries");
    std::vector<Rat> coeffs;
    coeffs.reserve(arr.size());
    for (const json& v : arr) coeffs.push_back(rat_from_json(v));
    x.c[static_cast<size_t>(i)] = BinForm::from_unipoly(UniPoly(std::move(coeffs)), deg);
  }
  return x;
}

json cox_to_json(const CoxCurve& x) {
  json j;
  j["m"] = x.m;
  j["e"] = x.e;
  j["delta"] = x.delta;
  json co = json::object();
  for (int i = 0; i <= x.m; ++i) {
    const UniPoly p = x.c[static_cast<size_t>(i)].at_zero();
    json arr = json::array();
    for (int k = 0; k <= x.c[static_cast<size_t>(i)].deg; ++k) arr.push_back(rat_to_json(p.coeff(k)));
    co[std::to_string(i)] = std::move(arr);
  }
  j["coefficients"] = std::move(co);
  return j;
}

PlaneCurve plane_from_json(const json& j) {
  PlaneCurve c;
  c.g.deg = j.at("degree").get<int>();
  if (c.g.deg < 1) throw std::invalid_argument("plane degree must be positive");
  const json& terms = j.at("terms");
  if (!terms.is_array()) throw std::invalid_argument("plane terms must be an array");
  for (const json& t : terms) {
    if (!t.is_array() || t.size() != 3)
      throw std::invalid_argument("each plane term must be [a, b, coefficient]");
    const int a = t[0].get<int>();
    const int b = t[1].get<int>();
    c.g.set(a, b, c.g.coeff(a, b) + rat_from_json(t[2]));
  }
  auto triple = [](const json& arr, const char* what) {
    if (!arr.is_array() || arr.size() != 3)
      throw std::invalid_argument(std::string(what) + " must be an array of three rationals");
    return std::array<Rat, 3>{rat_from_json(arr[0]), rat_from_json(arr[1]), rat_from_json(arr[2])};
  };
  c.p = j.contains("point") ? triple(j.at("point"), "point")
                            : std::array<Rat, 3>{Rat(0), Rat(0), Rat(1)};
  c.line = j.contains("line") ? triple(j.at("line"), "line")
                              : std::array<Rat, 3>{Rat(0), Rat(0), Rat(1)};
  return c;
}

json plane_to_json_obj(const PlaneCurve& c) {
  json j;
  j["degree"] = c.g.deg;
  json terms = json::array();
  for (const auto& [key, coeff] : c.g.t)
    terms.push_back(json::array({key.first, key.second, rat_to_json(coeff)}));
  j["terms"] = std::move(terms);
  j["point"] = json::array({rat_to_json(c.p[0]), rat_to_json(c.p[1]), rat_to_json(c.p[2])});
  j["line"] = json::array({rat_to_json(c.line[0]), rat_to_json(c.line[1]), rat_to_json(c.line[2])});
  return j;
}

json splitting_to_json(const SplittingType& s) { return json(s.d); }

json report_to_json(const VerifyReport& r) {
  json j;
  j["m"] = r.m;
  j["e"] = r.e;
  j["delta"] = r.delta;
  j["splitting"] = splitting_to_json(r.computed);
  j["predicted"] = splitting_to_json(r.predicted);
  j["splitting_match"] = r.splitting_match;
  j["genus"] = {{"splitting", r.genus_splitting},
                {"adjunction", r.genus_adjunction},
                {"closed_form", r.genus_closed_form},
                {"match", r.genus_match}};
  j["h0_structure"] = r.h0_structure;
  if (r.has_twist) {
    j["twist"] = {{"splitting", splitting_to_json(r.computed_twist)},
                  {"predicted", splitting_to_json(r.predicted_twist)},
                  {"match", r.twist_match},
                  {"consistent", r.twist_consistent}};
  } else {
    j["twist"] = nullptr;
  }
  j["base_change"] = {{"swapped", r.change.swapped}, {"shift", rat_to_json(r.change.shift)}};
  j["elapsed_ms"] = r.elapsed_ms;
  j["ok"] = r.ok();
  return j;
}

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace

InstanceFile parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("malformed instance document: ") + ex.what());
  }
  try {
    InstanceFile f;
    if (j.contains("coefficients")) f.cox = cox_from_json(j);
    if (j.contains("plane")) f.plane = plane_from_json(j.at("plane"));
    if (!f.cox && !f.plane)
      throw std::invalid_argument("instance document has neither Cox data nor a plane section");
    f.expect = j.value("expect", std::string("match"));
    f.force = j.value("force", false);
    return f;
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("malformed instance document: ") + ex.what());
  }
}

InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

std::string instance_to_text(const CoxCurve& x, bool pretty) {
  return dump(cox_to_json(x), pretty);
}

std::string plane_instance_to_text(const PlaneCurve& c, bool pretty) {
  json j;
  j["plane"] = plane_to_json_obj(c);
  return dump(j, pretty);
}

std::string report_to_text(const VerifyReport& r, bool pretty) {
  return dump(report_to_json(r), pretty);
}

std::string plane_report_to_text(const PlaneReport& r, bool pretty) {
  json j = report_to_json(r.report);
  j["case"] = r.tag == PlaneCase::NotThrough ? "a" : "b";
  j["cover_degree"] = r.cover_degree;
  if (r.tag == PlaneCase::Through) j["tangency"] = r.tangency;
  return dump(j, pretty);
}

std::string error_to_text(const std::string& kind, const std::string& reason,
                          const std::string& witness, bool pretty) {
  json j;
  j["error"] = {{"kind", kind}, {"reason", reason}, {"witness", witness}};
  return dump(j, pretty);
}

}  // namespace tschirn
