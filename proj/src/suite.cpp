#include "tschirn/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <thread>

#include "json.hpp"
#include "tschirn/errors.hpp"
#include "tschirn/io.hpp"
#include "tschirn/verify.hpp"

namespace tschirn {

namespace {

// A task returns std::nullopt on pass or a failure detail.
struct Task {
  std::string name;
  std::function<std::optional<std::string>()> run;
};

std::string splitting_mismatch(const VerifyReport& r) {
  std::string out;
  if (!r.splitting_match)
    out += "splitting " + r.computed.str() + " != predicted " + r.predicted.str() + "; ";
  if (!r.genus_match) out += "genus triple disagrees; ";
  if (r.h0_structure != 1)
    out += "structure h0 oracle gave " + std::to_string(r.h0_structure) + "; ";
  if (r.has_twist && !r.twist_match)
    out += "twist " + r.computed_twist.str() + " != predicted " + r.predicted_twist.str() + "; ";
  if (r.has_twist && !r.twist_consistent) out += "twist cross-checks failed; ";
  return out.empty() ? "report not ok" : out;
}

std::optional<std::string> expect_report(const VerifyReport& r) {
  if (r.ok()) return std::nullopt;
  return splitting_mismatch(r);
}

std::optional<std::string> run_golden(const InstanceFile& f) {
  try {
    VerifyReport rep;
    if (f.plane) {
      PlaneReport pr = verify_plane(*f.plane, VerifyOptions{f.force});
      rep = pr.report;
    } else {
      rep = verify_instance(*f.cox, VerifyOptions{f.force});
    }
    if (f.expect == "match") return expect_report(rep);
    return "expected rejection (" + f.expect + ") but the instance verified";
  } catch (const InvalidInstance& ex) {
    const std::string& reason = ex.reason;
    if (f.expect == "singular" && reason.find("singular") != std::string::npos)
      return std::nullopt;
    if (f.expect == "reducible" && reason.find("not connected") != std::string::npos)
      return std::nullopt;
    if (f.expect == "tangency" && reason.find("tangency") != std::string::npos)
      return std::nullopt;
    return "rejected with \"" + std::string(ex.what()) + "\" but expected " + f.expect;
  }
}

void add_golden_tasks(std::vector<Task>& tasks, const std::string& data_dir) {
  if (data_dir.empty()) return;
  namespace fs = std::filesystem;
  const fs::path dir = fs::path(data_dir) / "goldens";
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    tasks.push_back({"golden-corpus", [dir]() -> std::optional<std::string> {
                       return "golden directory not found: " + dir.string();
                     }});
    return;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const fs::path& p : files) {
    tasks.push_back({"golden " + p.filename().string(), [p]() -> std::optional<std::string> {
                       InstanceFile f = load_instance_file(p.string());
                       return run_golden(f);
                     }});
  }
}

void add_random_tasks(std::vector<Task>& tasks, const SuiteOptions& opts) {
  const bool full = opts.scale == "full";
  const std::vector<int> ms = full ? std::vector<int>{2, 3, 4, 5} : std::vector<int>{2, 3};
  const std::vector<int> es = full ? std::vector<int>{1, 2, 3} : std::vector<int>{1, 2};
  const int seeds = full ? 3 : 1;
  for (int delta : {0, 1}) {
    if (opts.delta_filter >= 0 && delta != opts.delta_filter) continue;
    for (int m : ms)
      for (int e : es)
        for (int s = 1; s <= seeds; ++s) {
          const unsigned long long seed = opts.seed + static_cast<unsigned long long>(s) * 7919ULL;
          std::string name = "verify m=" + std::to_string(m) + " e=" + std::to_string(e) +
                             " delta=" + std::to_string(delta) + " seed=" + std::to_string(s);
          const long bound = opts.bound;
          tasks.push_back({std::move(name), [=]() -> std::optional<std::string> {
                             GeneratedInstance gi = random_instance(m, e, delta, seed, bound);
                             return expect_report(verify_instance(gi.curve));
                           }});
        }
  }
}

void add_plane_tasks(std::vector<Task>& tasks, const SuiteOptions& opts) {
  const bool full = opts.scale == "full";
  const std::vector<int> degrees = full ? std::vector<int>{3, 4, 5} : std::vector<int>{3};
  const int seeds = full ? 3 : 1;
  for (PlaneCase tag : {PlaneCase::NotThrough, PlaneCase::Through}) {
    const int delta_of_case = tag == PlaneCase::Through ? 1 : 0;
    if (opts.delta_filter >= 0 && delta_of_case != opts.delta_filter) continue;
    for (int n : degrees)
      for (int s = 1; s <= seeds; ++s) {
        const unsigned long long seed = opts.seed + static_cast<unsigned long long>(s) * 104729ULL;
        std::string name = std::string("plane degree=") + std::to_string(n) + " case=" +
                           (tag == PlaneCase::Through ? "b" : "a") + " seed=" + std::to_string(s);
        const long bound = opts.bound;
        tasks.push_back({std::move(name), [=]() -> std::optional<std::string> {
                           GeneratedPlane gp = random_plane_curve(n, tag, seed, bound);
                           PlaneReport pr = verify_plane(gp.curve);
                           return expect_report(pr.report);
                         }});
      }
  }
}

}  // namespace

SuiteResult run_suite(const SuiteOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Task> tasks;
  add_golden_tasks(tasks, opts.data_dir);
  add_random_tasks(tasks, opts);
  add_plane_tasks(tasks, opts);

  SuiteResult result;
  result.rows.resize(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      SuiteRow& row = result.rows[i];
      row.name = tasks[i].name;
      const auto r0 = std::chrono::steady_clock::now();
      try {
        std::optional<std::string> fail = tasks[i].run();
        row.pass = !fail.has_value();
        if (fail) row.detail = *fail;
      } catch (const std::exception& ex) {
        row.pass = false;
        row.detail = std::string("exception: ") + ex.what();
      }
      row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - r0)
                           .count();
      if (row.pass && opts.timeout_ms > 0 && row.elapsed_ms > opts.timeout_ms) {
        row.pass = false;
        row.detail = "exceeded time budget of " + std::to_string(opts.timeout_ms) + " ms";
      }
    }
  };
  const int jobs = std::max(1, opts.jobs);
  std::vector<std::thread> pool;
  for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (const SuiteRow& row : result.rows) result.all_pass = result.all_pass && row.pass;
  result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return result;
}

std::string suite_to_text(const SuiteResult& r, bool pretty) {
  nlohmann::json j;
  nlohmann::json rows = nlohmann::json::array();
  size_t passed = 0;
  for (const SuiteRow& row : r.rows) {
    rows.push_back({{"name", row.name},
                    {"pass", row.pass},
                    {"elapsed_ms", row.elapsed_ms},
                    {"detail", row.detail}});
    if (row.pass) ++passed;
  }
  j["rows"] = std::move(rows);
  j["counts"] = {{"pass", passed}, {"fail", r.rows.size() - passed}};
  j["all_pass"] = r.all_pass;
  j["elapsed_ms"] = r.elapsed_ms;
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace tschirn
