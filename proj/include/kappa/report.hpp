#ifndef KAPPA_REPORT_HPP
#define KAPPA_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace kappa {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on success; counterexample / diagnostic otherwise
};

/// Outcome of one verification suite.  Serialization order is fixed (insertion
/// order of checks, fixed key order) so that identical runs produce identical
/// bytes; elapsed_ms is the only nondeterministic field and can be pinned to 0
/// by the caller.
struct Report {
  std::string suite;
  unsigned long seed = 0;
  long elapsed_ms = 0;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, detail});
  }

  std::string text() const {
    std::string out = "suite " + suite + " (seed " + std::to_string(seed) + ")\n";
    for (const auto& c : checks) {
      out += std::string(c.pass ? "  PASS  " : "  FAIL  ") + c.name;
      if (!c.detail.empty()) out += "  [" + c.detail + "]";
      out += "\n";
    }
    out += std::string(passed() ? "OK" : "FAILED") + " " + suite + "\n";
    return out;
  }

  nlohmann::ordered_json json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["elapsed_ms"] = elapsed_ms;
    j["passed"] = passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      nlohmann::ordered_json jc;
      jc["name"] = c.name;
      jc["pass"] = c.pass;
      jc["detail"] = c.detail;
      j["checks"].push_back(jc);
    }
    return j;
  }
};

}  // namespace kappa

#endif
