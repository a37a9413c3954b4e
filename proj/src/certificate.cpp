#include "disc24/certificate.hpp"

#include <sstream>

namespace disc24 {

Check compare_check(std::string name, std::string expected, std::string actual, Provenance provenance,
                    std::string ref) {
  const bool ok = expected == actual;
  return Check{std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(expected),
               std::move(actual), provenance, std::move(ref)};
}

Check bool_check(std::string name, bool ok, std::string expected, std::string actual, Provenance provenance,
                 std::string ref) {
  return Check{std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(expected),
               std::move(actual), provenance, std::move(ref)};
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Flagged: return "flagged";
  }
  return "fail";
}

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Literature: return "literature";
    case Provenance::Derived: return "derived";
    case Provenance::Trivial: return "trivial";
  }
  return "derived";
}

bool Certificate::passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t Certificate::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (c.status == s) ++n;
  return n;
}

nlohmann::json Certificate::stable_json() const {
  nlohmann::json doc;
  doc["suite"] = suite;
  doc["tool_version"] = tool_version;
  doc["config"] = config;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"status", status_name(c.status)},
                   {"expected", c.expected},
                   {"actual", c.actual},
                   {"provenance", provenance_name(c.provenance)},
                   {"paper_ref", c.paper_ref}});
  }
  doc["checks"] = std::move(arr);
  doc["summary"] = {{"pass", count(CheckStatus::Pass)},
                    {"fail", count(CheckStatus::Fail)},
                    {"flagged", count(CheckStatus::Flagged)},
                    {"status", passed() ? "pass" : "fail"}};
  return doc;
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json doc = stable_json();
  nlohmann::json t = nlohmann::json::object();
  for (const auto& [k, v] : timings_ms) t[k] = v;
  doc["timings"] = {{"milliseconds", t}, {"threads", threads}};
  return doc;
}

std::string render(const Certificate& certificate) {
  std::ostringstream os;
  os << "suite " << certificate.suite << " (" << certificate.tool_version << "): " << certificate.checks.size()
     << " checks, " << certificate.count(CheckStatus::Fail) << " failed, "
     << certificate.count(CheckStatus::Flagged) << " flagged\n";
  for (const auto& c : certificate.checks) {
    const char* tag = c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Fail ? "FAIL" : "FLAG";
    os << tag << "  " << c.name << "  expected=" << c.expected << "  actual=" << c.actual << "  [" << c.paper_ref
       << "]\n";
  }
  return os.str();
}

}  // namespace disc24
