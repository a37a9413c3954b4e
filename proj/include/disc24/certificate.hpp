#pragma once

// Check records and the certificate document emitted by the verifier.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace disc24 {

enum class CheckStatus { Pass, Fail, Flagged };

/// Where an expected value comes from: a value printed in the source
/// literature, an independent derivation, or an identity/control case.
enum class Provenance { Literature, Derived, Trivial };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string expected;
  std::string actual;
  Provenance provenance = Provenance::Derived;
  std::string paper_ref = "invented";
};

/// Pass iff expected == actual.
Check compare_check(std::string name, std::string expected, std::string actual, Provenance provenance,
                    std::string ref);
/// Pass iff ok.
Check bool_check(std::string name, bool ok, std::string expected, std::string actual, Provenance provenance,
                 std::string ref);

std::string_view status_name(CheckStatus s);
std::string_view provenance_name(Provenance p);

struct Certificate {
  std::string suite;
  std::string tool_version;
  nlohmann::json config;  // echo, minus anything run-dependent
  std::vector<Check> checks;
  /// Run-dependent data: wall times per suite and the thread count.
  std::map<std::string, double> timings_ms;
  unsigned threads = 1;

  bool passed() const;
  std::size_t count(CheckStatus s) const;

  /// Full document, timings included.
  nlohmann::json to_json() const;
  /// Document without the timings block; byte-stable for a given config.
  nlohmann::json stable_json() const;
};

/// One line per check after a header line.
std::string render(const Certificate& certificate);

}  // namespace disc24
