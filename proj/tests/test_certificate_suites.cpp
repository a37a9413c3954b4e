#include <doctest.h>

#include "disc24/errors.hpp"
#include "disc24/suites.hpp"

using namespace disc24;

TEST_CASE("check helpers and rendering") {
  const Check a = compare_check("a", "1", "1", Provenance::Literature, "ref a");
  const Check b = compare_check("b", "1", "2", Provenance::Derived, "ref b");
  CHECK(a.status == CheckStatus::Pass);
  CHECK(b.status == CheckStatus::Fail);
  CHECK(bool_check("c", true, "x", "y", Provenance::Trivial, "r").status == CheckStatus::Pass);

  Certificate cert;
  cert.suite = "demo";
  cert.tool_version = "0";
  cert.checks = {a, b};
  cert.timings_ms["demo"] = 1.5;
  cert.threads = 3;
  CHECK_FALSE(cert.passed());
  CHECK(cert.count(CheckStatus::Fail) == 1);
  const std::string text = render(cert);
  CHECK(text.find("PASS  a  expected=1  actual=1  [ref a]") != std::string::npos);
  CHECK(text.find("FAIL  b") != std::string::npos);

  const auto stable = cert.stable_json();
  CHECK_FALSE(stable.contains("timings"));
  CHECK(stable["checks"][0]["provenance"] == "literature");
  CHECK(stable["checks"][1]["status"] == "fail");
  CHECK(stable["summary"]["status"] == "fail");
  const auto full = cert.to_json();
  CHECK(full["timings"]["threads"] == 3);
  CHECK(full["timings"]["milliseconds"]["demo"] == 1.5);
}

TEST_CASE("config validation") {
  SuiteConfig c;
  CHECK_NOTHROW(validate(c));
  auto code_of = [](const SuiteConfig& cfg) {
    try {
      validate(cfg);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  c.suite = "nope";
  CHECK(code_of(c) == ErrorCode::ConfigError);
  c.suite = "geometry";
  c.prime = 91;
  CHECK(code_of(c) == ErrorCode::ConfigError);
  c.prime = 29;
  CHECK(code_of(c) == ErrorCode::ConfigError);
  c.suite = "hilbert";
  CHECK_NOTHROW(validate(c));
  c.suite = "geometry";
  c.prime = 37;
  CHECK_NOTHROW(validate(c));
  c.retries = -1;
  CHECK(code_of(c) == ErrorCode::ConfigError);
  CHECK(enumeration_prime_for(std::nullopt) == 31);
  CHECK(enumeration_prime_for(37) == 37);
  CHECK(enumeration_prime_for(10007) == 31);
}

TEST_CASE("exact suites pass") {
  for (const char* name : {"lattice", "mukai", "hilbert", "scroll"}) {
    SuiteConfig c;
    c.suite = name;
    const Certificate cert = run_suite(c);
    CAPTURE(name);
    CHECK(cert.passed());
    for (const auto& check : cert.checks) CHECK(check.name.rfind(std::string(name) + ".", 0) == 0);
  }
}

TEST_CASE("scroll suite flags exactly two entries") {
  SuiteConfig c;
  c.suite = "scroll";
  const Certificate cert = run_suite(c);
  CHECK(cert.count(CheckStatus::Flagged) == 2);
}

TEST_CASE("geometry sampling at another prime") {
  const auto checks = geometry_sampling_suite(1009, 0, 5);
  for (const auto& c : checks) {
    INFO(c.name << ": " << c.actual);
    CHECK(c.status == CheckStatus::Pass);
  }
}
