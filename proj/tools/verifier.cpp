// Command-line front end: runs a suite and writes its certificate.
//
//   verifier [SUITE] [--prime P] [--seed S] [--threads N] [--retries R]
//            [--format json|text] [--out FILE]
//
// Exit status: 0 all checks pass (flags allowed), 1 some check failed,
// 2 bad configuration.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "disc24/errors.hpp"
#include "disc24/suites.hpp"

namespace {

unsigned default_threads() {
  if (const char* env = std::getenv("VERIFIER_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and finite-field checks for the discriminant-24 construction"};
  app.set_version_flag("--version", DISC24_VERSION);

  disc24::SuiteConfig config;
  config.threads = default_threads();
  std::uint64_t prime = 0;
  std::string format = "json";
  std::string out;

  app.add_option("suite,--suite", config.suite, "lattice | mukai | hilbert | scroll | geometry | all")
      ->capture_default_str();
  app.add_option("--prime", prime, "field characteristic for geometry (default 10007)");
  app.add_option("--seed", config.seed, "seed for every random choice")->capture_default_str();
  app.add_option("--threads", config.threads, "enumeration threads (default VERIFIER_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--retries", config.retries, "retries for degenerate random choices")->capture_default_str();
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--out", out, "write the certificate here; the table still goes to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (app.count("--prime")) config.prime = prime;

  disc24::Certificate cert;
  try {
    cert = disc24::run_suite(config);
  } catch (const disc24::Error& e) {
    std::cerr << "verifier: " << e.what() << '\n';
    return e.code() == disc24::ErrorCode::ConfigError ? 2 : 1;
  }

  const std::string body = format == "json" ? cert.to_json().dump(2) + "\n" : disc24::render(cert);
  if (out.empty()) {
    std::cout << body;
  } else {
    std::ofstream file(out);
    if (!file) {
      std::cerr << "verifier: cannot write " << out << '\n';
      return 2;
    }
    file << body;
    std::cout << disc24::render(cert);
  }
  return cert.passed() ? 0 : 1;
}
