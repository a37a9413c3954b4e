#pragma once

// Verification suites: each returns the checks of one area; run_suite
// assembles them into a certificate.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "disc24/certificate.hpp"
#include "disc24/errors.hpp"

namespace disc24 {

inline constexpr std::uint64_t kDefaultSamplingPrime = 10007;
inline constexpr std::uint64_t kDefaultEnumerationPrime = 31;
/// Largest prime whose P^5 stays under the enumeration limit.
inline constexpr std::uint64_t kMaxEnumerationPrime = 61;
/// Smallest prime the interpolation checks accept.
inline constexpr std::uint64_t kMinGeometryPrime = 31;
inline constexpr std::size_t kMinResidualPoints = 200;

struct SuiteConfig {
  std::string suite = "all";
  std::optional<std::uint64_t> prime;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  int retries = 5;
};

const std::vector<std::string>& suite_names();

std::vector<Check> lattice_suite();
/// `trials` random exp(B) invariance checks drawn from `seed`.
std::vector<Check> mukai_suite(std::uint64_t seed, int trials = 200);
std::vector<Check> hilbert_suite();
std::vector<Check> scroll_suite();
/// Sampling and interpolation checks over F_p.
std::vector<Check> geometry_sampling_suite(std::uint64_t p, std::uint64_t seed, int retries);
/// Full enumeration of Y cap X over F_p, p <= 61.
std::vector<Check> residuation_suite(std::uint64_t p, std::uint64_t seed, int retries, unsigned threads);

/// Prime used for the enumeration part of the geometry suite.
std::uint64_t enumeration_prime_for(std::optional<std::uint64_t> prime);

/// Throws ConfigError for an unknown suite, a composite prime, or a prime
/// below 31 for geometry.
void validate(const SuiteConfig& config);

/// Runs the suite; check names are prefixed with their area.
Certificate run_suite(const SuiteConfig& config);

}  // namespace disc24
