#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace skeinforge::verify {

struct CheckConfig {
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  /// Randomized cases per property; 0 keeps each suite's default.
  std::size_t cases = 0;
  /// Characteristic used for the prime-field ring mode.
  std::uint64_t prime = 5;
  std::size_t max_crossings = 24;
};

struct CheckReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  bool passed = true;
  /// First failing case, empty when passed.
  std::string counterexample;
};

/// skein, markov, star, lemma22, ordering, specialize, oracle
const std::vector<std::string>& check_suites();

/// Runs one suite, or every suite for "all". Throws ConfigError for unknown names.
std::vector<CheckReport> run_checks(std::string_view suite, const CheckConfig& config);

/// Default case counts.
inline constexpr std::size_t kSkeinCases = 200;
inline constexpr std::size_t kMarkovCases = 200;
inline constexpr std::size_t kPairCases = 100;

} // namespace skeinforge::verify
