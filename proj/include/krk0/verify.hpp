#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "krk0/io.hpp"

namespace krk0 {

/// Bounds for the verification grids. Defaults reproduce the full sweep.
struct VerifyConfig {
  std::uint64_t max_cyclotomic = 200;  // cyclotomic identities for n <= this
  std::uint64_t max_mn = 60;           // cyclotomic pairs m < n <= this
  std::uint64_t max_prime = 13;        // primes for the finiteness and classification grids
  std::uint64_t grid_max_n = 3;     // exponents n in 1 - t^(p^n)
  std::uint64_t grid_max_index = 30;
  std::uint64_t grid_max_factors = 3;
  std::uint64_t max_f_alpha = 30;  // f(t) identities for alpha2 < alpha3 <= this
  std::uint64_t max_alpha = 12;    // classification grid alpha2 < alpha3 <= this
  std::uint64_t max_n = 2;         // classification grid exponents
  std::vector<std::uint64_t> rhos = {2, 3};
  std::uint64_t weight_samples = 500;
  std::uint64_t weight_max_n = 200;
  std::uint64_t weight_max_length = 6;
  std::int64_t weight_bound = 50;
  std::uint64_t snf_samples = 1000;
  std::uint64_t snf_max_dim = 8;
  std::int64_t snf_entry_bound = 1'000'000;
  std::uint64_t seed = 0x4b52304bULL;
  unsigned parallelism = 0;
  /// Test hook: name of a suite whose first check is deliberately falsified.
  std::optional<std::string> inject_fault;
};

struct SuiteResult {
  std::string name;
  int criterion = 0;
  std::string description;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  /// First failing case in enumeration order.
  std::optional<json> counterexample;
  /// Suite-specific observations that are reported but never fail the suite.
  json notes = json::object();

  bool ok() const noexcept { return checked == passed && !counterexample; }
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<SuiteResult> suites;
  bool ok() const;
};

/// Suite names in run order.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const VerifyConfig& config);

/// Runs every suite. Results are independent of config.parallelism.
VerifyReport run_verify(const VerifyConfig& config);

json config_to_json(const VerifyConfig& config);
json report_to_json(const VerifyReport& report);
std::string report_to_text(const VerifyReport& report);

}  // namespace krk0
