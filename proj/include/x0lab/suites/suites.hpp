#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace x0lab::suites {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

struct CheckResult {
  std::string id;
  std::string claim_ref;
  Status status = Status::fail;
  std::string details;
  long elapsed_ms = 0;
};

struct SuiteConfig {
  std::vector<long> primes;  // empty: per-suite defaults
  std::vector<long> discriminants;  // from --disc, case inferred
  std::vector<long> case1;          // asserted to be case 1 at p = 5
  std::vector<long> case2;
  long precision_bits = 0;
  std::optional<std::filesystem::path> cache_dir;
  std::optional<long> g_E;
  std::optional<std::vector<long>> ordinary_genera;
  bool reproducible = false;  // elapsed_ms reported as 0
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON document with keys primes, discriminants.case1, discriminants.case2
/// (nested or dotted), precision_bits, cache_dir, g_E, ordinary_genera.
/// Throws ConfigError on malformed input or unknown keys.
SuiteConfig parse_config(const std::string& text);

struct SuiteReport {
  std::string suite;
  std::string version;
  std::string config;  // compact JSON echo
  std::vector<CheckResult> results;  // sorted by id
  bool pass() const;
};

/// stable-model, maps, ss, cm, quat, ledger, all.
const std::vector<std::string>& suite_names();

/// Throws ConfigError for an unknown suite. Individual check failures
/// never abort the run.
SuiteReport run_suite(const std::string& suite, const SuiteConfig& config);

std::string to_json(const SuiteReport& report);
std::string to_text(const SuiteReport& report);

std::string config_json(const SuiteConfig& config);

const char* version();

}  // namespace x0lab::suites
