#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace ccx {

struct SuiteConfig {
  std::uint64_t seed = 7;
  int fan = 128;
  int grid = 256;
  int pairs = 500;
};

// One verified claim: pass iff worst <= bound + tolerance.  `bound` is the
// asserted bound (often 0 for residuals), `tolerance` the numerical
// allowance, `worst` the worst observed value.
struct AssertionRecord {
  std::string suite;
  std::string name;
  std::string ref;  // short identifier of the claim being checked
  double bound = 0.0;
  double worst = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct SuiteReport {
  std::string suite;
  std::vector<AssertionRecord> assertions;
  std::vector<Table> tables;
  bool pass() const;
};

// Ordered canonical suite names accepted by run_suite / the CLI.
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names,
                                    const SuiteConfig& cfg);

nlohmann::json report_json(const std::vector<SuiteReport>& reports,
                           const SuiteConfig& cfg);
std::string table_csv(const Table& t);

}  // namespace ccx
