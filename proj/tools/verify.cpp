// Command-line harness: runs the numerical verification suites and writes
// report.json plus per-table CSV files.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccx/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"numerical verification suites for the boundary calculus"};
  app.set_config("--config", "", "flat key=value config file; flags win");

  std::string suite = "all";
  std::string out_dir;
  std::string format = "json";
  ccx::SuiteConfig cfg;
  app.add_option("--suite", suite,
                 "spaces|boundary|metrics|flow|circumcenter|extension|"
                 "holder|qi|all")
      ->check(CLI::IsMember({"spaces", "boundary", "metrics", "flow",
                             "circumcenter", "extension", "holder", "qi",
                             "all"}));
  app.add_option("--seed", cfg.seed, "master seed");
  app.add_option("--fan", cfg.fan, "unit-tangent fan size")->check(CLI::PositiveNumber);
  app.add_option("--grid", cfg.grid, "boundary grid size")->check(CLI::PositiveNumber);
  app.add_option("--pairs", cfg.pairs, "sample pairs for distortion suites")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", out_dir, "output directory for report and tables");
  app.add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::vector<std::string> names;
  if (suite == "all")
    names = ccx::suite_names();
  else
    names.push_back(suite);

  std::vector<ccx::SuiteReport> reports;
  try {
    reports = ccx::run_suites(names, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  nlohmann::json j = ccx::report_json(reports, cfg);
  bool pass = j["pass"].get<bool>();

  if (!out_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(fs::path(out_dir) / "tables");
    std::ofstream rf(fs::path(out_dir) / "report.json");
    rf << j.dump(2) << "\n";
    for (const auto& r : reports)
      for (const auto& t : r.tables) {
        std::ofstream tf(fs::path(out_dir) / "tables" / (t.name + ".csv"));
        tf << ccx::table_csv(t);
      }
  }

  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      for (const auto& a : r.assertions)
        std::printf("%s,%s,%.17g,%.17g,%.17g,%s\n", a.suite.c_str(),
                    a.name.c_str(), a.bound, a.worst, a.tolerance,
                    a.pass ? "pass" : "FAIL");
    }
  }

  for (const auto& r : reports)
    std::cerr << r.suite << ": " << (r.pass() ? "pass" : "FAIL") << "\n";
  return pass ? 0 : 1;
}
