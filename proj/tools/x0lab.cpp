#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "x0lab/suites/suites.hpp"

namespace {

struct Flags {
  std::vector<long> primes;
  std::vector<long> discs;
  long precision = -1;
  std::string cache_dir;
  std::string report;
  std::string format = "text";
  std::string config;
  bool reproducible = false;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--p", f.primes, "prime(s) to check")->delimiter(',');
  cmd->add_option("--disc", f.discs, "discriminants, comma separated")->delimiter(',');
  cmd->add_option("--precision", f.precision, "minimum working precision in bits")->check(CLI::NonNegativeNumber);
  cmd->add_option("--cache-dir", f.cache_dir, "class polynomial cache directory");
  cmd->add_option("--report", f.report, "write the report to this file");
  cmd->add_option("--format", f.format, "report format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--config", f.config, "JSON config file");
  cmd->add_flag("--reproducible", f.reproducible, "report elapsed_ms as 0");
}

int run(const std::string& suite, const Flags& f) {
  using namespace x0lab::suites;
  SuiteConfig cfg;
  try {
    if (!f.config.empty()) {
      std::ifstream in(f.config);
      if (!in) throw ConfigError("cannot read config " + f.config);
      std::ostringstream ss;
      ss << in.rdbuf();
      cfg = parse_config(ss.str());
    }
  } catch (const ConfigError& e) {
    std::cerr << "x0lab: " << e.what() << "\n";
    return 2;
  }
  if (!f.primes.empty()) cfg.primes = f.primes;
  if (!f.discs.empty()) cfg.discriminants = f.discs;
  if (f.precision >= 0) cfg.precision_bits = f.precision;
  if (!f.cache_dir.empty()) cfg.cache_dir = f.cache_dir;
  cfg.reproducible = f.reproducible;

  SuiteReport rep;
  try {
    rep = run_suite(suite, cfg);
  } catch (const ConfigError& e) {
    std::cerr << "x0lab: " << e.what() << "\n";
    return 2;
  }
  const std::string body = f.format == "json" ? to_json(rep) : to_text(rep);
  if (!f.report.empty()) {
    std::ofstream out(f.report);
    if (!out) {
      std::cerr << "x0lab: cannot write " << f.report << "\n";
      return 2;
    }
    out << body;
    std::cout << to_text(rep);
  } else {
    std::cout << body;
  }
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for the stable model of X0(125)"};
  app.set_version_flag("--version", std::string(x0lab::suites::version()));
  app.require_subcommand(1);

  Flags verify_flags, cm_flags, ledger_flags;
  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a suite");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(x0lab::suites::suite_names()));
  add_flags(verify, verify_flags);

  auto* cm = app.add_subcommand("cm", "CM class polynomial checks");
  cm->require_subcommand(1);
  auto* cm_check = cm->add_subcommand("check", "run the cm suite");
  add_flags(cm_check, cm_flags);

  auto* ledger = app.add_subcommand("ledger", "run the genus ledger");
  add_flags(ledger, ledger_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (verify->parsed()) return run(suite, verify_flags);
  if (cm_check->parsed()) return run("cm", cm_flags);
  return run("ledger", ledger_flags);
}
