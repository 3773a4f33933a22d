#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fanocert/certify/fan_io.hpp"
#include "fanocert/certify/suites.hpp"
#include "fanocert/error.hpp"

using namespace fanocert;

int main(int argc, char** argv) {
  CLI::App app{"certify: exact certificates for the Fano threefold computations"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run a certificate suite");
  std::string suite;
  std::string format = "text";
  std::string out_path;
  certify::SuiteConfig cfg;
  run->add_option("suite", suite, "schubert, toric, veronese, hodge, numerology or all")
      ->required()
      ->check(CLI::IsMember(certify::suite_names()));
  run->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  run->add_option("--seed", cfg.seed, "seed for randomized suites");
  run->add_option("--trials", cfg.trials, "trials for randomized suites")->check(CLI::PositiveNumber);
  run->add_option("--degree-bound", cfg.degree_bound, "degree bound for graded checks")->check(CLI::Range(2u, 12u));
  run->add_option("--out", out_path, "write the report here instead of stdout");

  auto* fan = app.add_subcommand("fan", "fan utilities");
  fan->require_subcommand(1);
  auto* fan_check = fan->add_subcommand("check", "validate a fan file and report its properties");
  std::string fan_path;
  bool fan_json = false;
  fan_check->add_option("file", fan_path, "JSON fan file")->required();
  fan_check->add_flag("--json", fan_json, "print JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      auto report = certify::run_suite(suite, cfg);
      std::string body = format == "json" ? certify::to_json(report).dump(2) + "\n" : certify::to_text(report);
      if (out_path.empty()) {
        std::cout << body;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error("cannot write '" + out_path + "'");
        out << body;
      }
      return report.summary().fail == 0 ? 0 : 1;
    }
    if (*fan_check) {
      auto result = certify::check_fan(certify::load_fan(fan_path));
      std::cout << (fan_json ? certify::to_json(result).dump(2) + "\n" : certify::to_text(result));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
