// Command-line verification harness.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "assoc/harness.hpp"

int main(int argc, char** argv) {
  assoc::Config cfg;
  std::string selector = "all", format = "text", out;
  bool no_timings = false;

  std::string suites = "all";
  for (const auto& s : assoc::suite_names()) suites += "|" + s;

  CLI::App app{"Runs the verification suites and prints a report."};
  app.add_option("suite", selector, "One of " + suites)->capture_default_str();
  app.add_option("--q-order", cfg.q_order, "q-expansion order")->capture_default_str()->check(CLI::Range(4u, 4096u));
  app.add_option("--series-order", cfg.series_order, "formal series order")
      ->capture_default_str()
      ->check(CLI::Range(2u, 64u));
  app.add_option("--tol", cfg.tol, "numeric tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--trials", cfg.trials, "random trials per property")->capture_default_str()->check(CLI::Range(1u, 100000u));
  app.add_option("--seed", cfg.seed, "seed")->capture_default_str();
  app.add_option("--format", format, "text or json")->capture_default_str()->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out, "write the report here instead of stdout");
  app.add_flag("--no-timings", no_timings, "report millis as 0 for byte-identical output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }
  if (!assoc::is_selector(selector)) {
    std::cerr << "unknown suite '" << selector << "'\n" << app.help();
    return 2;
  }

  assoc::SuiteReport report = assoc::run_suite(selector, cfg);
  assoc::FormatOptions opt{!no_timings};
  std::string text = format == "json" ? assoc::to_json(report, cfg, opt) : assoc::to_text(report, cfg, opt);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
    f << text;
  }
  return report.passed() ? 0 : 1;
}
