// Command-line front end: parse a spec file, run one command, print a report.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "enrichkit/runner.hpp"

int main(int argc, char** argv) {
  using namespace enrichkit;
  CLI::App app{"Finite-model checks for enriched categories, presheaves and weighted colimits"};
  std::string positional, check, spec_path, report_path, format = "human";
  RunOptions options;
  app.add_option("command", positional, "validate | presheaves | yoneda | wcolim | universal | fuzz");
  app.add_option("--check", check, "same as the positional command");
  app.add_option("--spec", spec_path, "spec file (JSON)");
  app.add_option("--seed", options.seed, "seed for fuzz and random probes");
  app.add_option("--max-size", options.max_size, "largest object count drawn by fuzz")->check(CLI::Range(1, 6));
  app.add_option("--report", report_path, "also write the machine-readable report here");
  app.add_option("--format", format, "stdout format")->check(CLI::IsMember({"human", "machine"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!positional.empty() && !check.empty() && positional != check) {
    std::cerr << "error: command given twice ('" << positional << "' and '" << check << "')\n";
    return 2;
  }
  const std::string command = check.empty() ? positional : check;
  if (command.empty()) {
    std::cerr << "error: no command; try --help\n";
    return 2;
  }
  if (std::find(commands().begin(), commands().end(), command) == commands().end()) {
    std::cerr << "error: unknown command '" << command << "'\n";
    return 2;
  }

  std::optional<SpecFile> spec;
  try {
    if (!spec_path.empty()) {
      spec = parse_spec(spec_path);
    } else if (command != "fuzz") {
      std::cerr << "error: '" << command << "' needs --spec\n";
      return 2;
    }
  } catch (const Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.witness() << "\n";
    return is_resource_error(e.kind()) ? 3 : 2;
  }

  Report report;
  try {
    report = run(command, spec ? &*spec : nullptr, options);
  } catch (const Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.witness() << "\n";
    return is_resource_error(e.kind()) ? 3 : 2;
  }

  std::cout << (format == "machine" ? report.machine() : report.human());
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!(out << report.machine())) {
      std::cerr << "error: cannot write " << report_path << "\n";
      return 2;
    }
  }
  return report.exit_code();
}
