// bfmlift: batch front end. One job per invocation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bfmlift/pipeline.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bfmlift::Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bfmlift::Error("cannot write " + path);
  out << text;
}

void print_diagnostics(const std::string& file, const std::vector<bfmlift::Diagnostic>& ds) {
  for (const auto& d : ds) std::cerr << file << ": " << to_string(d) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lift toric SYZ Lagrangians to the BFM space and verify the algebraic criteria"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bfmlift::kToolVersion));

  std::string job_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> novikov;
  std::optional<std::size_t> budget;
  bool assume_reduced = false;
  std::vector<std::string> emit;

  auto* run = app.add_subcommand("run", "run a job and emit its report");
  run->add_option("job", job_path, "job document (JSON)")->required();
  run->add_option("--seed", seed, "seed for random starts");
  run->add_option("--novikov", novikov, "Novikov coefficient mode")->check(CLI::IsMember({"formal", "unit"}));
  run->add_flag("--assume-reduced", assume_reduced, "record reducedness as a hypothesis instead of sampling");
  run->add_option("--budget", budget, "Groebner step budget (default: BFMLIFT_BUDGET or 2000000)")
      ->check(CLI::PositiveNumber);
  run->add_option("--emit", emit, "write the report to a .json path, or 'plots' for an SVG of critical values");

  auto* val = app.add_subcommand("validate", "check a job document without running any algebra");
  val->add_option("job", job_path, "job document (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? bfmlift::kExitPass : bfmlift::kExitInputError;
  }

  std::string text;
  try {
    text = slurp(job_path);
  } catch (const std::exception& e) {
    std::cerr << "bfmlift: " << e.what() << "\n";
    return bfmlift::kExitInputError;
  }

  if (*val) {
    auto diags = bfmlift::validate_job(text);
    if (diags.empty()) {
      std::cout << job_path << ": valid\n";
      return bfmlift::kExitPass;
    }
    print_diagnostics(job_path, diags);
    return bfmlift::kExitInputError;
  }

  bfmlift::JobSpec job;
  try {
    job = bfmlift::parse_job(text);
  } catch (const bfmlift::JobError& e) {
    print_diagnostics(job_path, e.diagnostics);
    return bfmlift::kExitInputError;
  }
  if (seed) job.options.seed = *seed;
  if (novikov) job.options.novikov = *novikov;
  if (budget) job.options.budget = *budget;
  if (assume_reduced) job.options.assume_reduced = true;

  bfmlift::Report report;
  try {
    report = bfmlift::run(job);
  } catch (const bfmlift::Error& e) {
    std::cerr << job_path << ": " << e.what() << "\n";
    return bfmlift::kExitInputError;
  }

  std::string json = bfmlift::dump_report(report);
  bool wrote_report = false;
  try {
    for (const auto& target : emit) {
      if (target == "plots") {
        std::string svg = std::filesystem::path(job_path).stem().string() + ".critical-values.svg";
        write_file(svg, bfmlift::critical_value_svg(report));
        std::cerr << "wrote " << svg << "\n";
      } else {
        write_file(target, json);
        wrote_report = true;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "bfmlift: " << e.what() << "\n";
    return bfmlift::kExitInputError;
  }
  if (wrote_report) std::cout << bfmlift::human_summary(report);
  else {
    std::cout << json;
    std::cerr << bfmlift::human_summary(report);
  }
  return report.summary.exit_code;
}
