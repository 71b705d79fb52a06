#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cybe/report.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw cybe::InputError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "stdout" || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw cybe::InputError("cannot open output file '" + path + "'");
  out << body;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for the constant classical Yang-Baxter equation in Lie algebras of dim <= 3"};
  app.require_subcommand(1);

  std::string input;
  std::string output = "stdout";
  std::string format = "json";
  std::optional<std::uint64_t> budget;
  std::optional<unsigned> workers;
  bool timing = false;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input) cmd->add_option("--input", input, "Problem file (JSON); '-' for stdin")->required();
    cmd->add_option("--output", output, "Report destination, a path or 'stdout'");
    cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* check = app.add_subcommand("check", "Jacobi identity, CYBE residual, symmetry classes and labels");
  auto* bialg = app.add_subcommand("bialgebra", "Coboundary and triangular Lie bialgebra checks");
  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive F_p scan against the closed-form classification");
  auto* generate = app.add_subcommand("generate", "Build a solution from a parametrized family");
  auto* families = app.add_subcommand("families", "List the built-in algebras with their brackets");
  for (auto* cmd : {check, bialg, enumerate, generate}) add_common(cmd, true);
  add_common(families, false);
  enumerate->add_option("--budget", budget, "Maximum number of candidate tensors");
  enumerate->add_option("--workers", workers, "Worker threads (0 = hardware concurrency)");
  enumerate->add_flag("--timing", timing, "Include wall time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cybe::kExitInput;
  }

  try {
    cybe::CommandResult result;
    cybe::CommandOptions opts{budget, workers, timing};
    if (families->parsed()) {
      result = cybe::cmd_families();
    } else {
      const cybe::ProblemFile problem = cybe::parse_problem_text(read_input(input));
      if (check->parsed()) result = cybe::cmd_check(problem, opts);
      if (bialg->parsed()) result = cybe::cmd_bialgebra(problem, opts);
      if (enumerate->parsed()) result = cybe::cmd_enumerate(problem, opts);
      if (generate->parsed()) result = cybe::cmd_generate(problem, opts);
    }
    write_output(output, format == "json" ? result.report.dump(2) + "\n" : result.text);
    return result.exit_code;
  } catch (const cybe::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cybe::kExitInput;
  }
}
