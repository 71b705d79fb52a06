#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "cybe/problem.hpp"

namespace cybe {

/// Exit codes shared by all commands.
enum ExitCode : int {
  kExitOk = 0,     // every verdict affirmative
  kExitFailed = 1, // valid run, some check failed (or budget exceeded)
  kExitInput = 2,  // malformed input or violated precondition
};

struct CommandOptions {
  std::optional<std::uint64_t> budget; // overrides the problem file
  std::optional<unsigned> workers;     // overrides the problem file
  bool timing = false;                 // adds wall time, making output run-dependent
};

struct CommandResult {
  nlohmann::ordered_json report;
  std::string text;
  int exit_code = kExitOk;
};

/// Jacobi verdict, CYBE verdict, symmetry classes and solution labels.
CommandResult cmd_check(const ProblemFile& problem, const CommandOptions& opts = {});
/// Bialgebra axioms on Delta_r, plus the closed-form predicates where they apply.
CommandResult cmd_bialgebra(const ProblemFile& problem, const CommandOptions& opts = {});
/// Exhaustive F_p scan against the closed-form classification.
CommandResult cmd_enumerate(const ProblemFile& problem, const CommandOptions& opts = {});
/// Builds the tensor of options.generate and checks that it solves the CYBE.
CommandResult cmd_generate(const ProblemFile& problem, const CommandOptions& opts = {});
/// Built-in algebras with their brackets.
CommandResult cmd_families();

/// Prose used in text summaries, e.g. "strongly symmetric".
std::string label_prose(SolutionLabel l);

} // namespace cybe
