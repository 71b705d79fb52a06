#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cybe/cybe.hpp"
#include "cybe/lie_algebra.hpp"
#include "cybe/tensor.hpp"

namespace cybe {

/// One structure constant c(i, j, k) with i < j, 1-based as in the input file.
struct BracketEntry {
  std::size_t i, j, k;
  Scalar c;
  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

/// Either a named family or an explicit bracket list.
struct AlgebraSpec {
  std::optional<FamilyParams> family;
  std::size_t dim = 0;
  std::vector<BracketEntry> brackets; // explicit tables only, sorted by (i, j, k)
  std::string label;                  // explicit tables only; may be empty
};

struct GenerateSpec {
  SolutionCase solution_case;
  CaseParams params;
};

struct ProblemOptions {
  std::optional<std::uint64_t> budget;
  std::optional<unsigned> workers;
  std::optional<GenerateSpec> generate;
};

struct ProblemFile {
  FieldSpec field = FieldSpec::rational();
  AlgebraSpec algebra;
  std::vector<Tensor2> tensors;
  ProblemOptions options;
};

bool operator==(const AlgebraSpec& a, const AlgebraSpec& b);
bool operator==(const ProblemFile& a, const ProblemFile& b);

/// Validates the document against the problem schema; throws InputError with
/// the offending path on any violation.
ProblemFile parse_problem(const nlohmann::json& doc);
ProblemFile parse_problem_text(const std::string& text);

/// Canonical form: explicit entry lists only, sorted, zero entries dropped.
nlohmann::ordered_json serialize_problem(const ProblemFile& problem);

LieAlgebra build_algebra(const ProblemFile& problem);

/// Nonzero entries as [[i, j, "c"], ...] with 1-based indices.
nlohmann::ordered_json tensor_entries_json(const Tensor2& r);

} // namespace cybe
