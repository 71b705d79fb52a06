#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cybe/lie_algebra.hpp"
#include "cybe/tensor.hpp"

namespace cybe {

/// [r12, r13] + [r12, r23] + [r13, r23] expanded through the structure constants.
struct ResidualReport {
  Tensor3 residual;
  bool is_zero;
  std::vector<Entry3> nonzero_entries;
};

ResidualReport cybe_residual(const LieAlgebra& L, const Tensor2& r);

/// Residual coefficient on e_a (x) e_b (x) e_c (0-based).
Scalar cybe_residual_coefficient(const LieAlgebra& L, const Tensor2& r, std::size_t a, std::size_t b,
                                 std::size_t c);

/// Stops at the first nonzero residual coefficient.
bool is_cybe_solution(const LieAlgebra& L, const Tensor2& r);

// ---------------------------------------------------------------------------
// Hand-expanded coefficient systems for the two dim-3 table shapes.

enum class EquationSystem {
  Cyclic,     // 27 equations, one per basis triple
  Semidirect, // 21 equations; the other six coefficients vanish identically
};

struct EquationValue {
  int index;                       // position in the system, from 0
  std::array<std::size_t, 3> term; // basis triple (0-based) whose residual coefficient it expands
  Scalar value;                    // left-hand side minus right-hand side
};

EquationSystem equation_system_for(const LieAlgebra& L);

/// Evaluates each transcribed equation at r's named coefficients. Throws
/// unless L is a dim-3 table of cyclic or semidirect shape.
std::vector<EquationValue> family_equations(const LieAlgebra& L, const Tensor2& r);

// ---------------------------------------------------------------------------
// Solution families.

enum class SolutionCase {
  StrongZ,                     // z != 0; free s, u, z
  StrongX,                     // x != 0; free p, x
  StrongY,                     // free y
  AlphaBetaSkew,               // free z, s, u, p; the quadratic must vanish
  TwoDimSkew,                  // dim 2; free p
  HeisenbergPNonzero,          // alpha = beta = 0; free p != 0, x, u, v, z
  HeisenbergPZero,             // alpha = beta = 0; free s, t, u, v, x, y, z
  SemidirectBetaZeroMixed,     // beta = 0, delta != 0; free p, q, s, u, x, y
  SemidirectUnitDeltaMixed,    // beta != 0, delta = 1; free p, q, u, x, y
  SemidirectDegenerateZNonzero, // beta = delta = 0; free z != 0, s, u, v, y
  SemidirectDegenerateZZero,   // beta = delta = 0; free p, q, s, u, v, x, y
};

std::string case_name(SolutionCase c);
/// Accepts the names produced by case_name; throws InputError otherwise.
SolutionCase parse_case(const std::string& name);
std::vector<SolutionCase> all_cases();

/// Named case parameters (x, y, z, p, q, s, t, u, v). Free parameters are
/// required; dependent ones may be omitted (derived) or given (checked).
using CaseParams = std::map<char, Scalar>;

/// Builds the tensor of the given case for algebra L. Throws Error when a side
/// condition fails or the case does not apply to L's table.
Tensor2 generate_solution(const LieAlgebra& L, SolutionCase c, const CaseParams& params);

// ---------------------------------------------------------------------------
// Classification.

enum class SolutionLabel {
  StronglySymmetric,
  SkewSymmetric,
  AlphaBetaSkew,
  HeisenbergPNonzero,
  HeisenbergPZero,
  SemidirectBetaZeroMixed,
  SemidirectUnitDeltaMixed,
  SemidirectDegenerateZNonzero,
  SemidirectDegenerateZZero,
  Abelian,
  Unclassified,
};

std::string label_name(SolutionLabel l);

/// Which closed-form classification applies to an algebra.
enum class Regime {
  Abelian,              // every tensor solves the CYBE
  TwoDim,               // non-abelian dim 2: strongly symmetric or skew symmetric
  CyclicGeneric,        // alpha beta != 0: strongly symmetric or alpha,beta-skew symmetric
  CyclicZero,           // alpha = beta = 0 (Heisenberg)
  SemidirectBetaZero,   // beta = 0, delta != 0
  SemidirectUnitDelta,  // beta != 0, delta = 1
  SemidirectDegenerate, // beta = delta = 0
  Uncovered,
};

std::string regime_name(Regime r);
Regime solution_regime(const LieAlgebra& L);

/// Labels whose closed-form conditions r satisfies. Never consults the
/// residual. {Unclassified} when the regime is uncovered.
std::set<SolutionLabel> solution_labels(const LieAlgebra& L, const Tensor2& r);

struct Classification {
  bool is_solution;
  bool covered;
  Regime regime;
  std::set<SolutionLabel> labels;
};

Classification classify_solution(const LieAlgebra& L, const Tensor2& r);

} // namespace cybe
