#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cybe/cybe.hpp"
#include "cybe/lie_algebra.hpp"
#include "cybe/tensor.hpp"

namespace cybe {

struct EnumerationOptions {
  std::uint64_t budget = 100'000'000; // maximum number of candidates p^(n^2)
  unsigned workers = 1;               // 0 = hardware concurrency
  std::size_t witness_cap = 100;      // per mismatch list
};

/// Coefficient grid k(i, j) as least non-negative residues, row-major.
using Grid = std::vector<std::uint32_t>;

Tensor2 grid_to_tensor(const Grid& g, FieldSpec field);
Grid tensor_to_grid(const Tensor2& r);

/// Number of candidates p^(n^2) for L; saturates at UINT64_MAX.
std::uint64_t candidate_count(const LieAlgebra& L);

/// Every r in L (x) L over F_p with zero CYBE residual, in lexicographic grid
/// order (last entry fastest). Throws BudgetExceeded or Error (field not prime).
std::vector<Tensor2> enumerate_solutions(const LieAlgebra& L, const EnumerationOptions& opts = {});

struct EnumerationReport {
  std::uint32_t p = 0;
  std::string algebra;
  std::size_t dim = 0;
  Regime regime = Regime::Uncovered;
  bool empirical_only = false; // regime has no closed-form classification
  std::uint64_t total = 0;     // candidates scanned
  std::uint64_t solutions = 0; // residual zero
  std::uint64_t predicted = 0; // some closed-form label applies
  std::uint64_t matched = 0;   // both
  std::uint64_t missed = 0;    // solution without a label
  std::uint64_t spurious = 0;  // label without being a solution
  std::vector<Grid> missed_witnesses;
  std::vector<Grid> spurious_witnesses;
  std::map<SolutionLabel, std::uint64_t> label_counts; // over the solutions
  unsigned workers = 1;
  double seconds = 0.0; // wall time; excluded from equality

  /// matched == solutions == predicted and both mismatch lists empty.
  bool confirmed() const { return !empirical_only && missed == 0 && spurious == 0; }
};

/// Scans all candidates once, deciding CYBE by a modular expansion of the
/// structure constants and comparing with solution_labels.
EnumerationReport verify_classification(const LieAlgebra& L, const EnumerationOptions& opts = {});

/// Equality ignoring wall time and worker count.
bool same_result(const EnumerationReport& a, const EnumerationReport& b);

} // namespace cybe
