#pragma once

#include <optional>
#include <vector>

#include "cybe/cybe.hpp"
#include "cybe/lie_algebra.hpp"
#include "cybe/tensor.hpp"

namespace cybe {

/// x . r = sum_i [x, a_i] (x) b_i + a_i (x) [x, b_i].
Tensor2 ad_action(const LieAlgebra& L, const Vector& x, const Tensor2& r);

/// A linear map L -> L (x) L given by its images of the basis vectors.
struct Cobracket {
  std::vector<Tensor2> images;

  std::size_t dim() const { return images.size(); }
  /// Delta(x) by linearity.
  Tensor2 apply(const Vector& x) const;
};

/// Delta_r(e_i) = e_i . r.
Cobracket cobracket(const LieAlgebra& L, const Tensor2& r);

/// Nonzero residual coefficient; `index` has two or three 0-based entries.
struct WitnessEntry {
  std::vector<std::size_t> index;
  Scalar value;
};

/// One failing basis index (or pair) with the nonzero entries of its residual.
struct AxiomWitness {
  std::size_t i;
  std::optional<std::size_t> j; // second basis index for the compatibility axiom
  std::vector<WitnessEntry> entries;
};

struct AxiomCheck {
  bool ok;
  std::vector<AxiomWitness> witnesses;
};

/// Im Delta in Im(1 - tau): every image skew symmetric (char != 2).
AxiomCheck check_coantisymmetry(const Cobracket& delta);
/// (1 + xi + xi^2)(1 (x) Delta) Delta (e_i) = 0 for every basis vector.
AxiomCheck check_cojacobi(const Cobracket& delta);
/// Delta[e_i, e_j] = e_i . Delta(e_j) - e_j . Delta(e_i) for every basis pair.
AxiomCheck check_compatibility(const LieAlgebra& L, const Cobracket& delta);

/// (1 (x) Delta) Delta (x) for a basis vector e_i.
Tensor3 iterated_cobracket(const Cobracket& delta, std::size_t i);

struct BialgebraReport {
  bool r_in_image;        // r in Im(1 - tau), i.e. skew symmetric
  AxiomCheck coantisymmetry;
  AxiomCheck cojacobi;
  AxiomCheck compatibility;
  bool is_cybe_solution;
  bool is_coboundary;     // r_in_image and all three axioms
  bool is_triangular;     // is_coboundary and is_cybe_solution
};

/// Runs the axioms on Delta_r directly; never consults the closed forms below.
BialgebraReport bialgebra_check(const LieAlgebra& L, const Tensor2& r);

// Closed-form conditions for skew r, read off the standard table shapes.
// nullopt when the algebra is outside the tabulated regimes. Throw if r is
// not skew symmetric.
std::optional<bool> coboundary_predicate(const LieAlgebra& L, const Tensor2& r);
std::optional<bool> triangular_predicate(const LieAlgebra& L, const Tensor2& r);

/// Semidirect table: delta^2 us + delta beta s^2 + beta s^2 - us, the
/// vanishing condition for the co-Jacobi identity as it comes out of the
/// expansion, and its factorisation (delta + 1)((delta - 1) u + beta s) s.
Scalar semidirect_cojacobi_expanded(const Scalar& beta, const Scalar& delta, const Scalar& s, const Scalar& u);
Scalar semidirect_cojacobi_factored(const Scalar& beta, const Scalar& delta, const Scalar& s, const Scalar& u);

} // namespace cybe
