#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cybe/scalar.hpp"

namespace cybe {

/// Coordinates on the basis e_1..e_n (stored 0-based).
using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n, FieldSpec field);
Vector basis_vector(std::size_t n, std::size_t i, FieldSpec field);

/// Structure-constant table: [e_i, e_j] = sum_k c(i, j, k) e_k.
///
/// Construction enforces antisymmetry of the table. The Jacobi identity is not
/// enforced here; use check_jacobi (the family constructors always satisfy it).
class LieAlgebra {
public:
  /// Nonzero constant c(i, j, k) for a fixed output index k.
  struct Term {
    std::size_t i;
    std::size_t j;
    Scalar value;
  };

  /// `constants` is the dense n*n*n grid, index (i*n + j)*n + k.
  LieAlgebra(std::size_t n, FieldSpec field, std::vector<Scalar> constants, std::string label = {});

  /// Builds the table from the brackets [e_i, e_j] for i < j; all other
  /// brackets follow by antisymmetry or are zero.
  struct Bracket {
    std::size_t i;
    std::size_t j;
    Vector value;
  };
  static LieAlgebra from_brackets(std::size_t n, FieldSpec field, const std::vector<Bracket>& brackets,
                                  std::string label = {});

  std::size_t dim() const { return n_; }
  FieldSpec field() const { return field_; }
  const std::string& label() const { return label_; }

  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }
  const std::vector<Term>& terms_into(std::size_t k) const { return terms_[k]; }
  bool is_abelian() const;

private:
  std::size_t n_;
  FieldSpec field_;
  std::vector<Scalar> c_;
  std::vector<std::vector<Term>> terms_;
  std::string label_;
};

/// The classified low-dimensional families, plus sl(2) in the basis
/// [e_1,e_2] = e_3, [e_2,e_3] = 4e_1, [e_3,e_1] = -4e_2.
enum class Family { I, II, III, IV, V, VI, SL2 };

struct FamilyParams {
  Family family = Family::I;
  std::size_t dim = 3; // family I only
  std::optional<Scalar> alpha;
  std::optional<Scalar> beta;
  std::optional<Scalar> delta;

  static FamilyParams abelian(std::size_t n);
  static FamilyParams ii(Scalar alpha, Scalar beta);
  static FamilyParams iii();
  static FamilyParams iv(Scalar beta, Scalar delta);
  static FamilyParams v();
  static FamilyParams vi();
  static FamilyParams sl2();

  /// e.g. "II(alpha=4,beta=-4)".
  std::string label() const;
};

std::string family_name(Family f);
/// Accepts "I".."VI" and "SL2" (case-insensitive); throws InputError otherwise.
Family parse_family(const std::string& name);

/// Throws Error on parameter constraint violations (IV needs delta != 0,
/// parameters must live in `field`, I needs dim >= 1).
LieAlgebra make_family(const FamilyParams& params, FieldSpec field);

/// [e_1,e_2] = e_3, [e_2,e_3] = alpha e_1, [e_3,e_1] = beta e_2 for any alpha, beta.
LieAlgebra make_cyclic(const Scalar& alpha, const Scalar& beta, std::string label = {});
/// [e_1,e_2] = 0, [e_1,e_3] = e_1 + beta e_2, [e_2,e_3] = delta e_2 for any beta, delta.
LieAlgebra make_semidirect(const Scalar& beta, const Scalar& delta, std::string label = {});

/// Bilinear extension of the structure constants. Throws on dimension mismatch.
Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y);

struct JacobiViolation {
  std::size_t i, j, k; // 0-based, i < j < k
  Vector residual;
};

/// Empty iff [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0 for all i < j < k.
std::vector<JacobiViolation> check_jacobi(const LieAlgebra& L);

/// Which of the tabulated bracket shapes a table has, read off the constants
/// in the given basis. Cyclic carries (alpha, beta), Semidirect (beta, delta).
struct StandardForm {
  enum class Kind { Abelian, NonAbelian2, Cyclic, Semidirect };
  Kind kind;
  std::optional<Scalar> first;
  std::optional<Scalar> second;
};

std::optional<StandardForm> standard_form(const LieAlgebra& L);

} // namespace cybe
