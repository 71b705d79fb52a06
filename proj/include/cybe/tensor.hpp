#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cybe/lie_algebra.hpp"
#include "cybe/scalar.hpp"

namespace cybe {

/// r = sum_{i,j} k(i, j) e_i (x) e_j, dense row-major n*n grid.
class Tensor2 {
public:
  Tensor2(std::size_t n, FieldSpec field) : n_(n), field_(field), k_(n * n, Scalar::zero(field)) {}

  std::size_t dim() const { return n_; }
  FieldSpec field() const { return field_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return k_[i * n_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return k_[i * n_ + j]; }
  const std::vector<Scalar>& entries() const { return k_; }
  std::vector<Scalar>& entries() { return k_; }

  bool is_zero() const;

  Tensor2& operator+=(const Tensor2& b);
  Tensor2& operator-=(const Tensor2& b);
  Tensor2& operator*=(const Scalar& c);

  friend bool operator==(const Tensor2& a, const Tensor2& b);

private:
  std::size_t n_;
  FieldSpec field_;
  std::vector<Scalar> k_;
};

Tensor2 operator+(Tensor2 a, const Tensor2& b);
Tensor2 operator-(Tensor2 a, const Tensor2& b);
Tensor2 operator*(const Scalar& c, Tensor2 a);

/// x (x) y.
Tensor2 outer(const Vector& x, const Vector& y);

/// Coefficient grid of an element of L (x) L (x) L: t(i, j, m) on e_i (x) e_j (x) e_m.
class Tensor3 {
public:
  Tensor3(std::size_t n, FieldSpec field) : n_(n), field_(field), t_(n * n * n, Scalar::zero(field)) {}

  std::size_t dim() const { return n_; }
  FieldSpec field() const { return field_; }

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t m) const { return t_[(i * n_ + j) * n_ + m]; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t m) { return t_[(i * n_ + j) * n_ + m]; }
  const std::vector<Scalar>& entries() const { return t_; }

  bool is_zero() const;
  Tensor3& operator+=(const Tensor3& b);

  friend bool operator==(const Tensor3& a, const Tensor3& b);

private:
  std::size_t n_;
  FieldSpec field_;
  std::vector<Scalar> t_;
};

/// Nonzero entry of a Tensor3, with 0-based indices.
struct Entry3 {
  std::size_t i, j, m;
  Scalar value;
};
std::vector<Entry3> nonzero_entries(const Tensor3& t);

/// Read-only dim-3 view: x=k11 y=k22 z=k33 p=k12 q=k21 s=k13 t=k31 u=k23 v=k32.
struct NamedCoefficients {
  Scalar x, y, z, p, q, s, t, u, v;
};
NamedCoefficients named(const Tensor2& r);
Tensor2 from_named(const NamedCoefficients& c);
/// 0-based grid position of a named alias ('x', 'p', ...), if it is one.
std::optional<std::pair<std::size_t, std::size_t>> named_position(char alias);

/// tau(a (x) b) = b (x) a.
Tensor2 twist_tau(const Tensor2& r);
/// (1 - tau) r.
Tensor2 one_minus_tau(const Tensor2& r);
/// xi(a (x) b (x) c) = b (x) c (x) a.
Tensor3 cycle_xi(const Tensor3& t);

bool is_symmetric(const Tensor2& r);
bool is_skew_symmetric(const Tensor2& r);

/// k_ij = k_ji and k_ij k_lm = k_il k_jm over all index quadruples.
bool is_strongly_symmetric(const Tensor2& r);

/// Equivalent reduced condition sets for dim <= 3, used as a fast path and
/// cross-checked against the quantifier form.
enum class StrongSymmetryTest {
  FullSystem,       // xy=p^2, xz=s^2, yz=u^2, xu=sp, ys=pu, zp=su, symmetric
  ViaXuSp,          // xy=p^2, xz=s^2, yz=u^2, xu=sp, symmetric
  ViaYsUp,          // xy=p^2, xz=s^2, yz=u^2, ys=up, symmetric
  ViaZpSu,          // xy=p^2, xz=s^2, yz=u^2, zp=su, symmetric
  ExplicitFamilies, // member of one of the three parametrised families
};
bool is_strongly_symmetric_reduced(const Tensor2& r, StrongSymmetryTest form);

/// Which explicit strongly symmetric family r belongs to. Throws unless dim 2 or 3.
enum class StrongFamily { ZNonzero, XNonzero, YOnly };
std::optional<StrongFamily> strong_family_of(const Tensor2& r);

/// p=-q, s=-t, u=-v, x=alpha z, y=beta z and alpha beta z^2 + beta s^2 + alpha u^2 + p^2 = 0.
/// Throws unless dim 3.
bool is_alpha_beta_skew(const Tensor2& r, const Scalar& alpha, const Scalar& beta);

/// Dense n*n matrix, row-major.
struct SquareMatrix {
  std::size_t n;
  std::vector<Scalar> a;

  SquareMatrix(std::size_t n_, FieldSpec field) : n(n_), a(n_ * n_, Scalar::zero(field)) {}
  static SquareMatrix identity(std::size_t n, FieldSpec field);

  const Scalar& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
};

/// Exact determinant by Gaussian elimination over the field.
Scalar determinant(const SquareMatrix& m);

/// Coefficients in the basis e'_s where e_i = sum_s e'_s Q(s, i):
/// result(s, t) = sum_{i,j} k(i, j) Q(s, i) Q(t, j). Throws if Q is singular.
Tensor2 change_basis(const Tensor2& r, const SquareMatrix& Q);

} // namespace cybe
