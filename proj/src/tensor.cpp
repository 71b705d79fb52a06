#include "cybe/tensor.hpp"

#include <algorithm>

namespace cybe {

namespace {

void require_same_shape(std::size_t n1, FieldSpec f1, std::size_t n2, FieldSpec f2) {
  if (n1 != n2) throw Error("tensor dimension mismatch");
  if (f1 != f2) throw Error("tensor field mismatch: " + f1.to_string() + " vs " + f2.to_string());
}

void require_dim3(const Tensor2& r, const char* what) {
  if (r.dim() != 3) throw Error(std::string(what) + " is only defined in dimension 3");
}

} // namespace

bool Tensor2::is_zero() const {
  return std::all_of(k_.begin(), k_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Tensor2& Tensor2::operator+=(const Tensor2& b) {
  require_same_shape(n_, field_, b.n_, b.field_);
  for (std::size_t i = 0; i < k_.size(); ++i) k_[i] += b.k_[i];
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& b) {
  require_same_shape(n_, field_, b.n_, b.field_);
  for (std::size_t i = 0; i < k_.size(); ++i) k_[i] -= b.k_[i];
  return *this;
}

Tensor2& Tensor2::operator*=(const Scalar& c) {
  for (Scalar& s : k_) s *= c;
  return *this;
}

bool operator==(const Tensor2& a, const Tensor2& b) {
  require_same_shape(a.n_, a.field_, b.n_, b.field_);
  return a.k_ == b.k_;
}

Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
Tensor2 operator*(const Scalar& c, Tensor2 a) { return a *= c; }

Tensor2 outer(const Vector& x, const Vector& y) {
  if (x.size() != y.size() || x.empty()) throw Error("outer: dimension mismatch");
  Tensor2 r(x.size(), x.front().field());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) r(i, j) = x[i] * y[j];
  }
  return r;
}

bool Tensor3::is_zero() const {
  return std::all_of(t_.begin(), t_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Tensor3& Tensor3::operator+=(const Tensor3& b) {
  require_same_shape(n_, field_, b.n_, b.field_);
  for (std::size_t i = 0; i < t_.size(); ++i) t_[i] += b.t_[i];
  return *this;
}

bool operator==(const Tensor3& a, const Tensor3& b) {
  require_same_shape(a.n_, a.field_, b.n_, b.field_);
  return a.t_ == b.t_;
}

std::vector<Entry3> nonzero_entries(const Tensor3& t) {
  std::vector<Entry3> out;
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) {
        if (!t(i, j, m).is_zero()) out.push_back(Entry3{i, j, m, t(i, j, m)});
      }
    }
  }
  return out;
}

NamedCoefficients named(const Tensor2& r) {
  require_dim3(r, "named coefficient view");
  return NamedCoefficients{r(0, 0), r(1, 1), r(2, 2), r(0, 1), r(1, 0), r(0, 2), r(2, 0), r(1, 2), r(2, 1)};
}

Tensor2 from_named(const NamedCoefficients& c) {
  Tensor2 r(3, c.x.field());
  r(0, 0) = c.x;
  r(1, 1) = c.y;
  r(2, 2) = c.z;
  r(0, 1) = c.p;
  r(1, 0) = c.q;
  r(0, 2) = c.s;
  r(2, 0) = c.t;
  r(1, 2) = c.u;
  r(2, 1) = c.v;
  for (const Scalar& s : r.entries()) {
    if (s.field() != r.field()) throw Error("named coefficients from different fields");
  }
  return r;
}

std::optional<std::pair<std::size_t, std::size_t>> named_position(char alias) {
  switch (alias) {
  case 'x': return std::pair<std::size_t, std::size_t>{0, 0};
  case 'y': return std::pair<std::size_t, std::size_t>{1, 1};
  case 'z': return std::pair<std::size_t, std::size_t>{2, 2};
  case 'p': return std::pair<std::size_t, std::size_t>{0, 1};
  case 'q': return std::pair<std::size_t, std::size_t>{1, 0};
  case 's': return std::pair<std::size_t, std::size_t>{0, 2};
  case 't': return std::pair<std::size_t, std::size_t>{2, 0};
  case 'u': return std::pair<std::size_t, std::size_t>{1, 2};
  case 'v': return std::pair<std::size_t, std::size_t>{2, 1};
  default: return std::nullopt;
  }
}

Tensor2 twist_tau(const Tensor2& r) {
  Tensor2 out(r.dim(), r.field());
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = 0; j < r.dim(); ++j) out(i, j) = r(j, i);
  }
  return out;
}

Tensor2 one_minus_tau(const Tensor2& r) { return r - twist_tau(r); }

Tensor3 cycle_xi(const Tensor3& t) {
  Tensor3 out(t.dim(), t.field());
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) out(j, m, i) = t(i, j, m);
    }
  }
  return out;
}

bool is_symmetric(const Tensor2& r) {
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = i + 1; j < r.dim(); ++j) {
      if (!(r(i, j) == r(j, i))) return false;
    }
  }
  return true;
}

bool is_skew_symmetric(const Tensor2& r) {
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = i; j < r.dim(); ++j) {
      if (!(r(i, j) == -r(j, i))) return false;
    }
  }
  return true;
}

bool is_strongly_symmetric(const Tensor2& r) {
  if (!is_symmetric(r)) return false;
  const std::size_t n = r.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t m = 0; m < n; ++m) {
          if (!(r(i, j) * r(l, m) == r(i, l) * r(j, m))) return false;
        }
      }
    }
  }
  return true;
}

std::optional<StrongFamily> strong_family_of(const Tensor2& r) {
  const std::size_t n = r.dim();
  if (n != 2 && n != 3) throw Error("explicit strongly symmetric families are defined for dim 2 and 3");
  const Scalar& x = r(0, 0);
  const Scalar& y = r(1, 1);
  const Scalar& p = r(0, 1);
  const Scalar& q = r(1, 0);

  if (n == 3) {
    const NamedCoefficients c = named(r);
    if (!c.z.is_zero()) {
      const Scalar zi = c.z.inverse();
      const Scalar pq = c.s * c.u * zi;
      if (c.p == pq && c.q == pq && c.t == c.s && c.v == c.u && c.x == c.s * c.s * zi && c.y == c.u * c.u * zi) {
        return StrongFamily::ZNonzero;
      }
      return std::nullopt;
    }
    if (!(c.s.is_zero() && c.t.is_zero() && c.u.is_zero() && c.v.is_zero())) return std::nullopt;
  }
  if (!x.is_zero()) {
    if (q == p && y == p * p / x) return StrongFamily::XNonzero;
    return std::nullopt;
  }
  if (p.is_zero() && q.is_zero()) return StrongFamily::YOnly;
  return std::nullopt;
}

bool is_strongly_symmetric_reduced(const Tensor2& r, StrongSymmetryTest form) {
  const std::size_t n = r.dim();
  if (n == 1) return true;
  if (n > 3) throw Error("reduced strong-symmetry systems are only available for dim <= 3");
  if (form == StrongSymmetryTest::ExplicitFamilies) return strong_family_of(r).has_value();

  if (n == 2) return r(0, 1) == r(1, 0) && r(0, 0) * r(1, 1) == r(0, 1) * r(0, 1);

  const NamedCoefficients c = named(r);
  if (!(c.p == c.q && c.s == c.t && c.u == c.v)) return false;
  if (!(c.x * c.y == c.p * c.p && c.x * c.z == c.s * c.s && c.y * c.z == c.u * c.u)) return false;
  const bool xu_sp = c.x * c.u == c.s * c.p;
  const bool ys_up = c.y * c.s == c.u * c.p;
  const bool zp_su = c.z * c.p == c.s * c.u;
  switch (form) {
  case StrongSymmetryTest::FullSystem: return xu_sp && ys_up && zp_su;
  case StrongSymmetryTest::ViaXuSp: return xu_sp;
  case StrongSymmetryTest::ViaYsUp: return ys_up;
  case StrongSymmetryTest::ViaZpSu: return zp_su;
  case StrongSymmetryTest::ExplicitFamilies: break;
  }
  return false;
}

bool is_alpha_beta_skew(const Tensor2& r, const Scalar& alpha, const Scalar& beta) {
  require_dim3(r, "alpha,beta-skew symmetry");
  const NamedCoefficients c = named(r);
  if (!(c.p == -c.q && c.s == -c.t && c.u == -c.v)) return false;
  if (!(c.x == alpha * c.z && c.y == beta * c.z)) return false;
  return (alpha * beta * c.z * c.z + beta * c.s * c.s + alpha * c.u * c.u + c.p * c.p).is_zero();
}

SquareMatrix SquareMatrix::identity(std::size_t n, FieldSpec field) {
  SquareMatrix m(n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Scalar determinant(const SquareMatrix& m) {
  if (m.a.empty()) throw Error("determinant of empty matrix");
  SquareMatrix w = m;
  const std::size_t n = m.n;
  const FieldSpec f = m.a.front().field();
  Scalar det = Scalar::one(f);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && w(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar::zero(f);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(pivot, j), w(col, j));
      det = -det;
    }
    det *= w(col, col);
    const Scalar inv = w(col, col).inverse();
    for (std::size_t row = col + 1; row < n; ++row) {
      if (w(row, col).is_zero()) continue;
      const Scalar factor = w(row, col) * inv;
      for (std::size_t j = col; j < n; ++j) w(row, j) -= factor * w(col, j);
    }
  }
  return det;
}

Tensor2 change_basis(const Tensor2& r, const SquareMatrix& Q) {
  const std::size_t n = r.dim();
  if (Q.n != n) throw Error("change_basis: matrix dimension mismatch");
  if (determinant(Q).is_zero()) throw Error("change_basis: singular basis-change matrix");
  Tensor2 out(n, r.field());
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      Scalar acc = Scalar::zero(r.field());
      for (std::size_t i = 0; i < n; ++i) {
        if (Q(s, i).is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) acc += r(i, j) * Q(s, i) * Q(t, j);
      }
      out(s, t) = acc;
    }
  }
  return out;
}

} // namespace cybe
