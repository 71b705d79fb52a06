#include "cybe/lie_algebra.hpp"

#include <algorithm>
#include <cctype>

namespace cybe {

Vector zero_vector(std::size_t n, FieldSpec field) { return Vector(n, Scalar::zero(field)); }

Vector basis_vector(std::size_t n, std::size_t i, FieldSpec field) {
  Vector v = zero_vector(n, field);
  v.at(i) = Scalar::one(field);
  return v;
}

LieAlgebra::LieAlgebra(std::size_t n, FieldSpec field, std::vector<Scalar> constants, std::string label)
    : n_(n), field_(field), c_(std::move(constants)), terms_(n), label_(std::move(label)) {
  if (n == 0) throw Error("Lie algebra dimension must be at least 1");
  if (c_.size() != n * n * n) throw Error("structure constant grid has wrong size");
  for (const Scalar& s : c_) {
    if (s.field() != field_) throw Error("structure constant outside " + field_.to_string());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!(constant(i, j, k) == -constant(j, i, k))) {
          throw Error("structure constants are not antisymmetric at (" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
        }
        if (!constant(i, j, k).is_zero()) terms_[k].push_back(Term{i, j, constant(i, j, k)});
      }
    }
  }
}

LieAlgebra LieAlgebra::from_brackets(std::size_t n, FieldSpec field, const std::vector<Bracket>& brackets,
                                     std::string label) {
  std::vector<Scalar> c(n * n * n, Scalar::zero(field));
  std::vector<bool> seen(n * n, false);
  for (const Bracket& b : brackets) {
    if (b.i >= n || b.j >= n || b.value.size() != n) throw Error("bracket index or length out of range");
    if (b.i == b.j) throw Error("bracket [e_i, e_i] is zero by antisymmetry and cannot be assigned");
    const std::size_t lo = std::min(b.i, b.j);
    const std::size_t hi = std::max(b.i, b.j);
    if (seen[lo * n + hi]) throw Error("duplicate bracket for pair (" + std::to_string(lo + 1) + "," +
                                       std::to_string(hi + 1) + ")");
    seen[lo * n + hi] = true;
    for (std::size_t k = 0; k < n; ++k) {
      c[(b.i * n + b.j) * n + k] = b.value[k];
      c[(b.j * n + b.i) * n + k] = -b.value[k];
    }
  }
  return LieAlgebra(n, field, std::move(c), std::move(label));
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.empty(); });
}

FamilyParams FamilyParams::abelian(std::size_t n) {
  FamilyParams p;
  p.family = Family::I;
  p.dim = n;
  return p;
}

FamilyParams FamilyParams::ii(Scalar alpha, Scalar beta) {
  FamilyParams p;
  p.family = Family::II;
  p.alpha = std::move(alpha);
  p.beta = std::move(beta);
  return p;
}

FamilyParams FamilyParams::iii() {
  FamilyParams p;
  p.family = Family::III;
  return p;
}

FamilyParams FamilyParams::iv(Scalar beta, Scalar delta) {
  FamilyParams p;
  p.family = Family::IV;
  p.beta = std::move(beta);
  p.delta = std::move(delta);
  return p;
}

FamilyParams FamilyParams::v() {
  FamilyParams p;
  p.family = Family::V;
  return p;
}

FamilyParams FamilyParams::vi() {
  FamilyParams p;
  p.family = Family::VI;
  p.dim = 2;
  return p;
}

FamilyParams FamilyParams::sl2() {
  FamilyParams p;
  p.family = Family::SL2;
  return p;
}

std::string family_name(Family f) {
  switch (f) {
  case Family::I: return "I";
  case Family::II: return "II";
  case Family::III: return "III";
  case Family::IV: return "IV";
  case Family::V: return "V";
  case Family::VI: return "VI";
  case Family::SL2: return "SL2";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  std::string up;
  for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (Family f : {Family::I, Family::II, Family::III, Family::IV, Family::V, Family::VI, Family::SL2}) {
    if (family_name(f) == up) return f;
  }
  throw InputError("unknown family '" + name + "' (expected I, II, III, IV, V, VI or SL2)");
}

std::string FamilyParams::label() const {
  switch (family) {
  case Family::I: return "I(dim=" + std::to_string(dim) + ")";
  case Family::II:
    return "II(alpha=" + (alpha ? alpha->to_string() : "?") + ",beta=" + (beta ? beta->to_string() : "?") + ")";
  case Family::IV:
    return "IV(beta=" + (beta ? beta->to_string() : "?") + ",delta=" + (delta ? delta->to_string() : "?") + ")";
  default: return family_name(family);
  }
}

namespace {

const Scalar& require_param(const std::optional<Scalar>& s, const char* name, FieldSpec field) {
  if (!s) throw Error(std::string("missing family parameter ") + name);
  if (s->field() != field) throw Error(std::string("parameter ") + name + " is not in " + field.to_string());
  return *s;
}

Vector vec3(const Scalar& a, const Scalar& b, const Scalar& c) { return Vector{a, b, c}; }

} // namespace

LieAlgebra make_cyclic(const Scalar& alpha, const Scalar& beta, std::string label) {
  const FieldSpec f = alpha.field();
  const Scalar zero = Scalar::zero(f);
  const Scalar one = Scalar::one(f);
  return LieAlgebra::from_brackets(3, f,
                                   {{0, 1, vec3(zero, zero, one)},
                                    {1, 2, vec3(alpha, zero, zero)},
                                    {2, 0, vec3(zero, beta, zero)}},
                                   std::move(label));
}

LieAlgebra make_semidirect(const Scalar& beta, const Scalar& delta, std::string label) {
  const FieldSpec f = beta.field();
  const Scalar zero = Scalar::zero(f);
  const Scalar one = Scalar::one(f);
  return LieAlgebra::from_brackets(3, f, {{0, 2, vec3(one, beta, zero)}, {1, 2, vec3(zero, delta, zero)}},
                                   std::move(label));
}

LieAlgebra make_family(const FamilyParams& params, FieldSpec field) {
  const Scalar zero = Scalar::zero(field);
  const std::string label = params.label();
  switch (params.family) {
  case Family::I:
    if (params.dim == 0) throw Error("abelian family needs dim >= 1");
    return LieAlgebra(params.dim, field, std::vector<Scalar>(params.dim * params.dim * params.dim, zero), label);
  case Family::II:
    return make_cyclic(require_param(params.alpha, "alpha", field), require_param(params.beta, "beta", field),
                       label);
  case Family::III: return make_cyclic(zero, zero, label);
  case Family::IV: {
    const Scalar& delta = require_param(params.delta, "delta", field);
    if (delta.is_zero()) throw Error("family IV requires delta != 0");
    return make_semidirect(require_param(params.beta, "beta", field), delta, label);
  }
  case Family::V: return make_semidirect(zero, zero, label);
  case Family::VI:
    return LieAlgebra::from_brackets(2, field, {{0, 1, Vector{Scalar::one(field), zero}}}, label);
  case Family::SL2:
    return make_cyclic(Scalar::from_int(4, field), Scalar::from_int(-4, field), label);
  }
  throw Error("unknown family");
}

Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y) {
  const std::size_t n = L.dim();
  if (x.size() != n || y.size() != n) throw Error("bracket: dimension mismatch");
  Vector out = zero_vector(n, L.field());
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& term : L.terms_into(k)) {
      if (x[term.i].is_zero() || y[term.j].is_zero()) continue;
      out[k] += x[term.i] * y[term.j] * term.value;
    }
  }
  return out;
}

std::vector<JacobiViolation> check_jacobi(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const FieldSpec f = L.field();
  std::vector<JacobiViolation> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = basis_vector(n, i, f);
        const Vector ej = basis_vector(n, j, f);
        const Vector ek = basis_vector(n, k, f);
        Vector sum = bracket(L, bracket(L, ei, ej), ek);
        const Vector b2 = bracket(L, bracket(L, ej, ek), ei);
        const Vector b3 = bracket(L, bracket(L, ek, ei), ej);
        bool zero = true;
        for (std::size_t m = 0; m < n; ++m) {
          sum[m] += b2[m] + b3[m];
          zero = zero && sum[m].is_zero();
        }
        if (!zero) out.push_back(JacobiViolation{i, j, k, std::move(sum)});
      }
    }
  }
  return out;
}

std::optional<StandardForm> standard_form(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  if (L.is_abelian()) return StandardForm{StandardForm::Kind::Abelian, std::nullopt, std::nullopt};
  if (n == 2) return StandardForm{StandardForm::Kind::NonAbelian2, std::nullopt, std::nullopt};
  if (n != 3) return std::nullopt;

  const FieldSpec f = L.field();
  const Scalar zero = Scalar::zero(f);
  const Scalar one = Scalar::one(f);
  auto is = [&](std::size_t i, std::size_t j, const Scalar& a, const Scalar& b, const Scalar& c) {
    return L.constant(i, j, 0) == a && L.constant(i, j, 1) == b && L.constant(i, j, 2) == c;
  };

  const Scalar& alpha = L.constant(1, 2, 0);
  const Scalar& beta = L.constant(2, 0, 1);
  if (is(0, 1, zero, zero, one) && is(1, 2, alpha, zero, zero) && is(2, 0, zero, beta, zero)) {
    return StandardForm{StandardForm::Kind::Cyclic, alpha, beta};
  }
  const Scalar& sbeta = L.constant(0, 2, 1);
  const Scalar& delta = L.constant(1, 2, 1);
  if (is(0, 1, zero, zero, zero) && is(0, 2, one, sbeta, zero) && is(1, 2, zero, delta, zero)) {
    return StandardForm{StandardForm::Kind::Semidirect, sbeta, delta};
  }
  return std::nullopt;
}

} // namespace cybe
