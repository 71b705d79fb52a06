#include "cybe/cybe.hpp"

namespace cybe {

namespace {

void require_compatible(const LieAlgebra& L, const Tensor2& r) {
  if (r.dim() != L.dim()) {
    throw Error("tensor dimension " + std::to_string(r.dim()) + " does not match algebra dimension " +
                std::to_string(L.dim()));
  }
  if (r.field() != L.field()) throw Error("tensor and algebra live over different fields");
}

} // namespace

Scalar cybe_residual_coefficient(const LieAlgebra& L, const Tensor2& r, std::size_t a, std::size_t b,
                                 std::size_t c) {
  Scalar acc = Scalar::zero(L.field());
  // [r12, r13]: sum k_ib k_sc [e_i, e_s] -> e_a
  for (const auto& term : L.terms_into(a)) {
    const Scalar& k1 = r(term.i, b);
    const Scalar& k2 = r(term.j, c);
    if (k1.is_zero() || k2.is_zero()) continue;
    acc += term.value * k1 * k2;
  }
  // [r12, r23]: sum k_aj k_sc [e_j, e_s] -> e_b
  for (const auto& term : L.terms_into(b)) {
    const Scalar& k1 = r(a, term.i);
    const Scalar& k2 = r(term.j, c);
    if (k1.is_zero() || k2.is_zero()) continue;
    acc += term.value * k1 * k2;
  }
  // [r13, r23]: sum k_aj k_bt [e_j, e_t] -> e_c
  for (const auto& term : L.terms_into(c)) {
    const Scalar& k1 = r(a, term.i);
    const Scalar& k2 = r(b, term.j);
    if (k1.is_zero() || k2.is_zero()) continue;
    acc += term.value * k1 * k2;
  }
  return acc;
}

ResidualReport cybe_residual(const LieAlgebra& L, const Tensor2& r) {
  require_compatible(L, r);
  const std::size_t n = L.dim();
  Tensor3 t(n, L.field());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) t(a, b, c) = cybe_residual_coefficient(L, r, a, b, c);
    }
  }
  auto entries = nonzero_entries(t);
  const bool zero = entries.empty();
  return ResidualReport{std::move(t), zero, std::move(entries)};
}

bool is_cybe_solution(const LieAlgebra& L, const Tensor2& r) {
  require_compatible(L, r);
  const std::size_t n = L.dim();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (!cybe_residual_coefficient(L, r, a, b, c).is_zero()) return false;
      }
    }
  }
  return true;
}

std::string label_name(SolutionLabel l) {
  switch (l) {
  case SolutionLabel::StronglySymmetric: return "strongly_symmetric";
  case SolutionLabel::SkewSymmetric: return "skew_symmetric";
  case SolutionLabel::AlphaBetaSkew: return "alpha_beta_skew_symmetric";
  case SolutionLabel::HeisenbergPNonzero: return "heisenberg_p_nonzero";
  case SolutionLabel::HeisenbergPZero: return "heisenberg_p_zero";
  case SolutionLabel::SemidirectBetaZeroMixed: return "semidirect_beta_zero_mixed";
  case SolutionLabel::SemidirectUnitDeltaMixed: return "semidirect_unit_delta_mixed";
  case SolutionLabel::SemidirectDegenerateZNonzero: return "semidirect_degenerate_z_nonzero";
  case SolutionLabel::SemidirectDegenerateZZero: return "semidirect_degenerate_z_zero";
  case SolutionLabel::Abelian: return "abelian";
  case SolutionLabel::Unclassified: return "unclassified";
  }
  return "?";
}

std::string regime_name(Regime r) {
  switch (r) {
  case Regime::Abelian: return "abelian";
  case Regime::TwoDim: return "two_dim_nonabelian";
  case Regime::CyclicGeneric: return "cyclic_alpha_beta_nonzero";
  case Regime::CyclicZero: return "cyclic_heisenberg";
  case Regime::SemidirectBetaZero: return "semidirect_beta_zero";
  case Regime::SemidirectUnitDelta: return "semidirect_unit_delta";
  case Regime::SemidirectDegenerate: return "semidirect_degenerate";
  case Regime::Uncovered: return "uncovered";
  }
  return "?";
}

Regime solution_regime(const LieAlgebra& L) {
  const auto form = standard_form(L);
  if (!form) return Regime::Uncovered;
  switch (form->kind) {
  case StandardForm::Kind::Abelian: return Regime::Abelian;
  case StandardForm::Kind::NonAbelian2: return Regime::TwoDim;
  case StandardForm::Kind::Cyclic: {
    const bool a0 = form->first->is_zero();
    const bool b0 = form->second->is_zero();
    if (!a0 && !b0) return Regime::CyclicGeneric;
    if (a0 && b0) return Regime::CyclicZero;
    return Regime::Uncovered;
  }
  case StandardForm::Kind::Semidirect: {
    const Scalar& beta = *form->first;
    const Scalar& delta = *form->second;
    if (beta.is_zero()) return delta.is_zero() ? Regime::SemidirectDegenerate : Regime::SemidirectBetaZero;
    if (delta == Scalar::one(L.field())) return Regime::SemidirectUnitDelta;
    return Regime::Uncovered;
  }
  }
  return Regime::Uncovered;
}

namespace {

bool all_zero(std::initializer_list<Scalar> values) {
  for (const Scalar& v : values) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool heisenberg_p_nonzero(const NamedCoefficients& c) {
  return !c.p.is_zero() && c.q == c.p && c.p * c.p == c.x * c.y && c.x * c.u == c.s * c.p &&
         c.x * c.v == c.t * c.p && c.t * c.u == c.v * c.s;
}

bool heisenberg_p_zero(const NamedCoefficients& c) {
  return all_zero({c.p, c.q, c.x * c.y, c.x * c.u, c.x * c.v, c.y * c.s, c.y * c.t}) && c.t * c.u == c.v * c.s;
}

// z = 0, s = -t, u = -v, and the products listed below vanish.
bool semidirect_beta_zero_mixed(const NamedCoefficients& c, const Scalar& delta) {
  const Scalar one = Scalar::one(delta.field());
  if (!(c.z.is_zero() && c.t == -c.s && c.v == -c.u)) return false;
  const Scalar pq = c.q + c.p;
  return all_zero({c.x * c.u, c.x * c.s, c.y * c.s, c.y * c.u, (one - delta) * c.u * c.s,
                   (one + delta) * c.s * pq, (one + delta) * c.u * pq});
}

bool semidirect_unit_delta_mixed(const NamedCoefficients& c) {
  if (!all_zero({c.s, c.t, c.z}) || !(c.v == -c.u)) return false;
  return all_zero({c.x * c.u, c.y * c.u, c.u * (c.q + c.p)});
}

bool semidirect_degenerate_z_nonzero(const NamedCoefficients& c) {
  return !c.z.is_zero() && c.t == c.s && c.z * c.p == c.v * c.s && c.z * c.q == c.u * c.s &&
         c.z * c.x == c.s * c.s;
}

bool semidirect_degenerate_z_zero(const NamedCoefficients& c) {
  if (!(c.z.is_zero() && c.t == -c.s)) return false;
  return all_zero({c.u * c.s, c.v * c.s, c.x * c.s, c.x * c.u, c.x * c.v, c.s * (c.p + c.q)}) &&
         c.u * c.p == c.q * c.v;
}

} // namespace

std::set<SolutionLabel> solution_labels(const LieAlgebra& L, const Tensor2& r) {
  require_compatible(L, r);
  std::set<SolutionLabel> out;
  const Regime regime = solution_regime(L);
  switch (regime) {
  case Regime::Abelian: out.insert(SolutionLabel::Abelian); break;
  case Regime::TwoDim:
    if (is_strongly_symmetric(r)) out.insert(SolutionLabel::StronglySymmetric);
    if (is_skew_symmetric(r)) out.insert(SolutionLabel::SkewSymmetric);
    break;
  case Regime::CyclicGeneric: {
    const auto form = standard_form(L);
    if (is_strongly_symmetric(r)) out.insert(SolutionLabel::StronglySymmetric);
    if (is_alpha_beta_skew(r, *form->first, *form->second)) out.insert(SolutionLabel::AlphaBetaSkew);
    break;
  }
  case Regime::CyclicZero: {
    const NamedCoefficients c = named(r);
    if (heisenberg_p_nonzero(c)) out.insert(SolutionLabel::HeisenbergPNonzero);
    if (heisenberg_p_zero(c)) out.insert(SolutionLabel::HeisenbergPZero);
    break;
  }
  case Regime::SemidirectBetaZero: {
    const auto form = standard_form(L);
    if (is_strongly_symmetric(r)) out.insert(SolutionLabel::StronglySymmetric);
    if (semidirect_beta_zero_mixed(named(r), *form->second)) out.insert(SolutionLabel::SemidirectBetaZeroMixed);
    break;
  }
  case Regime::SemidirectUnitDelta:
    if (is_strongly_symmetric(r)) out.insert(SolutionLabel::StronglySymmetric);
    if (semidirect_unit_delta_mixed(named(r))) out.insert(SolutionLabel::SemidirectUnitDeltaMixed);
    break;
  case Regime::SemidirectDegenerate: {
    const NamedCoefficients c = named(r);
    if (semidirect_degenerate_z_nonzero(c)) out.insert(SolutionLabel::SemidirectDegenerateZNonzero);
    if (semidirect_degenerate_z_zero(c)) out.insert(SolutionLabel::SemidirectDegenerateZZero);
    break;
  }
  case Regime::Uncovered: out.insert(SolutionLabel::Unclassified); break;
  }
  return out;
}

Classification classify_solution(const LieAlgebra& L, const Tensor2& r) {
  const Regime regime = solution_regime(L);
  return Classification{is_cybe_solution(L, r), regime != Regime::Uncovered, regime, solution_labels(L, r)};
}

} // namespace cybe
