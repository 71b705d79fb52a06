#include "cybe/bialgebra.hpp"

namespace cybe {

namespace {

// ad(x)(a, i) = coefficient of e_a in [x, e_i].
SquareMatrix adjoint(const LieAlgebra& L, const Vector& x) {
  const std::size_t n = L.dim();
  SquareMatrix ad(n, L.field());
  for (std::size_t a = 0; a < n; ++a) {
    for (const auto& term : L.terms_into(a)) {
      if (x[term.i].is_zero()) continue;
      ad(a, term.j) += x[term.i] * term.value;
    }
  }
  return ad;
}

std::vector<WitnessEntry> nonzero2(const Tensor2& t) {
  std::vector<WitnessEntry> out;
  for (std::size_t a = 0; a < t.dim(); ++a) {
    for (std::size_t b = 0; b < t.dim(); ++b) {
      if (!t(a, b).is_zero()) out.push_back(WitnessEntry{{a, b}, t(a, b)});
    }
  }
  return out;
}

std::vector<WitnessEntry> nonzero3(const Tensor3& t) {
  std::vector<WitnessEntry> out;
  for (auto& e : nonzero_entries(t)) out.push_back(WitnessEntry{{e.i, e.j, e.m}, std::move(e.value)});
  return out;
}

void require_skew(const Tensor2& r) {
  if (!is_skew_symmetric(r)) throw Error("closed-form bialgebra conditions require a skew-symmetric r");
}

} // namespace

Tensor2 ad_action(const LieAlgebra& L, const Vector& x, const Tensor2& r) {
  const std::size_t n = L.dim();
  if (x.size() != n || r.dim() != n) throw Error("ad_action: dimension mismatch");
  const SquareMatrix ad = adjoint(L, x);
  Tensor2 out(n, L.field());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Scalar acc = Scalar::zero(L.field());
      for (std::size_t m = 0; m < n; ++m) {
        if (!ad(a, m).is_zero() && !r(m, b).is_zero()) acc += ad(a, m) * r(m, b);
        if (!ad(b, m).is_zero() && !r(a, m).is_zero()) acc += r(a, m) * ad(b, m);
      }
      out(a, b) = std::move(acc);
    }
  }
  return out;
}

Tensor2 Cobracket::apply(const Vector& x) const {
  if (images.empty() || x.size() != images.size()) throw Error("cobracket: dimension mismatch");
  Tensor2 out(images.size(), images.front().field());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) out += x[i] * images[i];
  }
  return out;
}

Cobracket cobracket(const LieAlgebra& L, const Tensor2& r) {
  Cobracket delta;
  for (std::size_t i = 0; i < L.dim(); ++i) delta.images.push_back(ad_action(L, basis_vector(L.dim(), i, L.field()), r));
  return delta;
}

AxiomCheck check_coantisymmetry(const Cobracket& delta) {
  AxiomCheck out{true, {}};
  for (std::size_t i = 0; i < delta.dim(); ++i) {
    const Tensor2& d = delta.images[i];
    if (is_skew_symmetric(d)) continue;
    out.ok = false;
    out.witnesses.push_back(AxiomWitness{i, std::nullopt, nonzero2(d + twist_tau(d))});
  }
  return out;
}

Tensor3 iterated_cobracket(const Cobracket& delta, std::size_t i) {
  const std::size_t n = delta.dim();
  const Tensor2& d = delta.images.at(i);
  Tensor3 t(n, d.field());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (d(a, b).is_zero()) continue;
      const Tensor2& db = delta.images[b];
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t e = 0; e < n; ++e) {
          if (!db(c, e).is_zero()) t(a, c, e) += d(a, b) * db(c, e);
        }
      }
    }
  }
  return t;
}

AxiomCheck check_cojacobi(const Cobracket& delta) {
  AxiomCheck out{true, {}};
  for (std::size_t i = 0; i < delta.dim(); ++i) {
    const Tensor3 t = iterated_cobracket(delta, i);
    const Tensor3 xt = cycle_xi(t);
    Tensor3 sum = t;
    sum += xt;
    sum += cycle_xi(xt);
    if (sum.is_zero()) continue;
    out.ok = false;
    out.witnesses.push_back(AxiomWitness{i, std::nullopt, nonzero3(sum)});
  }
  return out;
}

AxiomCheck check_compatibility(const LieAlgebra& L, const Cobracket& delta) {
  const std::size_t n = L.dim();
  if (delta.dim() != n) throw Error("cobracket dimension does not match the algebra");
  AxiomCheck out{true, {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector ei = basis_vector(n, i, L.field());
      const Vector ej = basis_vector(n, j, L.field());
      Tensor2 diff = delta.apply(bracket(L, ei, ej));
      diff -= ad_action(L, ei, delta.images[j]);
      diff += ad_action(L, ej, delta.images[i]);
      if (diff.is_zero()) continue;
      out.ok = false;
      out.witnesses.push_back(AxiomWitness{i, j, nonzero2(diff)});
    }
  }
  return out;
}

BialgebraReport bialgebra_check(const LieAlgebra& L, const Tensor2& r) {
  const Cobracket delta = cobracket(L, r);
  BialgebraReport rep{is_skew_symmetric(r),  check_coantisymmetry(delta), check_cojacobi(delta),
                      check_compatibility(L, delta), is_cybe_solution(L, r), false, false};
  rep.is_coboundary = rep.r_in_image && rep.coantisymmetry.ok && rep.cojacobi.ok && rep.compatibility.ok;
  rep.is_triangular = rep.is_coboundary && rep.is_cybe_solution;
  return rep;
}

Scalar semidirect_cojacobi_expanded(const Scalar& beta, const Scalar& delta, const Scalar& s, const Scalar& u) {
  return delta * delta * u * s + delta * beta * s * s + beta * s * s - u * s;
}

Scalar semidirect_cojacobi_factored(const Scalar& beta, const Scalar& delta, const Scalar& s, const Scalar& u) {
  const Scalar one = Scalar::one(beta.field());
  return (delta + one) * ((delta - one) * u + beta * s) * s;
}

std::optional<bool> coboundary_predicate(const LieAlgebra& L, const Tensor2& r) {
  require_skew(r);
  const auto form = standard_form(L);
  if (!form) return std::nullopt;
  switch (form->kind) {
  case StandardForm::Kind::Abelian:
  case StandardForm::Kind::NonAbelian2: return true;
  case StandardForm::Kind::Cyclic: {
    const bool a0 = form->first->is_zero();
    const bool b0 = form->second->is_zero();
    if (a0 != b0) return std::nullopt;
    return true;
  }
  case StandardForm::Kind::Semidirect: {
    const NamedCoefficients c = named(r);
    return semidirect_cojacobi_factored(*form->first, *form->second, c.s, c.u).is_zero();
  }
  }
  return std::nullopt;
}

std::optional<bool> triangular_predicate(const LieAlgebra& L, const Tensor2& r) {
  require_skew(r);
  const auto form = standard_form(L);
  if (!form) return std::nullopt;
  switch (form->kind) {
  case StandardForm::Kind::Abelian:
  case StandardForm::Kind::NonAbelian2: return true;
  case StandardForm::Kind::Cyclic: {
    const Scalar& alpha = *form->first;
    const Scalar& beta = *form->second;
    if (alpha.is_zero() != beta.is_zero()) return std::nullopt;
    const NamedCoefficients c = named(r);
    return (beta * c.s * c.s + alpha * c.u * c.u + c.p * c.p).is_zero();
  }
  case StandardForm::Kind::Semidirect: {
    const Scalar& beta = *form->first;
    const Scalar& delta = *form->second;
    const Scalar one = Scalar::one(L.field());
    const NamedCoefficients c = named(r);
    if (beta.is_zero()) return ((one - delta) * c.u * c.s).is_zero();
    if (delta == one) return c.s.is_zero();
    return std::nullopt;
  }
  }
  return std::nullopt;
}

} // namespace cybe
