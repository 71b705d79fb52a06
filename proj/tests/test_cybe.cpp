#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cybe/cybe.hpp"
#include "oracle.hpp"

using namespace cybe;

namespace {

const FieldSpec Q = FieldSpec::rational();
Scalar n(long long v, FieldSpec f = Q) { return Scalar::from_int(v, f); }

Tensor2 entries(std::size_t dim, std::initializer_list<std::tuple<std::size_t, std::size_t, long long>> list,
                FieldSpec f = Q) {
  Tensor2 r(dim, f);
  for (const auto& [i, j, v] : list) r(i - 1, j - 1) = n(v, f);
  return r;
}

const Tensor2 kWedge12 = entries(3, {{1, 2, 1}, {2, 1, -1}});

} // namespace

TEST_CASE("residual examples") {
  for (const auto& L : oracle::sample_algebras(Q)) {
    CHECK(cybe_residual(L, Tensor2(L.dim(), Q)).is_zero);
  }
  const LieAlgebra ii = make_family(FamilyParams::ii(n(2), n(3)), Q);
  const ResidualReport rep = cybe_residual(ii, kWedge12);
  CHECK_FALSE(rep.is_zero);
  CHECK(rep.residual(0, 1, 2) == n(1)); // -pq with p = 1, q = -1
  CHECK_FALSE(rep.nonzero_entries.empty());

  const LieAlgebra sl2 = make_family(FamilyParams::sl2(), Q);
  const Tensor2 r = entries(3, {{1, 1, 4}, {2, 2, -4}, {3, 3, 1}, {2, 3, 2}, {3, 2, -2}});
  CHECK(cybe_residual(sl2, r).is_zero);
  CHECK(is_cybe_solution(sl2, r));
}

TEST_CASE("is_cybe_solution examples") {
  const LieAlgebra sl2 = make_family(FamilyParams::sl2(), Q);
  CHECK(is_cybe_solution(sl2, entries(3, {{1, 1, 1}})));
  CHECK_FALSE(is_cybe_solution(sl2, kWedge12));
  const LieAlgebra vi = make_family(FamilyParams::vi(), Q);
  CHECK(is_cybe_solution(vi, entries(2, {{1, 2, 1}, {2, 1, -1}})));
  CHECK_THROWS_AS(is_cybe_solution(vi, kWedge12), Error);
  CHECK_THROWS_AS(cybe_residual(sl2, Tensor2(3, FieldSpec::prime(5))), Error);
}

TEST_CASE("residual report invariants and agreement with the bracket oracle") {
  for (FieldSpec f : {Q, FieldSpec::prime(5)}) {
    oracle::Rng rng(99 + f.modulus());
    for (const auto& L : oracle::sample_algebras(f)) {
      CAPTURE(L.label());
      for (int trial = 0; trial < 60; ++trial) {
        const Tensor2 r = rng.tensor(L.dim(), f);
        const ResidualReport rep = cybe_residual(L, r);
        REQUIRE(rep.residual == oracle::residual(L, r));
        REQUIRE(rep.is_zero == rep.residual.is_zero());
        REQUIRE(rep.is_zero == rep.nonzero_entries.empty());
        REQUIRE(rep.is_zero == is_cybe_solution(L, r));
        for (const auto& e : rep.nonzero_entries) {
          REQUIRE(rep.residual(e.i, e.j, e.m) == e.value);
          REQUIRE(cybe_residual_coefficient(L, r, e.i, e.j, e.m) == e.value);
        }
      }
    }
  }
}

TEST_CASE("residual scales quadratically") {
  oracle::Rng rng(314);
  for (const auto& L : oracle::sample_algebras(Q)) {
    for (int trial = 0; trial < 40; ++trial) {
      const Tensor2 r = rng.tensor(L.dim(), Q);
      const Scalar c = rng.scalar(Q);
      const Tensor3 base = cybe_residual(L, r).residual;
      const Tensor3 scaled = cybe_residual(L, c * r).residual;
      for (std::size_t i = 0; i < base.entries().size(); ++i) REQUIRE(scaled.entries()[i] == c * c * base.entries()[i]);
    }
  }
}

TEST_CASE("classification examples") {
  const LieAlgebra sl2 = make_family(FamilyParams::sl2(), Q);
  const Classification a = classify_solution(sl2, entries(3, {{1, 1, 1}}));
  CHECK(a.is_solution);
  CHECK(a.covered);
  CHECK(a.labels == std::set<SolutionLabel>{SolutionLabel::StronglySymmetric});

  const LieAlgebra vi = make_family(FamilyParams::vi(), Q);
  const Classification b = classify_solution(vi, entries(2, {{1, 2, 1}, {2, 1, -1}}));
  CHECK(b.is_solution);
  CHECK(b.labels == std::set<SolutionLabel>{SolutionLabel::SkewSymmetric});

  const LieAlgebra ii = make_family(FamilyParams::ii(n(1), n(1)), Q);
  const Classification c = classify_solution(ii, kWedge12);
  CHECK_FALSE(c.is_solution);
  CHECK(c.labels.empty());

  // The zero tensor carries overlapping labels.
  const Classification z = classify_solution(sl2, Tensor2(3, Q));
  CHECK(z.labels == std::set<SolutionLabel>{SolutionLabel::StronglySymmetric, SolutionLabel::AlphaBetaSkew});
}

TEST_CASE("regimes") {
  CHECK(solution_regime(make_family(FamilyParams::sl2(), Q)) == Regime::CyclicGeneric);
  CHECK(solution_regime(make_family(FamilyParams::iii(), Q)) == Regime::CyclicZero);
  CHECK(solution_regime(make_family(FamilyParams::ii(n(1), n(0)), Q)) == Regime::Uncovered);
  CHECK(solution_regime(make_family(FamilyParams::ii(n(0), n(2)), Q)) == Regime::Uncovered);
  CHECK(solution_regime(make_family(FamilyParams::iv(n(0), n(2)), Q)) == Regime::SemidirectBetaZero);
  CHECK(solution_regime(make_family(FamilyParams::iv(n(3), n(1)), Q)) == Regime::SemidirectUnitDelta);
  CHECK(solution_regime(make_family(FamilyParams::iv(n(3), n(2)), Q)) == Regime::Uncovered);
  CHECK(solution_regime(make_family(FamilyParams::v(), Q)) == Regime::SemidirectDegenerate);
  CHECK(solution_regime(make_family(FamilyParams::vi(), Q)) == Regime::TwoDim);
  CHECK(solution_regime(make_family(FamilyParams::abelian(3), Q)) == Regime::Abelian);

  const LieAlgebra mixed = make_family(FamilyParams::ii(n(1), n(0)), Q);
  const Classification c = classify_solution(mixed, Tensor2(3, Q));
  CHECK_FALSE(c.covered);
  CHECK(c.is_solution);
  CHECK(c.labels == std::set<SolutionLabel>{SolutionLabel::Unclassified});
}

TEST_CASE("strongly symmetric tensors solve the CYBE in every family") {
  oracle::Rng rng(17);
  for (const auto& L : oracle::sample_algebras(Q)) {
    for (int trial = 0; trial < 100; ++trial) {
      const Vector v = rng.vector(L.dim(), Q);
      REQUIRE(is_cybe_solution(L, rng.scalar(Q) * outer(v, v)));
    }
  }
}

TEST_CASE("alpha beta skew tensors solve the CYBE on family II") {
  // Sweep small parameters and keep the points on the quadric.
  for (auto [al, be] : {std::pair{4, -4}, {1, -1}, {2, -8}, {-1, -1}, {3, 5}}) {
    const Scalar a = n(al), b = n(be);
    const LieAlgebra L = make_cyclic(a, b);
    int hits = 0;
    for (int z = -3; z <= 3; ++z)
      for (int s = -3; s <= 3; ++s)
        for (int u = -3; u <= 3; ++u)
          for (int p = -6; p <= 6; ++p) {
            const Scalar Z = n(z), S = n(s), U = n(u), P = n(p);
            if (!(a * b * Z * Z + b * S * S + a * U * U + P * P).is_zero()) continue;
            const Tensor2 r = from_named({a * Z, b * Z, Z, P, -P, S, -S, U, -U});
            REQUIRE(is_alpha_beta_skew(r, a, b));
            REQUIRE(is_cybe_solution(L, r));
            ++hits;
          }
    CAPTURE(al);
    CHECK(hits >= 1);
  }
}
