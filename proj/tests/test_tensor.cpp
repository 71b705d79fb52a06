#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cybe/enumerate.hpp"
#include "cybe/tensor.hpp"
#include "oracle.hpp"

using namespace cybe;

namespace {

const FieldSpec Q = FieldSpec::rational();
Scalar n(long long v, FieldSpec f = Q) { return Scalar::from_int(v, f); }

Tensor2 grid(std::size_t dim, std::initializer_list<long long> values, FieldSpec f = Q) {
  Tensor2 r(dim, f);
  std::size_t i = 0;
  for (long long v : values) r.entries()[i++] = n(v, f);
  return r;
}

NamedCoefficients zero_named(FieldSpec f = Q) {
  const Scalar z = Scalar::zero(f);
  return {z, z, z, z, z, z, z, z, z};
}

// Every tensor of the given dimension over F_p, in grid order.
template <class F> void for_all_tensors(std::size_t dim, FieldSpec f, F&& body) {
  const std::size_t len = dim * dim;
  Grid g(len, 0);
  while (true) {
    body(grid_to_tensor(g, f));
    std::size_t pos = len;
    while (pos > 0) {
      --pos;
      if (++g[pos] < f.modulus()) break;
      g[pos] = 0;
      if (pos == 0) return;
    }
  }
}

// Direct quantifier check written out independently of the library.
bool rank_one_symmetric(const Tensor2& r) {
  const std::size_t d = r.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (!(r(i, j) == r(j, i))) return false;
      for (std::size_t l = 0; l < d; ++l)
        for (std::size_t m = 0; m < d; ++m)
          if (!(r(i, j) * r(l, m) == r(i, l) * r(j, m))) return false;
    }
  return true;
}

} // namespace

TEST_CASE("twist and cycle examples") {
  CHECK(twist_tau(grid(3, {0, 1, 0, 0, 0, 0, 0, 0, 0})) == grid(3, {0, 0, 0, 1, 0, 0, 0, 0, 0}));
  const Tensor2 sym = grid(3, {1, 2, 3, 2, 5, 6, 3, 6, 9});
  CHECK(twist_tau(sym) == sym);
  CHECK(one_minus_tau(sym).is_zero());

  Tensor3 t(3, Q);
  t(0, 1, 2) = n(1);
  Tensor3 expected(3, Q);
  expected(1, 2, 0) = n(1);
  CHECK(cycle_xi(t) == expected);

  Tensor3 diag(3, Q);
  diag(0, 0, 0) = n(1);
  CHECK(cycle_xi(diag) == diag);
}

TEST_CASE("tau and xi are involution and order three") {
  for (FieldSpec f : {Q, FieldSpec::prime(5)}) {
    oracle::Rng rng(77 + f.modulus());
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t d = static_cast<std::size_t>(rng.integer(1, 3));
      const Tensor2 r = rng.tensor(d, f);
      REQUIRE(twist_tau(twist_tau(r)) == r);
      const Tensor3 t = rng.tensor3(d, f);
      REQUIRE(cycle_xi(cycle_xi(cycle_xi(t))) == t);
      // Coefficient of e_a (x) e_b (x) e_c in xi(t) is t(c, a, b).
      const Tensor3 x = cycle_xi(t);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          for (std::size_t c = 0; c < d; ++c) REQUIRE(x(a, b, c) == t(c, a, b));
    }
  }
}

TEST_CASE("skew symmetry examples") {
  CHECK(is_skew_symmetric(grid(2, {0, 1, -1, 0})));
  CHECK_FALSE(is_skew_symmetric(grid(2, {1, 0, 0, 0})));
  CHECK(is_skew_symmetric(Tensor2(3, Q)));
  CHECK(is_symmetric(Tensor2(3, Q)));
}

TEST_CASE("strong symmetry examples") {
  CHECK(is_strongly_symmetric(grid(2, {1, 1, 1, 1})));
  CHECK_FALSE(is_strongly_symmetric(grid(2, {0, 1, 1, 0})));
  NamedCoefficients c = zero_named();
  c.z = n(1);
  c.s = c.t = n(2);
  c.x = n(4);
  CHECK(is_strongly_symmetric(from_named(c)));
  CHECK(strong_family_of(from_named(c)) == StrongFamily::ZNonzero);
  CHECK_FALSE(is_strongly_symmetric(grid(2, {1, 2, 1, 4}))); // not symmetric
}

TEST_CASE("alpha beta skew examples") {
  const Scalar a = n(4), b = n(-4);
  NamedCoefficients c = zero_named();
  c.s = n(1), c.t = n(-1), c.p = n(2), c.q = n(-2);
  CHECK(is_alpha_beta_skew(from_named(c), a, b));
  c.p = n(1), c.q = n(-1);
  CHECK_FALSE(is_alpha_beta_skew(from_named(c), a, b));

  NamedCoefficients d = zero_named();
  d.z = n(1), d.x = n(4), d.y = n(-4), d.u = n(2), d.v = n(-2);
  CHECK(is_alpha_beta_skew(from_named(d), a, b));
  d.x = n(3);
  CHECK_FALSE(is_alpha_beta_skew(from_named(d), a, b));
  CHECK_THROWS_AS(is_alpha_beta_skew(Tensor2(2, Q), a, b), Error);
}

TEST_CASE("named view") {
  NamedCoefficients c{n(1), n(2), n(3), n(4), n(5), n(6), n(7), n(8), n(9)};
  const Tensor2 r = from_named(c);
  CHECK(r == grid(3, {1, 4, 6, 5, 2, 8, 7, 9, 3}));
  CHECK(named(r).v == n(9));
  CHECK(named_position('p') == std::make_pair<std::size_t, std::size_t>(0, 1));
  CHECK(named_position('t') == std::make_pair<std::size_t, std::size_t>(2, 0));
  CHECK_FALSE(named_position('w').has_value());
  CHECK_THROWS_AS(named(Tensor2(2, Q)), Error);
}

TEST_CASE("reduced strong symmetry forms agree with the quantifier form on all of F_3 (dim 3)") {
  const FieldSpec F3 = FieldSpec::prime(3);
  std::size_t strong = 0;
  for_all_tensors(3, F3, [&](const Tensor2& r) {
    const bool truth = rank_one_symmetric(r);
    REQUIRE(is_strongly_symmetric(r) == truth);
    for (auto form : {StrongSymmetryTest::FullSystem, StrongSymmetryTest::ViaXuSp, StrongSymmetryTest::ViaYsUp,
                      StrongSymmetryTest::ViaZpSu, StrongSymmetryTest::ExplicitFamilies}) {
      REQUIRE(is_strongly_symmetric_reduced(r, form) == truth);
    }
    REQUIRE(strong_family_of(r).has_value() == truth);
    strong += truth;
  });
  // Rank <= 1 symmetric 3x3 over F_3: zero plus c v v^T with v projective (13) and c in F_3^x (2).
  CHECK(strong == 27);
}

TEST_CASE("reduced strong symmetry in dims 1 and 2") {
  for (std::uint32_t p : {3u, 5u}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (std::size_t d : {1u, 2u}) {
      for_all_tensors(d, f, [&](const Tensor2& r) {
        const bool truth = rank_one_symmetric(r);
        REQUIRE(is_strongly_symmetric(r) == truth);
        REQUIRE(is_strongly_symmetric_reduced(r, StrongSymmetryTest::FullSystem) == truth);
        REQUIRE(is_strongly_symmetric_reduced(r, StrongSymmetryTest::ExplicitFamilies) == truth);
      });
    }
  }
}

TEST_CASE("skew tensors are exactly the image of 1 - tau on F_3 grids") {
  const FieldSpec F3 = FieldSpec::prime(3);
  const Scalar half = Scalar::from_int(2, F3).inverse();
  for_all_tensors(3, F3, [&](const Tensor2& r) {
    if (is_skew_symmetric(r)) {
      REQUIRE(one_minus_tau(half * r) == r);
    }
    // Every image of 1 - tau is skew.
    REQUIRE(is_skew_symmetric(one_minus_tau(r)));
  });
}

TEST_CASE("change of basis") {
  const Tensor2 r = grid(3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(change_basis(r, SquareMatrix::identity(3, Q)) == r);

  SquareMatrix swap(2, Q);
  swap(0, 1) = n(1);
  swap(1, 0) = n(1);
  CHECK(change_basis(grid(2, {1, 0, 0, 0}), swap) == grid(2, {0, 0, 0, 1}));

  SquareMatrix singular(2, Q);
  singular(0, 0) = n(1);
  singular(0, 1) = n(2);
  singular(1, 0) = n(2);
  singular(1, 1) = n(4);
  CHECK(determinant(singular).is_zero());
  CHECK_THROWS_AS(change_basis(grid(2, {1, 0, 0, 0}), singular), Error);
  CHECK(determinant(swap) == n(-1));
}

TEST_CASE("strong and skew symmetry survive random basis changes") {
  oracle::Rng rng(2024);
  int done = 0;
  while (done < 200) {
    const std::size_t d = static_cast<std::size_t>(rng.integer(2, 3));
    SquareMatrix m(d, Q);
    for (auto& a : m.a) a = rng.scalar(Q);
    if (determinant(m).is_zero()) continue;
    const Vector v = rng.vector(d, Q);
    const Tensor2 strong = rng.nonzero(Q) * outer(v, v);
    REQUIRE(is_strongly_symmetric(strong));
    REQUIRE(is_strongly_symmetric(change_basis(strong, m)));
    REQUIRE(is_skew_symmetric(change_basis(rng.skew(d, Q), m)));
    ++done;
  }
}
