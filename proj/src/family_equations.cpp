#include "cybe/cybe.hpp"

namespace cybe {

namespace {

// Basis triples, 1-based, in the order the hand expansion lists the
// coefficients of the residual.
constexpr std::array<std::array<int, 3>, 27> kTriples = {{
    {1, 1, 1}, {2, 2, 2}, {3, 3, 3}, {1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {1, 3, 2}, {3, 2, 1}, {2, 1, 3},
    {1, 1, 2}, {2, 1, 1}, {1, 1, 3}, {3, 1, 1}, {2, 2, 1}, {1, 2, 2}, {2, 2, 3}, {3, 2, 2}, {3, 3, 1},
    {3, 3, 2}, {2, 3, 3}, {1, 3, 3}, {1, 3, 1}, {1, 2, 1}, {2, 1, 2}, {2, 3, 2}, {3, 2, 3}, {3, 1, 3},
}};

// In the semidirect table six coefficients vanish identically; the remaining
// 21 equations correspond to these entries of kTriples.
constexpr std::array<int, 21> kSemidirectRows = {0,  1,  3,  4,  5,  6,  7,  8,  9,  10, 11,
                                                 12, 13, 14, 15, 16, 22, 23, 24, 25, 26};

std::array<std::size_t, 3> triple(int row) {
  const auto& t = kTriples[static_cast<std::size_t>(row)];
  return {static_cast<std::size_t>(t[0] - 1), static_cast<std::size_t>(t[1] - 1),
          static_cast<std::size_t>(t[2] - 1)};
}

std::vector<Scalar> cyclic_equations(const NamedCoefficients& c, const Scalar& al, const Scalar& be) {
  const Scalar &x = c.x, &y = c.y, &z = c.z, &p = c.p, &q = c.q, &s = c.s, &t = c.t, &u = c.u, &v = c.v;
  return {
      al * p * t - al * q * s,
      be * q * v - be * p * u,
      t * u - v * s,
      al * y * z - be * x * z + x * y - al * u * v + be * s * s - p * q,
      be * z * x - y * x + al * y * z - be * s * t + q * q - al * u * v,
      x * y - al * z * y + be * z * x - p * q + al * v * v - be * s * t,
      -(al * z * y) + x * y - be * x * z + al * u * v - p * p + be * s * t,
      -(x * y) + be * x * z - al * y * z + p * q - be * t * t + al * u * v,
      -(be * x * z) + al * y * z - y * x + be * s * t - al * u * u + p * q,
      al * (-(t * y) + q * v + p * v - s * y),
      al * (-(u * q) + y * t + y * s - u * p),
      al * (q * z - t * u + p * z - s * u),
      al * (v * t - z * q + v * s - z * p),
      be * (-(p * t) + v * x + u * x - q * t),
      be * (-(x * v) + s * p - x * u + s * q),
      be * (v * s - p * z + u * s - q * z),
      be * (-(t * v) + z * p + z * q - t * u),
      s * q - u * x + t * q - v * x,
      -(u * p) + s * y - v * p + t * y,
      q * u - y * s + q * v - y * t,
      -(p * s) + x * u - p * t + x * v,
      al * u * t - al * z * q - p * x + x * q + al * p * z - al * s * v,
      -(al * v * q) + al * y * t - be * x * t + be * s * x - al * s * y + al * p * u,
      be * t * p - be * x * v + al * y * v - al * u * y - be * q * s + be * u * x,
      -(be * s * v) + be * z * p + q * y - y * p - be * q * z + be * u * t,
      p * u - y * s - be * t * z + be * z * s + t * y - v * q,
      -(q * s) + x * u + al * v * z - al * z * u + t * p - v * x,
  };
}

std::vector<Scalar> semidirect_equations(const NamedCoefficients& c, const Scalar& be, const Scalar& de) {
  const Scalar &x = c.x, &y = c.y, &z = c.z, &p = c.p, &q = c.q, &s = c.s, &t = c.t, &u = c.u, &v = c.v;
  return {
      -(s * x) + x * t,
      -(be * u * p) + be * q * v - de * u * y + de * y * v,
      -(v * s) + p * z - be * s * s + be * x * z - de * s * u + de * z * p,
      -(be * x * z) + be * s * t - de * z * q + de * u * t - u * t + q * z,
      -(z * p) + t * v - be * z * x + be * t * s - de * z * p + de * v * s,
      -(z * p) + s * v - be * s * t + be * x * z - de * s * v + de * z * p,
      -(be * z * x) + be * t * t - de * z * q + de * v * t - z * q + t * u,
      -(be * s * t) + be * x * z - de * t * u + de * q * z - u * s + q * z,
      -(t * p) + x * v - s * p + v * x,
      -(u * x) + q * t - u * x + q * s,
      -(s * t) + x * z - s * s + x * z,
      -(z * x) + t * t - z * x + s * t,
      -(be * v * x) + be * p * t - de * v * q + de * y * t - be * u * x + be * q * t - de * u * q + de * y * t,
      -(be * s * p) + be * x * v - de * s * y + de * p * v - be * s * q + be * x * u - de * s * y + de * p * u,
      -(be * v * s) + be * p * z - de * v * u + de * y * z - be * s * u + be * z * q - de * u * u + de * y * z,
      -(be * z * p) + be * t * v - de * z * y + de * v * v - be * z * q + be * t * u - de * z * y + de * v * u,
      -(v * x) + p * t - be * s * x + be * x * t - de * s * q + de * p * t - s * q + x * u,
      -(be * p * t) + be * v * x - de * t * y + de * q * v - u * p + q * v - be * u * x + be * q * s -
          de * u * p + de * y * s,
      -(be * z * p) + be * s * v - be * u * t + be * q * z,
      -(be * z * s) + be * t * z - de * z * u + de * v * z,
      -(z * s) + t * z,
  };
}

} // namespace

EquationSystem equation_system_for(const LieAlgebra& L) {
  const auto form = standard_form(L);
  if (L.dim() == 3 && form) {
    if (form->kind == StandardForm::Kind::Cyclic) return EquationSystem::Cyclic;
    if (form->kind == StandardForm::Kind::Semidirect) return EquationSystem::Semidirect;
  }
  throw Error("coefficient equations need a dim-3 table of cyclic or semidirect shape");
}

std::vector<EquationValue> family_equations(const LieAlgebra& L, const Tensor2& r) {
  const EquationSystem system = equation_system_for(L);
  if (r.dim() != 3 || r.field() != L.field()) throw Error("tensor does not match the algebra");
  const auto form = standard_form(L);
  const NamedCoefficients c = named(r);

  std::vector<EquationValue> out;
  if (system == EquationSystem::Cyclic) {
    auto values = cyclic_equations(c, *form->first, *form->second);
    for (std::size_t i = 0; i < values.size(); ++i) {
      out.push_back(EquationValue{static_cast<int>(i), triple(static_cast<int>(i)), std::move(values[i])});
    }
  } else {
    auto values = semidirect_equations(c, *form->first, *form->second);
    for (std::size_t i = 0; i < values.size(); ++i) {
      out.push_back(EquationValue{static_cast<int>(i), triple(kSemidirectRows[i]), std::move(values[i])});
    }
  }
  return out;
}

} // namespace cybe
