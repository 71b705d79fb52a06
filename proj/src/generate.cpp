#include <set>

#include "cybe/cybe.hpp"

namespace cybe {

namespace {

constexpr std::array<std::pair<SolutionCase, const char*>, 11> kCaseNames = {{
    {SolutionCase::StrongZ, "strong_z"},
    {SolutionCase::StrongX, "strong_x"},
    {SolutionCase::StrongY, "strong_y"},
    {SolutionCase::AlphaBetaSkew, "alpha_beta_skew"},
    {SolutionCase::TwoDimSkew, "two_dim_skew"},
    {SolutionCase::HeisenbergPNonzero, "heisenberg_p_nonzero"},
    {SolutionCase::HeisenbergPZero, "heisenberg_p_zero"},
    {SolutionCase::SemidirectBetaZeroMixed, "semidirect_beta_zero_mixed"},
    {SolutionCase::SemidirectUnitDeltaMixed, "semidirect_unit_delta_mixed"},
    {SolutionCase::SemidirectDegenerateZNonzero, "semidirect_degenerate_z_nonzero"},
    {SolutionCase::SemidirectDegenerateZZero, "semidirect_degenerate_z_zero"},
}};

class ParamReader {
public:
  ParamReader(const CaseParams& params, FieldSpec field, std::string case_label)
      : params_(params), field_(field), case_(std::move(case_label)) {
    for (const auto& [name, value] : params_) {
      if (!named_position(name)) fail(std::string("unknown parameter '") + name + "'");
      if (value.field() != field_) fail(std::string("parameter '") + name + "' is not in " + field_.to_string());
    }
  }

  const Scalar& free(char name) {
    used_.insert(name);
    auto it = params_.find(name);
    if (it == params_.end()) fail(std::string("requires parameter '") + name + "'");
    return it->second;
  }

  /// Optional parameter fixed by the case; checked against `expected` when supplied.
  Scalar fixed(char name, const Scalar& expected) {
    used_.insert(name);
    auto it = params_.find(name);
    if (it != params_.end() && !(it->second == expected)) {
      fail(std::string("parameter '") + name + "' must equal " + expected.to_string() + " in this case");
    }
    return expected;
  }

  void require(bool condition, const std::string& what) const {
    if (!condition) fail("requires " + what);
  }

  void finish() const {
    for (const auto& [name, value] : params_) {
      if (!used_.count(name)) fail(std::string("parameter '") + name + "' is not used by this case");
    }
  }

  [[noreturn]] void fail(const std::string& msg) const { throw Error("case " + case_ + ": " + msg); }

  FieldSpec field() const { return field_; }

private:
  const CaseParams& params_;
  FieldSpec field_;
  std::string case_;
  std::set<char> used_;
};

Regime require_regime(const LieAlgebra& L, std::initializer_list<Regime> allowed, const ParamReader& in) {
  const Regime regime = solution_regime(L);
  for (Regime r : allowed) {
    if (r == regime) return regime;
  }
  in.fail("does not apply to an algebra in regime " + regime_name(regime));
}

Tensor2 strong_z(const LieAlgebra& L, ParamReader& in) {
  if (L.dim() != 3) in.fail("needs a dim-3 algebra");
  const Scalar s = in.free('s');
  const Scalar u = in.free('u');
  const Scalar z = in.free('z');
  in.require(!z.is_zero(), "z != 0");
  const Scalar zi = z.inverse();
  const Scalar pq = s * u * zi;
  return from_named({in.fixed('x', s * s * zi), in.fixed('y', u * u * zi), z, in.fixed('p', pq), in.fixed('q', pq),
                     s, in.fixed('t', s), u, in.fixed('v', u)});
}

Tensor2 strong_x(const LieAlgebra& L, ParamReader& in) {
  if (L.dim() != 2 && L.dim() != 3) in.fail("needs a dim-2 or dim-3 algebra");
  const Scalar p = in.free('p');
  const Scalar x = in.free('x');
  in.require(!x.is_zero(), "x != 0");
  Tensor2 r(L.dim(), L.field());
  r(0, 0) = x;
  r(0, 1) = p;
  r(1, 0) = in.fixed('q', p);
  r(1, 1) = in.fixed('y', p * p / x);
  return r;
}

Tensor2 strong_y(const LieAlgebra& L, ParamReader& in) {
  if (L.dim() != 2 && L.dim() != 3) in.fail("needs a dim-2 or dim-3 algebra");
  Tensor2 r(L.dim(), L.field());
  r(1, 1) = in.free('y');
  return r;
}

} // namespace

std::string case_name(SolutionCase c) {
  for (const auto& [value, name] : kCaseNames) {
    if (value == c) return name;
  }
  return "?";
}

SolutionCase parse_case(const std::string& name) {
  for (const auto& [value, text] : kCaseNames) {
    if (name == text) return value;
  }
  throw InputError("unknown solution case '" + name + "'");
}

std::vector<SolutionCase> all_cases() {
  std::vector<SolutionCase> out;
  for (const auto& entry : kCaseNames) out.push_back(entry.first);
  return out;
}

Tensor2 generate_solution(const LieAlgebra& L, SolutionCase c, const CaseParams& params) {
  const FieldSpec f = L.field();
  const Scalar zero = Scalar::zero(f);
  const Scalar one = Scalar::one(f);
  ParamReader in(params, f, case_name(c));
  Tensor2 r(L.dim(), f);

  switch (c) {
  case SolutionCase::StrongZ: r = strong_z(L, in); break;
  case SolutionCase::StrongX: r = strong_x(L, in); break;
  case SolutionCase::StrongY: r = strong_y(L, in); break;

  case SolutionCase::AlphaBetaSkew: {
    require_regime(L, {Regime::CyclicGeneric, Regime::CyclicZero}, in);
    const auto form = standard_form(L);
    const Scalar& alpha = *form->first;
    const Scalar& beta = *form->second;
    const Scalar z = in.free('z');
    const Scalar s = in.free('s');
    const Scalar u = in.free('u');
    const Scalar p = in.free('p');
    in.require((alpha * beta * z * z + beta * s * s + alpha * u * u + p * p).is_zero(),
               "alpha beta z^2 + beta s^2 + alpha u^2 + p^2 = 0");
    r = from_named({in.fixed('x', alpha * z), in.fixed('y', beta * z), z, p, in.fixed('q', -p), s, in.fixed('t', -s),
                    u, in.fixed('v', -u)});
    break;
  }

  case SolutionCase::TwoDimSkew: {
    if (L.dim() != 2) in.fail("needs a dim-2 algebra");
    const Scalar p = in.free('p');
    r(0, 1) = p;
    r(1, 0) = in.fixed('q', -p);
    in.fixed('x', zero);
    in.fixed('y', zero);
    break;
  }

  case SolutionCase::HeisenbergPNonzero: {
    require_regime(L, {Regime::CyclicZero}, in);
    const Scalar p = in.free('p');
    const Scalar x = in.free('x');
    const Scalar u = in.free('u');
    const Scalar v = in.free('v');
    const Scalar z = in.free('z');
    in.require(!p.is_zero(), "p != 0");
    in.require(!x.is_zero(), "x != 0 (p^2 = xy with p != 0)");
    const Scalar pi = p.inverse();
    r = from_named({x, in.fixed('y', p * p / x), z, p, in.fixed('q', p), in.fixed('s', x * u * pi),
                    in.fixed('t', x * v * pi), u, v});
    break;
  }

  case SolutionCase::HeisenbergPZero: {
    require_regime(L, {Regime::CyclicZero}, in);
    const Scalar s = in.free('s'), t = in.free('t'), u = in.free('u'), v = in.free('v');
    const Scalar x = in.free('x'), y = in.free('y'), z = in.free('z');
    in.require((x * y).is_zero() && (x * u).is_zero() && (x * v).is_zero() && (y * s).is_zero() &&
                   (y * t).is_zero(),
               "xy = xu = xv = ys = yt = 0");
    in.require(t * u == v * s, "tu = vs");
    r = from_named({x, y, z, in.fixed('p', zero), in.fixed('q', zero), s, t, u, v});
    break;
  }

  case SolutionCase::SemidirectBetaZeroMixed: {
    require_regime(L, {Regime::SemidirectBetaZero}, in);
    const Scalar delta = *standard_form(L)->second;
    const Scalar p = in.free('p'), q = in.free('q'), s = in.free('s'), u = in.free('u');
    const Scalar x = in.free('x'), y = in.free('y');
    in.require((x * u).is_zero() && (x * s).is_zero() && (y * s).is_zero() && (y * u).is_zero(),
               "xu = xs = ys = yu = 0");
    in.require(((one - delta) * u * s).is_zero(), "(1 - delta) us = 0");
    in.require(((one + delta) * s * (q + p)).is_zero() && ((one + delta) * u * (q + p)).is_zero(),
               "(1 + delta) s (q + p) = (1 + delta) u (q + p) = 0");
    r = from_named({x, y, in.fixed('z', zero), p, q, s, in.fixed('t', -s), u, in.fixed('v', -u)});
    break;
  }

  case SolutionCase::SemidirectUnitDeltaMixed: {
    require_regime(L, {Regime::SemidirectUnitDelta}, in);
    const Scalar p = in.free('p'), q = in.free('q'), u = in.free('u');
    const Scalar x = in.free('x'), y = in.free('y');
    in.require((x * u).is_zero() && (y * u).is_zero() && (u * (q + p)).is_zero(), "xu = yu = u (q + p) = 0");
    r = from_named({x, y, in.fixed('z', zero), p, q, in.fixed('s', zero), in.fixed('t', zero), u, in.fixed('v', -u)});
    break;
  }

  case SolutionCase::SemidirectDegenerateZNonzero: {
    require_regime(L, {Regime::SemidirectDegenerate}, in);
    const Scalar z = in.free('z'), s = in.free('s'), u = in.free('u'), v = in.free('v'), y = in.free('y');
    in.require(!z.is_zero(), "z != 0");
    const Scalar zi = z.inverse();
    r = from_named({in.fixed('x', s * s * zi), y, z, in.fixed('p', v * s * zi), in.fixed('q', u * s * zi), s,
                    in.fixed('t', s), u, v});
    break;
  }

  case SolutionCase::SemidirectDegenerateZZero: {
    require_regime(L, {Regime::SemidirectDegenerate}, in);
    const Scalar p = in.free('p'), q = in.free('q'), s = in.free('s'), u = in.free('u'), v = in.free('v');
    const Scalar x = in.free('x'), y = in.free('y');
    in.require((u * s).is_zero() && (v * s).is_zero() && (x * s).is_zero() && (x * u).is_zero() &&
                   (x * v).is_zero(),
               "us = vs = xs = xu = xv = 0");
    in.require(u * p == q * v, "up = qv");
    in.require((s * (p + q)).is_zero(), "s (p + q) = 0");
    r = from_named({x, y, in.fixed('z', zero), p, q, s, in.fixed('t', -s), u, v});
    break;
  }
  }

  in.finish();
  return r;
}

} // namespace cybe
