#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "cybe/error.hpp"

namespace cybe {

/// True iff p is an odd prime. Deterministic trial division; intended for p < 2^32.
bool is_odd_prime(std::uint64_t p);

/// Ground field: the rationals, or F_p for an odd prime p (characteristic 2 is excluded).
class FieldSpec {
public:
  enum class Kind { Rational, Prime };

  static FieldSpec rational() { return FieldSpec(Kind::Rational, 0); }
  /// Throws InputError unless p is an odd prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  /// 0 for the rationals.
  std::uint32_t modulus() const { return p_; }

  /// "Q" or "F_p".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
  friend class Scalar;
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

/// Exact field element. Rationals are kept reduced with positive denominator;
/// residues are kept in [0, p). Operations between different fields throw.
class Scalar {
public:
  /// Rational zero.
  Scalar() : value_(mpq_class(0)) {}

  static Scalar zero(FieldSpec field) { return from_int(0, field); }
  static Scalar one(FieldSpec field) { return from_int(1, field); }
  static Scalar from_int(long long v, FieldSpec field);
  static Scalar from_rational(const mpq_class& q);
  /// `-?digits(/digits)?` over Q, `-?digits` over F_p.
  static Scalar parse(std::string_view text, FieldSpec field);

  FieldSpec field() const;

  bool is_zero() const {
    if (auto r = std::get_if<Residue>(&value_)) return r->value == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
  }

  /// Throws Error on zero.
  Scalar inverse() const;
  /// Canonical text: "n", "n/d" or the least non-negative residue.
  std::string to_string() const;

  /// Rational value; throws for residues.
  const mpq_class& rational() const;
  /// Residue in [0, p); throws for rationals.
  std::uint32_t residue() const;

  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  /// Exact equality; throws on mixed fields.
  friend bool operator==(const Scalar& a, const Scalar& b);

private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };

  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  Scalar(std::uint32_t value, std::uint32_t modulus) : value_(Residue{value, modulus}) {}

  void require_same_field(const Scalar& b) const;

  std::variant<mpq_class, Residue> value_;
};

} // namespace cybe
