#include "cybe/scalar.hpp"

#include <cctype>

namespace cybe {

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2) throw InputError("characteristic 2 is not supported (p must be an odd prime)");
  if (p >= (std::uint64_t{1} << 31) || !is_odd_prime(p)) {
    throw InputError("p = " + std::to_string(p) + " is not an odd prime below 2^31");
  }
  return FieldSpec(Kind::Prime, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  if (kind_ == Kind::Rational) return "Q";
  return "F_" + std::to_string(p_);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::uint32_t reduce(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

} // namespace

Scalar Scalar::from_int(long long v, FieldSpec field) {
  if (field.is_prime()) return Scalar(reduce(v, field.modulus()), field.modulus());
  return Scalar(mpq_class(static_cast<long>(v)));
}

Scalar Scalar::from_rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return Scalar(std::move(c));
}

Scalar Scalar::parse(std::string_view text, FieldSpec field) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);

  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw InputError("malformed scalar '" + std::string(text) + "'");
  }
  if (field.is_prime() && slash != std::string_view::npos) {
    throw InputError("scalar '" + std::string(text) + "' over " + field.to_string() +
                     " must be an integer");
  }

  mpz_class n{std::string(num)};
  if (negative) n = -n;
  if (field.is_prime()) {
    mpz_class r = n % mpz_class(static_cast<unsigned long>(field.modulus()));
    if (r < 0) r += static_cast<unsigned long>(field.modulus());
    return Scalar(static_cast<std::uint32_t>(r.get_ui()), field.modulus());
  }

  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den));
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(std::move(q));
}

FieldSpec Scalar::field() const {
  if (auto r = std::get_if<Residue>(&value_)) return FieldSpec(FieldSpec::Kind::Prime, r->modulus);
  return FieldSpec::rational();
}

const mpq_class& Scalar::rational() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error("scalar is a residue, not a rational");
}

std::uint32_t Scalar::residue() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->value;
  throw Error("scalar is a rational, not a residue");
}

void Scalar::require_same_field(const Scalar& b) const {
  const auto* ra = std::get_if<Residue>(&value_);
  const auto* rb = std::get_if<Residue>(&b.value_);
  if ((ra == nullptr) != (rb == nullptr) || (ra && ra->modulus != rb->modulus)) {
    throw Error("mixed field specs: " + field().to_string() + " vs " + b.field().to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (auto r = std::get_if<Residue>(&value_)) {
    return Scalar(pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus);
  }
  mpq_class inv = 1 / std::get<mpq_class>(value_);
  inv.canonicalize();
  return Scalar(std::move(inv));
}

std::string Scalar::to_string() const {
  if (auto r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

Scalar& Scalar::operator+=(const Scalar& b) {
  require_same_field(b);
  if (auto r = std::get_if<Residue>(&value_)) {
    const std::uint64_t s = std::uint64_t{r->value} + std::get<Residue>(b.value_).value;
    r->value = static_cast<std::uint32_t>(s % r->modulus);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(b.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  require_same_field(b);
  if (auto r = std::get_if<Residue>(&value_)) {
    const std::uint64_t s =
        std::uint64_t{r->value} + r->modulus - std::get<Residue>(b.value_).value;
    r->value = static_cast<std::uint32_t>(s % r->modulus);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(b.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& b) {
  require_same_field(b);
  if (auto r = std::get_if<Residue>(&value_)) {
    const std::uint64_t m = std::uint64_t{r->value} * std::get<Residue>(b.value_).value;
    r->value = static_cast<std::uint32_t>(m % r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(b.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& b) {
  require_same_field(b);
  return *this *= b.inverse();
}

Scalar Scalar::operator-() const {
  if (auto r = std::get_if<Residue>(&value_)) {
    return Scalar(r->value == 0 ? 0 : r->modulus - r->value, r->modulus);
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (auto r = std::get_if<Scalar::Residue>(&a.value_)) {
    return r->value == std::get<Scalar::Residue>(b.value_).value;
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

} // namespace cybe
