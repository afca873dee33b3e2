#include "wcpx/scalar.hpp"

#include <charconv>
#include <ostream>

namespace wcpx {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') return false;
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw FieldError("characteristic " + std::to_string(p) +
                     " is not a supported prime");
  return FieldSpec(Kind::prime_field, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text[0] == 'F') {
    std::uint64_t p = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw FieldError("unknown field '" + std::string(text) + "' (expected Q or F<p>)");
}

std::string FieldSpec::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar::Scalar(const FieldSpec& field, long value) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = Residue{reduce(mpz_class(value), field.characteristic()), field.characteristic()};
  }
}

Scalar::Scalar(const FieldSpec& field, const mpz_class& num, const mpz_class& den) {
  if (field.is_rational()) {
    if (den == 0) throw FieldError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    value_ = std::move(q);
  } else {
    std::uint64_t p = field.characteristic();
    std::uint64_t d = reduce(den, p);
    if (d == 0) throw FieldError("denominator vanishes in " + field.name());
    std::uint64_t n = reduce(num, p);
    value_ = Residue{n * pow_mod(d, p - 2, p) % p, p};
  }
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  auto slash = text.find('/');
  mpz_class num, den(1);
  bool ok = slash == std::string_view::npos
                ? parse_integer(text, num)
                : parse_integer(text.substr(0, slash), num) &&
                      parse_integer(text.substr(slash + 1), den);
  if (!ok) throw FieldError("malformed scalar '" + std::string(text) + "'");
  return Scalar(field, num, den);
}

FieldSpec Scalar::field() const {
  if (auto* r = std::get_if<Residue>(&value_)) return FieldSpec(FieldSpec::Kind::prime_field, r->p);
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::string Scalar::to_string() const {
  if (auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

void Scalar::require_same_field(const Scalar& other) const {
  if (value_.index() != other.value_.index())
    throw FieldError("mixed fields: " + field().name() + " and " + other.field().name());
  if (auto* r = std::get_if<Residue>(&value_)) {
    if (r->p != std::get<Residue>(other.value_).p)
      throw FieldError("mixed fields: " + field().name() + " and " + other.field().name());
  }
}

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = (r->value + std::get<Residue>(rhs.value_).value) % r->p;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = r->value * std::get<Residue>(rhs.value_).value % r->p;
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  if (auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{pow_mod(r->value, r->p - 2, r->p), r->p});
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

const mpq_class& Scalar::rational() const { return std::get<mpq_class>(value_); }

std::uint64_t Scalar::residue() const { return std::get<Residue>(value_).value; }

}  // namespace wcpx
