#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace wcpx {

/// Error raised when two values from different fields meet, or a field
/// declaration is invalid.
class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The exact base field: the rationals or a prime field F_p.
class FieldSpec {
 public:
  enum class Kind { rationals, prime_field };

  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }
  /// Throws FieldError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q" or "F<p>" (e.g. "F5").
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return kind_ == Kind::rationals; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

/// An exact field element. Rationals are kept reduced with a positive
/// denominator; prime-field residues are canonical in [0, p).
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() : value_(mpq_class(0)) {}
  Scalar(const FieldSpec& field, long value);
  Scalar(const FieldSpec& field, const mpz_class& num, const mpz_class& den);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }
  /// Parses "p/q" or an integer. Throws FieldError on malformed text or a
  /// denominator that vanishes in the field.
  static Scalar parse(const FieldSpec& field, std::string_view text);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Canonical text: "n" or "n/d" over Q, the residue over F_p.
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

  /// Rational value; only valid over Q.
  const mpq_class& rational() const;
  /// Residue; only valid over F_p.
  std::uint64_t residue() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t p;
    friend bool operator==(const Residue&, const Residue&) = default;
  };
  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  void require_same_field(const Scalar& other) const;

  std::variant<mpq_class, Residue> value_;
};

}  // namespace wcpx
