#ifndef PRELIE_SCALAR_HPP
#define PRELIE_SCALAR_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace prelie {

/// The coefficient field k: either the rationals or GF(p) for a prime p < 2^32.
struct FieldSpec {
  enum class Kind : std::uint8_t { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() noexcept { return {}; }
  /// Throws ErrorCode::Parse when p is not a prime in [2, 2^32).
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "rational" or "gf:<p>".
  static FieldSpec parse(std::string_view text);

  bool isPrimeField() const noexcept { return kind == Kind::PrimeField; }
  /// Number of elements, or 0 for the rationals.
  std::uint64_t order() const noexcept { return isPrimeField() ? p : 0; }
  std::string toString() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool isPrime(std::uint64_t n) noexcept;

/// An exact element of a FieldSpec. Rationals are kept reduced with a positive
/// denominator; prime-field values are canonical residues in [0, p).
class Scalar {
public:
  Scalar() = default;

  static Scalar zero(const FieldSpec& f) { return Scalar(f); }
  static Scalar one(const FieldSpec& f) { return fromInt(f, 1); }
  static Scalar fromInt(const FieldSpec& f, long value);
  static Scalar fromRational(const FieldSpec& f, const mpq_class& value);
  /// Text form: optional '-', decimal digits, optional '/' and a positive
  /// denominator. Over GF(p) the value is reduced; a denominator divisible by
  /// p is rejected.
  static Scalar parse(const FieldSpec& f, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  bool isZero() const noexcept;
  bool isOne() const noexcept;

  /// Canonical text: "n" or "n/d" over the rationals, the residue over GF(p).
  std::string toString() const;

  Scalar operator-() const;
  Scalar inv() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Throws FieldMismatch across fields.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Total order used for canonical sorting: numeric for rationals, by
  /// residue for prime fields.
  std::strong_ordering compare(const Scalar& o) const;

  const mpq_class& rational() const noexcept { return q_; }
  std::uint64_t residue() const noexcept { return r_; }

private:
  explicit Scalar(const FieldSpec& f) : field_(f) {}
  void requireSameField(const Scalar& o) const;

  FieldSpec field_;
  std::uint64_t r_ = 0;
  mpq_class q_;
};

} // namespace prelie

#endif
