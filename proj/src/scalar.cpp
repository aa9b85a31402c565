#include "prelie/scalar.hpp"

#include <charconv>
#include <cstdlib>

#include "prelie/error.hpp"

namespace prelie {

bool isPrime(std::uint64_t n) noexcept {
  if (n < 2)
    return false;
  if (n % 2 == 0)
    return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0)
      return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !isPrime(p))
    fail(ErrorCode::Parse, "field characteristic " + std::to_string(p) +
                               " is not a prime below 2^32");
  FieldSpec f;
  f.kind = Kind::PrimeField;
  f.p = static_cast<std::uint32_t>(p);
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "rational" || text == "Q" || text == "rationals")
    return rationals();
  if (text.starts_with("gf:")) {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      fail(ErrorCode::Parse, "unrecognized field '" + std::string(text) + "'");
    return prime(p);
  }
  fail(ErrorCode::Parse, "unrecognized field '" + std::string(text) +
                             "' (expected rational or gf:<p>)");
}

std::string FieldSpec::toString() const {
  return isPrimeField() ? "gf:" + std::to_string(p) : "rational";
}

namespace {

std::uint64_t powMod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1)
      result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduceMod(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0)
    r += p;
  return r.get_ui();
}

bool isDecimal(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (c < '0' || c > '9')
      return false;
  return true;
}

} // namespace

Scalar Scalar::fromInt(const FieldSpec& f, long value) {
  return fromRational(f, mpq_class(value));
}

Scalar Scalar::fromRational(const FieldSpec& f, const mpq_class& value) {
  Scalar s(f);
  if (!f.isPrimeField()) {
    s.q_ = value;
    s.q_.canonicalize();
    return s;
  }
  std::uint64_t den = reduceMod(value.get_den(), f.p);
  if (den == 0)
    fail(ErrorCode::DivisionByZero,
         "denominator vanishes in " + f.toString());
  std::uint64_t num = reduceMod(value.get_num(), f.p);
  s.r_ = num * powMod(den, f.p - 2, f.p) % f.p;
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body, den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    if (!isDecimal(den))
      fail(ErrorCode::Parse, "bad scalar '" + std::string(text) + "'");
  }
  if (!isDecimal(num))
    fail(ErrorCode::Parse, "bad scalar '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0)
    fail(ErrorCode::Parse, "zero denominator in scalar '" + std::string(text) + "'");
  if (negative)
    n = -n;
  return fromRational(f, mpq_class(n, d));
}

bool Scalar::isZero() const noexcept {
  return field_.isPrimeField() ? r_ == 0 : sgn(q_) == 0;
}

bool Scalar::isOne() const noexcept {
  return field_.isPrimeField() ? r_ == 1 : q_ == 1;
}

std::string Scalar::toString() const {
  if (field_.isPrimeField())
    return std::to_string(r_);
  return q_.get_str(10);
}

void Scalar::requireSameField(const Scalar& o) const {
  if (!(field_ == o.field_))
    fail(ErrorCode::FieldMismatch, "scalars from " + field_.toString() +
                                       " and " + o.field_.toString());
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (field_.isPrimeField())
    s.r_ = r_ == 0 ? 0 : field_.p - r_;
  else
    s.q_ = -q_;
  return s;
}

Scalar Scalar::inv() const {
  if (isZero())
    fail(ErrorCode::DivisionByZero, "inverse of zero in " + field_.toString());
  Scalar s(field_);
  if (field_.isPrimeField())
    s.r_ = powMod(r_, field_.p - 2, field_.p);
  else
    s.q_ = 1 / q_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  requireSameField(o);
  if (field_.isPrimeField())
    r_ = (r_ + o.r_) % field_.p;
  else
    q_ += o.q_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  requireSameField(o);
  if (field_.isPrimeField())
    r_ = (r_ + field_.p - o.r_) % field_.p;
  else
    q_ -= o.q_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  requireSameField(o);
  if (field_.isPrimeField())
    r_ = r_ * o.r_ % field_.p;
  else
    q_ *= o.q_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  requireSameField(o);
  return *this *= o.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.requireSameField(b);
  return a.field_.isPrimeField() ? a.r_ == b.r_ : a.q_ == b.q_;
}

std::strong_ordering Scalar::compare(const Scalar& o) const {
  requireSameField(o);
  if (field_.isPrimeField())
    return r_ <=> o.r_;
  int c = cmp(q_, o.q_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

const char* errorCodeName(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::DivisionByZero: return "DivisionByZero";
  case ErrorCode::FieldMismatch: return "FieldMismatch";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
  case ErrorCode::ShapeMismatch: return "ShapeMismatch";
  case ErrorCode::NotAnIdeal: return "NotAnIdeal";
  case ErrorCode::NotSubalgebra: return "NotSubalgebra";
  case ErrorCode::NotAbelian: return "NotAbelian";
  case ErrorCode::IncompleteLattice: return "IncompleteLattice";
  case ErrorCode::FieldNotFinite: return "FieldNotFinite";
  case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  case ErrorCode::MalformedTree: return "MalformedTree";
  case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
  case ErrorCode::NotIdempotent: return "NotIdempotent";
  case ErrorCode::NotHomomorphism: return "NotHomomorphism";
  case ErrorCode::NotPreLie: return "NotPreLie";
  case ErrorCode::ActionInvalid: return "ActionInvalid";
  case ErrorCode::AugmentationInvalid: return "AugmentationInvalid";
  case ErrorCode::UnknownGallery: return "UnknownGallery";
  case ErrorCode::TwoNotInvertible: return "TwoNotInvertible";
  case ErrorCode::ArityMismatch: return "ArityMismatch";
  case ErrorCode::Parse: return "Parse";
  case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

} // namespace prelie
