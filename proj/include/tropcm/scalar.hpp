// Exact coefficient arithmetic: rationals (GMP) and prime fields.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tropcm {

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A coefficient. Either an exact rational (modulus 0) or a residue mod p.
/// Rationals are kept canonical by GMP: lowest terms, positive denominator.
class Scalar {
 public:
  Scalar() = default;

  static Scalar rational(mpq_class q);
  static Scalar modular(std::int64_t value, std::uint32_t p);

  std::uint32_t modulus() const { return modulus_; }
  bool is_rational() const { return modulus_ == 0; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational_value() const { return q_; }
  std::uint64_t residue() const { return r_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;

  /// "3", "-1/2", or the residue in [0, p).
  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint32_t modulus_ = 0;
};

/// Coefficient field descriptor: Q when characteristic() == 0, else F_p.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  static Field rationals() { return Field(0); }
  /// Throws std::invalid_argument unless p is prime.
  static Field prime(std::uint32_t p);
  /// Accepts "Q" or "Fp:<p>" (also "Fp" for the default prime).
  static Field parse(const std::string& text);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(std::int64_t v) const;
  /// Throws std::domain_error when den vanishes in the field.
  Scalar from_rational(const mpz_class& num, const mpz_class& den) const;
  Scalar from_rational(const mpq_class& q) const;

  std::string to_string() const;
  bool operator==(const Field& o) const = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace tropcm
