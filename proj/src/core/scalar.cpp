#include "tropcm/scalar.hpp"

#include <utility>

namespace tropcm {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Scalar Scalar::rational(mpq_class q) {
  Scalar s;
  q.canonicalize();
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::modular(std::int64_t value, std::uint32_t p) {
  if (p == 0) throw std::invalid_argument("modular scalar needs a positive modulus");
  Scalar s;
  s.modulus_ = p;
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  s.r_ = static_cast<std::uint64_t>(r);
  return s;
}

bool Scalar::is_zero() const { return modulus_ == 0 ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return modulus_ == 0 ? q_ == 1 : r_ == 1; }

void Scalar::check_same(const Scalar& o) const {
  if (modulus_ != o.modulus_) {
    throw FieldMismatch("scalar arithmetic mixes fields (moduli " + std::to_string(modulus_) +
                        " and " + std::to_string(o.modulus_) + ")");
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    s.q_ = q_ + o.q_;
  } else {
    s.r_ = (r_ + o.r_) % modulus_;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    s.q_ = q_ - o.q_;
  } else {
    s.r_ = (r_ + modulus_ - o.r_) % modulus_;
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    s.q_ = q_ * o.q_;
  } else {
    s.r_ = mulmod(r_, o.r_, modulus_);
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = powmod(r_, modulus_ - 2, modulus_);
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : modulus_ - r_;
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return modulus_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
  if (modulus_ == 0) return q_.get_str();
  return std::to_string(r_);
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text == "Fp") return prime(kDefaultPrime);
  if (text.rfind("Fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad field modulus '" + digits + "'");
    }
    const unsigned long long p = std::stoull(digits);
    if (p > 0xFFFFFFFFULL) throw std::invalid_argument("field modulus too large");
    return prime(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("unknown field '" + text + "' (expected Q or Fp:<p>)");
}

Scalar Field::from_int(std::int64_t v) const {
  if (p_ == 0) return Scalar::rational(mpq_class(static_cast<long>(v)));
  return Scalar::modular(v, p_);
}

Scalar Field::from_rational(const mpz_class& num, const mpz_class& den) const {
  if (p_ == 0) {
    if (sgn(den) == 0) throw std::domain_error("zero denominator");
    return Scalar::rational(mpq_class(num, den));
  }
  const mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class n = num % pz;
  mpz_class d = den % pz;
  if (n < 0) n += pz;
  if (d < 0) d += pz;
  if (sgn(d) == 0) {
    throw std::domain_error("denominator " + den.get_str() + " vanishes in " + to_string());
  }
  return Scalar::modular(n.get_si(), p_) / Scalar::modular(d.get_si(), p_);
}

Scalar Field::from_rational(const mpq_class& q) const {
  return from_rational(q.get_num(), q.get_den());
}

std::string Field::to_string() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

}  // namespace tropcm
