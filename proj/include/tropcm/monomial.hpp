#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tropcm {

class Ring;

/// Dense exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<std::int32_t> exps);

  static Monomial variable(std::size_t n, std::size_t i, std::int32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::int32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::int32_t>& exponents() const { return exps_; }
  std::int64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  /// Requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  /// Plain lexicographic comparison of exponent vectors (for containers only).
  std::strong_ordering operator<=>(const Monomial& o) const { return exps_ <=> o.exps_; }

  std::string to_string(const Ring& ring) const;

 private:
  std::vector<std::int32_t> exps_;
  std::int64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// All monomials of the given degree in n variables, lex-descending (x1^d first).
std::vector<Monomial> monomials_of_degree(std::size_t n, std::int64_t degree);

}  // namespace tropcm
