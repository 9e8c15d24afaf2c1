#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tropcm/monomial.hpp"
#include "tropcm/order.hpp"
#include "tropcm/ring.hpp"
#include "tropcm/scalar.hpp"
#include "tropcm/weight.hpp"

namespace tropcm {

struct Term {
  Monomial mono;
  Scalar coeff;

  bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
};

/// Sparse polynomial over a Ring. Terms are stored without zeros, sorted
/// grevlex-descending, so equal polynomials have equal term vectors.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Combines like terms and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Max total degree; -1 for the zero polynomial.
  std::int64_t degree() const;
  std::int64_t min_degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_component(std::int64_t d) const;
  /// Nonzero homogeneous components, by increasing degree.
  std::vector<Polynomial> homogeneous_components() const;

  /// Leading term under order. Requires a nonzero polynomial.
  const Term& leading_term(const MonomialOrder& order) const;
  Scalar coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Divide by the leading coefficient under order.
  Polynomial monic(const MonomialOrder& order) const;

  /// Re-express in another ring; var_map[i] is the target index of variable i.
  Polynomial mapped(RingPtr target, const std::vector<std::size_t>& var_map) const;
  /// Variables appearing with positive exponent.
  IndexSet support() const;

  bool operator==(const Polynomial& o) const;

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Sum of the terms of f of minimal weight <w, beta>. Throws on f == 0.
Polynomial initial_form(const WeightVector& w, const Polynomial& f);

}  // namespace tropcm
