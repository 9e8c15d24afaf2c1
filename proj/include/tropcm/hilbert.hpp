#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tropcm/monomial.hpp"

namespace tropcm {

/// Hilbert series N(t) / (1 - t)^k kept in reduced form: no (1 - t) factor
/// is left in N unless N is zero (the zero ring).
class HilbertSeries {
 public:
  HilbertSeries(std::vector<std::int64_t> numerator, std::int64_t exponent);

  const std::vector<std::int64_t>& numerator() const { return num_; }
  std::int64_t exponent() const { return exp_; }
  bool is_zero() const { return num_.empty(); }
  /// Pole order at t = 1, i.e. the Krull dimension of the graded algebra.
  std::int64_t dimension() const { return exp_; }
  /// Value N(1) (the degree / multiplicity).
  std::int64_t multiplicity() const;

  /// Hilbert function value in degree m.
  std::int64_t coefficient(std::int64_t m) const;
  /// The series multiplied by 1 / (1 - t)^k.
  HilbertSeries times_free_variables(std::int64_t k) const;

  std::string to_string() const;
  bool operator==(const HilbertSeries& o) const = default;

 private:
  std::vector<std::int64_t> num_;
  std::int64_t exp_;
};

/// Series of k[x1..xn] / <gens> for a monomial ideal.
HilbertSeries hilbert_series_of_monomials(std::vector<Monomial> gens, std::size_t n);

/// Minimal generators of the monomial ideal generated by gens.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens);

}  // namespace tropcm
