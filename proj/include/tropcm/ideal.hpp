#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropcm/polynomial.hpp"
#include "tropcm/ring.hpp"
#include "tropcm/weight.hpp"

namespace tropcm {

/// Raised when an ideal is built from a non-homogeneous generator.
class NonHomogeneousError : public std::invalid_argument {
 public:
  NonHomogeneousError(std::size_t index, const std::string& generator);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Homogeneous ideal given by generators. Zero generators are dropped.
class Ideal {
 public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  std::size_t num_vars() const { return ring_->size(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  Ideal operator+(const Ideal& o) const;
  /// I + <x_i : i in A>
  Ideal with_variables(const IndexSet& vars) const;
  /// Generators re-expressed in target; var_map[i] is the image index of x_i.
  Ideal mapped(RingPtr target, const std::vector<std::size_t>& var_map) const;

  /// "<g1, g2>"
  std::string to_string() const;
  /// Stable key built from the ring and the sorted generator strings.
  std::string cache_key() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

}  // namespace tropcm
