#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "tropcm/monomial.hpp"

namespace tropcm {

/// A subset of [n], stored 0-based and sorted. Text form is 1-based ("1,3").
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<std::size_t> indices);
  IndexSet(std::initializer_list<std::size_t> indices)
      : IndexSet(std::vector<std::size_t>(indices)) {}

  /// Builds from 1-based indices.
  static IndexSet from_one_based(const std::vector<std::size_t>& indices);
  /// Parses "1,3,4" (empty string gives the empty set). Throws on indices outside [1, n].
  static IndexSet parse(const std::string& text, std::size_t n);
  static IndexSet full(std::size_t n);

  const std::vector<std::size_t>& indices() const { return idx_; }
  std::size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  bool contains(std::size_t i) const;
  IndexSet complement(std::size_t n) const;
  IndexSet without(std::size_t i) const;
  bool subset_of(const IndexSet& o) const;
  std::size_t max_index() const { return idx_.empty() ? 0 : idx_.back(); }

  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }

  std::string to_string() const;
  std::vector<std::size_t> one_based() const;

  bool operator==(const IndexSet& o) const = default;
  auto operator<=>(const IndexSet& o) const = default;

 private:
  std::vector<std::size_t> idx_;
};

/// All k-subsets of [n] in lexicographic order.
std::vector<IndexSet> subsets_of_size(std::size_t n, std::size_t k);

/// Rational weight vector w in Q^n (min convention throughout).
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<mpq_class> entries);
  WeightVector(std::initializer_list<long> entries);

  static WeightVector zero(std::size_t n);
  static WeightVector constant(std::size_t n, const mpq_class& c);
  /// Parses comma-separated rationals such as "1/2,0,3".
  static WeightVector parse(const std::string& text);

  std::size_t size() const { return w_.size(); }
  const mpq_class& operator[](std::size_t i) const { return w_[i]; }
  const std::vector<mpq_class>& entries() const { return w_; }

  /// Throws std::domain_error on an empty vector.
  mpq_class min() const;
  /// <w, alpha>. Throws std::invalid_argument on a dimension mismatch.
  mpq_class dot(const Monomial& m) const;

  WeightVector operator+(const WeightVector& o) const;
  WeightVector scaled(const mpq_class& c) const;
  WeightVector shifted(const mpq_class& c) const;
  /// Subtract min(w) from every entry.
  WeightVector normalized() const;

  /// A positive multiple with integer entries, as machine integers (throws on overflow).
  std::vector<std::int64_t> integer_multiple() const;

  bool operator==(const WeightVector& o) const { return w_ == o.w_; }
  std::string to_string() const;

 private:
  std::vector<mpq_class> w_;
};

/// <w, alpha>, exactly.
mpq_class weight_value(const WeightVector& w, const Monomial& m);

}  // namespace tropcm
