#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tropcm/monomial.hpp"
#include "tropcm/weight.hpp"

namespace tropcm {

enum class OrderKind { grevlex, lex, weight, block };

/// Monomial order. compare(a, b) == greater means a leads b.
///
/// Weight-refined orders use the min convention: a leads b when <w,a> < <w,b>,
/// ties broken by the base order. They are total orders on every degree slice
/// but not well-orders in general, so they are only used on homogeneous input.
/// Block orders rank by total degree in the block variables first (larger leads),
/// then grevlex; they eliminate the block.
class MonomialOrder {
 public:
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
  static MonomialOrder weighted(const WeightVector& w, OrderKind base = OrderKind::grevlex);
  static MonomialOrder elimination(const IndexSet& block, std::size_t n);

  OrderKind kind() const { return kind_; }
  OrderKind base() const { return base_; }
  const WeightVector& weight() const { return weight_; }
  const IndexSet& block() const { return block_; }

  /// True when the order is a well-order on all monomials (safe for inhomogeneous input).
  bool is_well_order() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool leads(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string descriptor() const;
  bool operator==(const MonomialOrder& o) const { return descriptor() == o.descriptor(); }

 private:
  explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  OrderKind kind_;
  OrderKind base_ = OrderKind::grevlex;
  WeightVector weight_;
  std::vector<std::int64_t> int_weight_;
  IndexSet block_;
  std::size_t n_ = 0;
};

enum class Comparison { less, equal, greater };

/// Checked comparison: throws std::invalid_argument on a dimension mismatch.
Comparison compare_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b);

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

}  // namespace tropcm
