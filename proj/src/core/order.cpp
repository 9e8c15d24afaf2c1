#include "tropcm/order.hpp"

#include <stdexcept>

namespace tropcm {

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

MonomialOrder MonomialOrder::weighted(const WeightVector& w, OrderKind base) {
  if (base != OrderKind::grevlex && base != OrderKind::lex) {
    throw std::invalid_argument("weight-refined orders need a grevlex or lex tiebreak");
  }
  MonomialOrder o(OrderKind::weight);
  o.base_ = base;
  o.weight_ = w;
  o.int_weight_ = w.integer_multiple();
  o.n_ = w.size();
  return o;
}

MonomialOrder MonomialOrder::elimination(const IndexSet& block, std::size_t n) {
  if (!block.empty() && block.max_index() >= n) throw std::invalid_argument("block outside the ring");
  MonomialOrder o(OrderKind::block);
  o.block_ = block;
  o.n_ = n;
  return o;
}

bool MonomialOrder::is_well_order() const { return kind_ != OrderKind::weight; }

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::grevlex:
      return grevlex_compare(a, b);
    case OrderKind::lex:
      return lex_compare(a, b);
    case OrderKind::weight: {
      __int128 wa = 0;
      __int128 wb = 0;
      for (std::size_t i = 0; i < int_weight_.size(); ++i) {
        wa += static_cast<__int128>(int_weight_[i]) * a[i];
        wb += static_cast<__int128>(int_weight_[i]) * b[i];
      }
      // min convention: the smaller weight leads
      if (wa != wb) return wa < wb ? std::strong_ordering::greater : std::strong_ordering::less;
      return base_ == OrderKind::lex ? lex_compare(a, b) : grevlex_compare(a, b);
    }
    case OrderKind::block: {
      std::int64_t da = 0;
      std::int64_t db = 0;
      for (auto i : block_) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da <=> db;
      return grevlex_compare(a, b);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::descriptor() const {
  switch (kind_) {
    case OrderKind::grevlex:
      return "grevlex";
    case OrderKind::lex:
      return "lex";
    case OrderKind::weight:
      return "weight(" + weight_.to_string() + ";" + (base_ == OrderKind::lex ? "lex" : "grevlex") + ")";
    case OrderKind::block:
      return "block(" + block_.to_string() + ";grevlex)";
  }
  return "?";
}

Comparison compare_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomials from different rings");
  if (order.kind() == OrderKind::weight && order.weight().size() != a.size()) {
    throw std::invalid_argument("weight vector length does not match the ring");
  }
  if (order.kind() == OrderKind::block && !order.block().empty() && order.block().max_index() >= a.size()) {
    throw std::invalid_argument("elimination block does not match the ring");
  }
  const auto c = order.compare(a, b);
  if (c < 0) return Comparison::less;
  if (c > 0) return Comparison::greater;
  return Comparison::equal;
}

}  // namespace tropcm
