#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "engine.hpp"
#include "tropcm/groebner.hpp"

namespace tropcm {

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> basis)
    : ring_(std::move(ring)), order_(std::move(order)), basis_(std::move(basis)) {
  auto sorted = std::make_shared<std::vector<std::vector<Term>>>();
  for (const auto& g : basis_) {
    sorted->push_back(detail::sorted_terms(g, order_));
    lms_.push_back(sorted->back().front().mono);
  }
  sorted_ = std::move(sorted);
}

bool GroebnerBasis::is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw std::invalid_argument("normal form across different rings");
  return detail::reduce_sorted(f, *sorted_, order_);
}

bool GroebnerBasis::is_standard(const Monomial& m) const {
  return std::none_of(lms_.begin(), lms_.end(), [&](const Monomial& lm) { return lm.divides(m); });
}

Ideal GroebnerBasis::ideal() const { return Ideal(ring_, basis_); }

nlohmann::json GroebnerBasis::to_json() const {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& g : basis_) basis.push_back(g.to_string());
  return {{"order", order_.descriptor()}, {"ring", ring_->descriptor()}, {"basis", basis}};
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
  return same_ring(ring_, o.ring_) && order_ == o.order_ && basis_ == o.basis_;
}

GroebnerBasis buchberger_reduced(const Ideal& ideal, const MonomialOrder& order) {
  const auto n = ideal.num_vars();
  if (order.kind() == OrderKind::weight && order.weight().size() != n) {
    throw std::invalid_argument("weight vector length does not match the ring");
  }
  const std::string key = ideal.cache_key() + "|" + order.descriptor();
  auto& cache = GbCache::instance();
  if (auto hit = cache.lookup(key, ideal.ring())) return GroebnerBasis(ideal.ring(), order, std::move(*hit));
  auto basis = detail::reduced_groebner(ideal.generators(), ideal.ring(), order);
  cache.store(key, basis);
  return GroebnerBasis(ideal.ring(), order, std::move(basis));
}

GroebnerBasis canonical_basis(const Ideal& ideal) { return buchberger_reduced(ideal, MonomialOrder::grevlex()); }

bool ideals_equal(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  return canonical_basis(a).basis() == canonical_basis(b).basis();
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return gb.normal_form(f); }

bool ideal_membership(const Polynomial& f, const Ideal& ideal) { return canonical_basis(ideal).contains(f); }

Ideal initial_ideal(const WeightVector& w, const Ideal& ideal) {
  if (w.size() != ideal.num_vars()) throw std::invalid_argument("weight vector length does not match the ring");
  const auto gb = buchberger_reduced(ideal, MonomialOrder::weighted(w));
  std::vector<Polynomial> gens;
  for (const auto& g : gb.basis()) gens.push_back(initial_form(w, g));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal eliminate(const Ideal& ideal, const IndexSet& vars) {
  const auto n = ideal.num_vars();
  const IndexSet keep = vars.complement(n);
  const RingPtr sub = subring(*ideal.ring(), keep);
  std::vector<std::size_t> var_map(n, n);
  for (std::size_t k = 0; k < keep.size(); ++k) var_map[keep.indices()[k]] = k;
  if (vars.empty()) return ideal.mapped(sub, var_map);

  const auto gb = buchberger_reduced(ideal.with_variables(vars), MonomialOrder::elimination(vars, n));
  std::vector<Polynomial> gens;
  for (const auto& g : gb.basis()) {
    const auto supp = g.support();
    const bool free_of_block =
        std::none_of(supp.begin(), supp.end(), [&](std::size_t i) { return vars.contains(i); });
    if (free_of_block) gens.push_back(g.mapped(sub, var_map));
  }
  return Ideal(sub, std::move(gens));
}

Ideal extend_to(const Ideal& ideal, const RingPtr& target) {
  std::vector<std::size_t> var_map;
  for (const auto& name : ideal.ring()->names()) {
    const auto idx = target->index_of(name);
    if (!idx) throw std::invalid_argument("variable '" + name + "' missing from the target ring");
    var_map.push_back(*idx);
  }
  return ideal.mapped(target, var_map);
}

namespace {

// 1 in I + <1 - t f>, computed in the ring with one extra variable.
bool rabinowitsch_unit(const Ideal& ideal, const Polynomial& f) {
  const auto& ring = ideal.ring();
  const RingPtr ext = extended_ring(*ring, "t");
  std::vector<std::size_t> var_map(ring->size());
  std::iota(var_map.begin(), var_map.end(), 0);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.mapped(ext, var_map));
  const Polynomial t = Polynomial::variable(ext, ring->size());
  const Polynomial one = Polynomial::constant(ext, ring->field().one());
  gens.push_back(one - t * f.mapped(ext, var_map));
  const auto basis = detail::reduced_groebner(gens, ext, MonomialOrder::grevlex());
  return basis.size() == 1 && basis[0].is_constant();
}

}  // namespace

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  if (!same_ring(f.ring(), ideal.ring())) throw std::invalid_argument("polynomial and ideal in different rings");
  if (f.is_zero()) return true;
  return rabinowitsch_unit(ideal, f);
}

std::optional<Monomial> contains_monomial(const Ideal& ideal) {
  const auto n = ideal.num_vars();
  const auto gb = canonical_basis(ideal);
  if (gb.is_unit()) return Monomial(n);
  if (ideal.is_zero()) return std::nullopt;

  Polynomial product = Polynomial::constant(ideal.ring(), ideal.ring()->field().one());
  for (std::size_t i = 0; i < n; ++i) product *= Polynomial::variable(ideal.ring(), i);
  if (!rabinowitsch_unit(ideal, product)) return std::nullopt;

  std::int64_t bound = 0;
  for (const auto& g : gb.basis()) bound = std::max(bound, g.degree());
  const auto field_one = ideal.ring()->field().one();
  for (std::int64_t d = 1; d <= bound; ++d) {
    for (const auto& m : monomials_of_degree(n, d)) {
      if (gb.contains(Polynomial::monomial(ideal.ring(), m, field_one))) return m;
    }
  }
  // Saturation is the unit ideal, so some power of the product lies in I.
  Polynomial power = product;
  while (true) {
    if (gb.contains(power)) return power.terms().front().mono;
    power *= product;
  }
}

HilbertSeries hilbert_series_quotient(const Ideal& ideal, const MonomialOrder& order) {
  const auto gb = buchberger_reduced(ideal, order);
  return hilbert_series_of_monomials(gb.leading_monomials(), ideal.num_vars());
}

std::int64_t krull_dimension(const Ideal& ideal) {
  const auto hs = hilbert_series_quotient(ideal);
  if (hs.is_zero()) throw std::domain_error("Krull dimension of the zero ring (unit ideal)");
  return hs.dimension();
}

PresentedAlgebra::PresentedAlgebra(Ideal ideal)
    : ideal_(std::move(ideal)),
      canonical_(canonical_basis(ideal_)),
      hilbert_(hilbert_series_of_monomials(canonical_.leading_monomials(), ideal_.num_vars())),
      dimension_(hilbert_.is_zero() ? -1 : hilbert_.dimension()) {}

AlgebraPtr make_algebra(Ideal ideal) { return std::make_shared<const PresentedAlgebra>(std::move(ideal)); }

}  // namespace tropcm
