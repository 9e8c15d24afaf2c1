// Buchberger engine and the ideal operations built on it.
//
// Everything public here works on homogeneous ideals. Weight-refined orders
// are only total orders degree by degree, so homogeneity is what makes
// reduction terminate; non-homogeneous input is rejected at Ideal
// construction. The one inhomogeneous computation (the Rabinowitsch ring
// used for radical membership) runs under grevlex, which is a well-order.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropcm/hilbert.hpp"
#include "tropcm/ideal.hpp"
#include "tropcm/order.hpp"
#include "tropcm/polynomial.hpp"

namespace tropcm {

/// Reduced Groebner basis: monic, minimal, tails reduced, sorted by
/// decreasing leading monomial. Unique for (ideal, order).
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> basis);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  const std::vector<Monomial>& leading_monomials() const { return lms_; }
  std::size_t size() const { return basis_.size(); }
  /// True when the basis is {1}.
  bool is_unit() const;

  /// Remainder supported on standard monomials.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool is_standard(const Monomial& m) const;

  Ideal ideal() const;
  /// {"order": ..., "basis": [...]}, basis as polynomial strings in order.
  nlohmann::json to_json() const;

  bool operator==(const GroebnerBasis& o) const;

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> lms_;
  // basis terms re-sorted under order_, shared between copies
  std::shared_ptr<const std::vector<std::vector<Term>>> sorted_;
};

GroebnerBasis buchberger_reduced(const Ideal& ideal, const MonomialOrder& order);
/// The reduced grevlex basis, used as canonical form for ideal equality.
GroebnerBasis canonical_basis(const Ideal& ideal);
bool ideals_equal(const Ideal& a, const Ideal& b);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool ideal_membership(const Polynomial& f, const Ideal& ideal);

/// <in_w(g) : g in the reduced basis for the w-refined order>.
Ideal initial_ideal(const WeightVector& w, const Ideal& ideal);

/// (I + <x_i : i in A>) intersected with k[x_j : j not in A], via an
/// elimination order. The result lives in the subring on the remaining
/// variables.
Ideal eliminate(const Ideal& ideal, const IndexSet& vars);
/// Extension of an ideal of a subring to a ring containing its variables (by name).
Ideal extend_to(const Ideal& ideal, const RingPtr& target);

/// f in sqrt(I), via 1 in I + <1 - t f> in the ring with a fresh variable t.
bool radical_membership(const Polynomial& f, const Ideal& ideal);

/// A monomial in I, or nothing. Decided by saturating with respect to the
/// product of all variables; a witness is then found by degree-bounded search.
std::optional<Monomial> contains_monomial(const Ideal& ideal);

/// Hilbert series of k[x]/I via the leading-term ideal under order.
HilbertSeries hilbert_series_quotient(const Ideal& ideal,
                                      const MonomialOrder& order = MonomialOrder::grevlex());
/// Throws std::domain_error for the unit ideal.
std::int64_t krull_dimension(const Ideal& ideal);

/// k[x]/I with cached dimension and Hilbert series.
class PresentedAlgebra {
 public:
  explicit PresentedAlgebra(Ideal ideal);

  const Ideal& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  std::size_t num_vars() const { return ideal_.num_vars(); }
  std::int64_t dimension() const { return dimension_; }
  const HilbertSeries& hilbert() const { return hilbert_; }

  GroebnerBasis basis(const MonomialOrder& order) const { return buchberger_reduced(ideal_, order); }
  bool is_zero_element(const Polynomial& f) const { return canonical_.contains(f); }

 private:
  Ideal ideal_;
  GroebnerBasis canonical_;
  HilbertSeries hilbert_;
  std::int64_t dimension_;
};

using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;
AlgebraPtr make_algebra(Ideal ideal);

/// Process-wide cache of reduced bases keyed by (ideal key, order). Safe for
/// concurrent use. When a directory is configured (or TROPCM_CACHE is set)
/// bases are also persisted there as text.
class GbCache {
 public:
  static GbCache& instance();
  ~GbCache();

  std::optional<std::vector<Polynomial>> lookup(const std::string& key, const RingPtr& ring);
  void store(const std::string& key, const std::vector<Polynomial>& basis);

  void set_directory(std::string dir);
  std::string directory() const;
  void clear_memory();
  std::uint64_t hits() const;
  std::uint64_t misses() const;

 private:
  GbCache();
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

namespace detail {
/// Raw engine: reduced basis of the ideal spanned by gens. Inhomogeneous input
/// is accepted only for well-orders.
std::vector<Polynomial> reduced_groebner(const std::vector<Polynomial>& gens, const RingPtr& ring,
                                         const MonomialOrder& order);
/// Fully reduces f by the monic polynomials in basis under order.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& order);
}  // namespace detail

}  // namespace tropcm
