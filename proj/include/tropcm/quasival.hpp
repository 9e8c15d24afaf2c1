// Quasivaluations on R = k[x]/I: weight quasivaluations v_w, adic orders
// ord_A, the degree quasivaluation, scaling, and sums over a shared cone.
#pragma once

#include <compare>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropcm/groebner.hpp"
#include "tropcm/weight.hpp"

namespace tropcm {

/// A rational or INFINITY (above every rational).
class QValue {
 public:
  QValue() = default;
  explicit QValue(mpq_class v) : v_(std::move(v)) {}
  QValue(long v) : v_(v) {}
  static QValue infinity();

  bool is_infinite() const { return inf_; }
  /// Requires a finite value.
  const mpq_class& value() const;

  /// inf + x = inf
  QValue operator+(const QValue& o) const;
  /// c * inf = inf for every c >= 0.
  QValue scaled(const mpq_class& c) const;

  bool operator==(const QValue& o) const;
  std::strong_ordering operator<=>(const QValue& o) const;

  /// "inf" or the rational.
  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  mpq_class v_ = 0;
  bool inf_ = false;
};

QValue min(const QValue& a, const QValue& b);

enum class QuasivalKind { weight, adic, degree, scaled, oplus };

/// Raised when a sum is requested for weights without a common Groebner cone.
class ConeMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable handle; copies share the underlying description.
class Quasivaluation {
 public:
  static Quasivaluation weight(AlgebraPtr algebra, WeightVector w);
  static Quasivaluation adic(AlgebraPtr algebra, IndexSet a);
  static Quasivaluation degree(AlgebraPtr algebra);

  QuasivalKind kind() const;
  const AlgebraPtr& algebra() const;
  /// Weight vector of a weight or oplus quasivaluation (for oplus, the sum).
  const WeightVector& weight_vector() const;
  const IndexSet& adic_set() const;
  const mpq_class& factor() const;
  const std::vector<Quasivaluation>& children() const;

  /// The weight vector u with this == v_u, when that holds by construction:
  /// weight, degree (u = (1, ..., 1)), oplus, and scaled weight-like inputs.
  std::optional<WeightVector> as_weight() const;

  /// e.g. "v_(1,0,0)", "ord_{1}", "deg", "2 . deg", "(v_(1,0) + v_(0,1))"
  std::string descriptor() const;

  struct Node;

 private:
  explicit Quasivaluation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend Quasivaluation scale(const mpq_class& c, const Quasivaluation& v);
  friend Quasivaluation oplus_in_cone(const std::vector<Quasivaluation>& vs);
};

/// Value of f (taken modulo I). INFINITY exactly when f is in I.
QValue evaluate(const Quasivaluation& v, const Polynomial& f);

/// Largest r with f in <x_i : i in A>^r + I; INFINITY when f is in I.
/// Inhomogeneous f: minimum over homogeneous components not in I.
QValue adic_order(const IndexSet& a, const Polynomial& f, const PresentedAlgebra& algebra);

/// c . v, with c >= 0 (throws std::invalid_argument otherwise).
Quasivaluation scale(const mpq_class& c, const Quasivaluation& v);

/// Sum of weight-like quasivaluations whose weights u_i share one Groebner
/// cone, checked as in_<(in_{u_i}(I)) == in_<(I) for < refined by sum(u_i).
/// The result is v_{sum u_i}. Throws ConeMismatchError when the check fails.
Quasivaluation oplus_in_cone(const std::vector<Quasivaluation>& vs);

/// True when every u_i lies in the closed Groebner cone of the sum-refined order.
bool share_groebner_cone(const Ideal& ideal, const std::vector<WeightVector>& us);

/// Degree-m monomials outside the leading-term ideal of I under order.
std::vector<Monomial> standard_basis_slice(const PresentedAlgebra& algebra, const MonomialOrder& order,
                                           std::int64_t degree);

/// {"quasivaluation": descriptor, "entries": [{"element", "value"}]}
nlohmann::json value_table(const Quasivaluation& v, const std::vector<Polynomial>& elements);

}  // namespace tropcm
