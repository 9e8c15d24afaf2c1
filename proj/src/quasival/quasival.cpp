#include "tropcm/quasival.hpp"

#include <algorithm>

namespace tropcm {

QValue QValue::infinity() {
  QValue q;
  q.inf_ = true;
  return q;
}

const mpq_class& QValue::value() const {
  if (inf_) throw std::domain_error("value of INFINITY");
  return v_;
}

QValue QValue::operator+(const QValue& o) const {
  if (inf_ || o.inf_) return infinity();
  return QValue(mpq_class(v_ + o.v_));
}

QValue QValue::scaled(const mpq_class& c) const {
  if (c < 0) throw std::invalid_argument("negative scale factor");
  if (inf_) return infinity();
  return QValue(mpq_class(c * v_));
}

bool QValue::operator==(const QValue& o) const {
  if (inf_ || o.inf_) return inf_ == o.inf_;
  return v_ == o.v_;
}

std::strong_ordering QValue::operator<=>(const QValue& o) const {
  if (inf_ || o.inf_) return static_cast<int>(inf_) <=> static_cast<int>(o.inf_);
  const int c = cmp(v_, o.v_);
  return c <=> 0;
}

std::string QValue::to_string() const { return inf_ ? "inf" : v_.get_str(); }

nlohmann::json QValue::to_json() const { return to_string(); }

QValue min(const QValue& a, const QValue& b) { return b < a ? b : a; }

struct Quasivaluation::Node {
  QuasivalKind kind;
  AlgebraPtr algebra;
  WeightVector w;
  IndexSet a;
  mpq_class factor = 1;
  std::vector<Quasivaluation> children;
};

namespace {

void check_length(const AlgebraPtr& algebra, const WeightVector& w) {
  if (w.size() != algebra->num_vars()) throw std::invalid_argument("weight vector length does not match the ring");
}

QValue min_weight(const Polynomial& nf, const WeightVector& w) {
  if (nf.is_zero()) return QValue::infinity();
  mpq_class best = w.dot(nf.terms().front().mono);
  for (const auto& t : nf.terms()) best = std::min(best, w.dot(t.mono));
  return QValue(best);
}

}  // namespace

Quasivaluation Quasivaluation::weight(AlgebraPtr algebra, WeightVector w) {
  auto node = std::make_shared<Node>();
  node->kind = QuasivalKind::weight;
  check_length(algebra, w);
  node->algebra = std::move(algebra);
  node->w = std::move(w);
  return Quasivaluation(std::move(node));
}

Quasivaluation Quasivaluation::adic(AlgebraPtr algebra, IndexSet a) {
  if (!a.empty() && a.max_index() >= algebra->num_vars()) throw std::invalid_argument("index outside [n]");
  auto node = std::make_shared<Node>();
  node->kind = QuasivalKind::adic;
  node->algebra = std::move(algebra);
  node->a = std::move(a);
  return Quasivaluation(std::move(node));
}

Quasivaluation Quasivaluation::degree(AlgebraPtr algebra) {
  auto node = std::make_shared<Node>();
  node->kind = QuasivalKind::degree;
  node->algebra = std::move(algebra);
  return Quasivaluation(std::move(node));
}

QuasivalKind Quasivaluation::kind() const { return node_->kind; }
const AlgebraPtr& Quasivaluation::algebra() const { return node_->algebra; }
const WeightVector& Quasivaluation::weight_vector() const { return node_->w; }
const IndexSet& Quasivaluation::adic_set() const { return node_->a; }
const mpq_class& Quasivaluation::factor() const { return node_->factor; }
const std::vector<Quasivaluation>& Quasivaluation::children() const { return node_->children; }

std::optional<WeightVector> Quasivaluation::as_weight() const {
  switch (node_->kind) {
    case QuasivalKind::weight:
    case QuasivalKind::oplus:
      return node_->w;
    case QuasivalKind::degree:
      return WeightVector::constant(node_->algebra->num_vars(), 1);
    case QuasivalKind::scaled: {
      auto inner = node_->children.front().as_weight();
      if (!inner) return std::nullopt;
      return inner->scaled(node_->factor);
    }
    case QuasivalKind::adic:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string Quasivaluation::descriptor() const {
  switch (node_->kind) {
    case QuasivalKind::weight:
      return "v_(" + node_->w.to_string() + ")";
    case QuasivalKind::adic:
      return "ord_{" + node_->a.to_string() + "}";
    case QuasivalKind::degree:
      return "deg";
    case QuasivalKind::scaled:
      return node_->factor.get_str() + " . " + node_->children.front().descriptor();
    case QuasivalKind::oplus: {
      std::string s = "(";
      for (std::size_t i = 0; i < node_->children.size(); ++i) {
        if (i > 0) s += " + ";
        s += node_->children[i].descriptor();
      }
      return s + ")";
    }
  }
  return {};
}

QValue evaluate(const Quasivaluation& v, const Polynomial& f) {
  const auto& algebra = *v.algebra();
  if (!same_ring(f.ring(), algebra.ring())) throw std::invalid_argument("element from a different ring");
  switch (v.kind()) {
    case QuasivalKind::weight:
    case QuasivalKind::oplus:
      return min_weight(algebra.basis(MonomialOrder::weighted(v.weight_vector())).normal_form(f), v.weight_vector());
    case QuasivalKind::degree: {
      const Polynomial nf = algebra.basis(MonomialOrder::grevlex()).normal_form(f);
      if (nf.is_zero()) return QValue::infinity();
      return QValue(nf.min_degree());
    }
    case QuasivalKind::adic:
      return adic_order(v.adic_set(), f, algebra);
    case QuasivalKind::scaled:
      return evaluate(v.children().front(), f).scaled(v.factor());
  }
  return QValue::infinity();
}

namespace {

std::int64_t homogeneous_adic_order(const IndexSet& a, const Polynomial& f, const PresentedAlgebra& algebra) {
  const auto& ring = algebra.ring();
  const auto n = ring->size();
  const Scalar one = ring->field().one();
  // <x_A>^(r+1) + I is contained in <x_A>^r + I, so the first failure ends the search.
  std::int64_t r = 0;
  while (r < f.degree()) {
    std::vector<Polynomial> gens = algebra.ideal().generators();
    for (const auto& m : monomials_of_degree(a.size(), r + 1)) {
      std::vector<std::int32_t> exps(n, 0);
      for (std::size_t k = 0; k < a.size(); ++k) exps[a.indices()[k]] = m[k];
      gens.push_back(Polynomial::monomial(ring, Monomial(std::move(exps)), one));
    }
    if (!ideal_membership(f, Ideal(ring, std::move(gens)))) break;
    ++r;
  }
  return r;
}

}  // namespace

QValue adic_order(const IndexSet& a, const Polynomial& f, const PresentedAlgebra& algebra) {
  if (!same_ring(f.ring(), algebra.ring())) throw std::invalid_argument("element from a different ring");
  if (!a.empty() && a.max_index() >= algebra.num_vars()) throw std::invalid_argument("index outside [n]");
  QValue best = QValue::infinity();
  for (const auto& comp : f.homogeneous_components()) {
    if (algebra.is_zero_element(comp)) continue;
    best = min(best, QValue(homogeneous_adic_order(a, comp, algebra)));
  }
  return best;
}

Quasivaluation scale(const mpq_class& c, const Quasivaluation& v) {
  if (c < 0) throw std::invalid_argument("negative scale factor");
  auto node = std::make_shared<Quasivaluation::Node>();
  node->kind = QuasivalKind::scaled;
  node->algebra = v.algebra();
  node->factor = c;
  node->children = {v};
  return Quasivaluation(std::move(node));
}

bool share_groebner_cone(const Ideal& ideal, const std::vector<WeightVector>& us) {
  if (us.empty()) return true;
  WeightVector sum = us.front();
  for (std::size_t i = 1; i < us.size(); ++i) sum = sum + us[i];
  const auto order = MonomialOrder::weighted(sum);
  const auto reference = buchberger_reduced(ideal, order);
  const auto& lead = reference.leading_monomials();
  return std::all_of(us.begin(), us.end(), [&](const WeightVector& u) {
    return buchberger_reduced(initial_ideal(u, ideal), order).leading_monomials() == lead;
  });
}

Quasivaluation oplus_in_cone(const std::vector<Quasivaluation>& vs) {
  if (vs.empty()) throw std::invalid_argument("empty sum of quasivaluations");
  const AlgebraPtr algebra = vs.front().algebra();
  std::vector<WeightVector> us;
  for (const auto& v : vs) {
    if (v.algebra() != algebra && !(same_ring(v.algebra()->ring(), algebra->ring()) &&
                                    ideals_equal(v.algebra()->ideal(), algebra->ideal()))) {
      throw std::invalid_argument("quasivaluations on different algebras");
    }
    auto u = v.as_weight();
    if (!u) throw ConeMismatchError("sum is only defined here for weight quasivaluations, got " + v.descriptor());
    us.push_back(std::move(*u));
  }
  if (!share_groebner_cone(algebra->ideal(), us)) {
    throw ConeMismatchError("weights do not share a Groebner cone");
  }
  WeightVector sum = us.front();
  for (std::size_t i = 1; i < us.size(); ++i) sum = sum + us[i];
  auto node = std::make_shared<Quasivaluation::Node>();
  node->kind = QuasivalKind::oplus;
  node->algebra = algebra;
  node->w = std::move(sum);
  node->children = vs;
  return Quasivaluation(std::move(node));
}

std::vector<Monomial> standard_basis_slice(const PresentedAlgebra& algebra, const MonomialOrder& order,
                                           std::int64_t degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  const auto gb = algebra.basis(order);
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(algebra.num_vars(), degree)) {
    if (gb.is_standard(m)) out.push_back(std::move(m));
  }
  return out;
}

nlohmann::json value_table(const Quasivaluation& v, const std::vector<Polynomial>& elements) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& f : elements) entries.push_back({{"element", f.to_string()}, {"value", evaluate(v, f).to_json()}});
  return {{"quasivaluation", v.descriptor()}, {"entries", entries}};
}

}  // namespace tropcm
