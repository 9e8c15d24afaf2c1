#include "tropcm/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropcm {

namespace {

bool canonical_before(const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) > 0; }

void sort_and_combine(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return canonical_before(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  terms = std::move(out);
}

std::string coeff_prefix(const Scalar& c, bool is_constant_term) {
  if (is_constant_term) return c.to_string();
  if (c.is_one()) return "";
  return c.to_string() + "*";
}

}  // namespace

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.mono.size() != ring->size()) throw std::invalid_argument("term outside the ring");
    if (t.coeff.modulus() != ring->field().characteristic()) {
      throw FieldMismatch("coefficient from another field");
    }
  }
  Polynomial p(std::move(ring));
  sort_and_combine(terms);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  const auto n = ring->size();
  return from_terms(std::move(ring), {Term{Monomial(n), c}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  const auto n = ring->size();
  auto one = ring->field().one();
  return from_terms(std::move(ring), {Term{Monomial::variable(n, i), one}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
  return from_terms(std::move(ring), {Term{m, c}});
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

std::int64_t Polynomial::degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

std::int64_t Polynomial::min_degree() const { return terms_.empty() ? -1 : terms_.back().mono.degree(); }

bool Polynomial::is_homogeneous() const { return terms_.empty() || degree() == min_degree(); }

Polynomial Polynomial::homogeneous_component(std::int64_t d) const {
  Polynomial p(ring_);
  for (const auto& t : terms_) {
    if (t.mono.degree() == d) p.terms_.push_back(t);
  }
  return p;
}

std::vector<Polynomial> Polynomial::homogeneous_components() const {
  std::vector<Polynomial> out;
  for (const auto& t : terms_) {
    if (out.empty() || out.back().terms_.front().mono.degree() != t.mono.degree()) {
      out.emplace_back(ring_);
    }
    out.back().terms_.push_back(t);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  }
  return *best;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return canonical_before(t.mono, x); });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return ring_->field().zero();
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("polynomials from different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const auto c = grevlex_compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      auto s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back(Term{terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prod.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
  }
  Polynomial r(ring_);
  sort_and_combine(prod);
  r.terms_ = std::move(prod);
  return r;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, ring_->field().one());
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  return *this * leading_term(order).coeff.inverse();
}

Polynomial Polynomial::mapped(RingPtr target, const std::vector<std::size_t>& var_map) const {
  if (var_map.size() != ring_->size()) throw std::invalid_argument("variable map has the wrong length");
  if (!(target->field() == ring_->field())) throw FieldMismatch("mapping between different fields");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::int32_t> e(target->size(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (var_map[i] >= target->size()) throw std::invalid_argument("variable has no image in the target ring");
      e[var_map[i]] += t.mono[i];
    }
    out.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return from_terms(std::move(target), std::move(out));
}

IndexSet Polynomial::support() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    for (const auto& t : terms_) {
      if (t.mono[i] > 0) {
        idx.push_back(i);
        break;
      }
    }
  }
  return IndexSet(std::move(idx));
}

bool Polynomial::operator==(const Polynomial& o) const {
  return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    Scalar c = t.coeff;
    bool negative = c.is_rational() && sgn(c.rational_value()) < 0;
    if (negative) c = -c;
    if (k == 0) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    const bool is_const = t.mono.is_one();
    s += coeff_prefix(c, is_const);
    if (!is_const) s += t.mono.to_string(*ring_);
  }
  return s;
}

Polynomial initial_form(const WeightVector& w, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("initial form of the zero polynomial");
  if (w.size() != f.ring()->size()) throw std::invalid_argument("weight vector length does not match the ring");
  std::vector<mpq_class> vals;
  vals.reserve(f.num_terms());
  for (const auto& t : f.terms()) vals.push_back(w.dot(t.mono));
  const mpq_class m = *std::min_element(vals.begin(), vals.end());
  std::vector<Term> keep;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    if (vals[k] == m) keep.push_back(f.terms()[k]);
  }
  return Polynomial::from_terms(f.ring(), std::move(keep));
}

}  // namespace tropcm
