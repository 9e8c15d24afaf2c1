#include "tropcm/weight.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tropcm {

IndexSet::IndexSet(std::vector<std::size_t> indices) : idx_(std::move(indices)) {
  std::sort(idx_.begin(), idx_.end());
  idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
}

IndexSet IndexSet::from_one_based(const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> z;
  for (auto i : indices) {
    if (i == 0) throw std::invalid_argument("index sets are 1-based; got 0");
    z.push_back(i - 1);
  }
  return IndexSet(std::move(z));
}

IndexSet IndexSet::parse(const std::string& text, std::size_t n) {
  std::vector<std::size_t> z;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) continue;
    if (tok.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad index '" + tok + "'");
    }
    const auto v = std::stoull(tok);
    if (v < 1 || v > n) {
      throw std::invalid_argument("index " + tok + " outside [1, " + std::to_string(n) + "]");
    }
    z.push_back(v - 1);
  }
  return IndexSet(std::move(z));
}

IndexSet IndexSet::full(std::size_t n) {
  std::vector<std::size_t> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = i;
  return IndexSet(std::move(z));
}

bool IndexSet::contains(std::size_t i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }

IndexSet IndexSet::complement(std::size_t n) const {
  std::vector<std::size_t> z;
  for (std::size_t i = 0; i < n; ++i) {
    if (!contains(i)) z.push_back(i);
  }
  return IndexSet(std::move(z));
}

IndexSet IndexSet::without(std::size_t i) const {
  std::vector<std::size_t> z;
  for (auto j : idx_) {
    if (j != i) z.push_back(j);
  }
  return IndexSet(std::move(z));
}

bool IndexSet::subset_of(const IndexSet& o) const {
  return std::includes(o.idx_.begin(), o.idx_.end(), idx_.begin(), idx_.end());
}

std::string IndexSet::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < idx_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(idx_[k] + 1);
  }
  return s;
}

std::vector<std::size_t> IndexSet::one_based() const {
  std::vector<std::size_t> v;
  for (auto i : idx_) v.push_back(i + 1);
  return v;
}

std::vector<IndexSet> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.emplace_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

WeightVector::WeightVector(std::vector<mpq_class> entries) : w_(std::move(entries)) {
  for (auto& q : w_) q.canonicalize();
}

WeightVector::WeightVector(std::initializer_list<long> entries) {
  for (long v : entries) w_.emplace_back(v);
}

WeightVector WeightVector::zero(std::size_t n) { return WeightVector(std::vector<mpq_class>(n, 0)); }

WeightVector WeightVector::constant(std::size_t n, const mpq_class& c) {
  return WeightVector(std::vector<mpq_class>(n, c));
}

WeightVector WeightVector::parse(const std::string& text) {
  std::vector<mpq_class> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) throw std::invalid_argument("empty weight entry in '" + text + "'");
    mpq_class q;
    if (q.set_str(tok, 10) != 0 || tok.find_first_not_of("-+0123456789/") != std::string::npos) {
      throw std::invalid_argument("bad weight entry '" + tok + "'");
    }
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + tok + "'");
    q.canonicalize();
    v.push_back(q);
  }
  if (v.empty()) throw std::invalid_argument("empty weight vector");
  return WeightVector(std::move(v));
}

mpq_class WeightVector::min() const {
  if (w_.empty()) throw std::domain_error("min of an empty weight vector");
  return *std::min_element(w_.begin(), w_.end());
}

mpq_class WeightVector::dot(const Monomial& m) const {
  if (m.size() != w_.size()) {
    throw std::invalid_argument("weight vector of length " + std::to_string(w_.size()) +
                                " applied to a monomial in " + std::to_string(m.size()) + " variables");
  }
  mpq_class s = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (m[i] != 0) s += w_[i] * m[i];
  }
  return s;
}

WeightVector WeightVector::operator+(const WeightVector& o) const {
  if (o.size() != size()) throw std::invalid_argument("weight vector length mismatch");
  std::vector<mpq_class> v(w_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = w_[i] + o.w_[i];
  return WeightVector(std::move(v));
}

WeightVector WeightVector::scaled(const mpq_class& c) const {
  std::vector<mpq_class> v(w_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = w_[i] * c;
  return WeightVector(std::move(v));
}

WeightVector WeightVector::shifted(const mpq_class& c) const {
  std::vector<mpq_class> v(w_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = w_[i] + c;
  return WeightVector(std::move(v));
}

WeightVector WeightVector::normalized() const {
  if (w_.empty()) return *this;
  return shifted(-min());
}

std::vector<std::int64_t> WeightVector::integer_multiple() const {
  mpz_class l = 1;
  for (const auto& q : w_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<std::int64_t> out;
  for (const auto& q : w_) {
    mpz_class v = q.get_num() * (l / q.get_den());
    if (!v.fits_slong_p()) throw std::overflow_error("weight vector too large for machine integers");
    out.push_back(v.get_si());
  }
  return out;
}

std::string WeightVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) s += ",";
    s += w_[i].get_str();
  }
  return s;
}

mpq_class weight_value(const WeightVector& w, const Monomial& m) { return w.dot(m); }

}  // namespace tropcm
