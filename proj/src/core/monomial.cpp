#include "tropcm/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tropcm/ring.hpp"

namespace tropcm {

Monomial::Monomial(std::vector<std::int32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t n, std::size_t i, std::int32_t power) {
  std::vector<std::int32_t> e(n, 0);
  e.at(i) = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<std::int32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = other.exps_[i] - exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] + o.exps_[i];
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  std::vector<std::int32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], o.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& o) const {
  std::vector<std::int32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(exps_[i], o.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0 && o.exps_[i] > 0) return false;
  }
  return true;
}

std::string Monomial::to_string(const Ring& ring) const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.name(i);
    if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void fill(std::size_t n, std::size_t pos, std::int64_t left, std::vector<std::int32_t>& cur,
          std::vector<Monomial>& out) {
  if (pos + 1 == n) {
    cur[pos] = static_cast<std::int32_t>(left);
    out.emplace_back(cur);
    return;
  }
  for (std::int64_t e = left; e >= 0; --e) {
    cur[pos] = static_cast<std::int32_t>(e);
    fill(n, pos + 1, left - e, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, std::int64_t degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (n == 0) {
    if (degree == 0) out.emplace_back(std::size_t{0});
    return out;
  }
  std::vector<std::int32_t> cur(n, 0);
  fill(n, 0, degree, cur, out);
  return out;
}

}  // namespace tropcm
