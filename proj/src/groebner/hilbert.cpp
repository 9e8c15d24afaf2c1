#include "tropcm/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropcm {

namespace {

using Poly = std::vector<std::int64_t>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly shift(const Poly& a, std::int64_t k) {
  if (a.empty()) return a;
  Poly r(static_cast<std::size_t>(k), 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

Poly one_minus_t_pow(std::int64_t d) {
  Poly r(static_cast<std::size_t>(d) + 1, 0);
  r[0] += 1;
  r[static_cast<std::size_t>(d)] -= 1;
  trim(r);
  return r;
}

std::int64_t eval_at_one(const Poly& p) {
  std::int64_t s = 0;
  for (auto c : p) s += c;
  return s;
}

// p / (1 - t), assuming p(1) == 0.
Poly divide_one_minus_t(const Poly& p) {
  Poly q(p.size() > 0 ? p.size() - 1 : 0, 0);
  std::int64_t acc = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    acc += p[i];
    q[i] = acc;
  }
  trim(q);
  return q;
}

Poly numerator(std::vector<Monomial> gens) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto& g : gens) {
    if (g.is_one()) return {};
  }
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) coprime = gens[i].coprime(gens[j]);
  }
  if (coprime) {
    Poly r{1};
    for (const auto& g : gens) r = mul(r, one_minus_t_pow(g.degree()));
    return r;
  }
  // N(J + <m>) = N(J) - t^deg(m) N(J : m), pivoting on the largest-degree generator
  auto pivot_it = std::max_element(gens.begin(), gens.end(),
                                   [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  const Monomial m = *pivot_it;
  gens.erase(pivot_it);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g.gcd(m).quotient_of(g));
  return sub(numerator(gens), shift(numerator(std::move(colon)), m.degree()));
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::int64_t>(r);
}

}  // namespace

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

HilbertSeries::HilbertSeries(std::vector<std::int64_t> numerator, std::int64_t exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  trim(num_);
  if (num_.empty()) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && eval_at_one(num_) == 0) {
    num_ = divide_one_minus_t(num_);
    --exp_;
  }
}

std::int64_t HilbertSeries::multiplicity() const { return eval_at_one(num_); }

std::int64_t HilbertSeries::coefficient(std::int64_t m) const {
  if (m < 0) return 0;
  std::int64_t s = 0;
  for (std::size_t j = 0; j < num_.size(); ++j) {
    const std::int64_t k = m - static_cast<std::int64_t>(j);
    if (k < 0) break;
    if (exp_ == 0) {
      if (k == 0) s += num_[j];
    } else {
      s += num_[j] * binomial(k + exp_ - 1, exp_ - 1);
    }
  }
  return s;
}

HilbertSeries HilbertSeries::times_free_variables(std::int64_t k) const {
  if (is_zero()) return *this;
  return HilbertSeries(num_, exp_ + k);
}

std::string HilbertSeries::to_string() const {
  std::string n;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    const auto c = num_[i];
    if (c == 0) continue;
    const auto mag = c < 0 ? -c : c;
    if (n.empty()) {
      if (c < 0) n += "-";
    } else {
      n += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      n += std::to_string(mag);
    } else {
      if (mag != 1) n += std::to_string(mag) + "*";
      n += "t";
      if (i > 1) n += "^" + std::to_string(i);
    }
  }
  if (n.empty()) n = "0";
  if (exp_ == 0) return n;
  return "(" + n + ")/(1 - t)^" + std::to_string(exp_);
}

HilbertSeries hilbert_series_of_monomials(std::vector<Monomial> gens, std::size_t n) {
  for (const auto& g : gens) {
    if (g.size() != n) throw std::invalid_argument("monomial outside the ring");
  }
  return HilbertSeries(numerator(std::move(gens)), static_cast<std::int64_t>(n));
}

}  // namespace tropcm
