#include "tropcm/fan.hpp"

#include <stdexcept>

#include "tropcm/groebner.hpp"
#include "tropcm/parallel.hpp"
#include "tropcm/rng.hpp"

namespace tropcm {

ConeCA::ConeCA(IndexSet a, std::size_t n) : a_(std::move(a)), n_(n) {
  if (!a_.empty() && a_.max_index() >= n_) throw std::invalid_argument("cone index outside [n]");
}

std::vector<ConeCA> enumerate_generic_fan(std::size_t n, std::size_t d, std::size_t codim) {
  if (d < 1 || d > n) throw std::invalid_argument("generic fan needs 1 <= d <= n");
  if (codim > d - 1) throw std::invalid_argument("codimension must lie in [0, d - 1]");
  // |A^c| = n - d + 1 + codim  <=>  |A| = d - 1 - codim
  std::vector<ConeCA> out;
  for (auto& a : subsets_of_size(n, d - 1 - codim)) out.emplace_back(std::move(a), n);
  return out;
}

bool cone_contains(const ConeCA& cone, const WeightVector& w, bool interior) {
  if (w.size() != cone.ambient_dim()) throw std::invalid_argument("weight vector length does not match the cone");
  if (w.size() == 0) return true;
  if (cone.A().size() == cone.ambient_dim()) return true;
  const mpq_class m = w.min();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool in_a = cone.A().contains(i);
    if (!in_a && w[i] != m) return false;
    if (in_a && interior && w[i] == m) return false;
  }
  return true;
}

bool in_fan_support(const WeightVector& w, std::size_t d) {
  const std::size_t n = w.size();
  if (d < 1 || d > n) throw std::invalid_argument("generic fan needs 1 <= d <= n");
  const mpq_class m = w.min();
  std::size_t at_min = 0;
  for (const auto& x : w.entries()) at_min += (x == m) ? 1 : 0;
  return at_min >= n - d + 1;
}

WeightVector sample_interior(const ConeCA& cone, std::uint64_t seed) {
  const std::size_t n = cone.ambient_dim();
  Rng rng(seed);
  std::vector<mpq_class> w(n, 0);
  if (cone.A().size() == n) {
    for (auto& x : w) x = rng.uniform(0, 6);
    return WeightVector(std::move(w)).normalized();
  }
  for (auto i : cone.A()) w[i] = rng.uniform(1, 6);
  return WeightVector(std::move(w));
}

WeightVector epsilon_vector(const IndexSet& a, std::size_t n) {
  std::vector<mpq_class> w(n, 0);
  for (auto i : a) {
    if (i >= n) throw std::invalid_argument("index outside [n]");
    w[i] = 1;
  }
  return WeightVector(std::move(w));
}

bool trop_membership(const WeightVector& w, const Ideal& ideal) {
  return !contains_monomial(initial_ideal(w, ideal)).has_value();
}

bool groebner_cone_equal(const WeightVector& u, const WeightVector& w, const Ideal& ideal) {
  return ideals_equal(initial_ideal(u, ideal), initial_ideal(w, ideal));
}

nlohmann::json FanReport::to_json() const {
  nlohmann::json cones_json = nlohmann::json::array();
  for (const auto& c : cones) {
    nlohmann::json row = {{"A", c.cone.A().one_based()},
                          {"sample_w", c.sample_w.to_string()},
                          {"in_w_gb", c.in_w_gb},
                          {"monomial_free", c.monomial_free}};
    row["prime_verdict"] = c.prime_verdict ? nlohmann::json(*c.prime_verdict) : nlohmann::json(nullptr);
    cones_json.push_back(std::move(row));
  }
  return {{"n", n}, {"d", d}, {"codim", codim}, {"cones", cones_json}};
}

FanReport fan_report(const Ideal& ideal, std::size_t d, std::size_t codim, std::uint64_t seed, unsigned jobs) {
  FanReport report;
  report.n = ideal.num_vars();
  report.d = d;
  report.codim = codim;
  const auto cones = enumerate_generic_fan(report.n, d, codim);
  report.cones.resize(cones.size(), FanConeRecord{cones.front(), {}, {}, false, std::nullopt});
  parallel_for(cones.size(), jobs, [&](std::size_t k) {
    FanConeRecord rec{cones[k], sample_interior(cones[k], derive_seed(seed, k)), {}, false, std::nullopt};
    const Ideal in_w = initial_ideal(rec.sample_w, ideal);
    const auto gb = canonical_basis(in_w);
    for (const auto& g : gb.basis()) rec.in_w_gb.push_back(g.to_string());
    rec.monomial_free = !contains_monomial(in_w).has_value();
    report.cones[k] = std::move(rec);
  });
  return report;
}

}  // namespace tropcm
