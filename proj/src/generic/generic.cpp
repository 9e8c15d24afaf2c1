#include "tropcm/generic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tropcm/groebner.hpp"
#include "tropcm/parallel.hpp"
#include "tropcm/rng.hpp"

namespace tropcm {

namespace {

constexpr int kInvertibleRetries = 64;

}  // namespace

LinearChange::LinearChange(Matrix matrix, std::uint64_t seed, std::int64_t bound)
    : matrix_(std::move(matrix)), seed_(seed), bound_(bound) {
  if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("coordinate change must be square");
  if (determinant(matrix_).is_zero()) throw std::invalid_argument("coordinate change must be invertible");
}

LinearChange LinearChange::identity(std::size_t n, const Field& field) {
  return LinearChange(Matrix::identity(n, field), 0, 0);
}

LinearChange LinearChange::inverse() const {
  auto inv = tropcm::inverse(matrix_);
  if (!inv) throw std::logic_error("stored coordinate change is singular");
  return LinearChange(std::move(*inv), seed_, bound_);
}

nlohmann::json LinearChange::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < matrix_.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < matrix_.cols(); ++c) row.push_back(matrix_.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return {{"seed", seed_}, {"bound", bound_}, {"field", matrix_.field().to_string()}, {"matrix", rows}};
}

LinearChange random_gl(std::size_t n, std::uint64_t seed, std::int64_t bound, const Field& field) {
  if (field.is_rational() && bound < 2) throw std::invalid_argument("bound must be at least 2");
  Rng rng(seed);
  for (int attempt = 0; attempt < kInvertibleRetries; ++attempt) {
    Matrix m(n, n, field);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        m.at(r, c) = field.is_rational() ? field.from_int(rng.uniform(-bound, bound))
                                         : field.from_int(rng.uniform(0, field.characteristic() - 1));
      }
    }
    if (!determinant(m).is_zero()) return LinearChange(std::move(m), seed, bound);
  }
  throw std::runtime_error("no invertible matrix after " + std::to_string(kInvertibleRetries) + " draws");
}

Ideal apply_change(const LinearChange& g, const Ideal& ideal) {
  const auto& ring = ideal.ring();
  const std::size_t n = ring->size();
  if (g.size() != n) throw std::invalid_argument("coordinate change size does not match the ring");
  if (!(g.matrix().field() == ring->field())) throw FieldMismatch("coordinate change over a different field");

  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i) terms.push_back(Term{Monomial::variable(n, i), g.matrix().at(j, i)});
    images.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  std::map<std::pair<std::size_t, std::int32_t>, Polynomial> powers;
  auto power = [&](std::size_t j, std::int32_t e) -> const Polynomial& {
    auto it = powers.find({j, e});
    if (it == powers.end()) it = powers.emplace(std::make_pair(j, e), images[j].pow(static_cast<unsigned>(e))).first;
    return it->second;
  };

  std::vector<Polynomial> gens;
  for (const auto& f : ideal.generators()) {
    Polynomial acc(ring);
    for (const auto& t : f.terms()) {
      Polynomial p = Polynomial::constant(ring, t.coeff);
      for (std::size_t j = 0; j < n; ++j) {
        if (t.mono[j] > 0) p *= power(j, t.mono[j]);
      }
      acc += p;
    }
    gens.push_back(std::move(acc));
  }
  return Ideal(ring, std::move(gens));
}

bool GenericityAudit::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.pass; });
}

std::vector<AuditCheck> GenericityAudit::failures() const {
  std::vector<AuditCheck> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const AuditCheck& c) { return !c.pass; });
  return out;
}

nlohmann::json GenericityAudit::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json row = {{"A", c.a.one_based()},
                          {"expected_dim", c.expected_dim},
                          {"actual_dim", c.actual_dim},
                          {"pass", c.pass}};
    if (c.implied_by_subset) row["implied_by_subset"] = true;
    rows.push_back(std::move(row));
  }
  return {{"seed", seed}, {"bound", bound}, {"d", d}, {"pass", passed()}, {"checks", rows}};
}

GenericityAudit genericity_audit(const Ideal& ideal, std::int64_t d, std::size_t max_a, std::size_t sample_limit,
                                 std::uint64_t seed, unsigned jobs) {
  const std::size_t n = ideal.num_vars();
  if (d < 0) throw std::invalid_argument("negative dimension");
  max_a = std::min(max_a, n);

  std::vector<IndexSet> pool;
  for (std::size_t k = 1; k <= max_a; ++k) {
    for (auto& a : subsets_of_size(n, k)) pool.push_back(std::move(a));
  }
  if (sample_limit > 0 && pool.size() > sample_limit) {
    Rng rng(seed);
    for (std::size_t i = 0; i < sample_limit; ++i) {
      const auto j = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(i),
                                                          static_cast<std::int64_t>(pool.size() - 1)));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(sample_limit);
    std::sort(pool.begin(), pool.end(), [](const IndexSet& a, const IndexSet& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
  }

  GenericityAudit audit;
  audit.seed = seed;
  audit.d = d;
  audit.checks.resize(pool.size());
  parallel_for(pool.size(), jobs, [&](std::size_t k) {
    AuditCheck c;
    c.a = pool[k];
    c.expected_dim = d - static_cast<std::int64_t>(c.a.size());
    const auto hs = hilbert_series_quotient(ideal.with_variables(c.a));
    c.actual_dim = hs.is_zero() ? -1 : hs.dimension();
    c.pass = c.actual_dim == c.expected_dim;
    audit.checks[k] = std::move(c);
  });
  // a failure at A is reported on every tested superset of A as well
  for (const auto& bad : audit.failures()) {
    for (auto& c : audit.checks) {
      if (c.pass && bad.a.subset_of(c.a)) {
        c.pass = false;
        c.implied_by_subset = true;
      }
    }
  }
  return audit;
}

GenericInstance make_generic(const Ideal& ideal, std::uint64_t seed, std::int64_t bound, std::size_t sample_limit,
                             unsigned jobs) {
  const std::int64_t d = krull_dimension(ideal);
  const std::size_t max_a = d > 0 ? static_cast<std::size_t>(d - 1) : 0;
  for (int attempt = 0; attempt <= kMaxReseeds; ++attempt) {
    const std::uint64_t s = attempt == 0 ? seed : derive_seed(seed, static_cast<std::uint64_t>(attempt));
    const LinearChange g = random_gl(ideal.num_vars(), s, bound, ideal.ring()->field());
    Ideal transformed = apply_change(g, ideal);
    GenericityAudit audit = genericity_audit(transformed, d, max_a, sample_limit, s, jobs);
    audit.bound = bound;
    if (audit.passed()) return GenericInstance{std::move(transformed), g, std::move(audit), attempt};
  }
  throw std::runtime_error("genericity audit failed after " + std::to_string(kMaxReseeds) + " re-seeds");
}

}  // namespace tropcm
