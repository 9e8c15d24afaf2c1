// Acceptance run: one PASS/FAIL line per criterion on the instance corpus.
// Every comparison is exact; the only numeric tolerances are the wall-clock
// budgets below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "corpus.hpp"
#include "oracle.hpp"
#include "tropcm/fan.hpp"
#include "tropcm/lab.hpp"
#include "tropcm/quasival.hpp"
#include "tropcm/rng.hpp"

using namespace tropcm;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr double kNoBudget = 0.0;
constexpr double kBudgetInitialFormula = 120.0;
constexpr double kBudgetGrPresentation = 120.0;
constexpr double kBudgetDecomposition = 60.0;
constexpr std::int64_t kMaxDeg = 4;
constexpr std::size_t kRandomElements = 50;
constexpr std::size_t kSamplesPerCone = 3;
constexpr std::size_t kPairs = 200;
constexpr std::size_t kOraclesPerInstance = 10;
constexpr int kMaxTotalReseeds = 1;

struct Outcome {
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string first_failure;
  std::string note;

  void record(bool ok, const std::string& what) {
    ++total;
    if (ok) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = what;
    }
  }
  bool ok() const { return total > 0 && passed == total && first_failure.empty(); }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string verdict_line(const VerificationReport& r) { return r.claim + " " + r.params.dump() + " -> " + to_string(r.verdict); }

// Seeded choice of k items (all of them when k >= size).
template <typename T>
std::vector<T> sample(std::vector<T> pool, std::size_t k, std::uint64_t seed) {
  if (pool.size() <= k) return pool;
  Rng rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(i), static_cast<std::int64_t>(pool.size()) - 1));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

std::vector<IndexSet> subsets_up_to(std::size_t n, std::size_t lo, std::size_t hi) {
  std::vector<IndexSet> out;
  for (std::size_t k = lo; k <= hi; ++k) {
    for (auto& a : subsets_of_size(n, k)) out.push_back(std::move(a));
  }
  return out;
}

Polynomial random_form(const RingPtr& ring, std::int64_t degree, Rng& rng) {
  const auto monos = monomials_of_degree(ring->size(), degree);
  std::vector<Term> terms;
  const auto count = rng.uniform(1, 4);
  for (std::int64_t k = 0; k < count; ++k) {
    const auto& m = monos[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(monos.size()) - 1))];
    std::int64_t c = 0;
    while (c == 0) c = rng.uniform(-9, 9);
    terms.push_back({m, ring->field().from_int(c)});
  }
  auto p = Polynomial::from_terms(ring, std::move(terms));
  if (p.is_zero()) p = Polynomial::monomial(ring, monos.front(), ring->field().one());
  return p;
}

struct Corpus {
  corpus::Named lin, conic, quad4, pluck;
  corpus::Named lin_g, conic_g, quad4_g, pluck_g;

  std::vector<const corpus::Named*> generic() const { return {&lin_g, &conic_g, &quad4_g, &pluck_g}; }
  std::vector<const corpus::Named*> all() const { return {&lin, &conic, &quad4, &pluck, &lin_g, &conic_g, &quad4_g, &pluck_g}; }
};

Corpus build_corpus() {
  auto plain = corpus::plain();
  auto gen = corpus::generic_all();
  return {plain[0], plain[1], plain[2], plain[3], gen[0], gen[1], gen[2], gen[3]};
}

// 1. in_w(I) = I_A k[x] on the maximal and codim-1 cones of generic Pluecker.
Outcome initial_formula(const Corpus& c) {
  Outcome o;
  std::uint64_t stream = 0;
  for (std::size_t codim = 0; codim <= 1; ++codim) {
    for (const auto& cone : enumerate_generic_fan(6, 5, codim)) {
      for (std::size_t s = 0; s < kSamplesPerCone; ++s) {
        const auto w = sample_interior(cone, derive_seed(kSeed, stream++));
        const auto r = verify_initial_formula(c.pluck_g.ideal, cone.A(), w);
        o.record(r.passed(), verdict_line(r));
      }
    }
  }
  o.note = "exact reduced-GB equalities on 15 + 20 cones";
  return o;
}

// 2. Hilbert series identity and presentation for in_{eps_A}(I).
Outcome gr_presentation(const Corpus& c) {
  Outcome o;
  auto check = [&](const Ideal& ideal, const IndexSet& a) {
    const auto r = verify_gr_presentation(ideal, a);
    o.record(r.passed() && r.evidence.value("hilbert_equal", false), verdict_line(r));
  };
  check(c.conic.ideal, IndexSet{0});
  for (const auto& a : subsets_up_to(4, 0, 2)) check(c.quad4_g.ideal, a);
  for (const auto& a : sample(subsets_up_to(6, 1, 4), 10, kSeed)) check(c.pluck_g.ideal, a);
  o.note = "HS(k[x]/in_eps_A(I)) = HS(k[x_Ac]/I_A)/(1-t)^|A|";
  return o;
}

// 3. v_w = (min(w) . deg) + sum (w_i - min(w)) . ord_i on maximal cones.
Outcome decomposition(const Corpus& c) {
  Outcome o;
  std::uint64_t stream = 100;
  for (const auto* inst : {&c.conic, &c.quad4_g}) {
    const auto n = inst->ideal.num_vars();
    for (const auto& cone : enumerate_generic_fan(n, inst->d, 0)) {
      for (const auto& w : {sample_interior(cone, derive_seed(kSeed, stream++)), epsilon_vector(cone.A(), n)}) {
        const auto r = verify_quasival_decomposition(inst->ideal, cone.A(), w, kMaxDeg, kRandomElements,
                                                     derive_seed(kSeed, stream++));
        o.record(r.passed(), inst->name + " " + verdict_line(r));
      }
    }
  }
  o.note = "all standard monomials to degree 4 plus 50 random elements per check";
  return o;
}

// 4. eps_A in Trop(I) and v_{eps_A}(x_i) = (eps_A)_i for every audited A.
Outcome epsilon_facts(const Corpus& c) {
  Outcome o;
  for (const auto* inst : c.generic()) {
    const auto audit = genericity_audit(inst->ideal, inst->d, static_cast<std::size_t>(inst->d - 1));
    o.record(audit.passed(), inst->name + " genericity audit");
    for (const auto& check : audit.checks) {
      const auto r = verify_epsilon_facts(inst->ideal, check.a);
      o.record(r.passed(), inst->name + " " + verdict_line(r));
    }
  }
  o.note = "every subset of the four generic audits";
  return o;
}

// 5. in_{eps_{A - i}}(in_{eps_i}(I)) = in_{eps_A}(I).
Outcome iterated(const Corpus& c) {
  Outcome o;
  using Pair = std::pair<IndexSet, std::size_t>;
  auto pairs = [](std::size_t n, std::size_t max_a) {
    std::vector<Pair> out;
    for (const auto& a : subsets_up_to(n, 1, max_a)) {
      for (auto i : a) out.emplace_back(a, i);
    }
    return out;
  };
  for (const auto& [a, i] : pairs(4, 2)) {
    const auto r = verify_iterated_initial(c.quad4_g.ideal, a, i);
    o.record(r.passed(), "E-quad4-generic " + verdict_line(r));
  }
  for (const auto& [a, i] : sample(pairs(6, 3), 10, kSeed)) {
    const auto r = verify_iterated_initial(c.pluck_g.ideal, a, i);
    o.record(r.passed(), "E-pluck-generic " + verdict_line(r));
  }
  o.note = "exact reduced-GB equalities";
  return o;
}

// 6. v_u + v_w = v_{u+w} on the adapted basis for u, w in one cone.
Outcome weight_sums(const Corpus& c) {
  Outcome o;
  Rng rng(kSeed);
  std::uint64_t stream = 200;
  for (const auto* inst : c.generic()) {
    const auto cones = enumerate_generic_fan(inst->ideal.num_vars(), inst->d, 0);
    for (int k = 0; k < 5; ++k) {
      const auto& cone = cones[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(cones.size()) - 1))];
      const auto u = sample_interior(cone, derive_seed(kSeed, stream++));
      const auto w = sample_interior(cone, derive_seed(kSeed, stream++));
      const auto r = verify_weight_sum(inst->ideal, u, w, kMaxDeg);
      o.record(r.passed(), inst->name + " " + verdict_line(r));
    }
  }
  o.note = "20 seeded (u, w) pairs, standard monomials to degree 4";
  return o;
}

// 7. Codim-1 cones prime (quadric rank >= 3), maximal cones not (rank <= 2), linear side prime.
Outcome primeness(const Corpus& c) {
  Outcome o;
  std::uint64_t stream = 300;
  for (const auto* inst : {&c.quad4_g, &c.pluck_g}) {
    const auto n = inst->ideal.num_vars();
    for (std::size_t codim = 0; codim <= 1; ++codim) {
      for (const auto& cone : enumerate_generic_fan(n, inst->d, codim)) {
        for (std::size_t s = 0; s < kSamplesPerCone; ++s) {
          const auto w = sample_interior(cone, derive_seed(kSeed, stream++));
          const auto res = primeness_check(initial_ideal(w, inst->ideal));
          bool ok = res.certificate && res.certificate->method == "principal-quadric-rank";
          if (ok) {
            const auto rank = res.certificate->data.at("rank").get<std::int64_t>();
            ok = codim == 1 ? (res.verdict == PrimeVerdict::prime && rank >= 3)
                            : (res.verdict == PrimeVerdict::not_prime && rank <= 2);
          }
          o.record(ok, inst->name + " " + cone.to_string() + " w=" + w.to_string() + " -> " + res.to_json().dump());
        }
      }
    }
  }
  for (const auto* inst : {&c.lin, &c.lin_g}) {
    const auto n = inst->ideal.num_vars();
    for (std::size_t codim = 0; codim < static_cast<std::size_t>(inst->d); ++codim) {
      for (const auto& cone : enumerate_generic_fan(n, inst->d, codim)) {
        const auto w = sample_interior(cone, derive_seed(kSeed, stream++));
        const auto res = primeness_check(initial_ideal(w, inst->ideal));
        o.record(res.verdict == PrimeVerdict::prime, inst->name + " " + cone.to_string() + " -> " + res.to_json().dump());
      }
    }
  }
  o.note = "certificates on every sampled stratum point";
  return o;
}

// 8. Graded slices of in_w(I) against the Macaulay-matrix oracle.
Outcome oracle_slices(const Corpus& c) {
  Outcome o;
  Rng rng(kSeed);
  for (const auto* inst : c.all()) {
    const auto n = inst->ideal.num_vars();
    for (std::size_t k = 0; k < kOraclesPerInstance; ++k) {
      std::vector<mpq_class> e;
      for (std::size_t i = 0; i < n; ++i) {
        e.emplace_back(rng.uniform(-3, 6), rng.uniform(1, 2));
        e.back().canonicalize();
      }
      const WeightVector w(std::move(e));
      const auto in = initial_ideal(w, inst->ideal);
      for (std::int64_t d = 1; d <= kMaxDeg; ++d) {
        o.record(oracle::span_slice(in, w, d) == oracle::initial_slice(inst->ideal, w, d),
                 inst->name + " w=" + w.to_string() + " degree " + std::to_string(d));
      }
    }
  }
  o.note = "8 instances x 10 weights x degrees 1..4";
  return o;
}

// 9. Generic Pluecker under seeds 1..5 with sampled audits.
Outcome audit_batch(const Corpus& c) {
  Outcome o;
  int reseeds = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    try {
      const auto g = make_generic(c.pluck.ideal, seed, 100, 20);
      reseeds += g.reseeds;
      o.record(g.audit.passed() && g.audit.checks.size() == 20,
               "seed " + std::to_string(seed) + ": " + std::to_string(g.audit.failures().size()) + " failures");
    } catch (const std::exception& e) {
      o.record(false, "seed " + std::to_string(seed) + ": " + e.what());
    }
  }
  o.record(reseeds <= kMaxTotalReseeds, "total reseeds " + std::to_string(reseeds));
  o.note = "20 sampled subsets per seed, reseeds used: " + std::to_string(reseeds);
  return o;
}

// 10. Quasivaluation axioms on seeded pairs, and ord_A = v_{eps_A} on standard monomials.
Outcome axioms(const Corpus& c) {
  Outcome o;
  std::size_t objects = 0;
  for (const auto* inst : {&c.conic, &c.quad4_g, &c.pluck_g}) {
    const auto alg = make_algebra(inst->ideal);
    const auto n = inst->ideal.num_vars();
    const auto cones = enumerate_generic_fan(n, inst->d, 0);
    const auto& cone = cones.front();
    const auto u = sample_interior(cone, derive_seed(kSeed, 400));
    const auto w = sample_interior(cone, derive_seed(kSeed, 401));
    const std::vector<Quasivaluation> zoo = {
        Quasivaluation::degree(alg),
        Quasivaluation::weight(alg, u),
        Quasivaluation::weight(alg, epsilon_vector(cones.back().A(), n)),
        Quasivaluation::adic(alg, cone.A()),
        Quasivaluation::adic(alg, IndexSet{0}),
        scale(mpq_class(3, 2), Quasivaluation::weight(alg, w)),
        oplus_in_cone({Quasivaluation::weight(alg, u), Quasivaluation::weight(alg, w)}),
    };
    Rng rng(kSeed);
    for (const auto& v : zoo) {
      ++objects;
      bool ok = true;
      std::string bad;
      for (std::size_t k = 0; k < kPairs && ok; ++k) {
        const auto f = random_form(alg->ring(), rng.uniform(1, 2), rng);
        const auto g = random_form(alg->ring(), rng.uniform(1, 2), rng);
        const auto vf = evaluate(v, f);
        const auto vg = evaluate(v, g);
        ok = evaluate(v, f * g) >= vf + vg && evaluate(v, f + g) >= min(vf, vg);
        if (!ok) bad = " f=" + f.to_string() + " g=" + g.to_string();
      }
      o.record(ok, inst->name + " " + v.descriptor() + bad);
    }
  }
  for (const auto* inst : {&c.conic, &c.lin_g, &c.conic_g, &c.quad4_g, &c.pluck_g}) {
    const auto alg = make_algebra(inst->ideal);
    const auto n = inst->ideal.num_vars();
    for (const auto& cone : enumerate_generic_fan(n, inst->d, 0)) {
      const auto eps = epsilon_vector(cone.A(), n);
      const auto v = Quasivaluation::weight(alg, eps);
      const auto order = MonomialOrder::weighted(eps);
      bool ok = true;
      std::string bad;
      for (std::int64_t m = 0; m <= kMaxDeg && ok; ++m) {
        for (const auto& b : standard_basis_slice(*alg, order, m)) {
          const auto f = Polynomial::monomial(alg->ring(), b, alg->ring()->field().one());
          if (adic_order(cone.A(), f, *alg) != evaluate(v, f)) {
            ok = false;
            bad = " at " + f.to_string();
            break;
          }
        }
      }
      o.record(ok, inst->name + " ord_" + cone.to_string() + bad);
    }
  }
  o.note = std::to_string(objects) + " quasivaluations x 200 pairs, plus ord_A vs v_eps_A";
  return o;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const Corpus c = build_corpus();
  const std::vector<Criterion> criteria = {
      {1, "initial-ideal formula", kBudgetInitialFormula, [&] { return initial_formula(c); }},
      {2, "gr presentation", kBudgetGrPresentation, [&] { return gr_presentation(c); }},
      {3, "quasivaluation decomposition", kBudgetDecomposition, [&] { return decomposition(c); }},
      {4, "epsilon facts", kNoBudget, [&] { return epsilon_facts(c); }},
      {5, "iterated initials", kNoBudget, [&] { return iterated(c); }},
      {6, "sum additivity in a cone", kNoBudget, [&] { return weight_sums(c); }},
      {7, "codim-1 primeness", kNoBudget, [&] { return primeness(c); }},
      {8, "Macaulay oracle equivalence", kNoBudget, [&] { return oracle_slices(c); }},
      {9, "genericity audit batch", kNoBudget, [&] { return audit_batch(c); }},
      {10, "quasivaluation axioms", kNoBudget, [&] { return axioms(c); }},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o.record(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = cr.budget_seconds == kNoBudget || secs <= cr.budget_seconds;
    const bool pass = o.ok() && in_budget;
    failed += pass ? 0 : 1;
    char timing[64];
    if (cr.budget_seconds == kNoBudget) {
      std::snprintf(timing, sizeof timing, "%.2fs", secs);
    } else {
      std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, cr.budget_seconds);
    }
    std::cout << "AC-" << cr.id << (cr.id < 10 ? "  " : " ") << (pass ? "PASS" : "FAIL") << "  " << cr.title << ": "
              << o.passed << "/" << o.total << " exact";
    if (!o.note.empty()) std::cout << " (" << o.note << ")";
    std::cout << " [" << timing << "]";
    if (!o.first_failure.empty()) std::cout << " first failure: " << o.first_failure;
    if (!in_budget) std::cout << " over budget";
    std::cout << std::endl;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "acceptance: " << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed in " << std::fixed;
  std::cout.precision(2);
  std::cout << total << "s" << std::endl;
  return failed == 0 ? 0 : 1;
}
