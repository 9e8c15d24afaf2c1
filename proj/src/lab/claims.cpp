#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

#include "tropcm/lab.hpp"
#include "tropcm/parallel.hpp"
#include "tropcm/quasival.hpp"
#include "tropcm/rng.hpp"

namespace tropcm {

namespace {

nlohmann::json gb_json(const Ideal& ideal) {
  nlohmann::json j = nlohmann::json::array();
  const auto gb = canonical_basis(ideal);
  for (const auto& g : gb.basis()) j.push_back(g.to_string());
  return j;
}

// First generator of one side that the other side misses.
nlohmann::json discrepancy(const Ideal& lhs, const Ideal& rhs) {
  const auto lgb = canonical_basis(lhs);
  const auto rgb = canonical_basis(rhs);
  for (const auto& g : lgb.basis()) {
    if (!rgb.contains(g)) return {{"element", g.to_string()}, {"in", "lhs"}, {"missing_from", "rhs"}};
  }
  for (const auto& g : rgb.basis()) {
    if (!lgb.contains(g)) return {{"element", g.to_string()}, {"in", "rhs"}, {"missing_from", "lhs"}};
  }
  return nullptr;
}

VerificationReport make_report(std::string claim, nlohmann::json params) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.params = std::move(params);
  return r;
}

VerificationReport not_met(VerificationReport r, const std::string& reason) {
  r.verdict = Verdict::hypothesis_not_met;
  r.evidence["reason"] = reason;
  return r;
}

std::int64_t dimension_of(const Ideal& ideal) {
  const auto hs = hilbert_series_quotient(ideal);
  return hs.is_zero() ? -1 : hs.dimension();
}

// |A| <= d - 1 and dim k[x]/(I + <x_A>) = d - |A|. Empty string when both hold.
std::string parameter_hypothesis(const Ideal& ideal, const IndexSet& a, std::int64_t d) {
  if (!a.empty() && a.max_index() >= ideal.num_vars()) return "A is not a subset of [n]";
  const auto k = static_cast<std::int64_t>(a.size());
  if (k > d - 1) return "|A| = " + std::to_string(k) + " exceeds d - 1 = " + std::to_string(d - 1);
  const auto actual = dimension_of(ideal.with_variables(a));
  if (actual != d - k) {
    return "dimension audit failed: dim(I + <x_A>) = " + std::to_string(actual) + ", expected " +
           std::to_string(d - k);
  }
  return {};
}

nlohmann::json weight_json(const WeightVector& w) { return w.to_string(); }

// A random homogeneous element of the given degree with a few terms.
Polynomial random_form(const RingPtr& ring, std::int64_t degree, Rng& rng) {
  const auto monos = monomials_of_degree(ring->size(), degree);
  const auto count = rng.uniform(1, std::min<std::int64_t>(4, static_cast<std::int64_t>(monos.size())));
  std::vector<Term> terms;
  for (std::int64_t k = 0; k < count; ++k) {
    const auto& m = monos[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(monos.size()) - 1))];
    std::int64_t c = 0;
    while (c == 0) c = rng.uniform(-9, 9);
    terms.push_back(Term{m, ring->field().from_int(c)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

VerificationReport verify_initial_formula(const Ideal& ideal, const IndexSet& a, const WeightVector& w) {
  auto r = make_report("cor-initial", {{"A", a.one_based()}, {"w", weight_json(w)}});
  const auto n = ideal.num_vars();
  if (w.size() != n) return not_met(r, "w has the wrong length");
  if (!a.empty() && a.max_index() >= n) return not_met(r, "A is not a subset of [n]");
  if (!cone_contains(ConeCA(a, n), w, true)) return not_met(r, "w is not in the relative interior of C_A");
  const auto d = krull_dimension(ideal);
  if (static_cast<std::int64_t>(a.size()) > d - 1) {
    return not_met(r, "|A^c| < n - d + 1, so C_A is not a cone of the generic fan");
  }
  const Ideal lhs = initial_ideal(w, ideal);
  const Ideal i_a = eliminate(ideal, a);
  const Ideal rhs = extend_to(i_a, ideal.ring());
  r.evidence["in_w_gb"] = gb_json(lhs);
  r.evidence["I_A"] = gb_json(i_a);
  r.evidence["I_A_ring"] = i_a.ring()->descriptor();
  if (ideals_equal(lhs, rhs)) {
    r.verdict = Verdict::pass;
  } else {
    r.verdict = Verdict::fail;
    r.evidence["witness"] = discrepancy(lhs, rhs);
  }
  return r;
}

VerificationReport verify_gr_presentation(const Ideal& ideal, const IndexSet& a) {
  auto r = make_report("thm-gr", {{"A", a.one_based()}});
  const auto d = krull_dimension(ideal);
  if (auto why = parameter_hypothesis(ideal, a, d); !why.empty()) return not_met(r, why);
  const auto n = ideal.num_vars();
  // left: initial degeneration at eps_A; right: the elimination ideal with |A| free variables
  const Ideal in_eps = initial_ideal(epsilon_vector(a, n), ideal);
  const HilbertSeries lhs = hilbert_series_quotient(in_eps);
  const Ideal i_a = eliminate(ideal, a);
  const HilbertSeries rhs = hilbert_series_quotient(i_a).times_free_variables(static_cast<std::int64_t>(a.size()));
  const bool series_equal = lhs == rhs;
  const Ideal extended = extend_to(i_a, ideal.ring());
  const bool gb_equal = ideals_equal(in_eps, extended);
  r.evidence["hilbert_lhs"] = lhs.to_string();
  r.evidence["hilbert_rhs"] = rhs.to_string();
  r.evidence["in_eps_gb"] = gb_json(in_eps);
  r.evidence["I_A"] = gb_json(i_a);
  r.evidence["hilbert_equal"] = series_equal;
  r.evidence["gb_equal"] = gb_equal;
  if (series_equal && gb_equal) {
    r.verdict = Verdict::pass;
  } else {
    r.verdict = Verdict::fail;
    if (!series_equal) {
      r.evidence["witness"] = {{"hilbert_mismatch", {lhs.to_string(), rhs.to_string()}}};
    } else {
      r.evidence["witness"] = discrepancy(in_eps, extended);
    }
  }
  return r;
}

VerificationReport verify_quasival_decomposition(const Ideal& ideal, const IndexSet& a, const WeightVector& w,
                                                 std::int64_t maxdeg, std::size_t samples, std::uint64_t seed) {
  auto r = make_report("thm-quasival", {{"A", a.one_based()}, {"w", weight_json(w)}, {"maxdeg", maxdeg},
                                        {"samples", samples}});
  const auto n = ideal.num_vars();
  if (w.size() != n) return not_met(r, "w has the wrong length");
  if (!a.empty() && a.max_index() >= n) return not_met(r, "A is not a subset of [n]");
  if (!cone_contains(ConeCA(a, n), w, false)) return not_met(r, "w is not in C_A");
  const auto d = krull_dimension(ideal);
  if (auto why = parameter_hypothesis(ideal, a, d); !why.empty()) return not_met(r, why);

  const AlgebraPtr algebra = make_algebra(ideal);
  const auto v_w = Quasivaluation::weight(algebra, w);
  const mpq_class m = w.min();
  const bool is_eps = w == epsilon_vector(a, n);
  const auto ord_a = Quasivaluation::adic(algebra, a);

  // right-hand side on a single monomial, from adic orders only
  std::map<Monomial, QValue> rhs_cache;
  auto rhs_of = [&](const Monomial& b) {
    auto it = rhs_cache.find(b);
    if (it != rhs_cache.end()) return it->second;
    const Polynomial pb = Polynomial::monomial(ideal.ring(), b, ideal.ring()->field().one());
    QValue total(mpq_class(m * b.degree()));
    for (auto i : a) {
      const mpq_class gap = w[i] - m;
      if (gap == 0) continue;
      total = total + adic_order(IndexSet{i}, pb, *algebra).scaled(gap);
    }
    rhs_cache.emplace(b, total);
    return total;
  };

  std::size_t basis_checked = 0;
  nlohmann::json witness = nullptr;
  const auto order = MonomialOrder::weighted(w);
  for (std::int64_t deg = 0; deg <= maxdeg && witness.is_null(); ++deg) {
    for (const auto& b : standard_basis_slice(*algebra, order, deg)) {
      const Polynomial pb = Polynomial::monomial(ideal.ring(), b, ideal.ring()->field().one());
      const QValue lhs = evaluate(v_w, pb);
      const QValue rhs = rhs_of(b);
      ++basis_checked;
      if (lhs != rhs) {
        witness = {{"element", pb.to_string()}, {"v_w", lhs.to_string()}, {"decomposition", rhs.to_string()}};
        break;
      }
      if (is_eps) {
        const QValue ord = evaluate(ord_a, pb);
        if (ord != lhs) {
          witness = {{"element", pb.to_string()}, {"v_eps", lhs.to_string()}, {"ord_A", ord.to_string()}};
          break;
        }
      }
    }
  }

  std::size_t samples_checked = 0;
  const auto gb = algebra->basis(order);
  Rng rng(seed);
  for (std::size_t s = 0; s < samples && witness.is_null() && maxdeg >= 1; ++s) {
    const Polynomial f = random_form(ideal.ring(), rng.uniform(1, maxdeg), rng);
    const QValue lhs = evaluate(v_w, f);
    QValue rhs = QValue::infinity();
    const Polynomial nf = gb.normal_form(f);
    for (const auto& t : nf.terms()) rhs = min(rhs, rhs_of(t.mono));
    ++samples_checked;
    if (lhs != rhs) {
      witness = {{"element", f.to_string()}, {"v_w", lhs.to_string()}, {"decomposition", rhs.to_string()}};
    }
  }

  r.evidence["basis_elements_checked"] = basis_checked;
  r.evidence["random_elements_checked"] = samples_checked;
  r.evidence["cross_checked_with_ord_A"] = is_eps;
  if (witness.is_null()) {
    r.verdict = Verdict::pass;
  } else {
    r.verdict = Verdict::fail;
    r.evidence["witness"] = witness;
  }
  return r;
}

VerificationReport verify_iterated_initial(const Ideal& ideal, const IndexSet& a, std::size_t i) {
  auto r = make_report("lem-iterated", {{"A", a.one_based()}, {"i", i + 1}});
  if (!a.contains(i)) return not_met(r, "i is not in A");
  const auto d = krull_dimension(ideal);
  if (static_cast<std::int64_t>(a.size()) > d - 1) return not_met(r, "|A| exceeds d - 1");
  const auto n = ideal.num_vars();
  const Ideal lhs = initial_ideal(epsilon_vector(a.without(i), n), initial_ideal(epsilon_vector(IndexSet{i}, n), ideal));
  const Ideal rhs = initial_ideal(epsilon_vector(a, n), ideal);
  r.evidence["lhs_gb"] = gb_json(lhs);
  r.evidence["rhs_gb"] = gb_json(rhs);
  if (a.size() == 1) r.evidence["note"] = "degenerate: A = {i}, both sides are in_{eps_i}(I)";
  if (ideals_equal(lhs, rhs)) {
    r.verdict = Verdict::pass;
  } else {
    r.verdict = Verdict::fail;
    r.evidence["witness"] = discrepancy(lhs, rhs);
  }
  return r;
}

VerificationReport verify_weight_sum(const Ideal& ideal, const WeightVector& u, const WeightVector& w,
                                     std::int64_t maxdeg) {
  auto r = make_report("prop-oplus", {{"u", weight_json(u)}, {"w", weight_json(w)}, {"maxdeg", maxdeg}});
  const auto n = ideal.num_vars();
  if (u.size() != n || w.size() != n) return not_met(r, "weight vector has the wrong length");
  const AlgebraPtr algebra = make_algebra(ideal);
  const auto v_u = Quasivaluation::weight(algebra, u);
  const auto v_w = Quasivaluation::weight(algebra, w);
  std::optional<Quasivaluation> sum;
  try {
    sum = oplus_in_cone({v_u, v_w});
  } catch (const ConeMismatchError& e) {
    return not_met(r, e.what());
  }
  const WeightVector uw = u + w;
  const auto v_uw = Quasivaluation::weight(algebra, uw);
  const auto order = MonomialOrder::weighted(uw);
  std::size_t checked = 0;
  nlohmann::json witness = nullptr;
  for (std::int64_t deg = 0; deg <= maxdeg && witness.is_null(); ++deg) {
    for (const auto& b : standard_basis_slice(*algebra, order, deg)) {
      const Polynomial pb = Polynomial::monomial(ideal.ring(), b, ideal.ring()->field().one());
      const QValue pointwise = evaluate(v_u, pb) + evaluate(v_w, pb);
      const QValue direct = evaluate(v_uw, pb);
      const QValue via_oplus = evaluate(*sum, pb);
      ++checked;
      if (pointwise != direct || via_oplus != direct) {
        witness = {{"element", pb.to_string()},
                   {"v_u + v_w", pointwise.to_string()},
                   {"v_(u+w)", direct.to_string()},
                   {"oplus", via_oplus.to_string()}};
        break;
      }
    }
  }
  r.evidence["basis_elements_checked"] = checked;
  r.evidence["order"] = order.descriptor();
  if (witness.is_null()) {
    r.verdict = Verdict::pass;
  } else {
    r.verdict = Verdict::fail;
    r.evidence["witness"] = witness;
  }
  return r;
}

VerificationReport verify_epsilon_facts(const Ideal& ideal, const IndexSet& a) {
  auto r = make_report("eps-facts", {{"A", a.one_based()}});
  const auto d = krull_dimension(ideal);
  if (auto why = parameter_hypothesis(ideal, a, d); !why.empty()) return not_met(r, why);
  const auto n = ideal.num_vars();
  const WeightVector eps = epsilon_vector(a, n);
  const bool member = trop_membership(eps, ideal);
  const auto v = Quasivaluation::weight(make_algebra(ideal), eps);
  nlohmann::json values = nlohmann::json::array();
  nlohmann::json witness = nullptr;
  for (std::size_t i = 0; i < n; ++i) {
    const QValue val = evaluate(v, Polynomial::variable(ideal.ring(), i));
    values.push_back(val.to_string());
    if (witness.is_null() && val != QValue(eps[i])) {
      witness = {{"variable", ideal.ring()->name(i)}, {"value", val.to_string()}, {"expected", eps[i].get_str()}};
    }
  }
  r.evidence["trop_member"] = member;
  r.evidence["variable_values"] = values;
  if (!member) {
    r.verdict = Verdict::fail;
    const auto mono = contains_monomial(initial_ideal(eps, ideal));
    r.evidence["witness"] = {{"monomial_in_initial_ideal", mono ? mono->to_string(*ideal.ring()) : "?"}};
  } else if (!witness.is_null()) {
    r.verdict = Verdict::fail;
    r.evidence["witness"] = witness;
  } else {
    r.verdict = Verdict::pass;
  }
  return r;
}

VerificationReport radicality_spot_check(const Ideal& ideal, std::size_t samples, unsigned powmax,
                                         std::uint64_t seed) {
  auto r = make_report("radical", {{"samples", samples}, {"powmax", powmax}});
  const auto prime = primeness_check(ideal);
  if (prime.verdict == PrimeVerdict::prime) {
    r.verdict = Verdict::pass;
    r.evidence["basis"] = "prime certificate";
    r.evidence["certificate"] = prime.to_json();
    return r;
  }
  const auto& ring = ideal.ring();
  const auto gb = canonical_basis(ideal);
  std::vector<Polynomial> candidates;
  for (std::size_t i = 0; i < ring->size(); ++i) candidates.push_back(Polynomial::variable(ring, i));
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) candidates.push_back(random_form(ring, rng.uniform(1, 2), rng));

  std::size_t tested = 0;
  for (const auto& f : candidates) {
    if (gb.contains(f)) continue;
    ++tested;
    for (unsigned e = 2; e <= powmax; ++e) {
      if (gb.contains(f.pow(e))) {
        r.verdict = Verdict::fail;
        r.evidence["witness"] = {{"element", f.to_string()}, {"power", e}};
        r.evidence["elements_tested"] = tested;
        return r;
      }
    }
    if (radical_membership(f, ideal)) {
      r.verdict = Verdict::fail;
      r.evidence["witness"] = {{"element", f.to_string()}, {"in_radical", true}};
      r.evidence["elements_tested"] = tested;
      return r;
    }
  }
  r.verdict = Verdict::pass;
  r.evidence["basis"] = "sampling evidence, not a proof";
  r.evidence["elements_tested"] = tested;
  return r;
}

VerificationReport well_poised_check(const Ideal& ideal, std::int64_t d, std::size_t samples_per_cone,
                                     std::uint64_t seed) {
  auto r = make_report("prime-codim1", {{"d", d}, {"samples_per_cone", samples_per_cone}});
  const auto n = ideal.num_vars();
  if (d < 1 || d > static_cast<std::int64_t>(n)) return not_met(r, "d outside [1, n]");
  const auto gb = canonical_basis(ideal);
  const bool linear = std::all_of(gb.basis().begin(), gb.basis().end(),
                                  [](const Polynomial& g) { return g.degree() == 1; });
  std::size_t undetermined = 0;
  std::size_t not_prime = 0;
  bool codim1_all_prime = true;
  nlohmann::json strata = nlohmann::json::array();
  nlohmann::json first_not_prime = nullptr;
  std::uint64_t stream = 0;
  for (std::size_t codim = 0; codim < static_cast<std::size_t>(d); ++codim) {
    std::map<std::string, std::size_t> counts{{"Prime", 0}, {"NotPrime", 0}, {"Undetermined", 0}};
    const auto cones = enumerate_generic_fan(n, static_cast<std::size_t>(d), codim);
    for (const auto& cone : cones) {
      // C_emptyset is a line: one sample is all there is up to translation
      const std::size_t k_max = cone.A().empty() ? 1 : samples_per_cone;
      for (std::size_t k = 0; k < k_max; ++k) {
        const WeightVector w = sample_interior(cone, derive_seed(seed, stream++));
        const auto res = primeness_check(initial_ideal(w, ideal));
        ++counts[to_string(res.verdict)];
        if (res.verdict == PrimeVerdict::undetermined) ++undetermined;
        if (res.verdict != PrimeVerdict::prime && codim == 1) codim1_all_prime = false;
        if (res.verdict == PrimeVerdict::not_prime) {
          ++not_prime;
          if (first_not_prime.is_null()) {
            first_not_prime = {{"A", cone.A().one_based()}, {"w", w.to_string()}, {"result", res.to_json()}};
          }
        }
      }
    }
    strata.push_back({{"codim", codim}, {"cones", cones.size()}, {"verdicts", counts}});
  }
  r.evidence["strata"] = strata;
  r.evidence["ideal_is_linear"] = linear;
  if (d >= 2) r.evidence["codim1_all_prime"] = codim1_all_prime;
  if (d == 1) r.evidence["note"] = "d = 1: only the codimension-0 stratum exists";
  if (!first_not_prime.is_null()) r.evidence["first_not_prime"] = first_not_prime;

  if (undetermined > 0) {
    r.verdict = Verdict::undetermined;
    r.evidence["conclusion"] = "inconclusive";
    return r;
  }
  const bool well_poised = not_prime == 0;
  r.evidence["conclusion"] = well_poised ? "well-poised" : "not well-poised";
  if (well_poised != linear) {
    r.verdict = Verdict::fail;
    r.evidence["witness"] = well_poised ? nlohmann::json{{"nonlinear_generator", gb.basis().back().to_string()}}
                                        : first_not_prime;
  } else {
    r.verdict = Verdict::pass;
  }
  return r;
}

VerificationReport cm_fan_audit(const Ideal& ideal, std::size_t samples_per_cone, std::uint64_t seed) {
  auto r = make_report("cm-fan", {{"samples_per_cone", samples_per_cone}});
  const auto d = krull_dimension(ideal);
  const auto n = ideal.num_vars();
  const auto cones = enumerate_generic_fan(n, static_cast<std::size_t>(d), 0);
  for (const auto& cone : cones) {
    if (auto why = parameter_hypothesis(ideal, cone.A(), d); !why.empty()) {
      r.params["A"] = cone.A().one_based();
      return not_met(r, why);
    }
  }
  std::uint64_t stream = 0;
  std::size_t constant = 0;
  for (const auto& cone : cones) {
    const WeightVector w0 = sample_interior(cone, derive_seed(seed, stream++));
    const Ideal first = initial_ideal(w0, ideal);
    for (std::size_t k = 1; k < samples_per_cone; ++k) {
      const WeightVector wk = sample_interior(cone, derive_seed(seed, stream++));
      const Ideal other = initial_ideal(wk, ideal);
      if (!ideals_equal(first, other)) {
        r.verdict = Verdict::fail;
        r.evidence["witness"] = {{"A", cone.A().one_based()},
                                 {"w1", w0.to_string()},
                                 {"w2", wk.to_string()},
                                 {"in_w1_gb", gb_json(first)},
                                 {"in_w2_gb", gb_json(other)}};
        r.evidence["cones_checked"] = constant + 1;
        return r;
      }
    }
    ++constant;
  }
  r.verdict = Verdict::pass;
  r.evidence["cones_checked"] = constant;
  if (samples_per_cone <= 1) r.evidence["note"] = "insufficient sampling: one point per cone is vacuous";
  return r;
}

const std::vector<std::string>& claim_keys() {
  static const std::vector<std::string> keys = {"cm-fan",      "cor-initial",  "eps-facts",   "lem-iterated",
                                                "prime-codim1", "prop-oplus", "radical",     "thm-gr",
                                                "thm-quasival"};
  return keys;
}

namespace {

// Subsets with 1 <= |A| <= k_max; a seeded sample of `cap` when there are more.
std::vector<IndexSet> subsets_up_to(std::size_t n, std::size_t k_max, std::size_t cap, std::uint64_t seed) {
  std::vector<IndexSet> pool;
  for (std::size_t k = 1; k <= std::min(k_max, n); ++k) {
    for (auto& a : subsets_of_size(n, k)) pool.push_back(std::move(a));
  }
  if (pool.size() <= cap) return pool;
  Rng rng(seed);
  for (std::size_t i = 0; i < cap; ++i) {
    const auto j = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(i), static_cast<std::int64_t>(pool.size()) - 1));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(cap);
  return pool;
}

constexpr std::size_t kSubsetCap = 10;

}  // namespace

std::vector<VerificationReport> run_claims(const Ideal& ideal, const std::string& claim, const SuiteConfig& cfg) {
  const auto& keys = claim_keys();
  if (claim != "all" && std::find(keys.begin(), keys.end(), claim) == keys.end()) {
    throw std::invalid_argument("unknown claim '" + claim + "'");
  }
  auto wanted = [&](const std::string& k) { return claim == "all" || claim == k; };
  const auto n = ideal.num_vars();
  const auto d = krull_dimension(ideal);
  const std::size_t top = d >= 1 ? static_cast<std::size_t>(d - 1) : 0;
  std::vector<std::function<VerificationReport()>> tasks;

  if (wanted("cor-initial")) {
    if (cfg.a && cfg.w) {
      tasks.emplace_back([&] { return verify_initial_formula(ideal, *cfg.a, *cfg.w); });
    } else {
      std::uint64_t stream = 0;
      for (std::size_t codim = 0; codim <= std::min<std::size_t>(1, top); ++codim) {
        for (const auto& cone : enumerate_generic_fan(n, static_cast<std::size_t>(d), codim)) {
          for (std::size_t k = 0; k < cfg.samples_per_cone; ++k) {
            const WeightVector w = sample_interior(cone, derive_seed(cfg.seed, stream++));
            tasks.emplace_back([&ideal, cone, w] { return verify_initial_formula(ideal, cone.A(), w); });
          }
        }
      }
    }
  }
  if (wanted("thm-gr")) {
    const auto subsets = cfg.a ? std::vector<IndexSet>{*cfg.a} : subsets_up_to(n, top, kSubsetCap, cfg.seed);
    for (const auto& a : subsets) tasks.emplace_back([&ideal, a] { return verify_gr_presentation(ideal, a); });
  }
  if (wanted("thm-quasival")) {
    if (cfg.a && cfg.w) {
      tasks.emplace_back([&] {
        return verify_quasival_decomposition(ideal, *cfg.a, *cfg.w, cfg.maxdeg, cfg.samples, cfg.seed);
      });
    } else {
      std::uint64_t stream = 0;
      for (const auto& cone : enumerate_generic_fan(n, static_cast<std::size_t>(d), 0)) {
        const WeightVector sampled = sample_interior(cone, derive_seed(cfg.seed ^ 0x51, stream++));
        for (const auto& w : {sampled, epsilon_vector(cone.A(), n)}) {
          tasks.emplace_back([&ideal, &cfg, cone, w] {
            return verify_quasival_decomposition(ideal, cone.A(), w, cfg.maxdeg, cfg.samples, cfg.seed);
          });
        }
      }
    }
  }
  if (wanted("eps-facts")) {
    const auto subsets = cfg.a ? std::vector<IndexSet>{*cfg.a} : subsets_up_to(n, top, kSubsetCap, cfg.seed ^ 0xe5);
    for (const auto& a : subsets) tasks.emplace_back([&ideal, a] { return verify_epsilon_facts(ideal, a); });
  }
  if (wanted("lem-iterated")) {
    std::vector<std::pair<IndexSet, std::size_t>> pairs;
    if (cfg.a && cfg.i) {
      pairs.emplace_back(*cfg.a, *cfg.i);
    } else {
      for (const auto& a : subsets_up_to(n, std::min<std::size_t>(top, 3), SIZE_MAX, 0)) {
        if (a.size() >= 2 || top == 1) {
          for (auto i : a) pairs.emplace_back(a, i);
        }
      }
      if (pairs.size() > kSubsetCap) {
        Rng rng(cfg.seed ^ 0x17);
        for (std::size_t k = 0; k < kSubsetCap; ++k) {
          std::swap(pairs[k], pairs[static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(k),
                                                                          static_cast<std::int64_t>(pairs.size()) - 1))]);
        }
        pairs.resize(kSubsetCap);
      }
    }
    for (const auto& [a, i] : pairs) {
      tasks.emplace_back([&ideal, a = a, i = i] { return verify_iterated_initial(ideal, a, i); });
    }
  }
  if (wanted("prop-oplus")) {
    if (cfg.u && cfg.w) {
      tasks.emplace_back([&] { return verify_weight_sum(ideal, *cfg.u, *cfg.w, cfg.maxdeg); });
    } else {
      std::uint64_t stream = 0;
      auto cones = enumerate_generic_fan(n, static_cast<std::size_t>(d), 0);
      if (cones.size() > kSubsetCap) cones.erase(cones.begin() + kSubsetCap, cones.end());
      for (const auto& cone : cones) {
        const WeightVector u = sample_interior(cone, derive_seed(cfg.seed ^ 0x0b, stream++));
        const WeightVector w = sample_interior(cone, derive_seed(cfg.seed ^ 0x0b, stream++));
        tasks.emplace_back([&ideal, &cfg, u, w] { return verify_weight_sum(ideal, u, w, cfg.maxdeg); });
      }
    }
  }
  if (wanted("prime-codim1")) {
    tasks.emplace_back([&] { return well_poised_check(ideal, d, cfg.samples_per_cone, cfg.seed); });
  }
  if (wanted("radical")) {
    tasks.emplace_back([&] { return radicality_spot_check(ideal, cfg.samples, cfg.powmax, cfg.seed); });
  }
  if (wanted("cm-fan")) {
    tasks.emplace_back([&] { return cm_fan_audit(ideal, cfg.samples_per_cone, cfg.seed); });
  }

  std::vector<VerificationReport> reports(tasks.size());
  parallel_for(tasks.size(), cfg.jobs, [&](std::size_t k) { reports[k] = tasks[k](); });
  std::stable_sort(reports.begin(), reports.end(), [](const VerificationReport& x, const VerificationReport& y) {
    if (x.claim != y.claim) return x.claim < y.claim;
    return x.params.dump() < y.params.dump();
  });
  return reports;
}

}  // namespace tropcm
