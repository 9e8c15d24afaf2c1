#include <algorithm>
#include <stdexcept>

#include "engine.hpp"
#include "tropcm/groebner.hpp"

namespace tropcm::detail {

Terms sorted_terms(const Polynomial& p, const MonomialOrder& order) {
  Terms t = p.terms();
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return t;
}

namespace {

// f[start..] - c * m * g, all sorted under order.
Terms sub_mul(const Terms& f, std::size_t start, const Scalar& c, const Monomial& m, const Terms& g,
              const MonomialOrder& order) {
  Terms out;
  out.reserve(f.size() - start + g.size());
  std::size_t i = start;
  std::size_t j = 0;
  Monomial gm;
  bool have_gm = false;
  while (i < f.size() || j < g.size()) {
    if (j < g.size() && !have_gm) {
      gm = g[j].mono * m;
      have_gm = true;
    }
    if (j >= g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    if (i >= f.size()) {
      out.push_back(Term{gm, -(c * g[j].coeff)});
      ++j;
      have_gm = false;
      continue;
    }
    const auto cmp = order.compare(f[i].mono, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{gm, -(c * g[j].coeff)});
      ++j;
      have_gm = false;
    } else {
      Scalar s = f[i].coeff - c * g[j].coeff;
      if (!s.is_zero()) out.push_back(Term{gm, std::move(s)});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  return out;
}

void make_monic(Terms& t) {
  if (t.empty() || t.front().coeff.is_one()) return;
  const Scalar inv = t.front().coeff.inverse();
  for (auto& term : t) term.coeff *= inv;
}

}  // namespace

Terms reduce_terms(Terms f, const std::vector<Terms>& basis, const MonomialOrder& order, bool tail) {
  Terms rem;
  std::size_t start = 0;
  while (start < f.size()) {
    const Term& lt = f[start];
    const Terms* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.empty() && g.front().mono.divides(lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor != nullptr) {
      const Monomial q = divisor->front().mono.quotient_of(lt.mono);
      const Scalar c = lt.coeff / divisor->front().coeff;
      f = sub_mul(f, start, c, q, *divisor, order);
      start = 0;
    } else {
      if (!tail) {
        rem.insert(rem.end(), f.begin() + static_cast<std::ptrdiff_t>(start), f.end());
        return rem;
      }
      rem.push_back(lt);
      ++start;
    }
  }
  return rem;
}

Polynomial reduce_sorted(const Polynomial& f, const std::vector<Terms>& basis, const MonomialOrder& order) {
  if (f.is_zero()) return f;
  if (!order.is_well_order() && !f.is_homogeneous()) {
    Polynomial acc(f.ring());
    for (const auto& comp : f.homogeneous_components()) acc += reduce_sorted(comp, basis, order);
    return acc;
  }
  return Polynomial::from_terms(f.ring(), reduce_terms(sorted_terms(f, order), basis, order, true));
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  std::vector<Terms> sorted;
  for (const auto& g : basis) sorted.push_back(sorted_terms(g, order));
  for (auto& g : sorted) make_monic(g);
  return reduce_sorted(f, sorted, order);
}

std::vector<Polynomial> reduced_groebner(const std::vector<Polynomial>& gens, const RingPtr& ring,
                                         const MonomialOrder& order) {
  bool homogeneous = true;
  std::vector<Polynomial> input;
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw std::invalid_argument("generator from a different ring");
    if (g.is_zero()) continue;
    homogeneous = homogeneous && g.is_homogeneous();
    input.push_back(g);
  }
  if (!homogeneous && !order.is_well_order()) {
    throw std::invalid_argument("inhomogeneous Groebner basis requested for a non-well-order (" +
                                order.descriptor() + ")");
  }
  std::stable_sort(input.begin(), input.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });

  std::vector<Terms> basis;
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  bool unit = false;

  auto add = [&](Terms h) {
    make_monic(h);
    const Monomial& lm = h.front().mono;
    if (lm.is_one()) unit = true;
    for (std::size_t i = 0; i < basis.size(); ++i) pairs.push_back(Pair{i, basis.size(), basis[i].front().mono.lcm(lm)});
    basis.push_back(std::move(h));
  };

  for (const auto& g : input) {
    Terms r = reduce_terms(sorted_terms(g, order), basis, order, false);
    if (!r.empty()) add(std::move(r));
    if (unit) break;
  }

  while (!pairs.empty() && !unit) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      if (pairs[k].lcm.degree() < pairs[best].lcm.degree()) best = k;
    }
    const Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    const Terms& gi = basis[p.i];
    const Terms& gj = basis[p.j];
    if (gi.front().mono.coprime(gj.front().mono)) continue;
    const Monomial mi = gi.front().mono.quotient_of(p.lcm);
    const Monomial mj = gj.front().mono.quotient_of(p.lcm);
    Terms s;
    for (const auto& t : gi) s.push_back(Term{t.mono * mi, t.coeff});
    s = sub_mul(s, 0, ring->field().one(), mj, gj, order);
    Terms r = reduce_terms(std::move(s), basis, order, false);
    if (!r.empty()) add(std::move(r));
  }

  if (unit) return {Polynomial::constant(ring, ring->field().one())};

  // minimalize
  std::vector<Terms> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis[i].front().mono;
      const auto& lj = basis[j].front().mono;
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // interreduce tails
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Terms> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    minimal[i] = reduce_terms(std::move(minimal[i]), others, order, true);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Terms& a, const Terms& b) { return order.compare(a.front().mono, b.front().mono) > 0; });

  std::vector<Polynomial> out;
  for (auto& t : minimal) out.push_back(Polynomial::from_terms(ring, std::move(t)));
  return out;
}

}  // namespace tropcm::detail
