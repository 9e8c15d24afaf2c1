#include <algorithm>
#include <stdexcept>

#include "tropcm/lab.hpp"
#include "tropcm/linalg.hpp"

namespace tropcm {

std::string to_string(PrimeVerdict v) {
  switch (v) {
    case PrimeVerdict::prime:
      return "Prime";
    case PrimeVerdict::not_prime:
      return "NotPrime";
    case PrimeVerdict::undetermined:
      return "Undetermined";
  }
  return "Undetermined";
}

nlohmann::json PrimenessResult::to_json() const {
  nlohmann::json j = {{"verdict", to_string(verdict)}};
  if (certificate) j["certificate"] = {{"method", certificate->method}, {"data", certificate->data}};
  if (!note.empty()) j["note"] = note;
  return j;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto order = MonomialOrder::grevlex();
  const Term lg = g.leading_term(order);
  Polynomial q(f.ring());
  Polynomial r = f;
  while (!r.is_zero()) {
    const Term& lr = r.leading_term(order);
    if (!lg.mono.divides(lr.mono)) return std::nullopt;
    const Monomial m = lg.mono.quotient_of(lr.mono);
    const Scalar c = lr.coeff / lg.coeff;
    q += Polynomial::monomial(f.ring(), m, c);
    r -= g.times_term(m, c);
  }
  return q;
}

Matrix quadric_matrix(const Polynomial& q) {
  const auto& field = q.field();
  if (field.characteristic() == 2) throw std::domain_error("quadric matrix in characteristic 2");
  if (!q.is_zero() && (!q.is_homogeneous() || q.degree() != 2)) throw std::invalid_argument("not a quadratic form");
  const std::size_t n = q.ring()->size();
  Matrix m(n, n, field);
  const Scalar half = field.one() / field.from_int(2);
  for (const auto& t : q.terms()) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::int32_t e = 0; e < t.mono[i]; ++e) vars.push_back(i);
    }
    if (vars[0] == vars[1]) {
      m.at(vars[0], vars[0]) = t.coeff;
    } else {
      m.at(vars[0], vars[1]) = t.coeff * half;
      m.at(vars[1], vars[0]) = t.coeff * half;
    }
  }
  return m;
}

namespace {

nlohmann::json strings(const std::vector<Polynomial>& ps) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& p : ps) j.push_back(p.to_string());
  return j;
}

nlohmann::json matrix_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

PrimenessResult make(PrimeVerdict v, std::string method, nlohmann::json data, std::string note = {}) {
  return PrimenessResult{v, PrimenessCertificate{std::move(method), std::move(data)}, std::move(note)};
}

// Linear factors with small coefficients, tested by exact division. Over F_p
// with p <= 7 the coefficient range is all of F_p, so the search is exhaustive.
std::optional<std::pair<Polynomial, Polynomial>> linear_factor_search(const Polynomial& f) {
  const auto& ring = f.ring();
  const auto& field = ring->field();
  const auto vars = f.support().indices();
  std::vector<std::int64_t> range;
  if (!field.is_rational() && field.characteristic() <= 7) {
    for (std::int64_t c = 0; c < field.characteristic(); ++c) range.push_back(c);
  } else {
    for (std::int64_t c = -3; c <= 3; ++c) range.push_back(c);
  }
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    std::vector<Term> terms;
    std::int64_t last = 0;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (range[idx[k]] == 0) continue;
      last = range[idx[k]];
      terms.push_back(Term{Monomial::variable(ring->size(), vars[k]), field.from_int(last)});
    }
    // one representative per line up to sign (Q) or up to scalars (F_p)
    const bool canonical = field.is_rational() || field.characteristic() > 7 ? last > 0 : last == 1;
    if (!terms.empty() && canonical) {
      const Polynomial l = Polynomial::from_terms(ring, std::move(terms));
      if (auto q = divide_exact(f, l)) return std::make_pair(l, *q);
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == range.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return std::nullopt;
}

}  // namespace

PrimenessResult primeness_check(const Ideal& ideal) {
  const auto gb = canonical_basis(ideal);
  if (gb.is_unit()) return make(PrimeVerdict::not_prime, "unit", {{"basis", {"1"}}}, "the unit ideal is not prime");

  // Degree-1 elements of a reduced grevlex basis have distinct leading
  // variables that occur nowhere else; eliminating them leaves an ideal in
  // the remaining variables with an isomorphic quotient.
  const auto n = ideal.num_vars();
  std::vector<Polynomial> linear;
  std::vector<Polynomial> rest;
  std::vector<std::size_t> lead_vars;
  for (std::size_t k = 0; k < gb.size(); ++k) {
    if (gb.basis()[k].degree() == 1) {
      linear.push_back(gb.basis()[k]);
      for (std::size_t i = 0; i < n; ++i) {
        if (gb.leading_monomials()[k][i] > 0) lead_vars.push_back(i);
      }
    } else {
      rest.push_back(gb.basis()[k]);
    }
  }
  const IndexSet keep = IndexSet(lead_vars).complement(n);
  const RingPtr sub = subring(*ideal.ring(), keep);
  std::vector<std::size_t> var_map(n, n);
  for (std::size_t k = 0; k < keep.size(); ++k) var_map[keep.indices()[k]] = k;
  std::vector<Polynomial> mapped;
  for (const auto& g : rest) mapped.push_back(g.mapped(sub, var_map));
  const Ideal reduced(sub, mapped);
  nlohmann::json base = {{"linear_part", strings(linear)}, {"remaining", strings(mapped)}};

  if (reduced.is_zero()) return make(PrimeVerdict::prime, "linear", base);

  const auto rgb = canonical_basis(reduced);
  const bool monomial = std::all_of(rgb.basis().begin(), rgb.basis().end(),
                                    [](const Polynomial& g) { return g.is_monomial(); });
  if (monomial) {
    // no variable lies in the ideal, so a minimal generator of degree >= 2 splits
    const Polynomial& g = rgb.basis().front();
    const auto i = g.support().indices().front();
    const Polynomial xi = Polynomial::variable(sub, i);
    base["witness"] = {{"product", g.to_string()}, {"factors", {xi.to_string(), divide_exact(g, xi)->to_string()}}};
    return make(PrimeVerdict::not_prime, "monomial", base);
  }

  for (const auto& g : rgb.basis()) {
    Monomial common = g.terms().front().mono;
    for (const auto& t : g.terms()) common = common.gcd(t.mono);
    if (common.is_one()) continue;
    std::size_t i = 0;
    while (common[i] == 0) ++i;
    const Polynomial xi = Polynomial::variable(sub, i);
    const Polynomial h = *divide_exact(g, xi);
    if (!rgb.contains(xi) && !rgb.contains(h)) {
      base["witness"] = {{"product", g.to_string()}, {"factors", {xi.to_string(), h.to_string()}}};
      return make(PrimeVerdict::not_prime, "monomial-factor", base);
    }
  }

  if (rgb.size() == 1) {
    const Polynomial& f = rgb.basis().front();
    const auto& field = sub->field();
    if (f.degree() == 2 && field.characteristic() != 2) {
      const Matrix m = quadric_matrix(f);
      const auto r = rank(m);
      base["quadric"] = f.to_string();
      base["matrix"] = matrix_json(m);
      base["rank"] = r;
      return make(r >= 3 ? PrimeVerdict::prime : PrimeVerdict::not_prime, "principal-quadric-rank", base);
    }
    if (f.degree() <= 3 && f.support().size() <= 4) {
      if (auto split = linear_factor_search(f)) {
        base["witness"] = {{"product", f.to_string()},
                           {"factors", {split->first.to_string(), split->second.to_string()}}};
        return make(PrimeVerdict::not_prime, "small-field-factor-search", base);
      }
      std::string note = "no linear factor found";
      if (f.degree() == 2) note += "; quadric rank unavailable in characteristic 2";
      return PrimenessResult{PrimeVerdict::undetermined, std::nullopt, note};
    }
  }
  return PrimenessResult{PrimeVerdict::undetermined, std::nullopt, "outside certificate scope"};
}

}  // namespace tropcm
