#include <doctest.h>

#include "corpus.hpp"
#include "tropcm/fan.hpp"
#include "tropcm/quasival.hpp"
#include "tropcm/rng.hpp"

using namespace tropcm;

namespace {

Polynomial P(const std::string& text, const RingPtr& ring) { return parse_polynomial(text, ring); }

Polynomial random_form(const RingPtr& ring, std::int64_t degree, Rng& rng) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(ring->size(), degree)) {
    if (rng.uniform(0, 2) == 0) terms.push_back({m, ring->field().from_int(rng.uniform(-3, 3))});
  }
  auto p = Polynomial::from_terms(ring, std::move(terms));
  if (p.is_zero()) p = Polynomial::variable(ring, 0).pow(static_cast<unsigned>(degree));
  return p;
}

// Quasivaluations built on an instance: weights from fan cones, adic orders, degree, scalings, sums.
std::vector<Quasivaluation> zoo(const Ideal& ideal, std::int64_t d) {
  const auto alg = make_algebra(ideal);
  const auto n = ideal.num_vars();
  std::vector<Quasivaluation> out = {Quasivaluation::degree(alg)};
  const auto cones = enumerate_generic_fan(n, d, 0);
  const auto& cone = cones.front();
  const auto u = sample_interior(cone, 1);
  const auto w = sample_interior(cone, 2);
  out.push_back(Quasivaluation::weight(alg, u));
  out.push_back(Quasivaluation::weight(alg, epsilon_vector(cones.back().A(), n)));
  out.push_back(Quasivaluation::adic(alg, cone.A()));
  out.push_back(Quasivaluation::adic(alg, IndexSet{0}));
  out.push_back(scale(mpq_class(3, 2), Quasivaluation::weight(alg, w)));
  out.push_back(oplus_in_cone({Quasivaluation::weight(alg, u), Quasivaluation::weight(alg, w)}));
  return out;
}

}  // namespace

TEST_SUITE("values") {
  TEST_CASE("infinity ordering and arithmetic") {
    const auto inf = QValue::infinity();
    CHECK(QValue(5) < inf);
    CHECK(inf + QValue(3) == inf);
    CHECK(inf.scaled(0) == inf);
    CHECK(min(QValue(2), inf) == QValue(2));
    CHECK(QValue(mpq_class(1, 2)).to_string() == "1/2");
    CHECK(inf.to_string() == "inf");
  }
}

TEST_SUITE("evaluate") {
  TEST_CASE("examples") {
    const auto alg = make_algebra(corpus::conic());
    const auto& r = alg->ring();
    const auto v = Quasivaluation::weight(alg, WeightVector{1, 0, 0});
    CHECK(evaluate(v, P("x2^2", r)) == QValue(1));
    CHECK(evaluate(v, P("x1*x3 - x2^2", r)).is_infinite());
    CHECK(evaluate(v, P("(x1*x3 - x2^2)*(x1 + 7*x3)", r)).is_infinite());
    CHECK(evaluate(v, Polynomial(r)).is_infinite());
  }

  TEST_CASE("constant weight is the degree") {
    for (const auto& inst : corpus::generic_all()) {
      const auto alg = make_algebra(inst.ideal);
      const auto ones = Quasivaluation::weight(alg, WeightVector::constant(inst.ideal.num_vars(), 1));
      const auto deg = Quasivaluation::degree(alg);
      Rng rng(3);
      for (int k = 0; k < 20; ++k) {
        const auto f = random_form(alg->ring(), rng.uniform(1, 3), rng);
        const auto expect = alg->is_zero_element(f) ? QValue::infinity() : QValue(f.degree());
        CHECK(evaluate(ones, f) == expect);
        CHECK(evaluate(deg, f) == expect);
      }
    }
  }

  TEST_CASE("inhomogeneous input takes the minimum over components") {
    const auto alg = make_algebra(corpus::generic(corpus::quad4()));
    const auto v = Quasivaluation::weight(alg, WeightVector{0, 0, 1, 2});
    Rng rng(8);
    for (int k = 0; k < 20; ++k) {
      const auto f = random_form(alg->ring(), 1, rng);
      const auto g = random_form(alg->ring(), 2, rng);
      const auto h = random_form(alg->ring(), 3, rng);
      CHECK(evaluate(v, f + g + h) == min(evaluate(v, f), min(evaluate(v, g), evaluate(v, h))));
    }
  }

  TEST_CASE("variables on the tropical variety") {
    for (const auto& inst : corpus::generic_all()) {
      const auto alg = make_algebra(inst.ideal);
      const auto n = inst.ideal.num_vars();
      for (const auto& cone : enumerate_generic_fan(n, inst.d, 0)) {
        const auto w = sample_interior(cone, 5);
        REQUIRE(trop_membership(w, inst.ideal));
        const auto v = Quasivaluation::weight(alg, w);
        for (std::size_t i = 0; i < n; ++i) CHECK(evaluate(v, Polynomial::variable(alg->ring(), i)) == QValue(w[i]));
      }
    }
  }
}

TEST_SUITE("adic") {
  TEST_CASE("examples") {
    const auto alg = make_algebra(corpus::conic());
    const auto& r = alg->ring();
    CHECK(adic_order(IndexSet{0}, P("x2", r), *alg) == QValue(0));
    CHECK(adic_order(IndexSet{0}, P("x2^2", r), *alg) == QValue(1));
    CHECK(adic_order(IndexSet{0}, P("x1^2*x3", r), *alg) == QValue(2));
    CHECK(adic_order(IndexSet{0}, P("x1*x3 - x2^2", r), *alg).is_infinite());
  }

  TEST_CASE("regular sequence variables") {
    for (const auto& inst : corpus::generic_all()) {
      const auto alg = make_algebra(inst.ideal);
      const auto n = inst.ideal.num_vars();
      for (const auto& cone : enumerate_generic_fan(n, inst.d, 0)) {
        for (std::size_t i = 0; i < n; ++i) {
          const auto expect = cone.A().contains(i) ? 1 : 0;
          CHECK(adic_order(cone.A(), Polynomial::variable(alg->ring(), i), *alg) == QValue(expect));
        }
      }
    }
  }

  TEST_CASE("agrees with the epsilon weight on standard monomials") {
    for (const auto& inst : {corpus::Named{"E-conic", corpus::conic(), 2},
                             corpus::Named{"E-quad4-generic", corpus::generic(corpus::quad4()), 3}}) {
      const auto alg = make_algebra(inst.ideal);
      const auto n = inst.ideal.num_vars();
      for (const auto& cone : enumerate_generic_fan(n, inst.d, 0)) {
        const auto eps = epsilon_vector(cone.A(), n);
        const auto v = Quasivaluation::weight(alg, eps);
        const auto order = MonomialOrder::weighted(eps);
        for (std::int64_t m = 0; m <= 4; ++m) {
          for (const auto& b : standard_basis_slice(*alg, order, m)) {
            const auto f = Polynomial::monomial(alg->ring(), b, alg->ring()->field().one());
            CHECK(adic_order(cone.A(), f, *alg) == evaluate(v, f));
          }
        }
      }
    }
  }
}

TEST_SUITE("calculus") {
  TEST_CASE("scaling") {
    const auto alg = make_algebra(corpus::conic());
    const auto& r = alg->ring();
    const auto v = Quasivaluation::weight(alg, WeightVector{2, 1, 1});
    const auto f = P("x2^2 + x1*x2", r);
    CHECK(evaluate(scale(0, v), f) == QValue(0));
    CHECK(evaluate(scale(1, v), f) == evaluate(v, f));
    CHECK(evaluate(scale(mpq_class(5, 2), v), f) == evaluate(v, f).scaled(mpq_class(5, 2)));
    CHECK(evaluate(scale(0, v), P("x1*x3 - x2^2", r)).is_infinite());
    CHECK_THROWS_AS(scale(-1, v), std::invalid_argument);
    CHECK(scale(3, v).descriptor().find("3") != std::string::npos);
  }

  TEST_CASE("n-fold sum equals n times on the adapted basis") {
    const auto alg = make_algebra(corpus::conic());
    const WeightVector w{2, 1, 1};
    const auto v = Quasivaluation::weight(alg, w);
    const auto sum = oplus_in_cone({v, v, v});
    const auto three = scale(3, v);
    for (std::int64_t m = 0; m <= 4; ++m) {
      for (const auto& b : standard_basis_slice(*alg, MonomialOrder::weighted(w), m)) {
        const auto f = Polynomial::monomial(alg->ring(), b, alg->ring()->field().one());
        CHECK(evaluate(sum, f) == evaluate(three, f));
      }
    }
  }

  TEST_CASE("sum with zero and with the degree") {
    const auto I = corpus::generic(corpus::quad4());
    const auto alg = make_algebra(I);
    const WeightVector u{0, 0, 1, 3};
    const auto vu = Quasivaluation::weight(alg, u);
    const auto zero = Quasivaluation::weight(alg, WeightVector::zero(4));
    const auto with_zero = oplus_in_cone({vu, zero});
    const auto with_deg = oplus_in_cone({Quasivaluation::degree(alg), vu});
    CHECK(with_zero.as_weight() == u);
    CHECK(with_deg.as_weight() == u.shifted(1));
    Rng rng(12);
    for (int k = 0; k < 30; ++k) {
      const auto f = random_form(alg->ring(), rng.uniform(1, 3), rng);
      CHECK(evaluate(with_zero, f) == evaluate(vu, f));
      CHECK(evaluate(with_deg, f) == evaluate(Quasivaluation::weight(alg, u.shifted(1)), f));
    }
  }

  TEST_CASE("epsilon sums agree pointwise on standard monomials") {
    const auto alg = make_algebra(corpus::generic(corpus::quad4()));
    const auto v3 = Quasivaluation::weight(alg, epsilon_vector(IndexSet{2}, 4));
    const auto v4 = Quasivaluation::weight(alg, epsilon_vector(IndexSet{3}, 4));
    const auto sum = oplus_in_cone({v3, v4});
    CHECK(sum.as_weight() == (WeightVector{0, 0, 1, 1}));
    const auto order = MonomialOrder::weighted(WeightVector{0, 0, 1, 1});
    for (std::int64_t m = 0; m <= 3; ++m) {
      for (const auto& b : standard_basis_slice(*alg, order, m)) {
        const auto f = Polynomial::monomial(alg->ring(), b, alg->ring()->field().one());
        CHECK(evaluate(sum, f) == evaluate(v3, f) + evaluate(v4, f));
      }
    }
  }

  TEST_CASE("refuses weights without a shared cone") {
    const auto alg = make_algebra(corpus::conic());
    CHECK_THROWS_AS(oplus_in_cone({Quasivaluation::weight(alg, WeightVector{1, 0, 0}),
                                   Quasivaluation::weight(alg, WeightVector{0, 1, 0})}),
                    ConeMismatchError);
    CHECK_THROWS_AS(oplus_in_cone({Quasivaluation::adic(alg, IndexSet{0})}), std::invalid_argument);
  }
}

TEST_SUITE("axioms") {
  TEST_CASE("superadditive, min-subadditive, scale invariant") {
    const std::vector<corpus::Named> instances = {{"E-conic", corpus::conic(), 2},
                                                  {"E-quad4-generic", corpus::generic(corpus::quad4()), 3}};
    for (const auto& inst : instances) {
      Rng rng(99);
      for (const auto& v : zoo(inst.ideal, inst.d)) {
        CAPTURE(v.descriptor());
        for (int k = 0; k < 40; ++k) {
          const auto f = random_form(inst.ideal.ring(), rng.uniform(1, 2), rng);
          const auto g = random_form(inst.ideal.ring(), rng.uniform(1, 2), rng);
          const auto vf = evaluate(v, f);
          const auto vg = evaluate(v, g);
          CHECK(evaluate(v, f * g) >= vf + vg);
          CHECK(evaluate(v, f + g) >= min(vf, vg));
          CHECK(evaluate(v, f * inst.ideal.ring()->field().from_int(-7)) == vf);
        }
      }
    }
  }

  TEST_CASE("additive on standard products that stay standard") {
    const auto alg = make_algebra(corpus::generic(corpus::quad4()));
    const WeightVector w{0, 2, 1, 5};
    const auto v = Quasivaluation::weight(alg, w);
    const auto order = MonomialOrder::weighted(w);
    const auto gb = alg->basis(order);
    const auto one = alg->ring()->field().one();
    for (const auto& a : standard_basis_slice(*alg, order, 1)) {
      for (const auto& b : standard_basis_slice(*alg, order, 2)) {
        if (!gb.is_standard(a * b)) continue;
        const auto fa = Polynomial::monomial(alg->ring(), a, one);
        const auto fb = Polynomial::monomial(alg->ring(), b, one);
        CHECK(evaluate(v, fa * fb) == evaluate(v, fa) + evaluate(v, fb));
      }
    }
  }
}

TEST_SUITE("standard basis") {
  TEST_CASE("examples") {
    const auto r = make_standard_ring(3);
    const auto alg = make_algebra(Ideal(r, {P("x2^2", r)}));
    CHECK(standard_basis_slice(*alg, MonomialOrder::grevlex(), 2).size() == 5);
    CHECK(standard_basis_slice(*alg, MonomialOrder::grevlex(), 0).size() == 1);
    const auto free = make_algebra(Ideal(make_standard_ring(4)));
    CHECK(standard_basis_slice(*free, MonomialOrder::grevlex(), 3).size() == 20);
  }

  TEST_CASE("slice sizes follow the Hilbert function") {
    for (const auto& inst : corpus::generic_all()) {
      const auto alg = make_algebra(inst.ideal);
      for (std::int64_t m = 0; m <= 4; ++m) {
        const auto expect = static_cast<std::size_t>(alg->hilbert().coefficient(m));
        CHECK(standard_basis_slice(*alg, MonomialOrder::grevlex(), m).size() == expect);
        CHECK(standard_basis_slice(*alg, MonomialOrder::weighted(WeightVector::zero(inst.ideal.num_vars()).shifted(1)), m)
                  .size() == expect);
      }
    }
  }

  TEST_CASE("value tables") {
    const auto alg = make_algebra(corpus::conic());
    const auto v = Quasivaluation::weight(alg, WeightVector{1, 0, 0});
    const auto table = value_table(v, {P("x2^2", alg->ring()), P("x1*x3 - x2^2", alg->ring())});
    CHECK(table["quasivaluation"] == v.descriptor());
    REQUIRE(table["entries"].size() == 2);
    CHECK(table["entries"][0]["value"] == "1");
    CHECK(table["entries"][1]["value"] == "inf");
  }
}
