#include <doctest.h>

#include "corpus.hpp"

using namespace tropcm;

namespace {

Polynomial P(const std::string& text, const RingPtr& ring) { return parse_polynomial(text, ring); }

LinearChange permutation(const std::vector<std::size_t>& image, const Field& field) {
  Matrix m(image.size(), image.size(), field);
  for (std::size_t j = 0; j < image.size(); ++j) {
    for (std::size_t i = 0; i < image.size(); ++i) m.at(j, i) = field.zero();
    m.at(j, image[j]) = field.one();
  }
  return LinearChange(m, 0, 0);
}

}  // namespace

TEST_SUITE("random_gl") {
  TEST_CASE("deterministic per seed") {
    const auto a = random_gl(4, 42, 100, Field::rationals());
    const auto b = random_gl(4, 42, 100, Field::rationals());
    CHECK(a.matrix() == b.matrix());
    CHECK_FALSE(a.matrix() == random_gl(4, 43, 100, Field::rationals()).matrix());
    CHECK(a.to_json().dump() == b.to_json().dump());
  }

  TEST_CASE("entries within the bound and invertible") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto g = random_gl(3, seed, 2, Field::rationals());
      CHECK_FALSE(determinant(g.matrix()).is_zero());
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          const auto& q = g.matrix().at(i, j).rational_value();
          CHECK(q.get_den() == 1);
          CHECK(abs(q) <= 2);
        }
      }
    }
  }

  TEST_CASE("n = 1 and prime fields") {
    const auto g = random_gl(1, 5, 100, Field::rationals());
    CHECK_FALSE(g.matrix().at(0, 0).is_zero());
    const auto h = random_gl(5, 5, 100, Field::prime(7));
    CHECK_FALSE(determinant(h.matrix()).is_zero());
    CHECK(h.matrix().at(0, 0).modulus() == 7);
  }
}

TEST_SUITE("apply_change") {
  TEST_CASE("identity and permutations") {
    const auto I = corpus::conic();
    CHECK(ideals_equal(apply_change(LinearChange::identity(3, Field::rationals()), I), I));
    // x1 -> x3, x2 -> x2, x3 -> x1 fixes the conic; x1 -> x2, x2 -> x1 does not
    CHECK(ideals_equal(apply_change(permutation({2, 1, 0}, Field::rationals()), I), I));
    const auto swapped = apply_change(permutation({1, 0, 2}, Field::rationals()), I);
    CHECK(ideals_equal(swapped, Ideal(I.ring(), {P("x2*x3 - x1^2", I.ring())})));
  }

  TEST_CASE("row j is the image of x_j") {
    const auto r = make_standard_ring(2);
    const auto f = Field::rationals();
    Matrix m(2, 2, f);
    m.at(0, 0) = f.from_int(1);
    m.at(0, 1) = f.from_int(2);
    m.at(1, 0) = f.zero();
    m.at(1, 1) = f.from_int(1);
    const auto J = apply_change(LinearChange(m, 0, 0), Ideal(r, {P("x1", r)}));
    CHECK(J.generators()[0] == P("x1 + 2*x2", r));
  }

  TEST_CASE("round trip through the exact inverse") {
    for (const auto& inst : corpus::plain()) {
      const auto n = inst.ideal.num_vars();
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto g = random_gl(n, seed, 100, Field::rationals());
        CHECK(ideals_equal(apply_change(g, apply_change(g.inverse(), inst.ideal)), inst.ideal));
        CHECK(ideals_equal(apply_change(g.inverse(), apply_change(g, inst.ideal)), inst.ideal));
      }
    }
  }

  TEST_CASE("Hilbert series is preserved") {
    const auto I = corpus::pluck();
    const auto hs = hilbert_series_quotient(I);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      CHECK(hilbert_series_quotient(apply_change(random_gl(6, seed, 100, Field::rationals()), I)) == hs);
    }
  }

  TEST_CASE("dimension mismatch") {
    CHECK_THROWS_AS(apply_change(LinearChange::identity(2, Field::rationals()), corpus::conic()), std::invalid_argument);
  }
}

TEST_SUITE("audit") {
  TEST_CASE("generic Pluecker passes every subset up to size 4") {
    const auto I = corpus::generic(corpus::pluck());
    const auto audit = genericity_audit(I, 5, 4);
    CHECK(audit.checks.size() == 6 + 15 + 20 + 15);
    CHECK(audit.passed());
  }

  TEST_CASE("conic in original coordinates") {
    const auto audit = genericity_audit(corpus::conic(), 2, 1);
    REQUIRE(audit.checks.size() == 3);
    for (const auto& c : audit.checks) {
      CHECK(c.pass);
      CHECK(c.actual_dim == 1);
    }
  }

  TEST_CASE("reducible but CM example") {
    const auto r = make_standard_ring(3);
    const auto audit = genericity_audit(Ideal(r, {P("x1*x2", r)}), 2, 1);
    bool saw = false;
    for (const auto& c : audit.checks) {
      if (c.a == IndexSet{2}) {
        saw = true;
        CHECK(c.pass);
        CHECK(c.expected_dim == 1);
        CHECK(c.actual_dim == 1);
      }
    }
    CHECK(saw);
  }

  TEST_CASE("failures propagate to supersets") {
    // x1 vanishes on the component {x1 = 0}, so I + <x1> keeps dimension 3
    const auto r = make_standard_ring(4);
    const Ideal I(r, {P("x1*x2", r), P("x1*x3", r)});
    const auto audit = genericity_audit(I, 3, 2);
    CHECK_FALSE(audit.passed());
    for (const auto& f : audit.failures()) {
      for (const auto& c : audit.checks) {
        if (f.a.subset_of(c.a)) CHECK_FALSE(c.pass);
      }
    }
  }

  TEST_CASE("sampling is seeded and bounded") {
    const auto I = corpus::generic(corpus::pluck());
    const auto a = genericity_audit(I, 5, 4, 20, 3);
    const auto b = genericity_audit(I, 5, 4, 20, 3, 4);
    CHECK(a.checks.size() == 20);
    CHECK(a.to_json().dump() == b.to_json().dump());
    const auto json = a.to_json();
    CHECK(json["seed"] == 3);
    CHECK(json["checks"][0].contains("expected_dim"));
  }
}

TEST_SUITE("make_generic") {
  TEST_CASE("corpus instances need no reseed") {
    for (const auto& inst : corpus::plain()) {
      const auto g = make_generic(inst.ideal, 42, 100);
      CHECK(g.audit.passed());
      CHECK(g.reseeds == 0);
      CHECK(g.audit.d == inst.d);
      CHECK(hilbert_series_quotient(g.ideal) == hilbert_series_quotient(inst.ideal));
    }
  }

  TEST_CASE("the dimension audit does not see depth") {
    // two planes in P^4 meeting in a point: not CM, yet every generic cut drops dimension
    const auto r = make_standard_ring(5);
    const Ideal I(r, {P("x1*x3", r), P("x1*x4", r), P("x2*x3", r), P("x2*x4", r)});
    const auto g = make_generic(I, 1, 100);
    CHECK(g.audit.d == 3);
    CHECK(g.audit.passed());
  }
}
