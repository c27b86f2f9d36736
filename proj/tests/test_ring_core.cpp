#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "peirce/invariants.hpp"
#include "peirce/monomial.hpp"
#include "peirce/rings.hpp"
#include "peirce/subquotient.hpp"
#include "peirce/subset.hpp"
#include "test_helpers.hpp"

using namespace peirce;
using peirce::testing::table_full_matrix_2x2;
using peirce::testing::table_upper_triangular_2x2;

namespace {

std::vector<Elem> brute_idempotents(const Ring& r) {
  std::vector<Elem> out;
  for (Elem x = 0; x < r.size(); ++x)
    if (r.mul(x, x) == x) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("cyclic rings") {
  auto z6 = make_cyclic(6);
  validate_ring(*z6);
  CHECK(z6->size() == 6);
  CHECK(enumerate_idempotents(*z6) == std::vector<Elem>{0, 1, 3, 4});

  auto z8 = make_cyclic(8);
  CHECK(enumerate_idempotents(*z8) == std::vector<Elem>{0, 1});

  auto z1 = make_cyclic(1);
  CHECK(z1->is_zero_ring());
  CHECK(z1->zero() == z1->one());
  validate_ring(*z1);

  CHECK_THROWS_AS(make_cyclic(0), validation_error);
}

TEST_CASE("product rings") {
  auto p = make_product({make_cyclic(2), make_cyclic(3)});
  validate_ring(*p);
  CHECK(p->size() == 6);
  CHECK(enumerate_idempotents(*p).size() == 4);
  CHECK(center_subset(*p).count() == 6);  // commutative

  auto single = make_product({make_cyclic(5)});
  CHECK(single->size() == 5);
  for (Elem a = 0; a < 5; ++a)
    for (Elem b = 0; b < 5; ++b) CHECK(single->mul(a, b) == make_cyclic(5)->mul(a, b));

  CHECK_THROWS_AS(make_product({}), validation_error);
}

TEST_CASE("monomial quotient rings") {
  auto a = make_monomial_quotient(2, {"x"}, {"x^3"});
  validate_ring(*a);
  CHECK(a->size() == 8);
  const auto& ar = dynamic_cast<const MonomialQuotientRing&>(*a);
  Elem x = ar.parse_poly("x");
  auto ideal_x = ideal_generated(*a, std::array<Elem, 1>{x});
  CHECK(ideal_x.count() == 4);
  auto ideal_x2 = ideal_generated(*a, std::array<Elem, 1>{ar.parse_poly("x^2")});
  CHECK(ideal_x2.count() == 2);
  CHECK(ar.mul(x, x) == ar.parse_poly("x^2"));
  CHECK(ar.pow(x, 3) == ar.zero());
  CHECK(ar.describe(ar.parse_poly("1+x^2")) == "1+x^2");

  auto b = make_monomial_quotient(2, {"x", "y"}, {"x^2", "y^2"});
  validate_ring(*b);
  CHECK(b->size() == 16);

  auto c = make_monomial_quotient(2, {"x", "y"}, {"x^2", "y^2", "x*y"});
  validate_ring(*c);
  const auto& cr = dynamic_cast<const MonomialQuotientRing&>(*c);
  CHECK(cr.mul(cr.parse_poly("x"), cr.parse_poly("y")) == cr.zero());
  CHECK(cr.mul(cr.parse_poly("y"), cr.parse_poly("x")) == cr.zero());

  CHECK_THROWS_WITH_AS(make_monomial_quotient(2, {"x", "y"}, {"x^2"}),
                       doctest::Contains("no nilpotency relation"), validation_error);
}

TEST_CASE("table rings accept valid tables and name witnesses for bad ones") {
  // Z4 through tables behaves like make_cyclic(4).
  std::vector<std::vector<Elem>> add(4, std::vector<Elem>(4)), mul(4, std::vector<Elem>(4));
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      add[a][b] = (a + b) % 4;
      mul[a][b] = a * b % 4;
    }
  auto t = make_table_ring(add, mul, 0, 1);
  auto z4 = make_cyclic(4);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      CHECK(t->add(a, b) == z4->add(a, b));
      CHECK(t->mul(a, b) == z4->mul(a, b));
    }

  auto bad_mul = mul;
  bad_mul[2][3] = 1;  // breaks associativity somewhere
  CHECK_THROWS_WITH_AS(make_table_ring(add, bad_mul, 0, 1),
                       doctest::Contains("associative"), validation_error);

  auto bad_add = add;
  bad_add[1][2] = 0;
  bad_add[2][1] = 1;
  CHECK_THROWS_AS(make_table_ring(bad_add, mul, 0, 1), validation_error);
}

TEST_CASE("upper triangular 2x2 over Z2 via tables has 6 idempotents") {
  auto ut = table_upper_triangular_2x2(2);
  CHECK(ut->size() == 8);
  CHECK(brute_idempotents(*ut).size() == 6);
}

TEST_CASE("idempotent enumeration") {
  auto z12 = make_cyclic(12);
  CHECK(enumerate_idempotents(*z12) == std::vector<Elem>{0, 1, 4, 9});

  auto m2 = table_full_matrix_2x2(2);
  CHECK(enumerate_idempotents(*m2).size() == 8);
  CHECK(enumerate_idempotents(*m2) == brute_idempotents(*m2));
}

TEST_CASE("subring generation") {
  auto z6 = make_cyclic(6);
  CHECK(subring_generated(*z6, {}).count() == 6);  // 1 generates everything

  auto z8 = make_cyclic(8);
  CHECK(subring_generated(*z8, std::array<Elem, 1>{2}).count() == 8);

  auto ut = table_upper_triangular_2x2(2);
  // E11 = (1,0,0) packs to 1; expected closure {0, 1, E11, E22} where
  // E22 = (0,0,1) packs to 4 and 1 packs to 5.
  auto s = subring_generated(*ut, std::array<Elem, 1>{1});
  CHECK(s.members() == std::vector<Elem>{0, 1, 4, 5});
}

TEST_CASE("ideal generation") {
  auto z8 = make_cyclic(8);
  CHECK(ideal_generated(*z8, std::array<Elem, 1>{2}).members() ==
        std::vector<Elem>{0, 2, 4, 6});

  auto ut = table_upper_triangular_2x2(2);
  Elem e12 = 2;  // (0,1,0)
  CHECK(ideal_generated(*ut, std::array<Elem, 1>{e12}).members() ==
        std::vector<Elem>{0, 2});

  auto m2 = table_full_matrix_2x2(2);
  Elem e11 = 1;
  CHECK(ideal_generated(*m2, std::array<Elem, 1>{e11}).count() == m2->size());
}

TEST_CASE("quotient rings") {
  auto z8 = make_cyclic(8);
  auto q = make_quotient(z8, ideal_generated(*z8, std::array<Elem, 1>{4}));
  CHECK(q->size() == 4);
  validate_ring(*q);
  // Projection is a homomorphism; exhaustive here.
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b) {
      CHECK(q->add(q->project(a), q->project(b)) == q->project(z8->add(a, b)));
      CHECK(q->mul(q->project(a), q->project(b)) == q->project(z8->mul(a, b)));
    }
  CHECK(q->project(z8->one()) == q->one());

  auto ut = table_upper_triangular_2x2(2);
  auto strict = ideal_generated(*ut, std::array<Elem, 1>{2});
  auto qu = make_quotient(ut, strict);
  CHECK(qu->size() == 4);
  for (Elem a = 0; a < qu->size(); ++a)
    for (Elem b = 0; b < qu->size(); ++b) CHECK(qu->mul(a, b) == qu->mul(b, a));

  auto whole = make_quotient(z8, Subset::full(*z8));
  CHECK(whole->is_zero_ring());

  CHECK_THROWS_AS(make_quotient(z8, Subset::of(*z8, {0, 1})), validation_error);
}

TEST_CASE("annihilators") {
  auto z8 = make_cyclic(8);
  CHECK(annihilator_in_ring(*z8, std::array<Elem, 1>{2}, Side::right).members() ==
        std::vector<Elem>{0, 4});
  auto z6 = make_cyclic(6);
  CHECK(annihilator_in_ring(*z6, std::array<Elem, 1>{2}, Side::right).members() ==
        std::vector<Elem>{0, 3});
  // Defining property holds for members and fails for non-members.
  auto ann = annihilator_in_ring(*z6, std::array<Elem, 1>{2}, Side::right);
  for (Elem a = 0; a < 6; ++a) {
    bool kills = z6->mul(2, a) == 0;
    CHECK(kills == ann.contains(a));
  }
}

TEST_CASE("center") {
  auto m2 = table_full_matrix_2x2(2);
  auto c = center_subset(*m2);
  CHECK(c.count() == 2);
  CHECK(c.contains(m2->zero()));
  CHECK(c.contains(m2->one()));

  auto ut = table_upper_triangular_2x2(2);
  auto cu = center_subset(*ut);
  CHECK(cu.members() == std::vector<Elem>{ut->zero(), ut->one()});
  CHECK(cu.contains_one());
}

TEST_CASE("structure invariants") {
  auto z8 = make_cyclic(8);
  auto s8 = structure_invariants(*z8);
  CHECK(s8.units.members() == std::vector<Elem>{1, 3, 5, 7});
  CHECK(s8.jacobson.members() == std::vector<Elem>{0, 2, 4, 6});
  CHECK(s8.prime_radical == s8.jacobson);
  CHECK(s8.nilpotence_index == 3);
  CHECK_FALSE(s8.is_prime);
  CHECK_FALSE(s8.is_semiprime);

  auto z6 = make_cyclic(6);
  auto s6 = structure_invariants(*z6);
  CHECK(s6.jacobson.is_zero());
  CHECK(s6.is_semiprime);
  CHECK_FALSE(s6.is_prime);
  CHECK(s6.nilpotence_index == 1);

  auto m2 = table_full_matrix_2x2(2);
  auto sm = structure_invariants(*m2);
  CHECK(sm.is_prime);
  CHECK(sm.jacobson.is_zero());
  CHECK(sm.nilpotence_index == 2);
}

TEST_CASE("ideal enumeration") {
  auto z12 = make_cyclic(12);
  auto ideals = enumerate_ideals(*z12);
  CHECK(ideals.size() == 6);  // divisor lattice
  auto primes = enumerate_ideals(*z12, true);
  REQUIRE(primes.size() == 2);
  CHECK(primes[0].members() == std::vector<Elem>{0, 3, 6, 9});
  CHECK(primes[1].members() == std::vector<Elem>{0, 2, 4, 6, 8, 10});

  auto z4 = make_cyclic(4);
  CHECK(enumerate_ideals(*z4).size() == 3);
  auto p4 = enumerate_ideals(*z4, true);
  REQUIRE(p4.size() == 1);
  CHECK(p4[0].members() == std::vector<Elem>{0, 2});

  // Upper triangular 2x2 over Z2: the two prime ideals are the kernels of
  // the diagonal projections (size-4 ideals).
  auto ut = table_upper_triangular_2x2(2);
  auto put = enumerate_ideals(*ut, true);
  REQUIRE(put.size() == 2);
  for (const auto& p : put) {
    CHECK(p.count() == 4);
    CHECK(p.contains(2));  // both contain the strictly upper part
  }
}

TEST_CASE("small cyclic rings satisfy all axioms exhaustively") {
  for (std::uint64_t n = 1; n <= 24; ++n) validate_ring(*make_cyclic(n));
}

TEST_CASE("tier gating") {
  Config tight;
  tight.structure_tier = 16;
  auto z32 = make_cyclic(32);
  CHECK_THROWS_AS(structure_invariants(*z32, tight), tier_error);
  CHECK_THROWS_AS(enumerate_ideals(*z32, false, tight), tier_error);
}

TEST_CASE("corner rings") {
  auto ut = table_upper_triangular_2x2(2);
  Elem e11 = 1, e22 = 4;
  auto c1 = make_corner(ut, e11);
  CHECK(c1->size() == 2);
  CHECK(c1->one() == c1->project(e11));
  auto c2 = make_corner(ut, e22);
  CHECK(c2->size() == 2);
  // eRe with e = 1 recovers the whole ring.
  auto cw = make_corner(ut, ut->one());
  CHECK(cw->size() == ut->size());
}

TEST_CASE("subset flags") {
  auto z8 = make_cyclic(8);
  auto even = Subset::of(*z8, {0, 2, 4, 6});
  CHECK(even.closed_under_addition());
  CHECK(even.closed_under_multiplication());
  CHECK(even.is_ideal());
  CHECK_FALSE(even.contains_one());

  auto not_group = Subset::of(*z8, {0, 2, 4});
  CHECK_FALSE(not_group.closed_under_addition());

  auto ut = table_upper_triangular_2x2(2);
  auto strict = Subset::of(*ut, {0, 2});
  CHECK(strict.is_ideal());
}
