#include <doctest.h>

#include "ringlab/error.hpp"
#include "ringlab/subsets.hpp"
#include "test_support.hpp"

using namespace ringlab;
using ringlab::testing::build;

TEST_CASE("unit tables") {
  const FiniteRing z4 = zmod_ring(4);
  const UnitTable ut = units(z4);
  CHECK(ut.units.elements() == std::vector<Elem>{1, 3});
  CHECK(ut.inverse_of(3) == 3);

  const FiniteRing f2xf2 = build("prod(F(2), F(2))");
  CHECK(units(f2xf2).units.elements() == std::vector<Elem>{3});

  // T2(F2): only the identity and identity + e12 are invertible.
  const FiniteRing t2 = build("T(2, F(2))");
  CHECK(units(t2).units.elements() == std::vector<Elem>{5, 7});
}

TEST_CASE("idempotents") {
  CHECK(idempotents(zmod_ring(4)).elements() == std::vector<Elem>{0, 1});
  CHECK(idempotents(build("prod(F(2), F(2))")).size() == 4);
  CHECK(idempotents(build("T(2, F(2))")).size() == 6);

  // Independent count for T2(Z4): triples (a, b, c) with a^2 = a, c^2 = c,
  // ab + bc = b under (a,b,c)(a',b',c') = (aa', ab' + bc', cc').
  int expected = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        if (a * a % 4 == a && c * c % 4 == c && (a * b + b * c) % 4 == b) ++expected;
  CHECK(expected == 10);
  CHECK(idempotents(build("T(2, Z(4))")).size() == expected);
}

TEST_CASE("nilpotents") {
  CHECK(nilpotents(zmod_ring(4)).elements() == std::vector<Elem>{0, 2});
  CHECK(nilpotents(galois_field(2)).elements() == std::vector<Elem>{0});
  CHECK(nilpotents(build("T(2, F(2))")).elements() == std::vector<Elem>{0, 2});
}

TEST_CASE("jacobson radical via quasi-regularity") {
  CHECK(jacobson_radical(zmod_ring(4)).elements() == std::vector<Elem>{0, 2});
  CHECK(jacobson_radical(build("prod(F(2), F(2))")).elements() == std::vector<Elem>{0});
  CHECK(jacobson_radical(build("GR(Z(4), C2)")).size() == 8);
  CHECK(lower_nilradical(build("M(2, F(2))"), units(build("M(2, F(2))"))).size() == 1);
}

TEST_CASE("delta sets") {
  CHECK(delta_set(zmod_ring(4)).elements() == std::vector<Elem>{0, 2});
  // strictly upper triangular part of T2(F2)
  CHECK(delta_set(build("T(2, F(2))")).elements() == std::vector<Elem>{0, 2});
  CHECK(delta_set(build("prod(F(2), F(2))")).elements() == std::vector<Elem>{0});
}

TEST_CASE("center") {
  CHECK(center(zmod_ring(4)).size() == 4);
  CHECK(center(build("M(2, F(2))")).elements() == std::vector<Elem>{0, 9});
  CHECK(center(build("T(2, F(2))")).elements() == std::vector<Elem>{0, 5});
}

TEST_CASE("annihilators") {
  const FiniteRing z4 = zmod_ring(4);
  CHECK(left_annihilator(z4, 2).elements() == std::vector<Elem>{0, 2});
  CHECK(left_annihilator(z4, 1).elements() == std::vector<Elem>{0});
  CHECK(right_annihilator(z4, 1).elements() == std::vector<Elem>{0});
  // x * e12 = 0 forces the (1,1) entry of x to vanish
  CHECK(left_annihilator(build("T(2, F(2))"), 2).size() == 4);
}

TEST_CASE("generated ideals") {
  const FiniteRing z4 = zmod_ring(4);
  const Elem two = 2, one = 1;
  CHECK(ideal_generated_by(z4, std::span<const Elem>(&two, 1), Side::TwoSided).elements() ==
        std::vector<Elem>{0, 2});
  CHECK(ideal_generated_by(z4, std::span<const Elem>(&one, 1), Side::TwoSided).size() == 4);
  const FiniteRing t2 = build("T(2, F(2))");
  const Elem e12 = 2;
  CHECK(ideal_generated_by(t2, std::span<const Elem>(&e12, 1), Side::TwoSided).elements() ==
        std::vector<Elem>{0, 2});
  CHECK(ideal_generated_by(z4, {}, Side::Left).elements() == std::vector<Elem>{0});
}

TEST_CASE("ideal lattices") {
  const FiniteRing z4 = zmod_ring(4);
  const IdealLattice lat = ideal_lattice(z4, Side::TwoSided, 100);
  CHECK(lat.ideals.size() == 3);
  REQUIRE(lat.maximal.size() == 1);
  CHECK(lat.ideals[static_cast<size_t>(lat.maximal[0])].elements() == std::vector<Elem>{0, 2});

  CHECK(ideal_lattice(build("prod(F(2), F(2))"), Side::Right, 100).ideals.size() == 4);

  // M2(F2) is simple, yet it has three maximal right ideals, none two-sided.
  const FiniteRing m2 = build("M(2, F(2))");
  const IdealLattice right = ideal_lattice(m2, Side::Right, 100);
  CHECK(right.ideals.size() == 5);
  CHECK(right.maximal.size() == 3);
  for (int idx : right.maximal)
    CHECK_FALSE(is_two_sided_ideal(m2, right.ideals[static_cast<size_t>(idx)]));
  CHECK(ideal_lattice(m2, Side::TwoSided, 100).ideals.size() == 2);
}

TEST_CASE("lattice budget") {
  try {
    ideal_lattice(build("prod(F(2), F(2))"), Side::Right, 2);
    FAIL("expected budget exhaustion");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("radical equals the intersection of maximal one-sided ideals") {
  for (const char* expr : {"Z(4)", "Z(6)", "T(2, F(2))", "M(2, F(2))", "GR(F(2), C2)"}) {
    const FiniteRing r = build(expr);
    const ElemSet j = jacobson_radical(r);
    CHECK(intersect_maximal(r, ideal_lattice(r, Side::Right, 4096)) == j);
    CHECK(intersect_maximal(r, ideal_lattice(r, Side::Left, 4096)) == j);
  }
}
