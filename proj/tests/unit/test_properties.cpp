// Corpus-wide invariants: every check runs over all rings of the standard
// corpus so new corpus entries are covered automatically.

#include <doctest.h>

#include "ringlab/error.hpp"
#include "ringlab/subsets.hpp"
#include "test_support.hpp"

using namespace ringlab;
using ringlab::testing::shared_corpus;

TEST_CASE("additive inverses close") {
  for (const CorpusEntry& e : shared_corpus().entries)
    for (int a = 0; a < e.ring.order(); ++a)
      CHECK(e.ring.add(static_cast<Elem>(a), e.ring.neg(static_cast<Elem>(a))) == e.ring.zero());
}

TEST_CASE("unit tables are exact") {
  for (const CorpusEntry& e : shared_corpus().entries) {
    for (Elem u : e.profile.units.elements()) {
      const Elem v = e.profile.unit_table.inverse_of(u);
      CHECK(e.ring.mul(u, v) == e.ring.one());
      CHECK(e.ring.mul(v, u) == e.ring.one());
    }
    // no non-unit has a two-sided inverse
    for (int a = 0; a < e.ring.order(); ++a) {
      if (e.profile.units.contains(static_cast<Elem>(a))) continue;
      for (int b = 0; b < e.ring.order(); ++b) {
        const bool two_sided =
            e.ring.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == e.ring.one() &&
            e.ring.mul(static_cast<Elem>(b), static_cast<Elem>(a)) == e.ring.one();
        CHECK_FALSE(two_sided);
      }
    }
  }
}

TEST_CASE("the radical sits inside delta") {
  for (const CorpusEntry& e : shared_corpus().entries)
    CHECK(e.profile.jacobson.is_subset_of(e.profile.delta));
}

TEST_CASE("delta is closed under addition and unit multiplication") {
  for (const CorpusEntry& e : shared_corpus().entries) {
    const auto delta = e.profile.delta.elements();
    for (Elem x : delta)
      for (Elem y : delta) CHECK(e.profile.delta.contains(e.ring.add(x, y)));
    for (Elem u : e.profile.units.elements()) {
      ElemSet left(e.ring.order()), right(e.ring.order());
      for (Elem x : delta) {
        left.insert(e.ring.mul(u, x));
        right.insert(e.ring.mul(x, u));
      }
      CHECK(left == e.profile.delta);
      CHECK(right == e.profile.delta);
    }
  }
}

TEST_CASE("one plus delta lands in the units and absorbs them") {
  for (const CorpusEntry& e : shared_corpus().entries) {
    for (Elem d : e.profile.delta.elements())
      CHECK(e.profile.units.contains(e.ring.add(e.ring.one(), d)));
    for (Elem u : e.profile.units.elements())
      for (Elem d : e.profile.delta.elements())
        CHECK(e.profile.units.contains(e.ring.add(u, d)));
  }
}

TEST_CASE("delta meets the idempotents only in zero") {
  for (const CorpusEntry& e : shared_corpus().entries) {
    const ElemSet meet = e.profile.delta.intersect(e.profile.idempotents);
    CHECK(meet.size() == 1);
    CHECK(meet.contains(e.ring.zero()));
  }
}

TEST_CASE("delta is left-right symmetric") {
  for (const CorpusEntry& e : shared_corpus().entries)
    CHECK(delta_set_left(e.ring, e.profile.unit_table) == e.profile.delta);
}

TEST_CASE("finite rings are Dedekind-finite") {
  for (const CorpusEntry& e : shared_corpus().entries) CHECK(e.flags.dedekind_finite);
}

TEST_CASE("radical equals the intersection of maximal ideals on both sides") {
  for (const CorpusEntry& e : shared_corpus().entries) {
    if (e.ring.order() > 128) continue;  // keep the lattice pass quick
    for (Side side : {Side::Right, Side::Left}) {
      try {
        const IdealLattice lat = ideal_lattice(e.ring, side, shared_corpus().config.ideal_budget);
        CHECK(intersect_maximal(e.ring, lat) == e.profile.jacobson);
      } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::BudgetExceeded);
      }
    }
  }
}

TEST_CASE("local rings have exactly one maximal right ideal") {
  for (const CorpusEntry& e : shared_corpus().entries) {
    if (e.ring.order() > 128) continue;
    const IdealLattice lat = ideal_lattice(e.ring, Side::Right, shared_corpus().config.ideal_budget);
    const bool unique_maximal = lat.maximal.size() == 1;
    CHECK(e.flags.local == unique_maximal);
  }
}

TEST_CASE("nilpotency exponents stay within the ring order") {
  for (const CorpusEntry& e : shared_corpus().entries)
    for (Elem x : e.profile.nilpotents.elements()) {
      Elem power = x;
      bool reached_zero = false;
      for (int k = 0; k < e.ring.order() && !reached_zero; ++k) {
        reached_zero = power == e.ring.zero();
        power = e.ring.mul(power, x);
      }
      CHECK(reached_zero);
    }
}
