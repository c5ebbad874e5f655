#include <doctest.h>

#include "ringlab/classify.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/error.hpp"
#include "test_support.hpp"

using namespace ringlab;
using ringlab::testing::build;
using ringlab::testing::build_full;

namespace {

const Config kCfg{};

bool same_flags(const FiniteRing& a, const FiniteRing& b) {
  const Classification ca = compute_classification(a, SubsetProfile::compute(a), kCfg);
  const Classification cb = compute_classification(b, SubsetProfile::compute(b), kCfg);
  for (const std::string& name : flag_names())
    if (flag_by_name(ca, name) != flag_by_name(cb, name)) return false;
  return true;
}

}  // namespace

TEST_CASE("direct products") {
  const ProductRing single = direct_product({zmod_ring(4)}, kCfg);
  CHECK(single.ring.same_tables(zmod_ring(4)));

  const FiniteRing f2xf2 = build("prod(F(2), F(2))");
  CHECK(f2xf2.order() == 4);
  CHECK(is_boolean(f2xf2));
  CHECK_NOTHROW(f2xf2.revalidate());

  // Z2 x Z3 is a different presentation of Z6: all flags agree.
  CHECK(same_flags(build("prod(Z(2), Z(3))"), zmod_ring(6)));
}

TEST_CASE("matrix rings") {
  CHECK(matrix_ring(zmod_ring(4), 1, kCfg).ring.same_tables(zmod_ring(4)));

  const MatrixRing m2 = matrix_ring(galois_field(2), 2, kCfg);
  CHECK(m2.ring.order() == 16);
  CHECK(units(m2.ring).units.size() == 6);  // |GL2(F2)|
  CHECK_NOTHROW(m2.ring.revalidate());

  const MatrixRing m2z4 = matrix_ring(zmod_ring(4), 2, kCfg);
  CHECK(m2z4.ring.order() == 256);
  CHECK_NOTHROW(m2z4.ring.revalidate());

  CHECK_THROWS_AS(matrix_ring(zmod_ring(4), 3, kCfg), Error);  // 4^9 over the bound
}

TEST_CASE("triangular rings") {
  CHECK(upper_triangular_ring(zmod_ring(4), 1, kCfg).ring.same_tables(zmod_ring(4)));

  const TriangularRing t2 = upper_triangular_ring(galois_field(2), 2, kCfg);
  CHECK(t2.ring.order() == 8);
  CHECK_NOTHROW(t2.ring.revalidate());

  const TriangularRing t2z8 = upper_triangular_ring(zmod_ring(8), 2, kCfg);
  CHECK(t2z8.ring.order() == 512);
}

TEST_CASE("quotients") {
  const FiniteRing z4 = zmod_ring(4);
  const QuotientRing mod2 = quotient_ring(z4, ElemSet::of(4, {0, 2}));
  CHECK(mod2.ring.same_tables(zmod_ring(2)));
  CHECK(mod2.projection[3] == 1);

  const QuotientRing whole = quotient_ring(z4, ElemSet::full(4));
  CHECK(whole.ring.order() == 1);

  CHECK_THROWS_AS(quotient_ring(z4, ElemSet::of(4, {0, 1})), Error);
  try {
    quotient_ring(z4, ElemSet::of(4, {0, 1}));
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotAnIdeal);
  }
}

TEST_CASE("corner rings") {
  const FiniteRing z4 = zmod_ring(4);
  CHECK(corner_ring(z4, z4.one()).ring.same_tables(z4));
  CHECK(corner_ring(z4, z4.zero()).ring.order() == 1);

  // e11 in T2(Z4) cuts out a copy of Z4.
  const FiniteRing t2z4 = build("T(2, Z(4))");
  const CornerRing corner = corner_ring(t2z4, 1);
  CHECK(corner.ring.order() == 4);
  CHECK(same_flags(corner.ring, z4));

  try {
    corner_ring(z4, 3);
    FAIL("3 is not idempotent in Z4");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotIdempotent);
  }
}

TEST_CASE("trivial extensions") {
  const FiniteRing f2 = galois_field(2);
  const TrivialExtensionRing te = trivial_extension(f2, regular_bimodule(f2), kCfg);
  CHECK(te.ring.order() == 4);
  CHECK_NOTHROW(te.ring.revalidate());
  const SubsetProfile p = SubsetProfile::compute(te.ring);
  CHECK(is_local(te.ring, p));
  CHECK(p.jacobson.elements() == std::vector<Elem>{0, 2});  // (0,0) and (0,1)

  const TrivialExtensionRing by_zero =
      trivial_extension(zmod_ring(4), zero_bimodule(zmod_ring(4), zmod_ring(4)), kCfg);
  CHECK(by_zero.ring.same_tables(zmod_ring(4)));

  const FiniteRing te2 = build("TE2(F(2))");
  CHECK(te2.order() == 8);
  CHECK_NOTHROW(te2.revalidate());
}

TEST_CASE("Morita context rings") {
  const MoritaRing r1 = morita_ring(morita_example("R1"), kCfg);
  CHECK(r1.ring.order() == 64);
  CHECK(r1.ctx.trivial());

  const MoritaRing r2 = morita_ring(morita_example("R2"), kCfg);
  CHECK(r2.ring.order() == 32);

  const MoritaRing r1n = morita_ring(morita_example("R1N"), kCfg);
  CHECK(r1n.ring.order() == 128);
  CHECK_FALSE(r1n.ctx.trivial());

  // zero modules: the context ring is just A x B
  const MoritaRing prod = morita_ring(morita_example("Z4F4"), kCfg);
  CHECK(prod.ring.order() == 16);
  CHECK(same_flags(prod.ring, build("prod(Z(4), F(4))")));

  // the full context over Z4 is the 2x2 matrix ring
  const MoritaRing full = morita_ring(morita_example("M2Z4"), kCfg);
  CHECK(full.ring.order() == 256);
  CHECK(same_flags(full.ring, build("M(2, Z(4))")));

  CHECK_THROWS_AS(morita_example("R9"), Error);
}

TEST_CASE("trivial contexts match the trivial extension of the product") {
  // For MN = NM = 0 the context ring carries the same structure as
  // T(A x B, M + N), with (a,b) acting by (a.m, b.n) on the left and by
  // (m.b, n.a) on the right.
  for (const char* name : {"R1", "R2", "Z4F4"}) {
    const MoritaContext ctx = morita_example(name);
    REQUIRE(ctx.trivial());
    const ProductRing prod = direct_product({ctx.a_ring, ctx.b_ring}, kCfg);

    Bimodule sum;
    sum.left_ring = prod.ring;
    sum.right_ring = prod.ring;
    sum.order = ctx.m.order * ctx.n.order;
    sum.zero = static_cast<Elem>(ctx.m.zero + ctx.n.zero * ctx.m.order);
    sum.label = ctx.m.label + "+" + ctx.n.label;
    sum.add.resize(static_cast<size_t>(sum.order) * sum.order);
    sum.left_act.resize(static_cast<size_t>(prod.ring.order()) * sum.order);
    sum.right_act.resize(static_cast<size_t>(sum.order) * prod.ring.order());
    sum.element_names.assign(static_cast<size_t>(sum.order), "");
    for (int x = 0; x < sum.order; ++x) {
      const Elem xm = static_cast<Elem>(x % ctx.m.order);
      const Elem xn = static_cast<Elem>(x / ctx.m.order);
      sum.element_names[static_cast<size_t>(x)] =
          "(" + ctx.m.element_names[xm] + "," + ctx.n.element_names[xn] + ")";
      for (int y = 0; y < sum.order; ++y) {
        const Elem ym = static_cast<Elem>(y % ctx.m.order);
        const Elem yn = static_cast<Elem>(y / ctx.m.order);
        sum.add[static_cast<size_t>(x) * sum.order + y] =
            static_cast<Elem>(ctx.m.add_op(xm, ym) + ctx.n.add_op(xn, yn) * ctx.m.order);
      }
      for (int p = 0; p < prod.ring.order(); ++p) {
        const Elem a = static_cast<Elem>(p % ctx.a_ring.order());
        const Elem b = static_cast<Elem>(p / ctx.a_ring.order());
        sum.left_act[static_cast<size_t>(p) * sum.order + x] =
            static_cast<Elem>(ctx.m.lact(a, xm) + ctx.n.lact(b, xn) * ctx.m.order);
        sum.right_act[static_cast<size_t>(x) * prod.ring.order() + p] =
            static_cast<Elem>(ctx.m.ract(xm, b) + ctx.n.ract(xn, a) * ctx.m.order);
      }
    }
    sum.neg.resize(static_cast<size_t>(sum.order));
    for (int x = 0; x < sum.order; ++x)
      for (int y = 0; y < sum.order; ++y)
        if (sum.add_op(static_cast<Elem>(x), static_cast<Elem>(y)) == sum.zero)
          sum.neg[static_cast<size_t>(x)] = static_cast<Elem>(y);

    const TrivialExtensionRing te = trivial_extension(prod.ring, sum, kCfg);
    const MoritaRing context_ring = morita_ring(ctx, kCfg);
    CHECK(te.ring.order() == context_ring.ring.order());
    CHECK(same_flags(te.ring, context_ring.ring));
  }
}

TEST_CASE("Morita validation rejects incompatible pairings") {
  MoritaContext ctx = morita_example("R1N");
  // Corrupt one phi value: biadditivity (or associativity) must now fail.
  ctx.phi[static_cast<size_t>(1) * ctx.n.order + 1] = 1;
  try {
    morita_ring(std::move(ctx), kCfg);
    FAIL("expected a rejected pairing");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::AxiomViolation);
  }
}

TEST_CASE("group rings") {
  const GroupRing f2c2 = group_ring(galois_field(2), cyclic_group(2), kCfg);
  CHECK(f2c2.ring.order() == 4);
  CHECK_NOTHROW(f2c2.ring.revalidate());
  const SubsetProfile p = SubsetProfile::compute(f2c2.ring);
  CHECK(is_local(f2c2.ring, p));
  CHECK(p.jacobson.elements() == std::vector<Elem>{0, 3});

  const GroupRing trivial = group_ring(zmod_ring(4), cyclic_group(1), kCfg);
  CHECK(trivial.ring.same_tables(zmod_ring(4)));

  const FiniteRing f2c3 = build("GR(F(2), C3)");
  CHECK(f2c3.order() == 8);
  CHECK_FALSE(is_strongly_delta_clean(f2c3, SubsetProfile::compute(f2c3)));

  CHECK_THROWS_AS(group_ring(zmod_ring(4), cyclic_group(8), kCfg), Error);
}

TEST_CASE("augmentation ideals") {
  CHECK(augmentation_ideal(galois_field(2), cyclic_group(2), kCfg).elements() ==
        std::vector<Elem>{0, 3});
  CHECK(augmentation_ideal(zmod_ring(4), cyclic_group(1), kCfg).elements() ==
        std::vector<Elem>{0});
  CHECK(augmentation_ideal(zmod_ring(4), cyclic_group(2), kCfg).size() == 4);
}

TEST_CASE("subgroup bimodules require closed subsets") {
  const FiniteRing z4 = zmod_ring(4);
  CHECK(subgroup_bimodule(z4, ElemSet::of(4, {0, 2})).order == 2);
  CHECK_THROWS_AS(subgroup_bimodule(z4, ElemSet::of(4, {0, 1})), Error);
  CHECK_THROWS_AS(subgroup_bimodule(z4, ElemSet::of(4, {2})), Error);
}

TEST_CASE("every constructed corpus ring passes the axiom scan") {
  for (const CorpusEntry& entry : ringlab::testing::shared_corpus().entries)
    CHECK_NOTHROW(entry.ring.revalidate());
}
