#include <doctest.h>

#include <random>
#include <string>

#include "ringlab/error.hpp"
#include "ringlab/expr.hpp"
#include "test_support.hpp"

using namespace ringlab;

namespace {

const Config kCfg{};

RingExpr random_expr(std::mt19937& rng, int depth) {
  const auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  const int max_kind = depth <= 0 ? 2 : 11;
  RingExpr e;
  switch (pick(max_kind)) {
    case 0:
      e.kind = RingExpr::Kind::Zmod;
      e.numbers.push_back(1 + pick(16));
      break;
    case 1: {
      e.kind = RingExpr::Kind::Field;
      const int qs[] = {2, 3, 4, 5, 7, 8, 9};
      e.numbers.push_back(qs[pick(7)]);
      break;
    }
    case 2: {
      e.kind = RingExpr::Kind::Product;
      const int count = 1 + pick(3);
      for (int i = 0; i < count; ++i) e.args.push_back(random_expr(rng, depth - 1));
      break;
    }
    case 3:
      e.kind = RingExpr::Kind::Matrix;
      e.numbers.push_back(1 + pick(3));
      e.args.push_back(random_expr(rng, depth - 1));
      break;
    case 4:
      e.kind = RingExpr::Kind::Triangular;
      e.numbers.push_back(1 + pick(3));
      e.args.push_back(random_expr(rng, depth - 1));
      break;
    case 5:
      e.kind = RingExpr::Kind::TrivialExt;
      e.args.push_back(random_expr(rng, depth - 1));
      break;
    case 6:
      e.kind = RingExpr::Kind::TrivialExtSquare;
      e.args.push_back(random_expr(rng, depth - 1));
      break;
    case 7: {
      e.kind = RingExpr::Kind::GroupRing;
      e.args.push_back(random_expr(rng, depth - 1));
      const auto& groups = standard_groups();
      e.name = groups[static_cast<size_t>(pick(static_cast<int>(groups.size())))].label;
      break;
    }
    case 8: {
      e.kind = RingExpr::Kind::Quotient;
      e.args.push_back(random_expr(rng, depth - 1));
      const int count = 1 + pick(3);
      for (int i = 0; i < count; ++i) e.list.push_back(pick(16));
      break;
    }
    case 9:
      e.kind = RingExpr::Kind::Corner;
      e.args.push_back(random_expr(rng, depth - 1));
      e.numbers.push_back(pick(16));
      break;
    default: {
      e.kind = RingExpr::Kind::MoritaNamed;
      const auto& names = morita_example_names();
      e.name = names[static_cast<size_t>(pick(static_cast<int>(names.size())))];
      break;
    }
  }
  return e;
}

}  // namespace

TEST_CASE("parsing basic expressions") {
  const RingExpr t = parse_expr("T(2, Z(4))");
  CHECK(t.kind == RingExpr::Kind::Triangular);
  REQUIRE(t.numbers.size() == 1);
  CHECK(t.numbers[0] == 2);
  REQUIRE(t.args.size() == 1);
  CHECK(t.args[0].kind == RingExpr::Kind::Zmod);
  CHECK(print_expr(t) == "T(2, Z(4))");

  const RingExpr gr = parse_expr("GR(F(2), C2)");
  CHECK(gr.kind == RingExpr::Kind::GroupRing);
  CHECK(gr.name == "C2");
}

TEST_CASE("constructor names are case-insensitive, whitespace ignored") {
  CHECK(parse_expr("gr(f(2), c2xc2)").name == "C2xC2");
  CHECK(parse_expr("  T ( 2 ,  Z ( 4 ) ) ") == parse_expr("T(2, Z(4))"));
  CHECK(parse_expr("MORITA(r1)").name == "R1");
  CHECK(print_expr(parse_expr("quot(z(4), [ 2 ])")) == "quot(Z(4), [2])");
}

TEST_CASE("syntax errors carry an offset") {
  const auto offset_of = [](const char* text) {
    try {
      parse_expr(text);
      return std::string("no error");
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::ParseError);
      return std::string(err.what());
    }
  };
  CHECK(offset_of("M(2").find("offset 3") != std::string::npos);
  CHECK(offset_of("Z(").find("offset 2") != std::string::npos);
  CHECK(offset_of("Q(3)").find("unknown constructor") != std::string::npos);
  CHECK(offset_of("Z(1,2)").find("expected ')'") != std::string::npos);
  CHECK(offset_of("Z(4) x").find("expected end of input") != std::string::npos);
  CHECK(offset_of("morita(R9)").find("unknown Morita context") != std::string::npos);
  CHECK(offset_of("GR(F(2), C9)").find("unknown group") != std::string::npos);
  CHECK(offset_of("prod()").find("expected") != std::string::npos);
}

TEST_CASE("evaluation") {
  CHECK(ringlab::testing::build("Z(6)").order() == 6);
  CHECK(ringlab::testing::build("T(2, Z(4))").order() == 64);
  CHECK(ringlab::testing::build("GR(Z(4), C3)").order() == 64);
  CHECK(ringlab::testing::build("TE2(F(2))").order() == 8);
  CHECK(ringlab::testing::build("quot(Z(4), [2])").same_tables(zmod_ring(2)));
  CHECK(ringlab::testing::build("corner(T(2, Z(4)), 1)").order() == 4);
}

TEST_CASE("evaluation errors") {
  const auto kind_of = [](const char* text) {
    try {
      eval_expr(parse_expr(text), kCfg);
      return std::optional<ErrorKind>{};
    } catch (const Error& err) {
      return std::optional<ErrorKind>{err.kind()};
    }
  };
  CHECK(kind_of("Z(1024)") == ErrorKind::MaxOrderExceeded);
  CHECK(kind_of("M(2, Z(16))") == ErrorKind::MaxOrderExceeded);
  CHECK(kind_of("corner(Z(4), 3)") == ErrorKind::NotIdempotent);
  CHECK(kind_of("corner(Z(4), 9)") == ErrorKind::InvalidArgument);
  CHECK(kind_of("quot(Z(4), [9])") == ErrorKind::InvalidArgument);
  CHECK(kind_of("Z(0)") == ErrorKind::InvalidArgument);
  CHECK(kind_of("F(6)") == ErrorKind::InvalidArgument);
}

TEST_CASE("evaluation attaches construction provenance") {
  const EvalResult gr = ringlab::testing::build_full("GR(F(2), C2)");
  REQUIRE(gr.meta.group_ring.has_value());
  CHECK(gr.meta.group_ring->group.label == "C2");
  CHECK(gr.meta.group_ring->coeff.order() == 2);

  const EvalResult mor = ringlab::testing::build_full("morita(R1)");
  REQUIRE(mor.meta.morita.has_value());
  CHECK(mor.meta.morita->ctx.trivial());
}

TEST_CASE("print-parse round trip on generated expressions") {
  std::mt19937 rng(20250810);
  for (int i = 0; i < 500; ++i) {
    const RingExpr e = random_expr(rng, 3);
    const std::string text = print_expr(e);
    CAPTURE(text);
    CHECK(parse_expr(text) == e);
  }
}
