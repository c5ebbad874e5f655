#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// AST for ring-construction expressions.
///
/// Grammar (case-insensitive constructor names, whitespace-insensitive):
///   expr  := Z(int) | F(int) | prod(expr, expr...) | M(int, expr)
///          | T(int, expr) | TE(expr) | TE2(expr) | GR(expr, group)
///          | quot(expr, [int, int...]) | corner(expr, int) | morita(name)
struct RingExpr {
  enum class Kind {
    Zmod,            // Z(n)
    Field,           // F(q)
    Product,         // prod(e, ...)
    Matrix,          // M(n, e)
    Triangular,      // T(n, e)
    TrivialExt,      // TE(e): trivial extension by the regular bimodule
    TrivialExtSquare,// TE2(e): trivial extension by the square of the regular bimodule
    GroupRing,       // GR(e, group-name)
    Quotient,        // quot(e, [generators])
    Corner,          // corner(e, idempotent-index)
    MoritaNamed,     // morita(name)
  };

  Kind kind = Kind::Zmod;
  std::vector<RingExpr> args;
  std::vector<int> numbers;  // Z/F/M/T leading integer, corner index
  std::vector<int> list;     // quot generator indices
  std::string name;          // group name / morita name, canonical case

  bool operator==(const RingExpr& other) const;
};

/// Parses `text`; throws Error(ParseError) whose message carries the byte
/// offset and the expected tokens.
RingExpr parse_expr(std::string_view text);

/// Canonical rendering; parse_expr(print_expr(e)) == e.
std::string print_expr(const RingExpr& e);

/// Construction provenance attached to an evaluated expression; at most
/// one member is engaged per node (for the outermost construction).
struct EvalMeta {
  std::optional<ProductRing> product;
  std::optional<MatrixRing> matrix;
  std::optional<TriangularRing> triangular;
  std::optional<TrivialExtensionRing> trivial_ext;
  std::optional<MoritaRing> morita;
  std::optional<GroupRing> group_ring;
  std::optional<QuotientRing> quotient;
  std::optional<CornerRing> corner;
};

struct EvalResult {
  FiniteRing ring;
  EvalMeta meta;
};

/// Evaluates the AST into a constructed ring. Constructions run without
/// the exhaustive axiom scan except Morita contexts, which always
/// validate; call ring.revalidate() for a full check.
EvalResult eval_expr(const RingExpr& e, const Config& cfg);

}  // namespace ringlab
