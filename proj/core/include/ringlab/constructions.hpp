#pragma once

#include <array>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ringlab/bimodule.hpp"
#include "ringlab/config.hpp"
#include "ringlab/elem_set.hpp"
#include "ringlab/group.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// Composite elements are encoded least-significant-component-first: the
// first component of a tuple is the lowest mixed-radix digit.

struct ProductRing {
  FiniteRing ring;
  std::vector<FiniteRing> factors;
  std::vector<int> strides;

  std::vector<Elem> components(Elem x) const;
  Elem compose(std::span<const Elem> parts) const;
};

struct MatrixRing {
  FiniteRing ring;
  FiniteRing base;
  int n = 0;

  std::vector<Elem> entries(Elem x) const;          // n*n, row-major
  Elem from_entries(std::span<const Elem> e) const;
};

struct TriangularRing {
  FiniteRing ring;
  FiniteRing base;
  int n = 0;
  std::vector<std::pair<int, int>> positions;  // (row, col), row-major, row <= col

  std::vector<Elem> entries(Elem x) const;          // one per position
  Elem from_entries(std::span<const Elem> e) const;
};

struct QuotientRing {
  FiniteRing ring;
  FiniteRing base;
  std::vector<Elem> projection;      // base index -> quotient index
  std::vector<Elem> representative;  // quotient index -> canonical base index
};

struct CornerRing {
  FiniteRing ring;
  FiniteRing base;
  Elem idempotent = 0;
  std::vector<Elem> to_base;  // corner index -> base index
  std::vector<int> from_base; // base index -> corner index or -1
};

struct TrivialExtensionRing {
  FiniteRing ring;
  FiniteRing base;
  Bimodule module;

  Elem encode(Elem r, Elem m) const;
  std::pair<Elem, Elem> decode(Elem x) const;
};

struct MoritaRing {
  FiniteRing ring;
  MoritaContext ctx;

  Elem encode(Elem a, Elem m, Elem n, Elem b) const;
  std::array<Elem, 4> decode(Elem x) const;  // (a, m, n, b)
};

struct GroupRing {
  FiniteRing ring;
  FiniteRing coeff;
  FiniteGroup group;
  std::vector<Elem> augmentation;     // RG index -> R index, x -> sum of coeffs
  std::vector<Elem> coeff_embedding;  // R index -> RG index (coeff at identity)

  std::vector<Elem> coefficients(Elem x) const;      // one per group element
  Elem from_coefficients(std::span<const Elem> c) const;
};

ProductRing direct_product(std::vector<FiniteRing> factors, const Config& cfg,
                           FiniteRing::Validate validate = FiniteRing::Validate::Off);

MatrixRing matrix_ring(const FiniteRing& base, int n, const Config& cfg,
                       FiniteRing::Validate validate = FiniteRing::Validate::Off);

TriangularRing upper_triangular_ring(const FiniteRing& base, int n, const Config& cfg,
                                     FiniteRing::Validate validate = FiniteRing::Validate::Off);

/// Coset ring R/I for a two-sided ideal I; cosets are indexed by their
/// smallest member, ascending, so the zero coset is element 0.
/// Throws Error(NotAnIdeal) if `ideal` fails the two-sided ideal test.
QuotientRing quotient_ring(const FiniteRing& base, const ElemSet& ideal,
                           std::string label = {});

/// eRe with identity e. Throws Error(NotIdempotent) unless e^2 = e.
CornerRing corner_ring(const FiniteRing& base, Elem e);

/// T(R, M): pairs (r, m) with (r,m)(s,n) = (rs, r.n + m.s).
TrivialExtensionRing trivial_extension(const FiniteRing& base, Bimodule module,
                                       const Config& cfg,
                                       FiniteRing::Validate validate = FiniteRing::Validate::Off);

/// 2x2 Morita context ring over (A, B, M, N, phi, psi). The context and
/// the resulting tables are always fully validated: an incompatible
/// pairing must fail loudly.
MoritaRing morita_ring(MoritaContext ctx, const Config& cfg);

/// Convolution ring R[G] plus the coefficient-sum map, which is checked to
/// be a surjective ring homomorphism onto R.
GroupRing group_ring(const FiniteRing& coeff, const FiniteGroup& g, const Config& cfg,
                     FiniteRing::Validate validate = FiniteRing::Validate::Off);

/// Kernel of the coefficient-sum map inside group_ring(coeff, g).
ElemSet augmentation_ideal(const GroupRing& gr);
ElemSet augmentation_ideal(const FiniteRing& coeff, const FiniteGroup& g, const Config& cfg);

/// Built-in Morita contexts over Z4/F4 used throughout the test corpus:
///   R1   = (Z4, 2Z4; 2Z4, Z4)   products as in Z4 (trivial: 2*2 = 0)
///   R2   = (Z4, 2Z4; 0,   Z4)   formal triangular shape
///   R1N  = (Z4, 2Z4; Z4,  Z4)   nontrivial, trace ideals inside J
///   R2N  = (Z4, Z4;  2Z4, Z4)   nontrivial, trace ideals inside J
///   M2Z4 = (Z4, Z4;  Z4,  Z4)   full context, i.e. the 2x2 matrix ring
///   Z4F4 = (Z4, 0;   0,   F4)   zero modules, i.e. Z4 x F4
MoritaContext morita_example(std::string_view name);
const std::vector<std::string>& morita_example_names();

}  // namespace ringlab
