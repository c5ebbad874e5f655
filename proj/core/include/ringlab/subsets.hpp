#pragma once

#include <span>
#include <vector>

#include "ringlab/elem_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// U(R) together with the two-sided inverse of every unit.
struct UnitTable {
  ElemSet units;
  std::vector<Elem> inverse;  // indexed by element; meaningful only on units

  Elem inverse_of(Elem u) const { return inverse[u]; }
};

enum class Side { Left, Right, TwoSided };

/// One- or two-sided ideal lattice with its maximal members marked.
struct IdealLattice {
  Side side = Side::TwoSided;
  std::vector<ElemSet> ideals;
  std::vector<int> maximal;  // indices into `ideals` of maximal proper ideals
};

/// Exhaustive unit scan: u is a unit iff some v has uv = vu = 1.
UnitTable units(const FiniteRing& ring);

/// { e : e^2 = e }
ElemSet idempotents(const FiniteRing& ring);

/// { a : a^k = 0 for some k <= order }. Powers of a cycle within `order`
/// steps, so the bound is exact.
ElemSet nilpotents(const FiniteRing& ring);

/// J(R) = { x : 1 - r*x is a unit for every r }. For finite rings this
/// quasi-regularity scan is exact.
ElemSet jacobson_radical(const FiniteRing& ring, const UnitTable& ut);
ElemSet jacobson_radical(const FiniteRing& ring);

/// Delta(R) = { x : 1 - x*u is a unit for every unit u }.
ElemSet delta_set(const FiniteRing& ring, const UnitTable& ut);
ElemSet delta_set(const FiniteRing& ring);

/// Mirror form { x : 1 - u*x is a unit for every unit u }; used to check
/// the left/right symmetry of delta_set.
ElemSet delta_set_left(const FiniteRing& ring, const UnitTable& ut);

/// Lower nilradical. A finite ring is artinian, so J(R) is a nilpotent
/// ideal containing every nil ideal and the two radicals coincide; this
/// simply returns jacobson_radical.
ElemSet lower_nilradical(const FiniteRing& ring, const UnitTable& ut);

/// { z : zr = rz for all r }
ElemSet center(const FiniteRing& ring);

/// { r : r*a = 0 } and { r : a*r = 0 }.
ElemSet left_annihilator(const FiniteRing& ring, Elem a);
ElemSet right_annihilator(const FiniteRing& ring, Elem a);

/// Smallest one- or two-sided ideal containing `generators`.
ElemSet ideal_generated_by(const FiniteRing& ring, std::span<const Elem> generators,
                           Side side);

bool is_additive_subgroup(const FiniteRing& ring, const ElemSet& s);
bool is_two_sided_ideal(const FiniteRing& ring, const ElemSet& s);

/// All ideals of the given side, built by closing principal ideals under
/// pairwise sums. Throws Error(BudgetExceeded) once more than `budget`
/// distinct ideals appear.
IdealLattice ideal_lattice(const FiniteRing& ring, Side side, int budget);

/// Intersection of the maximal ideals of a computed lattice (the whole
/// ring when there are none, i.e. the zero ring).
ElemSet intersect_maximal(const FiniteRing& ring, const IdealLattice& lattice);

}  // namespace ringlab
