#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/elem_set.hpp"

namespace ringlab {

/// Finite group given by a Cayley table.
struct FiniteGroup {
  int order = 0;
  std::vector<Elem> mul;  // order x order, row-major
  Elem identity = 0;
  std::string label;
  std::vector<std::string> element_names;

  Elem op(Elem a, Elem b) const { return mul[static_cast<size_t>(a) * order + b]; }
  Elem inverse(Elem a) const;
  int element_order(Elem a) const;
  bool is_abelian() const;
};

/// Exhaustive group-axiom check; throws Error(AxiomViolation) with witness.
void validate_group(const FiniteGroup& g);

FiniteGroup cyclic_group(int n);
FiniteGroup group_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup symmetric_3();
FiniteGroup dihedral_4();
FiniteGroup quaternion_8();

/// C1, C2, C3, C4, C2xC2, C5, S3, C8, D4, Q8 — validated tables.
const std::vector<FiniteGroup>& standard_groups();

/// Catalog lookup by label, case-insensitive.
std::optional<FiniteGroup> group_by_name(std::string_view name);

/// True iff every element order is a power of the prime p.
bool is_p_group(const FiniteGroup& g, int p);

}  // namespace ringlab
