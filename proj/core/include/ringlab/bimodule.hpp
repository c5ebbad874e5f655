#pragma once

#include <string>
#include <vector>

#include "ringlab/elem_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Finite (A,B)-bimodule: an abelian group with a left A-action and a
/// right B-action, all table-backed.
struct Bimodule {
  FiniteRing left_ring;   // A
  FiniteRing right_ring;  // B
  int order = 0;
  std::vector<Elem> add;        // order x order
  Elem zero = 0;
  std::vector<Elem> left_act;   // |A| x order: (a, m) -> a.m
  std::vector<Elem> right_act;  // order x |B|: (m, b) -> m.b
  std::vector<Elem> neg;
  std::vector<std::string> element_names;
  std::string label;

  Elem add_op(Elem m, Elem n) const { return add[static_cast<size_t>(m) * order + n]; }
  Elem sub_op(Elem m, Elem n) const { return add_op(m, neg[n]); }
  Elem lact(Elem a, Elem m) const { return left_act[static_cast<size_t>(a) * order + m]; }
  Elem ract(Elem m, Elem b) const {
    return right_act[static_cast<size_t>(m) * right_ring.order() + b];
  }
};

/// Checks the abelian-group axioms, biadditivity, unitality and the three
/// action associativity laws. Throws Error(AxiomViolation) with a witness.
void validate_bimodule(const Bimodule& m);

/// R as an (R,R)-bimodule under ring multiplication.
Bimodule regular_bimodule(const FiniteRing& ring);

/// R^2 as an (R,R)-bimodule with componentwise actions.
Bimodule square_bimodule(const FiniteRing& ring);

/// The zero module as an (A,B)-bimodule.
Bimodule zero_bimodule(const FiniteRing& a, const FiniteRing& b);

/// Restricts R to an additive subgroup closed under both multiplications,
/// keeping the inherited (R,R)-actions (e.g. the submodule 2Z4 of Z4).
Bimodule subgroup_bimodule(const FiniteRing& ring, const ElemSet& members);

/// Morita context (A, B, M, N, phi, psi): M an (A,B)-bimodule, N a
/// (B,A)-bimodule, phi : M x N -> A and psi : N x M -> B biadditive and
/// mutually associative.
struct MoritaContext {
  FiniteRing a_ring;
  FiniteRing b_ring;
  Bimodule m;                // (A,B)
  Bimodule n;                // (B,A)
  std::vector<Elem> phi;     // |M| x |N| -> element of A
  std::vector<Elem> psi;     // |N| x |M| -> element of B
  std::string label;

  Elem pair_mn(Elem m_el, Elem n_el) const {
    return phi[static_cast<size_t>(m_el) * n.order + n_el];
  }
  Elem pair_nm(Elem n_el, Elem m_el) const {
    return psi[static_cast<size_t>(n_el) * m.order + m_el];
  }

  /// True iff both pairings are identically zero.
  bool trivial() const;
};

/// Checks bimodule validity of M and N, biadditivity of phi/psi, and the
/// associativity laws (mn)m' = m(nm') and (nm)n' = n(mn').
void validate_morita(const MoritaContext& ctx);

}  // namespace ringlab
