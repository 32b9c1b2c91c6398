#pragma once

/**
 * @file amalgam.hpp
 * @brief Completing spans of group embeddings to commuting squares, plain
 *        and equivariant.
 *
 * The plain construction joins B and C over A inside the symmetric group
 * on |B|·|C| points: the two copies of A inside B×C are isomorphic, an
 * alignment conjugator h makes them equal, and r(b) = rho(b,1)^h,
 * s(c) = rho(1,c) embed both factors with r∘f = s∘g.
 *
 * The equivariant pipeline carries automorphism tuples along: restriction
 * epimorphisms onto the common automorphism group X, the fiber product W
 * of the two full tuples over X, semidirect products A⋊W, B⋊W, C⋊W, a
 * plain amalgamation of those, and conjugation automorphisms delta_i
 * induced by the W-coordinates (beta_i, gamma_i). Every claimed equation
 * lands in the result certificate.
 */

#include "hallforge/certificate.hpp"
#include "hallforge/equivariant.hpp"
#include "hallforge/homomorphism.hpp"
#include "hallforge/limits.hpp"
#include "hallforge/perm.hpp"
#include "hallforge/perm_group.hpp"
#include "hallforge/table_group.hpp"

#include <cstdint>
#include <vector>

namespace hallforge {

struct AmalgamResult {
  std::uint32_t degree;       // carrier points, |B|·|C|
  std::vector<Permutation> r; // embedding image per B element
  std::vector<Permutation> s; // embedding image per C element
  PermGroup d;                // <r(B), s(C)>
  Certificate certificate;
};

// Completes f: A->B, g: A->C to r: B->D, s: C->D with r∘f = s∘g.
// Both inputs must be injective and share the same domain table.
AmalgamResult amalgamate(const GroupHom &f, const GroupHom &g,
                         std::uint32_t degree_cap = limits::default_degree_cap);

struct RestrictionResult {
  AutomorphismGroup image; // X: the restrictions, as automorphisms of A
  GroupHom phi;            // Y.table -> X.table, surjective
};

// phi(y) = f^-1 ∘ (y restricted to f(A)) ∘ f for a group Y of
// automorphisms of f's codomain. Every element of Y must leave f(A)
// setwise invariant; otherwise SubgroupNotInvariant.
// Satisfies f∘phi(y) = y∘f elementwise.
RestrictionResult restriction_epimorphism(const AutomorphismGroup &y,
                                          const GroupHom &f);

struct FiberProduct {
  TableGroup w;                   // pairs (y,z) with phi(y) = psi(z)
  std::vector<std::size_t> pairs; // packed y·|Z|+z, ascending
  GroupHom proj_y;
  GroupHom proj_z;
};

// Requires both maps surjective onto the same codomain table. The result
// satisfies |W|·|X| = |Y|·|Z| and both projections are surjective.
FiberProduct fiber_product(const GroupHom &phi, const GroupHom &psi);

struct EquivariantAmalgamResult {
  TableGroup l, m, n;            // A⋊W, B⋊W, C⋊W
  FiberProduct w;
  GroupHom f_tilde, g_tilde;     // L->M, L->N
  AmalgamResult inner;           // inner.r over M, inner.s over N
  std::vector<Permutation> delta; // conjugators delta~_i in the ambient
  std::vector<Permutation> s;    // composite embedding per B element
  std::vector<Permutation> t;    // composite embedding per C element
  Certificate certificate;
};

// The full equivariant amalgamation. The systems must carry tuples of one
// common length n; f and g must intertwine them (NotEquivariant if not).
// With n = 0 this degenerates to the plain amalgamation. Errors from
// oversized intermediates name the pipeline stage.
EquivariantAmalgamResult
equivariant_amalgamate(const EquivariantSystem &a, const EquivariantSystem &b,
                       const EquivariantSystem &c, const GroupHom &f,
                       const GroupHom &g,
                       std::uint32_t degree_cap = limits::default_degree_cap);

struct JointEmbedding {
  EquivariantSystem product;
  EquivariantEmbedding from_a;
  EquivariantEmbedding from_b;
};

// Direct product with componentwise automorphisms; both coordinate
// embeddings are equivariant.
JointEmbedding equivariant_joint_embed(const EquivariantSystem &a,
                                       const EquivariantSystem &b);

} // namespace hallforge
