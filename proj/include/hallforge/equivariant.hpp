#pragma once

/**
 * @file equivariant.hpp
 * @brief Groups equipped with automorphism tuples, and embeddings that
 *        intertwine them.
 *
 * Automorphisms are element maps over a group's canonical order and compose
 * classically: (m1 ∘ m2)(x) = m1(m2(x)), apply the right factor first. The
 * group generated by a set of automorphisms multiplies the same way, so the
 * map w ↦ w's element map is a left action, as semidirect_product expects.
 */

#include "hallforge/homomorphism.hpp"
#include "hallforge/table_group.hpp"

#include <cstddef>
#include <vector>

namespace hallforge {

std::vector<std::size_t> identity_map(std::size_t n);
std::vector<std::size_t> compose_maps(const std::vector<std::size_t> &outer,
                                      const std::vector<std::size_t> &inner);
std::vector<std::size_t> invert_map(const std::vector<std::size_t> &m);

// A group with a tuple of verified automorphisms.
struct EquivariantSystem {
  TableGroup group;
  std::vector<std::vector<std::size_t>> autos;
};

// Verifies each map is an automorphism of g.
EquivariantSystem make_system(TableGroup g,
                              std::vector<std::vector<std::size_t>> autos);

// The group X = <gens> of automorphisms under classic composition.
// Elements are deduplicated by their full element map; element 0 is the
// identity map and the canonical order is closure discovery order.
struct AutomorphismGroup {
  TableGroup table;
  std::vector<std::vector<std::size_t>> maps;

  // Element map of the automorphism that table element w denotes.
  const std::vector<std::size_t> &map_of(std::size_t w) const { return maps[w]; }
};

AutomorphismGroup
generated_automorphism_group(const TableGroup &g,
                             const std::vector<std::vector<std::size_t>> &gens);

// An injective hom f with f ∘ source.autos[i] = target.autos[i] ∘ f for all i.
struct EquivariantEmbedding {
  GroupHom hom;
  EquivariantSystem source;
  EquivariantSystem target;
};

// Verifies injectivity and the intertwining equations elementwise.
EquivariantEmbedding make_equivariant_embedding(EquivariantSystem source,
                                                EquivariantSystem target,
                                                GroupHom f);

} // namespace hallforge
