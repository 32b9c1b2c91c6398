#pragma once

/**
 * @file tower.hpp
 * @brief Iterated towers of finite groups: the symmetric-group tower with
 *        regular stage embeddings, stage-level conjugacy and embedding
 *        checks, and the power tower that conjugates an automorphism onto
 *        its n-th power stage by stage.
 *
 * hall_tower(depth, seed) builds H_0 = seed (regular), H_{k+1} = Sym(|H_k|)
 * with the regular embedding of each stage into the next. Depth counts
 * extension steps and is capped at 3: one step past degree 720 would need
 * 720! points.
 *
 * stage_conjugacy_check aligns isomorphic subgroups of stage k by a
 * conjugator inside Sym(|H_k|), the next stage's carrier. Without explicit
 * pairs it enumerates every subgroup, which requires |H_k| <= 64.
 *
 * generic_power_tower iterates: join A_i with the i-th catalog group
 * (extending g_i by the identity), then extract an n-th root through
 * root_extension, giving A_{i+1} with g_{i+1} = gamma and f_{i+1} =
 * gamma^n. Every stage records f_i = g_i^n and both extension equations
 * through the stage embeddings.
 */

#include "hallforge/certificate.hpp"
#include "hallforge/equivariant.hpp"
#include "hallforge/limits.hpp"
#include "hallforge/perm.hpp"
#include "hallforge/perm_group.hpp"
#include "hallforge/roots.hpp"
#include "hallforge/table_group.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hallforge {

struct TowerStage {
  std::uint32_t degree;
  PermGroup group;
  // Regular images of the previous stage's elements, in enumeration order.
  // Empty at stage 0.
  std::vector<Permutation> embedded;
};

struct HallTower {
  std::vector<TowerStage> stages;
  Certificate certificate;
};

TableGroup default_tower_seed(); // C3

HallTower hall_tower(std::size_t depth,
                     const TableGroup &seed = default_tower_seed(),
                     std::uint32_t degree_cap = limits::default_degree_cap);

struct ConjugacyPair {
  std::vector<Permutation> first_gens, second_gens;
  bool isomorphic;
  // Conjugates the regular image of the first subgroup onto the second's
  // inside Sym(|H_k|). Present exactly when the pair is isomorphic.
  std::optional<Permutation> conjugator;
};

struct ConjugacyReport {
  std::size_t stage;
  std::size_t isomorphic_pairs;
  std::size_t conjugated;
  std::vector<ConjugacyPair> pairs;
};

// With no explicit pairs, enumerates all subgroups of stage k (|H_k| <= 64)
// and checks every unordered pair.
ConjugacyReport stage_conjugacy_check(
    const HallTower &tower, std::size_t k,
    const std::vector<std::pair<std::vector<Permutation>,
                                std::vector<Permutation>>> &pairs = {});

struct EmbeddingReport {
  std::size_t stage;
  std::vector<Permutation> gen_images; // padded regular images of g's generators
  bool contained;                      // all images lie in the stage group
};

// Regular embedding of g into Sym(|g|), padded to the stage degree. The
// default stage is the tower's top.
EmbeddingReport stage_embedding_check(const HallTower &tower,
                                      const TableGroup &g,
                                      std::size_t k = SIZE_MAX);

struct PowerTowerStage {
  // The stage group as an enumerated table, with g and f = g^n as element
  // maps. Absent when the stage only exists as a block permutation carrier
  // (a final stage past the enumeration bound).
  std::optional<TableGroup> table;
  std::vector<std::size_t> g_map, f_map;
};

struct PowerTowerStep {
  TableGroup joined;              // B_i = A_i x (i-th catalog group)
  std::vector<std::size_t> h_map; // g_i extended by the identity
  std::vector<std::size_t> emb_a; // A_i -> B_i positions
  RootResult root;                // realizes A_{i+1}
};

struct PowerTower {
  std::size_t n;
  std::vector<PowerTowerStage> stages; // depth + 1 entries
  std::vector<PowerTowerStep> steps;   // depth entries
  Certificate certificate;
};

PowerTower
generic_power_tower(std::size_t n, std::size_t depth,
                    const EquivariantSystem &seed,
                    std::uint32_t degree_cap = limits::default_degree_cap);

} // namespace hallforge
