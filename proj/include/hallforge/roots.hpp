#pragma once

/**
 * @file roots.hpp
 * @brief Overgroups that realize automorphisms by conjugation, and n-th
 *        roots of automorphisms.
 *
 * commuting_extension(B, A, alpha, beta) embeds B into a finite group C
 * containing commuting elements f and g with
 *
 *   e(x)^f = e(alpha(x))  for x in A,
 *   e(y)^g = e(beta(y))   for y in B,
 *
 * where e is the embedding. alpha is an automorphism of the subgroup A
 * given in position space, beta an automorphism of B in element space;
 * beta must map A onto itself and commute with alpha on A.
 *
 * root_extension(B, A, alpha, beta, n) additionally assumes alpha^n = beta
 * on A and produces an overgroup C of B (embedded by phi) together with a
 * carrier permutation T whose conjugation action gamma satisfies
 *
 *   gamma∘phi = phi∘alpha    on A,
 *   gamma^n∘phi = phi∘beta   on B.
 *
 * C is the n-fold direct power of the commuting extension's group D; it is
 * realized on the regular carrier of the tabled power when |D|^n fits the
 * enumeration bound ("table") and on n disjoint blocks of D's carrier
 * otherwise ("blocks"). Only the table realization can be tabled further,
 * so only it fills c_table, gamma_map and phi_index.
 */

#include "hallforge/certificate.hpp"
#include "hallforge/limits.hpp"
#include "hallforge/perm.hpp"
#include "hallforge/perm_group.hpp"
#include "hallforge/table_group.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hallforge {

struct CommutingResult {
  std::uint32_t degree;
  PermGroup c;
  Permutation f, g;
  std::vector<Permutation> e; // one embedded image per element of B
  Certificate certificate;
};

CommutingResult
commuting_extension(const TableGroup &b, const Subgroup &a,
                    const std::vector<std::size_t> &alpha,
                    const std::vector<std::size_t> &beta,
                    std::uint32_t degree_cap = limits::default_degree_cap);

struct RootResult {
  std::uint32_t degree;
  std::string realization; // "table" or "blocks"
  PermGroup c;
  Permutation t;                // conjugation by t realizes gamma
  std::vector<Permutation> phi; // one embedded image per element of B
  std::optional<TableGroup> c_table;
  std::vector<std::size_t> gamma_map; // gamma in c_table element space
  std::vector<std::size_t> phi_index; // phi(B) as c_table positions
  CommutingResult base;
  Certificate certificate;
};

RootResult root_extension(const TableGroup &b, const Subgroup &a,
                          const std::vector<std::size_t> &alpha,
                          const std::vector<std::size_t> &beta, std::size_t n,
                          std::uint32_t degree_cap = limits::default_degree_cap);

} // namespace hallforge
