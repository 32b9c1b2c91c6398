#pragma once

/**
 * @file hrushovski.hpp
 * @brief Realizing partial isomorphisms of a finite group as conjugation
 *        inside the symmetric group on its elements.
 *
 * The right regular representation rho puts G on |G| points. For a partial
 * isomorphism psi: K -> K' between subgroups of G, the orbits of rho(K)
 * are the cosets xK; matching them against the rho(K')-orbits in ascending
 * order of their least points and sending x_i·k to x'_i·psi(k) gives a
 * permutation h with rho(k)^h = rho(psi(k)) for every k in K. One ambient
 * Sym(|G|) carries any number of such conjugators simultaneously.
 */

#include "hallforge/certificate.hpp"
#include "hallforge/homomorphism.hpp"
#include "hallforge/limits.hpp"
#include "hallforge/perm.hpp"
#include "hallforge/table_group.hpp"

#include <cstdint>
#include <vector>

namespace hallforge {

// The alignment conjugator. Deterministic: orbit representatives are the
// least points of their orbits, matched in ascending order. Self-checks
// the contract rho(k)^h = rho(psi(k)) before returning.
Permutation align_conjugator(const TableGroup &g, const PartialIso &psi);

struct ExtensionResult {
  std::uint32_t degree; // points of the ambient symmetric group, = |A|
  RegularRep rho;
  std::vector<Permutation> conjugators; // one per input isomorphism
  Certificate certificate;
};

// Embeds A regularly and realizes every psi as an inner automorphism of
// Sym(|A|). The certificate is verified before return. Throws
// DegreeCapExceeded when |A| > degree_cap.
ExtensionResult
hrushovski_extend(const TableGroup &a, const std::vector<PartialIso> &psis,
                  std::uint32_t degree_cap = limits::default_degree_cap);

} // namespace hallforge
