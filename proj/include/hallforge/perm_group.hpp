#pragma once

/**
 * @file perm_group.hpp
 * @brief Finite permutation groups: generators, lazily built stabilizer
 *        chain, orbits, and bounded element enumeration.
 */

#include "hallforge/bigint.hpp"
#include "hallforge/perm.hpp"
#include "hallforge/stab_chain.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace hallforge {

class PermGroup {
public:
  // An empty generator list gives the trivial group of that degree.
  PermGroup(std::uint32_t degree, std::vector<Permutation> generators,
            StabChain::Mode mode = StabChain::Mode::Auto);

  std::uint32_t degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return gens_; }

  // The chain is built on first use and shared by copies.
  const StabChain &chain() const;
  const BigInt &order() const { return chain().order(); }
  bool contains(const Permutation &p) const { return chain().contains(p); }
  bool is_trivial() const { return order() == 1; }

  // Orbit of a 1-indexed point, in breadth-first discovery order with the
  // generators applied in input order.
  std::vector<std::uint32_t> orbit(std::uint32_t point) const;

private:
  std::uint32_t degree_;
  std::vector<Permutation> gens_;
  StabChain::Mode mode_;
  mutable std::shared_ptr<const StabChain> chain_;
};

// Orbit of `point` under `gens`, breadth-first, generators in input order.
std::vector<std::uint32_t> orbit(std::uint32_t degree,
                                 const std::vector<Permutation> &gens,
                                 std::uint32_t point);

// Every element exactly once, in breadth-first closure order from the
// identity (generators applied in input order). Throws OrderTooLarge when
// the group has more than `bound` elements.
std::vector<Permutation> enumerate_elements(const PermGroup &group);
std::vector<Permutation> enumerate_elements(const PermGroup &group,
                                            std::size_t bound);

} // namespace hallforge
