#pragma once

/**
 * @file stab_chain.hpp
 * @brief Base and strong generating set (stabilizer chain) for permutation
 *        groups, built with the Schreier-Sims procedure.
 *
 * Two construction strategies share the data structures: the deterministic
 * textbook procedure, which verifies every Schreier generator and is the
 * default for degree <= 64, and a seeded random-word variant for larger
 * degrees that finishes after 64 consecutive trivial sifts. The random
 * variant is bit-for-bit reproducible (fixed seed) and its computed order is
 * always a divisor-free lower bound: the product of orbit sizes counts
 * distinct siftable products, which can never exceed the group order.
 * HALLFORGE_CHAIN_MODE=deterministic|random forces a strategy.
 */

#include "hallforge/bigint.hpp"
#include "hallforge/perm.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hallforge {

class StabChain {
public:
  enum class Mode { Auto, Deterministic, Random };

  StabChain(std::uint32_t degree, const std::vector<Permutation> &generators,
            Mode mode = Mode::Auto);

  std::uint32_t degree() const { return degree_; }
  const BigInt &order() const { return order_; }

  bool contains(const Permutation &p) const;

  // Residue of p after stripping through all levels; identity iff member.
  Permutation sift(const Permutation &p) const;

  std::vector<std::uint32_t> base() const; // 1-indexed base points
  std::vector<std::size_t> orbit_sizes() const;
  const std::vector<Permutation> &strong_generators() const { return sgens_; }
  Mode mode_used() const { return mode_used_; }

private:
  struct Level {
    std::uint32_t beta = 0;               // 0-indexed base point
    std::vector<std::uint32_t> orbit;     // discovery order, orbit[0] == beta
    std::vector<std::int32_t> label;      // -1 unvisited, -2 root, else sgens_ index
    std::vector<std::uint32_t> gen_idx;   // strong generators active here
    std::vector<std::size_t> scanned;     // orbit positions expanded, per gen
    std::vector<std::size_t> done;        // Schreier pairs verified, per gen
  };

  void build_deterministic();
  void build_random();

  void add_level(std::uint32_t beta0);
  void extend_orbit(std::size_t li);

  // Transversal element u with beta^u == point (all 0-indexed).
  Permutation transversal(std::size_t li, std::uint32_t point) const;

  // Strip g through levels [from, end); returns the residue and the level at
  // which stripping stopped (levels_.size() if it ran through).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;

  // Sift g from `from`; register a nontrivial residue as a strong generator
  // (appending a base point if needed). Returns the stuck level, or nullopt
  // if g sifted to the identity.
  std::optional<std::size_t> register_residue(const Permutation &g,
                                              std::size_t from);

  // Scan Schreier generators of level li; returns the registration level of
  // the first failure, or nullopt once the level is complete.
  std::optional<std::size_t> process_level(std::size_t li);

  void recompute_order();

  std::uint32_t degree_;
  std::vector<Permutation> sgens_;
  std::vector<Permutation> sgens_inv_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
  Mode mode_used_ = Mode::Deterministic;
};

} // namespace hallforge
