#pragma once

/**
 * @file table_group.hpp
 * @brief Abstract finite groups with explicit multiplication.
 *
 * Elements are indices 0..order-1 in a fixed canonical order. The
 * multiplication function is validated on construction: identity and inverse
 * laws exhaustively, closure and associativity exhaustively up to order 200
 * and on a seeded sample above that.
 */

#include "hallforge/perm.hpp"
#include "hallforge/perm_group.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hallforge {

class TableGroup {
public:
  using MulFn = std::function<std::size_t(std::size_t, std::size_t)>;

  // `inverse` is an optional hint (verified, not trusted); without it the
  // inverse of each element is found by scanning.
  TableGroup(std::size_t order, MulFn mul, std::size_t identity = 0,
             std::vector<std::size_t> generators = {},
             std::vector<std::string> labels = {},
             std::vector<std::size_t> inverse = {});

  std::size_t order() const { return n_; }
  std::size_t identity() const { return id_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_(a, b); }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t power(std::size_t a, long long k) const;
  std::size_t element_order(std::size_t a) const;

  // h^-1 · x · h, matching the permutation convention.
  std::size_t conjugate(std::size_t x, std::size_t h) const {
    return mul(mul(inv(h), x), h);
  }

  // Designated generators; defaults to every element.
  const std::vector<std::size_t> &generators() const { return gens_; }

  bool has_labels() const { return !labels_.empty(); }
  std::string label(std::size_t a) const;
  const std::vector<std::string> &labels() const { return labels_; }

  MulFn mul_fn() const { return mul_; }
  bool is_abelian() const;

private:
  std::size_t n_;
  MulFn mul_;
  std::size_t id_;
  std::vector<std::size_t> inv_;
  std::vector<std::size_t> gens_;
  std::vector<std::string> labels_;
};

// A subgroup carried together with its inclusion: element i of `group`
// is element `elements[i]` of the ambient group, ascending.
struct Subgroup {
  TableGroup group;
  std::vector<std::size_t> elements;

  std::size_t to_ambient(std::size_t i) const { return elements[i]; }
  // Position of an ambient element, or npos if outside the subgroup.
  std::size_t from_ambient(std::size_t a) const;
  bool contains_ambient(std::size_t a) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

Subgroup subgroup_generated(const TableGroup &ambient,
                            const std::vector<std::size_t> &gens);

TableGroup direct_product(const TableGroup &a, const TableGroup &b);

// Semidirect product base ⋊ top. action[w] is the element map of an
// automorphism of the base, and w ↦ action[w] must be a left action:
// action[w1·w2] = action[w1] ∘ action[w2]. Pairs (a, w) are packed as
// a·|top| + w and multiply as (a1, w1)(a2, w2) = (a1·action(w1)(a2), w1·w2).
TableGroup semidirect_product(const TableGroup &base, const TableGroup &top,
                              const std::vector<std::vector<std::size_t>> &action);

// The group generated by `gens` inside Sym(degree), tabled in canonical
// enumeration order with cycle-notation labels. `bound` defaults to the
// enumeration bound; callers that knowingly table something larger (the
// catalog's S8, say) pass it explicitly.
TableGroup table_from_perms(std::uint32_t degree,
                            const std::vector<Permutation> &gens,
                            std::size_t bound = 0);

struct RegularRep {
  PermGroup image;               // generated by rho of the designated generators
  std::vector<Permutation> rho;  // rho[g]: x -> x·g, one per element
};

// Right regular representation on 1-indexed points; point i+1 carries
// element i of the canonical order. A homomorphism under the left-to-right
// product convention; faithful and transitive.
RegularRep regular_representation(const TableGroup &g);

} // namespace hallforge
