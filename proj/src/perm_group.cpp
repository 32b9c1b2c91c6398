#include "hallforge/perm_group.hpp"

#include "hallforge/errors.hpp"
#include "hallforge/limits.hpp"

#include <string>
#include <unordered_set>

namespace hallforge {

PermGroup::PermGroup(std::uint32_t degree, std::vector<Permutation> generators,
                     StabChain::Mode mode)
    : degree_(degree), gens_(std::move(generators)), mode_(mode) {
  for (const Permutation &g : gens_) {
    if (g.degree() != degree_)
      throw Error("generator degree mismatch");
  }
}

const StabChain &PermGroup::chain() const {
  if (!chain_)
    chain_ = std::make_shared<const StabChain>(degree_, gens_, mode_);
  return *chain_;
}

std::vector<std::uint32_t> PermGroup::orbit(std::uint32_t point) const {
  return hallforge::orbit(degree_, gens_, point);
}

std::vector<std::uint32_t> orbit(std::uint32_t degree,
                                 const std::vector<Permutation> &gens,
                                 std::uint32_t point) {
  if (point == 0 || point > degree)
    throw Error("orbit point " + std::to_string(point) +
                " out of range for degree " + std::to_string(degree));
  std::vector<bool> seen(degree, false);
  std::vector<std::uint32_t> out;
  seen[point - 1] = true;
  out.push_back(point - 1);
  for (std::size_t head = 0; head < out.size(); ++head) {
    std::uint32_t p = out[head];
    for (const Permutation &g : gens) {
      std::uint32_t q = g.image0(p);
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  }
  for (std::uint32_t &p : out)
    ++p;
  return out;
}

std::vector<Permutation> enumerate_elements(const PermGroup &group) {
  return enumerate_elements(group, limits::enumeration_bound());
}

std::vector<Permutation> enumerate_elements(const PermGroup &group,
                                            std::size_t bound) {
  std::vector<Permutation> out;
  std::unordered_set<Permutation, PermHash> seen;
  Permutation id(group.degree());
  seen.insert(id);
  out.push_back(std::move(id));
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const Permutation &g : group.generators()) {
      Permutation w = out[head] * g;
      if (seen.insert(w).second) {
        if (out.size() >= bound)
          throw OrderTooLarge("group order exceeds enumeration bound " +
                              std::to_string(bound));
        out.push_back(std::move(w));
      }
    }
  }
  return out;
}

} // namespace hallforge
