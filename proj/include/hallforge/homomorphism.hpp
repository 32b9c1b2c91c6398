#pragma once

/**
 * @file homomorphism.hpp
 * @brief Verified maps between finite groups.
 *
 * Construction always runs the graph-subgroup test: the closure of the pairs
 * (g, image(g)) inside domain x codomain must have exactly as many elements
 * as the subgroup the generators span. A conflict during closure means the
 * images do not define a map. Maps are stored as total element-index arrays
 * over the domain's canonical order.
 */

#include "hallforge/perm.hpp"
#include "hallforge/perm_group.hpp"
#include "hallforge/table_group.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hallforge {

class GroupHom {
public:
  // Derive the full map from images of the domain's designated generators.
  static GroupHom from_generator_images(const TableGroup &domain,
                                        const TableGroup &codomain,
                                        const std::vector<std::size_t> &gen_images);

  // Verify a total element map.
  static GroupHom from_element_map(const TableGroup &domain,
                                   const TableGroup &codomain,
                                   std::vector<std::size_t> images);

  static GroupHom identity(const TableGroup &g);

  const TableGroup &domain() const { return dom_; }
  const TableGroup &codomain() const { return cod_; }
  std::size_t apply(std::size_t a) const { return images_[a]; }
  std::size_t operator()(std::size_t a) const { return images_[a]; }
  const std::vector<std::size_t> &images() const { return images_; }

  bool verified() const { return verified_; }
  bool injective() const { return injective_; }
  bool surjective() const { return surjective_; }
  bool bijective() const { return injective_ && surjective_; }
  std::vector<std::size_t> kernel() const;

  // Apply this, then next.
  GroupHom then(const GroupHom &next) const;
  GroupHom inverse() const; // requires bijective

private:
  GroupHom(TableGroup dom, TableGroup cod, std::vector<std::size_t> images);

  TableGroup dom_;
  TableGroup cod_;
  std::vector<std::size_t> images_;
  bool verified_ = false;
  bool injective_ = false;
  bool surjective_ = false;
};

// Convenience spelling for the generator-image path.
inline GroupHom make_homomorphism(const TableGroup &domain,
                                  const TableGroup &codomain,
                                  const std::vector<std::size_t> &gen_images) {
  return GroupHom::from_generator_images(domain, codomain, gen_images);
}

// Injective verified map from a table group into a symmetric group.
class PermEmbedding {
public:
  static PermEmbedding from_generator_images(const TableGroup &domain,
                                             std::uint32_t degree,
                                             const std::vector<Permutation> &gen_images);

  static PermEmbedding from_element_map(const TableGroup &domain,
                                        std::vector<Permutation> images);

  const TableGroup &domain() const { return dom_; }
  std::uint32_t degree() const { return degree_; }
  const Permutation &apply(std::size_t a) const { return images_[a]; }
  const Permutation &operator()(std::size_t a) const { return images_[a]; }
  const std::vector<Permutation> &images() const { return images_; }

  // Generated by the images of the designated generators.
  PermGroup image_group() const;

private:
  PermEmbedding(TableGroup dom, std::uint32_t degree,
                std::vector<Permutation> images);

  TableGroup dom_;
  std::uint32_t degree_;
  std::vector<Permutation> images_;
};

// An isomorphism between two subgroups B, C of one ambient group,
// given by generator images and closed over B.
class PartialIso {
public:
  PartialIso(const TableGroup &ambient, const std::vector<std::size_t> &domain_gens,
             const std::vector<std::size_t> &gen_images);

  static PartialIso identity_on(const TableGroup &ambient,
                                const std::vector<std::size_t> &gens);

  const TableGroup &ambient() const { return ambient_; }
  const Subgroup &domain_subgroup() const { return dom_; }
  const Subgroup &codomain_subgroup() const { return cod_; }
  std::size_t size() const { return dom_.elements.size(); }

  // Image of an ambient element; the element must lie in the domain subgroup.
  std::size_t apply(std::size_t ambient_elem) const;

  // Ambient image of domain position i.
  std::size_t image_of_position(std::size_t i) const { return map_[i]; }

private:
  TableGroup ambient_;
  Subgroup dom_;
  Subgroup cod_;
  std::vector<std::size_t> map_;
};

// Restriction of an automorphism (as an element map over `ambient`) to an
// invariant subgroup; the result is an element map over sub.group.
// Throws SubgroupNotInvariant if the subgroup is not fixed setwise.
std::vector<std::size_t> restrict_automorphism(const TableGroup &ambient,
                                               const std::vector<std::size_t> &beta,
                                               const Subgroup &sub);

// Brute-force isomorphism search, both orders at most 64. Deterministic:
// the generating sequence is chosen greedily by least index and candidate
// images are tried in ascending index order.
std::optional<GroupHom> find_isomorphism(const TableGroup &g, const TableGroup &h);

} // namespace hallforge
