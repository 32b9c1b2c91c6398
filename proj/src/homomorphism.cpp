#include "hallforge/homomorphism.hpp"

#include "hallforge/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace hallforge {

namespace {

// Pair-closure over (domain element, partner). Starting from (e, e) and
// right-multiplying by the generator pairs, a conflict-free closure that
// assigns every domain element exactly one partner is precisely a
// homomorphism defined on <gens>. Returns the partial partner array
// (npos outside the span). Throws NotAHomomorphism on conflict.
constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::vector<std::size_t> close_graph(const TableGroup &dom, const TableGroup &cod,
                                     const std::vector<std::size_t> &gens,
                                     const std::vector<std::size_t> &gen_images) {
  std::vector<std::size_t> partner(dom.order(), npos);
  partner[dom.identity()] = cod.identity();
  std::vector<std::size_t> queue = {dom.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t a = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::size_t a2 = dom.mul(a, gens[k]);
      std::size_t b2 = cod.mul(partner[a], gen_images[k]);
      if (partner[a2] == npos) {
        partner[a2] = b2;
        queue.push_back(a2);
      } else if (partner[a2] != b2) {
        throw NotAHomomorphism("generator images do not define a homomorphism");
      }
    }
  }
  return partner;
}

} // namespace

GroupHom::GroupHom(TableGroup dom, TableGroup cod, std::vector<std::size_t> images)
    : dom_(std::move(dom)), cod_(std::move(cod)), images_(std::move(images)) {
  std::vector<bool> hit(cod_.order(), false);
  std::size_t distinct = 0;
  injective_ = true;
  for (std::size_t v : images_) {
    if (hit[v])
      injective_ = false;
    else {
      hit[v] = true;
      ++distinct;
    }
  }
  surjective_ = distinct == cod_.order();
  verified_ = true;
}

GroupHom GroupHom::from_generator_images(const TableGroup &domain,
                                         const TableGroup &codomain,
                                         const std::vector<std::size_t> &gen_images) {
  const auto &gens = domain.generators();
  if (gen_images.size() != gens.size())
    throw Error("one image per designated generator required");
  for (std::size_t v : gen_images)
    if (v >= codomain.order())
      throw Error("generator image out of range");

  std::vector<std::size_t> partner = close_graph(domain, codomain, gens, gen_images);
  for (std::size_t a = 0; a < domain.order(); ++a)
    if (partner[a] == npos)
      throw Error("designated generators do not generate the domain");
  return GroupHom(domain, codomain, std::move(partner));
}

GroupHom GroupHom::from_element_map(const TableGroup &domain,
                                    const TableGroup &codomain,
                                    std::vector<std::size_t> images) {
  if (images.size() != domain.order())
    throw Error("element map must cover the domain");
  for (std::size_t v : images)
    if (v >= codomain.order())
      throw Error("element image out of range");

  std::vector<std::size_t> gen_images;
  for (std::size_t g : domain.generators())
    gen_images.push_back(images[g]);
  std::vector<std::size_t> partner =
      close_graph(domain, codomain, domain.generators(), gen_images);
  for (std::size_t a = 0; a < domain.order(); ++a) {
    if (partner[a] == npos)
      throw Error("designated generators do not generate the domain");
    if (partner[a] != images[a])
      throw NotAHomomorphism("element map disagrees with its generator closure");
  }
  return GroupHom(domain, codomain, std::move(images));
}

GroupHom GroupHom::identity(const TableGroup &g) {
  std::vector<std::size_t> images(g.order());
  for (std::size_t a = 0; a < g.order(); ++a)
    images[a] = a;
  return GroupHom(g, g, std::move(images));
}

std::vector<std::size_t> GroupHom::kernel() const {
  std::vector<std::size_t> k;
  for (std::size_t a = 0; a < dom_.order(); ++a)
    if (images_[a] == cod_.identity())
      k.push_back(a);
  return k;
}

GroupHom GroupHom::then(const GroupHom &next) const {
  if (cod_.order() != next.dom_.order())
    throw Error("composition domain mismatch");
  std::vector<std::size_t> comp(dom_.order());
  for (std::size_t a = 0; a < dom_.order(); ++a)
    comp[a] = next.images_[images_[a]];
  return from_element_map(dom_, next.cod_, std::move(comp));
}

GroupHom GroupHom::inverse() const {
  if (!bijective())
    throw Error("only bijective maps invert");
  std::vector<std::size_t> inv(cod_.order());
  for (std::size_t a = 0; a < dom_.order(); ++a)
    inv[images_[a]] = a;
  return from_element_map(cod_, dom_, std::move(inv));
}

PermEmbedding::PermEmbedding(TableGroup dom, std::uint32_t degree,
                             std::vector<Permutation> images)
    : dom_(std::move(dom)), degree_(degree), images_(std::move(images)) {
  for (std::size_t a = 0; a < dom_.order(); ++a)
    if (images_[a].is_identity() && a != dom_.identity())
      throw Error("map into the symmetric group is not injective");
}

PermEmbedding PermEmbedding::from_generator_images(
    const TableGroup &domain, std::uint32_t degree,
    const std::vector<Permutation> &gen_images) {
  const auto &gens = domain.generators();
  if (gen_images.size() != gens.size())
    throw Error("one image per designated generator required");
  for (const Permutation &p : gen_images)
    if (p.degree() != degree)
      throw Error("generator image degree mismatch");

  std::vector<std::optional<Permutation>> partner(domain.order());
  partner[domain.identity()] = Permutation(degree);
  std::vector<std::size_t> queue = {domain.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t a = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::size_t a2 = domain.mul(a, gens[k]);
      Permutation b2 = *partner[a] * gen_images[k];
      if (!partner[a2]) {
        partner[a2] = std::move(b2);
        queue.push_back(a2);
      } else if (*partner[a2] != b2) {
        throw NotAHomomorphism("generator images do not define a homomorphism");
      }
    }
  }

  std::vector<Permutation> images;
  images.reserve(domain.order());
  for (std::size_t a = 0; a < domain.order(); ++a) {
    if (!partner[a])
      throw Error("designated generators do not generate the domain");
    images.push_back(std::move(*partner[a]));
  }
  return PermEmbedding(domain, degree, std::move(images));
}

PermEmbedding PermEmbedding::from_element_map(const TableGroup &domain,
                                              std::vector<Permutation> images) {
  if (images.size() != domain.order())
    throw Error("element map must cover the domain");
  std::uint32_t degree = images.empty() ? 0 : images[0].degree();
  for (const Permutation &p : images)
    if (p.degree() != degree)
      throw Error("image degrees differ");

  std::vector<Permutation> gen_images;
  for (std::size_t g : domain.generators())
    gen_images.push_back(images[g]);
  PermEmbedding derived = from_generator_images(domain, degree, gen_images);
  for (std::size_t a = 0; a < domain.order(); ++a)
    if (derived.images_[a] != images[a])
      throw NotAHomomorphism("element map disagrees with its generator closure");
  return derived;
}

PermGroup PermEmbedding::image_group() const {
  std::vector<Permutation> gens;
  for (std::size_t g : dom_.generators())
    gens.push_back(images_[g]);
  return PermGroup(degree_, std::move(gens));
}

PartialIso::PartialIso(const TableGroup &ambient,
                       const std::vector<std::size_t> &domain_gens,
                       const std::vector<std::size_t> &gen_images)
    : ambient_(ambient), dom_(subgroup_generated(ambient, domain_gens)),
      cod_(subgroup_generated(ambient, gen_images)) {
  if (dom_.elements.size() != cod_.elements.size())
    throw Error("partial map endpoints have different orders");

  std::vector<std::size_t> sub_images;
  for (std::size_t v : gen_images)
    sub_images.push_back(cod_.from_ambient(v));
  // An empty generator list means the trivial subgroup, whose table
  // designates the identity as its only generator.
  if (domain_gens.empty())
    sub_images.push_back(cod_.group.identity());

  TableGroup dom_table = dom_.group; // designated gens = domain_gens positions
  GroupHom iso = GroupHom::from_generator_images(dom_table, cod_.group, sub_images);
  if (!iso.bijective())
    throw Error("partial map is not an isomorphism");

  map_.resize(dom_.elements.size());
  for (std::size_t i = 0; i < map_.size(); ++i)
    map_[i] = cod_.to_ambient(iso.apply(i));
}

PartialIso PartialIso::identity_on(const TableGroup &ambient,
                                   const std::vector<std::size_t> &gens) {
  return PartialIso(ambient, gens, gens);
}

std::size_t PartialIso::apply(std::size_t ambient_elem) const {
  std::size_t pos = dom_.from_ambient(ambient_elem);
  if (pos == Subgroup::npos)
    throw Error("element outside the partial map's domain");
  return map_[pos];
}

std::vector<std::size_t> restrict_automorphism(const TableGroup &ambient,
                                               const std::vector<std::size_t> &beta,
                                               const Subgroup &sub) {
  if (beta.size() != ambient.order())
    throw Error("automorphism map must cover the ambient group");

  std::vector<std::size_t> restricted(sub.elements.size());
  for (std::size_t i = 0; i < sub.elements.size(); ++i) {
    std::size_t img = beta[sub.elements[i]];
    std::size_t pos = sub.from_ambient(img);
    if (pos == Subgroup::npos)
      throw SubgroupNotInvariant("subgroup is not invariant under the map");
    restricted[i] = pos;
  }

  GroupHom check = GroupHom::from_element_map(sub.group, sub.group, restricted);
  if (!check.bijective())
    throw Error("restriction is not an automorphism");
  return restricted;
}

namespace {

// Partial-map consistency for the isomorphism search: close the graph of the
// chosen generator pairs, reject on conflict or on a non-injective partner.
bool consistent_partial(const TableGroup &g, const TableGroup &h,
                        const std::vector<std::size_t> &gens,
                        const std::vector<std::size_t> &images) {
  std::vector<std::size_t> partner(g.order(), npos);
  std::vector<std::size_t> reverse(h.order(), npos);
  partner[g.identity()] = h.identity();
  reverse[h.identity()] = g.identity();
  std::vector<std::size_t> queue = {g.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t a = queue[head];
    for (std::size_t k = 0; k < images.size(); ++k) {
      std::size_t a2 = g.mul(a, gens[k]);
      std::size_t b2 = h.mul(partner[a], images[k]);
      if (partner[a2] == npos) {
        if (reverse[b2] != npos)
          return false;
        partner[a2] = b2;
        reverse[b2] = a2;
        queue.push_back(a2);
      } else if (partner[a2] != b2) {
        return false;
      }
    }
  }
  return true;
}

bool search_images(const TableGroup &g, const TableGroup &h,
                   const std::vector<std::size_t> &gens,
                   const std::vector<std::size_t> &g_orders,
                   const std::vector<std::size_t> &h_orders,
                   std::vector<std::size_t> &images, std::size_t k) {
  if (k == gens.size())
    return true;
  for (std::size_t b = 0; b < h.order(); ++b) {
    if (h_orders[b] != g_orders[gens[k]])
      continue;
    images.push_back(b);
    if (consistent_partial(g, h, gens, images) &&
        search_images(g, h, gens, g_orders, h_orders, images, k + 1))
      return true;
    images.pop_back();
  }
  return false;
}

} // namespace

std::optional<GroupHom> find_isomorphism(const TableGroup &g, const TableGroup &h) {
  if (g.order() > 64 || h.order() > 64)
    throw Error("isomorphism search is limited to order 64");
  if (g.order() != h.order())
    return std::nullopt;

  std::vector<std::size_t> g_orders(g.order()), h_orders(h.order());
  for (std::size_t a = 0; a < g.order(); ++a)
    g_orders[a] = g.element_order(a);
  for (std::size_t b = 0; b < h.order(); ++b)
    h_orders[b] = h.element_order(b);
  {
    auto gp = g_orders, hp = h_orders;
    std::sort(gp.begin(), gp.end());
    std::sort(hp.begin(), hp.end());
    if (gp != hp)
      return std::nullopt;
  }

  // Greedy generating sequence: always the least element outside the closure.
  std::vector<std::size_t> gens;
  Subgroup span = subgroup_generated(g, {});
  while (span.elements.size() < g.order()) {
    for (std::size_t a = 0; a < g.order(); ++a) {
      if (!span.contains_ambient(a)) {
        gens.push_back(a);
        break;
      }
    }
    span = subgroup_generated(g, gens);
  }

  std::vector<std::size_t> images;
  if (!search_images(g, h, gens, g_orders, h_orders, images, 0))
    return std::nullopt;

  if (gens.empty()) // both trivial
    return GroupHom::from_element_map(g, h,
                                      std::vector<std::size_t>{h.identity()});

  // Rebuild the full element map from the successful assignment.
  TableGroup dom(g.order(), g.mul_fn(), g.identity(), gens,
                 g.has_labels() ? g.labels() : std::vector<std::string>{});
  GroupHom iso = GroupHom::from_generator_images(dom, h, images);
  return GroupHom::from_element_map(g, h, iso.images());
}

} // namespace hallforge
