#include "hallforge/equivariant.hpp"

#include "hallforge/errors.hpp"
#include "hallforge/limits.hpp"

#include <map>
#include <memory>
#include <numeric>

namespace hallforge {

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return m;
}

std::vector<std::size_t> compose_maps(const std::vector<std::size_t> &outer,
                                      const std::vector<std::size_t> &inner) {
  if (outer.size() != inner.size())
    throw Error("map sizes differ in composition");
  std::vector<std::size_t> m(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x)
    m[x] = outer[inner[x]];
  return m;
}

std::vector<std::size_t> invert_map(const std::vector<std::size_t> &m) {
  std::vector<std::size_t> inv(m.size());
  for (std::size_t x = 0; x < m.size(); ++x)
    inv[m[x]] = x;
  return inv;
}

namespace {

void verify_automorphism(const TableGroup &g, const std::vector<std::size_t> &m) {
  GroupHom h = GroupHom::from_element_map(g, g, m);
  if (!h.bijective())
    throw Error("map is not an automorphism");
}

} // namespace

EquivariantSystem make_system(TableGroup g,
                              std::vector<std::vector<std::size_t>> autos) {
  for (const auto &m : autos)
    verify_automorphism(g, m);
  return EquivariantSystem{std::move(g), std::move(autos)};
}

AutomorphismGroup
generated_automorphism_group(const TableGroup &g,
                             const std::vector<std::vector<std::size_t>> &gens) {
  for (const auto &m : gens)
    verify_automorphism(g, m);

  auto maps = std::make_shared<std::vector<std::vector<std::size_t>>>();
  auto index = std::make_shared<std::map<std::vector<std::size_t>, std::size_t>>();
  maps->push_back(identity_map(g.order()));
  index->emplace(maps->front(), 0);

  std::vector<std::size_t> gen_idx;
  for (std::size_t head = 0; head < maps->size(); ++head) {
    for (const auto &m : gens) {
      std::vector<std::size_t> w = compose_maps((*maps)[head], m);
      if (index->emplace(w, maps->size()).second) {
        maps->push_back(std::move(w));
        if (maps->size() > limits::enumeration_bound())
          throw OrderTooLarge("automorphism closure exceeds enumeration bound");
      }
    }
  }
  for (const auto &m : gens)
    gen_idx.push_back(index->at(m));

  auto mul = [maps, index](std::size_t i, std::size_t j) {
    return index->at(compose_maps((*maps)[i], (*maps)[j]));
  };
  TableGroup table(maps->size(), mul, 0, std::move(gen_idx));
  return AutomorphismGroup{std::move(table), *maps};
}

EquivariantEmbedding make_equivariant_embedding(EquivariantSystem source,
                                                EquivariantSystem target,
                                                GroupHom f) {
  if (source.autos.size() != target.autos.size())
    throw NotEquivariant("automorphism tuples have different lengths");
  if (f.domain().order() != source.group.order() ||
      f.codomain().order() != target.group.order())
    throw Error("embedding endpoints do not match the systems");
  if (!f.injective())
    throw Error("equivariant embeddings must be injective");

  for (std::size_t i = 0; i < source.autos.size(); ++i) {
    const auto &alpha = source.autos[i];
    const auto &beta = target.autos[i];
    for (std::size_t a = 0; a < source.group.order(); ++a)
      if (f.apply(alpha[a]) != beta[f.apply(a)])
        throw NotEquivariant("embedding does not intertwine tuple entry " +
                             std::to_string(i));
  }
  return EquivariantEmbedding{std::move(f), std::move(source), std::move(target)};
}

} // namespace hallforge
