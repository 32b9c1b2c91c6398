#include "hallforge/table_group.hpp"

#include "hallforge/errors.hpp"
#include "hallforge/limits.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <unordered_map>

namespace hallforge {

namespace {

constexpr std::size_t kExhaustiveLimit = 200; // full n^3 associativity below this
constexpr std::size_t kFlatCacheLimit = 1024; // materialize mul table below this
constexpr std::size_t kSampleCount = 20000;
constexpr std::uint64_t kSampleSeed = 0x7461626c65ull;

} // namespace

TableGroup::TableGroup(std::size_t order, MulFn mul, std::size_t identity,
                       std::vector<std::size_t> generators,
                       std::vector<std::string> labels,
                       std::vector<std::size_t> inverse)
    : n_(order), mul_(std::move(mul)), id_(identity), inv_(std::move(inverse)),
      gens_(std::move(generators)), labels_(std::move(labels)) {
  if (n_ == 0)
    throw Error("group must have at least one element");
  if (id_ >= n_)
    throw Error("identity index out of range");
  if (!labels_.empty() && labels_.size() != n_)
    throw Error("label count does not match group order");
  for (std::size_t g : gens_)
    if (g >= n_)
      throw Error("generator index out of range");
  if (gens_.empty()) {
    gens_.resize(n_);
    std::iota(gens_.begin(), gens_.end(), std::size_t{0});
  }

  if (n_ <= kFlatCacheLimit) {
    auto flat = std::make_shared<std::vector<std::uint32_t>>(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        std::size_t v = mul_(a, b);
        if (v >= n_)
          throw Error("multiplication is not closed");
        (*flat)[a * n_ + b] = static_cast<std::uint32_t>(v);
      }
    std::size_t n = n_;
    mul_ = [flat, n](std::size_t a, std::size_t b) {
      return static_cast<std::size_t>((*flat)[a * n + b]);
    };
  }

  for (std::size_t x = 0; x < n_; ++x)
    if (mul_(id_, x) != x || mul_(x, id_) != x)
      throw Error("identity law fails");

  if (n_ <= kExhaustiveLimit) {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        for (std::size_t c = 0; c < n_; ++c)
          if (mul_(mul_(a, b), c) != mul_(a, mul_(b, c)))
            throw Error("multiplication is not associative");
  } else {
    std::mt19937_64 rng(kSampleSeed);
    for (std::size_t t = 0; t < kSampleCount; ++t) {
      std::size_t a = rng() % n_, b = rng() % n_, c = rng() % n_;
      std::size_t ab = mul_(a, b), bc = mul_(b, c);
      if (ab >= n_ || bc >= n_)
        throw Error("multiplication is not closed");
      if (mul_(ab, c) != mul_(a, bc))
        throw Error("multiplication is not associative");
    }
  }

  if (!inv_.empty()) {
    if (inv_.size() != n_)
      throw Error("inverse hint has wrong size");
    for (std::size_t a = 0; a < n_; ++a)
      if (inv_[a] >= n_ || mul_(a, inv_[a]) != id_ || mul_(inv_[a], a) != id_)
        throw Error("inverse hint is wrong");
  } else {
    inv_.assign(n_, n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (mul_(a, b) == id_) {
          if (mul_(b, a) != id_)
            throw Error("one-sided inverse");
          inv_[a] = b;
          break;
        }
      }
      if (inv_[a] == n_)
        throw Error("element without inverse");
    }
  }
}

std::size_t TableGroup::power(std::size_t a, long long k) const {
  if (k < 0)
    return power(inv_[a], -k);
  std::size_t r = id_;
  for (long long i = 0; i < k; ++i)
    r = mul_(r, a);
  return r;
}

std::size_t TableGroup::element_order(std::size_t a) const {
  std::size_t r = a, ord = 1;
  while (r != id_) {
    r = mul_(r, a);
    if (++ord > n_)
      throw Error("element order exceeds group order");
  }
  return ord;
}

std::string TableGroup::label(std::size_t a) const {
  if (!labels_.empty())
    return labels_[a];
  return std::to_string(a);
}

bool TableGroup::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (mul_(a, b) != mul_(b, a))
        return false;
  return true;
}

std::size_t Subgroup::from_ambient(std::size_t a) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), a);
  if (it == elements.end() || *it != a)
    return npos;
  return static_cast<std::size_t>(it - elements.begin());
}

bool Subgroup::contains_ambient(std::size_t a) const {
  return from_ambient(a) != npos;
}

Subgroup subgroup_generated(const TableGroup &ambient,
                            const std::vector<std::size_t> &gens) {
  std::size_t n = ambient.order();
  for (std::size_t g : gens)
    if (g >= n)
      throw Error("subgroup generator out of range");

  std::vector<bool> seen(n, false);
  std::vector<std::size_t> queue;
  seen[ambient.identity()] = true;
  queue.push_back(ambient.identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t g : gens) {
      std::size_t nxt = ambient.mul(queue[head], g);
      if (!seen[nxt]) {
        seen[nxt] = true;
        queue.push_back(nxt);
      }
    }
  }

  std::vector<std::size_t> elems;
  for (std::size_t a = 0; a < n; ++a)
    if (seen[a])
      elems.push_back(a);

  auto pos = std::make_shared<std::vector<std::size_t>>(n, Subgroup::npos);
  for (std::size_t i = 0; i < elems.size(); ++i)
    (*pos)[elems[i]] = i;

  auto shared_elems = std::make_shared<std::vector<std::size_t>>(elems);
  TableGroup::MulFn parent_mul = ambient.mul_fn();
  auto mul = [pos, shared_elems, parent_mul](std::size_t i, std::size_t j) {
    return (*pos)[parent_mul((*shared_elems)[i], (*shared_elems)[j])];
  };

  std::vector<std::size_t> sub_gens;
  for (std::size_t g : gens)
    sub_gens.push_back((*pos)[g]);

  std::vector<std::string> labels;
  if (ambient.has_labels())
    for (std::size_t a : elems)
      labels.push_back(ambient.label(a));

  std::vector<std::size_t> inv;
  inv.reserve(elems.size());
  for (std::size_t a : elems)
    inv.push_back((*pos)[ambient.inv(a)]);

  TableGroup sub(elems.size(), mul, (*pos)[ambient.identity()],
                 std::move(sub_gens), std::move(labels), std::move(inv));
  return Subgroup{std::move(sub), std::move(elems)};
}

TableGroup direct_product(const TableGroup &a, const TableGroup &b) {
  std::size_t na = a.order(), nb = b.order();
  if (na > limits::enumeration_bound() / nb)
    throw OrderTooLarge("product order " + std::to_string(na) + "*" +
                        std::to_string(nb) + " exceeds enumeration bound");

  TableGroup::MulFn mul_a = a.mul_fn();
  TableGroup::MulFn mul_b = b.mul_fn();
  auto mul = [mul_a, mul_b, nb](std::size_t x, std::size_t y) {
    return mul_a(x / nb, y / nb) * nb + mul_b(x % nb, y % nb);
  };

  std::vector<std::size_t> gens;
  for (std::size_t g : a.generators())
    gens.push_back(g * nb + b.identity());
  for (std::size_t h : b.generators())
    gens.push_back(a.identity() * nb + h);

  std::vector<std::string> labels;
  if (a.has_labels() && b.has_labels()) {
    labels.reserve(na * nb);
    for (std::size_t x = 0; x < na; ++x)
      for (std::size_t y = 0; y < nb; ++y)
        labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  }

  std::vector<std::size_t> inv;
  inv.reserve(na * nb);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y)
      inv.push_back(a.inv(x) * nb + b.inv(y));

  return TableGroup(na * nb, mul, a.identity() * nb + b.identity(),
                    std::move(gens), std::move(labels), std::move(inv));
}

TableGroup semidirect_product(const TableGroup &base, const TableGroup &top,
                              const std::vector<std::vector<std::size_t>> &action) {
  std::size_t na = base.order(), nw = top.order();
  if (action.size() != nw)
    throw NotAHomomorphism("action must assign one map per acting element");
  for (const auto &m : action) {
    if (m.size() != na)
      throw NotAHomomorphism("action map has wrong size");
    std::vector<bool> hit(na, false);
    for (std::size_t v : m) {
      if (v >= na || hit[v])
        throw NotAHomomorphism("action map is not a bijection");
      hit[v] = true;
    }
  }
  for (std::size_t x = 0; x < na; ++x)
    if (action[top.identity()][x] != x)
      throw NotAHomomorphism("identity must act trivially");

  // Each map must be an automorphism of the base.
  std::mt19937_64 rng(kSampleSeed);
  for (std::size_t w = 0; w < nw; ++w) {
    const auto &m = action[w];
    if (na <= kFlatCacheLimit) {
      for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < na; ++y)
          if (m[base.mul(x, y)] != base.mul(m[x], m[y]))
            throw NotAHomomorphism("action map is not an automorphism");
    } else {
      for (std::size_t t = 0; t < kSampleCount; ++t) {
        std::size_t x = rng() % na, y = rng() % na;
        if (m[base.mul(x, y)] != base.mul(m[x], m[y]))
          throw NotAHomomorphism("action map is not an automorphism");
      }
    }
  }

  // Left action: acting by w1·w2 equals acting by w2 first, then w1.
  for (std::size_t w1 = 0; w1 < nw; ++w1)
    for (std::size_t w2 = 0; w2 < nw; ++w2) {
      const auto &lhs = action[top.mul(w1, w2)];
      for (std::size_t x = 0; x < na; ++x)
        if (lhs[x] != action[w1][action[w2][x]])
          throw NotAHomomorphism("action is not a left action");
    }

  if (na > limits::enumeration_bound() / nw)
    throw OrderTooLarge("semidirect product order exceeds enumeration bound");

  TableGroup::MulFn mul_a = base.mul_fn();
  TableGroup::MulFn mul_w = top.mul_fn();
  auto act = std::make_shared<std::vector<std::vector<std::size_t>>>(action);
  auto mul = [mul_a, mul_w, act, nw](std::size_t x, std::size_t y) {
    std::size_t a1 = x / nw, w1 = x % nw;
    std::size_t a2 = y / nw, w2 = y % nw;
    return mul_a(a1, (*act)[w1][a2]) * nw + mul_w(w1, w2);
  };

  std::vector<std::size_t> gens;
  for (std::size_t g : base.generators())
    gens.push_back(g * nw + top.identity());
  for (std::size_t w : top.generators())
    gens.push_back(base.identity() * nw + w);

  std::vector<std::string> labels;
  if (base.has_labels() && top.has_labels()) {
    labels.reserve(na * nw);
    for (std::size_t x = 0; x < na; ++x)
      for (std::size_t w = 0; w < nw; ++w)
        labels.push_back("(" + base.label(x) + "," + top.label(w) + ")");
  }

  std::vector<std::size_t> inv;
  inv.reserve(na * nw);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t w = 0; w < nw; ++w) {
      std::size_t wi = top.inv(w);
      inv.push_back((*act)[wi][base.inv(x)] * nw + wi);
    }

  return TableGroup(na * nw, mul, base.identity() * nw + top.identity(),
                    std::move(gens), std::move(labels), std::move(inv));
}

TableGroup table_from_perms(std::uint32_t degree,
                            const std::vector<Permutation> &gens,
                            std::size_t bound) {
  PermGroup pg(degree, gens);
  std::size_t b = bound ? bound : limits::enumeration_bound();
  auto elems = std::make_shared<std::vector<Permutation>>(enumerate_elements(pg, b));
  auto index = std::make_shared<std::unordered_map<Permutation, std::size_t, PermHash>>();
  for (std::size_t i = 0; i < elems->size(); ++i)
    index->emplace((*elems)[i], i);

  auto mul = [elems, index](std::size_t a, std::size_t b) {
    return index->at((*elems)[a] * (*elems)[b]);
  };

  std::vector<std::size_t> gen_idx;
  for (const Permutation &g : gens)
    gen_idx.push_back(index->at(g));

  std::vector<std::string> labels;
  labels.reserve(elems->size());
  for (const Permutation &p : *elems)
    labels.push_back(p.cycles());

  std::vector<std::size_t> inv;
  inv.reserve(elems->size());
  for (const Permutation &p : *elems)
    inv.push_back(index->at(p.inverse()));

  return TableGroup(elems->size(), mul, 0, std::move(gen_idx),
                    std::move(labels), std::move(inv));
}

RegularRep regular_representation(const TableGroup &g) {
  std::size_t n = g.order();
  if (n > limits::enumeration_bound())
    throw OrderTooLarge("regular representation of order " + std::to_string(n) +
                        " exceeds enumeration bound");
  std::vector<Permutation> rho;
  rho.reserve(n);
  for (std::size_t e = 0; e < n; ++e) {
    std::vector<std::uint32_t> img(n);
    for (std::size_t x = 0; x < n; ++x)
      img[x] = static_cast<std::uint32_t>(g.mul(x, e));
    rho.push_back(Permutation::from_images0(std::move(img)));
  }
  std::vector<Permutation> gen_perms;
  for (std::size_t e : g.generators())
    gen_perms.push_back(rho[e]);
  return RegularRep{PermGroup(static_cast<std::uint32_t>(n), std::move(gen_perms)),
                    std::move(rho)};
}

} // namespace hallforge
