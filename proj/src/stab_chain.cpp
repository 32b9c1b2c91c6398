#include "hallforge/stab_chain.hpp"

#include "hallforge/errors.hpp"
#include "hallforge/perm_kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

namespace hallforge {

namespace {

StabChain::Mode resolve_mode(StabChain::Mode requested, std::uint32_t degree) {
  if (requested != StabChain::Mode::Auto)
    return requested;
  if (const char *env = std::getenv("HALLFORGE_CHAIN_MODE")) {
    std::string s(env);
    if (s == "deterministic")
      return StabChain::Mode::Deterministic;
    if (s == "random")
      return StabChain::Mode::Random;
  }
  return degree <= 64 ? StabChain::Mode::Deterministic : StabChain::Mode::Random;
}

constexpr std::uint64_t kChainSeed = 0x48414c4c464f5247ull;
constexpr int kRandomMargin = 64;

} // namespace

StabChain::StabChain(std::uint32_t degree,
                     const std::vector<Permutation> &generators, Mode mode)
    : degree_(degree) {
  for (const Permutation &g : generators) {
    if (g.degree() != degree_)
      throw Error("generator degree mismatch in stabilizer chain");
  }
  mode_used_ = resolve_mode(mode, degree_);

  // Insert the input generators; residues become the initial strong set.
  for (const Permutation &g : generators)
    register_residue(g, 0);

  if (!levels_.empty()) {
    if (mode_used_ == Mode::Deterministic)
      build_deterministic();
    else
      build_random();
  }
  recompute_order();
}

void StabChain::add_level(std::uint32_t beta0) {
  Level lv;
  lv.beta = beta0;
  lv.label.assign(degree_, -1);
  lv.label[beta0] = -2;
  lv.orbit.push_back(beta0);
  levels_.push_back(std::move(lv));
}

void StabChain::extend_orbit(std::size_t li) {
  Level &lv = levels_[li];
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t k = 0; k < lv.gen_idx.size(); ++k) {
      const Permutation &s = sgens_[lv.gen_idx[k]];
      for (std::size_t pos = lv.scanned[k]; pos < lv.orbit.size(); ++pos) {
        std::uint32_t q = s.image0(lv.orbit[pos]);
        if (lv.label[q] == -1) {
          lv.label[q] = static_cast<std::int32_t>(lv.gen_idx[k]);
          lv.orbit.push_back(q);
          grew = true;
        }
      }
      lv.scanned[k] = lv.orbit.size();
    }
  }
}

Permutation StabChain::transversal(std::size_t li, std::uint32_t point) const {
  const Level &lv = levels_[li];
  // Collect generator labels walking point -> beta, then multiply forward.
  std::vector<std::uint32_t> path;
  std::uint32_t cur = point;
  while (cur != lv.beta) {
    std::int32_t lab = lv.label[cur];
    path.push_back(static_cast<std::uint32_t>(lab));
    cur = sgens_inv_[static_cast<std::size_t>(lab)].image0(cur);
  }
  Permutation u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    u = u * sgens_[*it];
  return u;
}

std::pair<Permutation, std::size_t> StabChain::strip(Permutation g,
                                                     std::size_t from) const {
  for (std::size_t li = from; li < levels_.size(); ++li) {
    if (g.is_identity())
      return {std::move(g), li};
    const Level &lv = levels_[li];
    std::uint32_t gamma = g.image0(lv.beta);
    if (gamma == lv.beta)
      continue;
    if (lv.label[gamma] == -1)
      return {std::move(g), li};
    while (gamma != lv.beta) {
      const Permutation &sinv =
          sgens_inv_[static_cast<std::size_t>(lv.label[gamma])];
      g = g * sinv;
      gamma = sinv.image0(gamma);
    }
  }
  return {std::move(g), levels_.size()};
}

std::optional<std::size_t> StabChain::register_residue(const Permutation &g,
                                                       std::size_t from) {
  auto [r, j] = strip(g, from);
  if (r.is_identity())
    return std::nullopt;
  if (j == levels_.size())
    add_level(r.smallest_moved_point() - 1);

  std::size_t idx = sgens_.size();
  sgens_inv_.push_back(r.inverse());
  sgens_.push_back(std::move(r));
  for (std::size_t li = from; li <= j && li < levels_.size(); ++li) {
    Level &lv = levels_[li];
    lv.gen_idx.push_back(static_cast<std::uint32_t>(idx));
    lv.scanned.push_back(0);
    lv.done.push_back(0);
    extend_orbit(li);
  }
  return j;
}

std::optional<std::size_t> StabChain::process_level(std::size_t li) {
  Level &lv = levels_[li];
  extend_orbit(li);
  for (std::size_t k = 0; k < lv.gen_idx.size(); ++k) {
    const Permutation &s = sgens_[lv.gen_idx[k]];
    while (lv.done[k] < lv.orbit.size()) {
      std::uint32_t gamma = lv.orbit[lv.done[k]];
      Permutation g = transversal(li, gamma) * s;
      // Stripping from li peels u_gamma * s down to the Schreier generator
      // and keeps sifting; a nontrivial residue is a new strong generator.
      if (auto reg = register_residue(g, li))
        return reg;
      ++lv.done[k];
    }
  }
  return std::nullopt;
}

void StabChain::build_deterministic() {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    if (auto j = process_level(static_cast<std::size_t>(i)))
      i = static_cast<std::ptrdiff_t>(*j);
    else
      --i;
  }
}

void StabChain::build_random() {
  std::mt19937_64 rng(kChainSeed);
  int streak = 0;
  while (streak < kRandomMargin) {
    // Random word over the current strong set, mixed with transversal
    // elements so deep levels get exercised.
    Permutation w(degree_);
    for (int t = 0; t < 10; ++t)
      w = w * sgens_[static_cast<std::size_t>(rng() % sgens_.size())];
    for (int t = 0; t < 2; ++t) {
      std::size_t li = static_cast<std::size_t>(rng() % levels_.size());
      const Level &lv = levels_[li];
      std::uint32_t point =
          lv.orbit[static_cast<std::size_t>(rng() % lv.orbit.size())];
      w = w * transversal(li, point);
    }
    if (register_residue(w, 0))
      streak = 0;
    else
      ++streak;
  }
}

void StabChain::recompute_order() {
  order_ = 1;
  for (const Level &lv : levels_)
    order_ *= static_cast<unsigned long>(lv.orbit.size());
}

bool StabChain::contains(const Permutation &p) const {
  if (p.degree() != degree_)
    return false;
  return sift(p).is_identity();
}

Permutation StabChain::sift(const Permutation &p) const {
  if (p.degree() != degree_)
    throw Error("degree mismatch in sift");
  return strip(p, 0).first;
}

std::vector<std::uint32_t> StabChain::base() const {
  std::vector<std::uint32_t> b;
  b.reserve(levels_.size());
  for (const Level &lv : levels_)
    b.push_back(lv.beta + 1);
  return b;
}

std::vector<std::size_t> StabChain::orbit_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(levels_.size());
  for (const Level &lv : levels_)
    sizes.push_back(lv.orbit.size());
  return sizes;
}

} // namespace hallforge
