#include "hallforge/tower.hpp"

#include "hallforge/amalgam.hpp"
#include "hallforge/bigint.hpp"
#include "hallforge/catalog.hpp"
#include "hallforge/errors.hpp"
#include "hallforge/homomorphism.hpp"
#include "hallforge/hrushovski.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hallforge {

namespace {

using json = nlohmann::json;
using CB = CertificateBuilder;

std::vector<std::string> cycles_of(const std::vector<Permutation> &perms) {
  std::vector<std::string> out;
  out.reserve(perms.size());
  for (const Permutation &p : perms)
    out.push_back(p.cycles());
  return out;
}

std::vector<Permutation> symmetric_gens(std::uint32_t n) {
  if (n < 2)
    return {Permutation(n == 0 ? 1 : n)};
  std::vector<std::uint32_t> t, c;
  for (std::uint32_t i = 1; i <= n; ++i) {
    t.push_back(i);
    c.push_back(i % n + 1);
  }
  std::swap(t[0], t[1]);
  if (n == 2)
    return {Permutation::from_images(t)};
  return {Permutation::from_images(t), Permutation::from_images(c)};
}

Permutation table_right_mul(const TableGroup &g, std::size_t e) {
  std::vector<std::uint32_t> img(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    img[x] = static_cast<std::uint32_t>(g.mul(x, e));
  return Permutation::from_images0(std::move(img));
}

Permutation perm_of_map(const std::vector<std::size_t> &m) {
  std::vector<std::uint32_t> img(m.begin(), m.end());
  return Permutation::from_images0(std::move(img));
}

// Every subgroup, found by closing each known subgroup with each outside
// element. Element lists come back sorted by (size, elements).
std::vector<std::vector<std::size_t>> all_subgroups(const TableGroup &g) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
      queue;
  Subgroup triv = subgroup_generated(g, {g.identity()});
  seen.insert(triv.elements);
  queue.push_back({triv.elements, {g.identity()}});
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    auto cur = queue[qi];
    for (std::size_t e = 0; e < g.order(); ++e) {
      if (std::binary_search(cur.first.begin(), cur.first.end(), e))
        continue;
      std::vector<std::size_t> gens = cur.second;
      gens.push_back(e);
      Subgroup s = subgroup_generated(g, gens);
      if (seen.insert(s.elements).second)
        queue.push_back({s.elements, std::move(gens)});
    }
  }
  std::vector<std::vector<std::size_t>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [](const auto &a, const auto &b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return out;
}

} // namespace

TableGroup default_tower_seed() { return cyclic(3); }

HallTower hall_tower(std::size_t depth, const TableGroup &seed,
                     std::uint32_t degree_cap) {
  if (depth > 3)
    throw DepthTooLarge("tower depth " + std::to_string(depth) +
                        " exceeds 3");

  HallTower out;
  RegularRep seed_rep = regular_representation(seed);
  out.stages.push_back(TowerStage{static_cast<std::uint32_t>(seed.order()),
                                  seed_rep.image,
                                  {}});

  CertificateBuilder cb("hall-tower");
  cb.space("S0", out.stages[0].degree);
  cb.group("H0", "S0", cycles_of(seed_rep.image.generators()),
           to_decimal(BigInt(seed.order())));
  cb.check_group("stage 0: H0 has the claimed order", "H0",
                 to_decimal(BigInt(seed.order())), true, true);

  for (std::size_t k = 0; k < depth; ++k) {
    const PermGroup &hk = out.stages[k].group;
    if (hk.order() > BigInt(degree_cap))
      throw DegreeCapExceeded("stage " + std::to_string(k + 1) + " degree " +
                              to_decimal(hk.order()) + " exceeds the cap " +
                              std::to_string(degree_cap));
    std::vector<Permutation> elems = enumerate_elements(hk);
    const std::uint32_t nd = static_cast<std::uint32_t>(elems.size());
    std::unordered_map<Permutation, std::size_t, PermHash> index;
    index.reserve(nd);
    for (std::size_t i = 0; i < nd; ++i)
      index.emplace(elems[i], i);

    std::vector<Permutation> rimg;
    rimg.reserve(nd);
    for (std::size_t e = 0; e < nd; ++e) {
      std::vector<std::uint32_t> img(nd);
      for (std::size_t x = 0; x < nd; ++x)
        img[x] = static_cast<std::uint32_t>(index.at(elems[x] * elems[e]));
      rimg.push_back(Permutation::from_images0(std::move(img)));
    }

    std::vector<std::size_t> gpos;
    for (const Permutation &g : hk.generators())
      gpos.push_back(index.at(g));

    PermGroup next(nd, symmetric_gens(nd));
    BigInt next_ord = next.order();

    const std::string sk = std::to_string(k);
    const std::string sk1 = std::to_string(k + 1);
    cb.space("S" + sk1, nd);
    cb.family("E" + sk, "S" + sk, cycles_of(elems));
    cb.family("R" + sk, "S" + sk1, cycles_of(rimg));
    cb.map("emb" + sk, CB::iota(nd));
    cb.check_hom("stage " + sk1 + ": rho embeds H" + sk, "E" + sk, "R" + sk,
                 "emb" + sk, true, false);

    std::vector<std::string> rgens;
    std::vector<json> members;
    for (std::size_t gp : gpos) {
      rgens.push_back(rimg[gp].cycles());
      members.push_back(json::array({CB::fam_at("R" + sk, gp)}));
    }
    cb.group("R" + sk + "grp", "S" + sk1, std::move(rgens),
             to_decimal(BigInt(nd)));
    cb.check_group("stage " + sk1 + ": rho(H" + sk + ") is regular",
                   "R" + sk + "grp", to_decimal(BigInt(nd)), true, true);
    cb.group("H" + sk1, "S" + sk1, cycles_of(next.generators()),
             to_decimal(next_ord));
    cb.check_group("stage " + sk1 + ": H" + sk1 + " has the claimed order",
                   "H" + sk1, to_decimal(next_ord), true, false);
    cb.check_member("stage " + sk1 + ": image generators lie in H" + sk1,
                    "H" + sk1, std::move(members));

    out.stages.push_back(TowerStage{nd, std::move(next), std::move(rimg)});
  }

  json degrees = json::array();
  for (const TowerStage &st : out.stages)
    degrees.push_back(st.degree);
  cb.inputs(
      {{"depth", depth}, {"seedOrder", seed.order()}, {"degrees", degrees}});

  out.certificate = cb.build();
  VerifyReport report = verify_certificate(emit_certificate(out.certificate));
  if (!report.pass)
    throw Error("tower certificate failed verification: " +
                report.violations.front());
  return out;
}

ConjugacyReport stage_conjugacy_check(
    const HallTower &tower, std::size_t k,
    const std::vector<std::pair<std::vector<Permutation>,
                                std::vector<Permutation>>> &pairs) {
  if (k >= tower.stages.size())
    throw Error("no such tower stage");
  const TowerStage &st = tower.stages[k];
  if (st.group.order() > BigInt(limits::enumeration_bound()))
    throw Error("the stage is too large to enumerate");

  std::vector<Permutation> elems = enumerate_elements(st.group);
  std::unordered_map<Permutation, std::size_t, PermHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], i);
  TableGroup table = table_from_perms(st.degree, st.group.generators());

  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
      work;
  if (pairs.empty()) {
    if (table.order() > 64)
      throw Error("stage too large for exhaustive subgroups; pass explicit "
                  "pairs");
    auto subs = all_subgroups(table);
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = i + 1; j < subs.size(); ++j)
        work.push_back({subs[i], subs[j]});
  } else {
    for (const auto &pr : pairs) {
      std::vector<std::size_t> a, b;
      for (const Permutation &p : pr.first) {
        auto it = index.find(p);
        if (it == index.end())
          throw Error("a given generator is not a stage element");
        a.push_back(it->second);
      }
      for (const Permutation &p : pr.second) {
        auto it = index.find(p);
        if (it == index.end())
          throw Error("a given generator is not a stage element");
        b.push_back(it->second);
      }
      work.push_back({std::move(a), std::move(b)});
    }
  }

  ConjugacyReport report{k, 0, 0, {}};
  for (const auto &pr : work) {
    Subgroup sa = subgroup_generated(table, pr.first);
    Subgroup sb = subgroup_generated(table, pr.second);

    ConjugacyPair entry{{}, {}, false, {}};
    for (std::size_t e : sa.elements)
      entry.first_gens.push_back(elems[e]);
    for (std::size_t e : sb.elements)
      entry.second_gens.push_back(elems[e]);

    if (sa.elements.size() == sb.elements.size()) {
      auto iso = find_isomorphism(sa.group, sb.group);
      if (iso) {
        entry.isomorphic = true;
        ++report.isomorphic_pairs;
        std::vector<std::size_t> dgens, dimgs;
        for (std::size_t p = 0; p < sa.elements.size(); ++p) {
          dgens.push_back(sa.elements[p]);
          dimgs.push_back(sb.elements[(*iso)(p)]);
        }
        PartialIso psi(table, dgens, dimgs);
        Permutation h = align_conjugator(table, psi);

        std::unordered_set<Permutation, PermHash> target;
        for (std::size_t e : sb.elements)
          target.insert(table_right_mul(table, e));
        for (std::size_t e : sa.elements)
          if (!target.count(table_right_mul(table, e).conjugated_by(h)))
            throw Error("stage conjugator fails the set-level check");

        entry.conjugator = std::move(h);
        ++report.conjugated;
      }
    }
    report.pairs.push_back(std::move(entry));
  }
  return report;
}

EmbeddingReport stage_embedding_check(const HallTower &tower,
                                      const TableGroup &g, std::size_t k) {
  if (k == SIZE_MAX)
    k = tower.stages.size() - 1;
  if (k >= tower.stages.size())
    throw Error("no such tower stage");
  const TowerStage &st = tower.stages[k];
  if (g.order() > st.degree)
    throw Error("the group order " + std::to_string(g.order()) +
                " exceeds the stage degree " + std::to_string(st.degree));

  RegularRep rep = regular_representation(g);
  std::vector<Permutation> padded;
  for (std::size_t gi : g.generators()) {
    const Permutation &p = rep.rho[gi];
    std::vector<std::uint32_t> img(st.degree);
    for (std::size_t x = 0; x < st.degree; ++x)
      img[x] = x < g.order() ? p.image0(x) : static_cast<std::uint32_t>(x);
    padded.push_back(Permutation::from_images0(std::move(img)));
  }
  PermEmbedding::from_generator_images(g, st.degree, padded);

  bool contained = true;
  for (const Permutation &p : padded)
    contained = contained && st.group.contains(p);
  return EmbeddingReport{k, std::move(padded), contained};
}

PowerTower generic_power_tower(std::size_t n, std::size_t depth,
                               const EquivariantSystem &seed,
                               std::uint32_t degree_cap) {
  if (n == 0)
    throw HypothesisFailed("the power must be positive");
  if (seed.autos.size() != 1)
    throw Error("the seed system must carry exactly one automorphism");

  auto power_map = [n](const std::vector<std::size_t> &m) {
    std::vector<std::size_t> acc = identity_map(m.size());
    for (std::size_t i = 0; i < n; ++i)
      acc = compose_maps(m, acc);
    return acc;
  };

  PowerTower out;
  out.n = n;
  out.stages.push_back(
      PowerTowerStage{seed.group, seed.autos[0], power_map(seed.autos[0])});

  CertificateBuilder cb("power-tower");
  {
    RegularRep rep = regular_representation(seed.group);
    const std::uint32_t d = static_cast<std::uint32_t>(seed.group.order());
    cb.space("S0", d);
    cb.family("A0", "S0", cycles_of(rep.rho));
    cb.map("g0", seed.autos[0]);
    cb.perm("G0", "S0", perm_of_map(seed.autos[0]).cycles());
    cb.perm("F0", "S0", perm_of_map(out.stages[0].f_map).cycles());
    cb.check_words("stage 0: conjugation by G0 realizes g0", "S0",
                   json::array({CB::inv("G0"), CB::fam("A0"), CB::tok("G0")}),
                   json::array({CB::fam("A0", {"g0"})}), CB::iota(d));
    json lhs = json::array();
    for (std::size_t i = 0; i < n; ++i)
      lhs.push_back(CB::tok("G0"));
    cb.check_words("stage 0: f0 = g0^n", "S0", std::move(lhs),
                   json::array({CB::tok("F0")}));
  }

  for (std::size_t i = 0; i < depth; ++i) {
    const PowerTowerStage &cur = out.stages[i];
    if (!cur.table)
      throw OrderTooLarge("stage " + std::to_string(i) +
                          " cannot be enumerated for the next join");
    const std::size_t cur_order = cur.table->order();

    EquivariantSystem ai = make_system(*cur.table, {cur.g_map});
    TableGroup cat = cyclic(i + 2);
    EquivariantSystem cs = make_system(cat, {identity_map(cat.order())});
    JointEmbedding join = equivariant_joint_embed(ai, cs);
    const TableGroup &bg = join.product.group;
    std::vector<std::size_t> h = join.product.autos[0];
    std::vector<std::size_t> hn = power_map(h);

    Subgroup wholeb = subgroup_generated(bg, bg.generators());
    RootResult root = root_extension(bg, wholeb, h, hn, n, degree_cap);

    const std::string si = std::to_string(i);
    const std::string si1 = std::to_string(i + 1);
    cb.space("S" + si1, root.degree);
    cb.perm("T" + si1, "S" + si1, root.t.cycles());
    Permutation tn = root.t;
    for (std::size_t j = 1; j < n; ++j)
      tn = tn * root.t;
    cb.perm("Tn" + si1, "S" + si1, tn.cycles());
    json lhs = json::array();
    for (std::size_t j = 0; j < n; ++j)
      lhs.push_back(CB::tok("T" + si1));
    cb.check_words("stage " + si1 + ": f = g^n", "S" + si1, std::move(lhs),
                   json::array({CB::tok("Tn" + si1)}));

    const std::vector<std::size_t> &emb = join.from_a.hom.images();
    std::vector<std::string> emb_items;
    emb_items.reserve(cur_order);
    for (std::size_t x = 0; x < cur_order; ++x)
      emb_items.push_back(root.phi[emb[x]].cycles());
    cb.family("emb" + si1, "S" + si1, std::move(emb_items));
    cb.map("gprev" + si, cur.g_map);
    cb.map("fprev" + si, cur.f_map);
    cb.check_words(
        "stage " + si1 + ": g extends stage " + si, "S" + si1,
        json::array({CB::inv("T" + si1), CB::fam("emb" + si1),
                     CB::tok("T" + si1)}),
        json::array({CB::fam("emb" + si1, {"gprev" + si})}),
        CB::iota(cur_order));
    cb.check_words(
        "stage " + si1 + ": f extends stage " + si, "S" + si1,
        json::array({CB::inv("Tn" + si1), CB::fam("emb" + si1),
                     CB::tok("Tn" + si1)}),
        json::array({CB::fam("emb" + si1, {"fprev" + si})}),
        CB::iota(cur_order));
    cb.embed("stage" + si1 + "-root", root.certificate);

    std::optional<TableGroup> next_table;
    std::vector<std::size_t> next_g, next_f;
    if (root.c_table) {
      next_table = root.c_table;
      next_g = root.gamma_map;
      next_f = power_map(root.gamma_map);
    }
    out.steps.push_back(
        PowerTowerStep{bg, std::move(h), emb, std::move(root)});
    out.stages.push_back(PowerTowerStage{std::move(next_table),
                                         std::move(next_g),
                                         std::move(next_f)});
  }

  cb.inputs({{"n", n}, {"depth", depth}, {"seedOrder", seed.group.order()}});
  out.certificate = cb.build();
  VerifyReport report = verify_certificate(emit_certificate(out.certificate));
  if (!report.pass)
    throw Error("power tower certificate failed verification: " +
                report.violations.front());
  return out;
}

} // namespace hallforge
