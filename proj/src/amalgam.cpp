#include "hallforge/amalgam.hpp"

#include "hallforge/bigint.hpp"
#include "hallforge/errors.hpp"
#include "hallforge/hrushovski.hpp"

#include <map>
#include <string>
#include <utility>

namespace hallforge {

using nlohmann::json;
using B = CertificateBuilder;

namespace {

bool same_table(const TableGroup &a, const TableGroup &b) {
  if (a.order() != b.order() || a.identity() != b.identity())
    return false;
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      if (a.mul(i, j) != b.mul(i, j))
        return false;
  return true;
}

template <typename F>
auto stage(const char *name, F &&fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const OrderTooLarge &e) {
    throw OrderTooLarge(std::string(name) + ": " + e.what());
  } catch (const DegreeCapExceeded &e) {
    throw DegreeCapExceeded(std::string(name) + ": " + e.what());
  }
}

// Element maps of y restricted along an injective hom into y's carrier,
// one per element of Y, as maps over f's domain.
std::vector<std::vector<std::size_t>> restrict_all(const AutomorphismGroup &y,
                                                   const GroupHom &f) {
  const TableGroup &a = f.domain();
  const TableGroup &b = f.codomain();
  std::vector<std::size_t> pos(b.order(), Subgroup::npos);
  for (std::size_t x = 0; x < a.order(); ++x)
    pos[f(x)] = x;

  std::vector<std::vector<std::size_t>> out;
  for (const auto &m : y.maps) {
    std::vector<std::size_t> r(a.order());
    for (std::size_t x = 0; x < a.order(); ++x) {
      std::size_t image = pos[m[f(x)]];
      if (image == Subgroup::npos)
        throw SubgroupNotInvariant(
            "an automorphism moves the embedded subgroup");
      r[x] = image;
    }
    out.push_back(std::move(r));
  }
  return out;
}

GroupHom map_into(const AutomorphismGroup &y,
                  const std::vector<std::vector<std::size_t>> &restricted,
                  const AutomorphismGroup &x) {
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < x.maps.size(); ++i)
    index.emplace(x.maps[i], i);
  std::vector<std::size_t> images;
  for (const auto &m : restricted) {
    auto it = index.find(m);
    if (it == index.end())
      throw Error("a restriction falls outside the generated automorphisms");
    images.push_back(it->second);
  }
  return GroupHom::from_element_map(y.table, x.table, std::move(images));
}

std::string pair_label(const TableGroup &y, const TableGroup &z, std::size_t yi,
                       std::size_t zi) {
  return "(" + y.label(yi) + "," + z.label(zi) + ")";
}

} // namespace

AmalgamResult amalgamate(const GroupHom &f, const GroupHom &g,
                         std::uint32_t degree_cap) {
  if (!f.injective() || !g.injective())
    throw Error("amalgamation requires injective embeddings");
  if (!same_table(f.domain(), g.domain()))
    throw Error("the two embeddings have different domains");

  const TableGroup &a = f.domain();
  const TableGroup &bb = f.codomain();
  const TableGroup &cc = g.codomain();
  std::size_t nb = bb.order(), nc = cc.order();
  if (nb * nc > degree_cap)
    throw DegreeCapExceeded("carrier degree " + std::to_string(nb * nc) +
                            " exceeds the cap " + std::to_string(degree_cap));

  TableGroup p = direct_product(bb, cc);
  auto pack = [nc](std::size_t bi, std::size_t ci) { return bi * nc + ci; };

  std::vector<std::size_t> dom_gens, dom_images;
  for (std::size_t x : a.generators()) {
    dom_gens.push_back(pack(f(x), cc.identity()));
    dom_images.push_back(pack(bb.identity(), g(x)));
  }
  PartialIso iso(p, dom_gens, dom_images);
  Permutation h = align_conjugator(p, iso);
  RegularRep rho = regular_representation(p);

  AmalgamResult out{static_cast<std::uint32_t>(nb * nc),
                    {},
                    {},
                    PermGroup(1, {}),
                    Certificate{}};
  for (std::size_t bi = 0; bi < nb; ++bi)
    out.r.push_back(rho.rho[pack(bi, cc.identity())].conjugated_by(h));
  for (std::size_t ci = 0; ci < nc; ++ci)
    out.s.push_back(rho.rho[pack(bb.identity(), ci)]);

  std::vector<Permutation> dgens;
  std::vector<std::string> dgen_cycles;
  for (std::size_t x : bb.generators()) {
    dgens.push_back(out.r[x]);
    dgen_cycles.push_back(out.r[x].cycles());
  }
  for (std::size_t x : cc.generators()) {
    dgens.push_back(out.s[x]);
    dgen_cycles.push_back(out.s[x].cycles());
  }
  out.d = PermGroup(out.degree, dgens);

  CertificateBuilder cb("amalgam");
  cb.inputs({{"A", a.order()}, {"B", nb}, {"C", nc}});
  cb.space("K", out.degree);
  cb.space("RB", static_cast<std::uint32_t>(nb));
  cb.space("RC", static_cast<std::uint32_t>(nc));

  RegularRep breg = regular_representation(bb);
  RegularRep creg = regular_representation(cc);
  std::vector<std::string> breg_items, creg_items, rb_items, sc_items;
  std::vector<json> members;
  for (std::size_t bi = 0; bi < nb; ++bi) {
    breg_items.push_back(breg.rho[bi].cycles());
    rb_items.push_back(out.r[bi].cycles());
    members.push_back(json::array({B::fam_at("rB", bi)}));
  }
  for (std::size_t ci = 0; ci < nc; ++ci) {
    creg_items.push_back(creg.rho[ci].cycles());
    sc_items.push_back(out.s[ci].cycles());
    members.push_back(json::array({B::fam_at("sC", ci)}));
  }
  cb.family("Breg", "RB", std::move(breg_items));
  cb.family("Creg", "RC", std::move(creg_items));
  cb.family("rB", "K", std::move(rb_items));
  cb.family("sC", "K", std::move(sc_items));
  cb.map("f", f.images());
  cb.map("g", g.images());
  cb.map("iotaB", B::iota(nb));
  cb.map("iotaC", B::iota(nc));
  cb.group("D", "K", dgen_cycles, to_decimal(out.d.order()));

  cb.check_group("Thm 2.1: D = <r(B), s(C)> is a finite group", "D",
                 to_decimal(out.d.order()));
  cb.check_hom("Thm 2.1: r is an injective homomorphism", "Breg", "rB", "iotaB",
               true);
  cb.check_hom("Thm 2.1: s is an injective homomorphism", "Creg", "sC", "iotaC",
               true);
  cb.check_words("Thm 2.1: r∘f = s∘g on A", "K",
                 json::array({B::fam("rB", {"f"})}),
                 json::array({B::fam("sC", {"g"})}), B::iota(a.order()));
  cb.check_member("Thm 2.1: both images lie in D", "D", std::move(members));

  out.certificate = cb.build();
  VerifyReport report = verify_certificate(emit_certificate(out.certificate));
  if (!report.pass)
    throw Error("amalgam certificate failed verification: " +
                report.violations.front());
  return out;
}

RestrictionResult restriction_epimorphism(const AutomorphismGroup &y,
                                          const GroupHom &f) {
  if (!f.injective())
    throw Error("restriction requires an injective embedding");
  auto restricted = restrict_all(y, f);

  std::vector<std::vector<std::size_t>> gen_maps;
  for (std::size_t w : y.table.generators())
    gen_maps.push_back(restricted[w]);
  AutomorphismGroup x = generated_automorphism_group(f.domain(), gen_maps);
  GroupHom phi = map_into(y, restricted, x);

  RestrictionResult out{std::move(x), std::move(phi)};
  if (!out.phi.surjective())
    throw Error("restriction image does not cover its generated group");

  for (std::size_t w = 0; w < y.table.order(); ++w)
    for (std::size_t e = 0; e < f.domain().order(); ++e)
      if (f(out.image.maps[out.phi(w)][e]) != y.maps[w][f(e)])
        throw Error("restriction violates f∘phi(y) = y∘f");
  return out;
}

FiberProduct fiber_product(const GroupHom &phi, const GroupHom &psi) {
  if (!phi.surjective() || !psi.surjective())
    throw Error("fiber product requires surjections");
  if (!same_table(phi.codomain(), psi.codomain()))
    throw Error("fiber product codomains differ");

  TableGroup y = phi.domain();
  TableGroup z = psi.domain();
  std::size_t ny = y.order(), nz = z.order();

  std::vector<std::size_t> pairs;
  std::vector<std::size_t> lookup(ny * nz, Subgroup::npos);
  std::vector<std::string> labels;
  bool labeled = y.has_labels() && z.has_labels();
  for (std::size_t yi = 0; yi < ny; ++yi)
    for (std::size_t zi = 0; zi < nz; ++zi)
      if (phi(yi) == psi(zi)) {
        lookup[yi * nz + zi] = pairs.size();
        pairs.push_back(yi * nz + zi);
        if (labeled)
          labels.push_back(pair_label(y, z, yi, zi));
      }

  if (pairs.size() * phi.codomain().order() != ny * nz)
    throw Error("fiber product has the wrong size");

  auto mul = [y, z, nz, pairs, lookup](std::size_t i, std::size_t j) {
    std::size_t y1 = pairs[i] / nz, z1 = pairs[i] % nz;
    std::size_t y2 = pairs[j] / nz, z2 = pairs[j] % nz;
    return lookup[y.mul(y1, y2) * nz + z.mul(z1, z2)];
  };
  std::vector<std::size_t> inv_hint;
  for (std::size_t e : pairs)
    inv_hint.push_back(lookup[y.inv(e / nz) * nz + z.inv(e % nz)]);

  TableGroup w(pairs.size(), mul, 0, {}, std::move(labels),
               std::move(inv_hint));

  std::vector<std::size_t> py, pz;
  for (std::size_t e : pairs) {
    py.push_back(e / nz);
    pz.push_back(e % nz);
  }
  GroupHom proj_y = GroupHom::from_element_map(w, y, std::move(py));
  GroupHom proj_z = GroupHom::from_element_map(w, z, std::move(pz));
  if (!proj_y.surjective() || !proj_z.surjective())
    throw Error("fiber product projection is not surjective");
  return FiberProduct{std::move(w), std::move(pairs), std::move(proj_y),
                      std::move(proj_z)};
}

EquivariantAmalgamResult
equivariant_amalgamate(const EquivariantSystem &a, const EquivariantSystem &b,
                       const EquivariantSystem &c, const GroupHom &f,
                       const GroupHom &g, std::uint32_t degree_cap) {
  std::size_t tuple = a.autos.size();
  if (b.autos.size() != tuple || c.autos.size() != tuple)
    throw Error("automorphism tuples differ in length");
  if (!f.injective() || !g.injective())
    throw Error("equivariant amalgamation requires injective embeddings");
  if (!same_table(f.domain(), a.group) || !same_table(g.domain(), a.group))
    throw Error("embedding domains do not match the first system");
  if (!same_table(f.codomain(), b.group) || !same_table(g.codomain(), c.group))
    throw Error("embedding codomains do not match their systems");

  for (std::size_t i = 0; i < tuple; ++i)
    for (std::size_t x = 0; x < a.group.order(); ++x) {
      if (f(a.autos[i][x]) != b.autos[i][f(x)])
        throw NotEquivariant("f does not intertwine automorphism " +
                             std::to_string(i));
      if (g(a.autos[i][x]) != c.autos[i][g(x)])
        throw NotEquivariant("g does not intertwine automorphism " +
                             std::to_string(i));
    }

  auto gens_or_identity = [](const EquivariantSystem &s) {
    if (!s.autos.empty())
      return s.autos;
    return std::vector<std::vector<std::size_t>>{
        identity_map(s.group.order())};
  };

  AutomorphismGroup x = stage("stage X", [&] {
    return generated_automorphism_group(a.group, gens_or_identity(a));
  });
  AutomorphismGroup y = stage("stage Y", [&] {
    return generated_automorphism_group(b.group, gens_or_identity(b));
  });
  AutomorphismGroup z = stage("stage Z", [&] {
    return generated_automorphism_group(c.group, gens_or_identity(c));
  });

  GroupHom phi = map_into(y, restrict_all(y, f), x);
  GroupHom psi = map_into(z, restrict_all(z, g), x);
  if (!phi.surjective() || !psi.surjective())
    throw Error("restriction epimorphism is not surjective");

  FiberProduct w = stage("stage W", [&] { return fiber_product(phi, psi); });
  std::size_t nw = w.w.order();

  std::vector<std::vector<std::size_t>> act_l, act_m, act_n;
  for (std::size_t wi = 0; wi < nw; ++wi) {
    act_l.push_back(x.map_of(phi(w.proj_y(wi))));
    act_m.push_back(y.map_of(w.proj_y(wi)));
    act_n.push_back(z.map_of(w.proj_z(wi)));
  }
  TableGroup l = stage("stage L", [&] {
    return semidirect_product(a.group, w.w, act_l);
  });
  TableGroup m = stage("stage M", [&] {
    return semidirect_product(b.group, w.w, act_m);
  });
  TableGroup n = stage("stage N", [&] {
    return semidirect_product(c.group, w.w, act_n);
  });

  std::vector<std::size_t> ft_images, gt_images;
  for (std::size_t ai = 0; ai < a.group.order(); ++ai)
    for (std::size_t wi = 0; wi < nw; ++wi) {
      ft_images.push_back(f(ai) * nw + wi);
      gt_images.push_back(g(ai) * nw + wi);
    }
  GroupHom f_tilde = GroupHom::from_element_map(l, m, std::move(ft_images));
  GroupHom g_tilde = GroupHom::from_element_map(l, n, std::move(gt_images));

  AmalgamResult inner =
      stage("stage amalgam", [&] { return amalgamate(f_tilde, g_tilde, degree_cap); });

  EquivariantAmalgamResult out{std::move(l),
                               std::move(m),
                               std::move(n),
                               std::move(w),
                               std::move(f_tilde),
                               std::move(g_tilde),
                               std::move(inner),
                               {},
                               {},
                               {},
                               Certificate{}};

  for (std::size_t bi = 0; bi < b.group.order(); ++bi)
    out.s.push_back(out.inner.r[bi * nw]);
  for (std::size_t ci = 0; ci < c.group.order(); ++ci)
    out.t.push_back(out.inner.s[ci * nw]);

  std::vector<std::size_t> w_positions;
  for (std::size_t i = 0; i < tuple; ++i) {
    std::size_t yi = Subgroup::npos, zi = Subgroup::npos, xi = Subgroup::npos;
    for (std::size_t j = 0; j < y.maps.size(); ++j)
      if (y.maps[j] == b.autos[i])
        yi = j;
    for (std::size_t j = 0; j < z.maps.size(); ++j)
      if (z.maps[j] == c.autos[i])
        zi = j;
    for (std::size_t j = 0; j < x.maps.size(); ++j)
      if (x.maps[j] == a.autos[i])
        xi = j;
    if (yi == Subgroup::npos || zi == Subgroup::npos || xi == Subgroup::npos)
      throw Error("an input automorphism is missing from its generated group");
    if (phi(yi) != xi || psi(zi) != xi)
      throw Error("(beta_i, gamma_i) does not lie over alpha_i");
    std::size_t packed = yi * z.table.order() + zi;
    std::size_t wi = Subgroup::npos;
    for (std::size_t j = 0; j < out.w.pairs.size(); ++j)
      if (out.w.pairs[j] == packed)
        wi = j;
    if (wi == Subgroup::npos)
      throw Error("(beta_i, gamma_i) is missing from the fiber product");
    w_positions.push_back(wi);
    out.delta.push_back(out.inner.r[b.group.identity() * nw + wi]);
  }

  CertificateBuilder cb("equivariant-amalgam");
  cb.inputs({{"A", a.group.order()},
             {"B", b.group.order()},
             {"C", c.group.order()},
             {"n", tuple},
             {"W", nw},
             {"L", out.l.order()},
             {"M", out.m.order()},
             {"N", out.n.order()}});
  std::uint32_t deg = out.inner.degree;
  cb.space("K", deg);
  cb.space("RB", static_cast<std::uint32_t>(b.group.order()));
  cb.space("RC", static_cast<std::uint32_t>(c.group.order()));

  RegularRep breg = regular_representation(b.group);
  RegularRep creg = regular_representation(c.group);
  std::vector<std::string> breg_items, creg_items, sb_items, tc_items;
  for (std::size_t bi = 0; bi < b.group.order(); ++bi) {
    breg_items.push_back(breg.rho[bi].cycles());
    sb_items.push_back(out.s[bi].cycles());
  }
  for (std::size_t ci = 0; ci < c.group.order(); ++ci) {
    creg_items.push_back(creg.rho[ci].cycles());
    tc_items.push_back(out.t[ci].cycles());
  }
  cb.family("Breg", "RB", std::move(breg_items));
  cb.family("Creg", "RC", std::move(creg_items));
  cb.family("sB", "K", std::move(sb_items));
  cb.family("tC", "K", std::move(tc_items));

  std::vector<std::string> dgen_cycles;
  for (std::size_t e : out.m.generators())
    dgen_cycles.push_back(out.inner.r[e].cycles());
  for (std::size_t e : out.n.generators())
    dgen_cycles.push_back(out.inner.s[e].cycles());
  cb.family("Dgen", "K", dgen_cycles);
  cb.group("D", "K", dgen_cycles, to_decimal(out.inner.d.order()));

  cb.map("f", f.images());
  cb.map("g", g.images());
  cb.map("iotaB", B::iota(b.group.order()));
  cb.map("iotaC", B::iota(c.group.order()));

  cb.check_group("Thm 2.2: D is a finite group", "D",
                 to_decimal(out.inner.d.order()));
  cb.check_hom("Thm 2.2: s embeds B", "Breg", "sB", "iotaB", true);
  cb.check_hom("Thm 2.2: t embeds C", "Creg", "tC", "iotaC", true);
  cb.check_words("Thm 2.2: s∘f = t∘g on A", "K",
                 json::array({B::fam("sB", {"f"})}),
                 json::array({B::fam("tC", {"g"})}),
                 B::iota(a.group.order()));

  for (std::size_t i = 0; i < tuple; ++i) {
    std::string di = "delta" + std::to_string(i);
    std::string tag = " [i=" + std::to_string(i) + "]";
    cb.perm(di, "K", out.delta[i].cycles());
    cb.map("beta" + std::to_string(i), b.autos[i]);
    cb.map("gamma" + std::to_string(i), c.autos[i]);

    cb.check_words("Thm 2.2: delta_i∘s = s∘beta_i" + tag, "K",
                   json::array({B::tok(di), B::fam("sB"), B::inv(di)}),
                   json::array({B::fam("sB", {"beta" + std::to_string(i)})}),
                   B::iota(b.group.order()));
    cb.check_words("Thm 2.2: delta_i∘t = t∘gamma_i" + tag, "K",
                   json::array({B::tok(di), B::fam("tC"), B::inv(di)}),
                   json::array({B::fam("tC", {"gamma" + std::to_string(i)})}),
                   B::iota(c.group.order()));

    std::vector<json> forward{json::array({B::tok(di)})};
    std::vector<json> backward;
    for (std::size_t j = 0; j < dgen_cycles.size(); ++j) {
      forward.push_back(
          json::array({B::tok(di), B::fam_at("Dgen", j), B::inv(di)}));
      backward.push_back(
          json::array({B::inv(di), B::fam_at("Dgen", j), B::tok(di)}));
    }
    cb.check_member("Thm 2.2: delta_i(D) = D" + tag, "D", std::move(forward));
    cb.check_member("Thm 2.2: delta_i is invertible on D" + tag, "D",
                    std::move(backward));
  }

  cb.embed("amalgam", out.inner.certificate);
  out.certificate = cb.build();
  VerifyReport report = verify_certificate(emit_certificate(out.certificate));
  if (!report.pass)
    throw Error("equivariant amalgam certificate failed verification: " +
                report.violations.front());
  return out;
}

JointEmbedding equivariant_joint_embed(const EquivariantSystem &a,
                                       const EquivariantSystem &b) {
  if (a.autos.size() != b.autos.size())
    throw Error("automorphism tuples differ in length");

  TableGroup p = direct_product(a.group, b.group);
  std::size_t nb = b.group.order();

  std::vector<std::vector<std::size_t>> autos;
  for (std::size_t i = 0; i < a.autos.size(); ++i) {
    std::vector<std::size_t> map(p.order());
    for (std::size_t ai = 0; ai < a.group.order(); ++ai)
      for (std::size_t bi = 0; bi < nb; ++bi)
        map[ai * nb + bi] = a.autos[i][ai] * nb + b.autos[i][bi];
    autos.push_back(std::move(map));
  }
  EquivariantSystem product = make_system(p, std::move(autos));

  std::vector<std::size_t> ea, eb;
  for (std::size_t ai = 0; ai < a.group.order(); ++ai)
    ea.push_back(ai * nb + b.group.identity());
  for (std::size_t bi = 0; bi < nb; ++bi)
    eb.push_back(a.group.identity() * nb + bi);

  JointEmbedding out{
      product,
      make_equivariant_embedding(
          a, product, GroupHom::from_element_map(a.group, p, std::move(ea))),
      make_equivariant_embedding(
          b, product, GroupHom::from_element_map(b.group, p, std::move(eb)))};
  return out;
}

} // namespace hallforge
