#include "hallforge/roots.hpp"

#include "hallforge/amalgam.hpp"
#include "hallforge/bigint.hpp"
#include "hallforge/catalog.hpp"
#include "hallforge/equivariant.hpp"
#include "hallforge/errors.hpp"
#include "hallforge/homomorphism.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hallforge {

namespace {

using json = nlohmann::json;
using CB = CertificateBuilder;

std::size_t map_order(const std::vector<std::size_t> &m) {
  std::vector<std::size_t> acc = m;
  std::size_t n = 1;
  while (acc != identity_map(m.size())) {
    acc = compose_maps(m, acc);
    ++n;
  }
  return n;
}

void require_automorphism(const TableGroup &g,
                          const std::vector<std::size_t> &m,
                          const std::string &what) {
  if (m.size() != g.order())
    throw HypothesisFailed(what + " has the wrong length");
  std::vector<bool> seen(m.size(), false);
  for (std::size_t v : m) {
    if (v >= m.size() || seen[v])
      throw HypothesisFailed(what + " is not a bijection");
    seen[v] = true;
  }
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[g.mul(i, j)] != g.mul(m[i], m[j]))
        throw HypothesisFailed(what + " is not an automorphism");
}

std::vector<std::size_t> restricted_to(const TableGroup &b,
                                       const std::vector<std::size_t> &beta,
                                       const Subgroup &a) {
  try {
    return restrict_automorphism(b, beta, a);
  } catch (const SubgroupNotInvariant &) {
    throw HypothesisFailed("beta does not map the subgroup onto itself");
  }
}

std::vector<std::vector<std::size_t>> powers_of(std::vector<std::size_t> m,
                                                std::size_t count) {
  std::vector<std::vector<std::size_t>> p(count);
  p[0] = identity_map(m.size());
  for (std::size_t i = 1; i < count; ++i)
    p[i] = compose_maps(m, p[i - 1]);
  return p;
}

std::vector<std::string> cycles_of(const std::vector<Permutation> &perms) {
  std::vector<std::string> out;
  out.reserve(perms.size());
  for (const Permutation &p : perms)
    out.push_back(p.cycles());
  return out;
}

} // namespace

CommutingResult commuting_extension(const TableGroup &b, const Subgroup &a,
                                    const std::vector<std::size_t> &alpha,
                                    const std::vector<std::size_t> &beta,
                                    std::uint32_t degree_cap) {
  const std::size_t na = a.elements.size();
  const std::size_t nb = b.order();
  require_automorphism(a.group, alpha, "alpha");
  require_automorphism(b, beta, "beta");
  std::vector<std::size_t> beta_a = restricted_to(b, beta, a);
  if (compose_maps(alpha, beta_a) != compose_maps(beta_a, alpha))
    throw HypothesisFailed("alpha and beta do not commute on the subgroup");

  const std::size_t m = map_order(alpha);
  const std::size_t k = map_order(beta);
  const std::size_t hk = m * k;

  auto apow = powers_of(alpha, m);
  auto bpow = powers_of(beta, k);
  auto abpow = powers_of(beta_a, k);

  // The acting group H = C_m x C_k, pair (i, j) packed as i*k + j. The
  // action on A is by the inverses of alpha^i ∘ beta^j, so that conjugation
  // by (i, j) inside the semidirect product applies alpha^i ∘ beta^j itself.
  std::vector<std::vector<std::size_t>> act_g(hk);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j)
      act_g[i * k + j] = invert_map(compose_maps(apow[i], abpow[j]));
  TableGroup h = direct_product(cyclic(m), cyclic(k));
  TableGroup gsd = semidirect_product(a.group, h, act_g);

  const bool degenerate = na == nb;
  std::uint32_t degree = 0;
  std::vector<Permutation> e;
  std::vector<Permutation> fg;
  e.reserve(nb);

  if (degenerate) {
    if (gsd.order() > degree_cap)
      throw DegreeCapExceeded("carrier degree " + std::to_string(gsd.order()) +
                              " exceeds the cap " + std::to_string(degree_cap));
    RegularRep rr = regular_representation(gsd);
    degree = static_cast<std::uint32_t>(gsd.order());
    for (std::size_t y = 0; y < nb; ++y)
      e.push_back(rr.rho[y * hk]);
    fg.push_back(rr.rho[(1 % m) * k]);
    fg.push_back(rr.rho[1 % k]);
  } else {
    std::vector<std::vector<std::size_t>> act_b(k), act_u(k);
    for (std::size_t j = 0; j < k; ++j) {
      act_b[j] = invert_map(bpow[j]);
      act_u[j] = invert_map(abpow[j]);
    }
    TableGroup bprime = semidirect_product(b, cyclic(k), act_b);
    TableGroup u = semidirect_product(a.group, cyclic(k), act_u);

    std::vector<std::size_t> into_g(u.order()), into_b(u.order());
    for (std::size_t p = 0; p < na; ++p)
      for (std::size_t j = 0; j < k; ++j) {
        into_g[p * k + j] = p * hk + j;
        into_b[p * k + j] = a.elements[p] * k + j;
      }
    AmalgamResult joined =
        amalgamate(GroupHom::from_element_map(u, gsd, into_g),
                   GroupHom::from_element_map(u, bprime, into_b), degree_cap);
    degree = joined.degree;
    for (std::size_t y = 0; y < nb; ++y)
      e.push_back(joined.s[y * k]);
    fg.push_back(joined.r[(1 % m) * k]);
    fg.push_back(joined.r[1 % k]);
  }

  std::vector<Permutation> cgens;
  for (std::size_t y : b.generators())
    cgens.push_back(e[y]);
  if (cgens.empty())
    cgens.push_back(e[b.identity()]);
  cgens.push_back(fg[0]);
  cgens.push_back(fg[1]);
  PermGroup c(degree, cgens);
  RegularRep breg = regular_representation(b);

  CertificateBuilder cb("commuting");
  cb.inputs({{"A", na},
             {"B", nb},
             {"route", degenerate ? "direct" : "amalgam"},
             {"ordAlpha", m},
             {"ordBeta", k}});
  cb.space("P", degree);
  cb.space("RB", static_cast<std::uint32_t>(nb));

  std::vector<std::string> ea_items;
  ea_items.reserve(na);
  for (std::size_t p = 0; p < na; ++p)
    ea_items.push_back(e[a.elements[p]].cycles());
  cb.family("Breg", "RB", cycles_of(breg.rho));
  cb.family("eA", "P", std::move(ea_items));
  cb.family("eB", "P", cycles_of(e));
  cb.map("alpha", alpha);
  cb.map("beta", beta);
  cb.map("emb", CB::iota(nb));
  cb.perm("f", "P", fg[0].cycles());
  cb.perm("g", "P", fg[1].cycles());
  cb.group("C", "P", cycles_of(c.generators()), to_decimal(c.order()));
  cb.group("FG", "P", {fg[0].cycles(), fg[1].cycles()});

  cb.check_group("Lem 4.1: C is a finite group", "C", to_decimal(c.order()));
  cb.check_hom("Lem 4.1: e embeds B", "Breg", "eB", "emb", true, false);
  cb.check_words("Lem 4.1: fg = gf", "P",
                 json::array({CB::tok("f"), CB::tok("g")}),
                 json::array({CB::tok("g"), CB::tok("f")}));
  cb.check_words("Lem 4.1: e(x)^f = e(alpha(x)) on A", "P",
                 json::array({CB::inv("f"), CB::fam("eA"), CB::tok("f")}),
                 json::array({CB::fam("eA", {"alpha"})}), CB::iota(na));
  cb.check_words("Lem 4.1: e(y)^g = e(beta(y)) on B", "P",
                 json::array({CB::inv("g"), CB::fam("eB"), CB::tok("g")}),
                 json::array({CB::fam("eB", {"beta"})}), CB::iota(nb));
  cb.check_abelian("Lem 4.1: <f,g> is abelian", "FG");
  std::vector<json> members;
  for (std::size_t y = 0; y < nb; ++y)
    members.push_back(json::array({CB::fam_at("eB", y)}));
  members.push_back(json::array({CB::tok("f")}));
  members.push_back(json::array({CB::tok("g")}));
  cb.check_member("Lem 4.1: e(B), f and g lie in C", "C", std::move(members));

  CommutingResult out{degree,           std::move(c),  fg[0],
                      fg[1],            std::move(e),  cb.build()};
  VerifyReport report = verify_certificate(emit_certificate(out.certificate));
  if (!report.pass)
    throw Error("commuting certificate failed verification: " +
                report.violations.front());
  return out;
}

RootResult root_extension(const TableGroup &b, const Subgroup &a,
                          const std::vector<std::size_t> &alpha,
                          const std::vector<std::size_t> &beta, std::size_t n,
                          std::uint32_t degree_cap) {
  if (n == 0)
    throw HypothesisFailed("the root exponent must be positive");
  require_automorphism(a.group, alpha, "alpha");
  require_automorphism(b, beta, "beta");
  std::vector<std::size_t> beta_a = restricted_to(b, beta, a);
  std::vector<std::size_t> an = identity_map(a.elements.size());
  for (std::size_t i = 0; i < n; ++i)
    an = compose_maps(alpha, an);
  if (an != beta_a)
    throw HypothesisFailed("alpha^n differs from beta on the subgroup");

  const std::size_t na = a.elements.size();
  const std::size_t nb = b.order();
  CommutingResult base = commuting_extension(b, a, alpha, beta, degree_cap);
  const std::uint32_t pd = base.degree;

  BigInt dorder = base.c.order();
  BigInt corder = 1;
  bool fits = true;
  for (std::size_t i = 0; i < n; ++i) {
    corder *= dorder;
    if (corder > BigInt(limits::enumeration_bound())) {
      fits = false;
      break;
    }
  }

  std::vector<Permutation> fpow;
  fpow.reserve(n);
  fpow.emplace_back(pd);
  for (std::size_t i = 1; i < n; ++i)
    fpow.push_back(fpow.back() * base.f);

  std::uint32_t degree = 0;
  std::string realization;
  std::vector<Permutation> cgens, cgens_img, phi, phi_a;
  std::optional<TableGroup> c_table;
  std::vector<std::size_t> gamma_map, phi_index;
  std::vector<Permutation> t_holder;

  if (fits) {
    realization = "table";
    corder = 1;
    for (std::size_t i = 0; i < n; ++i)
      corder *= dorder;

    std::vector<Permutation> delems = enumerate_elements(base.c);
    const std::size_t nd = delems.size();
    std::unordered_map<Permutation, std::size_t, PermHash> dindex;
    dindex.reserve(nd);
    for (std::size_t i = 0; i < nd; ++i)
      dindex.emplace(delems[i], i);
    auto dpos = [&](const Permutation &p) {
      auto it = dindex.find(p);
      if (it == dindex.end())
        throw Error("an element escapes the commuting extension group");
      return it->second;
    };

    TableGroup dtab = table_from_perms(pd, base.c.generators());
    TableGroup ctab = dtab;
    for (std::size_t i = 1; i < n; ++i)
      ctab = direct_product(ctab, dtab);
    const std::size_t nc = ctab.order();

    std::vector<std::size_t> conj_g(nd);
    for (std::size_t z = 0; z < nd; ++z)
      conj_g[z] = dpos(delems[z].conjugated_by(base.g));

    // gamma shifts the coordinates down and conjugates the wrapped one by g
    gamma_map.resize(nc);
    std::vector<std::size_t> digits(n);
    for (std::size_t z = 0; z < nc; ++z) {
      std::size_t rest = z;
      for (std::size_t i = n; i-- > 0;) {
        digits[i] = rest % nd;
        rest /= nd;
      }
      std::size_t out = 0;
      for (std::size_t i = 1; i < n; ++i)
        out = out * nd + digits[i];
      out = out * nd + conj_g[digits[0]];
      gamma_map[z] = out;
    }

    RegularRep rr = regular_representation(ctab);
    degree = static_cast<std::uint32_t>(nc);

    std::vector<std::uint32_t> timg(nc);
    for (std::size_t z = 0; z < nc; ++z)
      timg[z] = static_cast<std::uint32_t>(gamma_map[z]);
    t_holder.push_back(Permutation::from_images0(std::move(timg)));

    phi_index.resize(nb);
    phi.reserve(nb);
    for (std::size_t y = 0; y < nb; ++y) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < n; ++i)
        idx = idx * nd + dpos(base.e[y].conjugated_by(fpow[i]));
      phi_index[y] = idx;
      phi.push_back(rr.rho[idx]);
    }
    phi_a.reserve(na);
    for (std::size_t p = 0; p < na; ++p)
      phi_a.push_back(phi[a.elements[p]]);

    for (std::size_t gpos : ctab.generators()) {
      cgens.push_back(rr.rho[gpos]);
      cgens_img.push_back(rr.rho[gamma_map[gpos]]);
    }
    c_table = std::move(ctab);
  } else {
    realization = "blocks";
    if (static_cast<std::uint64_t>(n) * pd > degree_cap)
      throw DegreeCapExceeded("carrier degree " + std::to_string(n * pd) +
                              " exceeds the cap " + std::to_string(degree_cap));
    degree = static_cast<std::uint32_t>(n * pd);

    auto blocked = [&](const std::vector<Permutation> &coords) {
      std::vector<std::uint32_t> img(degree);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < pd; ++x)
          img[i * pd + x] = static_cast<std::uint32_t>(i * pd +
                                                       coords[i].image0(x));
      return Permutation::from_images0(std::move(img));
    };
    auto one_block = [&](std::size_t blk, const Permutation &p) {
      std::vector<std::uint32_t> img(degree);
      for (std::size_t x = 0; x < degree; ++x)
        img[x] = static_cast<std::uint32_t>(x);
      for (std::size_t x = 0; x < pd; ++x)
        img[blk * pd + x] = static_cast<std::uint32_t>(blk * pd + p.image0(x));
      return Permutation::from_images0(std::move(img));
    };

    // block i maps onto block i-1; block 0 wraps to block n-1 through g
    std::vector<std::uint32_t> timg(degree);
    for (std::size_t x = 0; x < pd; ++x) {
      timg[x] = static_cast<std::uint32_t>((n - 1) * pd + base.g.image0(x));
      for (std::size_t i = 1; i < n; ++i)
        timg[i * pd + x] = static_cast<std::uint32_t>((i - 1) * pd + x);
    }
    t_holder.push_back(Permutation::from_images0(std::move(timg)));

    std::vector<Permutation> coords;
    coords.reserve(n);
    phi.reserve(nb);
    for (std::size_t y = 0; y < nb; ++y) {
      coords.clear();
      for (std::size_t i = 0; i < n; ++i)
        coords.push_back(base.e[y].conjugated_by(fpow[i]));
      phi.push_back(blocked(coords));
    }
    phi_a.reserve(na);
    for (std::size_t p = 0; p < na; ++p)
      phi_a.push_back(phi[a.elements[p]]);

    for (std::size_t i = 0; i < n; ++i)
      for (const Permutation &w : base.c.generators()) {
        cgens.push_back(one_block(i, w));
        cgens_img.push_back(i > 0
                                ? one_block(i - 1, w)
                                : one_block(n - 1, w.conjugated_by(base.g)));
      }
  }

  const Permutation &t = t_holder.front();
  PermGroup c(degree, cgens);
  RegularRep breg = regular_representation(b);

  CertificateBuilder cb("root");
  cb.inputs({{"n", n},
             {"realization", realization},
             {"A", na},
             {"B", nb},
             {"D", to_decimal(dorder)}});
  cb.space("P", degree);
  cb.space("RB", static_cast<std::uint32_t>(nb));
  cb.family("Breg", "RB", cycles_of(breg.rho));
  cb.family("phiA", "P", cycles_of(phi_a));
  cb.family("phiB", "P", cycles_of(phi));
  cb.family("Cgen", "P", cycles_of(cgens));
  cb.family("CgenImg", "P", cycles_of(cgens_img));
  cb.map("alphaA", alpha);
  cb.map("betaB", beta);
  cb.map("emb", CB::iota(nb));
  cb.perm("T", "P", t.cycles());
  cb.group("C", "P", cycles_of(cgens), to_decimal(corder));

  const bool table = realization == "table";
  cb.check_group("Prop 4.2: C is a finite group", "C", to_decimal(corder),
                 table, table);
  cb.check_hom("Prop 4.2: phi is an injective homomorphism", "Breg", "phiB",
               "emb", true, false);
  std::vector<json> members;
  for (std::size_t p = 0; p < na; ++p)
    members.push_back(json::array({CB::fam_at("phiA", p)}));
  for (std::size_t y = 0; y < nb; ++y)
    members.push_back(json::array({CB::fam_at("phiB", y)}));
  cb.check_member("Prop 4.2: phi maps into C", "C", std::move(members));
  cb.check_words("Prop 4.2: gamma is an automorphism of C", "P",
                 json::array({CB::inv("T"), CB::fam("Cgen"), CB::tok("T")}),
                 json::array({CB::fam("CgenImg")}), CB::iota(cgens.size()));
  cb.check_words("Prop 4.2: gamma∘phi = phi∘alpha on A", "P",
                 json::array({CB::inv("T"), CB::fam("phiA"), CB::tok("T")}),
                 json::array({CB::fam("phiA", {"alphaA"})}), CB::iota(na));
  json lhs = json::array();
  for (std::size_t i = 0; i < n; ++i)
    lhs.push_back(CB::inv("T"));
  lhs.push_back(CB::fam("phiB"));
  for (std::size_t i = 0; i < n; ++i)
    lhs.push_back(CB::tok("T"));
  cb.check_words("Prop 4.2: gamma^n∘phi = phi∘beta on B", "P", std::move(lhs),
                 json::array({CB::fam("phiB", {"betaB"})}), CB::iota(nb));
  cb.embed("commuting", base.certificate);

  RootResult out{degree,
                 std::move(realization),
                 std::move(c),
                 t,
                 std::move(phi),
                 std::move(c_table),
                 std::move(gamma_map),
                 std::move(phi_index),
                 std::move(base),
                 cb.build()};
  VerifyReport report = verify_certificate(emit_certificate(out.certificate));
  if (!report.pass)
    throw Error("root certificate failed verification: " +
                report.violations.front());
  return out;
}

} // namespace hallforge
