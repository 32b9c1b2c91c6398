#include "hallforge/hrushovski.hpp"

#include "hallforge/errors.hpp"

#include <string>

namespace hallforge {

namespace {

// Orbits of right multiplication by the subgroup, i.e. the cosets x·K.
// Scanning points in ascending order makes each orbit's first point its
// least element, so the returned list is ascending by representative.
std::vector<std::vector<std::size_t>> coset_orbits(const TableGroup &g,
                                                   const Subgroup &k) {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> seen(g.order(), false);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x])
      continue;
    std::vector<std::size_t> orbit;
    for (std::size_t e : k.elements) {
      std::size_t p = g.mul(x, e);
      if (!seen[p]) {
        seen[p] = true;
        orbit.push_back(p);
      }
    }
    if (orbit.size() != k.elements.size())
      throw Error("coset orbit is smaller than the subgroup");
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

Permutation right_mul_perm(const TableGroup &g, std::size_t e) {
  std::vector<std::uint32_t> img(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    img[x] = static_cast<std::uint32_t>(g.mul(x, e));
  return Permutation::from_images0(std::move(img));
}

} // namespace

Permutation align_conjugator(const TableGroup &g, const PartialIso &psi) {
  const Subgroup &dom = psi.domain_subgroup();
  const Subgroup &cod = psi.codomain_subgroup();
  auto dom_orbits = coset_orbits(g, dom);
  auto cod_orbits = coset_orbits(g, cod);
  if (dom_orbits.size() != cod_orbits.size())
    throw Error("coset counts differ between domain and codomain");

  std::vector<std::uint32_t> img(g.order());
  for (std::size_t i = 0; i < dom_orbits.size(); ++i) {
    std::size_t rep = dom_orbits[i].front();
    std::size_t rep_image = cod_orbits[i].front();
    for (std::size_t e : dom.elements)
      img[g.mul(rep, e)] =
          static_cast<std::uint32_t>(g.mul(rep_image, psi.apply(e)));
  }
  Permutation h = Permutation::from_images0(std::move(img));

  for (std::size_t e : dom.elements) {
    Permutation lhs = right_mul_perm(g, e).conjugated_by(h);
    if (!(lhs == right_mul_perm(g, psi.apply(e))))
      throw Error("alignment conjugator violates its contract");
  }
  return h;
}

ExtensionResult hrushovski_extend(const TableGroup &a,
                                  const std::vector<PartialIso> &psis,
                                  std::uint32_t degree_cap) {
  if (a.order() > degree_cap)
    throw DegreeCapExceeded("ambient degree " + std::to_string(a.order()) +
                            " exceeds the cap " + std::to_string(degree_cap));

  ExtensionResult out{static_cast<std::uint32_t>(a.order()),
                      regular_representation(a),
                      {},
                      Certificate{}};

  CertificateBuilder b("extension");
  b.inputs({{"order", a.order()}, {"isomorphisms", psis.size()}});
  b.space("H", out.degree);

  std::vector<std::string> gen_cycles;
  for (std::size_t g : a.generators())
    gen_cycles.push_back(out.rho.rho[g].cycles());
  b.group("rhoA", "H", std::move(gen_cycles), std::to_string(a.order()));
  b.check_group("Thm 3.2: rho is a regular embedding", "rhoA",
                std::to_string(a.order()), true, true);

  for (std::size_t i = 0; i < psis.size(); ++i) {
    const PartialIso &psi = psis[i];
    if (psi.ambient().order() != a.order())
      throw Error("partial isomorphism lives in a different group");
    std::string sfx = std::to_string(i);
    const Subgroup &dom = psi.domain_subgroup();
    const Subgroup &cod = psi.codomain_subgroup();

    Permutation h = align_conjugator(a, psi);
    b.perm("h" + sfx, "H", h.cycles());

    std::vector<std::string> kitems, kpitems;
    std::vector<std::size_t> map;
    std::vector<nlohmann::json> members;
    for (std::size_t j = 0; j < dom.elements.size(); ++j) {
      kitems.push_back(out.rho.rho[dom.elements[j]].cycles());
      map.push_back(cod.from_ambient(psi.apply(dom.elements[j])));
      members.push_back(
          nlohmann::json::array({CertificateBuilder::fam_at("K" + sfx, j)}));
    }
    for (std::size_t j = 0; j < cod.elements.size(); ++j) {
      kpitems.push_back(out.rho.rho[cod.elements[j]].cycles());
      members.push_back(
          nlohmann::json::array({CertificateBuilder::fam_at("Kp" + sfx, j)}));
    }
    b.family("K" + sfx, "H", std::move(kitems));
    b.family("Kp" + sfx, "H", std::move(kpitems));
    b.map("psi" + sfx, map);

    b.check_hom("Thm 3.2: psi" + sfx + " is an isomorphism of subgroups",
                "K" + sfx, "Kp" + sfx, "psi" + sfx, true, true);
    b.check_member("Thm 3.2: both subgroups lie inside rho(A) [psi" + sfx + "]",
                   "rhoA", std::move(members));
    b.check_words("Thm 3.2: rho(k)^h = rho(psi(k)) [psi" + sfx + "]", "H",
                  nlohmann::json::array({CertificateBuilder::inv("h" + sfx),
                                         CertificateBuilder::fam("K" + sfx),
                                         CertificateBuilder::tok("h" + sfx)}),
                  nlohmann::json::array(
                      {CertificateBuilder::fam("Kp" + sfx, {"psi" + sfx})}),
                  CertificateBuilder::iota(dom.elements.size()));

    out.conjugators.push_back(std::move(h));
  }

  out.certificate = b.build();
  VerifyReport report = verify_certificate(emit_certificate(out.certificate));
  if (!report.pass)
    throw Error("extension certificate failed verification: " +
                report.violations.front());
  return out;
}

} // namespace hallforge
