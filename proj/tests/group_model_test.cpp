#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hallforge/catalog.hpp"
#include "hallforge/equivariant.hpp"
#include "hallforge/errors.hpp"
#include "hallforge/homomorphism.hpp"
#include "hallforge/perm.hpp"
#include "hallforge/perm_group.hpp"
#include "hallforge/table_group.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

using namespace hallforge;

namespace {

// Exhaustive homomorphism law check, independent of the library's
// graph-closure verification.
bool hom_law_holds(const TableGroup &g, const TableGroup &h,
                   const std::vector<std::size_t> &images) {
  if (images.size() != g.order())
    return false;
  if (images[g.identity()] != h.identity())
    return false;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (images[g.mul(a, b)] != h.mul(images[a], images[b]))
        return false;
  return true;
}

bool is_bijection(const std::vector<std::size_t> &m, std::size_t n) {
  if (m.size() != n)
    return false;
  std::vector<bool> hit(n, false);
  for (std::size_t v : m) {
    if (v >= n || hit[v])
      return false;
    hit[v] = true;
  }
  return true;
}

std::size_t index_of_label(const TableGroup &g, const std::string &want) {
  for (std::size_t a = 0; a < g.order(); ++a)
    if (g.label(a) == want)
      return a;
  FAIL("no element labeled ", want);
  return 0;
}

// Conjugation by h as an element map.
std::vector<std::size_t> conj_map(const TableGroup &g, std::size_t h) {
  std::vector<std::size_t> m(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    m[x] = g.conjugate(x, h);
  return m;
}

std::vector<std::size_t> inversion_map(const TableGroup &g) {
  std::vector<std::size_t> m(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    m[x] = g.inv(x);
  return m;
}

std::size_t count_of_order(const TableGroup &g, std::size_t k) {
  std::size_t c = 0;
  for (std::size_t a = 0; a < g.order(); ++a)
    if (g.element_order(a) == k)
      ++c;
  return c;
}

} // namespace

TEST_CASE("table construction rejects broken multiplication") {
  CHECK_THROWS_AS(TableGroup(0, [](std::size_t, std::size_t) { return std::size_t{0}; }),
                  Error);
  CHECK_THROWS_AS(TableGroup(2, [](std::size_t, std::size_t) { return std::size_t{0}; },
                             5),
                  Error);

  // Constant map: identity law fails.
  CHECK_THROWS_AS(TableGroup(2, [](std::size_t, std::size_t) { return std::size_t{0}; }),
                  Error);

  // Addition without reduction: not closed.
  CHECK_THROWS_AS(TableGroup(3, [](std::size_t a, std::size_t b) { return a + b; }),
                  Error);

  // The smallest loop that is not a group: two-sided identity and all
  // inverses exist, but the operation is not associative.
  static const std::size_t loop5[5][5] = {{0, 1, 2, 3, 4},
                                          {1, 0, 3, 4, 2},
                                          {2, 3, 4, 0, 1},
                                          {3, 4, 1, 2, 0},
                                          {4, 2, 0, 1, 3}};
  CHECK_THROWS_AS(TableGroup(5, [](std::size_t a, std::size_t b) { return loop5[a][b]; }),
                  Error);

  auto mod3 = [](std::size_t a, std::size_t b) { return (a + b) % 3; };
  CHECK_THROWS_AS(TableGroup(3, mod3, 0, {7}), Error);
  CHECK_THROWS_AS(TableGroup(3, mod3, 0, {}, {"e", "x"}), Error);
}

TEST_CASE("inverse hints are verified, not trusted") {
  auto mod3 = [](std::size_t a, std::size_t b) { return (a + b) % 3; };
  TableGroup ok(3, mod3, 0, {}, {}, {0, 2, 1});
  CHECK(ok.inv(1) == 2);
  CHECK_THROWS_AS(TableGroup(3, mod3, 0, {}, {}, {0, 1, 2}), Error);
  CHECK_THROWS_AS(TableGroup(3, mod3, 0, {}, {}, {0, 2}), Error);
}

TEST_CASE("large tables take the sampled validation path") {
  // 1500 is past both the flat-cache and the exhaustive-check cutoffs.
  TableGroup big(1500, [](std::size_t a, std::size_t b) { return (a + b) % 1500; });
  CHECK(big.order() == 1500);
  CHECK(big.inv(1) == 1499);
  CHECK(big.element_order(2) == 750);

  CHECK_THROWS_AS(TableGroup(1500, [](std::size_t a, std::size_t b) { return a + b; }),
                  Error);
}

TEST_CASE("cyclic group arithmetic") {
  TableGroup c6 = cyclic(6);
  CHECK(c6.order() == 6);
  CHECK(c6.identity() == 0);
  CHECK(c6.mul(4, 5) == 3);
  CHECK(c6.inv(1) == 5);
  CHECK(c6.inv(0) == 0);
  CHECK(c6.power(1, 4) == 4);
  CHECK(c6.power(1, -1) == 5);
  CHECK(c6.power(5, 0) == 0);
  CHECK(c6.element_order(1) == 6);
  CHECK(c6.element_order(2) == 3);
  CHECK(c6.element_order(3) == 2);
  CHECK(c6.element_order(0) == 1);
  CHECK(c6.is_abelian());
  CHECK(c6.label(0) == "e");
  CHECK(c6.label(1) == "x");
  CHECK(c6.label(4) == "x^4");
  CHECK(c6.generators() == std::vector<std::size_t>{1});

  TableGroup c1 = cyclic(1);
  CHECK(c1.order() == 1);
  CHECK(c1.element_order(0) == 1);

  CHECK_THROWS_AS(cyclic(0), ParseError);
  CHECK_THROWS_AS(cyclic(33), ParseError);
}

TEST_CASE("permutation tables use canonical enumeration order") {
  TableGroup s3 = symmetric(3);
  std::vector<std::string> want = {"()",    "(1 2)", "(1 2 3)",
                                   "(1 3)", "(2 3)", "(1 3 2)"};
  REQUIRE(s3.order() == 6);
  for (std::size_t a = 0; a < 6; ++a)
    CHECK(s3.label(a) == want[a]);
  CHECK(s3.generators() == std::vector<std::size_t>{1, 2});
  CHECK_FALSE(s3.is_abelian());

  // Table conjugation matches permutation conjugation.
  std::size_t r = index_of_label(s3, "(1 2 3)");
  std::size_t t = index_of_label(s3, "(1 2)");
  CHECK(s3.conjugate(r, t) == index_of_label(s3, "(1 3 2)"));

  CHECK_THROWS_AS(table_from_perms(9, {parse_cycles("(1 2 3 4 5 6 7 8 9)", 9)}, 8),
                  OrderTooLarge);
}

TEST_CASE("subgroup closure and inclusion bookkeeping") {
  TableGroup s3 = symmetric(3);
  Subgroup a3 = subgroup_generated(s3, {index_of_label(s3, "(1 2 3)")});
  CHECK(a3.group.order() == 3);
  CHECK(a3.elements == std::vector<std::size_t>{0, 2, 5});
  CHECK(a3.to_ambient(1) == 2);
  CHECK(a3.from_ambient(5) == 2);
  CHECK(a3.from_ambient(1) == Subgroup::npos);
  CHECK(a3.contains_ambient(0));
  CHECK_FALSE(a3.contains_ambient(3));
  CHECK(a3.group.element_order(a3.from_ambient(2)) == 3);
  CHECK(a3.group.label(a3.from_ambient(2)) == "(1 2 3)");

  // Sub-table multiplication agrees with the ambient product.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(a3.to_ambient(a3.group.mul(i, j)) ==
            s3.mul(a3.to_ambient(i), a3.to_ambient(j)));

  Subgroup triv = subgroup_generated(s3, {});
  CHECK(triv.group.order() == 1);
  CHECK(triv.elements == std::vector<std::size_t>{0});

  TableGroup c6 = cyclic(6);
  Subgroup evens = subgroup_generated(c6, {2});
  CHECK(evens.elements == std::vector<std::size_t>{0, 2, 4});

  CHECK_THROWS_AS(subgroup_generated(c6, {9}), Error);
}

TEST_CASE("direct products") {
  TableGroup p = direct_product(cyclic(2), cyclic(3));
  CHECK(p.order() == 6);
  CHECK(p.is_abelian());
  CHECK(count_of_order(p, 6) == 2);
  CHECK(p.label(p.identity()) == "(e,e)");
  CHECK(find_isomorphism(p, cyclic(6)).has_value());

  TableGroup v = direct_product(cyclic(2), cyclic(2));
  for (std::size_t a = 0; a < 4; ++a)
    CHECK(v.mul(a, a) == v.identity());
  CHECK(find_isomorphism(v, klein4()).has_value());

  TableGroup s3 = symmetric(3);
  auto iso = find_isomorphism(direct_product(s3, cyclic(1)), s3);
  REQUIRE(iso.has_value());
  CHECK(hom_law_holds(iso->domain(), iso->codomain(), iso->images()));

  TableGroup c150(150, [](std::size_t a, std::size_t b) { return (a + b) % 150; });
  CHECK_THROWS_AS(direct_product(c150, c150), OrderTooLarge);
}

TEST_CASE("semidirect products") {
  TableGroup c3 = cyclic(3);
  TableGroup c2 = cyclic(2);

  std::vector<std::vector<std::size_t>> inv_action = {identity_map(3),
                                                      inversion_map(c3)};
  TableGroup sd = semidirect_product(c3, c2, inv_action);
  CHECK(sd.order() == 6);
  CHECK_FALSE(sd.is_abelian());
  auto iso = find_isomorphism(sd, symmetric(3));
  REQUIRE(iso.has_value());
  CHECK(hom_law_holds(iso->domain(), iso->codomain(), iso->images()));
  CHECK(is_bijection(iso->images(), 6));

  // (a, w)^-1 round trip through the packed index.
  for (std::size_t x = 0; x < 6; ++x) {
    CHECK(sd.mul(x, sd.inv(x)) == sd.identity());
    CHECK(sd.mul(sd.inv(x), x) == sd.identity());
  }

  // A trivial action collapses to the direct product.
  std::vector<std::vector<std::size_t>> trivial = {identity_map(4), identity_map(4)};
  TableGroup sd0 = semidirect_product(cyclic(4), c2, trivial);
  TableGroup dp = direct_product(cyclic(4), c2);
  REQUIRE(sd0.order() == dp.order());
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b)
      CHECK(sd0.mul(a, b) == dp.mul(a, b));

  CHECK_THROWS_AS(semidirect_product(c3, c2, {identity_map(3)}),
                  NotAHomomorphism);
  CHECK_THROWS_AS(semidirect_product(c3, c2,
                                     {identity_map(3), {1, 0, 2}}),
                  NotAHomomorphism);
  std::vector<std::vector<std::size_t>> not_action = {
      identity_map(3), inversion_map(c3), inversion_map(c3), identity_map(3)};
  CHECK_THROWS_AS(semidirect_product(c3, cyclic(4), not_action),
                  NotAHomomorphism);
}

TEST_CASE("regular representation") {
  TableGroup c3 = cyclic(3);
  RegularRep reg = regular_representation(c3);
  REQUIRE(reg.rho.size() == 3);
  CHECK(reg.rho[0].is_identity());
  CHECK(reg.rho[1] == parse_cycles("(1 2 3)", 3));
  CHECK(reg.rho[2] == parse_cycles("(1 3 2)", 3));

  TableGroup s3 = symmetric(3);
  RegularRep rs3 = regular_representation(s3);
  CHECK(rs3.image.degree() == 6);
  CHECK(rs3.image.order() == BigInt(6));
  CHECK(rs3.image.orbit(1).size() == 6);

  // Multiplication carries over, and distinct elements get distinct images.
  std::unordered_set<Permutation, PermHash> distinct;
  for (std::size_t a = 0; a < 6; ++a) {
    distinct.insert(rs3.rho[a]);
    for (std::size_t b = 0; b < 6; ++b)
      CHECK(rs3.rho[s3.mul(a, b)] == rs3.rho[a] * rs3.rho[b]);
  }
  CHECK(distinct.size() == 6);

  RegularRep r1 = regular_representation(cyclic(1));
  CHECK(r1.image.degree() == 1);
  CHECK(r1.rho[0].is_identity());
}

TEST_CASE("verified homomorphisms") {
  TableGroup c4 = cyclic(4);
  TableGroup c2 = cyclic(2);

  GroupHom down = GroupHom::from_generator_images(c4, c2, {1});
  CHECK(down.verified());
  CHECK_FALSE(down.injective());
  CHECK(down.surjective());
  CHECK(down.kernel() == std::vector<std::size_t>{0, 2});
  CHECK(hom_law_holds(c4, c2, down.images()));

  CHECK_THROWS_AS(GroupHom::from_generator_images(c2, cyclic(3), {1}),
                  NotAHomomorphism);
  CHECK_THROWS_AS(GroupHom::from_generator_images(c4, c2, {1, 1}), Error);
  CHECK_THROWS_AS(GroupHom::from_element_map(c4, c2, {0, 1, 1, 0}),
                  NotAHomomorphism);

  GroupHom id6 = GroupHom::identity(cyclic(6));
  CHECK(id6.bijective());
  for (std::size_t a = 0; a < 6; ++a)
    CHECK(id6(a) == a);

  TableGroup c3 = cyclic(3);
  GroupHom square = GroupHom::from_generator_images(c3, c3, {2});
  CHECK(square.bijective());
  GroupHom back = square.inverse();
  for (std::size_t a = 0; a < 3; ++a)
    CHECK(back(square(a)) == a);
  GroupHom round = square.then(back);
  for (std::size_t a = 0; a < 3; ++a)
    CHECK(round(a) == a);
  CHECK_THROWS_AS(down.inverse(), Error);
}

TEST_CASE("permutation embeddings") {
  TableGroup c3 = cyclic(3);
  PermEmbedding e =
      PermEmbedding::from_generator_images(c3, 3, {parse_cycles("(1 2 3)", 3)});
  CHECK(e(0).is_identity());
  CHECK(e(2) == parse_cycles("(1 3 2)", 3));
  CHECK(e.image_group().order() == BigInt(3));

  TableGroup v4 = klein4();
  PermEmbedding f = PermEmbedding::from_generator_images(
      v4, 4, {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)});
  CHECK(f(3) == parse_cycles("(1 4)(2 3)", 4));

  CHECK_THROWS_AS(
      PermEmbedding::from_generator_images(cyclic(2), 3, {Permutation(3)}),
      Error);
  CHECK_THROWS_AS(
      PermEmbedding::from_generator_images(c3, 4, {parse_cycles("(1 2)", 4)}),
      NotAHomomorphism);
}

TEST_CASE("partial isomorphisms between subgroups") {
  TableGroup s3 = symmetric(3);
  std::size_t r = index_of_label(s3, "(1 2 3)");
  std::size_t r2 = index_of_label(s3, "(1 3 2)");

  PartialIso flip(s3, {r}, {r2});
  CHECK(flip.size() == 3);
  CHECK(flip.domain_subgroup().elements == std::vector<std::size_t>{0, r, r2});
  CHECK(flip.codomain_subgroup().elements == std::vector<std::size_t>{0, r, r2});
  CHECK(flip.apply(r) == r2);
  CHECK(flip.apply(r2) == r);
  CHECK(flip.apply(0) == 0);
  CHECK_THROWS_AS(flip.apply(index_of_label(s3, "(1 2)")), Error);

  // Order mismatch between generator and image.
  CHECK_THROWS_AS(PartialIso(s3, {index_of_label(s3, "(1 2)")}, {r}), Error);

  PartialIso whole = PartialIso::identity_on(s3, {1, 2});
  CHECK(whole.size() == 6);
  for (std::size_t a = 0; a < 6; ++a)
    CHECK(whole.apply(a) == a);

  PartialIso empty_domain(s3, {}, {});
  CHECK(empty_domain.size() == 1);
  CHECK(empty_domain.apply(0) == 0);
}

TEST_CASE("automorphism restriction to invariant subgroups") {
  TableGroup s3 = symmetric(3);
  std::size_t r = index_of_label(s3, "(1 2 3)");
  std::size_t t = index_of_label(s3, "(1 2)");
  Subgroup a3 = subgroup_generated(s3, {r});

  // Conjugating by a transposition inverts the rotation subgroup.
  std::vector<std::size_t> res = restrict_automorphism(s3, conj_map(s3, t), a3);
  CHECK(res == inversion_map(a3.group));

  CHECK(restrict_automorphism(s3, identity_map(6), a3) == identity_map(3));

  Subgroup flip = subgroup_generated(s3, {t});
  CHECK_THROWS_AS(restrict_automorphism(s3, conj_map(s3, r), flip),
                  SubgroupNotInvariant);

  // Restriction respects composition.
  std::vector<std::size_t> b1 = conj_map(s3, t);
  std::vector<std::size_t> b2 = conj_map(s3, r);
  CHECK(restrict_automorphism(s3, compose_maps(b1, b2), a3) ==
        compose_maps(restrict_automorphism(s3, b1, a3),
                     restrict_automorphism(s3, b2, a3)));
}

TEST_CASE("isomorphism search") {
  CHECK_FALSE(find_isomorphism(cyclic(4), klein4()).has_value());
  CHECK_FALSE(find_isomorphism(quaternion8(), dihedral(4)).has_value());
  CHECK_FALSE(find_isomorphism(cyclic(3), cyclic(4)).has_value());

  TableGroup s3 = symmetric(3);
  auto self = find_isomorphism(s3, s3);
  REQUIRE(self.has_value());
  for (std::size_t a = 0; a < 6; ++a)
    CHECK(self->apply(a) == a);

  auto q_self = find_isomorphism(quaternion8(), quaternion8());
  REQUIRE(q_self.has_value());
  for (std::size_t a = 0; a < 8; ++a)
    CHECK(q_self->apply(a) == a);

  auto d3 = find_isomorphism(dihedral(3), s3);
  REQUIRE(d3.has_value());
  CHECK(hom_law_holds(dihedral(3), s3, d3->images()));
  CHECK(is_bijection(d3->images(), 6));
  CHECK(find_isomorphism(s3, dihedral(3)).has_value());

  CHECK_THROWS_AS(find_isomorphism(symmetric(5), symmetric(5)), Error);
}

TEST_CASE("generated automorphism groups") {
  TableGroup c3 = cyclic(3);
  AutomorphismGroup aut = generated_automorphism_group(c3, {inversion_map(c3)});
  CHECK(aut.table.order() == 2);
  CHECK(aut.maps[0] == identity_map(3));
  CHECK(aut.map_of(1) == inversion_map(c3));

  AutomorphismGroup one = generated_automorphism_group(c3, {identity_map(3)});
  CHECK(one.table.order() == 1);

  TableGroup s3 = symmetric(3);
  std::size_t r = index_of_label(s3, "(1 2 3)");
  std::size_t t = index_of_label(s3, "(1 2)");
  AutomorphismGroup inner =
      generated_automorphism_group(s3, {conj_map(s3, t), conj_map(s3, r)});
  CHECK(inner.table.order() == 6);
  CHECK(find_isomorphism(inner.table, s3).has_value());

  // The table multiplies the way the maps compose.
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      CHECK(inner.maps[inner.table.mul(i, j)] ==
            compose_maps(inner.maps[i], inner.maps[j]));

  CHECK_THROWS_AS(generated_automorphism_group(c3, {{1, 0, 2}}), Error);
}

TEST_CASE("equivariant systems and embeddings") {
  TableGroup c3 = cyclic(3);
  TableGroup c6 = cyclic(6);

  EquivariantSystem src = make_system(c3, {inversion_map(c3)});
  EquivariantSystem dst = make_system(c6, {inversion_map(c6)});
  GroupHom dbl = GroupHom::from_generator_images(c3, c6, {2});
  EquivariantEmbedding emb = make_equivariant_embedding(src, dst, dbl);
  CHECK(emb.hom.injective());
  CHECK(emb.hom(1) == 2);

  CHECK_THROWS_AS(make_system(cyclic(4), {{0, 2, 1, 3}}), Error);

  EquivariantSystem bare = make_system(cyclic(6), {});
  CHECK_THROWS_AS(make_equivariant_embedding(src, bare, dbl), NotEquivariant);

  EquivariantSystem still = make_system(cyclic(3), {identity_map(3)});
  CHECK_THROWS_AS(make_equivariant_embedding(still, dst, dbl), NotEquivariant);

  GroupHom collapse = GroupHom::from_generator_images(cyclic(4), cyclic(2), {1});
  EquivariantSystem s4 = make_system(cyclic(4), {});
  EquivariantSystem s2 = make_system(cyclic(2), {});
  CHECK_THROWS_AS(make_equivariant_embedding(s4, s2, collapse), Error);
}

TEST_CASE("catalog orders and structure") {
  CHECK(symmetric(1).order() == 1);
  CHECK(symmetric(4).order() == 24);
  CHECK(symmetric(5).order() == 120);
  CHECK(alternating(3).order() == 3);
  CHECK(alternating(4).order() == 12);
  CHECK(alternating(5).order() == 60);
  CHECK(alternating(6).order() == 360);
  CHECK(alternating(7).order() == 2520);

  TableGroup d6 = dihedral(6);
  CHECK(d6.order() == 12);
  CHECK_FALSE(d6.is_abelian());
  CHECK(d6.element_order(index_of_label(d6, "r")) == 6);
  CHECK(d6.element_order(index_of_label(d6, "s")) == 2);
  std::size_t rr = index_of_label(d6, "r");
  std::size_t ss = index_of_label(d6, "s");
  // s r s = r^-1
  CHECK(d6.mul(d6.mul(ss, rr), ss) == d6.inv(rr));

  CHECK(dihedral(1).order() == 2);
  TableGroup d2 = dihedral(2);
  CHECK(d2.order() == 4);
  CHECK(d2.is_abelian());
  CHECK(find_isomorphism(d2, klein4()).has_value());

  TableGroup q8 = quaternion8();
  CHECK_FALSE(q8.is_abelian());
  std::size_t i = index_of_label(q8, "i");
  std::size_t j = index_of_label(q8, "j");
  std::size_t k = index_of_label(q8, "k");
  std::size_t minus = index_of_label(q8, "-1");
  CHECK(q8.mul(i, i) == minus);
  CHECK(q8.mul(j, j) == minus);
  CHECK(q8.mul(i, j) == k);
  CHECK(q8.mul(j, i) == index_of_label(q8, "-k"));
  CHECK(count_of_order(q8, 4) == 6);
  CHECK(count_of_order(q8, 2) == 1);

  TableGroup v4 = klein4();
  CHECK(v4.is_abelian());
  CHECK(count_of_order(v4, 2) == 3);
  CHECK(v4.mul(index_of_label(v4, "a"), index_of_label(v4, "b")) ==
        index_of_label(v4, "ab"));
}

TEST_CASE("catalog big tables pass their explicit bounds") {
  TableGroup s8 = symmetric(8);
  CHECK(s8.order() == 40320);
  std::size_t t = index_of_label(s8, "(1 2)");
  CHECK(s8.mul(t, t) == s8.identity());
  CHECK_THROWS_AS(regular_representation(s8), OrderTooLarge);

  CHECK(alternating(8).order() == 20160);
}

TEST_CASE("catalog lookup by name") {
  CHECK(catalog_group("C6").order() == 6);
  CHECK(catalog_group("S4").order() == 24);
  CHECK(catalog_group("A5").order() == 60);
  CHECK(catalog_group("D6").order() == 12);
  CHECK(catalog_group("Q8").order() == 8);
  CHECK(catalog_group("V4").order() == 4);

  CHECK_THROWS_AS(catalog_group("C33"), ParseError);
  CHECK_THROWS_AS(catalog_group("S9"), ParseError);
  CHECK_THROWS_AS(catalog_group("A9"), ParseError);
  CHECK_THROWS_AS(catalog_group("D13"), ParseError);
  CHECK_THROWS_AS(catalog_group("X4"), ParseError);
  CHECK_THROWS_AS(catalog_group("C"), ParseError);
  CHECK_THROWS_AS(catalog_group("Cx"), ParseError);
  CHECK_THROWS_AS(catalog_group("c6"), ParseError);
  CHECK_THROWS_AS(catalog_group(""), ParseError);
}
