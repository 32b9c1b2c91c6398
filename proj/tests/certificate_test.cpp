#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hallforge/certificate.hpp"
#include "hallforge/errors.hpp"
#include "hallforge/perm.hpp"

#include <string>
#include <vector>

using namespace hallforge;
using nlohmann::json;
using B = CertificateBuilder;

namespace {

// A3 inside Sym(3): inversion realized by conjugation with (1 2).
Certificate conjugation_cert() {
  B b("extension");
  b.space("X", 3);
  b.perm("h", "X", "(1 2)");
  b.family("K", "X", {"()", "(1 2 3)", "(1 3 2)"});
  b.family("Kp", "X", {"()", "(1 2 3)", "(1 3 2)"});
  b.map("psi", {0, 2, 1});
  b.group("G", "X", {"(1 2 3)"}, "3");
  b.check_group("target subgroup", "G", "3", true, true);
  b.check_hom("psi is an isomorphism", "K", "Kp", "psi", true, true);
  b.check_words("conjugation realizes psi", "X",
                json::array({B::inv("h"), B::fam("K"), B::tok("h")}),
                json::array({B::fam("Kp", {"psi"})}), B::iota(3));
  b.check_member("conjugated generators stay inside", "G",
                 {json::array({B::inv("h"), B::fam_at("K", 1), B::tok("h")})});
  b.check_abelian("kernel is abelian", "G");
  return b.build();
}

bool mentions(const VerifyReport &r, const std::string &needle) {
  for (const auto &v : r.violations)
    if (v.find(needle) != std::string::npos)
      return true;
  return false;
}

} // namespace

TEST_CASE("emission is canonical and round trips byte for byte") {
  Certificate c = conjugation_cert();
  std::string once = emit_certificate(c);
  std::string twice = emit_certificate(c);
  CHECK(once == twice);
  CHECK(once.back() == '\n');

  Certificate back = parse_certificate(once);
  CHECK(back.kind() == "extension");
  CHECK(emit_certificate(back) == once);
}

TEST_CASE("parser rejects malformed documents") {
  CHECK_THROWS_AS(parse_certificate("not json at all"), ParseError);
  CHECK_THROWS_AS(parse_certificate("[1, 2, 3]"), ParseError);

  Certificate c = conjugation_cert();

  json wrong_format = c.doc;
  wrong_format["format"] = "something-else";
  CHECK_THROWS_AS(parse_certificate(wrong_format.dump()), ParseError);

  json wrong_version = c.doc;
  wrong_version["version"] = 99;
  CHECK_THROWS_AS(parse_certificate(wrong_version.dump()), ParseError);

  json wrong_kind = c.doc;
  wrong_kind["kind"] = "novel";
  CHECK_THROWS_AS(parse_certificate(wrong_kind.dump()), ParseError);

  json no_checks = c.doc;
  no_checks.erase("checks");
  CHECK_THROWS_AS(parse_certificate(no_checks.dump()), ParseError);

  json with_float = c.doc;
  with_float["payload"]["spaces"]["X"]["degree"] = 3.5;
  CHECK_THROWS_AS(parse_certificate(with_float.dump()), ParseError);

  json nested_float = c.doc;
  nested_float["inputs"] = json::array({1, json{{"x", 0.25}}});
  CHECK_THROWS_AS(parse_certificate(nested_float.dump()), ParseError);
}

TEST_CASE("a correct certificate verifies with per-check instance counts") {
  Certificate c = conjugation_cert();
  VerifyReport r = verify_certificate(c);
  CHECK(r.pass);
  CHECK_FALSE(r.vacuous);
  CHECK(r.violations.empty());
  REQUIRE(r.families.size() == 5);
  CHECK(r.families[0].first == "target subgroup");
  CHECK(r.families[0].second == 1);
  CHECK(r.families[1].second == 9);
  CHECK(r.families[2].first == "conjugation realizes psi");
  CHECK(r.families[2].second == 3);
  CHECK(r.families[3].second == 1);
  CHECK(r.families[4].second == 3);

  VerifyReport from_text = verify_certificate(emit_certificate(c));
  CHECK(from_text.pass);
  CHECK(from_text.families.size() == 5);
}

TEST_CASE("tampering flips exactly the named check") {
  Certificate c = conjugation_cert();

  SUBCASE("wrong order claim") {
    c.doc["checks"][0]["order"] = "4";
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
    CHECK(mentions(r, "target subgroup"));
    CHECK(mentions(r, "order mismatch"));
  }

  SUBCASE("index map that is not the stored isomorphism") {
    c.doc["payload"]["maps"]["psi"] = {0, 1, 1};
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
    CHECK(mentions(r, "psi is an isomorphism"));
  }

  SUBCASE("identity map breaks the word family at a specific point") {
    c.doc["payload"]["maps"]["psi"] = {0, 1, 2};
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
    CHECK(mentions(r, "conjugation realizes psi"));
    CHECK(mentions(r, "domain element 1"));
  }

  SUBCASE("conjugator replaced by a 3-cycle") {
    c.doc["payload"]["perms"]["h"]["cycles"] = "(1 2 3)";
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
    CHECK(mentions(r, "conjugation realizes psi"));
  }

  SUBCASE("membership item outside the group") {
    c.doc["checks"][3]["items"].push_back(json::array({B::tok("h")}));
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
    CHECK(mentions(r, "conjugated generators stay inside"));
  }

  SUBCASE("non-abelian group behind an abelian claim") {
    c.doc["payload"]["groups"]["G"]["gens"].push_back("(1 2)");
    c.doc["checks"][0]["order"] = "6";
    c.doc["checks"][0]["regular"] = false;
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
    CHECK(mentions(r, "kernel is abelian"));
    CHECK(mentions(r, "commute"));
  }
}

TEST_CASE("damaged payloads become violations, not crashes") {
  Certificate c = conjugation_cert();

  SUBCASE("map entry far out of range") {
    c.doc["payload"]["maps"]["psi"] = {0, 99, 1};
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
    CHECK(mentions(r, "out of range"));
  }

  SUBCASE("negative map entry") {
    c.doc["payload"]["maps"]["psi"] = {0, -7, 1};
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
    CHECK(mentions(r, "out of range"));
  }

  SUBCASE("missing permutation name") {
    c.doc["payload"]["perms"].erase("h");
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
    CHECK(mentions(r, "'h' missing"));
  }

  SUBCASE("missing family") {
    c.doc["payload"]["families"].erase("Kp");
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
  }

  SUBCASE("family item in the wrong space") {
    c.doc["payload"]["families"]["K"]["items"][1] = "(1 2 3 4)";
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
  }

  SUBCASE("degree mismatch between token and word space") {
    c.doc["payload"]["perms"]["h"]["space"] = "Y";
    c.doc["payload"]["spaces"]["Y"] = {{"degree", 5}};
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
    CHECK(mentions(r, "degree"));
  }

  SUBCASE("domain entry is negative") {
    c.doc["checks"][2]["domain"] = {0, -1};
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
    CHECK(mentions(r, "nonnegative"));
  }

  SUBCASE("quantified token without a domain") {
    c.doc["checks"][2].erase("domain");
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
    CHECK(mentions(r, "without a domain"));
  }

  SUBCASE("unknown check kind") {
    c.doc["checks"][0]["check"] = "mystery";
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
    CHECK(mentions(r, "unknown check kind"));
  }

  SUBCASE("check entry is not even an object") {
    c.doc["checks"][0] = "garbage";
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
    CHECK(mentions(r, "check #0"));
  }

  SUBCASE("malformed cycle string in a generator") {
    c.doc["payload"]["groups"]["G"]["gens"][0] = "(1 2";
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
  }
}

TEST_CASE("empty domains and empty check lists are vacuous passes") {
  B b("amalgam");
  b.space("X", 3);
  b.perm("h", "X", "(1 2)");
  b.family("K", "X", {"()", "(1 2 3)", "(1 3 2)"});
  b.check_words("nothing to check", "X", json::array({B::fam("K")}),
                json::array({B::fam("K")}), std::vector<std::size_t>{});
  Certificate c = b.build();
  VerifyReport r = verify_certificate(c);
  CHECK(r.pass);
  CHECK(r.vacuous);
  REQUIRE(r.families.size() == 1);
  CHECK(r.families[0].second == 0);

  B empty("root");
  VerifyReport re = verify_certificate(empty.build());
  CHECK(re.pass);
  CHECK(re.vacuous);
  CHECK(re.families.empty());
}

TEST_CASE("word tokens compose left to right with via-chains and inverses") {
  B b("commuting");
  b.space("X", 4);
  b.perm("a", "X", "(1 2 3 4)");
  b.family("F", "X", {"()", "(1 2 3 4)", "(1 3)(2 4)", "(1 4 3 2)"});
  b.map("sq", {0, 2, 0, 2});
  b.map("next", {1, 2, 3, 0});

  // a * a == F[sq[next[k]]] at k = 0: sq[next[0]] = sq[1] = 2, F[2] = a^2.
  b.check_words("square via chained maps", "X",
                json::array({B::tok("a"), B::tok("a")}),
                json::array({B::fam("F", {"next", "sq"})}),
                std::vector<std::size_t>{0});
  // a^-1 equals the fixed family element 3 without any domain.
  b.check_words("inverse token", "X", json::array({B::inv("a")}),
                json::array({B::fam_at("F", 3)}));
  // Inverted family lookup: F[1]^-1 * a is the identity.
  b.check_words("inverted lookup", "X",
                json::array({B::fam_at("F", 1, true), B::tok("a")}),
                json::array({}), std::vector<std::size_t>{0});
  VerifyReport r = verify_certificate(b.build());
  CHECK(r.pass);
  CHECK(r.families[0].second == 1);
  CHECK(r.families[1].second == 1);
}

TEST_CASE("inner certificates verify recursively with prefixed sources") {
  B outer("root");
  outer.space("X", 3);
  outer.group("G", "X", {"(1 2 3)"});
  outer.check_group("outer group", "G", "3");
  outer.embed("base", conjugation_cert());
  Certificate c = outer.build();

  VerifyReport good = verify_certificate(c);
  CHECK(good.pass);
  CHECK(good.families.size() == 6);
  bool prefixed = false;
  for (const auto &f : good.families)
    prefixed = prefixed || f.first == "base/target subgroup";
  CHECK(prefixed);

  SUBCASE("tampered inner check surfaces with the inner prefix") {
    c.doc["payload"]["inner"]["base"]["checks"][0]["order"] = "4";
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
    CHECK(mentions(r, "inner base"));
    CHECK(mentions(r, "target subgroup"));
  }

  SUBCASE("structurally destroyed inner certificate fails instead of throwing") {
    c.doc["payload"]["inner"]["base"]["format"] = "bogus";
    VerifyReport r = verify_certificate(c);
    CHECK_FALSE(r.pass);
    CHECK(mentions(r, "inner base"));
  }
}

TEST_CASE("builders refuse to embed junk") {
  B b("hall-tower");
  Certificate junk;
  junk.doc = json{{"format", "nope"}};
  CHECK_THROWS_AS(b.embed("x", junk), ParseError);
  CHECK_THROWS_AS(emit_certificate(junk), ParseError);
}
