#pragma once

/**
 * @file certificate.hpp
 * @brief Construction certificates: canonical JSON records carrying every
 *        object and equation an independent verifier re-checks.
 *
 * A certificate is a JSON document with five sections under "payload":
 *
 *   spaces   { name: {"degree": d} }              permutation domains
 *   groups   { name: {"space", "gens", "order"?} }  generated perm groups
 *   perms    { name: {"space", "cycles"} }        single permutations
 *   families { name: {"space", "items": [...]} }  indexed permutation lists
 *   maps     { name: [i0, i1, ...] }              index arrays
 *   inner    { name: <certificate> }              embedded certificates
 *
 * and a "checks" array. Each check carries a "source" string naming the
 * statement it re-verifies and one of five forms:
 *
 *   group    well-formedness: stored order (decimal string) matches a
 *            freshly built stabilizer chain; optional transitivity,
 *            regularity (order == degree + transitive), and exact equality
 *            of the breadth-first enumeration with a named family.
 *   hom      an index map between two families is a homomorphism of the
 *            groups they enumerate; optional injectivity/surjectivity.
 *   words    quantified word equation: for every k in the materialized
 *            "domain" list, the lhs and rhs token products agree. Tokens
 *            are permutation names ("h", inverse "~h") or family lookups
 *            {"fam": F, "via": [m1, m2], "inv"?} meaning F[m2[m1[k]]],
 *            maps applied first to last; {"fam": F, "elem": i} pins a
 *            fixed index and needs no domain.
 *   member   each listed word product lies in the named generated group
 *            (stabilizer-chain membership).
 *   abelian  the named generated group is abelian (enumerated, all pairs).
 *
 * Verification uses only the stored data and group arithmetic; it never
 * re-runs construction code and never assumes an ambient group is a full
 * symmetric group. All lookups are bounds-checked: a damaged certificate
 * fails verification rather than crashing.
 *
 * Serialization is canonical: sorted keys, two-space indent, integers and
 * decimal strings only (floats are rejected), trailing newline. Emitting
 * twice yields identical bytes, and emit(parse(emit(c))) == emit(c).
 */

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hallforge {

extern const char *const kCertificateFormat; // "hall-forge-certificate"
constexpr int kCertificateVersion = 1;

struct Certificate {
  nlohmann::json doc;

  std::string kind() const { return doc.at("kind").get<std::string>(); }
};

// Canonical text. Deterministic: identical certificates emit identical bytes.
std::string emit_certificate(const Certificate &c);

// Throws ParseError on malformed JSON, floats anywhere in the document,
// wrong format marker, unknown kind, or unsupported version.
Certificate parse_certificate(const std::string &text);

struct VerifyReport {
  bool pass = false;
  // True when the certificate carries no checks at all.
  bool vacuous = false;
  // One entry per check: (source, number of instances evaluated).
  std::vector<std::pair<std::string, std::size_t>> families;
  std::vector<std::string> violations;
};

VerifyReport verify_certificate(const Certificate &c);
VerifyReport verify_certificate(const std::string &text);

// Assembles the document shape above. Constructors fill it and then run
// verify_certificate on the emitted text before returning.
class CertificateBuilder {
public:
  explicit CertificateBuilder(std::string kind);

  void inputs(nlohmann::json echo);

  void space(const std::string &name, std::uint32_t degree);
  void group(const std::string &name, const std::string &space,
             std::vector<std::string> gens, std::string order = "");
  void perm(const std::string &name, const std::string &space,
            std::string cycles);
  void family(const std::string &name, const std::string &space,
              std::vector<std::string> items);
  void map(const std::string &name, const std::vector<std::size_t> &indices);
  void embed(const std::string &name, const Certificate &inner);

  // Word tokens. `via` maps are applied first to last before indexing.
  static nlohmann::json tok(const std::string &perm_name);
  static nlohmann::json inv(const std::string &perm_name);
  static nlohmann::json fam(const std::string &family,
                            std::vector<std::string> via = {},
                            bool inverted = false);
  static nlohmann::json fam_at(const std::string &family, std::size_t elem,
                               bool inverted = false);
  static std::vector<std::size_t> iota(std::size_t n);

  void check_group(const std::string &source, const std::string &group,
                   const std::string &order = "", bool transitive = false,
                   bool regular = false, const std::string &elems = "");
  void check_hom(const std::string &source, const std::string &dom,
                 const std::string &cod, const std::string &map,
                 bool injective = false, bool surjective = false);
  void check_words(const std::string &source, const std::string &space,
                   nlohmann::json lhs, nlohmann::json rhs,
                   std::optional<std::vector<std::size_t>> domain = {});
  void check_member(const std::string &source, const std::string &group,
                    std::vector<nlohmann::json> items);
  void check_abelian(const std::string &source, const std::string &group);

  Certificate build() const { return Certificate{doc_}; }

private:
  nlohmann::json &section(const char *name);
  nlohmann::json doc_;
};

} // namespace hallforge
