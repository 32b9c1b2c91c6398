#include "hallforge/certificate.hpp"

#include "hallforge/bigint.hpp"
#include "hallforge/errors.hpp"
#include "hallforge/limits.hpp"
#include "hallforge/perm.hpp"
#include "hallforge/perm_group.hpp"

#include <memory>
#include <unordered_map>
#include <unordered_set>

namespace hallforge {

using nlohmann::json;

const char *const kCertificateFormat = "hall-forge-certificate";

namespace {

const char *const kKinds[] = {"extension",  "amalgam", "equivariant-amalgam",
                              "commuting",  "root",    "hall-tower",
                              "power-tower"};

void reject_floats(const json &j) {
  if (j.is_number_float())
    throw ParseError("certificates must not contain floating point numbers");
  if (j.is_array() || j.is_object())
    for (const auto &v : j)
      reject_floats(v);
}

void validate_structure(const json &doc) {
  if (!doc.is_object())
    throw ParseError("certificate must be a JSON object");
  if (!doc.contains("format") || doc["format"] != kCertificateFormat)
    throw ParseError("missing or wrong format marker");
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<long long>() != kCertificateVersion)
    throw ParseError("unsupported certificate version");
  if (!doc.contains("kind") || !doc["kind"].is_string())
    throw ParseError("certificate kind missing");
  bool known = false;
  for (const char *k : kKinds)
    known = known || doc["kind"] == k;
  if (!known)
    throw ParseError("unknown certificate kind '" +
                     doc["kind"].get<std::string>() + "'");
  if (!doc.contains("payload") || !doc["payload"].is_object())
    throw ParseError("certificate payload missing");
  if (!doc.contains("checks") || !doc["checks"].is_array())
    throw ParseError("certificate checks missing");
  reject_floats(doc);
}

// Abort the current check; the caller turns this into one violation line.
struct CheckFail {
  std::string msg;
};

[[noreturn]] void fail(std::string msg) { throw CheckFail{std::move(msg)}; }

const json &lookup(const json &payload, const char *section,
                   const std::string &name) {
  if (!payload.contains(section) || !payload[section].is_object())
    fail(std::string("no ") + section + " section");
  const json &sec = payload[section];
  auto it = sec.find(name);
  if (it == sec.end())
    fail(std::string(section) + " entry '" + name + "' missing");
  return *it;
}

// Cached, bounds-checked access to payload objects. Any malformed or
// missing entry raises CheckFail, failing the check that needed it.
class Resolver {
public:
  explicit Resolver(const json &payload) : payload_(payload) {}

  std::uint32_t degree(const std::string &space) {
    const json &s = lookup(payload_, "spaces", space);
    if (!s.is_object() || !s.contains("degree") ||
        !s["degree"].is_number_integer())
      fail("space '" + space + "' has no integer degree");
    long long d = s["degree"].get<long long>();
    if (d < 1 || d > 1u << 30)
      fail("space '" + space + "' degree out of range");
    return static_cast<std::uint32_t>(d);
  }

  Permutation parse_in_space(const std::string &what, const json &entry) {
    if (!entry.is_object() || !entry.contains("space") ||
        !entry["space"].is_string() || !entry.contains("cycles") ||
        !entry["cycles"].is_string())
      fail(what + " is malformed");
    std::uint32_t d = degree(entry["space"].get<std::string>());
    try {
      return parse_cycles(entry["cycles"].get<std::string>(), d);
    } catch (const Error &e) {
      fail(what + ": " + e.what());
    }
  }

  const Permutation &perm(const std::string &name) {
    auto it = perms_.find(name);
    if (it != perms_.end())
      return it->second;
    Permutation p =
        parse_in_space("permutation '" + name + "'", lookup(payload_, "perms", name));
    return perms_.emplace(name, std::move(p)).first->second;
  }

  const std::vector<Permutation> &family(const std::string &name) {
    auto it = families_.find(name);
    if (it != families_.end())
      return it->second;
    const json &f = lookup(payload_, "families", name);
    if (!f.is_object() || !f.contains("space") || !f["space"].is_string() ||
        !f.contains("items") || !f["items"].is_array())
      fail("family '" + name + "' is malformed");
    std::uint32_t d = degree(f["space"].get<std::string>());
    std::vector<Permutation> items;
    for (const json &c : f["items"]) {
      if (!c.is_string())
        fail("family '" + name + "' has a non-string item");
      try {
        items.push_back(parse_cycles(c.get<std::string>(), d));
      } catch (const Error &e) {
        fail("family '" + name + "': " + std::string(e.what()));
      }
    }
    return families_.emplace(name, std::move(items)).first->second;
  }

  const std::vector<long long> &map_array(const std::string &name) {
    auto it = maps_.find(name);
    if (it != maps_.end())
      return it->second;
    const json &m = lookup(payload_, "maps", name);
    if (!m.is_array())
      fail("map '" + name + "' is not an array");
    std::vector<long long> vals;
    for (const json &v : m) {
      if (!v.is_number_integer())
        fail("map '" + name + "' has a non-integer entry");
      vals.push_back(v.get<long long>());
    }
    return maps_.emplace(name, std::move(vals)).first->second;
  }

  const PermGroup &group(const std::string &name) {
    auto it = groups_.find(name);
    if (it != groups_.end())
      return *it->second;
    const json &g = lookup(payload_, "groups", name);
    if (!g.is_object() || !g.contains("space") || !g["space"].is_string() ||
        !g.contains("gens") || !g["gens"].is_array())
      fail("group '" + name + "' is malformed");
    std::uint32_t d = degree(g["space"].get<std::string>());
    std::vector<Permutation> gens;
    for (const json &c : g["gens"]) {
      if (!c.is_string())
        fail("group '" + name + "' has a non-string generator");
      try {
        gens.push_back(parse_cycles(c.get<std::string>(), d));
      } catch (const Error &e) {
        fail("group '" + name + "': " + std::string(e.what()));
      }
    }
    auto pg = std::make_shared<PermGroup>(d, std::move(gens));
    return *groups_.emplace(name, std::move(pg)).first->second;
  }

  const std::vector<Permutation> &group_elements(const std::string &name) {
    auto it = group_elems_.find(name);
    if (it != group_elems_.end())
      return it->second;
    const PermGroup &pg = group(name);
    try {
      return group_elems_.emplace(name, enumerate_elements(pg)).first->second;
    } catch (const Error &e) {
      fail("group '" + name + "': " + std::string(e.what()));
    }
  }

  std::string stored_order(const std::string &name) {
    const json &g = lookup(payload_, "groups", name);
    if (!g.contains("order") || !g["order"].is_string())
      fail("group '" + name + "' has no stored order");
    return g["order"].get<std::string>();
  }

private:
  const json &payload_;
  std::unordered_map<std::string, Permutation> perms_;
  std::unordered_map<std::string, std::vector<Permutation>> families_;
  std::unordered_map<std::string, std::vector<long long>> maps_;
  std::unordered_map<std::string, std::shared_ptr<PermGroup>> groups_;
  std::unordered_map<std::string, std::vector<Permutation>> group_elems_;
};

std::size_t checked_index(long long v, std::size_t size, const char *what) {
  if (v < 0 || static_cast<std::size_t>(v) >= size)
    fail(std::string(what) + " index " + std::to_string(v) + " out of range");
  return static_cast<std::size_t>(v);
}

Permutation eval_token(Resolver &r, const json &tok, std::uint32_t deg,
                       long long k) {
  Permutation p(1);
  bool invert = false;
  if (tok.is_string()) {
    std::string name = tok.get<std::string>();
    if (!name.empty() && name[0] == '~') {
      invert = true;
      name.erase(0, 1);
    }
    p = r.perm(name);
  } else if (tok.is_object() && tok.contains("fam") && tok["fam"].is_string()) {
    long long idx;
    if (tok.contains("elem")) {
      if (!tok["elem"].is_number_integer())
        fail("token elem is not an integer");
      idx = tok["elem"].get<long long>();
    } else if (k >= 0) {
      idx = k;
    } else {
      fail("quantified token in a word without a domain");
    }
    if (tok.contains("via")) {
      if (!tok["via"].is_array())
        fail("token via is not an array");
      for (const json &m : tok["via"]) {
        if (!m.is_string())
          fail("token via entry is not a map name");
        const auto &arr = r.map_array(m.get<std::string>());
        idx = arr[checked_index(idx, arr.size(), "via")];
      }
    }
    const auto &items = r.family(tok["fam"].get<std::string>());
    p = items[checked_index(idx, items.size(), "family")];
    invert = tok.value("inv", false);
  } else {
    fail("unrecognized word token");
  }
  if (p.degree() != deg)
    fail("token degree does not match the word's space");
  return invert ? p.inverse() : p;
}

Permutation eval_word(Resolver &r, const json &word, std::uint32_t deg,
                      long long k) {
  if (!word.is_array())
    fail("word is not a token array");
  Permutation acc(deg);
  for (const json &tok : word)
    acc = acc * eval_token(r, tok, deg, k);
  return acc;
}

std::size_t run_group_check(Resolver &r, const json &c) {
  if (!c.contains("group") || !c["group"].is_string())
    fail("group check names no group");
  std::string name = c["group"].get<std::string>();
  const PermGroup &pg = r.group(name);
  std::size_t count = 1;
  bool want_regular = c.value("regular", false);
  if (c.contains("order") || want_regular) {
    BigInt actual = pg.order();
    if (c.contains("order")) {
      if (!c["order"].is_string())
        fail("order claim is not a decimal string");
      if (actual != parse_decimal(c["order"].get<std::string>()))
        fail("group '" + name + "' order mismatch");
    }
    if (want_regular && actual != BigInt(pg.degree()))
      fail("group '" + name + "' is not regular: order differs from degree");
  }
  if (c.value("transitive", false) || want_regular) {
    if (pg.orbit(1).size() != pg.degree())
      fail("group '" + name + "' is not transitive");
  }
  if (c.contains("elems")) {
    if (!c["elems"].is_string())
      fail("elems claim is not a family name");
    const auto &stored = r.family(c["elems"].get<std::string>());
    const auto &actual = r.group_elements(name);
    if (stored.size() != actual.size())
      fail("group '" + name + "' enumeration length mismatch");
    for (std::size_t i = 0; i < stored.size(); ++i)
      if (!(stored[i] == actual[i]))
        fail("group '" + name + "' enumeration differs at position " +
             std::to_string(i));
    count += stored.size();
  }
  return count;
}

std::size_t run_hom_check(Resolver &r, const json &c) {
  for (const char *f : {"dom", "cod", "map"})
    if (!c.contains(f) || !c[f].is_string())
      fail(std::string("hom check missing '") + f + "'");
  const auto &dom = r.family(c["dom"].get<std::string>());
  const auto &cod = r.family(c["cod"].get<std::string>());
  const auto &map = r.map_array(c["map"].get<std::string>());
  if (map.size() != dom.size())
    fail("map length differs from domain family size");

  std::unordered_map<Permutation, std::size_t, PermHash> index;
  for (std::size_t i = 0; i < dom.size(); ++i)
    if (!index.emplace(dom[i], i).second)
      fail("domain family has repeated elements");

  std::vector<std::size_t> img(map.size());
  for (std::size_t i = 0; i < map.size(); ++i)
    img[i] = checked_index(map[i], cod.size(), "map");

  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = 0; j < dom.size(); ++j) {
      auto it = index.find(dom[i] * dom[j]);
      if (it == index.end())
        fail("domain family is not closed under multiplication");
      if (!(cod[img[it->second]] == cod[img[i]] * cod[img[j]]))
        fail("map is not a homomorphism at pair (" + std::to_string(i) + "," +
             std::to_string(j) + ")");
    }

  if (c.value("injective", false) || c.value("surjective", false)) {
    std::unordered_set<Permutation, PermHash> images;
    for (std::size_t v : img) {
      if (!images.insert(cod[v]).second && c.value("injective", false))
        fail("map is not injective");
    }
    if (c.value("surjective", false))
      for (const Permutation &p : cod)
        if (!images.count(p))
          fail("map is not surjective");
  }
  return dom.size() * dom.size();
}

std::size_t run_words_check(Resolver &r, const json &c) {
  if (!c.contains("space") || !c["space"].is_string())
    fail("word check names no space");
  std::uint32_t deg = r.degree(c["space"].get<std::string>());
  if (!c.contains("lhs") || !c.contains("rhs"))
    fail("word check missing a side");
  if (!c.contains("domain")) {
    if (!(eval_word(r, c["lhs"], deg, -1) == eval_word(r, c["rhs"], deg, -1)))
      fail("sides differ");
    return 1;
  }
  if (!c["domain"].is_array())
    fail("domain is not an array");
  std::size_t count = 0;
  for (const json &kj : c["domain"]) {
    if (!kj.is_number_integer() || kj.get<long long>() < 0)
      fail("domain entry is not a nonnegative integer");
    long long k = kj.get<long long>();
    if (!(eval_word(r, c["lhs"], deg, k) == eval_word(r, c["rhs"], deg, k)))
      fail("sides differ at domain element " + std::to_string(k));
    ++count;
  }
  return count;
}

std::size_t run_member_check(Resolver &r, const json &c) {
  if (!c.contains("group") || !c["group"].is_string())
    fail("membership check names no group");
  const PermGroup &pg = r.group(c["group"].get<std::string>());
  if (!c.contains("items") || !c["items"].is_array())
    fail("membership check has no items");
  std::size_t count = 0;
  for (const json &w : c["items"]) {
    if (!pg.contains(eval_word(r, w, pg.degree(), -1)))
      fail("item " + std::to_string(count) + " is not in the group");
    ++count;
  }
  return count;
}

std::size_t run_abelian_check(Resolver &r, const json &c) {
  if (!c.contains("group") || !c["group"].is_string())
    fail("abelian check names no group");
  const auto &elems = r.group_elements(c["group"].get<std::string>());
  std::size_t count = 0;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (!(elems[i] * elems[j] == elems[j] * elems[i]))
        fail("elements " + std::to_string(i) + " and " + std::to_string(j) +
             " do not commute");
      ++count;
    }
  return count;
}

} // namespace

std::string emit_certificate(const Certificate &c) {
  validate_structure(c.doc);
  return c.doc.dump(2) + "\n";
}

Certificate parse_certificate(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception &e) {
    throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
  }
  validate_structure(doc);
  return Certificate{std::move(doc)};
}

VerifyReport verify_certificate(const Certificate &c) {
  validate_structure(c.doc);
  VerifyReport report;
  const json &payload = c.doc["payload"];
  Resolver resolver(payload);

  std::size_t index = 0;
  for (const json &check : c.doc["checks"]) {
    std::string source = "check #" + std::to_string(index);
    if (check.is_object() && check.contains("source") &&
        check["source"].is_string())
      source = check["source"].get<std::string>();
    std::size_t count = 0;
    try {
      if (!check.is_object() || !check.contains("check") ||
          !check["check"].is_string())
        fail("check entry is malformed");
      std::string kind = check["check"].get<std::string>();
      if (kind == "group")
        count = run_group_check(resolver, check);
      else if (kind == "hom")
        count = run_hom_check(resolver, check);
      else if (kind == "words")
        count = run_words_check(resolver, check);
      else if (kind == "member")
        count = run_member_check(resolver, check);
      else if (kind == "abelian")
        count = run_abelian_check(resolver, check);
      else
        fail("unknown check kind '" + kind + "'");
    } catch (const CheckFail &f) {
      report.violations.push_back(source + ": " + f.msg);
    } catch (const Error &e) {
      report.violations.push_back(source + ": " + e.what());
    }
    report.families.emplace_back(std::move(source), count);
    ++index;
  }

  if (payload.contains("inner")) {
    if (!payload["inner"].is_object()) {
      report.violations.push_back("inner: section is not an object");
    } else {
      for (const auto &[name, doc] : payload["inner"].items()) {
        try {
          VerifyReport sub = verify_certificate(Certificate{doc});
          for (const auto &v : sub.violations)
            report.violations.push_back("inner " + name + ": " + v);
          for (auto &f : sub.families)
            report.families.emplace_back(name + "/" + f.first, f.second);
        } catch (const Error &e) {
          report.violations.push_back("inner " + name + ": " + e.what());
        }
      }
    }
  }

  std::size_t total = 0;
  for (const auto &f : report.families)
    total += f.second;
  report.vacuous = total == 0;
  report.pass = report.violations.empty();
  return report;
}

VerifyReport verify_certificate(const std::string &text) {
  return verify_certificate(parse_certificate(text));
}

CertificateBuilder::CertificateBuilder(std::string kind) {
  doc_["format"] = kCertificateFormat;
  doc_["version"] = kCertificateVersion;
  doc_["kind"] = std::move(kind);
  doc_["payload"] = json::object();
  doc_["checks"] = json::array();
}

void CertificateBuilder::inputs(json echo) { doc_["inputs"] = std::move(echo); }

json &CertificateBuilder::section(const char *name) {
  json &payload = doc_["payload"];
  if (!payload.contains(name))
    payload[name] = json::object();
  return payload[name];
}

void CertificateBuilder::space(const std::string &name, std::uint32_t degree) {
  section("spaces")[name] = {{"degree", degree}};
}

void CertificateBuilder::group(const std::string &name, const std::string &space,
                               std::vector<std::string> gens, std::string order) {
  json g = {{"space", space}, {"gens", std::move(gens)}};
  if (!order.empty())
    g["order"] = std::move(order);
  section("groups")[name] = std::move(g);
}

void CertificateBuilder::perm(const std::string &name, const std::string &space,
                              std::string cycles) {
  section("perms")[name] = {{"space", space}, {"cycles", std::move(cycles)}};
}

void CertificateBuilder::family(const std::string &name, const std::string &space,
                                std::vector<std::string> items) {
  section("families")[name] = {{"space", space}, {"items", std::move(items)}};
}

void CertificateBuilder::map(const std::string &name,
                             const std::vector<std::size_t> &indices) {
  section("maps")[name] = indices;
}

void CertificateBuilder::embed(const std::string &name, const Certificate &inner) {
  validate_structure(inner.doc);
  section("inner")[name] = inner.doc;
}

json CertificateBuilder::tok(const std::string &perm_name) { return perm_name; }

json CertificateBuilder::inv(const std::string &perm_name) {
  return "~" + perm_name;
}

json CertificateBuilder::fam(const std::string &family,
                             std::vector<std::string> via, bool inverted) {
  json t = {{"fam", family}};
  if (!via.empty())
    t["via"] = std::move(via);
  if (inverted)
    t["inv"] = true;
  return t;
}

json CertificateBuilder::fam_at(const std::string &family, std::size_t elem,
                                bool inverted) {
  json t = {{"fam", family}, {"elem", elem}};
  if (inverted)
    t["inv"] = true;
  return t;
}

std::vector<std::size_t> CertificateBuilder::iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = i;
  return v;
}

void CertificateBuilder::check_group(const std::string &source,
                                     const std::string &group,
                                     const std::string &order, bool transitive,
                                     bool regular, const std::string &elems) {
  json c = {{"check", "group"}, {"source", source}, {"group", group}};
  if (!order.empty())
    c["order"] = order;
  if (transitive)
    c["transitive"] = true;
  if (regular)
    c["regular"] = true;
  if (!elems.empty())
    c["elems"] = elems;
  doc_["checks"].push_back(std::move(c));
}

void CertificateBuilder::check_hom(const std::string &source,
                                   const std::string &dom, const std::string &cod,
                                   const std::string &map, bool injective,
                                   bool surjective) {
  json c = {{"check", "hom"}, {"source", source}, {"dom", dom},
            {"cod", cod},     {"map", map}};
  if (injective)
    c["injective"] = true;
  if (surjective)
    c["surjective"] = true;
  doc_["checks"].push_back(std::move(c));
}

void CertificateBuilder::check_words(const std::string &source,
                                     const std::string &space, json lhs, json rhs,
                                     std::optional<std::vector<std::size_t>> domain) {
  json c = {{"check", "words"},
            {"source", source},
            {"space", space},
            {"lhs", std::move(lhs)},
            {"rhs", std::move(rhs)}};
  if (domain)
    c["domain"] = *domain;
  doc_["checks"].push_back(std::move(c));
}

void CertificateBuilder::check_member(const std::string &source,
                                      const std::string &group,
                                      std::vector<json> items) {
  doc_["checks"].push_back(
      {{"check", "member"}, {"source", source}, {"group", group}, {"items", items}});
}

void CertificateBuilder::check_abelian(const std::string &source,
                                       const std::string &group) {
  doc_["checks"].push_back(
      {{"check", "abelian"}, {"source", source}, {"group", group}});
}

} // namespace hallforge
