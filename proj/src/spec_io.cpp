#include "hallforge/spec_io.hpp"

#include "hallforge/catalog.hpp"
#include "hallforge/errors.hpp"
#include "hallforge/perm.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace hallforge {

namespace {

std::string trim(const std::string &s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return s.substr(b, e - b);
}

// Strips `#` comments and surrounding whitespace; empty result means skip.
std::string clean_line(const std::string &line) {
  std::size_t hash = line.find('#');
  return trim(hash == std::string::npos ? line : line.substr(0, hash));
}

// Splits "keyword rest" on the first whitespace run.
std::pair<std::string, std::string> keyword_of(const std::string &line) {
  std::size_t sp = line.find_first_of(" \t");
  if (sp == std::string::npos)
    return {line, ""};
  return {line.substr(0, sp), trim(line.substr(sp))};
}

std::optional<long> parse_int(const std::string &s) {
  if (s.empty())
    return std::nullopt;
  std::size_t pos = 0;
  try {
    long v = std::stol(s, &pos);
    if (pos != s.size())
      return std::nullopt;
    return v;
  } catch (...) {
    return std::nullopt;
  }
}

std::size_t find_label(const TableGroup &g, const std::string &name) {
  if (name == "e")
    return g.identity();
  if (name.size() > 1 && name[0] == 'g')
    if (auto idx = parse_int(name.substr(1)))
      if (*idx >= 0 && static_cast<std::size_t>(*idx) < g.generators().size())
        return g.generators()[static_cast<std::size_t>(*idx)];
  if (g.has_labels())
    for (std::size_t a = 0; a < g.order(); ++a)
      if (g.label(a) == name)
        return a;
  throw ParseError("unknown element name '" + name + "'");
}

std::size_t power_of(const TableGroup &g, std::size_t a, long k) {
  std::size_t base = k < 0 ? g.inv(a) : a;
  std::size_t times = static_cast<std::size_t>(k < 0 ? -k : k);
  std::size_t acc = g.identity();
  for (std::size_t i = 0; i < times; ++i)
    acc = g.mul(acc, base);
  return acc;
}

} // namespace

std::size_t resolve_factor(const TableGroup &g, const std::string &token) {
  std::string t = trim(token);
  if (t.empty())
    throw ParseError("empty factor in word");
  // Whole-token names win, so labels like "x^2" stay addressable.
  try {
    return find_label(g, t);
  } catch (const ParseError &) {
  }
  std::size_t caret = t.rfind('^');
  if (caret != std::string::npos)
    if (auto k = parse_int(trim(t.substr(caret + 1))))
      return power_of(g, find_label(g, trim(t.substr(0, caret))), *k);
  throw ParseError("unknown element name '" + t + "'");
}

std::size_t eval_word(const TableGroup &g, const std::string &word) {
  std::string w = trim(word);
  if (w.empty())
    throw ParseError("empty word");
  std::size_t acc = g.identity();
  std::size_t from = 0;
  while (from <= w.size()) {
    std::size_t star = w.find('*', from);
    std::string factor =
        w.substr(from, star == std::string::npos ? std::string::npos
                                                 : star - from);
    acc = g.mul(acc, resolve_factor(g, factor));
    if (star == std::string::npos)
      break;
    from = star + 1;
  }
  return acc;
}

std::vector<std::pair<std::string, std::string>>
parse_map_clauses(const std::string &text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t from = 0;
  while (from <= text.size()) {
    std::size_t semi = text.find(';', from);
    std::string clause = trim(
        text.substr(from, semi == std::string::npos ? std::string::npos
                                                    : semi - from));
    if (!clause.empty()) {
      auto [kw, rest] = keyword_of(clause);
      if (kw != "map")
        throw ParseError("expected 'map <word> -> <word>', got '" + clause +
                         "'");
      std::size_t arrow = rest.find("->");
      if (arrow == std::string::npos)
        throw ParseError("map clause missing '->': '" + clause + "'");
      std::string lhs = trim(rest.substr(0, arrow));
      std::string rhs = trim(rest.substr(arrow + 2));
      if (lhs.empty() || rhs.empty())
        throw ParseError("map clause missing a side: '" + clause + "'");
      out.push_back({lhs, rhs});
    }
    if (semi == std::string::npos)
      break;
    from = semi + 1;
  }
  if (out.empty())
    throw ParseError("no map clauses given");
  return out;
}

GroupHom hom_from_clauses(const TableGroup &dom, const TableGroup &cod,
                          const std::string &clauses) {
  auto pairs = parse_map_clauses(clauses);
  const auto &gens = dom.generators();
  std::vector<std::size_t> images(gens.size(), Subgroup::npos);
  for (const auto &[lw, rw] : pairs) {
    std::size_t le = eval_word(dom, lw);
    auto it = std::find(gens.begin(), gens.end(), le);
    if (it == gens.end())
      throw ParseError("'" + lw + "' is not a designated generator");
    std::size_t slot = static_cast<std::size_t>(it - gens.begin());
    if (images[slot] != Subgroup::npos)
      throw ParseError("generator '" + lw + "' mapped twice");
    images[slot] = eval_word(cod, rw);
  }
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] == Subgroup::npos)
      throw ParseError("generator g" + std::to_string(i) + " has no map line");
  return make_homomorphism(dom, cod, images);
}

std::vector<std::size_t> automorphism_from_clauses(const TableGroup &g,
                                                   const std::string &clauses) {
  return hom_from_clauses(g, g, clauses).images();
}

GroupSpec parse_group_text(const std::string &text) {
  std::string name;
  std::optional<std::uint32_t> degree;
  std::vector<Permutation> gens;

  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = clean_line(raw);
    if (line.empty())
      continue;
    auto [kw, rest] = keyword_of(line);
    if (kw == "group") {
      if (rest.empty())
        throw ParseError("'group' line without a name");
      name = rest;
    } else if (kw == "degree") {
      auto d = parse_int(rest);
      if (!d || *d <= 0)
        throw ParseError("bad degree '" + rest + "'");
      degree = static_cast<std::uint32_t>(*d);
    } else if (kw == "gen") {
      if (!degree)
        throw ParseError("'gen' before 'degree'");
      gens.push_back(parse_cycles(rest, *degree));
    } else {
      throw ParseError("unknown directive '" + kw + "'");
    }
  }
  if (name.empty())
    throw ParseError("group file missing 'group <name>'");
  if (!degree)
    throw ParseError("group file missing 'degree <d>'");
  if (gens.empty())
    gens.push_back(Permutation(*degree));
  return GroupSpec{std::move(name), table_from_perms(*degree, gens)};
}

std::string read_text_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GroupSpec load_group(const std::string &ref) {
  if (ref.rfind("catalog:", 0) == 0) {
    std::string name = ref.substr(8);
    return GroupSpec{name, catalog_group(name)};
  }
  return parse_group_text(read_text_file(ref));
}

PartialIso parse_iso_text(const std::string &text, const TableGroup &ambient) {
  std::vector<std::size_t> dom_decl, cod_decl, lhs, rhs;

  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = clean_line(raw);
    if (line.empty())
      continue;
    auto [kw, rest] = keyword_of(line);
    if (kw == "dom")
      dom_decl.push_back(eval_word(ambient, rest));
    else if (kw == "cod")
      cod_decl.push_back(eval_word(ambient, rest));
    else if (kw == "map") {
      auto pairs = parse_map_clauses(line);
      for (const auto &[lw, rw] : pairs) {
        lhs.push_back(eval_word(ambient, lw));
        rhs.push_back(eval_word(ambient, rw));
      }
    } else {
      throw ParseError("unknown directive '" + kw + "'");
    }
  }
  if (lhs.empty())
    throw ParseError("iso file has no map lines");
  if (!dom_decl.empty() &&
      subgroup_generated(ambient, dom_decl).elements !=
          subgroup_generated(ambient, lhs).elements)
    throw ParseError("dom lines generate a different subgroup than the map "
                     "lines");
  if (!cod_decl.empty() &&
      subgroup_generated(ambient, cod_decl).elements !=
          subgroup_generated(ambient, rhs).elements)
    throw ParseError("cod lines generate a different subgroup than the map "
                     "lines");
  return PartialIso(ambient, lhs, rhs);
}

PartialIso load_iso(const std::string &path, const TableGroup &ambient) {
  return parse_iso_text(read_text_file(path), ambient);
}

AmalgamSpec parse_amalgam_text(const std::string &text,
                               const std::string &base_dir) {
  std::optional<GroupSpec> specs[3];
  std::vector<std::vector<std::size_t>> autos[3];
  std::string f_clauses, g_clauses;

  auto system_slot = [](const std::string &s) -> std::size_t {
    if (s == "A")
      return 0;
    if (s == "B")
      return 1;
    if (s == "C")
      return 2;
    throw ParseError("expected system A, B or C, got '" + s + "'");
  };
  auto resolve_ref = [&base_dir](const std::string &ref) {
    if (ref.rfind("catalog:", 0) == 0 || base_dir.empty())
      return ref;
    std::filesystem::path p(ref);
    return p.is_absolute() ? ref : (std::filesystem::path(base_dir) / p)
                                       .string();
  };

  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = clean_line(raw);
    if (line.empty())
      continue;
    auto [kw, rest] = keyword_of(line);
    if (kw == "group") {
      auto [sys, ref] = keyword_of(rest);
      std::size_t slot = system_slot(sys);
      if (specs[slot])
        throw ParseError("system " + sys + " defined twice");
      specs[slot] = load_group(resolve_ref(ref));
    } else if (kw == "auto") {
      auto [sys, clauses] = keyword_of(rest);
      std::size_t slot = system_slot(sys);
      if (!specs[slot])
        throw ParseError("'auto " + sys + "' before its group line");
      autos[slot].push_back(
          automorphism_from_clauses(specs[slot]->group, clauses));
    } else if (kw == "embed") {
      auto [which, clauses] = keyword_of(rest);
      if (which == "f")
        f_clauses += (f_clauses.empty() ? "" : "; ") + clauses;
      else if (which == "g")
        g_clauses += (g_clauses.empty() ? "" : "; ") + clauses;
      else
        throw ParseError("expected 'embed f' or 'embed g', got '" + which +
                         "'");
    } else {
      throw ParseError("unknown directive '" + kw + "'");
    }
  }

  for (std::size_t s = 0; s < 3; ++s)
    if (!specs[s])
      throw ParseError(std::string("missing 'group ") +
                       static_cast<char>('A' + s) + " <ref>' line");
  if (f_clauses.empty() || g_clauses.empty())
    throw ParseError("both 'embed f' and 'embed g' lines are required");

  GroupHom f =
      hom_from_clauses(specs[0]->group, specs[1]->group, f_clauses);
  GroupHom g =
      hom_from_clauses(specs[0]->group, specs[2]->group, g_clauses);
  return AmalgamSpec{std::move(*specs[0]),  std::move(*specs[1]),
                     std::move(*specs[2]),  std::move(autos[0]),
                     std::move(autos[1]),   std::move(autos[2]),
                     std::move(f),          std::move(g)};
}

AmalgamSpec load_amalgam(const std::string &path) {
  return parse_amalgam_text(read_text_file(path),
                            std::filesystem::path(path).parent_path().string());
}

} // namespace hallforge
