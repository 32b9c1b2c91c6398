#pragma once

/**
 * @file spec_io.hpp
 * @brief Text formats for groups, homomorphisms and amalgamation problems.
 *
 * Group files are line oriented: `group <name>`, `degree <d>`, one
 * `gen <cycles>` line per generator, `#` comments. A group reference is
 * either `catalog:<name>` or a path to such a file.
 *
 * Maps are written as clauses `map <word> -> <word>`, separated by `;`
 * when several clauses share a line. A word is a `*`-separated product
 * of factors, each an element name or `name^<int>`. Element names are
 * the group's labels ("x", "r s", "(1 2 3)") or positional generator
 * names g0, g1, ...; `e` always names the identity.
 */

#include "hallforge/equivariant.hpp"
#include "hallforge/homomorphism.hpp"
#include "hallforge/table_group.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace hallforge {

struct GroupSpec {
  std::string name;
  TableGroup group;
};

GroupSpec parse_group_text(const std::string &text);

// `catalog:<name>` or a file path.
GroupSpec load_group(const std::string &ref);

// One element name or `name^<int>`, resolved against labels and g<i>.
std::size_t resolve_factor(const TableGroup &g, const std::string &token);

// `*`-separated product of factors.
std::size_t eval_word(const TableGroup &g, const std::string &word);

// `map <word> -> <word>` clauses, `;`-separated; returns raw word pairs.
std::vector<std::pair<std::string, std::string>>
parse_map_clauses(const std::string &text);

// Clauses must cover the designated generators exactly once each.
GroupHom hom_from_clauses(const TableGroup &dom, const TableGroup &cod,
                          const std::string &clauses);

// Automorphism given by generator images, as a full element map.
std::vector<std::size_t> automorphism_from_clauses(const TableGroup &g,
                                                   const std::string &clauses);

// Iso files: optional `dom <word>` / `cod <word>` declarations plus
// `map <word> -> <word>` lines, all resolved in the ambient group.
PartialIso parse_iso_text(const std::string &text, const TableGroup &ambient);
PartialIso load_iso(const std::string &path, const TableGroup &ambient);

// Amalgamation problems: `group A|B|C <ref>`, optional `auto <sys> <clauses>`
// lines (one automorphism each), `embed f|g <clauses>` lines (accumulated).
struct AmalgamSpec {
  GroupSpec a, b, c;
  std::vector<std::vector<std::size_t>> autos_a, autos_b, autos_c;
  GroupHom f, g;
};

AmalgamSpec parse_amalgam_text(const std::string &text,
                               const std::string &base_dir = "");
AmalgamSpec load_amalgam(const std::string &path);

std::string read_text_file(const std::string &path);

} // namespace hallforge
