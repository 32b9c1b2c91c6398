#include "CLI11.hpp"

#include "hallforge/amalgam.hpp"
#include "hallforge/catalog.hpp"
#include "hallforge/certificate.hpp"
#include "hallforge/equivariant.hpp"
#include "hallforge/errors.hpp"
#include "hallforge/hrushovski.hpp"
#include "hallforge/limits.hpp"
#include "hallforge/roots.hpp"
#include "hallforge/spec_io.hpp"
#include "hallforge/table_group.hpp"
#include "hallforge/tower.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace hallforge;

namespace {

void write_certificate(const std::string &path, const Certificate &cert) {
  std::string text = emit_certificate(cert);
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("cannot write '" + path + "'");
  out << text;
  if (!out.flush())
    throw Error("short write to '" + path + "'");
  std::cerr << "wrote " << cert.doc["kind"].get<std::string>()
            << " certificate to " << path << "\n";
}

std::vector<std::string> split_csv(const std::string &s) {
  std::vector<std::string> out;
  std::size_t from = 0;
  while (from <= s.size()) {
    std::size_t comma = s.find(',', from);
    std::string item = s.substr(
        from, comma == std::string::npos ? std::string::npos : comma - from);
    if (!item.empty())
      out.push_back(item);
    if (comma == std::string::npos)
      break;
    from = comma + 1;
  }
  return out;
}

struct RootInputs {
  TableGroup b;
  Subgroup a;
  std::vector<std::size_t> alpha;
  std::vector<std::size_t> beta;
};

RootInputs load_root_inputs(const std::string &group_ref,
                            const std::string &subgroup_csv,
                            const std::string &alpha_clauses,
                            const std::string &beta_clauses) {
  GroupSpec gs = load_group(group_ref);
  std::vector<std::size_t> gens;
  if (subgroup_csv.empty())
    gens = gs.group.generators();
  else
    for (const std::string &w : split_csv(subgroup_csv))
      gens.push_back(eval_word(gs.group, w));
  Subgroup a = subgroup_generated(gs.group, gens);
  std::vector<std::size_t> alpha =
      hom_from_clauses(a.group, a.group, alpha_clauses).images();
  std::vector<std::size_t> beta =
      automorphism_from_clauses(gs.group, beta_clauses);
  return RootInputs{std::move(gs.group), std::move(a), std::move(alpha),
                    std::move(beta)};
}

int run_verify(const std::string &path) {
  VerifyReport report = verify_certificate(read_text_file(path));
  for (const auto &[source, count] : report.families)
    std::cout << source << ": " << count << " checks\n";
  for (const std::string &v : report.violations)
    std::cerr << "violation: " << v << "\n";
  if (report.vacuous)
    std::cerr << "warning: no checks were run\n";
  std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
  return report.pass ? 0 : 2;
}

void run_catalog() {
  std::vector<std::string> names;
  for (std::size_t n = 1; n <= 32; ++n)
    names.push_back("C" + std::to_string(n));
  for (std::size_t n = 1; n <= 8; ++n)
    names.push_back("S" + std::to_string(n));
  for (std::size_t n = 1; n <= 8; ++n)
    names.push_back("A" + std::to_string(n));
  for (std::size_t n = 1; n <= 12; ++n)
    names.push_back("D" + std::to_string(n));
  names.push_back("Q8");
  names.push_back("V4");
  for (const std::string &name : names) {
    TableGroup g = catalog_group(name);
    std::cout << name << " order " << g.order() << " generators "
              << g.generators().size() << "\n";
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"finite-group constructions with verifiable certificates"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::uint32_t cap = limits::default_degree_cap;
  std::string group_ref, out_path, spec_path, subgroup_csv;
  std::string alpha_clauses, beta_clauses, seed_ref = "catalog:C3";
  std::string kind = "hall", cert_path;
  std::vector<std::string> iso_files;
  std::size_t depth = 0, power_n = 0;
  bool equivariant = false;

  CLI::App *extend = app.add_subcommand(
      "extend", "realize partial isomorphisms as inner automorphisms");
  extend->add_option("--group", group_ref, "group file or catalog:<name>")
      ->required();
  extend->add_option("--iso", iso_files, "partial isomorphism file");
  extend->add_option("--out", out_path, "certificate output file")->required();
  extend->add_option("--degree-cap", cap, "largest allowed ambient degree");

  CLI::App *amal = app.add_subcommand(
      "amalgamate", "complete two embeddings over a common subgroup");
  amal->add_option("--spec", spec_path, "amalgamation problem file")
      ->required();
  amal->add_flag("--equivariant", equivariant,
                 "carry automorphism tuples through the amalgam");
  amal->add_option("--out", out_path, "certificate output file")->required();
  amal->add_option("--degree-cap", cap, "largest allowed ambient degree");

  CLI::App *commute = app.add_subcommand(
      "commute", "extend a commuting automorphism pair to inner ones");
  commute->add_option("--group", group_ref, "group file or catalog:<name>")
      ->required();
  commute->add_option("--subgroup", subgroup_csv,
                      "comma-separated generator words (default: whole group)");
  commute->add_option("--alpha", alpha_clauses, "automorphism of the subgroup")
      ->required();
  commute->add_option("--beta", beta_clauses, "automorphism of the group")
      ->required();
  commute->add_option("--out", out_path, "certificate output file")
      ->required();
  commute->add_option("--degree-cap", cap, "largest allowed ambient degree");

  CLI::App *root = app.add_subcommand(
      "root", "realize an automorphism as the n-th power of another");
  root->add_option("--group", group_ref, "group file or catalog:<name>")
      ->required();
  root->add_option("--subgroup", subgroup_csv,
                   "comma-separated generator words (default: whole group)");
  root->add_option("--alpha", alpha_clauses, "automorphism of the subgroup")
      ->required();
  root->add_option("--beta", beta_clauses, "automorphism of the group")
      ->required();
  root->add_option("--n", power_n, "root exponent")->required();
  root->add_option("--out", out_path, "certificate output file")->required();
  root->add_option("--degree-cap", cap, "largest allowed ambient degree");

  CLI::App *tower = app.add_subcommand(
      "tower", "iterated symmetric-group or power towers");
  tower->add_option("--kind", kind, "hall or power")
      ->check(CLI::IsMember({"hall", "power"}));
  tower->add_option("--depth", depth, "extension steps")->required();
  tower->add_option("--seed", seed_ref, "seed group (default catalog:C3)");
  tower->add_option("--n", power_n, "power exponent (kind power)");
  tower->add_option("--alpha", alpha_clauses,
                    "seed automorphism (kind power)");
  tower->add_option("--out", out_path, "certificate output file")->required();
  tower->add_option("--degree-cap", cap, "largest allowed stage degree");

  CLI::App *verify =
      app.add_subcommand("verify", "re-check a certificate by multiplication");
  verify->add_option("certificate", cert_path, "certificate file")->required();

  app.add_subcommand("catalog", "list built-in groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (app.got_subcommand(extend)) {
      GroupSpec gs = load_group(group_ref);
      std::vector<PartialIso> psis;
      for (const std::string &path : iso_files)
        psis.push_back(load_iso(path, gs.group));
      ExtensionResult res = hrushovski_extend(gs.group, psis, cap);
      std::cerr << "ambient degree " << res.degree << ", " << psis.size()
                << " conjugators\n";
      write_certificate(out_path, res.certificate);
    } else if (app.got_subcommand(amal)) {
      AmalgamSpec spec = load_amalgam(spec_path);
      if (equivariant) {
        EquivariantAmalgamResult res = equivariant_amalgamate(
            make_system(spec.a.group, spec.autos_a),
            make_system(spec.b.group, spec.autos_b),
            make_system(spec.c.group, spec.autos_c), spec.f, spec.g, cap);
        std::cerr << "|W| = " << res.w.w.order() << ", |L| = "
                  << res.l.order() << ", |M| = " << res.m.order()
                  << ", |N| = " << res.n.order() << "\n";
        write_certificate(out_path, res.certificate);
      } else {
        AmalgamResult res = amalgamate(spec.f, spec.g, cap);
        std::cerr << "ambient degree " << res.degree << "\n";
        write_certificate(out_path, res.certificate);
      }
    } else if (app.got_subcommand(commute)) {
      RootInputs in = load_root_inputs(group_ref, subgroup_csv, alpha_clauses,
                                       beta_clauses);
      CommutingResult res =
          commuting_extension(in.b, in.a, in.alpha, in.beta, cap);
      std::cerr << "ambient degree " << res.degree << "\n";
      write_certificate(out_path, res.certificate);
    } else if (app.got_subcommand(root)) {
      RootInputs in = load_root_inputs(group_ref, subgroup_csv, alpha_clauses,
                                       beta_clauses);
      RootResult res =
          root_extension(in.b, in.a, in.alpha, in.beta, power_n, cap);
      std::cerr << "ambient degree " << res.degree << " (" << res.realization
                << ")\n";
      write_certificate(out_path, res.certificate);
    } else if (app.got_subcommand(tower)) {
      GroupSpec seed = load_group(seed_ref);
      if (kind == "hall") {
        HallTower res = hall_tower(depth, seed.group, cap);
        std::cerr << "degrees";
        for (const TowerStage &st : res.stages)
          std::cerr << " " << st.degree;
        std::cerr << "\n";
        write_certificate(out_path, res.certificate);
      } else {
        if (alpha_clauses.empty())
          throw ParseError("--kind power requires --alpha");
        EquivariantSystem sys = make_system(
            seed.group,
            {automorphism_from_clauses(seed.group, alpha_clauses)});
        PowerTower res = generic_power_tower(power_n, depth, sys, cap);
        std::cerr << res.steps.size() << " steps\n";
        write_certificate(out_path, res.certificate);
      }
    } else if (app.got_subcommand(verify)) {
      return run_verify(cert_path);
    } else {
      run_catalog();
    }
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
