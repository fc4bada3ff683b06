#ifndef FTOP_CLI_HPP_
#define FTOP_CLI_HPP_

// The `ftop` command line. Exit codes: 0 success (or every verdict holds),
// 1 refuted / counterexample found, 2 usage or input error.

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ftop/catalog.hpp"
#include "ftop/dsl.hpp"
#include "ftop/dsl_check.hpp"
#include "ftop/lab.hpp"
#include "ftop/map_classes.hpp"
#include "ftop/serialize.hpp"
#include "ftop/set_classes.hpp"
#include "ftop/space_properties.hpp"

namespace ftop {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;

namespace cli {

inline std::string family_text(const FiniteSpace& s, const SetFamily& fam) {
  std::string out = "{";
  for (std::size_t i = 0; i < fam.members().size(); ++i) {
    out += (i ? ", " : "") + detail::describe(fam.members()[i], s.labels());
  }
  return out + "}";
}

inline void row(std::ostream& out, std::string_view key, const std::string& value) {
  out << std::left << std::setw(26) << std::string(key) + ":" << value << "\n";
}

inline int enumerate(int n, const std::string& path, std::ostream& out) {
  const CatalogFile file = build_catalog(n);
  if (path.empty()) {
    out << serialize_catalog(file);
  } else {
    write_catalog(file, path);
    out << file.records.size() << " topologies on " << n << " points written to " << path << "\n";
  }
  return kExitOk;
}

inline int check(const std::string& claim, int n, bool json, std::ostream& out) {
  const VerificationReport r = verify_claim(claim, n);
  if (json) {
    out << report_to_json(r).dump(2) << "\n";
  } else {
    out << report_table(r);
  }
  return r.verdict == Verdict::holds ? kExitOk : kExitRefuted;
}

inline int search(const std::vector<std::string>& hypos, const std::string& conclusion, int n,
                  std::ostream& out) {
  if (n < 0 || n > kMaxEnumeratedPoints) {
    throw Error(ErrorKind::kTooLarge, "search supports n <= 5, got " + std::to_string(n));
  }
  ImplicationQuery q;
  for (const std::string& h : hypos) add_hypothesis(q, parse_query_term(h));
  q.conclusion = parse_query_term(conclusion);
  check_query(q);
  const auto w = find_counterexample(q, n);
  Json doc{{"query", describe(q)}, {"n_max", n}};
  doc["witness"] = w ? witness_to_json(*w) : Json(nullptr);
  out << doc.dump(2) << "\n";
  return w ? kExitRefuted : kExitOk;
}

inline int classify(const std::string& space_path, const std::string& map_path,
                    const std::string& codomain_path, std::ostream& out) {
  auto x = std::make_shared<const FiniteSpace>(load_space_file(space_path));
  if (map_path.empty()) {
    for (SetClassId id : kAllSetClasses) row(out, name_of(id), family_text(*x, family(*x, id)));
    for (SpacePropertyId p : kAllSpaceProperties) {
      row(out, name_of(p), has_property(*x, p) ? "true" : "false");
    }
    return kExitOk;
  }
  auto y = std::make_shared<const FiniteSpace>(load_space_file(codomain_path));
  const SpaceMap f = load_map_file(map_path, x, y);
  for (const MapClassRule& rule : kMapClassRules) {
    row(out, rule.name, map_in_class(f, rule.id) ? "true" : "false");
  }
  const MapShape shape = map_shape(f);
  row(out, "constant", shape.constant ? "true" : "false");
  row(out, "surjective", shape.surjective ? "true" : "false");
  row(out, "injective", shape.injective ? "true" : "false");
  return kExitOk;
}

inline int dsl_command(const std::string& defs_path, const std::string& space_path,
                       bool against_builtin, int n, std::ostream& out) {
  const std::vector<dsl::Definition> defs = dsl::parse(detail::read_file(defs_path));
  const dsl::Environment env = dsl::Environment::builtin().extend(defs);
  if (!against_builtin) {
    const FiniteSpace space = load_space_file(space_path);
    dsl::Evaluator ev(env);
    for (const dsl::Definition& d : defs) {
      if (d.map_class) {
        row(out, d.name, "(map class)");
      } else {
        row(out, d.name, family_text(space, ev.set_class(space, *env.find(d.name))));
      }
    }
    return kExitOk;
  }
  const dsl::BuiltinComparison cmp = dsl::compare_with_builtin(env, defs, n);
  out << "compared " << cmp.compared.size() << " definitions on " << cmp.spaces << " spaces and "
      << cmp.maps << " maps (n <= " << n << ")\n";
  for (const std::string& name : cmp.unmatched) out << "no built-in counterpart: " << name << "\n";
  for (const dsl::Mismatch& m : cmp.mismatches) {
    out << "mismatch: " << m.definition << " at " << m.where << "\n";
  }
  out << (cmp.agrees() ? "agrees" : "disagrees") << "\n";
  return cmp.agrees() ? kExitOk : kExitRefuted;
}

}  // namespace cli

/// Runs one command; `args` excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out = std::cout,
                       std::ostream& err = std::cerr) {
  CLI::App app{"Finite topological spaces: enumeration, classification and theorem checks",
               "ftop"};
  app.require_subcommand(1);

  int n = -1;
  std::string catalog_path;
  auto* enumerate = app.add_subcommand("enumerate", "List every topology on n points");
  enumerate->add_option("-n", n, "Number of points (<= 4)")->required();
  enumerate->add_option("--catalog", catalog_path, "Write the catalog to this file");

  std::string claim;
  bool json = false;
  auto* check = app.add_subcommand("check", "Verify a catalogued claim exhaustively");
  check->add_option("--claim", claim, "Claim id")->required();
  check->add_option("-n", n, "Largest space size (<= 4)")->required();
  check->add_flag("--json", json, "Emit the report as JSON");

  std::vector<std::string> hypos;
  std::string conclusion;
  auto* search = app.add_subcommand("search", "Look for a counterexample to an implication");
  search->add_option("--hypo", hypos, "Hypotheses: map classes, shapes, domain:/codomain: properties")
      ->required()
      ->delimiter(',');
  search->add_option("--not", conclusion, "Conclusion the witness must violate")->required();
  search->add_option("-n", n, "Largest space size (<= 5)")->required();

  std::string space_path;
  std::string map_path;
  std::string codomain_path;
  auto* classify = app.add_subcommand("classify", "Classify a space, or a map between spaces");
  classify->add_option("--space", space_path, "Space document")->required();
  auto* map_opt = classify->add_option("--map", map_path, "Map document");
  auto* cod_opt = classify->add_option("--codomain", codomain_path, "Codomain space document");
  map_opt->needs(cod_opt);
  cod_opt->needs(map_opt);

  std::string defs_path;
  std::string eval_space;
  bool against_builtin = false;
  int dsl_n = 3;
  auto* dsl = app.add_subcommand("dsl", "Evaluate class definitions");
  dsl->add_option("--defs", defs_path, "Definition file")->required();
  auto* eval_opt = dsl->add_option("--eval-space", eval_space, "Space document to evaluate on");
  auto* builtin_opt = dsl->add_flag("--check-against-builtin", against_builtin,
                                    "Compare definitions named after built-in classes");
  dsl->add_option("-n", dsl_n, "Largest space size for the comparison (<= 3)");
  eval_opt->excludes(builtin_opt);
  builtin_opt->excludes(eval_opt);
  dsl->require_option(1, 0);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (dsl->parsed() && eval_space.empty() && !against_builtin) {
    err << "usage error: dsl needs --eval-space FILE or --check-against-builtin\n";
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) return cli::enumerate(n, catalog_path, out);
    if (check->parsed()) return cli::check(claim, n, json, out);
    if (search->parsed()) return cli::search(hypos, conclusion, n, out);
    if (classify->parsed()) return cli::classify(space_path, map_path, codomain_path, out);
    if (dsl->parsed()) return cli::dsl_command(defs_path, eval_space, against_builtin, dsl_n, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ftop

#endif  // FTOP_CLI_HPP_
