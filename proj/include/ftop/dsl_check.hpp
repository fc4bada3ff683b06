#ifndef FTOP_DSL_CHECK_HPP_
#define FTOP_DSL_CHECK_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ftop/dsl.hpp"
#include "ftop/enumerate.hpp"
#include "ftop/map_classes.hpp"
#include "ftop/set_classes.hpp"
#include "ftop/universe.hpp"

namespace ftop::dsl {

struct Mismatch {
  std::string definition;
  std::string where;  // the space (and map) on which the two disagree
};

struct BuiltinComparison {
  int n_max = 0;
  std::uint64_t spaces = 0;
  std::uint64_t maps = 0;
  std::vector<std::string> compared;   // definitions named after a native class
  std::vector<std::string> unmatched;  // definitions with no native counterpart
  std::vector<Mismatch> mismatches;

  bool agrees() const { return mismatches.empty(); }
};

namespace detail {

inline std::string space_text(const FiniteSpace& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.opens().members().size(); ++i) {
    out += (i ? ", " : "") + ftop::detail::describe(s.opens().members()[i], s.labels());
  }
  return out + "}";
}

}  // namespace detail

/// Evaluates every definition whose name is a native set or map class on all
/// spaces (and all maps between spaces) with at most n_max points and
/// compares the results with the native registries.
inline BuiltinComparison compare_with_builtin(const Environment& env,
                                              const std::vector<Definition>& defs, int n_max) {
  if (n_max < 0 || n_max > 3) {
    throw Error(ErrorKind::kTooLarge, "DSL comparison supports n <= 3, got " + std::to_string(n_max));
  }
  BuiltinComparison out;
  out.n_max = n_max;
  std::vector<std::pair<const Definition*, SetClassId>> set_defs;
  std::vector<std::pair<const Definition*, MapClassId>> map_defs;
  for (const Definition& d : defs) {
    const Definition* resolved = env.find(d.name);
    if (!d.map_class) {
      if (auto id = parse_set_class(d.name)) {
        set_defs.emplace_back(resolved, *id);
        out.compared.push_back(d.name);
        continue;
      }
    } else if (auto id = parse_map_class(d.name)) {
      map_defs.emplace_back(resolved, *id);
      out.compared.push_back(d.name);
      continue;
    }
    out.unmatched.push_back(d.name);
  }

  Evaluator ev(env);
  auto note = [&](const std::string& name, std::string where) {
    out.mismatches.push_back({name, std::move(where)});
  };
  for (int n = 0; n <= n_max; ++n) {
    for (const SpaceProfile& p : universe(n).profiles) {
      ++out.spaces;
      for (const auto& [def, id] : set_defs) {
        if (!(ev.set_class(*p.space, *def) == family(*p.space, id))) {
          note(def->name, "X = " + detail::space_text(*p.space));
        }
      }
    }
  }
  if (map_defs.empty()) return out;
  std::vector<int> assignment;
  for (int nx = 0; nx <= n_max; ++nx) {
    for (int ny = 0; ny <= n_max; ++ny) {
      const std::uint64_t count = map_count(nx, ny);
      for (const SpaceProfile& px : universe(nx).profiles) {
        for (const SpaceProfile& py : universe(ny).profiles) {
          for (std::uint64_t k = 0; k < count; ++k) {
            assignment_at(k, nx, ny, assignment);
            const SpaceMap f(px.space, py.space, assignment);
            ++out.maps;
            for (const auto& [def, id] : map_defs) {
              if (ev.map_class(f, *def) != map_in_class(f, id)) {
                std::string where = "X = " + detail::space_text(*px.space) +
                                    ", Y = " + detail::space_text(*py.space) + ", f =";
                for (int i = 0; i < nx; ++i) where += " " + std::to_string(assignment[i]);
                note(def->name, where);
              }
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace ftop::dsl

#endif  // FTOP_DSL_CHECK_HPP_
