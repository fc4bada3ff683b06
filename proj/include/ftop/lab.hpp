#ifndef FTOP_LAB_HPP_
#define FTOP_LAB_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "ftop/fixtures.hpp"
#include "ftop/map_classes.hpp"
#include "ftop/space_properties.hpp"
#include "ftop/universe.hpp"

namespace ftop {

enum class Side { domain, codomain };

struct SpacePropertyRef {
  Side side = Side::domain;
  SpacePropertyId prop = SpacePropertyId::connected;
  bool operator==(const SpacePropertyRef&) const = default;
};

enum class ShapeConstraint { constant, surjective, injective };

using Conclusion = std::variant<MapClassId, SpacePropertyRef, ShapeConstraint>;

/// "Under these hypotheses, the conclusion holds."
struct ImplicationQuery {
  std::vector<SpacePropertyId> domain_props;
  std::vector<SpacePropertyId> codomain_props;
  std::vector<MapClassId> map_hypotheses;
  std::vector<ShapeConstraint> shape_hypotheses;
  Conclusion conclusion = MapClassId::continuous;

  /// Only the domain space matters: no maps need to be enumerated.
  bool space_only() const {
    const auto* c = std::get_if<SpacePropertyRef>(&conclusion);
    return map_hypotheses.empty() && codomain_props.empty() && shape_hypotheses.empty() && c &&
           c->side == Side::domain;
  }
};

inline std::string_view name_of(ShapeConstraint s) {
  switch (s) {
    case ShapeConstraint::constant: return "constant";
    case ShapeConstraint::surjective: return "surjective";
    case ShapeConstraint::injective: return "injective";
  }
  return "?";
}

inline std::string describe(const Conclusion& c) {
  if (const auto* m = std::get_if<MapClassId>(&c)) return std::string(name_of(*m));
  if (const auto* p = std::get_if<SpacePropertyRef>(&c)) {
    return std::string(p->side == Side::domain ? "domain:" : "codomain:") +
           std::string(name_of(p->prop));
  }
  return std::string(name_of(std::get<ShapeConstraint>(c)));
}

inline std::string describe(const ImplicationQuery& q) {
  std::vector<std::string> parts;
  for (auto p : q.domain_props) parts.push_back(describe(SpacePropertyRef{Side::domain, p}));
  for (auto p : q.codomain_props) parts.push_back(describe(SpacePropertyRef{Side::codomain, p}));
  for (auto m : q.map_hypotheses) parts.emplace_back(name_of(m));
  for (auto s : q.shape_hypotheses) parts.emplace_back(name_of(s));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " & " : "") + parts[i];
  if (parts.empty()) out = "true";
  return out + " => " + describe(q.conclusion);
}

/// Parses one query term: a map class name, a shape (constant, surjective,
/// injective), or "domain:<property>" / "codomain:<property>".
inline Conclusion parse_query_term(std::string_view text) {
  auto side_prop = [&](std::string_view prefix, Side side) -> std::optional<Conclusion> {
    if (text.substr(0, prefix.size()) != prefix) return std::nullopt;
    const auto p = parse_space_property(text.substr(prefix.size()));
    if (!p) throw Error(ErrorKind::kUnknownName, "unknown space property in '" + std::string(text) + "'");
    return SpacePropertyRef{side, *p};
  };
  if (auto c = side_prop("domain:", Side::domain)) return *c;
  if (auto c = side_prop("codomain:", Side::codomain)) return *c;
  if (text == "constant") return ShapeConstraint::constant;
  if (text == "surjective") return ShapeConstraint::surjective;
  if (text == "injective") return ShapeConstraint::injective;
  if (auto m = parse_map_class(text)) return *m;
  throw Error(ErrorKind::kUnknownName, "unknown class or property '" + std::string(text) + "'");
}

inline void add_hypothesis(ImplicationQuery& q, const Conclusion& term) {
  if (const auto* m = std::get_if<MapClassId>(&term)) {
    q.map_hypotheses.push_back(*m);
  } else if (const auto* p = std::get_if<SpacePropertyRef>(&term)) {
    (p->side == Side::domain ? q.domain_props : q.codomain_props).push_back(p->prop);
  } else {
    q.shape_hypotheses.push_back(std::get<ShapeConstraint>(term));
  }
}

inline void check_query(const ImplicationQuery& q) {
  const Conclusion& c = q.conclusion;
  bool repeated = false;
  if (const auto* m = std::get_if<MapClassId>(&c)) {
    repeated = std::find(q.map_hypotheses.begin(), q.map_hypotheses.end(), *m) != q.map_hypotheses.end();
  } else if (const auto* p = std::get_if<SpacePropertyRef>(&c)) {
    const auto& props = p->side == Side::domain ? q.domain_props : q.codomain_props;
    repeated = std::find(props.begin(), props.end(), p->prop) != props.end();
  } else {
    const auto s = std::get<ShapeConstraint>(c);
    repeated = std::find(q.shape_hypotheses.begin(), q.shape_hypotheses.end(), s) !=
               q.shape_hypotheses.end();
  }
  if (repeated) {
    throw Error(ErrorKind::kSchemaError, "conclusion repeats a hypothesis: " + describe(q));
  }
}

/// A counterexample: a space, or two spaces and a map between them.
struct Witness {
  std::shared_ptr<const FiniteSpace> domain;
  std::shared_ptr<const FiniteSpace> codomain;  // null for space-only claims
  std::vector<int> assignment;

  bool has_map() const { return codomain != nullptr; }
  SpaceMap map() const { return SpaceMap(domain, codomain, assignment); }
};

inline Witness witness_of(const SpaceMap& f) {
  return Witness{f.domain_ptr(), f.codomain_ptr(), f.assignment()};
}

inline Witness witness_at(const InstanceRef& ref, bool with_map) {
  Witness w;
  w.domain = universe(ref.x_size).profiles[ref.x_index].space;
  if (with_map) {
    w.codomain = universe(ref.y_size).profiles[ref.y_index].space;
    w.assignment = ref.assignment;
  }
  return w;
}

namespace detail {

inline bool shape_holds(const MapShape& s, ShapeConstraint c) {
  switch (c) {
    case ShapeConstraint::constant: return s.constant;
    case ShapeConstraint::surjective: return s.surjective;
    case ShapeConstraint::injective: return s.injective;
  }
  return false;
}

template <typename In, typename Shape>
bool map_hypotheses_hold(const ImplicationQuery& q, In&& in, Shape&& shape) {
  for (MapClassId m : q.map_hypotheses) {
    if (!in(m)) return false;
  }
  for (ShapeConstraint s : q.shape_hypotheses) {
    if (!shape_holds(shape(), s)) return false;
  }
  return true;
}

template <typename XHas>
bool domain_hypotheses_hold(const ImplicationQuery& q, XHas&& x_has) {
  for (SpacePropertyId p : q.domain_props) {
    if (!x_has(p)) return false;
  }
  return true;
}

template <typename YHas>
bool codomain_hypotheses_hold(const ImplicationQuery& q, YHas&& y_has) {
  for (SpacePropertyId p : q.codomain_props) {
    if (!y_has(p)) return false;
  }
  return true;
}

template <typename XHas, typename YHas, typename In, typename Shape>
bool conclusion_holds(const Conclusion& c, XHas&& x_has, YHas&& y_has, In&& in, Shape&& shape) {
  if (const auto* m = std::get_if<MapClassId>(&c)) return in(*m);
  if (const auto* p = std::get_if<SpacePropertyRef>(&c)) {
    return p->side == Side::domain ? x_has(p->prop) : y_has(p->prop);
  }
  return shape_holds(shape(), std::get<ShapeConstraint>(c));
}

}  // namespace detail

/// Replays a witness through the direct (non-tabulated) evaluators and
/// reports whether it violates the query.
inline bool witness_violates(const ImplicationQuery& q, const Witness& w) {
  auto x_has = [&](SpacePropertyId p) { return has_property(*w.domain, p); };
  if (q.space_only()) {
    return detail::domain_hypotheses_hold(q, x_has) &&
           !detail::conclusion_holds(q.conclusion, x_has, x_has, [](MapClassId) { return false; },
                                     [] { return MapShape{}; });
  }
  if (!w.has_map()) return false;
  const SpaceMap f = w.map();
  auto y_has = [&](SpacePropertyId p) { return has_property(*w.codomain, p); };
  auto in = [&](MapClassId m) { return map_in_class(f, m); };
  auto shape = [&] { return map_shape(f); };
  return detail::domain_hypotheses_hold(q, x_has) && detail::codomain_hypotheses_hold(q, y_has) &&
         detail::map_hypotheses_hold(q, in, shape) &&
         !detail::conclusion_holds(q.conclusion, x_has, y_has, in, shape);
}

enum class Verdict { holds, refuted };

inline std::string_view name_of(Verdict v) { return v == Verdict::holds ? "holds" : "refuted"; }

/// Outcome of checking one claim over an enumerated universe.
struct VerificationReport {
  std::string claim_id;
  std::string statement;
  int n_max = 0;
  std::uint64_t space_count = 0;
  std::uint64_t map_count = 0;  // instances scanned (maps, or spaces for space-level claims)
  std::uint64_t filtered = 0;   // instances on which the hypotheses held
  Verdict verdict = Verdict::holds;
  std::optional<Witness> witness;
  std::string violated;  // which part failed, or what the witness separates
  std::string note;
};

namespace detail {

// Implications checked together in one sweep.
inline SweepResult sweep_queries(const std::vector<ImplicationQuery>& qs, int n_max,
                                 std::uint64_t budget = std::numeric_limits<std::uint64_t>::max()) {
  for (const auto& q : qs) check_query(q);
  const bool space_only =
      std::all_of(qs.begin(), qs.end(), [](const ImplicationQuery& q) { return q.space_only(); });
  if (space_only) {
    return sweep_spaces(n_max, [&](const SpaceProfile& x) {
      Visit v;
      auto x_has = [&](SpacePropertyId p) { return x.has(p); };
      for (std::size_t i = 0; i < qs.size(); ++i) {
        if (!domain_hypotheses_hold(qs[i], x_has)) continue;
        v.filtered = true;
        if (!x_has(std::get<SpacePropertyRef>(qs[i].conclusion).prop)) {
          v.violation = static_cast<int>(i);
          break;
        }
      }
      return v;
    });
  }
  auto relevant = [&](const SpaceProfile& x, const SpaceProfile& y) {
    return std::any_of(qs.begin(), qs.end(), [&](const ImplicationQuery& q) {
      return domain_hypotheses_hold(q, [&](SpacePropertyId p) { return x.has(p); }) &&
             codomain_hypotheses_hold(q, [&](SpacePropertyId p) { return y.has(p); });
    });
  };
  auto visit = [&](const MapInstance& inst) {
    Visit v;
    auto x_has = [&](SpacePropertyId p) { return inst.domain().has(p); };
    auto y_has = [&](SpacePropertyId p) { return inst.codomain().has(p); };
    auto in = [&](MapClassId m) { return inst.in(m); };
    auto shape = [&] { return inst.shape(); };
    for (std::size_t i = 0; i < qs.size(); ++i) {
      const auto& q = qs[i];
      if (!domain_hypotheses_hold(q, x_has) || !codomain_hypotheses_hold(q, y_has) ||
          !map_hypotheses_hold(q, in, shape)) {
        continue;
      }
      v.filtered = true;
      if (!conclusion_holds(q.conclusion, x_has, y_has, in, shape)) {
        v.violation = static_cast<int>(i);
        break;
      }
    }
    return v;
  };
  return sweep_maps(n_max, relevant, visit, budget);
}

inline void check_exhaustive_bound(int n_max) {
  if (n_max < 0 || n_max > 4) {
    throw Error(ErrorKind::kTooLarge, "exhaustive checks support n_max <= 4, got " +
                                          std::to_string(n_max));
  }
}

inline VerificationReport report_from(const std::string& id, const std::string& statement,
                                      int n_max, const SweepResult& r, bool with_map,
                                      const std::vector<std::string>& parts) {
  VerificationReport rep;
  rep.claim_id = id;
  rep.statement = statement;
  rep.n_max = n_max;
  rep.space_count = r.spaces;
  rep.map_count = r.instances;
  rep.filtered = r.filtered;
  if (r.first_violation) {
    rep.verdict = Verdict::refuted;
    rep.witness = witness_at(*r.first_violation, with_map);
    if (r.violated_part >= 0 && r.violated_part < static_cast<int>(parts.size())) {
      rep.violated = parts[r.violated_part];
    }
  }
  return rep;
}

}  // namespace detail

/// Exhaustively checks one implication over every map between spaces with at
/// most n_max points.
inline VerificationReport check_implication(const ImplicationQuery& q, int n_max) {
  detail::check_exhaustive_bound(n_max);
  const SweepResult r = detail::sweep_queries({q}, n_max);
  return detail::report_from("query", describe(q), n_max, r, !q.space_only(), {describe(q)});
}

/// First instance (in enumeration order) violating the query, scanning at most
/// `budget` instances over spaces with at most n_max <= 5 points.
inline std::optional<Witness> find_counterexample(
    const ImplicationQuery& q, int n_max,
    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max()) {
  if (n_max > kMaxEnumeratedPoints) n_max = kMaxEnumeratedPoints;
  const SweepResult r = detail::sweep_queries({q}, n_max, budget);
  if (!r.first_violation) return std::nullopt;
  return witness_at(*r.first_violation, !q.space_only());
}

/// Draws `samples` random maps between random n-point spaces (fixed seed) and
/// checks every query on each. Violations are reported like a sweep.
inline SweepResult sample_queries(const std::vector<ImplicationQuery>& qs, int n,
                                  std::uint64_t samples, std::uint64_t seed) {
  const auto& ps = universe(n).profiles;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
  std::uniform_int_distribution<int> point(0, std::max(0, n - 1));
  SweepResult r;
  r.spaces = ps.size();
  std::vector<int> a(n);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const std::size_t xi = pick(rng), yi = pick(rng);
    for (int& v : a) v = point(rng);
    const MapInstance inst(ps[xi], ps[yi], a);
    ++r.instances;
    auto x_has = [&](SpacePropertyId p) { return inst.domain().has(p); };
    auto y_has = [&](SpacePropertyId p) { return inst.codomain().has(p); };
    auto in = [&](MapClassId m) { return inst.in(m); };
    auto shape = [&] { return inst.shape(); };
    bool filtered = false;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      const auto& q = qs[i];
      if (!detail::domain_hypotheses_hold(q, x_has) || !detail::codomain_hypotheses_hold(q, y_has) ||
          !detail::map_hypotheses_hold(q, in, shape)) {
        continue;
      }
      filtered = true;
      if (!detail::conclusion_holds(q.conclusion, x_has, y_has, in, shape)) {
        r.first_violation = InstanceRef{n, n, xi, yi, a};
        r.violated_part = static_cast<int>(i);
        return r;
      }
    }
    if (filtered) ++r.filtered;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Claim catalog
// ---------------------------------------------------------------------------

struct Claim {
  std::string id;
  std::string statement;
  std::string note;
  /// The implications checked (for separations, the one refuted); empty for
  /// set-level and fixture claims.
  std::vector<ImplicationQuery> queries;
  std::function<VerificationReport(const Claim&, int)> run;
};

namespace claims {

using M = MapClassId;
using P = SpacePropertyId;

inline ImplicationQuery implies(std::vector<M> hyps, Conclusion c) {
  ImplicationQuery q;
  q.map_hypotheses = std::move(hyps);
  q.conclusion = c;
  return q;
}

/// lhs <=> (conjunction of rhs), as one query per direction and conjunct.
inline std::vector<ImplicationQuery> equivalence(M lhs, std::vector<M> rhs) {
  std::vector<ImplicationQuery> qs;
  for (M r : rhs) qs.push_back(implies({lhs}, r));
  qs.push_back(implies(rhs, lhs));
  return qs;
}

inline VerificationReport run_bundle(const Claim& c, int n_max) {
  detail::check_exhaustive_bound(n_max);
  const SweepResult r = detail::sweep_queries(c.queries, n_max);
  std::vector<std::string> parts;
  for (const auto& q : c.queries) parts.push_back(describe(q));
  const bool with_map = !c.queries.empty() && !c.queries.front().space_only();
  VerificationReport rep = detail::report_from(c.id, c.statement, n_max, r, with_map, parts);
  rep.note = c.note;
  return rep;
}

inline Claim bundle(std::string id, std::string statement, std::vector<ImplicationQuery> qs,
                    std::string note = {}) {
  return Claim{std::move(id), std::move(statement), std::move(note), std::move(qs), run_bundle};
}

// Set-level identity over every space: `parts` name the compared families.
inline Claim set_level(std::string id, std::string statement,
                       std::vector<std::pair<std::string, std::function<bool(const SpaceProfile&, Subset)>>> parts) {
  Claim c{std::move(id), std::move(statement), {}, {}, {}};
  c.run = [parts](const Claim& self, int n_max) {
    detail::check_exhaustive_bound(n_max);
    SweepResult r = sweep_spaces(n_max, [&](const SpaceProfile& x) {
      Visit v;
      v.filtered = true;
      for (std::size_t i = 0; i < x.space->subset_count() && v.violation < 0; ++i) {
        const Subset a(static_cast<Subset::Bits>(i));
        for (std::size_t k = 0; k < parts.size(); ++k) {
          if (!parts[k].second(x, a)) {
            v.violation = static_cast<int>(k);
            break;
          }
        }
      }
      return v;
    });
    std::vector<std::string> names;
    for (const auto& p : parts) names.push_back(p.first);
    return detail::report_from(self.id, self.statement, n_max, r, false, names);
  };
  return c;
}

inline Claim separation(std::string id, std::string statement, ImplicationQuery q) {
  Claim c{std::move(id), std::move(statement), {}, {q}, {}};
  c.run = [q](const Claim& self, int n_max) {
    detail::check_exhaustive_bound(n_max);
    const SweepResult r = detail::sweep_queries({q}, n_max);
    VerificationReport rep;
    rep.claim_id = self.id;
    rep.statement = self.statement;
    rep.n_max = n_max;
    rep.space_count = r.spaces;
    rep.map_count = r.instances;
    rep.filtered = r.filtered;
    rep.violated = "separates: " + describe(q);
    if (r.first_violation) {
      rep.verdict = Verdict::holds;
      rep.witness = witness_at(*r.first_violation, true);
      rep.note = "witness violates the implication";
    } else {
      rep.verdict = Verdict::refuted;
      rep.note = "no witness found at this size";
    }
    return rep;
  };
  return c;
}

inline Claim fixture(std::string id, std::string statement,
                     std::function<std::vector<std::pair<std::string, bool>>()> checks,
                     std::function<Witness()> witness) {
  Claim c{std::move(id), std::move(statement), "stored regression fixture", {}, {}};
  c.run = [checks, witness](const Claim& self, int n_max) {
    VerificationReport rep;
    rep.claim_id = self.id;
    rep.statement = self.statement;
    rep.n_max = n_max;
    rep.note = self.note;
    rep.witness = witness();
    for (const auto& [what, ok] : checks()) {
      ++rep.map_count;
      ++rep.filtered;
      if (!ok && rep.verdict == Verdict::holds) {
        rep.verdict = Verdict::refuted;
        rep.violated = what;
      }
    }
    return rep;
  };
  return c;
}

inline std::shared_ptr<const FiniteSpace> share(FiniteSpace s) {
  return std::make_shared<const FiniteSpace>(std::move(s));
}

inline std::vector<Claim> build_registry() {
  std::vector<Claim> out;
  const char* kDegenerate = "degenerate on finite spaces: every covering property holds";

  out.push_back(set_level(
      "lemma1", "SR(X) = beta(X) n SC(X)",
      {{"semi_regular <=> beta_open & semi_closed", [](const SpaceProfile& x, Subset a) {
          return x.in(SetClassId::semi_regular, a) ==
                 (x.in(SetClassId::beta_open, a) && x.in(SetClassId::semi_closed, a));
        }}}));
  out.push_back(set_level(
      "lemma2", "RO(X) = tau n SC(X) = alpha(X) n SC(X) = PO(X) n SC(X)",
      {{"regular_open <=> open & semi_closed",
        [](const SpaceProfile& x, Subset a) {
          return x.in(SetClassId::regular_open, a) ==
                 (x.in(SetClassId::open, a) && x.in(SetClassId::semi_closed, a));
        }},
       {"regular_open <=> alpha_open & semi_closed",
        [](const SpaceProfile& x, Subset a) {
          return x.in(SetClassId::regular_open, a) ==
                 (x.in(SetClassId::alpha_open, a) && x.in(SetClassId::semi_closed, a));
        }},
       {"regular_open <=> preopen & semi_closed", [](const SpaceProfile& x, Subset a) {
          return x.in(SetClassId::regular_open, a) ==
                 (x.in(SetClassId::preopen, a) && x.in(SetClassId::semi_closed, a));
        }}}));

  {
    Claim c{"prop1", "five characterizations of contra-semicontinuity agree", {}, {}, {}};
    c.run = [](const Claim& self, int n_max) {
      detail::check_exhaustive_bound(n_max);
      const SweepResult r = sweep_maps(
          n_max, [](const SpaceProfile&, const SpaceProfile&) { return true; },
          [](const MapInstance& inst) {
            Visit v;
            v.filtered = true;
            const auto c = inst.contra_semi_conditions();
            for (int k = 1; k < 5; ++k) {
              if (c[k] != c[0]) {
                v.violation = k - 1;
                break;
              }
            }
            return v;
          });
      return detail::report_from(self.id, self.statement, n_max, r, true,
                                 {"(1) <=> (2)", "(1) <=> (3)", "(1) <=> (4)", "(1) <=> (5)"});
    };
    out.push_back(std::move(c));
  }

  out.push_back(bundle("thm1", "sr_continuous <=> beta_continuous & contra_semicontinuous",
                       equivalence(M::sr_continuous, {M::beta_continuous, M::contra_semicontinuous})));
  out.push_back(bundle("thm2", "completely_continuous <=> precontinuous & contra_semicontinuous",
                       equivalence(M::completely_continuous,
                                   {M::precontinuous, M::contra_semicontinuous})));
  out.push_back(bundle("thm3", "rc_continuous <=> beta_continuous & contra_continuous",
                       equivalence(M::rc_continuous, {M::beta_continuous, M::contra_continuous})));
  out.push_back(bundle("thm4", "contra_semicontinuous <=> b_continuous & contra_gs_continuous",
                       equivalence(M::contra_semicontinuous,
                                   {M::b_continuous, M::contra_gs_continuous})));
  out.push_back(bundle("thm5", "contra_semicontinuous <=> simply_continuous & contra_sg_continuous",
                       equivalence(M::contra_semicontinuous,
                                   {M::simply_continuous, M::contra_sg_continuous})));
  out.push_back(bundle("cor_semicont",
                       "contra_continuous & beta_continuous => semi_continuous",
                       {implies({M::contra_continuous, M::beta_continuous}, M::semi_continuous)}));
  out.push_back(bundle("cor1", "sr_continuous <=> beta & b_continuous & contra_gs_continuous",
                       equivalence(M::sr_continuous, {M::beta_continuous, M::b_continuous,
                                                      M::contra_gs_continuous})));
  out.push_back(bundle("cor2",
                       "completely_continuous <=> precontinuous & b_continuous & contra_gs_continuous",
                       equivalence(M::completely_continuous,
                                   {M::precontinuous, M::b_continuous, M::contra_gs_continuous}),
                       "undefined 'contra-gs-semicontinuous' read as contra_gs_continuous"));
  out.push_back(bundle("cor3", "sr_continuous <=> beta & simply_continuous & contra_sg_continuous",
                       equivalence(M::sr_continuous, {M::beta_continuous, M::simply_continuous,
                                                      M::contra_sg_continuous})));
  out.push_back(bundle(
      "cor4", "completely_continuous <=> precontinuous & simply_continuous & contra_sg_continuous",
      equivalence(M::completely_continuous,
                  {M::precontinuous, M::simply_continuous, M::contra_sg_continuous}),
      "undefined 'contra-sg-semicontinuous' read as contra_sg_continuous"));

  out.push_back(bundle(
      "diagram3", "implications between contra-semicontinuity and its neighbours",
      {
          implies({M::completely_continuous}, M::sr_continuous),
          implies({M::perfectly_continuous}, M::completely_continuous),
          implies({M::perfectly_continuous}, M::contra_continuous),
          implies({M::perfectly_continuous}, M::regular_set_connected),
          implies({M::regular_set_connected}, M::theta_s_continuous),
          implies({M::regular_set_connected}, M::r_map),
          implies({M::r_map}, M::theta_irresolute),
          implies({M::contra_continuous}, M::theta_s_continuous),
          implies({M::contra_continuous}, M::contra_semicontinuous),
          implies({M::theta_s_continuous}, M::weakly_theta_irresolute),
          implies({M::sr_continuous}, M::contra_semicontinuous),
          implies({M::sr_continuous}, M::ab_continuous),
          implies({M::contra_semicontinuous}, M::b_continuous),
          implies({M::contra_semicontinuous}, M::weakly_theta_irresolute),
          implies({M::theta_irresolute}, M::weakly_theta_irresolute),
          implies({M::ab_continuous}, M::b_continuous),
      }));

  {
    auto space_arrow = [](P from, P to) {
      ImplicationQuery q;
      q.domain_props = {from};
      q.conclusion = SpacePropertyRef{Side::domain, to};
      return q;
    };
    out.push_back(bundle("diagram4", "implications between covering properties",
                         {
                             space_arrow(P::semi_compact, P::s_closed_lower),
                             space_arrow(P::semi_compact, P::compact),
                             space_arrow(P::s_closed_lower, P::s_closed_upper),
                             space_arrow(P::s_closed_lower, P::nearly_compact),
                             space_arrow(P::s_closed_upper, P::quasi_h_closed),
                             space_arrow(P::strongly_s_closed, P::s_closed_upper),
                             space_arrow(P::strongly_s_closed, P::mildly_compact),
                             space_arrow(P::compact, P::nearly_compact),
                             space_arrow(P::nearly_compact, P::quasi_h_closed),
                             space_arrow(P::quasi_h_closed, P::mildly_compact),
                         },
                         kDegenerate));
  }

  {
    const std::vector<std::pair<M, P>> clauses = {
        {M::contra_semicontinuous, P::semi_compact}, {M::sr_continuous, P::s_closed_lower},
        {M::completely_continuous, P::s_closed_upper}, {M::contra_continuous, P::compact},
        {M::rc_continuous, P::nearly_compact},       {M::perfectly_continuous, P::mildly_compact},
    };
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      ImplicationQuery q;
      q.map_hypotheses = {clauses[i].first};
      q.domain_props = {clauses[i].second};
      q.shape_hypotheses = {ShapeConstraint::surjective};
      q.conclusion = SpacePropertyRef{Side::codomain, P::strongly_s_closed};
      out.push_back(bundle("thm6." + std::to_string(i + 1),
                           "surjective " + std::string(name_of(clauses[i].first)) + " map from a " +
                               std::string(name_of(clauses[i].second)) +
                               " space has a strongly_s_closed image",
                           {q}, kDegenerate));
    }
  }

  {
    ImplicationQuery q;
    q.domain_props = {P::connected};
    q.codomain_props = {P::t1};
    q.map_hypotheses = {M::contra_continuous};
    q.conclusion = ShapeConstraint::constant;
    out.push_back(bundle("thm51", "contra-continuous maps from connected to T1 spaces are constant",
                         {q}));
  }
  {
    ImplicationQuery q;
    q.domain_props = {P::globally_disconnected};
    q.map_hypotheses = {M::contra_semicontinuous, M::preclosed_map};
    q.shape_hypotheses = {ShapeConstraint::surjective};
    q.conclusion = SpacePropertyRef{Side::codomain, P::locally_indiscrete};
    out.push_back(bundle("thm52",
                         "contra-semicontinuous preclosed surjections from globally disconnected "
                         "spaces have locally indiscrete codomains",
                         {q}));
  }
  {
    ImplicationQuery q;
    q.domain_props = {P::hyperconnected};
    q.map_hypotheses = {M::contra_semicontinuous};
    q.shape_hypotheses = {ShapeConstraint::surjective};
    q.conclusion = SpacePropertyRef{Side::codomain, P::connected};
    out.push_back(bundle("hyperconn",
                         "contra-semicontinuous images of hyperconnected spaces are connected",
                         {q}, "image taken as the codomain of a surjection"));
  }
  {
    ImplicationQuery q;
    q.domain_props = {P::ccc};
    q.codomain_props = {P::t_half};
    q.map_hypotheses = {M::contra_semicontinuous};
    q.conclusion = SpacePropertyRef{Side::codomain, P::sporadic};
    out.push_back(bundle("sporadic",
                         "contra-semicontinuous maps from CCC spaces into T1/2 spaces: codomain "
                         "is sporadic",
                         {q}, "CCC holds on every finite space"));
  }
  {
    Claim c{"lemma4cov",
            "s-closed / S-closed / nearly compact via semi-regular / regular closed / regular "
            "open covers",
            kDegenerate,
            {},
            {}};
    c.run = [](const Claim& self, int n_max) {
      detail::check_exhaustive_bound(n_max);
      const std::array<P, 3> props = {P::s_closed_lower, P::s_closed_upper, P::nearly_compact};
      const SweepResult r = sweep_spaces(n_max, [&](const SpaceProfile& x) {
        Visit v;
        v.filtered = true;
        for (std::size_t k = 0; k < props.size(); ++k) {
          if (has_property(*x.space, props[k]) !=
              *has_property_via_regular_covers(*x.space, props[k])) {
            v.violation = static_cast<int>(k);
            break;
          }
        }
        return v;
      });
      VerificationReport rep = detail::report_from(
          self.id, self.statement, n_max, r, false,
          {"s_closed_lower", "s_closed_upper", "nearly_compact"});
      rep.note = self.note;
      return rep;
    };
    out.push_back(std::move(c));
  }

  out.push_back(separation("sep.csc_not_cc", "contra_semicontinuous does not imply contra_continuous",
                           implies({M::contra_semicontinuous}, M::contra_continuous)));
  out.push_back(separation("sep.b_not_csc", "b_continuous does not imply contra_semicontinuous",
                           implies({M::b_continuous}, M::contra_semicontinuous)));
  out.push_back(separation("sep.csc_not_sr", "contra_semicontinuous does not imply sr_continuous",
                           implies({M::contra_semicontinuous}, M::sr_continuous)));
  out.push_back(separation("sep.wti_not_csc",
                           "weakly_theta_irresolute does not imply contra_semicontinuous",
                           implies({M::weakly_theta_irresolute}, M::contra_semicontinuous)));
  out.push_back(separation("sep.cc_not_pc", "contra_continuous does not imply perfectly_continuous",
                           implies({M::contra_continuous}, M::perfectly_continuous)));
  out.push_back(separation("sep.cc_not_beta", "contra_continuous does not imply beta_continuous",
                           implies({M::contra_continuous}, M::beta_continuous)));

  using namespace fixtures;
  out.push_back(fixture(
      "fixture.e3", "identity (X,tau) -> (X,sigma) is contra-continuous, not SR-continuous",
      [] {
        const SpaceMap f = SpaceMap::identity(e3_tau(), e3_sigma());
        return std::vector<std::pair<std::string, bool>>{
            {"contra_continuous", map_in_class(f, M::contra_continuous)},
            {"not sr_continuous", !map_in_class(f, M::sr_continuous)},
            {"not beta_continuous", !map_in_class(f, M::beta_continuous)},
            {"{a,b} not semi_regular", !is_in_class(e3_tau(), kA | kB, SetClassId::semi_regular)},
        };
      },
      [] { return witness_of(SpaceMap::identity(e3_tau(), e3_sigma())); }));
  out.push_back(fixture(
      "fixture.e4",
      "identity (X,indiscrete) -> (X,{0,{a},X}) is weakly theta-irresolute, not "
      "contra-semicontinuous",
      [] {
        const SpaceMap f = SpaceMap::identity(e4_tau(), e4_sigma());
        return std::vector<std::pair<std::string, bool>>{
            {"weakly_theta_irresolute", map_in_class(f, M::weakly_theta_irresolute)},
            {"not contra_semicontinuous", !map_in_class(f, M::contra_semicontinuous)},
            {"precontinuous", map_in_class(f, M::precontinuous)},
            {"contra_sg_continuous", map_in_class(f, M::contra_sg_continuous)},
            {"not simply_continuous", !map_in_class(f, M::simply_continuous)},
        };
      },
      [] { return witness_of(SpaceMap::identity(e4_tau(), e4_sigma())); }));
  out.push_back(fixture(
      "fixture.ee3", "B-continuity and contra-gs-continuity are independent",
      [] {
        const SpaceMap on_tau = SpaceMap::identity(ee3_tau(), ee3_tau());
        const SpaceMap sigma_to_tau = SpaceMap::identity(ee3_sigma(), ee3_tau());
        return std::vector<std::pair<std::string, bool>>{
            {"sCl{a} = X", ee3_tau().semi_closure(kA) == ee3_tau().full()},
            {"id_tau b_continuous", map_in_class(on_tau, M::b_continuous)},
            {"id_tau precontinuous", map_in_class(on_tau, M::precontinuous)},
            {"id_tau not contra_gs_continuous", !map_in_class(on_tau, M::contra_gs_continuous)},
            {"id sigma->tau contra_gs_continuous",
             map_in_class(sigma_to_tau, M::contra_gs_continuous)},
            {"id sigma->tau not b_continuous", !map_in_class(sigma_to_tau, M::b_continuous)},
        };
      },
      [] { return witness_of(SpaceMap::identity(ee3_tau(), ee3_tau())); }));
  out.push_back(fixture(
      "fixture.remark", "composition of contra-continuous maps need not be contra-semicontinuous",
      [] {
        const SpaceMap f = SpaceMap::identity(share(e3_tau()), share(e3_sigma()));
        const SpaceMap g = SpaceMap::identity(f.codomain_ptr(), share(remark_mu()));
        const SpaceMap gf = compose(f, g);
        return std::vector<std::pair<std::string, bool>>{
            {"f contra_continuous", map_in_class(f, M::contra_continuous)},
            {"g contra_continuous", map_in_class(g, M::contra_continuous)},
            {"g.f not contra_semicontinuous", !map_in_class(gf, M::contra_semicontinuous)},
            {"(g.f)^-1{c} = {c} not semi_open",
             preimage(gf, kC) == kC && !is_in_class(e3_tau(), kC, SetClassId::semi_open)},
        };
      },
      [] {
        const SpaceMap f = SpaceMap::identity(share(e3_tau()), share(e3_sigma()));
        const SpaceMap g = SpaceMap::identity(f.codomain_ptr(), share(remark_mu()));
        return witness_of(compose(f, g));
      }));
  return out;
}

}  // namespace claims

inline const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = claims::build_registry();
  return registry;
}

inline const Claim* find_claim(std::string_view id) {
  for (const Claim& c : claim_registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

inline VerificationReport verify_claim(std::string_view id, int n_max) {
  const Claim* c = find_claim(id);
  if (c == nullptr) throw Error(ErrorKind::kUnknownName, "no claim named '" + std::string(id) + "'");
  return c->run(*c, n_max);
}

/// One report per catalogued claim, in registry order.
inline std::vector<VerificationReport> verify_catalogued_theorems(int n_max) {
  detail::check_exhaustive_bound(n_max);
  std::vector<VerificationReport> out;
  for (const Claim& c : claim_registry()) out.push_back(c.run(c, n_max));
  return out;
}

}  // namespace ftop

#endif  // FTOP_LAB_HPP_
