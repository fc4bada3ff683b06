#ifndef FTOP_SERIALIZE_HPP_
#define FTOP_SERIALIZE_HPP_

// JSON documents for spaces, maps, witnesses and verification reports.
//
//   space:   {"points": ["a", "b"], "opens": [[], ["a"], ["a", "b"]]}
//   map:     {"assignment": {"a": "a", "b": "a"}}
//   witness: {"domain": <space>, "codomain": <space>, "assignment": {...}}

#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ftop/error.hpp"
#include "ftop/lab.hpp"
#include "ftop/space.hpp"
#include "ftop/space_map.hpp"

namespace ftop {

using Json = nlohmann::json;

namespace detail {

[[noreturn]] inline void schema_error(const std::string& msg) {
  throw Error(ErrorKind::kSchemaError, msg);
}

inline const Json& require(const Json& doc, const char* key, const std::string& what) {
  if (!doc.is_object()) schema_error(what + " must be a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) schema_error(what + " is missing \"" + key + "\"");
  return *it;
}

inline int point_index(const std::vector<std::string>& labels, const Json& name,
                       const std::string& context) {
  if (!name.is_string()) schema_error(context + ": point names must be strings");
  const auto& s = name.get_ref<const std::string&>();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == s) return static_cast<int>(i);
  }
  throw Error(ErrorKind::kOutOfRange, context + ": unknown point '" + s + "'");
}

inline Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema_error(what + " is not valid JSON: " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kSchemaError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Spaces
// ---------------------------------------------------------------------------

inline Json subset_to_json(Subset s, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (int p : s.points()) out.push_back(labels[p]);
  return out;
}

/// Canonical form: points in index order, opens in canonical subset order.
inline Json space_to_json(const FiniteSpace& space) {
  Json opens = Json::array();
  for (Subset s : space.opens()) opens.push_back(subset_to_json(s, space.labels()));
  return Json{{"points", space.labels()}, {"opens", std::move(opens)}};
}

inline Subset subset_from_json(const Json& doc, const std::vector<std::string>& labels,
                               const std::string& context) {
  if (!doc.is_array()) detail::schema_error(context + " must be an array of point names");
  Subset s;
  for (const Json& name : doc) s |= Subset::singleton(detail::point_index(labels, name, context));
  return s;
}

/// Builds and validates a space from its document. Validation failures keep
/// their error kind and mention the point labels involved.
inline FiniteSpace load_space(const Json& doc) {
  const Json& points = detail::require(doc, "points", "space");
  const Json& opens = detail::require(doc, "opens", "space");
  if (!points.is_array()) detail::schema_error("space \"points\" must be an array");
  if (!opens.is_array()) detail::schema_error("space \"opens\" must be an array");
  std::vector<std::string> labels;
  for (const Json& p : points) {
    if (!p.is_string()) detail::schema_error("space \"points\" must contain strings");
    labels.push_back(p.get<std::string>());
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[i] == labels[j]) detail::schema_error("duplicate point '" + labels[i] + "'");
    }
  }
  if (labels.size() > static_cast<std::size_t>(kMaxPoints)) {
    throw Error(ErrorKind::kOutOfRange, "a space has at most 16 points, got " +
                                            std::to_string(labels.size()));
  }
  std::vector<Subset> members;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    members.push_back(subset_from_json(opens[i], labels, "open set #" + std::to_string(i)));
  }
  return validate_space(static_cast<int>(labels.size()), members, labels);
}

inline FiniteSpace load_space_text(const std::string& text) {
  return load_space(detail::parse_json(text, "space document"));
}

inline FiniteSpace load_space_file(const std::string& path) {
  return load_space(detail::parse_json(detail::read_file(path), path));
}

// ---------------------------------------------------------------------------
// Maps and witnesses
// ---------------------------------------------------------------------------

inline Json assignment_to_json(const SpaceMap& f) {
  Json out = Json::object();
  const auto& xl = f.domain().labels();
  const auto& yl = f.codomain().labels();
  for (int i = 0; i < f.domain().size(); ++i) out[xl[i]] = yl[f(i)];
  return out;
}

inline Json map_to_json(const SpaceMap& f) { return Json{{"assignment", assignment_to_json(f)}}; }

/// Reads {"assignment": {x: y, ...}}; every domain point must be assigned.
inline SpaceMap load_map(const Json& doc, std::shared_ptr<const FiniteSpace> domain,
                         std::shared_ptr<const FiniteSpace> codomain) {
  const Json& table = detail::require(doc, "assignment", "map");
  if (!table.is_object()) detail::schema_error("map \"assignment\" must be an object");
  std::vector<int> assignment(domain->size(), -1);
  for (const auto& [key, value] : table.items()) {
    const int x = detail::point_index(domain->labels(), Json(key), "map domain");
    assignment[x] = detail::point_index(codomain->labels(), value, "map codomain");
  }
  for (int x = 0; x < domain->size(); ++x) {
    if (assignment[x] < 0) {
      detail::schema_error("map leaves point '" + domain->labels()[x] + "' unassigned");
    }
  }
  return SpaceMap(std::move(domain), std::move(codomain), std::move(assignment));
}

inline SpaceMap load_map_file(const std::string& path, std::shared_ptr<const FiniteSpace> domain,
                              std::shared_ptr<const FiniteSpace> codomain) {
  return load_map(detail::parse_json(detail::read_file(path), path), std::move(domain),
                  std::move(codomain));
}

inline Json witness_to_json(const Witness& w) {
  Json out{{"domain", space_to_json(*w.domain)}};
  if (w.has_map()) {
    out["codomain"] = space_to_json(*w.codomain);
    out["assignment"] = assignment_to_json(w.map());
  }
  return out;
}

inline Witness load_witness(const Json& doc) {
  Witness w;
  w.domain = std::make_shared<const FiniteSpace>(load_space(detail::require(doc, "domain", "witness")));
  if (doc.contains("codomain")) {
    w.codomain = std::make_shared<const FiniteSpace>(load_space(doc.at("codomain")));
    w.assignment = load_map(doc, w.domain, w.codomain).assignment();
  }
  return w;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline Json report_to_json(const VerificationReport& r) {
  Json out{
      {"claim", r.claim_id},
      {"statement", r.statement},
      {"n_max", r.n_max},
      {"spaces", r.space_count},
      {"instances", r.map_count},
      {"filtered", r.filtered},
      {"verdict", std::string(name_of(r.verdict))},
  };
  out["witness"] = r.witness ? witness_to_json(*r.witness) : Json(nullptr);
  if (!r.violated.empty()) out["violated"] = r.violated;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

inline std::string describe_witness(const Witness& w) {
  auto space_text = [](const FiniteSpace& s) {
    std::string out = "{";
    bool first = true;
    for (Subset o : s.opens()) {
      out += (first ? "" : ", ") + detail::describe(o, s.labels());
      first = false;
    }
    return out + "}";
  };
  std::string out = "X = " + space_text(*w.domain);
  if (w.has_map()) {
    out += ", Y = " + space_text(*w.codomain) + ", f =";
    const SpaceMap f = w.map();
    for (int i = 0; i < f.domain().size(); ++i) {
      out += " " + f.domain().labels()[i] + "->" + f.codomain().labels()[f(i)];
    }
  }
  return out;
}

/// Two-column human-readable rendering of a report.
inline std::string report_table(const VerificationReport& r) {
  std::vector<std::pair<std::string, std::string>> rows = {
      {"claim", r.claim_id},
      {"statement", r.statement},
      {"n_max", std::to_string(r.n_max)},
      {"spaces", std::to_string(r.space_count)},
      {"instances", std::to_string(r.map_count)},
      {"filtered", std::to_string(r.filtered)},
      {"verdict", std::string(name_of(r.verdict))},
  };
  if (r.witness) rows.emplace_back("witness", describe_witness(*r.witness));
  if (!r.violated.empty()) rows.emplace_back("violated", r.violated);
  if (!r.note.empty()) rows.emplace_back("note", r.note);
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << std::left << std::setw(11) << k << v << "\n";
  return out.str();
}

}  // namespace ftop

#endif  // FTOP_SERIALIZE_HPP_
