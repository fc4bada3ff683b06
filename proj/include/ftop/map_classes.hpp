#ifndef FTOP_MAP_CLASSES_HPP_
#define FTOP_MAP_CLASSES_HPP_

#include <array>
#include <optional>
#include <string_view>

#include "ftop/set_classes.hpp"
#include "ftop/space_map.hpp"

namespace ftop {

enum class MapClassId {
  continuous,
  semi_continuous,
  precontinuous,
  beta_continuous,
  alpha_continuous,  // auxiliary, used by no theorem
  perfectly_continuous,
  completely_continuous,
  sr_continuous,
  rc_continuous,
  b_continuous,
  ab_continuous,
  simply_continuous,
  regular_set_connected,
  theta_s_continuous,
  weakly_theta_irresolute,
  r_map,
  theta_irresolute,
  contra_continuous,
  contra_semicontinuous,
  contra_gs_continuous,
  contra_sg_continuous,
  preclosed_map,
};

inline constexpr std::size_t kMapClassCount = 22;

/// Which sets a class rule quantifies over.
enum class RuleSource {
  open_preimages,          // f^-1(V), V open in Y
  regular_open_preimages,  // f^-1(V), V regular open in Y
  closed_images,           // f(F), F closed in X
};

struct MapClassRule {
  MapClassId id;
  std::string_view name;
  RuleSource source;
  SetClassId target;
  // theta-irresolute: target is "intersection of regular open sets", which
  // is not one of the named set classes; `target` is ignored.
  bool regular_open_intersection = false;
};

inline constexpr std::array<MapClassRule, kMapClassCount> kMapClassRules = {{
    {MapClassId::continuous, "continuous", RuleSource::open_preimages, SetClassId::open},
    {MapClassId::semi_continuous, "semi_continuous", RuleSource::open_preimages,
     SetClassId::semi_open},
    {MapClassId::precontinuous, "precontinuous", RuleSource::open_preimages, SetClassId::preopen},
    {MapClassId::beta_continuous, "beta_continuous", RuleSource::open_preimages,
     SetClassId::beta_open},
    {MapClassId::alpha_continuous, "alpha_continuous", RuleSource::open_preimages,
     SetClassId::alpha_open},
    {MapClassId::perfectly_continuous, "perfectly_continuous", RuleSource::open_preimages,
     SetClassId::clopen},
    {MapClassId::completely_continuous, "completely_continuous", RuleSource::open_preimages,
     SetClassId::regular_open},
    {MapClassId::sr_continuous, "sr_continuous", RuleSource::open_preimages,
     SetClassId::semi_regular},
    {MapClassId::rc_continuous, "rc_continuous", RuleSource::open_preimages,
     SetClassId::regular_closed},
    {MapClassId::b_continuous, "b_continuous", RuleSource::open_preimages, SetClassId::b_set},
    {MapClassId::ab_continuous, "ab_continuous", RuleSource::open_preimages, SetClassId::ab_set},
    {MapClassId::simply_continuous, "simply_continuous", RuleSource::open_preimages,
     SetClassId::simply_open},
    {MapClassId::regular_set_connected, "regular_set_connected",
     RuleSource::regular_open_preimages, SetClassId::clopen},
    {MapClassId::theta_s_continuous, "theta_s_continuous", RuleSource::regular_open_preimages,
     SetClassId::closed},
    {MapClassId::weakly_theta_irresolute, "weakly_theta_irresolute",
     RuleSource::regular_open_preimages, SetClassId::semi_closed},
    {MapClassId::r_map, "r_map", RuleSource::regular_open_preimages, SetClassId::regular_open},
    {MapClassId::theta_irresolute, "theta_irresolute", RuleSource::regular_open_preimages,
     SetClassId::regular_open, true},
    {MapClassId::contra_continuous, "contra_continuous", RuleSource::open_preimages,
     SetClassId::closed},
    {MapClassId::contra_semicontinuous, "contra_semicontinuous", RuleSource::open_preimages,
     SetClassId::semi_closed},
    {MapClassId::contra_gs_continuous, "contra_gs_continuous", RuleSource::open_preimages,
     SetClassId::gs_closed},
    {MapClassId::contra_sg_continuous, "contra_sg_continuous", RuleSource::open_preimages,
     SetClassId::sg_closed},
    {MapClassId::preclosed_map, "preclosed_map", RuleSource::closed_images,
     SetClassId::preclosed_set},
}};

inline const MapClassRule& rule_of(MapClassId id) {
  return kMapClassRules[static_cast<std::size_t>(id)];
}

inline std::string_view name_of(MapClassId id) { return rule_of(id).name; }

inline std::optional<MapClassId> parse_map_class(std::string_view name) {
  for (const auto& rule : kMapClassRules) {
    if (rule.name == name) return rule.id;
  }
  return std::nullopt;
}

/// Direct evaluation of a class rule on one map: walks the source family and
/// tests each preimage (or image) against the target set class.
inline bool map_in_class(const SpaceMap& f, MapClassId cls) {
  const MapClassRule& rule = rule_of(cls);
  const FiniteSpace& x = f.domain();
  const FiniteSpace& y = f.codomain();
  auto target_holds = [&](const FiniteSpace& space, Subset s) {
    return rule.regular_open_intersection ? is_regular_open_intersection(space, s)
                                          : is_in_class(space, s, rule.target);
  };
  switch (rule.source) {
    case RuleSource::open_preimages:
      for (Subset v : y.opens()) {
        if (!target_holds(x, preimage(f, v))) return false;
      }
      return true;
    case RuleSource::regular_open_preimages:
      for (Subset v : family(y, SetClassId::regular_open)) {
        if (!target_holds(x, preimage(f, v))) return false;
      }
      return true;
    case RuleSource::closed_images:
      for (Subset u : x.opens()) {
        if (!target_holds(y, image(f, u.complement_in(x.size())))) return false;
      }
      return true;
  }
  return false;
}

/// The five characterizations of contra-semicontinuity, each evaluated
/// literally so that their agreement can be tested.
namespace contra_semi {

/// Preimages of open sets are semi-closed.
inline bool open_preimages_semi_closed(const SpaceMap& f) {
  for (Subset v : f.codomain().opens()) {
    if (!is_in_class(f.domain(), preimage(f, v), SetClassId::semi_closed)) return false;
  }
  return true;
}

/// Preimages of closed sets are semi-open.
inline bool closed_preimages_semi_open(const SpaceMap& f) {
  const int m = f.codomain().size();
  for (Subset v : f.codomain().opens()) {
    if (!is_in_class(f.domain(), preimage(f, v.complement_in(m)), SetClassId::semi_open)) {
      return false;
    }
  }
  return true;
}

/// Each point x and each closed F containing f(x) admit a semi-open U with
/// x in U and f(U) inside F.
inline bool pointwise_semi_open_neighborhoods(const SpaceMap& f) {
  const FiniteSpace& x_space = f.domain();
  const int m = f.codomain().size();
  const SetFamily semi_opens = family(x_space, SetClassId::semi_open);
  for (int x = 0; x < x_space.size(); ++x) {
    for (Subset v : f.codomain().opens()) {
      const Subset closed = v.complement_in(m);
      if (!closed.contains(f(x))) continue;
      bool found = false;
      for (Subset u : semi_opens) {
        if (u.contains(x) && image(f, u).subset_of(closed)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

/// Int(Cl(f^-1 V)) = Int(f^-1 V) for every open V.
inline bool interior_closure_identity(const SpaceMap& f) {
  const FiniteSpace& x = f.domain();
  for (Subset v : f.codomain().opens()) {
    const Subset p = preimage(f, v);
    if (x.interior(x.closure(p)) != x.interior(p)) return false;
  }
  return true;
}

/// Cl(Int(f^-1 F)) = Cl(f^-1 F) for every closed F.
inline bool closure_interior_identity(const SpaceMap& f) {
  const FiniteSpace& x = f.domain();
  const int m = f.codomain().size();
  for (Subset v : f.codomain().opens()) {
    const Subset p = preimage(f, v.complement_in(m));
    if (x.closure(x.interior(p)) != x.closure(p)) return false;
  }
  return true;
}

inline std::array<bool, 5> all_conditions(const SpaceMap& f) {
  return {open_preimages_semi_closed(f), closed_preimages_semi_open(f),
          pointwise_semi_open_neighborhoods(f), interior_closure_identity(f),
          closure_interior_identity(f)};
}

}  // namespace contra_semi

}  // namespace ftop

#endif  // FTOP_MAP_CLASSES_HPP_
