#ifndef FTOP_SPACE_PROPERTIES_HPP_
#define FTOP_SPACE_PROPERTIES_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ftop/error.hpp"
#include "ftop/set_classes.hpp"
#include "ftop/space.hpp"

namespace ftop {

// s_closed_lower is "s-closed" (semi-closure inflation), s_closed_upper is
// "S-closed" (closure inflation).
enum class SpacePropertyId {
  connected,
  hyperconnected,
  locally_indiscrete,
  globally_disconnected,
  t1,
  t_half,
  discrete,
  indiscrete,
  ccc,
  sporadic,
  compact,
  semi_compact,
  s_closed_lower,
  s_closed_upper,
  nearly_compact,
  quasi_h_closed,
  strongly_s_closed,
  mildly_compact,
};

inline constexpr std::size_t kSpacePropertyCount = 18;

inline constexpr std::array<SpacePropertyId, kSpacePropertyCount> kAllSpaceProperties = {
    SpacePropertyId::connected,         SpacePropertyId::hyperconnected,
    SpacePropertyId::locally_indiscrete, SpacePropertyId::globally_disconnected,
    SpacePropertyId::t1,                SpacePropertyId::t_half,
    SpacePropertyId::discrete,          SpacePropertyId::indiscrete,
    SpacePropertyId::ccc,               SpacePropertyId::sporadic,
    SpacePropertyId::compact,           SpacePropertyId::semi_compact,
    SpacePropertyId::s_closed_lower,    SpacePropertyId::s_closed_upper,
    SpacePropertyId::nearly_compact,    SpacePropertyId::quasi_h_closed,
    SpacePropertyId::strongly_s_closed, SpacePropertyId::mildly_compact,
};

inline constexpr std::array<std::string_view, kSpacePropertyCount> kSpacePropertyNames = {
    "connected",      "hyperconnected",    "locally_indiscrete", "globally_disconnected",
    "t1",             "t_half",            "discrete",           "indiscrete",
    "ccc",            "sporadic",          "compact",            "semi_compact",
    "s_closed_lower", "s_closed_upper",    "nearly_compact",     "quasi_h_closed",
    "strongly_s_closed", "mildly_compact",
};

inline std::string_view name_of(SpacePropertyId id) {
  return kSpacePropertyNames[static_cast<std::size_t>(id)];
}

inline std::optional<SpacePropertyId> parse_space_property(std::string_view name) {
  for (std::size_t i = 0; i < kSpacePropertyCount; ++i) {
    if (kSpacePropertyNames[i] == name) return kAllSpaceProperties[i];
  }
  return std::nullopt;
}

enum class CoverMode { plain, closure, semi_closure, interior_of_closure };

inline Subset inflate(const FiniteSpace& space, Subset a, CoverMode mode) {
  switch (mode) {
    case CoverMode::plain: return a;
    case CoverMode::closure: return space.closure(a);
    case CoverMode::semi_closure: return space.semi_closure(a);
    case CoverMode::interior_of_closure: return space.interior(space.closure(a));
  }
  return a;
}

/// Non-isolated points: those whose singleton is not open.
inline Subset cb_derivative(const FiniteSpace& space) {
  Subset out;
  for (int p = 0; p < space.size(); ++p) {
    if (!space.is_open(Subset::singleton(p))) out = out.with(p);
  }
  return out;
}

/// Exact minimum subcover: the smallest index set whose mode-inflated members
/// cover X, lexicographically least among those of minimum size. Searches
/// sizes in increasing order with a suffix-union bound.
inline std::vector<int> minimal_subcover(const FiniteSpace& space,
                                         const std::vector<Subset>& cover, CoverMode mode) {
  const Subset whole = space.full();
  const int m = static_cast<int>(cover.size());
  std::vector<Subset> inflated(m);
  for (int i = 0; i < m; ++i) {
    if (!cover[i].within(space.size())) {
      throw Error(ErrorKind::kOutOfRange, "cover member outside the ground set");
    }
    inflated[i] = inflate(space, cover[i], mode);
  }
  std::vector<Subset> suffix(m + 1);
  for (int i = m - 1; i >= 0; --i) suffix[i] = suffix[i + 1] | inflated[i];
  if (suffix[0] != whole) {
    throw Error(ErrorKind::kNotACover, "inflated union misses " +
                                           detail::describe(whole - suffix[0], space.labels()));
  }

  std::vector<int> chosen;
  // Depth-first in lexicographic order, so the first hit at a given size is the
  // lexicographically least.
  auto search = [&](auto&& self, int start, int remaining, Subset covered) -> bool {
    if (covered == whole) return true;
    if (remaining == 0) return false;
    for (int i = start; i <= m - remaining; ++i) {
      if (((covered | suffix[i]) & whole) != whole) return false;
      if ((inflated[i] - covered).empty()) continue;
      chosen.push_back(i);
      if (self(self, i + 1, remaining - 1, covered | inflated[i])) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int k = 0; k <= m; ++k) {
    chosen.clear();
    if (search(search, 0, k, Subset{})) return chosen;
  }
  return chosen;  // unreachable: the full index set covers
}

namespace detail {

inline constexpr std::size_t kMaxEnumeratedCoverFamily = 20;

// Every subfamily of `members` whose plain union is X must still cover X once
// each member is inflated. Covers of a finite space are finite, so the cover
// itself is the finite subfamily the covering properties ask for.
inline bool every_cover_reducible(const FiniteSpace& space, const std::vector<Subset>& members,
                                  CoverMode mode) {
  const Subset whole = space.full();
  const std::size_t k = members.size();
  std::vector<Subset> inflated;
  for (Subset s : members) inflated.push_back(inflate(space, s, mode));
  if (k > kMaxEnumeratedCoverFamily) {
    // Too many subfamilies to list: inflation monotone and extensive on each
    // member decides the same question.
    for (std::size_t i = 0; i < k; ++i) {
      if (!members[i].subset_of(inflated[i])) return false;
    }
    return true;
  }
  const std::size_t count = std::size_t{1} << k;
  std::vector<Subset> plain(count), grown(count);
  for (std::size_t mask = 1; mask < count; ++mask) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t rest = mask & (mask - 1);
    plain[mask] = plain[rest] | members[low];
    grown[mask] = grown[rest] | inflated[low];
    if (plain[mask] == whole && grown[mask] != whole) return false;
  }
  return true;
}

inline std::vector<Subset> members_of(const FiniteSpace& space, SetClassId cls) {
  return family(space, cls).members();
}

}  // namespace detail

inline bool has_property(const FiniteSpace& space, SpacePropertyId prop) {
  const int n = space.size();
  const Subset whole = space.full();
  switch (prop) {
    case SpacePropertyId::connected:
      for (Subset u : space.opens()) {
        if (!u.empty() && u != whole && space.is_closed(u)) return false;
      }
      return true;
    case SpacePropertyId::hyperconnected:
      for (Subset u : space.opens()) {
        if (!u.empty() && space.closure(u) != whole) return false;
      }
      return true;
    case SpacePropertyId::locally_indiscrete:
      for (Subset u : space.opens()) {
        if (!space.is_closed(u)) return false;
      }
      return true;
    case SpacePropertyId::globally_disconnected:
      for (Subset s : family(space, SetClassId::semi_open)) {
        if (!space.is_open(s)) return false;
      }
      return true;
    case SpacePropertyId::t1:
      for (int p = 0; p < n; ++p) {
        if (!space.is_closed(Subset::singleton(p))) return false;
      }
      return true;
    case SpacePropertyId::t_half:
      for (int p = 0; p < n; ++p) {
        const Subset s = Subset::singleton(p);
        if (!space.is_open(s) && !space.is_closed(s)) return false;
      }
      return true;
    case SpacePropertyId::discrete:
      return space.opens().size() == space.subset_count();
    case SpacePropertyId::indiscrete:
      return space.opens().size() == (n == 0 ? 1U : 2U);
    case SpacePropertyId::ccc:
      // Any family of pairwise disjoint nonempty opens has at most n members.
      return true;
    case SpacePropertyId::sporadic:
      return is_in_class(space, cb_derivative(space), SetClassId::meager);
    case SpacePropertyId::compact:
      return detail::every_cover_reducible(space, space.opens().members(), CoverMode::plain);
    case SpacePropertyId::semi_compact:
      return detail::every_cover_reducible(space, detail::members_of(space, SetClassId::semi_open),
                                           CoverMode::plain);
    case SpacePropertyId::s_closed_lower:
      return detail::every_cover_reducible(space, detail::members_of(space, SetClassId::semi_open),
                                           CoverMode::semi_closure);
    case SpacePropertyId::s_closed_upper:
      return detail::every_cover_reducible(space, detail::members_of(space, SetClassId::semi_open),
                                           CoverMode::closure);
    case SpacePropertyId::nearly_compact:
      return detail::every_cover_reducible(space, space.opens().members(),
                                           CoverMode::interior_of_closure);
    case SpacePropertyId::quasi_h_closed:
      return detail::every_cover_reducible(space, space.opens().members(), CoverMode::closure);
    case SpacePropertyId::strongly_s_closed:
      return detail::every_cover_reducible(space, detail::members_of(space, SetClassId::closed),
                                           CoverMode::plain);
    case SpacePropertyId::mildly_compact:
      return detail::every_cover_reducible(space, detail::members_of(space, SetClassId::clopen),
                                           CoverMode::plain);
  }
  return false;
}

/// Second route for s-closed, S-closed and nearly compact: every semi-regular
/// (resp. regular closed, regular open) cover has a finite plain subcover.
/// Returns nullopt for properties without such a characterization.
inline std::optional<bool> has_property_via_regular_covers(const FiniteSpace& space,
                                                           SpacePropertyId prop) {
  switch (prop) {
    case SpacePropertyId::s_closed_lower:
      return detail::every_cover_reducible(
          space, detail::members_of(space, SetClassId::semi_regular), CoverMode::plain);
    case SpacePropertyId::s_closed_upper:
      return detail::every_cover_reducible(
          space, detail::members_of(space, SetClassId::regular_closed), CoverMode::plain);
    case SpacePropertyId::nearly_compact:
      return detail::every_cover_reducible(
          space, detail::members_of(space, SetClassId::regular_open), CoverMode::plain);
    default:
      return std::nullopt;
  }
}

/// Bit i set iff the space has kAllSpaceProperties[i].
inline std::uint32_t property_mask(const FiniteSpace& space) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kSpacePropertyCount; ++i) {
    if (has_property(space, kAllSpaceProperties[i])) mask |= std::uint32_t{1} << i;
  }
  return mask;
}

}  // namespace ftop

#endif  // FTOP_SPACE_PROPERTIES_HPP_
