#ifndef FTOP_SET_CLASSES_HPP_
#define FTOP_SET_CLASSES_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ftop/space.hpp"
#include "ftop/subset.hpp"

namespace ftop {

enum class SetClassId {
  open,
  closed,
  clopen,
  semi_open,
  semi_closed,
  semi_regular,
  regular_open,
  regular_closed,
  preopen,
  preclosed_set,
  alpha_open,
  beta_open,
  b_set,
  ab_set,
  gs_closed,
  sg_closed,
  simply_open,
  nowhere_dense,
  dense,
  meager,
};

inline constexpr std::size_t kSetClassCount = 20;

inline constexpr std::array<SetClassId, kSetClassCount> kAllSetClasses = {
    SetClassId::open,          SetClassId::closed,        SetClassId::clopen,
    SetClassId::semi_open,     SetClassId::semi_closed,   SetClassId::semi_regular,
    SetClassId::regular_open,  SetClassId::regular_closed, SetClassId::preopen,
    SetClassId::preclosed_set, SetClassId::alpha_open,    SetClassId::beta_open,
    SetClassId::b_set,         SetClassId::ab_set,        SetClassId::gs_closed,
    SetClassId::sg_closed,     SetClassId::simply_open,   SetClassId::nowhere_dense,
    SetClassId::dense,         SetClassId::meager,
};

inline constexpr std::array<std::string_view, kSetClassCount> kSetClassNames = {
    "open",          "closed",        "clopen",        "semi_open",   "semi_closed",
    "semi_regular",  "regular_open",  "regular_closed", "preopen",    "preclosed_set",
    "alpha_open",    "beta_open",     "b_set",         "ab_set",      "gs_closed",
    "sg_closed",     "simply_open",   "nowhere_dense", "dense",       "meager",
};

inline std::string_view name_of(SetClassId id) {
  return kSetClassNames[static_cast<std::size_t>(id)];
}

inline std::optional<SetClassId> parse_set_class(std::string_view name) {
  for (std::size_t i = 0; i < kSetClassCount; ++i) {
    if (kSetClassNames[i] == name) return kAllSetClasses[i];
  }
  return std::nullopt;
}

namespace detail {

// Calls fn(R) for every R with a <= R <= X, largest first. Stops early when
// fn returns true; returns whether it did.
template <typename Fn>
bool any_superset(const FiniteSpace& space, Subset a, Fn&& fn) {
  const Subset::Bits rest = a.complement_in(space.size()).bits();
  for (Subset::Bits s = rest;; s = (s - 1) & rest) {
    if (fn(a | Subset(s))) return true;
    if (s == 0) return false;
  }
}

inline bool semi_open(const FiniteSpace& sp, Subset a) {
  return a.subset_of(sp.closure(sp.interior(a)));
}
inline bool semi_closed(const FiniteSpace& sp, Subset a) {
  return sp.interior(sp.closure(a)).subset_of(a);
}
inline bool nowhere_dense(const FiniteSpace& sp, Subset a) {
  return sp.interior(sp.closure(a)).empty();
}

}  // namespace detail

/// Membership of `a` in a generalized open/closed class of `space`.
///
/// The existential classes are evaluated through the smallest open superset
/// ker(A): A = U n F with U open forces A = ker(A) n F, so B-sets reduce to
/// A = ker(A) n sCl(A), AB-sets to a search over semi-regular supersets, and
/// gs-closedness to sCl(A) <= ker(A). Simply-open reduces to A \ Int(A) being
/// nowhere dense because nowhere-dense sets are closed under subsets.
inline bool is_in_class(const FiniteSpace& space, Subset a, SetClassId cls) {
  const Subset whole = space.full();
  switch (cls) {
    case SetClassId::open:
      return space.is_open(a);
    case SetClassId::closed:
      return space.is_closed(a);
    case SetClassId::clopen:
      return space.is_open(a) && space.is_closed(a);
    case SetClassId::semi_open:
      return detail::semi_open(space, a);
    case SetClassId::semi_closed:
      return detail::semi_closed(space, a);
    case SetClassId::semi_regular:
      return detail::semi_open(space, a) && detail::semi_closed(space, a);
    case SetClassId::regular_open:
      return a == space.interior(space.closure(a));
    case SetClassId::regular_closed:
      return a == space.closure(space.interior(a));
    case SetClassId::preopen:
      return a.subset_of(space.interior(space.closure(a)));
    case SetClassId::preclosed_set:
      return space.closure(space.interior(a)).subset_of(a);
    case SetClassId::alpha_open:
      return a.subset_of(space.interior(space.closure(space.interior(a))));
    case SetClassId::beta_open:
      return a.subset_of(space.closure(space.interior(space.closure(a))));
    case SetClassId::b_set:
      return (space.kernel(a) & space.semi_closure(a)) == a;
    case SetClassId::ab_set: {
      const Subset ker = space.kernel(a);
      return detail::any_superset(space, a, [&](Subset r) {
        return (ker & r) == a && detail::semi_open(space, r) && detail::semi_closed(space, r);
      });
    }
    case SetClassId::gs_closed:
      return space.semi_closure(a).subset_of(space.kernel(a));
    case SetClassId::sg_closed: {
      const Subset scl = space.semi_closure(a);
      return !detail::any_superset(space, a, [&](Subset u) {
        return detail::semi_open(space, u) && !scl.subset_of(u);
      });
    }
    case SetClassId::simply_open:
      return detail::nowhere_dense(space, a - space.interior(a));
    case SetClassId::nowhere_dense:
      return detail::nowhere_dense(space, a);
    case SetClassId::dense:
      return space.closure(a) == whole;
    case SetClassId::meager:
      for (int p : a.points()) {
        if (!detail::nowhere_dense(space, Subset::singleton(p))) return false;
      }
      return true;
  }
  return false;
}

/// All subsets of the space lying in `cls`, canonically ordered.
inline SetFamily family(const FiniteSpace& space, SetClassId cls) {
  std::vector<Subset> members;
  for (std::size_t i = 0; i < space.subset_count(); ++i) {
    const Subset a(static_cast<Subset::Bits>(i));
    if (is_in_class(space, a, cls)) members.push_back(a);
  }
  return SetFamily(std::move(members));
}

/// Intersection of all regular open supersets of `a` (X when there are none
/// besides X itself).
inline Subset regular_open_hull(const FiniteSpace& space, Subset a) {
  Subset acc = space.full();
  detail::any_superset(space, a, [&](Subset r) {
    if (r == space.interior(space.closure(r))) acc &= r;
    return false;
  });
  return acc;
}

/// True when `a` is an intersection of regular open sets.
inline bool is_regular_open_intersection(const FiniteSpace& space, Subset a) {
  return regular_open_hull(space, a) == a;
}

}  // namespace ftop

#endif  // FTOP_SET_CLASSES_HPP_
