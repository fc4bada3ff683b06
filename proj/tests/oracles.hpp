#ifndef FTOP_TESTS_ORACLES_HPP_
#define FTOP_TESTS_ORACLES_HPP_

// Slow reference implementations used to cross-check the library. They work
// from the list of open sets alone and follow the textbook definitions
// literally (quantifiers become loops), sharing no tables with the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "ftop/map_classes.hpp"
#include "ftop/set_classes.hpp"
#include "ftop/space.hpp"
#include "ftop/space_map.hpp"
#include "ftop/space_properties.hpp"

namespace oracle {

using ftop::FiniteSpace;
using ftop::SetClassId;
using ftop::Subset;

struct Topo {
  int n = 0;
  std::vector<Subset> opens;

  explicit Topo(const FiniteSpace& s) : n(s.size()), opens(s.opens().members()) {}

  Subset full() const { return Subset::full(n); }
  Subset comp(Subset a) const { return a.complement_in(n); }
  std::vector<Subset> all() const {
    std::vector<Subset> out;
    for (std::uint32_t b = 0; b < (1U << n); ++b) out.emplace_back(b);
    return out;
  }
  bool open(Subset a) const { return std::find(opens.begin(), opens.end(), a) != opens.end(); }
  bool closed(Subset a) const { return open(comp(a)); }

  Subset interior(Subset a) const {
    Subset acc;
    for (Subset u : opens) {
      if (u.subset_of(a)) acc = acc | u;
    }
    return acc;
  }
  Subset closure(Subset a) const {
    Subset acc = full();
    for (Subset u : opens) {
      const Subset f = comp(u);
      if (a.subset_of(f)) acc = acc & f;
    }
    return acc;
  }
  bool semi_open(Subset a) const { return a.subset_of(closure(interior(a))); }
  bool semi_closed(Subset a) const { return interior(closure(a)).subset_of(a); }
  bool nowhere_dense(Subset a) const { return interior(closure(a)).empty(); }
  bool regular_open(Subset a) const { return a == interior(closure(a)); }

  Subset semi_closure(Subset a) const {
    Subset acc = full();
    for (Subset f : all()) {
      if (a.subset_of(f) && semi_closed(f)) acc = acc & f;
    }
    return acc;
  }
  Subset regular_open_hull(Subset a) const {
    Subset acc = full();
    for (Subset r : all()) {
      if (a.subset_of(r) && regular_open(r)) acc = acc & r;
    }
    return acc;
  }

  bool in(Subset a, SetClassId cls) const {
    switch (cls) {
      case SetClassId::open: return open(a);
      case SetClassId::closed: return closed(a);
      case SetClassId::clopen: return open(a) && closed(a);
      case SetClassId::semi_open: return semi_open(a);
      case SetClassId::semi_closed: return semi_closed(a);
      case SetClassId::semi_regular: return semi_open(a) && semi_closed(a);
      case SetClassId::regular_open: return regular_open(a);
      case SetClassId::regular_closed: return a == closure(interior(a));
      case SetClassId::preopen: return a.subset_of(interior(closure(a)));
      case SetClassId::preclosed_set: return closure(interior(a)).subset_of(a);
      case SetClassId::alpha_open: return a.subset_of(interior(closure(interior(a))));
      case SetClassId::beta_open: return a.subset_of(closure(interior(closure(a))));
      case SetClassId::b_set:
        for (Subset u : opens) {
          for (Subset f : all()) {
            if (semi_closed(f) && (u & f) == a) return true;
          }
        }
        return false;
      case SetClassId::ab_set:
        for (Subset u : opens) {
          for (Subset r : all()) {
            if (semi_open(r) && semi_closed(r) && (u & r) == a) return true;
          }
        }
        return false;
      case SetClassId::gs_closed:
        for (Subset u : opens) {
          if (a.subset_of(u) && !semi_closure(a).subset_of(u)) return false;
        }
        return true;
      case SetClassId::sg_closed:
        for (Subset u : all()) {
          if (semi_open(u) && a.subset_of(u) && !semi_closure(a).subset_of(u)) return false;
        }
        return true;
      case SetClassId::simply_open:
        for (Subset u : opens) {
          for (Subset nd : all()) {
            if (nowhere_dense(nd) && (u | nd) == a) return true;
          }
        }
        return false;
      case SetClassId::nowhere_dense: return nowhere_dense(a);
      case SetClassId::dense: return closure(a) == full();
      case SetClassId::meager: {
        // union of the nowhere-dense subsets of A
        Subset acc;
        for (Subset s : all()) {
          if (s.subset_of(a) && nowhere_dense(s)) acc = acc | s;
        }
        return acc == a;
      }
    }
    return false;
  }

  std::vector<Subset> family(SetClassId cls) const {
    std::vector<Subset> out;
    for (Subset a : all()) {
      if (in(a, cls)) out.push_back(a);
    }
    return out;
  }
};

inline Subset preimage(const std::vector<int>& f, Subset b) {
  Subset out;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (b.contains(f[x])) out = out.with(static_cast<int>(x));
  }
  return out;
}

inline Subset image(const std::vector<int>& f, Subset a) {
  Subset out;
  for (int x : a.points()) out = out.with(f[x]);
  return out;
}

/// Literal evaluation of a map class rule.
inline bool map_in_class(const Topo& x, const Topo& y, const std::vector<int>& f,
                         ftop::MapClassId cls) {
  const ftop::MapClassRule& rule = ftop::rule_of(cls);
  auto ok = [&](const Topo& t, Subset s) {
    return rule.regular_open_intersection ? t.regular_open_hull(s) == s : t.in(s, rule.target);
  };
  switch (rule.source) {
    case ftop::RuleSource::open_preimages:
      for (Subset v : y.opens) {
        if (!ok(x, preimage(f, v))) return false;
      }
      return true;
    case ftop::RuleSource::regular_open_preimages:
      for (Subset v : y.all()) {
        if (y.regular_open(v) && !ok(x, preimage(f, v))) return false;
      }
      return true;
    case ftop::RuleSource::closed_images:
      for (Subset u : x.opens) {
        if (!ok(y, image(f, x.comp(u)))) return false;
      }
      return true;
  }
  return false;
}

/// Every family of subsets of an n-point set (n <= 4) that contains the
/// extremes and is closed under pairwise union and intersection, as bitmasks
/// over subset codes.
inline std::vector<std::uint64_t> brute_topologies(int n) {
  const int subsets = 1 << n;
  const std::uint32_t full = static_cast<std::uint32_t>(subsets - 1);
  std::vector<std::uint64_t> out;
  const std::uint64_t families = std::uint64_t{1} << subsets;
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    if (!(fam & 1U) || !((fam >> full) & 1U)) continue;
    bool ok = true;
    for (int a = 0; a < subsets && ok; ++a) {
      if (!((fam >> a) & 1U)) continue;
      for (int b = 0; b < subsets && ok; ++b) {
        if (!((fam >> b) & 1U)) continue;
        ok = ((fam >> (a | b)) & 1U) && ((fam >> (a & b)) & 1U);
      }
    }
    if (ok) out.push_back(fam);
  }
  return out;
}

inline Subset inflate(const Topo& t, Subset a, ftop::CoverMode mode) {
  switch (mode) {
    case ftop::CoverMode::plain: return a;
    case ftop::CoverMode::closure: return t.closure(a);
    case ftop::CoverMode::semi_closure: return t.semi_closure(a);
    case ftop::CoverMode::interior_of_closure: return t.interior(t.closure(a));
  }
  return a;
}

/// Smallest number of cover members whose inflations cover X, by trying
/// every index subset; -1 when even the whole cover fails.
inline int min_subcover_size(const Topo& t, const std::vector<Subset>& cover,
                             ftop::CoverMode mode) {
  const std::size_t m = cover.size();
  int best = -1;
  for (std::uint32_t pick = 0; pick < (1U << m); ++pick) {
    Subset acc;
    for (std::size_t i = 0; i < m; ++i) {
      if ((pick >> i) & 1U) acc = acc | inflate(t, cover[i], mode);
    }
    const int size = std::popcount(pick);
    if (acc == t.full() && (best < 0 || size < best)) best = size;
  }
  return best;
}

}  // namespace oracle

#endif  // FTOP_TESTS_ORACLES_HPP_
