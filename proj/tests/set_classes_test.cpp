#include <gtest/gtest.h>

#include "ftop/enumerate.hpp"
#include "ftop/fixtures.hpp"
#include "ftop/set_classes.hpp"
#include "oracles.hpp"

using namespace ftop;
using namespace ftop::fixtures;

namespace {

std::vector<FiniteSpace> spaces_upto(int n_max) {
  std::vector<FiniteSpace> out;
  for (int n = 0; n <= n_max; ++n) {
    for (FiniteSpace& s : enumerate_topologies(n)) out.push_back(std::move(s));
  }
  return out;
}

bool included(const FiniteSpace& s, SetClassId sub, SetClassId super) {
  return family_includes(family(s, super), family(s, sub));
}

}  // namespace

TEST(SetClasses, NamesRoundTrip) {
  EXPECT_EQ(kSetClassCount, 20U);
  for (SetClassId id : kAllSetClasses) EXPECT_EQ(parse_set_class(name_of(id)), id);
  EXPECT_FALSE(parse_set_class("semiopen").has_value());
}

TEST(SetClasses, WorkedExamples) {
  EXPECT_FALSE(is_in_class(e3_tau(), kA | kB, SetClassId::semi_regular));
  EXPECT_FALSE(is_in_class(indiscrete_space(2), kA, SetClassId::b_set));
  EXPECT_FALSE(is_in_class(e4_tau(), kA, SetClassId::semi_closed));
}

TEST(SetClasses, EmptySetBelongsToEveryClassButDense) {
  for (const FiniteSpace& s : spaces_upto(3)) {
    for (SetClassId id : kAllSetClasses) {
      const bool expected = id != SetClassId::dense || s.size() == 0;
      EXPECT_EQ(is_in_class(s, Subset{}, id), expected) << name_of(id) << " n=" << s.size();
    }
  }
}

TEST(SetClasses, FamilyExamples) {
  EXPECT_EQ(family(sierpinski(), SetClassId::semi_open), SetFamily({Subset{}, kA, kA | kB}));
  EXPECT_EQ(family(e3_tau(), SetClassId::semi_open),
            SetFamily({Subset{}, kA, kB, kA | kB, kA | kC, kB | kC, kA | kB | kC}));
  const FiniteSpace d = discrete_space(3);
  for (SetClassId id : {SetClassId::open, SetClassId::semi_open, SetClassId::preopen,
                        SetClassId::alpha_open, SetClassId::beta_open, SetClassId::b_set}) {
    EXPECT_EQ(family(d, id).size(), 8U) << name_of(id);
  }
}

// The library evaluates B-sets, AB-sets, gs-closedness, simply-open sets and
// meagerness through reductions; the oracle quantifies literally.
TEST(SetClasses, AgreeWithLiteralDefinitions) {
  for (const FiniteSpace& s : spaces_upto(3)) {
    const oracle::Topo t(s);
    for (SetClassId id : kAllSetClasses) {
      ASSERT_EQ(family(s, id), SetFamily(t.family(id))) << name_of(id);
    }
  }
}

TEST(SetClasses, AgreeWithLiteralDefinitionsOnFourPoints) {
  // The classes whose evaluation uses a reduction.
  const auto spaces = enumerate_topologies(4);
  for (std::size_t i = 0; i < spaces.size(); i += 3) {
    const oracle::Topo t(spaces[i]);
    for (SetClassId id : {SetClassId::b_set, SetClassId::ab_set, SetClassId::gs_closed,
                          SetClassId::sg_closed, SetClassId::simply_open, SetClassId::meager}) {
      ASSERT_EQ(family(spaces[i], id), SetFamily(t.family(id))) << name_of(id);
    }
  }
}

TEST(SetClasses, Containments) {
  using S = SetClassId;
  const std::vector<std::pair<S, S>> chain = {
      {S::clopen, S::semi_regular},  {S::open, S::alpha_open},      {S::alpha_open, S::semi_open},
      {S::semi_open, S::beta_open},  {S::alpha_open, S::preopen},   {S::preopen, S::beta_open},
      {S::open, S::b_set},           {S::ab_set, S::b_set},         {S::regular_closed, S::semi_open},
      {S::sg_closed, S::gs_closed},  {S::semi_closed, S::sg_closed}, {S::open, S::simply_open},
      {S::nowhere_dense, S::simply_open}, {S::nowhere_dense, S::meager},
  };
  for (const FiniteSpace& s : spaces_upto(4)) {
    for (const auto& [sub, super] : chain) {
      ASSERT_TRUE(included(s, sub, super)) << name_of(sub) << " in " << name_of(super);
    }
  }
}

TEST(SetClasses, ComplementDualities) {
  using S = SetClassId;
  const std::vector<std::pair<S, S>> duals = {
      {S::open, S::closed},
      {S::semi_open, S::semi_closed},
      {S::regular_open, S::regular_closed},
      {S::preopen, S::preclosed_set},
  };
  for (const FiniteSpace& s : spaces_upto(4)) {
    for (std::size_t i = 0; i < s.subset_count(); ++i) {
      const Subset a(static_cast<Subset::Bits>(i));
      const Subset c = a.complement_in(s.size());
      for (const auto& [o, k] : duals) ASSERT_EQ(is_in_class(s, a, k), is_in_class(s, c, o));
      ASSERT_EQ(is_in_class(s, a, S::semi_regular), is_in_class(s, c, S::semi_regular));
      ASSERT_EQ(is_in_class(s, a, S::clopen), is_in_class(s, c, S::clopen));
    }
  }
}

TEST(SetClasses, DecompositionLemmasOnThreePoints) {
  using S = SetClassId;
  for (const FiniteSpace& s : spaces_upto(3)) {
    const SetFamily sc = family(s, S::semi_closed);
    EXPECT_EQ(family(s, S::semi_regular), family_intersection(family(s, S::beta_open), sc));
    const SetFamily ro = family(s, S::regular_open);
    EXPECT_EQ(ro, family_intersection(s.opens(), sc));
    EXPECT_EQ(ro, family_intersection(family(s, S::alpha_open), sc));
    EXPECT_EQ(ro, family_intersection(family(s, S::preopen), sc));
  }
}

TEST(SetClasses, RegularOpenHull) {
  for (const FiniteSpace& s : spaces_upto(3)) {
    const oracle::Topo t(s);
    for (Subset a : t.all()) {
      ASSERT_EQ(regular_open_hull(s, a), t.regular_open_hull(a));
      ASSERT_EQ(is_regular_open_intersection(s, a), is_in_class(s, a, SetClassId::regular_open))
          << "finite intersections of regular open sets are regular open";
    }
  }
}
