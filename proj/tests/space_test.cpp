#include <gtest/gtest.h>

#include "ftop/enumerate.hpp"
#include "ftop/fixtures.hpp"
#include "ftop/set_classes.hpp"
#include "ftop/space.hpp"
#include "oracles.hpp"

using namespace ftop;
using namespace ftop::fixtures;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kSchemaError;
}

std::vector<FiniteSpace> spaces_upto(int n_max) {
  std::vector<FiniteSpace> out;
  for (int n = 0; n <= n_max; ++n) {
    for (FiniteSpace& s : enumerate_topologies(n)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST(ValidateSpace, AcceptsSierpinskiAndCanonicalizes) {
  const FiniteSpace s = validate_space(2, {kA | kB, Subset{}, kA, kA});
  EXPECT_EQ(s.opens(), SetFamily({Subset{}, kA, kA | kB}));
  EXPECT_EQ(s.labels(), (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(s.same_topology(sierpinski()));
}

TEST(ValidateSpace, AcceptsExampleSpace) {
  const FiniteSpace t = e3_tau();
  EXPECT_EQ(t.opens().size(), 5U);
}

TEST(ValidateSpace, RejectsBadFamilies) {
  EXPECT_EQ(kind_of([] { validate_space(2, {Subset{}, kA, kB}); }), ErrorKind::kMissingExtremes);
  EXPECT_EQ(kind_of([] { validate_space(3, {Subset{}, kA, kB, Subset::full(3)}); }),
            ErrorKind::kNotALattice);
  EXPECT_EQ(kind_of([] { validate_space(3, {Subset{}, kA | kB, kB | kC, Subset::full(3)}); }),
            ErrorKind::kNotALattice);
  EXPECT_EQ(kind_of([] { validate_space(2, {Subset{}, kC, Subset::full(2)}); }),
            ErrorKind::kOutOfRange);
  EXPECT_EQ(kind_of([] { validate_space(17, {}); }), ErrorKind::kOutOfRange);
  EXPECT_EQ(kind_of([] { validate_space(2, {Subset{}, Subset::full(2)}, {"p", "p"}); }),
            ErrorKind::kOutOfRange);
  EXPECT_EQ(kind_of([] { validate_space(1, {Subset{}}); }), ErrorKind::kMissingExtremes);
}

TEST(ValidateSpace, LatticeErrorNamesTheOffendingSets) {
  try {
    validate_space(3, {Subset{}, kA, kB, Subset::full(3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("{a,b}"), std::string::npos) << e.what();
  }
}

TEST(ValidateSpace, EmptySpace) {
  const FiniteSpace s = validate_space(0, {Subset{}});
  EXPECT_EQ(s.size(), 0);
  EXPECT_EQ(s.opens().size(), 1U);
}

TEST(Operators, SpecExamples) {
  const FiniteSpace s = sierpinski();
  EXPECT_EQ(interior(s, kB), Subset{});
  EXPECT_EQ(interior(s, s.full()), s.full());
  EXPECT_EQ(closure(s, kA), kA | kB);

  const FiniteSpace t = e3_tau();
  EXPECT_EQ(interior(t, kA | kC), kA);
  EXPECT_EQ(closure(t, kA | kB), t.full());
  EXPECT_EQ(closure(t, kA), kA | kC);
  EXPECT_EQ(semi_closure(t, kA), kA);

  EXPECT_EQ(semi_closure(ee3_tau(), kA), ee3_tau().full());
}

TEST(Operators, MatchLiteralDefinitionsOnEverySmallSpace) {
  for (const FiniteSpace& s : spaces_upto(3)) {
    const oracle::Topo t(s);
    for (Subset a : t.all()) {
      ASSERT_EQ(s.interior(a), t.interior(a));
      ASSERT_EQ(s.closure(a), t.closure(a));
      ASSERT_EQ(s.semi_closure(a), t.semi_closure(a));
      Subset ker = s.full();
      for (Subset u : t.opens) {
        if (a.subset_of(u)) ker = ker & u;
      }
      ASSERT_EQ(s.kernel(a), ker);
    }
  }
}

TEST(Operators, KuratowskiLaws) {
  for (const FiniteSpace& s : spaces_upto(4)) {
    const int n = s.size();
    for (std::size_t i = 0; i < s.subset_count(); ++i) {
      const Subset a(static_cast<Subset::Bits>(i));
      ASSERT_EQ(s.interior(a), s.closure(a.complement_in(n)).complement_in(n));
      ASSERT_TRUE(s.interior(a).subset_of(a));
      ASSERT_TRUE(a.subset_of(s.closure(a)));
      ASSERT_EQ(s.interior(s.interior(a)), s.interior(a));
      ASSERT_EQ(s.closure(s.closure(a)), s.closure(a));
      const Subset scl = s.semi_closure(a);
      ASSERT_TRUE(a.subset_of(scl));
      ASSERT_EQ(s.semi_closure(scl), scl);
      ASSERT_TRUE(is_in_class(s, scl, SetClassId::semi_closed));
      for (int p : a.complement_in(n).points()) {
        const Subset b = a.with(p);
        ASSERT_TRUE(s.interior(a).subset_of(s.interior(b)));
        ASSERT_TRUE(s.closure(a).subset_of(s.closure(b)));
        ASSERT_TRUE(scl.subset_of(s.semi_closure(b)));
      }
    }
  }
}

TEST(Space, EqualityIncludesLabels) {
  const FiniteSpace a = validate_space(2, {Subset{}, kA, kA | kB});
  const FiniteSpace b = validate_space(2, {Subset{}, kA, kA | kB}, {"x", "y"});
  EXPECT_TRUE(a.same_topology(b));
  EXPECT_FALSE(a == b);
  EXPECT_TRUE(a == sierpinski());
}

TEST(Space, DefaultLabels) {
  EXPECT_EQ(default_label(0), "a");
  EXPECT_EQ(default_label(25), "z");
  EXPECT_EQ(default_label(26), "p26");
  const FiniteSpace d = discrete_space(16);
  EXPECT_EQ(d.labels().back(), "p");
}
