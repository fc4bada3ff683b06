#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "ftop/enumerate.hpp"
#include "oracles.hpp"

using namespace ftop;

TEST(EnumerateTopologies, CountsMatchBruteForce) {
  const std::uint64_t expected[] = {1, 1, 4, 29, 355};
  for (int n = 0; n <= 4; ++n) {
    const auto spaces = enumerate_topologies(n);
    const auto brute = oracle::brute_topologies(n);
    ASSERT_EQ(spaces.size(), expected[n]);
    ASSERT_EQ(brute.size(), expected[n]);
    std::vector<std::uint64_t> codes;
    for (const FiniteSpace& s : spaces) codes.push_back(family_code(s));
    EXPECT_EQ(codes, brute) << "same families, same increasing order";
  }
}

TEST(EnumerateTopologies, FivePoints) {
  const auto spaces = enumerate_topologies(5);
  EXPECT_EQ(spaces.size(), 6942U);
  std::set<std::uint64_t> codes;
  for (const FiniteSpace& s : spaces) codes.insert(family_code(s));
  EXPECT_EQ(codes.size(), spaces.size());
}

TEST(EnumerateTopologies, Deterministic) {
  const auto a = enumerate_topologies(3);
  const auto b = enumerate_topologies(3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i] == b[i]);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end(), [](const FiniteSpace& x, const FiniteSpace& y) {
    return family_code(x) < family_code(y);
  }));
}

TEST(EnumerateTopologies, RejectsLargeN) {
  try {
    enumerate_topologies(6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTooLarge);
  }
  EXPECT_THROW(enumerate_topologies(-1), Error);
}

TEST(EnumerateMaps, CountsAndOrder) {
  const auto two = enumerate_topologies(2);
  const auto three = enumerate_topologies(3);
  const FiniteSpace empty = enumerate_topologies(0).front();
  EXPECT_EQ(enumerate_maps(two[0], two[1]).size(), 4U);
  EXPECT_EQ(enumerate_maps(three[0], three[1]).size(), 27U);
  EXPECT_EQ(enumerate_maps(empty, three[0]).size(), 1U);
  EXPECT_EQ(enumerate_maps(three[0], empty).size(), 0U);

  const auto maps = enumerate_maps(two[0], two[0]);
  EXPECT_EQ(maps[0].assignment(), (std::vector<int>{0, 0}));
  EXPECT_EQ(maps[1].assignment(), (std::vector<int>{0, 1}));
  EXPECT_EQ(maps[2].assignment(), (std::vector<int>{1, 0}));
  EXPECT_EQ(maps[3].assignment(), (std::vector<int>{1, 1}));
}
