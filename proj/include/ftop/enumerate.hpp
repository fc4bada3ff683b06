#ifndef FTOP_ENUMERATE_HPP_
#define FTOP_ENUMERATE_HPP_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <vector>

#include "ftop/error.hpp"
#include "ftop/space.hpp"
#include "ftop/space_map.hpp"

namespace ftop {

inline constexpr int kMaxEnumeratedPoints = 5;

/// Bit A of the result is set iff subset A is open. Spaces are enumerated in
/// increasing order of this code.
inline std::uint64_t family_code(const FiniteSpace& space) {
  std::uint64_t code = 0;
  for (Subset s : space.opens()) code |= std::uint64_t{1} << s.bits();
  return code;
}

/// Topologies on a finite set correspond one-to-one with preorders; the open
/// sets are the up-closed sets of the specialization preorder.
inline std::vector<FiniteSpace> enumerate_topologies(int n) {
  if (n < 0 || n > kMaxEnumeratedPoints) {
    throw Error(ErrorKind::kTooLarge,
                "topology enumeration supports n <= 5, got " + std::to_string(n));
  }
  // Off-diagonal relation bits: pair (i, j), i != j, means i <= j.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  const std::uint32_t subsets = std::uint32_t{1} << n;
  std::vector<std::uint64_t> codes;
  std::vector<std::uint32_t> up(n);  // up[i] = points above i
  for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << pairs.size()); ++rel) {
    for (int i = 0; i < n; ++i) up[i] = std::uint32_t{1} << i;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((rel >> k) & 1U) up[pairs[k].first] |= std::uint32_t{1} << pairs[k].second;
    }
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i) {
      for (int j = 0; j < n; ++j) {
        if (((up[i] >> j) & 1U) && (up[j] & ~up[i]) != 0) {
          transitive = false;
          break;
        }
      }
    }
    if (!transitive) continue;
    std::uint64_t code = 0;
    for (std::uint32_t s = 0; s < subsets; ++s) {
      bool upper = true;
      for (int i = 0; i < n && upper; ++i) {
        if (((s >> i) & 1U) && (up[i] & ~s) != 0) upper = false;
      }
      if (upper) code |= std::uint64_t{1} << s;
    }
    codes.push_back(code);
  }
  std::sort(codes.begin(), codes.end());

  std::vector<FiniteSpace> spaces;
  spaces.reserve(codes.size());
  for (std::uint64_t code : codes) {
    std::vector<Subset> opens;
    for (std::uint32_t s = 0; s < subsets; ++s) {
      if ((code >> s) & 1U) opens.emplace_back(s);
    }
    spaces.push_back(validate_space(n, opens));
  }
  return spaces;
}

/// Number of total maps from an n-point set to an m-point set.
inline std::uint64_t map_count(int n, int m) {
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) count *= static_cast<std::uint64_t>(m);
  return count;
}

/// Writes the index-th assignment in lexicographic order (point 0 is the most
/// significant digit).
inline void assignment_at(std::uint64_t index, int n, int m, std::vector<int>& out) {
  out.assign(n, 0);
  for (int x = n - 1; x >= 0; --x) {
    out[x] = static_cast<int>(index % static_cast<std::uint64_t>(m));
    index /= static_cast<std::uint64_t>(m);
  }
}

/// All maps X -> Y, lexicographic in the assignment array.
inline std::vector<SpaceMap> enumerate_maps(const FiniteSpace& x, const FiniteSpace& y) {
  auto dom = std::make_shared<const FiniteSpace>(x);
  auto cod = std::make_shared<const FiniteSpace>(y);
  const std::uint64_t count = map_count(x.size(), y.size());
  std::vector<SpaceMap> maps;
  maps.reserve(count);
  std::vector<int> a;
  for (std::uint64_t i = 0; i < count; ++i) {
    assignment_at(i, x.size(), y.size(), a);
    maps.emplace_back(dom, cod, a);
  }
  return maps;
}

}  // namespace ftop

#endif  // FTOP_ENUMERATE_HPP_
