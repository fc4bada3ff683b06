#ifndef FTOP_SUBSET_HPP_
#define FTOP_SUBSET_HPP_

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "ftop/error.hpp"

namespace ftop {

inline constexpr int kMaxPoints = 16;

/// A subset of the ground set {0, ..., n-1}, stored as a bitmask. The owning
/// space is not recorded; operations that care check `within(n)`.
class Subset {
 public:
  using Bits = std::uint32_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Bits bits) : bits_(bits) {}

  static constexpr Subset full(int n) {
    return Subset(n >= 32 ? ~Bits{0} : ((Bits{1} << n) - 1));
  }
  static constexpr Subset singleton(int point) { return Subset(Bits{1} << point); }
  static Subset of(std::initializer_list<int> points) {
    Subset s;
    for (int p : points) s = s.with(p);
    return s;
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int point) const { return (bits_ >> point) & 1U; }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool within(int n) const { return subset_of(full(n)); }

  constexpr Subset with(int point) const { return Subset(bits_ | (Bits{1} << point)); }
  constexpr Subset without(int point) const { return Subset(bits_ & ~(Bits{1} << point)); }
  constexpr Subset complement_in(int n) const { return Subset(~bits_ & full(n).bits_); }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const Subset&) const = default;

  std::vector<int> points() const {
    std::vector<int> out;
    for (Bits b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

 private:
  Bits bits_ = 0;
};

/// Canonical order: by cardinality, then lexicographically on the ascending
/// list of member indices.
inline bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Equal cardinality: the set holding the smallest differing index comes first.
  const Subset::Bits diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return a.contains(std::countr_zero(diff));
}

/// A duplicate-free, canonically ordered list of subsets of one space, so that
/// structural equality of two families is plain vector equality.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(std::vector<Subset> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end(), canonical_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }
  SetFamily(std::initializer_list<Subset> members)
      : SetFamily(std::vector<Subset>(members)) {}

  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(Subset s) const {
    return std::binary_search(members_.begin(), members_.end(), s, canonical_less);
  }

  bool operator==(const SetFamily&) const = default;

 private:
  std::vector<Subset> members_;
};

inline SetFamily family_intersection(const SetFamily& a, const SetFamily& b) {
  std::vector<Subset> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                        canonical_less);
  return SetFamily(std::move(out));
}

inline bool family_includes(const SetFamily& super, const SetFamily& sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end(), canonical_less);
}

}  // namespace ftop

#endif  // FTOP_SUBSET_HPP_
