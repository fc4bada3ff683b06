#ifndef FTOP_SPACE_HPP_
#define FTOP_SPACE_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ftop/error.hpp"
#include "ftop/subset.hpp"

namespace ftop {

/// Default point names: a, b, c, ... then p26, p27, ...
inline std::string default_label(int index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "p" + std::to_string(index);
}

inline std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(default_label(i));
  return labels;
}

class FiniteSpace;
FiniteSpace validate_space(int n, const std::vector<Subset>& opens,
                           std::vector<std::string> labels = {});

/// A finite topological space. Immutable once built; construct it through
/// `validate_space`. The interior, closure, kernel and semi-closure of every
/// subset are tabulated at construction (2^n entries each).
class FiniteSpace {
 public:
  int size() const { return n_; }
  Subset full() const { return Subset::full(n_); }
  const std::vector<std::string>& labels() const { return labels_; }
  const SetFamily& opens() const { return opens_; }
  std::size_t subset_count() const { return std::size_t{1} << n_; }

  bool is_open(Subset a) const { return interior_[a.bits()] == a; }
  bool is_closed(Subset a) const { return is_open(a.complement_in(n_)); }

  Subset interior(Subset a) const { return interior_[a.bits()]; }
  Subset closure(Subset a) const { return closure_[a.bits()]; }
  /// Smallest open superset (finite spaces are Alexandrov spaces).
  Subset kernel(Subset a) const { return kernel_[a.bits()]; }
  Subset semi_closure(Subset a) const { return semi_closure_[a.bits()]; }

  /// Topology equality; point labels are presentation only.
  bool same_topology(const FiniteSpace& other) const {
    return n_ == other.n_ && opens_ == other.opens_;
  }
  bool operator==(const FiniteSpace& other) const {
    return same_topology(other) && labels_ == other.labels_;
  }

 private:
  friend FiniteSpace validate_space(int, const std::vector<Subset>&, std::vector<std::string>);
  FiniteSpace() = default;

  int n_ = 0;
  std::vector<std::string> labels_;
  SetFamily opens_;
  std::vector<Subset> interior_;
  std::vector<Subset> closure_;
  std::vector<Subset> kernel_;
  std::vector<Subset> semi_closure_;
};

namespace detail {

inline std::string describe(Subset s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (int p : s.points()) {
    if (!first) out += ",";
    first = false;
    out += p < static_cast<int>(labels.size()) ? labels[p] : std::to_string(p);
  }
  return out + "}";
}

// Pair witness for a failed lattice check; only used to build the message.
inline std::string lattice_violation(const SetFamily& opens, const std::vector<char>& is_open,
                                     const std::vector<std::string>& labels) {
  for (Subset p : opens) {
    for (Subset q : opens) {
      if (!is_open[(p | q).bits()]) {
        return describe(p, labels) + " u " + describe(q, labels) + " = " +
               describe(p | q, labels) + " is not open";
      }
      if (!is_open[(p & q).bits()]) {
        return describe(p, labels) + " n " + describe(q, labels) + " = " +
               describe(p & q, labels) + " is not open";
      }
    }
  }
  return "family is not closed under union and intersection";
}

}  // namespace detail

/// Checks the topology axioms and returns the space with its opens
/// deduplicated and canonically ordered.
inline FiniteSpace validate_space(int n, const std::vector<Subset>& opens,
                                  std::vector<std::string> labels) {
  if (n < 0 || n > kMaxPoints) {
    throw Error(ErrorKind::kOutOfRange,
                "ground set size " + std::to_string(n) + " outside [0, 16]");
  }
  if (labels.empty()) labels = default_labels(n);
  if (static_cast<int>(labels.size()) != n) {
    throw Error(ErrorKind::kOutOfRange, "expected " + std::to_string(n) + " point labels");
  }
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
    throw Error(ErrorKind::kOutOfRange, "point labels are not distinct");
  }

  const Subset whole = Subset::full(n);
  const std::size_t count = std::size_t{1} << n;
  std::vector<char> is_open(count, 0);
  for (Subset s : opens) {
    if (!s.within(n)) {
      throw Error(ErrorKind::kOutOfRange,
                  "open set mentions a point index >= " + std::to_string(n));
    }
    is_open[s.bits()] = 1;
  }
  if (!is_open[0] || !is_open[whole.bits()]) {
    throw Error(ErrorKind::kMissingExtremes,
                std::string(!is_open[0] ? "empty set" : "whole space") + " is not open");
  }

  FiniteSpace space;
  space.n_ = n;
  space.labels_ = std::move(labels);
  space.opens_ = SetFamily(opens);

  // union of the members inside A; the family is union-closed iff this is
  // always a member.
  space.interior_.assign(count, Subset{});
  for (std::size_t bits = 0; bits < count; ++bits) {
    const Subset a(static_cast<Subset::Bits>(bits));
    if (is_open[bits]) {
      space.interior_[bits] = a;
      continue;
    }
    Subset acc;
    for (int p : a.points()) acc |= space.interior_[a.without(p).bits()];
    space.interior_[bits] = acc;
  }
  // intersection of the members containing A, filled from the top down.
  space.kernel_.assign(count, Subset{});
  for (std::size_t i = count; i-- > 0;) {
    const Subset a(static_cast<Subset::Bits>(i));
    if (is_open[i]) {
      space.kernel_[i] = a;
      continue;
    }
    Subset acc = whole;
    for (int p : a.complement_in(n).points()) acc &= space.kernel_[a.with(p).bits()];
    space.kernel_[i] = acc;
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (!is_open[space.interior_[i].bits()] || !is_open[space.kernel_[i].bits()]) {
      throw Error(ErrorKind::kNotALattice,
                  detail::lattice_violation(space.opens_, is_open, space.labels_));
    }
  }

  space.closure_.assign(count, Subset{});
  for (std::size_t i = 0; i < count; ++i) {
    const Subset a(static_cast<Subset::Bits>(i));
    space.closure_[i] = space.interior_[a.complement_in(n).bits()].complement_in(n);
  }

  // Semi-closed: Int(Cl A) is inside A. sCl(A) is A itself when A is
  // semi-closed, otherwise every semi-closed superset contains some A+{x}.
  space.semi_closure_.assign(count, Subset{});
  for (std::size_t i = count; i-- > 0;) {
    const Subset a(static_cast<Subset::Bits>(i));
    if (space.interior(space.closure(a)).subset_of(a)) {
      space.semi_closure_[i] = a;
      continue;
    }
    Subset acc = whole;
    for (int p : a.complement_in(n).points()) acc &= space.semi_closure_[a.with(p).bits()];
    space.semi_closure_[i] = acc;
  }
  return space;
}

inline Subset interior(const FiniteSpace& space, Subset a) { return space.interior(a); }
inline Subset closure(const FiniteSpace& space, Subset a) { return space.closure(a); }
inline Subset semi_closure(const FiniteSpace& space, Subset a) { return space.semi_closure(a); }

/// Topology given by a family of opens on default-labelled points; throws on
/// invalid input like `validate_space`.
inline FiniteSpace make_space(int n, std::initializer_list<Subset> opens) {
  return validate_space(n, std::vector<Subset>(opens));
}

inline FiniteSpace discrete_space(int n) {
  std::vector<Subset> opens;
  for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
    opens.emplace_back(static_cast<Subset::Bits>(i));
  }
  return validate_space(n, opens);
}

inline FiniteSpace indiscrete_space(int n) {
  return validate_space(n, {Subset{}, Subset::full(n)});
}

}  // namespace ftop

#endif  // FTOP_SPACE_HPP_
