#ifndef FTOP_SPACE_MAP_HPP_
#define FTOP_SPACE_MAP_HPP_

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ftop/error.hpp"
#include "ftop/space.hpp"

namespace ftop {

/// A total function between two finite spaces. The spaces are shared
/// immutable values, so copying a map is cheap.
class SpaceMap {
 public:
  SpaceMap(std::shared_ptr<const FiniteSpace> domain, std::shared_ptr<const FiniteSpace> codomain,
           std::vector<int> assignment)
      : domain_(std::move(domain)), codomain_(std::move(codomain)),
        assignment_(std::move(assignment)) {
    if (static_cast<int>(assignment_.size()) != domain_->size()) {
      throw Error(ErrorKind::kOutOfRange, "assignment length " +
                                              std::to_string(assignment_.size()) +
                                              " does not match domain size " +
                                              std::to_string(domain_->size()));
    }
    for (int y : assignment_) {
      if (y < 0 || y >= codomain_->size()) {
        throw Error(ErrorKind::kOutOfRange,
                    "image index " + std::to_string(y) + " outside the codomain");
      }
    }
  }

  SpaceMap(const FiniteSpace& domain, const FiniteSpace& codomain, std::vector<int> assignment)
      : SpaceMap(std::make_shared<const FiniteSpace>(domain),
                 std::make_shared<const FiniteSpace>(codomain), std::move(assignment)) {}

  static SpaceMap identity(std::shared_ptr<const FiniteSpace> domain,
                           std::shared_ptr<const FiniteSpace> codomain) {
    std::vector<int> a(domain->size());
    for (int i = 0; i < domain->size(); ++i) a[i] = i;
    return SpaceMap(std::move(domain), std::move(codomain), std::move(a));
  }
  static SpaceMap identity(const FiniteSpace& domain, const FiniteSpace& codomain) {
    return identity(std::make_shared<const FiniteSpace>(domain),
                    std::make_shared<const FiniteSpace>(codomain));
  }

  const FiniteSpace& domain() const { return *domain_; }
  const FiniteSpace& codomain() const { return *codomain_; }
  const std::shared_ptr<const FiniteSpace>& domain_ptr() const { return domain_; }
  const std::shared_ptr<const FiniteSpace>& codomain_ptr() const { return codomain_; }
  const std::vector<int>& assignment() const { return assignment_; }
  int operator()(int x) const { return assignment_[x]; }

 private:
  std::shared_ptr<const FiniteSpace> domain_;
  std::shared_ptr<const FiniteSpace> codomain_;
  std::vector<int> assignment_;
};

inline Subset preimage(const SpaceMap& f, Subset b) {
  Subset out;
  for (int x = 0; x < f.domain().size(); ++x) {
    if (b.contains(f(x))) out = out.with(x);
  }
  return out;
}

inline Subset image(const SpaceMap& f, Subset a) {
  Subset out;
  for (int x : a.points()) out = out.with(f(x));
  return out;
}

/// g after f. The codomain of f and the domain of g must be the same space.
inline SpaceMap compose(const SpaceMap& f, const SpaceMap& g) {
  if (!f.codomain().same_topology(g.domain())) {
    throw Error(ErrorKind::kDomainMismatch,
                "codomain of the first map is not the domain of the second");
  }
  std::vector<int> a(f.domain().size());
  for (int x = 0; x < f.domain().size(); ++x) a[x] = g(f(x));
  return SpaceMap(f.domain_ptr(), g.codomain_ptr(), std::move(a));
}

struct MapShape {
  bool constant = false;
  bool surjective = false;
  bool injective = false;
  bool operator==(const MapShape&) const = default;
};

inline MapShape map_shape(const SpaceMap& f) {
  const Subset img = image(f, f.domain().full());
  MapShape shape;
  shape.constant = img.size() <= 1;
  shape.surjective = img == f.codomain().full();
  shape.injective = img.size() == f.domain().size();
  return shape;
}

}  // namespace ftop

#endif  // FTOP_SPACE_MAP_HPP_
