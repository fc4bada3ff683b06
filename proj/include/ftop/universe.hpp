#ifndef FTOP_UNIVERSE_HPP_
#define FTOP_UNIVERSE_HPP_

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <memory>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

#include "ftop/enumerate.hpp"
#include "ftop/map_classes.hpp"
#include "ftop/set_classes.hpp"
#include "ftop/space_properties.hpp"

namespace ftop {

/// Profiles store class membership as one bit per subset, so they need
/// 2^n <= 64.
inline constexpr int kMaxProfilePoints = 6;

/// A space with every set class and space property precomputed. This is the
/// read-only cache the exhaustive sweeps work from.
struct SpaceProfile {
  std::shared_ptr<const FiniteSpace> space;
  std::array<std::uint64_t, kSetClassCount> classes{};
  std::uint64_t regular_open_intersections = 0;
  std::uint32_t properties = 0;
  std::vector<Subset> opens;
  std::vector<Subset> closeds;
  std::vector<Subset> regular_opens;
  std::vector<Subset> semi_opens;

  int size() const { return space->size(); }
  bool in(SetClassId cls, Subset a) const {
    return (classes[static_cast<std::size_t>(cls)] >> a.bits()) & 1U;
  }
  bool has(SpacePropertyId prop) const {
    return (properties >> static_cast<unsigned>(prop)) & 1U;
  }
};

inline SpaceProfile make_profile(std::shared_ptr<const FiniteSpace> space) {
  if (space->size() > kMaxProfilePoints) {
    throw Error(ErrorKind::kTooLarge, "profiles support at most 6 points");
  }
  SpaceProfile p;
  const FiniteSpace& sp = *space;
  for (std::size_t i = 0; i < sp.subset_count(); ++i) {
    const Subset a(static_cast<Subset::Bits>(i));
    for (std::size_t c = 0; c < kSetClassCount; ++c) {
      if (is_in_class(sp, a, kAllSetClasses[c])) p.classes[c] |= std::uint64_t{1} << i;
    }
    if (is_regular_open_intersection(sp, a)) p.regular_open_intersections |= std::uint64_t{1} << i;
    if (sp.is_open(a)) p.opens.push_back(a);
    if (sp.is_closed(a)) p.closeds.push_back(a);
    if (p.in(SetClassId::regular_open, a)) p.regular_opens.push_back(a);
    if (p.in(SetClassId::semi_open, a)) p.semi_opens.push_back(a);
  }
  p.properties = property_mask(sp);
  p.space = std::move(space);
  return p;
}

/// All labelled topologies on n points, profiled, in enumeration order.
struct Universe {
  int n = 0;
  std::vector<SpaceProfile> profiles;
};

/// Process-wide cache, built on first use for each n and never mutated after.
inline const Universe& universe(int n) {
  if (n < 0 || n > kMaxEnumeratedPoints) {
    throw Error(ErrorKind::kTooLarge, "universes exist for n <= 5, got " + std::to_string(n));
  }
  static std::array<std::once_flag, kMaxEnumeratedPoints + 1> once;
  static std::array<Universe, kMaxEnumeratedPoints + 1> cache;
  std::call_once(once[n], [n] {
    Universe u;
    u.n = n;
    for (FiniteSpace& s : enumerate_topologies(n)) {
      u.profiles.push_back(make_profile(std::make_shared<const FiniteSpace>(std::move(s))));
    }
    cache[n] = std::move(u);
  });
  return cache[n];
}

/// One map between two profiled spaces. Map-class membership is evaluated
/// from the profile tables and memoized per instance.
class MapInstance {
 public:
  MapInstance(const SpaceProfile& x, const SpaceProfile& y, std::span<const int> assignment)
      : x_(&x), y_(&y) {
    for (int i = 0; i < x.size(); ++i) {
      a_[i] = static_cast<std::uint8_t>(assignment[i]);
      fibre_[a_[i]] = fibre_[a_[i]].with(i);
    }
    const std::size_t count = y.space->subset_count();
    for (std::size_t b = 1; b < count; ++b) {
      const int low = std::countr_zero(b);
      pre_[b] = pre_[b & (b - 1)] | fibre_[low];
    }
  }

  const SpaceProfile& domain() const { return *x_; }
  const SpaceProfile& codomain() const { return *y_; }
  int operator()(int point) const { return a_[point]; }
  Subset preimage(Subset b) const { return pre_[b.bits()]; }
  Subset image(Subset a) const {
    Subset out;
    for (Subset::Bits b = a.bits(); b != 0; b &= b - 1) out = out.with(a_[std::countr_zero(b)]);
    return out;
  }

  std::vector<int> assignment() const {
    return std::vector<int>(a_.begin(), a_.begin() + x_->size());
  }
  SpaceMap to_map() const { return SpaceMap(x_->space, y_->space, assignment()); }

  MapShape shape() const {
    const Subset img = image(x_->space->full());
    return {img.size() <= 1, img == y_->space->full(), img.size() == x_->size()};
  }

  bool in(MapClassId cls) const {
    const unsigned bit = 1U << static_cast<unsigned>(cls);
    if (known_ & bit) return value_ & bit;
    const bool v = evaluate(rule_of(cls));
    known_ |= bit;
    if (v) value_ |= bit;
    return v;
  }

  /// The five characterizations of contra-semicontinuity, from the tables.
  std::array<bool, 5> contra_semi_conditions() const {
    const FiniteSpace& xs = *x_->space;
    const int m = y_->size();
    std::array<bool, 5> c{true, true, true, true, true};
    for (Subset v : y_->opens) {
      const Subset pv = preimage(v);
      const Subset pf = preimage(v.complement_in(m));
      if (!x_->in(SetClassId::semi_closed, pv)) c[0] = false;
      if (!x_->in(SetClassId::semi_open, pf)) c[1] = false;
      if (xs.interior(xs.closure(pv)) != xs.interior(pv)) c[3] = false;
      if (xs.closure(xs.interior(pf)) != xs.closure(pf)) c[4] = false;
    }
    for (int p = 0; p < x_->size() && c[2]; ++p) {
      for (Subset v : y_->opens) {
        const Subset closed = v.complement_in(m);
        if (!closed.contains(a_[p])) continue;
        const bool found = std::any_of(
            x_->semi_opens.begin(), x_->semi_opens.end(),
            [&](Subset u) { return u.contains(p) && image(u).subset_of(closed); });
        if (!found) {
          c[2] = false;
          break;
        }
      }
    }
    return c;
  }

 private:
  bool evaluate(const MapClassRule& rule) const {
    auto target = [&](const SpaceProfile& prof, Subset s) {
      return rule.regular_open_intersection
                 ? ((prof.regular_open_intersections >> s.bits()) & 1U) != 0
                 : prof.in(rule.target, s);
    };
    switch (rule.source) {
      case RuleSource::open_preimages:
        return std::all_of(y_->opens.begin(), y_->opens.end(),
                           [&](Subset v) { return target(*x_, preimage(v)); });
      case RuleSource::regular_open_preimages:
        return std::all_of(y_->regular_opens.begin(), y_->regular_opens.end(),
                           [&](Subset v) { return target(*x_, preimage(v)); });
      case RuleSource::closed_images:
        return std::all_of(x_->closeds.begin(), x_->closeds.end(),
                           [&](Subset f) { return target(*y_, image(f)); });
    }
    return false;
  }

  const SpaceProfile* x_;
  const SpaceProfile* y_;
  std::array<std::uint8_t, kMaxProfilePoints> a_{};
  std::array<Subset, kMaxProfilePoints> fibre_{};
  std::array<Subset, std::size_t{1} << kMaxProfilePoints> pre_{};
  mutable std::uint32_t known_ = 0;
  mutable std::uint32_t value_ = 0;
};

/// What a sweep visitor reports for one instance.
struct Visit {
  bool filtered = false;  // hypotheses held, the instance was tested
  int violation = -1;     // index of the violated sub-claim, -1 if none
};

/// Position of an instance in the deterministic enumeration order.
struct InstanceRef {
  int x_size = 0;
  int y_size = 0;
  std::size_t x_index = 0;
  std::size_t y_index = 0;
  std::vector<int> assignment;
};

struct SweepResult {
  std::uint64_t spaces = 0;
  std::uint64_t instances = 0;
  std::uint64_t filtered = 0;
  std::optional<InstanceRef> first_violation;
  int violated_part = -1;
};

inline int worker_threads() {
  if (const char* env = std::getenv("FTOP_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

inline std::uint64_t space_count_upto(int n_max) {
  std::uint64_t total = 0;
  for (int n = 0; n <= n_max; ++n) total += universe(n).profiles.size();
  return total;
}

/// Sweeps every map between every ordered pair of spaces with at most n_max
/// points, in the order (|X|, |Y|, X, Y, assignment). `relevant(X, Y)` may
/// prune a whole pair; `visit(instance)` tests one map. The first violation in
/// enumeration order is reported no matter how work is split across threads.
/// With a finite budget the sweep is sequential and stops after that many
/// instances.
template <typename Relevant, typename VisitFn>
SweepResult sweep_maps(int n_max, Relevant&& relevant, VisitFn&& visit,
                       std::uint64_t budget = std::numeric_limits<std::uint64_t>::max()) {
  struct Task {
    int nx, ny;
    std::size_t xi;
  };
  std::vector<Task> tasks;
  for (int nx = 0; nx <= n_max; ++nx) {
    for (int ny = 0; ny <= n_max; ++ny) {
      for (std::size_t xi = 0; xi < universe(nx).profiles.size(); ++xi) tasks.push_back({nx, ny, xi});
    }
  }
  struct TaskResult {
    std::uint64_t instances = 0;
    std::uint64_t filtered = 0;
    std::optional<InstanceRef> violation;
    int part = -1;
  };
  std::vector<TaskResult> results(tasks.size());
  const bool bounded = budget != std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::size_t> best{tasks.size()};
  std::atomic<std::uint64_t> spent{0};

  auto run_task = [&](std::size_t t) {
    const Task& task = tasks[t];
    const SpaceProfile& x = universe(task.nx).profiles[task.xi];
    const auto& ys = universe(task.ny).profiles;
    TaskResult& out = results[t];
    const std::uint64_t maps = map_count(task.nx, task.ny);
    std::vector<int> a(task.nx, 0);
    for (std::size_t yi = 0; yi < ys.size(); ++yi) {
      const SpaceProfile& y = ys[yi];
      if (!relevant(x, y)) {
        out.instances += maps;
        if (bounded) spent += maps;
        continue;
      }
      std::fill(a.begin(), a.end(), 0);
      for (std::uint64_t k = 0; k < maps; ++k) {
        if (bounded && spent.fetch_add(1) >= budget) return;
        if (t > best.load(std::memory_order_relaxed)) return;
        const MapInstance inst(x, y, a);
        const Visit v = visit(inst);
        ++out.instances;
        if (v.filtered) ++out.filtered;
        if (v.violation >= 0) {
          out.violation = InstanceRef{task.nx, task.ny, task.xi, yi, a};
          out.part = v.violation;
          std::size_t cur = best.load();
          while (t < cur && !best.compare_exchange_weak(cur, t)) {
          }
          return;
        }
        for (int i = task.nx - 1; i >= 0; --i) {  // next assignment, lexicographic
          if (++a[i] < task.ny) break;
          a[i] = 0;
        }
      }
    }
  };

  const int threads = bounded ? 1 : std::min<int>(worker_threads(), static_cast<int>(tasks.size()));
  if (threads <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      run_task(t);
      if (results[t].violation || (bounded && spent.load() >= budget)) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++) {
          if (t > best.load()) continue;
          run_task(t);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  SweepResult r;
  r.spaces = space_count_upto(n_max);
  const std::size_t last = best.load();
  for (std::size_t t = 0; t < tasks.size() && t <= last; ++t) {
    r.instances += results[t].instances;
    r.filtered += results[t].filtered;
    if (t == last && results[t].violation) {
      r.first_violation = results[t].violation;
      r.violated_part = results[t].part;
    }
  }
  return r;
}

/// Sweeps the spaces with at most n_max points (no maps).
template <typename VisitFn>
SweepResult sweep_spaces(int n_max, VisitFn&& visit) {
  SweepResult r;
  for (int n = 0; n <= n_max; ++n) {
    const auto& ps = universe(n).profiles;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      ++r.spaces;
      ++r.instances;
      const Visit v = visit(ps[i]);
      if (v.filtered) ++r.filtered;
      if (v.violation >= 0) {
        r.first_violation = InstanceRef{n, 0, i, 0, {}};
        r.violated_part = v.violation;
        return r;
      }
    }
  }
  return r;
}

}  // namespace ftop

#endif  // FTOP_UNIVERSE_HPP_
