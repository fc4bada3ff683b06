#ifndef FTOP_FIXTURES_HPP_
#define FTOP_FIXTURES_HPP_

#include "ftop/space.hpp"
#include "ftop/space_map.hpp"

/// Small named spaces used as regression fixtures. Points are a, b, c.
namespace ftop::fixtures {

inline constexpr Subset kA = Subset::singleton(0);
inline constexpr Subset kB = Subset::singleton(1);
inline constexpr Subset kC = Subset::singleton(2);

/// {a, b} with opens {}, {a}, {a,b}.
inline FiniteSpace sierpinski() { return make_space(2, {Subset{}, kA, kA | kB}); }

/// tau on {a,b,c}: {}, {a}, {b}, {a,b}, X.
inline FiniteSpace e3_tau() { return make_space(3, {Subset{}, kA, kB, kA | kB, kA | kB | kC}); }
/// sigma on {a,b,c}: {}, {c}, X.
inline FiniteSpace e3_sigma() { return make_space(3, {Subset{}, kC, kA | kB | kC}); }
/// mu on {a,b,c}: {}, {a,b}, X.
inline FiniteSpace remark_mu() { return make_space(3, {Subset{}, kA | kB, kA | kB | kC}); }

/// Indiscrete {a,b}.
inline FiniteSpace e4_tau() { return indiscrete_space(2); }
/// {a,b} with opens {}, {a}, X.
inline FiniteSpace e4_sigma() { return sierpinski(); }

/// {a,b} with opens {}, {a}, X.
inline FiniteSpace ee3_tau() { return sierpinski(); }
/// Indiscrete {a,b}.
inline FiniteSpace ee3_sigma() { return indiscrete_space(2); }

}  // namespace ftop::fixtures

#endif  // FTOP_FIXTURES_HPP_
