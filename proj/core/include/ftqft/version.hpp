#pragma once

namespace ftqft {

inline constexpr const char* kVersion = "0.1.0";

// Default seed for the randomized internals (commutant sampling in the
// character-table decomposition).  Every randomized routine takes a seed and
// reports it, so identical inputs plus identical seeds give byte-identical
// output.
inline constexpr unsigned long long kDefaultSeed = 20020913;

}  // namespace ftqft
