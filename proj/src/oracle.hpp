// oracle.hpp -- brute-force reference counts of regular tetrahedra in
// {0,...,n}^3, independent of the generation pipeline.
//
// Both routines count distinct 4-point vertex sets, i.e. they return the
// raw total T(n); the published sequence value is T(n)/2.

#pragma once

#include <cstdint>

namespace rtc::oracle {

// Checks every 4-subset of {0..n}^3 for six equal squared edge lengths.
// Guard: n <= 4 (the scan is quartic in the point count).
std::int64_t quadruple_count(int n);

// Enumerates equilateral lattice triangles and completes each with its two
// apex candidates in exact arithmetic, deduplicating tetrahedra in a set.
// Guard: n <= 10 unless force is set.
std::int64_t triangle_count(int n, bool force = false);

}  // namespace rtc::oracle
