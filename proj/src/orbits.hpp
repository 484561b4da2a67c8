// orbits.hpp -- orbits of a tetrahedron under the 48 symmetries of its
// enclosing cube, and the counting polynomial built from them.
//
// For a normalized tetrahedron T with enclosing cube m, let S be the set of
// all copies of T inside [0,m]^3 reachable by cube symmetries and lattice
// translations.  With
//
//   alpha = |S|,  beta = |S cap (S + e_z)|,  gamma = |(S + e_z) cap (S + e_y)|
//
// the number of copies of T inside [0,n]^3 for n >= m is
//
//   f(T,n) = (n+1-m)^3 alpha - 3 (n+1-m)^2 (n-m) beta + 3 (n+1-m)(n-m)^2 gamma.
//
// Two routes to (alpha,beta,gamma) are provided: materialized sets
// (orbit_stats_sets) and a closed form over the distinct normalized symmetry
// images (orbit_stats), which also handles dilations j*T without ever
// building the sets.  They agree; the set route exists as the reference.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "facegen.hpp"
#include "geom.hpp"

namespace rtc::orbits {

using std::int64_t;

struct OrbitStats {
    int64_t cube = 0;   // enclosing cube size m
    int64_t alpha = 0;  // |S|
    int64_t beta = 0;   // |S cap (S+e_z)|
    int64_t gamma = 0;  // |(S+e_z) cap (S+e_y)|
};

// The images of T under the 48 maps of [0,m]^3 (6 coordinate permutations x
// 8 per-axis complementations x -> m-x), as canonical tetra.  No
// translation; members need not be normalized.  Sorted, unique.
std::vector<Tetra> symmetry_orbit(const Tetra& t);

// The full set S: symmetry images combined with every lattice translation
// that stays inside [0,m]^3.  Sorted, unique.
std::vector<Tetra> full_orbit(const Tetra& t);

// beta / gamma via the materialized S (reference implementations).
int64_t beta_sets(const Tetra& t);
int64_t gamma_sets(const Tetra& t);
OrbitStats orbit_stats_sets(const Tetra& t);

// The distinct normalized symmetry images of T, reduced to their per-axis
// extents.  Everything about S for any dilation factor follows from these.
struct ShapeImages {
    int64_t cube = 0;                               // m of the base tetra
    std::vector<std::array<int64_t, 3>> extents;    // one triple per image
};

ShapeImages shape_images(const Tetra& t);

// Closed-form stats of the dilated tetra j*T (j >= 1): translations of a
// normalized image with extents e form a box with M_ax = j*(m - e_ax) + 1
// positions per axis, and boxes of distinct images never collide, so
//   alpha = sum prod M_ax,
//   beta  = sum M_x M_y (M_z - 1),
//   gamma = sum M_x (M_y - 1)(M_z - 1).
OrbitStats orbit_stats(const ShapeImages& images, int64_t j);

// Lexicographically smallest normalized symmetry image: a canonical
// representative of T's equivalence class under cube symmetries and
// translations.  Two tetrahedra have intersecting full orbits iff their
// representatives are equal.
Tetra orbit_canonical(const Tetra& t);

// f(T,n) from precomputed stats; 0 when n < stats.cube.
int64_t count_in_cube(const OrbitStats& stats, int64_t n);

}  // namespace rtc::orbits
