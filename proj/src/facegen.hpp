// facegen.hpp -- constructing regular lattice tetrahedra out of one face
// plane.
//
// For a primitive solution (a,b,c,d) of a^2+b^2+c^2 = 3d^2 the plane
// { (x,y,z) : ax+by+cz = 0 } carries a sublattice of equilateral triangles.
// face_basis finds an explicit basis (zeta, eta) of that sublattice; the
// pair (m,n) then selects the triangle O, P = m zeta - n eta,
// Q = n zeta - (n-m) eta of side dk sqrt(2), k^2 = m^2 - mn + n^2, and the
// apex completing it to a regular tetrahedron is
//
//     R = (P + Q +/- 2k (a,b,c)) / 3,
//
// integral for both signs when 3 | k and for exactly one sign otherwise.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "geom.hpp"
#include "numtheory.hpp"

namespace rtc::facegen {

using numtheory::MnPair;
using numtheory::PrimitiveSolution;
using std::int64_t;

// Basis of the equilateral-triangle sublattice of the plane ax+by+cz = 0.
// Invariants: zeta,eta are orthogonal to (a,b,c), |zeta|^2 = |eta|^2 = 2d^2,
// zeta . eta = d^2, and 2(a^2+b^2) = s^2 + 3r^2.
struct FaceBasis {
    PrimitiveSolution sol;
    int64_t r = 0, s = 0;
    Vec3 zeta, eta;
};

// Apex candidate with exact thirds: the point is numer / 3.
struct ApexCandidate {
    Vec3 numer;
    bool integral() const { return numer.x % 3 == 0 && numer.y % 3 == 0 && numer.z % 3 == 0; }
    Vec3 point() const;  // requires integral()
};

// Deterministic: scans s3r_solutions(a^2+b^2) in sorted order and takes the
// first (r,s) making all six basis entries integral.  Throws InternalError
// if none works (cannot happen for a valid primitive solution).
FaceBasis face_basis(const PrimitiveSolution& sol);

// Triangle vertices P, Q for the pair (m,n) != (0,0).
std::pair<Vec3, Vec3> triangle(const FaceBasis& basis, MnPair mn);

// Apex (P + Q + sign*2k*(a,b,c)) / 3 for sign = +1 or -1.  Verifies in
// exact arithmetic that the candidate completes O,P,Q to a regular
// tetrahedron of side dk sqrt(2); throws InternalError otherwise.
ApexCandidate apex(Vec3 p, Vec3 q, const PrimitiveSolution& sol, int64_t k, int sign);

// The two tetrahedra sharing the side O..Q: one over the triangle of (m,n),
// one over the triangle of (n, n-m).  Each is completed with an integral
// apex (minus sign preferred when both work) and returned normalized.
std::pair<Tetra, Tetra> tetra_pair(const PrimitiveSolution& sol, MnPair mn);

// Translate so the minimum coordinate on each axis is 0, then sort vertices.
Tetra normalize_octant(std::array<Vec3, 4> pts);

// Side of the smallest axis-aligned lattice cube containing T (T normalized:
// simply the maximum coordinate).
int64_t enclosing_cube(const Tetra& t);

// If T is a regular tetrahedron with all squared edge lengths equal to
// 2*lambda^2 for an integer lambda, returns lambda; otherwise nullopt.
std::optional<int64_t> regular_side(const Tetra& t);

// Largest d over the four face planes of a regular tetrahedron: each face
// has a primitive normal (i,j,k) with i^2+j^2+k^2 = 3 d_f^2; returns
// max d_f.  Throws if a face normal fails that shape (non-regular input).
int64_t max_face_d(const Tetra& t);

// True iff no translate of T has all coordinates divisible by some g >= 2.
bool is_irreducible(const Tetra& t);

}  // namespace rtc::facegen
