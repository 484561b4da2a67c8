// numtheory.hpp -- exact counting and parametrization of the quadratic
// representations behind lattice regular tetrahedra.
//
// The central Diophantine objects:
//
//   a^2 + b^2 + c^2 = 3 d^2   (face normals; a,b,c,d odd, gcd(a,b,c)=1)
//   2 a^2 + c^2     = 3 d^2   (solutions with a repeated entry)
//   2 q = s^2 + 3 r^2          (auxiliary, q = a^2 + b^2)
//   k^2 = m^2 - m n + n^2      (Eisenstein norms; triangle multipliers)
//
// All arithmetic is exact int64; routines validate their inputs and throw
// on precondition violations.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace rtc::numtheory {

using std::int64_t;

// One positive ordered primitive solution of a^2+b^2+c^2 = 3d^2,
// 0 < a <= b <= c, gcd(a,b,c) = 1.  All four entries are odd.
struct PrimitiveSolution {
    int64_t a = 0, b = 0, c = 0, d = 0;
    auto operator<=>(const PrimitiveSolution&) const = default;
};

// Integer pair (m,n); the triangle multiplier with norm m^2 - mn + n^2.
struct MnPair {
    int64_t m = 0, n = 0;
    auto operator<=>(const MnPair&) const = default;
};

// One solution (a,c,d) of 2a^2 + c^2 = 3d^2, gcd(a,c) = 1.
struct AcdTriple {
    int64_t a = 0, c = 0, d = 0;
    auto operator<=>(const AcdTriple&) const = default;
};

// Floor of sqrt(n); exact for all n >= 0.
int64_t isqrt(int64_t n);

// True iff n is a perfect square (returns the root through *root if non-null).
bool is_square(int64_t n, int64_t* root = nullptr);

// Prime factorization by trial division, pairs (prime, exponent), ascending.
std::vector<std::pair<int64_t, int>> factorize(int64_t n);

bool is_prime(int64_t n);

// Legendre symbol (-3|p) for an odd prime p:
//   0 when p = 3, +1 when p = 1,7 (mod 12), -1 when p = 5,11 (mod 12).
int legendre_minus3(int64_t p);

// Lambda(d): number of integer solutions of a^2+b^2+c^2 = 3d^2 with
// gcd(a,b,c)=1, counting signs and orderings.  Multiplicative closed form
//   Lambda(d) = 8 d  prod_{p | d} (1 - (-3|p)/p),
// evaluated exactly (each division is checked to be exact).  d must be odd.
int64_t lambda_count(int64_t d);

// Total number of integer solutions of a^2+b^2+c^2 = 3d^2 (signs and
// orderings, primitivity NOT required), by the multiplicative closed form
//   8 * prod_{p^beta || d, p=1,7 (12)} p^beta
//     * prod_{q^alpha || d, q=5,11 (12)} (q^alpha + 2(q^alpha-1)/(q-1))
//     * (3^(gamma+1)-1)/2            where 3^gamma || d.
// Factors of 2 in d do not change the count.  Optional cross-check only;
// the pipeline itself never calls this.
int64_t hs_total_count(int64_t d);

// Gamma2(d): number of pairs x,y >= 1, gcd(x,y)=1, with d = 2x^2 + y^2.
// d must be odd.  Zero when a prime 5,7 (mod 8) divides d, else 2^(k-1)
// with k = #distinct primes 1,3 (mod 8) dividing d (zero when k = 0).
int64_t gamma2(int64_t d);

// Gamma3(d): number of pairs x,y >= 1, gcd(x,y)=1, with d = x^2 + 3y^2,
// under the convention Gamma3 = 0 for even d.  For odd d the count is zero
// when 9 | d or a prime 2 (mod 3) divides d, else 2^(k-1) with k =
// #distinct primes 1 (mod 3) dividing d (the ramified prime 3 itself does
// not count; a single factor of 3 shifts the representation without
// changing the count).  Zero when k = 0.
int64_t gamma3(int64_t d);

// pi_epsilon(d): number of positive ordered primitive solutions of
// a^2+b^2+c^2 = 3d^2, i.e. the length of three_squares_primitive(d).
//   pi_epsilon(1) = 1, and for odd d > 1
//   pi_epsilon(d) = (Lambda(d) + 24 Gamma2(3 d^2)) / 48   (exact division).
int64_t pi_epsilon(int64_t d);

// All positive ordered primitive solutions of a^2+b^2+c^2 = 3d^2 for odd d,
// in lexicographic order.
std::vector<PrimitiveSolution> three_squares_primitive(int64_t d);

// Parametrization of 2a^2 + c^2 = 3d^2 from a pair (l,k) with gcd(k,l)=1,
// k odd, l >= 1: d = 2l^2 + k^2 and
//   branch 1 (k != l  mod 3):  a = |2l^2 + 2kl - k^2|, c = |k^2 + 4kl - 2l^2|
//   branch 2 (k != -l mod 3):  a = |2l^2 - 2kl - k^2|, c = |k^2 - 4kl - 2l^2|
// Both branches can apply; results are deduplicated.  Every emitted triple
// is verified primitive and a genuine solution.
std::vector<AcdTriple> acd_param(int64_t l, int64_t k);

// All odd k <= n whose prime factors are all = 1 (mod 3); k = 1 included.
// Exactly the multipliers k for which k^2 = m^2 - mn + n^2 admits a
// coprime solution.
std::vector<int64_t> k_values(int64_t n);

// Coprime pairs with m^2 - mn + n^2 = k^2, one representative per orbit of
// the form's symmetry group, selected by m > 0, n > 0, 2m < n.  For the
// degenerate k = 1 the seed pair (0,1) is returned.  Ascending order.
std::vector<MnPair> mn_primitive(int64_t k);

// All integer pairs (r,s) with 2q = s^2 + 3r^2, both signs, sorted
// lexicographically.  May be empty.
std::vector<std::pair<int64_t, int64_t>> s3r_solutions(int64_t q);

}  // namespace rtc::numtheory
