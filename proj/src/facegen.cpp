#include "facegen.hpp"

#include <numeric>
#include <stdexcept>

#include "errors.hpp"

namespace rtc::facegen {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check_solution(const PrimitiveSolution& sol) {
    require(sol.a > 0 && sol.b > 0 && sol.c > 0 && sol.d > 0, "solution entries must be positive");
    require(sol.a % 2 == 1 && sol.b % 2 == 1 && sol.c % 2 == 1 && sol.d % 2 == 1,
            "solution entries must be odd");
    require(sol.a * sol.a + sol.b * sol.b + sol.c * sol.c == 3 * sol.d * sol.d,
            "not a solution of a^2+b^2+c^2 = 3d^2");
    require(std::gcd(sol.a, std::gcd(sol.b, sol.c)) == 1, "solution must be primitive");
}

}  // namespace

Vec3 ApexCandidate::point() const {
    if (!integral()) throw InternalError("apex candidate is not integral");
    return {numer.x / 3, numer.y / 3, numer.z / 3};
}

FaceBasis face_basis(const PrimitiveSolution& sol) {
    check_solution(sol);
    const int64_t a = sol.a, b = sol.b, c = sol.c, d = sol.d;
    const int64_t q = a * a + b * b;

    for (auto [r, s] : numtheory::s3r_solutions(q)) {
        // numerators of the six entries; all must divide exactly
        const int64_t z1 = -(r * a * c + d * b * s);
        const int64_t z2 = d * a * s - b * c * r;
        const int64_t e1 = -(d * b * (s - 3 * r) + a * c * (r + s));
        const int64_t e2 = d * a * (s - 3 * r) - b * c * (r + s);
        if (z1 % q || z2 % q || e1 % (2 * q) || e2 % (2 * q) || (r + s) % 2) continue;

        FaceBasis basis{sol, r, s, {z1 / q, z2 / q, r}, {e1 / (2 * q), e2 / (2 * q), (r + s) / 2}};

        const Vec3 normal{a, b, c};
        if (dot(basis.zeta, normal) != 0 || dot(basis.eta, normal) != 0 ||
            norm2(basis.zeta) != 2 * d * d || norm2(basis.eta) != 2 * d * d ||
            dot(basis.zeta, basis.eta) != d * d)
            throw InternalError("face_basis: basis invariants violated");
        return basis;
    }
    throw InternalError("face_basis: no integral (r,s) found");
}

std::pair<Vec3, Vec3> triangle(const FaceBasis& basis, MnPair mn) {
    require(mn.m != 0 || mn.n != 0, "triangle requires (m,n) != (0,0)");
    Vec3 p = mn.m * basis.zeta - mn.n * basis.eta;
    Vec3 q = mn.n * basis.zeta - (mn.n - mn.m) * basis.eta;
    return {p, q};
}

ApexCandidate apex(Vec3 p, Vec3 q, const PrimitiveSolution& sol, int64_t k, int sign) {
    check_solution(sol);
    require(sign == 1 || sign == -1, "apex sign must be +1 or -1");
    require(k >= 1, "apex requires k >= 1");

    ApexCandidate cand{p + q + (sign * 2 * k) * Vec3{sol.a, sol.b, sol.c}};

    // The candidate point is numer/3.  Regularity in thirds: the squared
    // distances from it to O, P, Q must all equal 2 (dk)^2, i.e.
    // |numer - 3V|^2 = 18 (dk)^2 for V in {O, P, Q}.
    const int64_t side2_x9 = 18 * sol.d * sol.d * k * k;
    if (norm2(cand.numer) != side2_x9 || dist2(cand.numer, 3 * p) != side2_x9 ||
        dist2(cand.numer, 3 * q) != side2_x9)
        throw InternalError("apex: regularity identity failed");
    return cand;
}

std::pair<Tetra, Tetra> tetra_pair(const PrimitiveSolution& sol, MnPair mn) {
    const int64_t norm = mn.m * mn.m - mn.m * mn.n + mn.n * mn.n;
    int64_t k;
    if (!numtheory::is_square(norm, &k) || k < 1)
        throw std::invalid_argument("tetra_pair: m^2-mn+n^2 must be a positive perfect square");

    FaceBasis basis = face_basis(sol);

    auto complete = [&](MnPair pair) {
        auto [p, q] = triangle(basis, pair);
        for (int sign : {-1, +1}) {
            ApexCandidate cand = apex(p, q, sol, k, sign);
            if (cand.integral())
                return normalize_octant({Vec3{}, p, q, cand.point()});
        }
        throw InternalError("tetra_pair: no integral apex");
    };

    return {complete(mn), complete({mn.n, mn.n - mn.m})};
}

Tetra normalize_octant(std::array<Vec3, 4> pts) {
    Vec3 lo = pts[0];
    for (const Vec3& p : pts) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        lo.z = std::min(lo.z, p.z);
    }
    for (Vec3& p : pts) p = p - lo;
    return Tetra::canonical(pts);
}

int64_t enclosing_cube(const Tetra& t) {
    int64_t m = 0;
    for (const Vec3& p : t.v) m = std::max({m, p.x, p.y, p.z});
    return m;
}

std::optional<int64_t> regular_side(const Tetra& t) {
    int64_t side2 = dist2(t.v[0], t.v[1]);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (dist2(t.v[i], t.v[j]) != side2) return std::nullopt;
    if (side2 <= 0 || side2 % 2) return std::nullopt;
    int64_t lambda;
    if (!numtheory::is_square(side2 / 2, &lambda)) return std::nullopt;
    return lambda;
}

int64_t max_face_d(const Tetra& t) {
    int64_t best = 0;
    for (int apex_ix = 0; apex_ix < 4; ++apex_ix) {
        // face = the three vertices other than apex_ix
        std::array<Vec3, 3> f;
        int w = 0;
        for (int i = 0; i < 4; ++i)
            if (i != apex_ix) f[w++] = t.v[i];
        Vec3 n = cross(f[1] - f[0], f[2] - f[0]);
        int64_t g = std::gcd(std::gcd(std::abs(n.x), std::abs(n.y)), std::abs(n.z));
        if (g == 0) throw std::invalid_argument("max_face_d: degenerate face");
        n = {n.x / g, n.y / g, n.z / g};
        int64_t nn = norm2(n);
        int64_t d;
        if (nn % 3 || !numtheory::is_square(nn / 3, &d))
            throw std::invalid_argument("max_face_d: face normal is not of the 3d^2 shape");
        best = std::max(best, d);
    }
    return best;
}

bool is_irreducible(const Tetra& t) {
    int64_t g = 0;
    for (int i = 1; i < 4; ++i) {
        Vec3 e = t.v[i] - t.v[0];
        g = std::gcd(g, std::gcd(std::gcd(std::abs(e.x), std::abs(e.y)), std::abs(e.z)));
    }
    return g == 1;
}

}  // namespace rtc::facegen
