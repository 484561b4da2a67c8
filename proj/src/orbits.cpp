#include "orbits.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "errors.hpp"

namespace rtc::orbits {

namespace {

constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

void check_normalized(const Tetra& t) {
    Vec3 lo = t.v[0];
    for (const Vec3& p : t.v) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        lo.z = std::min(lo.z, p.z);
    }
    if (lo != Vec3{}) throw std::invalid_argument("tetra must be normalized (per-axis min 0)");
}

// Apply map #idx (0..47) of the cube [0,m]^3: permute axes, then complement
// the axes selected by the mask.
Tetra apply_map(const Tetra& t, int64_t m, int idx) {
    const int* perm = kPerms[idx / 8];
    const int mask = idx % 8;
    std::array<Vec3, 4> out;
    for (int i = 0; i < 4; ++i) {
        std::array<int64_t, 3> w;
        for (int ax = 0; ax < 3; ++ax) {
            int64_t c = t.v[i][perm[ax]];
            w[ax] = (mask >> ax & 1) ? m - c : c;
        }
        out[i] = {w[0], w[1], w[2]};
    }
    return Tetra::canonical(out);
}

}  // namespace

std::vector<Tetra> symmetry_orbit(const Tetra& t) {
    check_normalized(t);
    const int64_t m = facegen::enclosing_cube(t);
    std::vector<Tetra> out;
    out.reserve(48);
    for (int idx = 0; idx < 48; ++idx) out.push_back(apply_map(t, m, idx));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Tetra> full_orbit(const Tetra& t) {
    check_normalized(t);
    const int64_t m = facegen::enclosing_cube(t);
    std::unordered_set<Tetra, TetraHash> seen;
    for (const Tetra& img : symmetry_orbit(t)) {
        Vec3 lo = img.v[0], hi = img.v[0];
        for (const Vec3& p : img.v) {
            lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y); lo.z = std::min(lo.z, p.z);
            hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y); hi.z = std::max(hi.z, p.z);
        }
        for (int64_t tx = -lo.x; tx <= m - hi.x; ++tx)
            for (int64_t ty = -lo.y; ty <= m - hi.y; ++ty)
                for (int64_t tz = -lo.z; tz <= m - hi.z; ++tz) {
                    std::array<Vec3, 4> moved = img.v;
                    for (Vec3& p : moved) p = p + Vec3{tx, ty, tz};
                    seen.insert(Tetra::canonical(moved));
                }
    }
    std::vector<Tetra> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

int64_t shifted_overlap(const std::vector<Tetra>& orbit, Vec3 shift) {
    std::unordered_set<Tetra, TetraHash> set(orbit.begin(), orbit.end());
    int64_t count = 0;
    for (const Tetra& t : orbit) {
        std::array<Vec3, 4> moved = t.v;
        for (Vec3& p : moved) p = p + shift;
        count += set.count(Tetra::canonical(moved));
    }
    return count;
}

}  // namespace

int64_t beta_sets(const Tetra& t) {
    // |S cap (S+e_z)| = #{x in S : x - e_z in S}
    return shifted_overlap(full_orbit(t), {0, 0, -1});
}

int64_t gamma_sets(const Tetra& t) {
    // |(S+e_z) cap (S+e_y)| = #{x in S : x + e_z - e_y in S}
    return shifted_overlap(full_orbit(t), {0, -1, 1});
}

OrbitStats orbit_stats_sets(const Tetra& t) {
    auto orbit = full_orbit(t);
    return {facegen::enclosing_cube(t), static_cast<int64_t>(orbit.size()),
            shifted_overlap(orbit, {0, 0, -1}), shifted_overlap(orbit, {0, -1, 1})};
}

ShapeImages shape_images(const Tetra& t) {
    check_normalized(t);
    const int64_t m = facegen::enclosing_cube(t);
    std::vector<Tetra> normalized;
    normalized.reserve(48);
    for (int idx = 0; idx < 48; ++idx) {
        std::array<Vec3, 4> pts = apply_map(t, m, idx).v;
        normalized.push_back(facegen::normalize_octant(pts));
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

    ShapeImages images;
    images.cube = m;
    for (const Tetra& img : normalized) {
        Vec3 hi{};
        for (const Vec3& p : img.v) {
            hi.x = std::max(hi.x, p.x);
            hi.y = std::max(hi.y, p.y);
            hi.z = std::max(hi.z, p.z);
        }
        images.extents.push_back({hi.x, hi.y, hi.z});
    }
    return images;
}

OrbitStats orbit_stats(const ShapeImages& images, int64_t j) {
    if (j < 1) throw std::invalid_argument("dilation factor must be >= 1");
    OrbitStats st{j * images.cube, 0, 0, 0};
    for (const auto& e : images.extents) {
        const int64_t mx = j * (images.cube - e[0]) + 1;
        const int64_t my = j * (images.cube - e[1]) + 1;
        const int64_t mz = j * (images.cube - e[2]) + 1;
        st.alpha += mx * my * mz;
        st.beta += mx * my * (mz - 1);
        st.gamma += mx * (my - 1) * (mz - 1);
    }
    return st;
}

Tetra orbit_canonical(const Tetra& t) {
    check_normalized(t);
    const int64_t m = facegen::enclosing_cube(t);
    Tetra best = t;
    for (int idx = 0; idx < 48; ++idx) {
        std::array<Vec3, 4> pts = apply_map(t, m, idx).v;
        Tetra cand = facegen::normalize_octant(pts);
        if (cand < best) best = cand;
    }
    return best;
}

int64_t count_in_cube(const OrbitStats& stats, int64_t n) {
    if (n < stats.cube) return 0;
    // The w^3 alpha term outgrows 64 bits long before the polynomial value
    // does, so accumulate in 128 bits.
    const __int128 w = n + 1 - stats.cube;  // translate positions per axis
    const __int128 u = n - stats.cube;
    const __int128 f =
        w * w * w * stats.alpha - 3 * w * w * u * stats.beta + 3 * w * u * u * stats.gamma;
    return static_cast<int64_t>(f);
}

}  // namespace rtc::orbits
