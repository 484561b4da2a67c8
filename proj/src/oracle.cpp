#include "oracle.hpp"

#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "geom.hpp"
#include "numtheory.hpp"

namespace rtc::oracle {

using std::int64_t;

namespace {

std::vector<Vec3> lattice_points(int n) {
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(n + 1) * (n + 1) * (n + 1));
    for (int64_t x = 0; x <= n; ++x)
        for (int64_t y = 0; y <= n; ++y)
            for (int64_t z = 0; z <= n; ++z) pts.push_back({x, y, z});
    return pts;
}

}  // namespace

int64_t quadruple_count(int n) {
    if (n < 1) throw std::invalid_argument("quadruple_count requires n >= 1");
    if (n > 4) throw GuardError("quadruple_count is limited to n <= 4");

    const auto pts = lattice_points(n);
    const std::size_t npts = pts.size();
    int64_t count = 0;
    for (std::size_t i = 0; i < npts; ++i) {
        for (std::size_t j = i + 1; j < npts; ++j) {
            const int64_t s2 = dist2(pts[i], pts[j]);
            for (std::size_t k = j + 1; k < npts; ++k) {
                if (dist2(pts[i], pts[k]) != s2 || dist2(pts[j], pts[k]) != s2) continue;
                for (std::size_t l = k + 1; l < npts; ++l) {
                    if (dist2(pts[i], pts[l]) == s2 && dist2(pts[j], pts[l]) == s2 &&
                        dist2(pts[k], pts[l]) == s2)
                        ++count;
                }
            }
        }
    }
    return count;
}

int64_t triangle_count(int n, bool force) {
    if (n < 1) throw std::invalid_argument("triangle_count requires n >= 1");
    if (n > 10 && !force) throw GuardError("triangle_count is limited to n <= 10 (use force)");

    const auto pts = lattice_points(n);
    const std::size_t npts = pts.size();
    std::unordered_set<Tetra, TetraHash> found;

    // Triangles with vertex indices a < b < c; each unordered triangle is
    // visited exactly once via its two smallest members.
    for (std::size_t a = 0; a < npts; ++a) {
        for (std::size_t b = a + 1; b < npts; ++b) {
            const int64_t s2 = dist2(pts[a], pts[b]);
            for (std::size_t c = b + 1; c < npts; ++c) {
                if (dist2(pts[a], pts[c]) != s2 || dist2(pts[b], pts[c]) != s2) continue;

                // Equilateral triangle with side^2 = s2.  A lattice apex
                // requires side = lambda*sqrt(2) with integer lambda and the
                // cross-product normal divisible by lambda; test, don't assume.
                int64_t lambda;
                if (s2 % 2 || !numtheory::is_square(s2 / 2, &lambda)) continue;
                const Vec3 normal = cross(pts[b] - pts[a], pts[c] - pts[a]);
                if (normal.x % lambda || normal.y % lambda || normal.z % lambda) continue;
                const Vec3 scaled{normal.x / lambda, normal.y / lambda, normal.z / lambda};

                // Apex = centroid +/- 2 N / (3 lambda), evaluated in thirds.
                const Vec3 base = pts[a] + pts[b] + pts[c];
                for (int sign : {+1, -1}) {
                    const Vec3 numer = base + (2 * sign) * scaled;
                    if (numer.x % 3 || numer.y % 3 || numer.z % 3) continue;
                    const Vec3 apex{numer.x / 3, numer.y / 3, numer.z / 3};
                    if (apex.x < 0 || apex.x > n || apex.y < 0 || apex.y > n || apex.z < 0 ||
                        apex.z > n)
                        continue;
                    if (dist2(apex, pts[a]) != s2) throw InternalError("triangle_count: bad apex");
                    found.insert(Tetra::canonical({pts[a], pts[b], pts[c], apex}));
                }
            }
        }
    }
    return static_cast<int64_t>(found.size());
}

}  // namespace rtc::oracle
