// geom.hpp -- exact integer 3-vectors and canonical tetrahedra.
//
// Everything in the core works on int64 coordinates.  A Tetra is kept in
// canonical form: the four vertices sorted lexicographically, so two tetra
// objects compare equal iff they are the same point set.

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>

namespace rtc {

struct Vec3 {
    std::int64_t x = 0, y = 0, z = 0;

    friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Vec3 operator*(std::int64_t s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }

    constexpr std::int64_t operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    auto operator<=>(const Vec3&) const = default;
};

constexpr std::int64_t dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

constexpr std::int64_t norm2(Vec3 a) { return dot(a, a); }

// Squared euclidean distance; exact.
constexpr std::int64_t dist2(Vec3 a, Vec3 b) { return norm2(a - b); }

struct Tetra {
    std::array<Vec3, 4> v{};

    // Canonical form: vertices sorted lexicographically.
    static Tetra canonical(std::array<Vec3, 4> pts) {
        std::sort(pts.begin(), pts.end());
        return Tetra{pts};
    }

    auto operator<=>(const Tetra&) const = default;
};

struct TetraHash {
    std::size_t operator()(const Tetra& t) const noexcept {
        // FNV-1a over the 12 coordinates.
        std::uint64_t h = 1469598103934665603ULL;
        for (const auto& p : t.v)
            for (std::int64_t c : {p.x, p.y, p.z}) {
                h ^= static_cast<std::uint64_t>(c);
                h *= 1099511628211ULL;
            }
        return static_cast<std::size_t>(h);
    }
};

struct Vec3Hash {
    std::size_t operator()(const Vec3& p) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (std::int64_t c : {p.x, p.y, p.z}) {
            h ^= static_cast<std::uint64_t>(c);
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

inline std::string to_string(Vec3 p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," + std::to_string(p.z) + ")";
}

inline std::string to_string(const Tetra& t) {
    std::string s = "{";
    for (int i = 0; i < 4; ++i) {
        if (i) s += " ";
        s += to_string(t.v[i]);
    }
    return s + "}";
}

}  // namespace rtc
