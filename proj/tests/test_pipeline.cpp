#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "oracle.hpp"
#include "oracle_helpers.hpp"
#include "pipeline.hpp"

using namespace rtc;
using namespace rtc::pipeline;

namespace {

testutil::Pts to_pts(const Tetra& t) {
    testutil::Pts out;
    for (int i = 0; i < 4; ++i) out[i] = {t.v[i].x, t.v[i].y, t.v[i].z};
    return out;
}

testutil::Pts dilate_pts(const Tetra& t, int64_t j) {
    testutil::Pts out = to_pts(t);
    for (auto& p : out)
        for (auto& c : p) c *= j;
    return out;
}

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool same_records(const std::vector<IrreducibleRecord>& a,
                  const std::vector<IrreducibleRecord>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& x = a[i];
        const auto& y = b[i];
        if (x.d != y.d || x.k != y.k || x.mn != y.mn || x.sol != y.sol || x.cube != y.cube ||
            x.tetra != y.tetra)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("the unit cube has exactly one class") {
    const auto records = irreducible_list(1);
    REQUIRE(records.size() == 1);
    const auto& r = records[0];
    CHECK(r.d == 1);
    CHECK(r.k == 1);
    CHECK(r.cube == 1);
    CHECK(r.sol == numtheory::PrimitiveSolution{1, 1, 1, 1});
    CHECK(r.tetra == Tetra{{Vec3{0, 0, 0}, Vec3{0, 1, 1}, Vec3{1, 0, 1}, Vec3{1, 1, 0}}});
}

TEST_CASE("record list invariants, n_max = 20") {
    const auto records = irreducible_list(20);
    CHECK(coverage(records) == 19);
    std::set<Tetra> seen;
    int64_t last_lambda = 0;
    for (const auto& r : records) {
        const int64_t lambda = r.d * r.k;
        CHECK(lambda >= last_lambda);  // sorted by side
        last_lambda = lambda;
        CHECK(facegen::regular_side(r.tetra) == lambda);
        CHECK(facegen::is_irreducible(r.tetra));
        CHECK(orbits::orbit_canonical(r.tetra) == r.tetra);
        CHECK(facegen::enclosing_cube(r.tetra) == r.cube);
        CHECK(r.cube >= lambda);  // fitting needs at least the side
        CHECK(seen.insert(r.tetra).second);  // globally distinct classes
        if (r.k > 1) CHECK(facegen::max_face_d(r.tetra) < lambda);
    }
}

TEST_CASE("every tetrahedron in [0,n]^3 is counted once, n <= 7") {
    // expand every record through every dilation into explicit placements:
    // the union must be collision-free and exactly the doubled sequence
    // value, and the triangle oracle must agree
    const auto records = irreducible_list(7);
    const auto rows = sequence_rows(records, 7, 1);
    for (int64_t n = 1; n <= 7; ++n) {
        std::set<testutil::Pts> all;
        int64_t placed = 0;
        for (const auto& r : records) {
            if (r.d * r.k > n) continue;
            for (int64_t j = 1; j * r.cube <= n; ++j) {
                const auto sets = testutil::placements(dilate_pts(r.tetra, j), n);
                placed += (int64_t)sets.size();
                for (const auto& pts : sets) CHECK(all.insert(pts).second);
            }
        }
        CHECK(placed == (int64_t)all.size());               // no overlap anywhere
        CHECK(placed == rows[n - 1].total);                 // closed form agrees
        CHECK(placed == 2 * rows[n - 1].half);
        CHECK(placed == oracle::triangle_count((int)n));    // independent scan agrees
    }
}

TEST_CASE("extension is identical to a from-scratch build") {
    auto grown = irreducible_list(5);
    extend_records(grown, 17);
    const auto direct = irreducible_list(17);
    CHECK(same_records(grown, direct));
    // extending to a covered size is a no-op
    const auto before = grown.size();
    extend_records(grown, 11);
    CHECK(grown.size() == before);
}

TEST_CASE("total_count checks its inputs") {
    const auto records = irreducible_list(9);
    CHECK(total_count(9, records) == 3199);
    CHECK(total_count(8, records) == 1896);
    CHECK_THROWS_AS(total_count(11, records), std::invalid_argument);  // not covered
    CHECK_THROWS_AS(total_count(0, records), std::invalid_argument);
}

TEST_CASE("sequence values are monotone and thread count is irrelevant") {
    const auto records = irreducible_list(24);
    const auto rows1 = sequence_rows(records, 24, 1);
    const auto rows3 = sequence_rows(records, 24, 3);
    REQUIRE(rows1.size() == 24);
    for (std::size_t i = 0; i < rows1.size(); ++i) {
        CHECK(rows1[i].n == rows3[i].n);
        CHECK(rows1[i].half == rows3[i].half);
        CHECK(rows1[i].total == rows3[i].total);
        CHECK(rows1[i].total == 2 * rows1[i].half);
        if (i) CHECK(rows1[i].half > rows1[i - 1].half);
    }
}

TEST_CASE("cache round trip is exact and byte-stable") {
    const auto records = irreducible_list(13);
    const auto path = temp_file("rtcount_test_cache.jsonl");
    save_cache(path.string(), records);
    const auto loaded = load_cache(path.string());
    CHECK(same_records(records, loaded));

    const std::string bytes = slurp(path);
    save_cache(path.string(), loaded);
    CHECK(slurp(path) == bytes);

    // loaded records keep working: counting and extension behave as before
    auto extended = loaded;
    extend_records(extended, 15);
    CHECK(same_records(extended, irreducible_list(15)));
    std::filesystem::remove(path);
}

TEST_CASE("a damaged cache is rejected with its line number") {
    const auto records = irreducible_list(9);
    REQUIRE(records.size() == 5);
    const auto path = temp_file("rtcount_test_damaged.jsonl");

    auto write_lines = [&](const std::vector<std::string>& lines) {
        std::ofstream out(path, std::ios::binary);
        for (const auto& l : lines) out << l << '\n';
    };
    auto lines_of = [&] {
        save_cache(path.string(), records);
        std::ifstream in(path);
        std::vector<std::string> lines;
        for (std::string l; std::getline(in, l);) lines.push_back(l);
        return lines;
    };

    // unparsable JSON
    auto lines = lines_of();
    lines[2] = "definitely not json";
    write_lines(lines);
    try {
        load_cache(path.string());
        FAIL("expected CacheError");
    } catch (const CacheError& e) {
        CHECK(e.line_no() == 3);
    }

    // wrong cube value
    lines = lines_of();
    lines[1].replace(lines[1].find("\"cube\":4"), 8, "\"cube\":5");
    write_lines(lines);
    CHECK_THROWS_AS(load_cache(path.string()), CacheError);

    // vertex tampering breaks regularity
    lines = lines_of();
    lines[0].replace(lines[0].find("[1,1,0]"), 7, "[1,2,0]");
    write_lines(lines);
    CHECK_THROWS_AS(load_cache(path.string()), CacheError);

    // order violation
    lines = lines_of();
    std::swap(lines[0], lines[1]);
    write_lines(lines);
    CHECK_THROWS_AS(load_cache(path.string()), CacheError);

    // missing field
    lines = lines_of();
    lines[4].replace(lines[4].find("\"k\":1,"), 6, "");
    write_lines(lines);
    CHECK_THROWS_AS(load_cache(path.string()), CacheError);

    // missing file
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_cache(path.string()), CacheError);
}

TEST_CASE("guard on n_max") {
    CHECK_THROWS_AS(irreducible_list(0), std::invalid_argument);
    CHECK_THROWS_AS(irreducible_list(100001), std::invalid_argument);
}
