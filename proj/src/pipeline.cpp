#include "pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "errors.hpp"

namespace rtc::pipeline {

namespace {

// Counting totals stay comfortably inside int64 up to here (raw(n) grows
// like n^3 log n), and the record list stays small.
constexpr int64_t kMaxN = 100000;

void check_n(int64_t n) {
    if (n < 1 || n > kMaxN)
        throw std::invalid_argument("n must be in 1.." + std::to_string(kMaxN));
}

bool record_less(const IrreducibleRecord& a, const IrreducibleRecord& b) {
    const int64_t la = a.d * a.k, lb = b.d * b.k;
    if (la != lb) return la < lb;
    return a.tetra < b.tetra;
}

// All candidates of one face configuration (d, k, (m,n)); fresh classes are
// appended to out.  For k > 1 a candidate whose largest face-plane d reaches
// its own side multiplier d*k is dropped: the k = 1 pass over that face
// plane already produced its class.
void run_batch(int64_t d, int64_t k, MnPair mn, std::unordered_set<Tetra, TetraHash>& seen,
               std::vector<IrreducibleRecord>& out) {
    for (const auto& sol : numtheory::three_squares_primitive(d)) {
        const auto two = facegen::tetra_pair(sol, mn);
        for (const Tetra* t : {&two.first, &two.second}) {
            if (k > 1 && facegen::max_face_d(*t) >= d * k) continue;
            Tetra rep = orbits::orbit_canonical(*t);
            if (!seen.insert(rep).second) continue;
            const auto side = facegen::regular_side(rep);
            if (!side || *side != d * k) throw InternalError("generated class has wrong side");
            if (!facegen::is_irreducible(rep)) throw InternalError("generated class is reducible");
            out.push_back({d, k, mn, sol, facegen::enclosing_cube(rep), rep});
        }
    }
}

}  // namespace

int64_t coverage(const std::vector<IrreducibleRecord>& records) {
    int64_t best = 0;
    for (const auto& rec : records)
        if (rec.k == 1) best = std::max(best, rec.d);
    return best;
}

void extend_records(std::vector<IrreducibleRecord>& records, int64_t n_max) {
    check_n(n_max);
    const int64_t have = coverage(records);
    if (n_max <= have) return;

    std::unordered_set<Tetra, TetraHash> seen;
    seen.reserve(records.size() * 2);
    for (const auto& rec : records) seen.insert(rec.tetra);

    // Side multipliers d*k are odd, so batches with d*k <= have are exactly
    // the ones a build up to `have` already processed, and they can only
    // produce classes of side <= have.  The new batches produce classes of
    // side > have, so running just them reproduces a from-scratch build.
    for (int64_t d = 1; d <= n_max; d += 2) {
        if (d <= have) continue;
        run_batch(d, 1, MnPair{0, 1}, seen, records);
    }
    for (int64_t k : numtheory::k_values(n_max)) {
        if (k == 1) continue;
        for (const MnPair& mn : numtheory::mn_primitive(k)) {
            for (int64_t d = 1; d * k <= n_max; d += 2) {
                if (d * k <= have) continue;
                run_batch(d, k, mn, seen, records);
            }
        }
    }

    std::sort(records.begin(), records.end(), record_less);
    for (std::size_t i = 1; i < records.size(); ++i)
        if (records[i].tetra == records[i - 1].tetra)
            throw InternalError("duplicate class survived dedup");
}

std::vector<IrreducibleRecord> irreducible_list(int64_t n_max) {
    std::vector<IrreducibleRecord> records;
    extend_records(records, n_max);
    return records;
}

namespace {

void check_covered(int64_t n, const std::vector<IrreducibleRecord>& records) {
    const int64_t need = (n % 2 == 1) ? n : n - 1;  // sides are odd
    if (coverage(records) < need)
        throw std::invalid_argument("record list does not cover n=" + std::to_string(n));
}

// One precomputed record: everything counting needs.
struct Shape {
    int64_t lambda = 0;
    int64_t cube = 0;
    orbits::ShapeImages images;
};

int64_t raw_total(int64_t n, const std::vector<Shape>& shapes) {
    int64_t raw = 0;
    for (const auto& sh : shapes) {
        // Enclosing cubes satisfy m >= lambda (per axis the six squared
        // coordinate differences sum to at most 4 m^2, and over three axes
        // to 12 lambda^2), so shapes beyond lambda = n cannot fit and the
        // sweep over lambda <= n is complete.
        if (sh.lambda > n) break;
        for (int64_t j = 1; j * sh.cube <= n; ++j)
            raw += orbits::count_in_cube(orbits::orbit_stats(sh.images, j), n);
    }
    if (raw % 2) throw InternalError("placement total must be even (mirror pairs)");
    return raw;
}

}  // namespace

int64_t total_count(int64_t n, const std::vector<IrreducibleRecord>& records) {
    check_n(n);
    check_covered(n, records);
    std::vector<Shape> shapes;
    shapes.reserve(records.size());
    for (const auto& rec : records) {
        if (rec.d * rec.k > n) break;
        shapes.push_back({rec.d * rec.k, rec.cube, orbits::shape_images(rec.tetra)});
    }
    return raw_total(n, shapes) / 2;
}

std::vector<CountRow> sequence_rows(const std::vector<IrreducibleRecord>& records, int64_t n_max,
                                    int threads) {
    check_n(n_max);
    check_covered(n_max, records);
    if (threads < 0) throw std::invalid_argument("threads must be >= 0");

    std::vector<Shape> shapes;
    shapes.reserve(records.size());
    for (const auto& rec : records) {
        if (rec.d * rec.k > n_max) break;
        shapes.push_back({rec.d * rec.k, rec.cube, orbits::shape_images(rec.tetra)});
    }

    std::vector<CountRow> rows(static_cast<std::size_t>(n_max));
    auto fill_row = [&](int64_t n) {
        const int64_t raw = raw_total(n, shapes);
        rows[static_cast<std::size_t>(n - 1)] = {n, raw / 2, raw};
    };

    int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min<int>(nthreads, static_cast<int>(n_max)));

    if (nthreads == 1) {
        for (int64_t n = 1; n <= n_max; ++n) fill_row(n);
        return rows;
    }

    // Rows are independent, so any work split gives identical output.
    std::atomic<int64_t> next{1};
    std::mutex err_mutex;
    std::exception_ptr err;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i)
        pool.emplace_back([&] {
            try {
                for (int64_t n; (n = next.fetch_add(1)) <= n_max;) fill_row(n);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err) err = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return rows;
}

// ---------------------------------------------------------------------------
// cache: one JSON object per line, stable field order, integers only

namespace {

using nlohmann::ordered_json;

int64_t get_int(const ordered_json& obj, const char* key, std::size_t line) {
    if (!obj.contains(key) || !obj[key].is_number_integer())
        throw CacheError(std::string("missing or non-integer field '") + key + "'", line);
    return obj[key].get<int64_t>();
}

std::vector<int64_t> get_int_array(const ordered_json& obj, const char* key, std::size_t want,
                                   std::size_t line) {
    if (!obj.contains(key) || !obj[key].is_array() || obj[key].size() != want)
        throw CacheError(std::string("field '") + key + "' must be an array of " +
                             std::to_string(want) + " integers",
                         line);
    std::vector<int64_t> out;
    for (const auto& el : obj[key]) {
        if (!el.is_number_integer())
            throw CacheError(std::string("field '") + key + "' must contain integers only", line);
        out.push_back(el.get<int64_t>());
    }
    return out;
}

// Everything the generator guarantees, re-checked on load so a hand-edited
// cache cannot poison the counts.
void validate_record(const IrreducibleRecord& rec, std::size_t line) {
    if (rec.d < 1 || rec.d % 2 == 0) throw CacheError("d must be odd and positive", line);
    if (rec.k < 1 || rec.k % 2 == 0) throw CacheError("k must be odd and positive", line);
    if (rec.sol.d != rec.d) throw CacheError("solution entry d disagrees with record d", line);
    const auto& s = rec.sol;
    if (s.a < 1 || s.a > s.b || s.b > s.c || s.a % 2 == 0 || s.b % 2 == 0 || s.c % 2 == 0 ||
        s.a * s.a + s.b * s.b + s.c * s.c != 3 * s.d * s.d ||
        std::gcd(std::gcd(s.a, s.b), s.c) != 1)
        throw CacheError("solution is not a positive ordered primitive one", line);
    if (rec.k == 1) {
        if (rec.mn != MnPair{0, 1}) throw CacheError("k=1 records must carry the seed pair", line);
    } else {
        const auto& mn = rec.mn;
        if (mn.m < 1 || mn.n <= 2 * mn.m || std::gcd(mn.m, mn.n) != 1 ||
            mn.m * mn.m - mn.m * mn.n + mn.n * mn.n != rec.k * rec.k)
            throw CacheError("pair (m,n) does not generate k", line);
    }
    Vec3 lo = rec.tetra.v[0];
    for (const Vec3& p : rec.tetra.v) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        lo.z = std::min(lo.z, p.z);
    }
    if (lo != Vec3{}) throw CacheError("vertices are not normalized to the octant", line);
    const auto side = facegen::regular_side(rec.tetra);
    if (!side || *side != rec.d * rec.k)
        throw CacheError("vertices are not a regular tetrahedron of side d*k*sqrt(2)", line);
    if (orbits::orbit_canonical(rec.tetra) != rec.tetra)
        throw CacheError("vertices are not in canonical orbit form", line);
    if (!facegen::is_irreducible(rec.tetra)) throw CacheError("vertices are reducible", line);
    if (facegen::enclosing_cube(rec.tetra) != rec.cube)
        throw CacheError("cube disagrees with the vertex extent", line);
    if (rec.k > 1 && facegen::max_face_d(rec.tetra) >= rec.d * rec.k)
        throw CacheError("record duplicates a face-plane class", line);
}

}  // namespace

void save_cache(const std::string& path, const std::vector<IrreducibleRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CacheError("cannot open '" + path + "' for writing", 0);
    for (const auto& rec : records) {
        ordered_json obj;
        obj["d"] = rec.d;
        obj["k"] = rec.k;
        obj["mn_pair"] = {rec.mn.m, rec.mn.n};
        obj["cube"] = rec.cube;
        ordered_json verts = ordered_json::array();
        for (const Vec3& p : rec.tetra.v) verts.push_back({p.x, p.y, p.z});
        obj["vertices"] = std::move(verts);
        obj["solution"] = {rec.sol.a, rec.sol.b, rec.sol.c, rec.sol.d};
        out << obj.dump() << '\n';
    }
    if (!out) throw CacheError("write to '" + path + "' failed", 0);
}

std::vector<IrreducibleRecord> load_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("cannot open '" + path + "'", 0);
    std::vector<IrreducibleRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const ordered_json obj = ordered_json::parse(line, nullptr, false);
        if (obj.is_discarded() || !obj.is_object())
            throw CacheError("not a JSON object", line_no);

        IrreducibleRecord rec;
        rec.d = get_int(obj, "d", line_no);
        rec.k = get_int(obj, "k", line_no);
        const auto mn = get_int_array(obj, "mn_pair", 2, line_no);
        rec.mn = {mn[0], mn[1]};
        rec.cube = get_int(obj, "cube", line_no);
        if (!obj.contains("vertices") || !obj["vertices"].is_array() ||
            obj["vertices"].size() != 4)
            throw CacheError("field 'vertices' must be an array of 4 points", line_no);
        for (int i = 0; i < 4; ++i) {
            ordered_json pt = obj["vertices"][i];
            if (!pt.is_array() || pt.size() != 3 ||
                !std::all_of(pt.begin(), pt.end(),
                             [](const ordered_json& c) { return c.is_number_integer(); }))
                throw CacheError("vertices must be integer triples", line_no);
            rec.tetra.v[i] = {pt[0].get<int64_t>(), pt[1].get<int64_t>(), pt[2].get<int64_t>()};
        }
        const auto sol = get_int_array(obj, "solution", 4, line_no);
        rec.sol = {sol[0], sol[1], sol[2], sol[3]};

        validate_record(rec, line_no);
        if (!records.empty() && !record_less(records.back(), rec))
            throw CacheError("records out of order", line_no);
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace rtc::pipeline
