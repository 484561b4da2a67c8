// pipeline.hpp -- the full enumeration pipeline: generate every irreducible
// regular lattice tetrahedron class reachable in {0..n}^3, then count all
// tetrahedra as dilated orbit placements.
//
// Generation sweeps face configurations (d, k, (m,n)):
//   phase 1: k = 1 with the seed pair (0,1), every odd d <= n_max;
//   phase 2: every k > 1 in k_values(n_max), every coprime pair of k,
//            every odd d with d*k <= n_max.
// Each configuration contributes tetra_pair(solution, mn) for every
// primitive solution of a^2+b^2+c^2 = 3d^2.  A candidate is kept when
//   (a) k = 1, or its largest face-plane d is strictly below its side
//       multiplier lambda = d*k (otherwise the k = 1 pass of some face
//       already produced its class), and
//   (b) its equivalence class under cube symmetries + translations has not
//       been seen before (classes are compared by orbit_canonical).
// Records store the class representative; the list is sorted by
// (lambda, vertices) and globally duplicate-free.
//
// Counting: every regular tetrahedron in {0..n}^3 is the j-fold dilation of
// exactly one record class placed by one cube symmetry + translation, so
//   raw(n) = sum over records, j >= 1 of f(j*T, n)
// and raw(n) = 2 * sequence(n).  raw is checked even.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "facegen.hpp"
#include "geom.hpp"
#include "numtheory.hpp"
#include "orbits.hpp"

namespace rtc::pipeline {

using numtheory::MnPair;
using numtheory::PrimitiveSolution;
using std::int64_t;

struct IrreducibleRecord {
    int64_t d = 0;            // face plane parameter at generation
    int64_t k = 0;            // triangle multiplier (side lambda = d*k)
    MnPair mn;                // generating pair; (0,1) for k = 1
    PrimitiveSolution sol;    // generating face solution
    int64_t cube = 0;         // enclosing cube of the class representative
    Tetra tetra;              // class representative (orbit-canonical)
};

struct CountRow {
    int64_t n = 0;
    int64_t half = 0;   // the sequence value
    int64_t total = 0;  // raw orbit total = 2 * half
};

// All records reachable with side multiplier d*k <= n_max, sorted by
// (d*k, vertices).
std::vector<IrreducibleRecord> irreducible_list(int64_t n_max);

// Largest n_max the record list is complete for: the maximum d over k = 1
// records (every odd d <= n_max contributes at least one seed record, and
// all side multipliers are odd).  0 for an empty list.
int64_t coverage(const std::vector<IrreducibleRecord>& records);

// Extends records (complete up to coverage()) so they are complete for
// n_max, preserving the sorted order invariant.
void extend_records(std::vector<IrreducibleRecord>& records, int64_t n_max);

// The sequence value for one n (records must be complete for n).
int64_t total_count(int64_t n, const std::vector<IrreducibleRecord>& records);

// Rows for n = 1..n_max.  threads = 0 means hardware concurrency; the
// result is identical for every thread count.
std::vector<CountRow> sequence_rows(const std::vector<IrreducibleRecord>& records, int64_t n_max,
                                    int threads = 0);

// Line-delimited cache of the record list.  Loading validates every record
// (regularity, canonicality, provenance) and throws CacheError with the
// offending line number otherwise.
void save_cache(const std::string& path, const std::vector<IrreducibleRecord>& records);
std::vector<IrreducibleRecord> load_cache(const std::string& path);

// Convenience wrapper tying the pieces together for the CLI: optional cache
// in/out, extension, counting.
class Pipeline {
public:
    void set_threads(int threads) { threads_ = threads; }
    void load_cache(const std::string& path) { records_ = pipeline::load_cache(path); }
    void save_cache(const std::string& path) const { pipeline::save_cache(path, records_); }
    std::vector<CountRow> sequence(int64_t n_max) {
        extend_records(records_, n_max);
        return sequence_rows(records_, n_max, threads_);
    }
    const std::vector<IrreducibleRecord>& records() const { return records_; }

private:
    std::vector<IrreducibleRecord> records_;
    int threads_ = 0;
};

}  // namespace rtc::pipeline
