// rtgraph.hpp -- the relation graph on primitive solutions of
// a^2+b^2+c^2 = 3d^2.
//
// Two solutions (a1,b1,c1,d1), (a2,b2,c2,d2) are related when some
// permutation (a',b',c') of (a2,b2,c2) and signs s1..s4 in {+1,-1} satisfy
//
//     s1 a1 a' + s2 b1 b' + s3 c1 c' + s4 d1 d2 = 0,
//
// i.e. the 4-vectors (a1,b1,c1,d1) and (a',b',c',d2) are orthogonal under
// the signed form.  The relation is symmetric; a solution may relate to
// itself (a self-loop), e.g. (1,1,1,1).  Nodes are all positive ordered
// primitive solutions for odd d <= d_max, ordered by d then
// lexicographically; every related pair is recorded with one witness.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "numtheory.hpp"

namespace rtc::rtgraph {

using numtheory::PrimitiveSolution;
using std::int64_t;

// Proof of one relation: with (a',b',c') = perm and s = signs,
// s[0] a1 a' + s[1] b1 b' + s[2] c1 c' + s[3] d1 d2 == 0.
struct Witness {
    std::array<int64_t, 3> perm{};
    std::array<int, 4> signs{};
};

// First witness in scan order (6 permutations x 16 sign patterns), or
// nullopt when the solutions are unrelated.
std::optional<Witness> connection_witness(const PrimitiveSolution& x, const PrimitiveSolution& y);

bool are_connected(const PrimitiveSolution& x, const PrimitiveSolution& y);

struct RtGraph {
    struct Edge {
        std::size_t u = 0, v = 0;  // node indexes, u <= v; u == v is a self-loop
        Witness w;
    };
    std::vector<PrimitiveSolution> nodes;
    std::vector<Edge> edges;
};

// Nodes for every odd d in 1..d_max; edges for every related pair
// (self-loops included).
RtGraph build_graph(int64_t d_max);

// Connected components (self-loops irrelevant), each a sorted list of node
// indexes, ordered by smallest member.
std::vector<std::vector<std::size_t>> components(const RtGraph& g);

// "[(a,b,c),d]"
std::string node_label(const PrimitiveSolution& s);

// Undirected DOT graph with node_label labels.
std::string export_dot(const RtGraph& g);

// "component_id,size,members" rows, members as one quoted space-separated
// list of labels.
std::string components_csv(const RtGraph& g);

}  // namespace rtc::rtgraph
