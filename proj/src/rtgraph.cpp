#include "rtgraph.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace rtc::rtgraph {

namespace {

constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

// Plain union-find over node indexes.
struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::optional<Witness> connection_witness(const PrimitiveSolution& x, const PrimitiveSolution& y) {
    const int64_t xs[3] = {x.a, x.b, x.c};
    const int64_t ys[3] = {y.a, y.b, y.c};
    for (const auto& perm : kPerms) {
        const int64_t p0 = ys[perm[0]], p1 = ys[perm[1]], p2 = ys[perm[2]];
        for (int mask = 0; mask < 16; ++mask) {
            const int s0 = (mask & 1) ? -1 : 1;
            const int s1 = (mask & 2) ? -1 : 1;
            const int s2 = (mask & 4) ? -1 : 1;
            const int s3 = (mask & 8) ? -1 : 1;
            if (s0 * xs[0] * p0 + s1 * xs[1] * p1 + s2 * xs[2] * p2 + s3 * x.d * y.d == 0)
                return Witness{{p0, p1, p2}, {s0, s1, s2, s3}};
        }
    }
    return std::nullopt;
}

bool are_connected(const PrimitiveSolution& x, const PrimitiveSolution& y) {
    return connection_witness(x, y).has_value();
}

RtGraph build_graph(int64_t d_max) {
    if (d_max < 1) throw std::invalid_argument("d_max must be >= 1");
    RtGraph g;
    for (int64_t d = 1; d <= d_max; d += 2)
        for (const auto& sol : numtheory::three_squares_primitive(d)) g.nodes.push_back(sol);
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (std::size_t j = i; j < g.nodes.size(); ++j)
            if (auto w = connection_witness(g.nodes[i], g.nodes[j]))
                g.edges.push_back({i, j, *w});
    return g;
}

std::vector<std::vector<std::size_t>> components(const RtGraph& g) {
    UnionFind uf(g.nodes.size());
    for (const auto& e : g.edges) uf.unite(e.u, e.v);
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> comp_of(g.nodes.size(), SIZE_MAX);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const std::size_t root = uf.find(i);
        if (comp_of[root] == SIZE_MAX) {
            comp_of[root] = comps.size();
            comps.emplace_back();
        }
        comps[comp_of[root]].push_back(i);
    }
    return comps;
}

std::string node_label(const PrimitiveSolution& s) {
    return "[(" + std::to_string(s.a) + "," + std::to_string(s.b) + "," + std::to_string(s.c) +
           ")," + std::to_string(s.d) + "]";
}

std::string export_dot(const RtGraph& g) {
    std::string out = "graph rt {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + node_label(g.nodes[i]) + "\"];\n";
    for (const auto& e : g.edges)
        out += "  n" + std::to_string(e.u) + " -- n" + std::to_string(e.v) + ";\n";
    out += "}\n";
    return out;
}

std::string components_csv(const RtGraph& g) {
    std::string out = "component_id,size,members\n";
    const auto comps = components(g);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        out += std::to_string(c) + "," + std::to_string(comps[c].size()) + ",\"";
        for (std::size_t i = 0; i < comps[c].size(); ++i) {
            if (i) out += " ";
            out += node_label(g.nodes[comps[c][i]]);
        }
        out += "\"\n";
    }
    return out;
}

}  // namespace rtc::rtgraph
