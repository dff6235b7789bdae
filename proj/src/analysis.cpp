#include "circulant/analysis.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>

#include "circulant/bounds.hpp"
#include "circulant/errors.hpp"

namespace circulant {

namespace {

// Shared level-edge accounting: for every vertex v, classify its neighbors
// by dist relative to dist[v]. NeighborFn enumerates neighbors of v.
template <typename NeighborFn>
TotalIntersectionArray tally_levels(std::int64_t n, std::int64_t diameter,
                                    const std::vector<std::int32_t>& dist, NeighborFn&& nbrs) {
    TotalIntersectionArray t;
    t.back.assign(diameter + 1, 0);
    t.same.assign(diameter + 1, 0);
    t.fwd.assign(diameter + 1, 0);
    for (std::int64_t v = 0; v < n; ++v) {
        std::int32_t lv = dist[v];
        for (std::int64_t u : nbrs(v)) {
            std::int32_t lu = dist[u];
            if (lu == lv - 1)
                ++t.back[lv];
            else if (lu == lv)
                ++t.same[lv];
            else
                ++t.fwd[lv];
        }
    }
    return t;
}

}  // namespace

TotalIntersectionArray total_intersection_array(const LevelAssignment& a) {
    const auto conn = a.spec.connection_set();
    const std::int64_t n = a.spec.order();
    std::vector<std::int64_t> nb(conn.size());
    return tally_levels(n, a.diameter, a.dist, [&](std::int64_t v) -> const std::vector<std::int64_t>& {
        for (std::size_t i = 0; i < conn.size(); ++i) {
            std::int64_t u = v + conn[i];
            if (u >= n) u -= n;
            nb[i] = u;
        }
        return nb;
    });
}

AdjacencyGraph load_adjacency(std::istream& in) {
    AdjacencyGraph g;
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        std::vector<std::int32_t> nbrs;
        std::int64_t u;
        while (row >> u) nbrs.push_back(static_cast<std::int32_t>(u));
        g.adj.push_back(std::move(nbrs));
    }
    for (const auto& nbrs : g.adj)
        for (std::int32_t u : nbrs)
            if (u < 0 || u >= g.order()) throw Error("adjacency list references vertex out of range");
    return g;
}

RootedLevels rooted_levels(const AdjacencyGraph& g, std::int64_t root) {
    const std::int64_t n = g.order();
    if (root < 0 || root >= n) throw Error("root out of range");
    RootedLevels r;
    r.dist.assign(n, -1);
    std::vector<std::int32_t> cur, nxt;
    r.dist[root] = 0;
    cur.push_back(static_cast<std::int32_t>(root));
    r.profile = {1};
    std::int64_t seen = 1;
    std::int32_t level = 0;
    while (!cur.empty()) {
        nxt.clear();
        for (std::int32_t v : cur)
            for (std::int32_t u : g.adj[v])
                if (r.dist[u] < 0) {
                    r.dist[u] = level + 1;
                    nxt.push_back(u);
                }
        if (!nxt.empty()) {
            ++level;
            seen += static_cast<std::int64_t>(nxt.size());
            r.profile.push_back(static_cast<std::int64_t>(nxt.size()));
        }
        std::swap(cur, nxt);
    }
    if (seen != n) throw DisconnectedGraph("adjacency graph not connected from the given root");
    r.diameter = level;
    return r;
}

TotalIntersectionArray total_intersection_array(const AdjacencyGraph& g, std::int64_t root) {
    RootedLevels r = rooted_levels(g, root);
    return tally_levels(g.order(), r.diameter, r.dist,
                        [&](std::int64_t v) -> const std::vector<std::int32_t>& { return g.adj[v]; });
}

std::optional<std::int64_t> odd_girth(const GraphSpec& spec) {
    // BFS over the parity double cover: state (v, p) at index 2v + p.
    const std::int64_t n = spec.order();
    const auto conn = spec.connection_set();
    std::vector<std::int32_t> dist(2 * n, -1);
    std::vector<std::int64_t> cur, nxt;
    dist[0] = 0;
    cur.push_back(0);
    std::int32_t level = 0;
    while (!cur.empty()) {
        nxt.clear();
        for (std::int64_t s : cur) {
            std::int64_t v = s >> 1;
            std::int64_t p = s & 1;
            for (std::int64_t c : conn) {
                std::int64_t u = v + c;
                if (u >= n) u -= n;
                std::int64_t t = 2 * u + (p ^ 1);
                if (dist[t] < 0) {
                    dist[t] = level + 1;
                    if (t == 1) return level + 1;
                    nxt.push_back(t);
                }
            }
        }
        ++level;
        std::swap(cur, nxt);
    }
    return std::nullopt;
}

TypeCensus vertex_types(const LevelAssignment& a) {
    const std::int64_t n = a.spec.order();
    const auto conn = a.spec.connection_set();
    const int d = a.spec.degree();
    TypeCensus census;
    census.degree = d;
    census.diameter = a.diameter;
    census.counts.assign(a.diameter + 1, std::vector<std::int64_t>(d + 1, 0));
    census.counts[0][0] = 1;
    for (std::int64_t v = 1; v < n; ++v) {
        std::int32_t lv = a.dist[v];
        int s = 0;
        for (std::int64_t c : conn) {
            std::int64_t u = v + c;
            if (u >= n) u -= n;
            if (a.dist[u] == lv - 1) ++s;
        }
        ++census.counts[lv][s];
    }
    census.t1_total = 0;
    for (std::int64_t l = 1; l <= a.diameter; ++l) census.t1_total += census.counts[l][1];
    return census;
}

std::int64_t vt_formula(int degree, int s, std::int64_t level) {
    if (degree < 2) throw Error("vt_formula: degree must be at least 2");
    if (s < 1 || level < 1) return 0;
    if (degree % 2 == 0) {
        int f = degree / 2;
        if (s > f) return 0;
        std::int64_t total = 0;
        for (int i = 1; i <= s; ++i) {
            std::int64_t term = binomial(s, i) * lmac(2 * i, level);
            total += ((s - i) % 2 == 0) ? term : -term;
        }
        return binomial(f, s) * total;
    }
    int f = (degree - 1) / 2;
    if (level == 1) return s == 1 ? degree : 0;
    // l >= 2: paths avoiding the half element plus paths spending one step
    // on it; the half element adds T_1 vertices in level 1 only.
    std::int64_t with_half = (s >= 2 && level >= 2) ? vt_formula(2 * f, s - 1, level - 1) : 0;
    return vt_formula(2 * f, s, level) + with_half;
}

std::int64_t t1_total_formula(int degree, std::int64_t k, std::optional<int> class_id) {
    auto need_class = [&](std::int64_t class1, std::int64_t class2) {
        if (!class_id)
            throw UnknownFamily("t1_total_formula: degree " + std::to_string(degree) +
                                " needs an isomorphism class");
        if (*class_id == 1) return class1;
        if (*class_id == 2) return class2;
        throw UnknownFamily("t1_total_formula: degree " + std::to_string(degree) + " class " +
                            std::to_string(*class_id) + " not tabulated");
    };
    switch (degree) {
        case 2: return 2 * k;
        case 3: return 2 * k + 1;
        case 4: return 4 * k;
        case 5: return 4 * k - 1;
        case 6: return need_class(4 * k, 4 * k + 2);
        case 7: return need_class(4 * k - 1, 4 * k + 1);
        case 8: return 4 * k + 4;
        case 9: return 4 * k + 1;
        default:
            throw UnknownFamily("t1_total_formula: degree " + std::to_string(degree) +
                                " not tabulated");
    }
}

}  // namespace circulant
