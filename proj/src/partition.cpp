#include "circulant/partition.hpp"

#include <numeric>
#include <string>

#include "circulant/bounds.hpp"
#include "circulant/errors.hpp"

namespace circulant {

LevelAssignment distance_levels(const GraphSpec& spec) {
    const std::int64_t n = spec.order();
    const std::vector<std::int64_t> conn = spec.connection_set();

    std::vector<std::int32_t> dist(n, -1);
    std::vector<std::int32_t> cur, nxt;
    dist[0] = 0;
    cur.push_back(0);
    std::vector<std::int64_t> profile{1};
    std::int64_t seen = 1;
    std::int32_t level = 0;

    while (!cur.empty()) {
        nxt.clear();
        for (std::int32_t v : cur) {
            for (std::int64_t c : conn) {
                std::int64_t u = v + c;
                if (u >= n) u -= n;
                if (dist[u] < 0) {
                    dist[u] = level + 1;
                    nxt.push_back(static_cast<std::int32_t>(u));
                }
            }
        }
        if (!nxt.empty()) {
            ++level;
            seen += static_cast<std::int64_t>(nxt.size());
            profile.push_back(static_cast<std::int64_t>(nxt.size()));
        }
        std::swap(cur, nxt);
    }

    if (seen != n)
        throw DisconnectedGraph(spec.to_string() + ": connection set reaches only " +
                                std::to_string(seen) + " of " + std::to_string(n) + " vertices");
    return LevelAssignment{spec, std::move(dist), level, std::move(profile)};
}

DefectProfile defects_of_profile(int degree, const std::vector<std::int64_t>& profile) {
    DefectProfile d(profile.size(), 0);
    for (std::size_t l = 1; l < profile.size(); ++l) {
        std::int64_t cap = lmac(degree, static_cast<std::int64_t>(l));
        d[l] = cap - profile[l];
        if (d[l] < 0)
            throw NegativeDefect("level " + std::to_string(l) + " holds " +
                                 std::to_string(profile[l]) + " vertices, above the bound " +
                                 std::to_string(cap));
    }
    return d;
}

DefectProfile level_defects(const LevelAssignment& assignment) {
    return defects_of_profile(assignment.spec.degree(), assignment.profile);
}

std::int64_t maximal_prefix(const LevelAssignment& assignment) {
    DefectProfile d = level_defects(assignment);
    std::int64_t prefix = 0;
    while (prefix + 1 < static_cast<std::int64_t>(d.size()) && d[prefix + 1] == 0) ++prefix;
    return prefix;
}

std::int64_t total_defect(const LevelAssignment& assignment) {
    DefectProfile d = level_defects(assignment);
    return std::accumulate(d.begin(), d.end(), std::int64_t{0});
}

}  // namespace circulant
