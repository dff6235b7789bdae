// Acceptance suite: every reference claim the library must reproduce, one
// pass/fail line per criterion. Run from the repository root (the
// dodecahedron fixture is read from data/).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "reference_data.hpp"

#include "circulant/analysis.hpp"
#include "circulant/bounds.hpp"
#include "circulant/catalog.hpp"
#include "circulant/errors.hpp"
#include "circulant/partition.hpp"
#include "circulant/search.hpp"
#include "circulant/verify.hpp"

using namespace circulant;
using Row = std::vector<std::int64_t>;

namespace {

Catalog g_catalog;
int g_failures = 0;

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

void criterion(int index, const std::string& label, const std::function<void(Check&)>& body) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.detail = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2d. %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", index, label.c_str(), dt,
                c.detail.empty() ? "" : " -- ", c.detail.c_str());
    if (!c.ok) ++g_failures;
}

bool within_validity(int d, std::int64_t k) {
    try {
        order_formula(d, k);
        return true;
    } catch (const Error&) {
        return false;
    }
}

LevelAssignment levels_of(int d, std::int64_t k, int class_id = 1) {
    for (const FamilyEntry& e : g_catalog.entries(d, k))
        if (!e.class_id || *e.class_id == class_id) return distance_levels(*e.spec);
    throw UnknownFamily("no entry");
}

std::string tag(int d, std::int64_t k) {
    return "d=" + std::to_string(d) + " k=" + std::to_string(k);
}

std::int64_t degree6_cubic(std::int64_t k) {
    switch (k % 3) {
        case 0: return (4 * k * k * k + 6 * k * k + 18 * k) / 27;
        case 1: return (4 * k * k * k + 6 * k * k - 6 * k - 4) / 27;
        default: return (4 * k * k * k + 6 * k * k + 18 * k + 16) / 27;
    }
}

void criterion_profiles(Check& c) {
    for (std::int64_t k = 1; k <= 6; ++k) {
        LevelAssignment a = levels_of(5, k);
        c.expect(a.profile == fixtures::kDegree5Profiles[k - 1], "degree-5 profile " + tag(5, k));
    }
    for (std::int64_t k = 3; k <= 15; ++k) {
        LevelAssignment a = levels_of(6, k);
        c.expect(a.profile == fixtures::kDegree6Profiles[k - 1], "degree-6 profile " + tag(6, k));
        c.expect(a.spec.order() == fixtures::kDegree6Orders[k - 1], "degree-6 order " + tag(6, k));
    }
}

void criterion_bounds(Check& c) {
    for (int d = 2; d <= 9; ++d)
        for (std::int64_t l = 2; l <= 10; ++l)
            c.expect(lmac(d, l) == fixtures::kLevelBoundGrid[d - 2][l - 2],
                     "lmac(" + std::to_string(d) + "," + std::to_string(l) + ")");
    for (int d = 2; d <= 9; ++d)
        for (std::int64_t l = 2; l <= 50; ++l)
            c.expect(lmac_closed(d, l) == lmac(d, l),
                     "closed form d=" + std::to_string(d) + " l=" + std::to_string(l));
}

void criterion_zones(Check& c) {
    for (int d = 2; d <= 9; ++d)
        for (std::int64_t k : g_catalog.coverage(d, 15)) {
            if (!within_validity(d, k)) continue;
            for (const FamilyEntry& e : g_catalog.entries(d, k))
                c.expect(maximal_prefix(distance_levels(*e.spec)) == last_maximal_level(d, k),
                         "maximal zone " + tag(d, k));
        }
}

void criterion_defects(Check& c) {
    for (std::int64_t k = 3; k <= 15; ++k) {
        DefectProfile row = level_defects(levels_of(6, k));
        c.expect(row == fixtures::kDegree6Defects[k - 3], "defect row " + tag(6, k));
        std::int64_t total = std::accumulate(row.begin(), row.end(), std::int64_t{0});
        c.expect(total == degree6_cubic(k), "cubic total " + tag(6, k));
        Row positive;
        for (std::int64_t v : row)
            if (v > 0) positive.push_back(v);
        for (std::size_t i = 2; i < positive.size(); ++i)
            c.expect(positive[i] - 2 * positive[i - 1] + positive[i - 2] == 24,
                     "second difference " + tag(6, k));
    }
    for (std::int64_t k = 3; k <= 30; ++k)
        c.expect(mac_bound(6, k) - order_formula(6, k) == degree6_cubic(k),
                 "arithmetic total k=" + std::to_string(k));
    for (std::int64_t k : g_catalog.coverage(8, 14)) {
        DefectProfile defects = level_defects(levels_of(8, k));
        Row row;
        for (std::int64_t v : defects)
            if (v > 0) row.push_back(v);
        if (row.empty()) continue;
        row.back() -= 1;  // final level sits one above the clean sequence
        c.expect(row.front() == (k % 2 == 0 ? 8 : 24), "degree-8 row start " + tag(8, k));
        for (std::size_t i = 3; i < row.size(); ++i)
            c.expect(row[i] - 3 * row[i - 1] + 3 * row[i - 2] - row[i - 3] == 64,
                     "degree-8 third difference " + tag(8, k));
    }
}

void criterion_arrays(Check& c) {
    for (const auto& cls : fixtures::kDegree9Classes) {
        GraphSpec spec(130, cls.generators, true);
        TotalIntersectionArray t = total_intersection_array(distance_levels(spec));
        c.expect(Row(t.back.begin() + 1, t.back.end()) == cls.back, "degree-9 back row");
        c.expect(t.same == cls.same, "degree-9 same row");
    }
    std::ifstream in("data/dodecahedron.adj");
    c.expect(in.good(), "data/dodecahedron.adj missing (run from the repo root)");
    if (!in.good()) return;
    AdjacencyGraph g = load_adjacency(in);
    c.expect(rooted_levels(g, 0).profile == fixtures::kDodecaProfile, "dodecahedron profile");
    TotalIntersectionArray t = total_intersection_array(g, 0);
    c.expect(t.back == fixtures::kDodecaBack, "dodecahedron back row");
    c.expect(t.same == fixtures::kDodecaSame, "dodecahedron same row");
    c.expect(t.fwd == fixtures::kDodecaFwd, "dodecahedron forward row");
}

void criterion_girth(Check& c) {
    for (int d = 2; d <= 9; ++d)
        for (std::int64_t k : g_catalog.coverage(d, 15)) {
            if (!within_validity(d, k)) continue;
            for (const FamilyEntry& e : g_catalog.entries(d, k)) {
                auto og = odd_girth(*e.spec);
                c.expect(og && *og == 2 * k + 1, "odd girth " + tag(d, k));
                TotalIntersectionArray t = total_intersection_array(distance_levels(*e.spec));
                for (std::int64_t l = 0; l < k; ++l)
                    c.expect(t.same[l] == 0, "thinness " + tag(d, k));
            }
        }
}

void criterion_types(Check& c) {
    auto census_matches = [&](int d, const std::map<int, Row>& want) {
        TypeCensus census = vertex_types(levels_of(d, 12));
        for (int s = 0; s <= d; ++s) {
            auto it = want.find(s);
            for (std::int64_t l = 0; l <= 12; ++l) {
                std::int64_t expected = it == want.end() ? 0 : it->second[l];
                c.expect(census.at(l, s) == expected,
                         "census d=" + std::to_string(d) + " T" + std::to_string(s) + " level " +
                             std::to_string(l));
            }
        }
    };
    census_matches(4, fixtures::kCensusDegree4);
    census_matches(6, fixtures::kCensusDegree6);
    census_matches(8, fixtures::kCensusDegree8);

    for (int d = 4; d <= 9; ++d)
        for (std::int64_t k : g_catalog.coverage(d, 12))
            for (const FamilyEntry& e : g_catalog.entries(d, k)) {
                LevelAssignment a = distance_levels(*e.spec);
                TypeCensus census = vertex_types(a);
                std::int64_t zone = maximal_prefix(a);
                for (std::int64_t l = 1; l <= zone; ++l)
                    for (int s = 0; s <= d; ++s)
                        c.expect(census.at(l, s) == vt_formula(d, s, l),
                                 "formula " + tag(d, k) + " l=" + std::to_string(l) + " s=" +
                                     std::to_string(s));
            }

    for (std::int64_t k : g_catalog.coverage(8, 15))
        c.expect(vertex_types(levels_of(8, k)).t1_total == 4 * k + 4, "T1 total " + tag(8, k));
    for (std::int64_t k = 3; k <= 15; k += 3) {
        c.expect(vertex_types(levels_of(6, k, 1)).t1_total == 4 * k, "T1 class 1 " + tag(6, k));
        c.expect(vertex_types(levels_of(6, k, 2)).t1_total == 4 * k + 2, "T1 class 2 " + tag(6, k));
    }
}

void criterion_search(Check& c) {
    for (const auto& e : fixtures::kExtremalCases) {
        SearchReport r = extremal_search(e.degree, e.diameter, mac_bound(e.degree, e.diameter));
        c.expect(r.best_order == e.order, "extremal " + tag(e.degree, e.diameter) + " got " +
                                              std::to_string(r.best_order));
        if (e.degree == 6 && e.diameter == 2)
            c.expect(r.multiplier_classes >= 3,
                     "(6,2) classes: " + std::to_string(r.multiplier_classes));
    }
}

void criterion_properties(Check& c) {
    std::mt19937 rng(0x5eed);
    int done = 0;
    while (done < 1000) {
        std::int64_t n = 3 + rng() % 1998;
        std::int64_t gmax = (n - 1) / 2;
        int f = 1 + rng() % 4;
        if (gmax < f) continue;
        std::set<std::int64_t> gens;
        while (static_cast<int>(gens.size()) < f)
            gens.insert(1 + static_cast<std::int64_t>(rng() % gmax));
        GraphSpec s(n, Row(gens.begin(), gens.end()), n % 2 == 0 && rng() % 2);
        if (!s.generates_zn()) continue;
        try {
            level_defects(distance_levels(s));  // throws NegativeDefect above the bound
        } catch (const Error& err) {
            c.expect(false, s.to_string() + ": " + err.what());
        }
        ++done;
    }

    done = 0;
    while (done < 1000) {
        std::int64_t n = 3 + rng() % 1998;
        std::int64_t gmax = (n - 1) / 2;
        int f = 1 + rng() % 4;
        if (gmax < f) continue;
        std::set<std::int64_t> gens;
        while (static_cast<int>(gens.size()) < f)
            gens.insert(1 + static_cast<std::int64_t>(rng() % gmax));
        GraphSpec s(n, Row(gens.begin(), gens.end()), n % 2 == 0 && rng() % 2);
        GraphSpec canon = canonical_form(s);
        c.expect(canonical_form(canon) == canon, "idempotence " + s.to_string());
        std::int64_t u = 1 + rng() % (n - 1);
        while (std::gcd(u, n) != 1) u = 1 + rng() % (n - 1);
        c.expect(canonical_form(multiplier_image(s, u)) == canon, "orbit " + s.to_string());
        ++done;
    }

    SearchOptions one, two;
    one.threads = 1;
    two.threads = 2;
    c.expect(extremal_search(6, 2, 25, one).to_json() == extremal_search(6, 2, 25, two).to_json(),
             "worker determinism (6,2)");
    c.expect(extremal_search(5, 3, 38, one).to_json() == extremal_search(5, 3, 38, two).to_json(),
             "worker determinism (5,3)");
}

void criterion_extrapolation(Check& c) {
    // Final-level T2 projection for a hypothetical degree-10 family with a
    // 2/5 maximal zone: growth 2f(f-1) = 40 per level, reversed over the
    // submaximal levels. Must sink below zero; arithmetic only, no graphs.
    for (std::int64_t k = 10; k <= 60; ++k) {
        std::int64_t zone = 2 * k / 5;
        std::int64_t projected = 40 * (zone - 1) - 40 * (k - zone);
        c.expect(projected < 0, "k=" + std::to_string(k));
    }
    VerifyOutcome outcome = run_verify(VerifyScope::Types, 3, g_catalog);
    bool found = false;
    for (const VerifyCheck& check : outcome.checks)
        if (check.name.find("degree-10 extrapolation") != std::string::npos)
            found = check.pass;
    c.expect(found, "verify suite carries the documented degree-10 check");
}

}  // namespace

int main() {
    criterion(1, "profiles: degree-5 k=1..6 and degree-6 k=3..15 match the reference rows",
              criterion_profiles);
    criterion(2, "bounds: level-bound grid reproduced; closed forms agree to l=50",
              criterion_bounds);
    criterion(3, "maximal zones: BFS prefix equals the last-maximal-level formula (k<=15)",
              criterion_zones);
    criterion(4, "defects: degree-6 triangle exact; cubic totals to k=30; row differences 24/64+1",
              criterion_defects);
    criterion(5, "arrays: four degree-9 classes and the dodecahedron fixture reproduced",
              criterion_arrays);
    criterion(6, "odd girth 2k+1 and interior thinness across the catalog (k<=15)",
              criterion_girth);
    criterion(7, "vertex types: censuses cell-exact; formula agreement in zones; T1 totals",
              criterion_types);
    criterion(8, "search: extremal orders reproduced from scratch; (6,2) has >=3 classes",
              criterion_search);
    criterion(9, "properties: bound soundness, canonical orbits, worker determinism",
              criterion_properties);
    criterion(10, "documented negative check: degree-10 final-level T2 extrapolation",
              criterion_extrapolation);
    std::printf("%d of 10 criteria passed\n", 10 - g_failures);
    return g_failures;
}
