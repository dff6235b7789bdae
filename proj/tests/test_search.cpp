#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "reference_data.hpp"

#include "circulant/errors.hpp"
#include "circulant/partition.hpp"
#include "circulant/search.hpp"

using namespace circulant;
using Row = std::vector<std::int64_t>;

TEST_CASE("graph diameter by BFS") {
    CHECK(graph_diameter(GraphSpec(13, {1, 5})) == 2);
    CHECK(graph_diameter(GraphSpec(16, {1, 3}, true)) == 2);  // order-16 degree-5 witness
    CHECK(graph_diameter(GraphSpec(16, {1, 7}, true)) == 4);
    CHECK(graph_diameter(GraphSpec(9, {1})) == 4);
    CHECK_THROWS_AS(graph_diameter(GraphSpec(12, {2})), DisconnectedGraph);
}

TEST_CASE("canonical forms minimize over units") {
    CHECK(canonical_form(GraphSpec(13, {1, 5})) == GraphSpec(13, {1, 5}));
    // {2,3} = 7 * {1,5} folded, so both orbits collapse to {1,5}
    CHECK(canonical_form(GraphSpec(13, {2, 3})) == GraphSpec(13, {1, 5}));
    CHECK(canonical_form(GraphSpec(5, {1})) == GraphSpec(5, {1}));
    CHECK(canonical_form(GraphSpec(9, {4})) == GraphSpec(9, {1}));
    // the half flag survives canonicalization
    CHECK(canonical_form(GraphSpec(16, {3, 5}, true)).include_half());
}

TEST_CASE("multiplier images stay in the orbit") {
    GraphSpec s(13, {1, 5});
    GraphSpec img = multiplier_image(s, 7);
    CHECK(img == GraphSpec(13, {4, 6}));
    CHECK(canonical_form(img) == canonical_form(s));
    CHECK_THROWS_AS(multiplier_image(GraphSpec(12, {1, 5}), 4), Error);
}

TEST_CASE("canonical form is idempotent and orbit-constant on random specs") {
    std::mt19937 rng(20240901);
    int done = 0;
    while (done < 300) {
        std::int64_t n = 3 + rng() % 400;
        std::int64_t gmax = (n - 1) / 2;
        int f = 1 + rng() % 3;
        if (gmax < f) continue;
        std::set<std::int64_t> gens;
        while (static_cast<int>(gens.size()) < f)
            gens.insert(1 + static_cast<std::int64_t>(rng() % gmax));
        GraphSpec s(n, Row(gens.begin(), gens.end()), n % 2 == 0 && rng() % 2);
        GraphSpec canon = canonical_form(s);
        CHECK(canonical_form(canon) == canon);
        std::int64_t u = 1 + rng() % (n - 1);
        while (std::gcd(u, n) != 1) u = 1 + rng() % (n - 1);
        CHECK(canonical_form(multiplier_image(s, u)) == canon);
        ++done;
    }
}

TEST_CASE("find_witness returns the lexicographic first hit") {
    CHECK(find_witness(2, 4, 9) == GraphSpec(9, {1}));
    CHECK_FALSE(find_witness(4, 3, 26).has_value());  // 25 is extremal
    auto w = find_witness(5, 3, 36);
    REQUIRE(w.has_value());
    CHECK(distance_levels(*w).profile == Row{1, 5, 12, 18});
    CHECK(*w == canonical_form(*w));
    CHECK_FALSE(find_witness(3, 2, 9).has_value());   // odd degree needs even order
}

TEST_CASE("find_witness_where skips rejected hits") {
    auto no_triangle = [](const GraphSpec& s) { return s.generators()[1] != 2; };
    auto w = find_witness_where(6, 2, 21, no_triangle);
    REQUIRE(w.has_value());
    CHECK(*w == GraphSpec(21, {1, 3, 8}));
}

TEST_CASE("extremal search reproduces the reference orders") {
    CHECK(extremal_search(4, 2, 20).best_order == 13);
    CHECK(extremal_search(5, 2, 20).best_order == 16);
    SearchReport r = extremal_search(6, 2, 25);
    CHECK(r.best_order == 21);
    CHECK(r.multiplier_classes >= 3);
    CHECK(r.witnesses.size() == static_cast<std::size_t>(r.multiplier_classes));
    CHECK(r.explored > 0);
    for (const GraphSpec& w : r.witnesses) {
        CHECK(w.order() == 21);
        CHECK(graph_diameter(w) <= 2);
        CHECK(w == canonical_form(w));
    }
}

TEST_CASE("search budgets") {
    SearchOptions tight;
    tight.budget = 100;
    CHECK_THROWS_AS(extremal_search(6, 2, 25, tight), RangeTooLarge);
    CHECK_THROWS_AS(find_witness(9, 5, 700, tight), RangeTooLarge);
    CHECK(candidate_count(4, 13) == 15);  // C(6,2)
    CHECK(candidate_count(5, 13) == 0);   // odd degree, odd order
}

TEST_CASE("worker count does not change reports") {
    SearchOptions one, four;
    one.threads = 1;
    four.threads = 4;
    CHECK(extremal_search(6, 2, 25, one).to_json() == extremal_search(6, 2, 25, four).to_json());
    CHECK(find_witness(6, 3, 55, one) == find_witness(6, 3, 55, four));
}

TEST_CASE("level sizes never exceed the bound on random connected specs") {
    std::mt19937 rng(99);
    int done = 0;
    while (done < 200) {
        std::int64_t n = 3 + rng() % 998;
        std::int64_t gmax = (n - 1) / 2;
        int f = 1 + rng() % 3;
        if (gmax < f) continue;
        std::set<std::int64_t> gens;
        while (static_cast<int>(gens.size()) < f)
            gens.insert(1 + static_cast<std::int64_t>(rng() % gmax));
        GraphSpec s(n, Row(gens.begin(), gens.end()), n % 2 == 0 && rng() % 2);
        if (!s.generates_zn()) continue;
        // defects_of_profile throws NegativeDefect on any violation
        CHECK_NOTHROW(level_defects(distance_levels(s)));
        ++done;
    }
}
