#include <cstdlib>

#include "doctest.h"
#include "reference_data.hpp"

#include "circulant/bounds.hpp"
#include "circulant/errors.hpp"

using namespace circulant;

namespace {

// Independent oracle for S(f,k): count the integer vectors a in Z^f with
// |a|_1 <= k by direct enumeration.
std::int64_t ball_count(int f, std::int64_t k) {
    if (k < 0) return 0;
    if (f == 0) return 1;
    std::int64_t total = 0;
    for (std::int64_t a = -k; a <= k; ++a) total += ball_count(f - 1, k - std::llabs(a));
    return total;
}

}  // namespace

TEST_CASE("s_poly equals the enumeration oracle") {
    for (int f = 0; f <= 4; ++f)
        for (std::int64_t k = 0; k <= 10; ++k)
            CHECK(s_poly(f, k) == ball_count(f, k));
    CHECK(s_poly(2, 2) == 13);
    CHECK(s_poly(3, 1) == 7);
    CHECK(s_poly(0, 5) == 1);
    CHECK(s_poly(5, 0) == 1);
}

TEST_CASE("mac_bound composes s_poly by parity") {
    CHECK(mac_bound(4, 2) == 13);
    CHECK(mac_bound(7, 2) == 32);  // 25 + 7
    for (std::int64_t k = 1; k <= 8; ++k) CHECK(mac_bound(2, k) == 2 * k + 1);
    for (int d = 2; d <= 9; ++d) CHECK(mac_bound(d, 0) == 1);
    for (std::int64_t k = 1; k <= 8; ++k) {
        CHECK(mac_bound(6, k) == ball_count(3, k));
        CHECK(mac_bound(9, k) == ball_count(4, k) + ball_count(4, k - 1));
    }
    CHECK_THROWS_AS(mac_bound(1, 3), Error);
}

TEST_CASE("level bound reproduces the reference grid") {
    for (int d = 2; d <= 9; ++d)
        for (std::int64_t l = 2; l <= 10; ++l)
            CHECK(lmac(d, l) == fixtures::kLevelBoundGrid[d - 2][l - 2]);
    CHECK(lmac(6, 4) == 66);
    CHECK(lmac(9, 10) == 4712);
    CHECK(lmac(8, 2) == 32);
    for (int d = 2; d <= 9; ++d) CHECK(lmac(d, 1) == d);
}

TEST_CASE("closed forms match the first difference") {
    CHECK(lmac_closed(6, 5) == 102);
    CHECK(lmac_closed(7, 2) == 24);
    CHECK(lmac_closed(9, 3) == 120);  // (16*27 - 24*9 + 56*3 - 24)/3
    for (int d = 2; d <= 9; ++d)
        for (std::int64_t l = 2; l <= 50; ++l)
            CHECK(lmac_closed(d, l) == lmac(d, l));
    CHECK_THROWS_AS(lmac_closed(10, 3), Error);
    CHECK_THROWS_AS(lmac_closed(1, 3), Error);
}

TEST_CASE("last maximal level positions") {
    CHECK(last_maximal_level(6, 12) == 8);
    CHECK(last_maximal_level(8, 12) == 6);
    CHECK(last_maximal_level(4, 7) == 7);
    CHECK(last_maximal_level(5, 9) == 8);
    CHECK(last_maximal_level(7, 15) == 10);
    CHECK(last_maximal_level(9, 5) == 2);
    CHECK_THROWS_AS(last_maximal_level(10, 3), Error);
}

TEST_CASE("binomial edge cases") {
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(50, 4) == 230300);
}
