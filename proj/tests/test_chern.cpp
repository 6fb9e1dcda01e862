#include <doctest.h>

#include "spin7/chern.hpp"
#include "spin7/errors.hpp"

using namespace spin7;

TEST_CASE("complete-intersection Euler characteristics") {
    CHECK(euler_ci(4, {8}) == -2096);
    CHECK(euler_ci(4, {8, 8}) == 7808);
    CHECK(euler_ci(3, {8, 8}) == -768);
    CHECK(euler_ci(3, {8}) == 304);
    CHECK(euler_ci(3, {4}) == 24); // the quartic K3
}

TEST_CASE("empty intersection is the ambient space") {
    for (int n = 0; n <= 8; ++n)
        CHECK(euler_ci(n, {}) == n + 1);
}

TEST_CASE("zero-dimensional intersections count points") {
    CHECK(euler_ci(2, {2, 3}) == 6); // Bezout
    CHECK(euler_ci(3, {8, 8, 8}) == 512);
}

TEST_CASE("surfaces in P^3 match the closed form") {
    for (long long d = 1; d <= 10; ++d)
        CHECK(euler_ci(3, {d}) == d * d * d - 4 * d * d + 6 * d);
}

TEST_CASE("input guards") {
    CHECK_THROWS_AS(euler_ci(2, {8, 8, 8}), Error);
    CHECK_THROWS_AS(euler_ci(3, {0}), Error);
}

TEST_CASE("branched covering arithmetic") {
    CHECK(branched_euler(-2096, 304, 4) == -296);
    CHECK(branched_euler(7808, -768, 4) == 1376);
    CHECK(branched_euler(17, 17, 5) == 17);  // totally branched degenerate case
    CHECK(branched_euler(12, 0, 4) == 3);    // unbranched when divisible
    CHECK_THROWS_AS(branched_euler(13, 0, 4), InconsistencyError);
    CHECK_THROWS_AS(branched_euler(4, 2, 1), Error);
    // the misprinted branch value happens to be divisible but lands far from
    // the true chi(D); only 304 reproduces it
    CHECK(branched_euler(-2096, 7808, 4) != -296);
}

TEST_CASE("weighted projective space chi") {
    CHECK(euler_wps(Weights({1, 1, 1, 1, 4})) == 5);
    CHECK(euler_wps(Weights({1, 1, 1, 1, 4, 4})) == 6);
    CHECK(euler_wps(Weights({1, 1})) == 2);
}
