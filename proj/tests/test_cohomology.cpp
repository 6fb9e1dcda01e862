#include <doctest.h>

#include "spin7/chern.hpp"
#include "spin7/cohomology.hpp"
#include "spin7/errors.hpp"

using namespace spin7;

namespace {

std::vector<long long> middle_row(const HodgeDiamond& d) {
    std::vector<long long> row;
    for (int q = 0; q <= d.dim(); ++q)
        row.push_back(static_cast<long long>(d.at(d.dim() - q, q)));
    return row;
}

} // namespace

TEST_CASE("degree-8 hypersurface threefold") {
    const HodgeDiamond d = hypersurface_hodge(Weights({1, 1, 1, 1, 4}), 8);
    CHECK(d.dim() == 3);
    CHECK(d.at(2, 1) == 149);
    CHECK(d.at(1, 1) == 1);
    CHECK(d.at(3, 0) == 1);
    CHECK(d.euler() == -296);
    CHECK(d.symmetric());
    CHECK(d.betti_vector() ==
          std::vector<Integer>{1, 0, 1, 300, 1, 0, 1});
}

TEST_CASE("degree-8 and degree-4 fourfolds in six weights") {
    const HodgeDiamond v1 = hypersurface_hodge(Weights({1, 1, 1, 1, 4, 4}), 8);
    CHECK(middle_row(v1) == std::vector<long long>{0, 35, 232, 35, 0});
    CHECK(v1.symmetric());
    CHECK(v1.euler() == 306);

    const HodgeDiamond v2 = hypersurface_hodge(Weights({1, 1, 1, 1, 4, 4}), 4);
    CHECK(middle_row(v2) == std::vector<long long>{0, 0, 1, 0, 0});
    CHECK(v2.euler() == 5);
}

TEST_CASE("hypersurface chi agrees with the covering route") {
    const HodgeDiamond d = hypersurface_hodge(Weights({1, 1, 1, 1, 4}), 8);
    const Integer via_cover =
        branched_euler(euler_ci(4, {8}), euler_ci(3, {8}), 4);
    CHECK(d.euler() == via_cover);
}

TEST_CASE("degenerate partial propagates") {
    CHECK_THROWS_AS(hypersurface_hodge(Weights({1, 1, 9}), 8), DegeneratePartialError);
}

TEST_CASE("sheaf cohomology of complete intersections") {
    const Weights w({1, 1, 1, 1, 4});
    CHECK(ci_h0q(w, {8, 8}, 0, 2) == 199);
    CHECK(ci_h0q(w, {8, 8}, 0, 1) == 0);
    CHECK(ci_h0q(w, {8, 8}, 0, 0) == 1);
    CHECK(ci_h0q(w, {8}, 5, 1) == 0);

    // six-weight checks used by the mixed-gluing scenarios
    const Weights w6({1, 1, 1, 1, 4, 4});
    CHECK(ci_h0q(w6, {8, 4, 4}, 0, 2) == 35);
    CHECK(ci_h0q(w6, {4, 8, 8}, 0, 2) == 199);
    CHECK(ci_h0q(w6, {8, 4}, 0, 3) == 1);

    CHECK_THROWS_AS(ci_h0q(w, {8, 8}, 0, 3), Error);
}

TEST_CASE("surface assembly from chi and h02") {
    {
        const SurfaceInvariants s = surface_from_chi_h02(1376, 199);
        CHECK(s.diamond.at(1, 1) == 976);
        CHECK(s.tau == -576);
        CHECK(s.b == std::array<Integer, 5>{1, 0, 1374, 0, 1});
        CHECK(s.diamond.symmetric());
        CHECK(hodge_signature(s.diamond) == s.tau);
    }
    {
        const SurfaceInvariants s = surface_from_chi_h02(304, 35);
        CHECK(s.diamond.at(1, 1) == 232);
        CHECK(s.tau == -160);
    }
    {
        const SurfaceInvariants s = surface_from_chi_h02(4, 0);
        CHECK(s.diamond.at(1, 1) == 2);
        CHECK(s.tau == 0);
    }
    CHECK_THROWS_AS(surface_from_chi_h02(3, 1), InconsistencyError);
}

TEST_CASE("Calabi-Yau threefold Betti vector") {
    CHECK(cy3_betti(-296, 1) == std::array<Integer, 7>{1, 0, 1, 300, 1, 0, 1});
    CHECK(cy3_betti(0, 5) == std::array<Integer, 7>{1, 0, 5, 12, 5, 0, 1});
    CHECK_THROWS_AS(cy3_betti(-295, 1), InconsistencyError);
    CHECK_THROWS_AS(cy3_betti(300, 1), InconsistencyError); // h21 would be negative
}

TEST_CASE("signature by the signed diamond sum") {
    // the (35, 232, 35) surface
    HodgeDiamond s1(2);
    s1.at(0, 0) = 1;
    s1.at(2, 2) = 1;
    s1.at(2, 0) = 35;
    s1.at(0, 2) = 35;
    s1.at(1, 1) = 232;
    CHECK(hodge_signature(s1) == -160);

    // the projective plane
    HodgeDiamond p2(2);
    p2.at(0, 0) = p2.at(1, 1) = p2.at(2, 2) = 1;
    CHECK(hodge_signature(p2) == 1);

    HodgeDiamond odd(3);
    CHECK_THROWS_AS(hodge_signature(odd), DegreeError);
}

TEST_CASE("triangle row round trip") {
    const HodgeDiamond d = hypersurface_hodge(Weights({1, 1, 1, 1, 4, 4}), 8);
    CHECK(HodgeDiamond::from_triangle_rows(d.triangle_rows()) == d);

    CHECK_THROWS_AS(HodgeDiamond::from_triangle_rows({{1}, {0, 0}}), ParseError);
    // asymmetric diamond rejected
    CHECK_THROWS_AS(HodgeDiamond::from_triangle_rows({{1}, {1, 0}, {1}}), ParseError);
}
