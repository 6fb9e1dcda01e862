#include <doctest.h>

#include <random>

#include "spin7/errors.hpp"
#include "spin7/series.hpp"

using namespace spin7;

namespace {

std::vector<long long> coeffs_ll(const PowerSeries& s) {
    std::vector<long long> out;
    for (const auto& c : s.coefficients())
        out.push_back(static_cast<long long>(c));
    return out;
}

} // namespace

TEST_CASE("Jacobian-ring series of the degree-8 threefold") {
    const PowerSeries s = expand({{7, 7, 7, 7}, {1, 1, 1, 1}, 8});
    CHECK(coeffs_ll(s) == std::vector<long long>{1, 4, 10, 20, 35, 56, 84, 116, 149});
}

TEST_CASE("coordinate-ring series of the (8,8) surface") {
    const PowerSeries s = expand({{8, 8}, {1, 1, 1, 1, 4}, 8});
    CHECK(s.coefficient(8) == 199);
    CHECK(s.coefficient(0) == 1);
}

TEST_CASE("geometric series and empty numerator") {
    const PowerSeries s = expand({{}, {1}, 6});
    for (long long m = 0; m <= 6; ++m)
        CHECK(s.coefficient(m) == 1);
}

TEST_CASE("coefficient bounds") {
    const PowerSeries s = expand({{7, 7, 7, 7}, {1, 1, 1, 1}, 8});
    CHECK(s.order() == 8);
    CHECK_THROWS_AS(s.coefficient(9), SeriesRangeError);
    CHECK_THROWS_AS(s.coefficient(-1), SeriesRangeError);
    CHECK(s.coefficient(7) == 116); // C(10,3) - 4
}

TEST_CASE("default truncation reaches the socle") {
    const PowerSeries s = expand({{7, 7, 7, 7}, {1, 1, 1, 1}, -1});
    CHECK(s.order() == 28);
    CHECK(s.coefficient(24) == 1); // socle of the quotient ring
    CHECK(s.coefficient(25) == 0);
    CHECK(s.coefficient(12) == 231);
}

TEST_CASE("jacobian specs") {
    {
        const auto spec = jacobian_spec(Weights({1, 1, 1, 1, 4}), 8);
        CHECK(spec.numerator == std::vector<long long>{7, 7, 7, 7});
        CHECK(spec.denominator == std::vector<long long>{1, 1, 1, 1});
        CHECK_FALSE(spec.zero_function);
    }
    {
        const auto spec = jacobian_spec(Weights({1, 1, 1, 1, 4, 4}), 8);
        CHECK(spec.numerator == std::vector<long long>{7, 7, 7, 7});
        CHECK(spec.denominator == std::vector<long long>{1, 1, 1, 1});
    }
    {
        const auto spec = jacobian_spec(Weights({1, 1, 1, 1}), 4);
        CHECK(spec.numerator == std::vector<long long>{3, 3, 3, 3});
        CHECK(spec.denominator == std::vector<long long>{1, 1, 1, 1});
    }
    {
        // a weight equal to the degree collapses the quotient ring
        const auto spec = jacobian_spec(Weights({1, 1, 1, 1, 4, 4}), 4);
        CHECK(spec.zero_function);
        const PowerSeries s = expand(spec);
        CHECK(s.coefficient(0) == 0);
    }
    CHECK_THROWS_AS(jacobian_spec(Weights({1, 1, 5}), 4), DegeneratePartialError);
}

TEST_CASE("appending a numerator factor equals subtracting the shifted series") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long long> exp(1, 6);
    std::uniform_int_distribution<int> nnum(0, 3), nden(1, 4);
    for (int trial = 0; trial < 25; ++trial) {
        RationalSeriesSpec base;
        for (int i = nnum(rng); i > 0; --i)
            base.numerator.push_back(exp(rng));
        for (int i = nden(rng); i > 0; --i)
            base.denominator.push_back(exp(rng));
        base.truncation_order = 18;
        const long long e = exp(rng);

        RationalSeriesSpec extended = base;
        extended.numerator.push_back(e);

        const PowerSeries b = expand(base);
        const PowerSeries x = expand(extended);
        for (long long m = 0; m <= 18; ++m) {
            const Integer shifted = m >= e ? b.coefficient(m - e) : Integer(0);
            CHECK(x.coefficient(m) == b.coefficient(m) - shifted);
        }
    }
}

TEST_CASE("quotient-ring coefficients stay nonnegative") {
    // distinct regular degrees against at least as many denominator factors
    std::mt19937 rng(31);
    std::uniform_int_distribution<long long> den(1, 4);
    for (int trial = 0; trial < 20; ++trial) {
        RationalSeriesSpec spec;
        spec.denominator = {den(rng), den(rng), den(rng), den(rng)};
        // numerator degrees chosen as products so each factor divides out cleanly
        spec.numerator = {spec.denominator[0] * 2, spec.denominator[1] * 3};
        spec.truncation_order = 25;
        const PowerSeries s = expand(spec);
        CHECK(s.coefficient(0) == 1);
        for (long long m = 0; m <= 25; ++m)
            CHECK(s.coefficient(m) >= 0);
    }
}

TEST_CASE("re-expansion agrees on the common prefix") {
    const RationalSeriesSpec small{{8, 8}, {1, 1, 1, 1, 4}, 10};
    RationalSeriesSpec large = small;
    large.truncation_order = 40;
    const PowerSeries a = expand(small);
    const PowerSeries b = expand(large);
    for (long long m = 0; m <= a.order(); ++m)
        CHECK(a.coefficient(m) == b.coefficient(m));
}

TEST_CASE("cancellation does not change the expansion") {
    const PowerSeries plain = expand({{7, 7, 7, 7}, {1, 1, 1, 1}, 12});
    const PowerSeries cancelled = expand({{7, 7, 7, 7, 4}, {1, 1, 1, 1, 4}, 12});
    CHECK(plain.coefficients() == cancelled.coefficients());
}
