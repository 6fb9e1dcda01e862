#include "spin7/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "spin7/errors.hpp"

namespace spin7 {

PowerSeries::PowerSeries(std::vector<Integer> coeffs, RationalSeriesSpec spec)
    : coeffs_(std::move(coeffs)), spec_(std::move(spec)) {
    if (coeffs_.empty())
        throw Error("power series needs at least the constant coefficient");
}

const Integer& PowerSeries::coefficient(long long m) const {
    if (m < 0 || m > order()) {
        std::ostringstream os;
        os << "coefficient " << m << " beyond truncation order " << order();
        throw SeriesRangeError(os.str());
    }
    return coeffs_[static_cast<std::size_t>(m)];
}

namespace {

void cancel_common(std::vector<long long>& num, std::vector<long long>& den) {
    std::sort(num.begin(), num.end());
    std::sort(den.begin(), den.end());
    std::vector<long long> n2, d2;
    std::size_t i = 0, j = 0;
    while (i < num.size() && j < den.size()) {
        if (num[i] == den[j]) {
            ++i;
            ++j;
        } else if (num[i] < den[j]) {
            n2.push_back(num[i++]);
        } else {
            d2.push_back(den[j++]);
        }
    }
    n2.insert(n2.end(), num.begin() + static_cast<long>(i), num.end());
    d2.insert(d2.end(), den.begin() + static_cast<long>(j), den.end());
    num = std::move(n2);
    den = std::move(d2);
}

} // namespace

PowerSeries expand(RationalSeriesSpec spec) {
    for (long long e : spec.numerator)
        if (e < 1)
            throw ParseError("numerator exponents must be >= 1");
    for (long long a : spec.denominator)
        if (a < 1)
            throw ParseError("denominator exponents must be >= 1");

    const long long socle =
        std::accumulate(spec.numerator.begin(), spec.numerator.end(), 0LL);
    const long long order = spec.truncation_order < 0 ? socle : spec.truncation_order;
    spec.truncation_order = order;

    const std::size_t n = static_cast<std::size_t>(order) + 1;
    std::vector<Integer> c(n, Integer(0));
    if (spec.zero_function)
        return PowerSeries(std::move(c), std::move(spec));

    auto num = spec.numerator;
    auto den = spec.denominator;
    cancel_common(num, den);

    c[0] = 1;
    for (long long e : num) {
        // multiply by (1 - t^e)
        for (long long m = order; m >= e; --m)
            c[static_cast<std::size_t>(m)] -= c[static_cast<std::size_t>(m - e)];
    }
    for (long long a : den) {
        // divide by (1 - t^a): prefix sums with stride a
        for (long long m = a; m <= order; ++m)
            c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - a)];
    }
    return PowerSeries(std::move(c), std::move(spec));
}

RationalSeriesSpec jacobian_spec(const Weights& w, long long degree) {
    RationalSeriesSpec spec;
    for (long long a : w.values()) {
        const long long e = degree - a;
        if (e < 0) {
            std::ostringstream os;
            os << "weight " << a << " exceeds the degree " << degree
               << ": no partial derivative of that degree exists";
            throw DegeneratePartialError(os.str());
        }
        if (e == 0) {
            // degree-0 partial: a unit enters the ideal and the ring collapses
            spec.zero_function = true;
            continue;
        }
        spec.numerator.push_back(e);
    }
    spec.denominator = w.values();
    cancel_common(spec.numerator, spec.denominator);
    return spec;
}

} // namespace spin7
