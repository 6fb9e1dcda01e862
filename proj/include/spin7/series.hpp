#pragma once

#include <vector>

#include "spin7/numeric.hpp"
#include "spin7/wps.hpp"

namespace spin7 {

/// Truncated expansion data for prod(1 - t^e_i) / prod(1 - t^a_j).
/// All exponents are >= 1. truncation_order < 0 selects the default: the sum
/// of the numerator exponents (the socle degree of a complete-intersection
/// quotient), so top-degree queries never truncate early. An explicit order
/// is honored exactly.
struct RationalSeriesSpec {
    std::vector<long long> numerator;
    std::vector<long long> denominator;
    long long truncation_order = -1;
    /// Set when the represented graded ring is zero (a unit entered the
    /// ideal); the expansion is identically 0.
    bool zero_function = false;
};

/// Exact integer coefficients c_0..c_N together with the generating spec.
class PowerSeries {
public:
    PowerSeries(std::vector<Integer> coeffs, RationalSeriesSpec spec);

    /// c_m for 0 <= m <= order(); larger m throws SeriesRangeError
    /// (re-expand with a larger truncation order instead of guessing).
    const Integer& coefficient(long long m) const;

    long long order() const { return static_cast<long long>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coefficients() const { return coeffs_; }
    const RationalSeriesSpec& spec() const { return spec_; }

private:
    std::vector<Integer> coeffs_;
    RationalSeriesSpec spec_;
};

/// Expand the rational function exactly to the truncation order.
/// Common numerator/denominator factors cancel (as multisets) first.
PowerSeries expand(RationalSeriesSpec spec);

/// Hilbert-series spec of the Jacobian ring of a diagonal weighted
/// hypersurface of the given degree: numerator exponents d - a_i against
/// denominator a_i, with equal factors cancelled. A weight equal to d makes a
/// partial derivative a unit, so the quotient ring is zero (zero_function);
/// a weight above d has no monomial of degree d and throws
/// DegeneratePartialError. Validity assumes the partials form a regular
/// sequence, which holds for diagonal members.
RationalSeriesSpec jacobian_spec(const Weights& w, long long degree);

} // namespace spin7
