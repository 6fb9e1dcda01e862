#include "spin7/cohomology.hpp"

#include <numeric>
#include <sstream>

#include "spin7/errors.hpp"

namespace spin7 {

HodgeDiamond::HodgeDiamond(int n) : n_(n) {
    if (n < 0)
        throw Error("negative complex dimension");
    h_.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), Integer(0));
}

Integer& HodgeDiamond::at(int p, int q) {
    if (p < 0 || q < 0 || p > n_ || q > n_)
        throw Error("Hodge index out of range");
    return h_[static_cast<std::size_t>(p) * static_cast<std::size_t>(n_ + 1) +
              static_cast<std::size_t>(q)];
}

const Integer& HodgeDiamond::at(int p, int q) const {
    return const_cast<HodgeDiamond*>(this)->at(p, q);
}

bool HodgeDiamond::symmetric() const {
    for (int p = 0; p <= n_; ++p)
        for (int q = 0; q <= n_; ++q) {
            if (at(p, q) != at(q, p))
                return false;
            if (at(p, q) != at(n_ - p, n_ - q))
                return false;
        }
    return true;
}

Integer HodgeDiamond::betti(int k) const {
    Integer b = 0;
    for (int p = 0; p <= n_; ++p) {
        const int q = k - p;
        if (q >= 0 && q <= n_)
            b += at(p, q);
    }
    return b;
}

std::vector<Integer> HodgeDiamond::betti_vector() const {
    std::vector<Integer> b;
    for (int k = 0; k <= 2 * n_; ++k)
        b.push_back(betti(k));
    return b;
}

Integer HodgeDiamond::euler() const {
    Integer chi = 0;
    for (int p = 0; p <= n_; ++p)
        for (int q = 0; q <= n_; ++q)
            chi += ((p + q) % 2 == 0) ? at(p, q) : -at(p, q);
    return chi;
}

bool HodgeDiamond::operator==(const HodgeDiamond& o) const {
    return n_ == o.n_ && h_ == o.h_;
}

std::vector<std::vector<Integer>> HodgeDiamond::triangle_rows() const {
    std::vector<std::vector<Integer>> rows;
    for (int k = 0; k <= 2 * n_; ++k) {
        std::vector<Integer> row;
        for (int p = std::min(k, n_); p >= std::max(0, k - n_); --p)
            row.push_back(at(p, k - p));
        rows.push_back(std::move(row));
    }
    return rows;
}

HodgeDiamond HodgeDiamond::from_triangle_rows(const std::vector<std::vector<Integer>>& rows) {
    if (rows.empty() || rows.size() % 2 == 0)
        throw ParseError("diamond needs 2n+1 triangle rows");
    const int n = static_cast<int>(rows.size() / 2);
    HodgeDiamond d(n);
    for (int k = 0; k <= 2 * n; ++k) {
        const int top = std::min(k, n), bottom = std::max(0, k - n);
        if (static_cast<int>(rows[static_cast<std::size_t>(k)].size()) != top - bottom + 1) {
            std::ostringstream os;
            os << "diamond row " << k << " must have " << (top - bottom + 1) << " entries";
            throw ParseError(os.str());
        }
        int p = top;
        for (const auto& v : rows[static_cast<std::size_t>(k)]) {
            if (v < 0)
                throw ParseError("Hodge numbers must be nonnegative");
            d.at(p, k - p) = v;
            --p;
        }
    }
    if (!d.symmetric())
        throw ParseError("diamond violates conjugation or duality symmetry");
    return d;
}

HodgeDiamond hypersurface_hodge(const Weights& w, long long degree) {
    const int dim = static_cast<int>(w.count()) - 2;
    if (dim < 1)
        throw Error("hypersurface needs at least three weights");
    const long long alpha = degree - w.sum();

    RationalSeriesSpec spec = jacobian_spec(w, degree);
    spec.truncation_order = std::max<long long>(0, dim * degree + alpha);
    const PowerSeries series = expand(std::move(spec));

    HodgeDiamond d(dim);
    for (int p = 0; p <= dim; ++p)
        for (int q = 0; q <= dim; ++q)
            if (p + q != dim)
                d.at(p, q) = (p == q) ? 1 : 0;
    for (int q = 0; q <= dim; ++q) {
        const int p = dim - q;
        const long long m = q * degree + alpha;
        Integer v = (m >= 0 && m <= series.order()) ? series.coefficient(m) : Integer(0);
        if (p == q)
            v += 1;
        d.at(p, q) = v;
    }
    if (!d.symmetric())
        throw InconsistencyError("hypersurface diamond came out asymmetric");
    return d;
}

Integer ci_h0q(const Weights& w, const std::vector<long long>& degrees,
               long long twist, int q) {
    const int dim = static_cast<int>(w.count()) - 1 - static_cast<int>(degrees.size());
    if (dim < 1)
        throw Error("complete intersection dimension must be positive");
    if (q < 0 || q > dim)
        throw Error("cohomological degree out of range");
    if (q > 0 && q < dim)
        return 0;

    const long long alpha =
        std::accumulate(degrees.begin(), degrees.end(), 0LL) - w.sum();
    const long long m = (q == 0) ? twist : alpha - twist;
    if (m < 0)
        return 0;

    RationalSeriesSpec spec;
    spec.numerator = degrees;
    spec.denominator = w.values();
    spec.truncation_order = m;
    return expand(std::move(spec)).coefficient(m);
}

SurfaceInvariants surface_from_chi_h02(const Integer& chi, const Integer& h02) {
    if (h02 < 0)
        throw Error("h^{0,2} must be nonnegative");
    const Integer h11 = chi - 2 - 2 * h02;
    if (h11 < 0) {
        std::ostringstream os;
        os << "chi = " << chi << " and h^{0,2} = " << h02
           << " force negative h^{1,1} = " << h11;
        throw InconsistencyError(os.str());
    }
    SurfaceInvariants s;
    s.diamond = HodgeDiamond(2);
    s.diamond.at(0, 0) = 1;
    s.diamond.at(2, 2) = 1;
    s.diamond.at(2, 0) = h02;
    s.diamond.at(0, 2) = h02;
    s.diamond.at(1, 1) = h11;
    s.chi = chi;
    s.tau = 2 + 2 * h02 - h11;
    if (s.tau != hodge_signature(s.diamond))
        throw InconsistencyError("surface signature disagrees with the diamond sum");
    s.b = {Integer(1), Integer(0), 2 * h02 + h11, Integer(0), Integer(1)};
    if (s.diamond.euler() != chi)
        throw InconsistencyError("surface diamond does not reproduce chi");
    return s;
}

std::array<Integer, 7> cy3_betti(const Integer& chi, const Integer& h11) {
    if (chi % 2 != 0)
        throw InconsistencyError("Euler characteristic of a threefold must be even");
    const Integer h21 = h11 - chi / 2;
    if (h21 < 0 || h11 < 0)
        throw InconsistencyError("negative Hodge number from chi and h^{1,1}");
    return {Integer(1), Integer(0), h11, 2 + 2 * h21, h11, Integer(0), Integer(1)};
}

Integer hodge_signature(const HodgeDiamond& d) {
    if (d.dim() % 2 != 0)
        throw DegreeError("signature needs even complex dimension");
    Integer tau = 0;
    for (int p = 0; p <= d.dim(); ++p)
        for (int q = 0; q <= d.dim(); ++q)
            tau += (q % 2 == 0) ? d.at(p, q) : -d.at(p, q);
    return tau;
}

} // namespace spin7
