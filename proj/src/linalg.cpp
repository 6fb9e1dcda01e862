#include "spin7/linalg.hpp"

#include <stdexcept>

#include "spin7/errors.hpp"

namespace spin7 {

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size())
        throw Error("dot: vector sizes differ");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            s += a[i] * b[i];
    return s;
}

RationalEchelon::RationalEchelon(std::size_t width) : width_(width) {}

RationalVector RationalEchelon::reduce(RationalVector v) const {
    if (v.size() != width_)
        throw Error("reduce: wrong vector width");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[pivots_[r]];
        if (c != 0) {
            const Rational f = c; // pivot entries are normalized to 1
            for (std::size_t j = 0; j < width_; ++j)
                if (rows_[r][j] != 0)
                    v[j] -= f * rows_[r][j];
        }
    }
    return v;
}

bool RationalEchelon::insert(RationalVector v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < width_ && v[p] == 0)
        ++p;
    if (p == width_)
        return false;
    const Rational inv = v[p];
    for (auto& x : v)
        if (x != 0)
            x /= inv;
    // back-substitute into existing rows to keep the form reduced
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational f = rows_[r][p];
        if (f != 0)
            for (std::size_t j = 0; j < width_; ++j)
                if (v[j] != 0)
                    rows_[r][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool RationalEchelon::contains(const RationalVector& v) const {
    RationalVector r = reduce(v);
    for (const auto& x : r)
        if (x != 0)
            return false;
    return true;
}

namespace {

std::vector<Integer> clear_denominators(const RationalVector& row) {
    Integer l = 1;
    for (const auto& q : row)
        l = boost::multiprecision::lcm(l, denominator_of(q));
    std::vector<Integer> out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j)
        out[j] = numerator_of(row[j]) * (l / denominator_of(row[j]));
    return out;
}

} // namespace

std::size_t fraction_free_rank(const std::vector<RationalVector>& rows) {
    if (rows.empty())
        return 0;
    std::vector<std::vector<Integer>> m;
    m.reserve(rows.size());
    for (const auto& r : rows)
        m.push_back(clear_denominators(r));
    const std::size_t nr = m.size(), nc = m[0].size();

    Integer prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t piv = rank;
        while (piv < nr && m[piv][col] == 0)
            ++piv;
        if (piv == nr)
            continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t i = rank + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j) {
                Integer t = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
                m[i][j] = t / prev; // exact by the Bareiss identity
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

std::vector<RationalVector> left_nullspace(const std::vector<RationalVector>& rows) {
    const std::size_t nr = rows.size();
    if (nr == 0)
        return {};
    const std::size_t nc = rows[0].size();
    // Eliminate [rows | I]; combinations that zero the left block live in the right block.
    std::vector<RationalVector> m(nr, RationalVector(nc + nr, Rational(0)));
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j)
            m[i][j] = rows[i][j];
        m[i][nc + i] = 1;
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t piv = rank;
        while (piv < nr && m[piv][col] == 0)
            ++piv;
        if (piv == nr)
            continue;
        std::swap(m[rank], m[piv]);
        const Rational inv = m[rank][col];
        for (auto& x : m[rank])
            if (x != 0)
                x /= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == rank || m[i][col] == 0)
                continue;
            const Rational f = m[i][col];
            for (std::size_t j = 0; j < nc + nr; ++j)
                if (m[rank][j] != 0)
                    m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    std::vector<RationalVector> kernel;
    for (std::size_t i = rank; i < nr; ++i)
        kernel.emplace_back(m[i].begin() + static_cast<long>(nc), m[i].end());
    return kernel;
}

std::vector<RationalVector> orthogonal_basis(const std::vector<RationalVector>& rows) {
    std::vector<RationalVector> basis;
    for (const auto& row : rows) {
        RationalVector v = row;
        for (const auto& u : basis) {
            const Rational c = dot(v, u) / dot(u, u);
            if (c != 0)
                for (std::size_t j = 0; j < v.size(); ++j)
                    if (u[j] != 0)
                        v[j] -= c * u[j];
        }
        bool zero = true;
        for (const auto& x : v)
            if (x != 0) {
                zero = false;
                break;
            }
        if (!zero)
            basis.push_back(std::move(v));
    }
    return basis;
}

RationalVector project_onto_span(const std::vector<RationalVector>& basis,
                                 const RationalVector& v) {
    RationalVector p(v.size(), Rational(0));
    for (const auto& u : basis) {
        const Rational c = dot(v, u) / dot(u, u);
        if (c != 0)
            for (std::size_t j = 0; j < v.size(); ++j)
                if (u[j] != 0)
                    p[j] += c * u[j];
    }
    return p;
}

} // namespace spin7
