#pragma once

#include <cstddef>
#include <vector>

#include "spin7/numeric.hpp"

namespace spin7 {

using RationalVector = std::vector<Rational>;

Rational dot(const RationalVector& a, const RationalVector& b);

/// Row space of rational vectors kept in reduced echelon form.
/// insert() returns true when the vector enlarged the span.
class RationalEchelon {
public:
    explicit RationalEchelon(std::size_t width);

    bool insert(RationalVector v);

    /// Residual of v after reduction against the stored rows.
    RationalVector reduce(RationalVector v) const;

    bool contains(const RationalVector& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }

private:
    std::size_t width_;
    std::vector<RationalVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Rank by fraction-free (Bareiss) elimination over exact integers.
/// Rational input rows are cleared to integers row by row first.
std::size_t fraction_free_rank(const std::vector<RationalVector>& rows);

/// Basis of {c : sum_i c_i rows[i] = 0}.
std::vector<RationalVector> left_nullspace(const std::vector<RationalVector>& rows);

/// Gram-Schmidt without normalization; dependent input rows are dropped,
/// so the result is a pairwise-orthogonal basis of the row span.
std::vector<RationalVector> orthogonal_basis(const std::vector<RationalVector>& rows);

/// Orthogonal projection of v onto the span of a pairwise-orthogonal basis.
RationalVector project_onto_span(const std::vector<RationalVector>& basis,
                                 const RationalVector& v);

} // namespace spin7
