#pragma once

#include <array>
#include <vector>

#include "spin7/numeric.hpp"
#include "spin7/series.hpp"
#include "spin7/wps.hpp"

namespace spin7 {

/// Hodge numbers h^{p,q} of a compact complex n-fold, dense (n+1)x(n+1).
class HodgeDiamond {
public:
    explicit HodgeDiamond(int n);

    int dim() const { return n_; }
    Integer& at(int p, int q);
    const Integer& at(int p, int q) const;

    /// Conjugation symmetry h^{p,q} = h^{q,p} and duality h^{p,q} = h^{n-p,n-q}.
    bool symmetric() const;

    Integer betti(int k) const; // sum over p+q = k
    std::vector<Integer> betti_vector() const;
    Integer euler() const;

    bool operator==(const HodgeDiamond& o) const;

    /// Rows of the printed triangle: row k lists h^{k,0}..h^{0,k} (k <= n),
    /// then mirrored; used by scenario files and the CLI.
    std::vector<std::vector<Integer>> triangle_rows() const;
    static HodgeDiamond from_triangle_rows(const std::vector<std::vector<Integer>>& rows);

private:
    int n_;
    std::vector<Integer> h_;
};

/// Hodge diamond of a quasismooth hypersurface of the given degree via the
/// graded pieces of its Jacobian ring: off the middle row the diamond is that
/// of projective space; on the middle row h^{p,q} = dim R(f)_{qd+alpha} with
/// alpha = d - sum(weights), plus 1 on the diagonal.
HodgeDiamond hypersurface_hodge(const Weights& w, long long degree);

/// dim H^q(X, O_X(m)) for a well-formed quasismooth complete intersection cut
/// by the given degrees: A_m for q = 0, zero strictly between, A_{alpha-m} at
/// q = dim X, where A is the coordinate ring of the intersection and
/// alpha = sum(degrees) - sum(weights).
Integer ci_h0q(const Weights& w, const std::vector<long long>& degrees,
               long long twist, int q);

struct SurfaceInvariants {
    Integer chi;
    Integer tau;
    std::array<Integer, 5> b;
    HodgeDiamond diamond{2};
};

/// Close the diamond of a surface with b1 = 0 from its Euler characteristic
/// and h^{0,2}; the signature comes out of the signed diamond sum.
SurfaceInvariants surface_from_chi_h02(const Integer& chi, const Integer& h02);

/// Betti vector (b0..b6) of a Calabi-Yau threefold from chi and h^{1,1}.
std::array<Integer, 7> cy3_betti(const Integer& chi, const Integer& h11);

/// Signature of a smooth Kahler even-fold: sum of (-1)^q h^{p,q}.
Integer hodge_signature(const HodgeDiamond& d);

} // namespace spin7
