#pragma once

#include <vector>

#include "spin7/numeric.hpp"
#include "spin7/wps.hpp"

namespace spin7 {

/// Euler characteristic of a smooth complete intersection of the given
/// multidegree in P^n: (prod d_i) times the coefficient of h^(n-k) in
/// (1+h)^(n+1) / prod(1 + d_i h), extracted by exact truncated division.
Integer euler_ci(int ambient_dim, const std::vector<long long>& degrees);

/// Euler characteristic downstairs for a degree-m cover branched over a
/// locus meeting the subvariety in chi_branch:
/// chi = (chi_cover + (m-1) chi_branch) / m, which must be an integer.
Integer branched_euler(const Integer& chi_cover, const Integer& chi_branch, long long sheets);

/// chi of a weighted projective space: n+1, like ordinary P^n.
Integer euler_wps(const Weights& w);

} // namespace spin7
