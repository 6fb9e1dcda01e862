#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spin7/numeric.hpp"

namespace spin7 {

/// Weight vector (a_0,...,a_n) of a weighted projective space.
/// Construction enforces n >= 1, positivity and gcd(a_0,...,a_n) = 1.
class Weights {
public:
    explicit Weights(std::vector<long long> a);

    const std::vector<long long>& values() const { return a_; }
    std::size_t count() const { return a_.size(); }
    long long sum() const;
    long long at(std::size_t i) const { return a_[i]; }

    bool operator==(const Weights& o) const { return a_ == o.a_; }
    std::string to_string() const;

private:
    std::vector<long long> a_;
};

/// A maximal index set on which a cyclic group acts, with the residual
/// action weights on the remaining coordinates.
struct SingularStratum {
    std::vector<std::size_t> support; // indices into the weight vector
    long long group_order = 1;        // gcd of the supported weights, > 1
    std::vector<long long> action_weights; // a_j mod group_order, j outside the support
};

/// gcd of every n-subset of the n+1 weights equals 1.
bool is_well_formed(const Weights& w);

/// Divide out common factors of n-subsets until well-formed; idempotent.
Weights normalize(const Weights& w);

/// All maximal index subsets with gcd > 1, with group order and residual
/// action weights. Pairwise incomparable supports; empty for unit weights.
std::vector<SingularStratum> singular_strata(const Weights& w);

/// True iff the stratum is a Z_4 acting by a single unit scalar on the four
/// residual coordinates (the resolvable local model).
bool is_scalar_z4_action(const SingularStratum& s);

/// Restriction of a weighted-homogeneous polynomial to a stratum in one or
/// two stratum variables. For two variables x, y the entry coeffs[j] is the
/// coefficient of x^j y^(D-j); for one variable the single entry is the
/// coefficient of x^D.
struct StratumForm {
    int variables = 2; // 1 or 2
    std::vector<Rational> coeffs;
};

/// Number of distinct zeros of the restriction on the stratum: for a P^1
/// stratum the degree of the squarefree part (plus the zero at infinity when
/// the leading coefficient vanishes); for a point stratum 1 iff the
/// restriction vanishes identically. Three or more variables are unsupported.
int count_stratum_points(const StratumForm& f);

/// Named assertion with the provenance of its truth.
struct Assertion {
    bool value = false;
    std::string source;
};

/// Input data of one building block: the degrees of the regular sequence,
/// split into the complete-intersection part (the last entry cuts the
/// anticanonical divisor) and the extra surface-cutting degree, plus the
/// geometric assertions that are carried, not computed.
struct ConstructionConfig {
    Weights weights{std::vector<long long>{1, 1}};
    std::vector<long long> ci_degrees; // d_1..d_k
    long long s_degree = 0;            // d_{k+1}
    Assertion quasismooth;
    Assertion d_smooth;
    Assertion s_smooth;
    Assertion involution_free_on_d_and_s;
    Assertion fixed_locus_is_singular_locus;
};

struct ConditionCheck {
    int id = 0;
    std::string description;
    enum class Status { Pass, Fail, Asserted } status = Status::Asserted;
    std::string detail;
};

/// Evaluate the combinatorially checkable construction conditions
/// (degree-sum anticanonical condition and the matching surface degree);
/// the geometric conditions are echoed from the assertion flags.
std::vector<ConditionCheck> check_conditions(const ConstructionConfig& c);

/// Diagonal members sum z_i^(d/a_i) exist and are quasismooth exactly when
/// every weight divides the degree.
bool fermat_quasismooth(const Weights& w, long long degree);

} // namespace spin7
