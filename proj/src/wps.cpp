#include "spin7/wps.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "spin7/errors.hpp"

namespace spin7 {

Weights::Weights(std::vector<long long> a) : a_(std::move(a)) {
    if (a_.size() < 2)
        throw ParseError("weights need at least two entries");
    long long g = 0;
    for (long long x : a_) {
        if (x <= 0)
            throw ParseError("weights must be positive");
        g = std::gcd(g, x);
    }
    if (g != 1)
        throw ParseError("weights must have gcd 1");
}

long long Weights::sum() const {
    return std::accumulate(a_.begin(), a_.end(), 0LL);
}

std::string Weights::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a_.size(); ++i)
        os << (i ? "," : "") << a_[i];
    os << ")";
    return os.str();
}

namespace {

long long gcd_omitting(const std::vector<long long>& a, std::size_t omit) {
    long long g = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (j != omit)
            g = std::gcd(g, a[j]);
    return g;
}

} // namespace

bool is_well_formed(const Weights& w) {
    for (std::size_t i = 0; i < w.count(); ++i)
        if (gcd_omitting(w.values(), i) != 1)
            return false;
    return true;
}

Weights normalize(const Weights& w) {
    std::vector<long long> a = w.values();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const long long q = gcd_omitting(a, i);
            if (q > 1) {
                for (std::size_t j = 0; j < a.size(); ++j)
                    if (j != i)
                        a[j] /= q;
                changed = true;
            }
        }
    }
    return Weights(a);
}

std::vector<SingularStratum> singular_strata(const Weights& w) {
    const auto& a = w.values();
    // Every subset with gcd g > 1 is contained in {i : g | a_i}, so the
    // supports of divisors of the weights exhaust the maximal candidates.
    std::set<long long> divisors;
    for (long long x : a)
        for (long long d = 2; d * d <= x; ++d)
            if (x % d == 0) {
                divisors.insert(d);
                divisors.insert(x / d);
            }
    for (long long x : a)
        if (x > 1)
            divisors.insert(x);

    std::set<std::vector<std::size_t>> supports;
    for (long long d : divisors) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] % d == 0)
                s.push_back(i);
        if (!s.empty())
            supports.insert(std::move(s));
    }

    std::vector<SingularStratum> out;
    for (const auto& s : supports) {
        bool maximal = true;
        for (const auto& t : supports)
            if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        if (!maximal)
            continue;
        SingularStratum st;
        st.support = s;
        long long m = 0;
        for (std::size_t i : s)
            m = std::gcd(m, a[i]);
        st.group_order = m;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!std::binary_search(s.begin(), s.end(), j))
                st.action_weights.push_back(a[j] % m);
        out.push_back(std::move(st));
    }
    return out;
}

bool is_scalar_z4_action(const SingularStratum& s) {
    if (s.group_order != 4 || s.action_weights.size() != 4)
        return false;
    const long long c = s.action_weights.front() % 4;
    if (std::gcd(c, 4LL) != 1)
        return false;
    for (long long x : s.action_weights)
        if (x % 4 != c)
            return false;
    return true;
}

namespace {

using Poly = std::vector<Rational>; // dense, index = exponent

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * Rational(static_cast<long long>(i)));
    trim(d);
    return d;
}

Poly remainder(Poly a, const Poly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Rational lead = a.back();
        for (auto& c : a)
            c /= lead;
    }
    return a;
}

} // namespace

int count_stratum_points(const StratumForm& f) {
    if (f.variables >= 3)
        throw UnsupportedStratumError("point counting supports at most two stratum variables");
    if (f.variables == 1) {
        // the restriction is c * x^D: the stratum point lies on the variety
        // exactly when the restriction vanishes
        for (const auto& c : f.coeffs)
            if (c != 0)
                return 0;
        return 1;
    }
    Poly p(f.coeffs.begin(), f.coeffs.end());
    const std::size_t homog_degree = f.coeffs.empty() ? 0 : f.coeffs.size() - 1;
    const bool root_at_infinity = f.coeffs.empty() || f.coeffs.back() == 0;
    trim(p);
    if (p.empty()) {
        if (f.coeffs.empty() || homog_degree == 0)
            throw UnsupportedStratumError("empty stratum form");
        throw InconsistencyError("restriction vanishes identically on a curve stratum");
    }
    if (p.size() == 1)
        return root_at_infinity ? 1 : 0; // constant: only x^0 y^D term(s) vanish at [1:0]
    const Poly g = poly_gcd(p, derivative(p));
    const std::size_t distinct_finite = (p.size() - 1) - (g.empty() ? 0 : g.size() - 1);
    return static_cast<int>(distinct_finite) + (root_at_infinity ? 1 : 0);
}

std::vector<ConditionCheck> check_conditions(const ConstructionConfig& c) {
    std::vector<ConditionCheck> out;

    const long long lhs = std::accumulate(c.ci_degrees.begin(), c.ci_degrees.end(), 0LL);
    const long long rhs = c.weights.sum();
    {
        ConditionCheck cc;
        cc.id = 1;
        cc.description = "sum of complete-intersection degrees equals sum of weights";
        cc.status = lhs == rhs ? ConditionCheck::Status::Pass : ConditionCheck::Status::Fail;
        std::ostringstream os;
        os << lhs << (lhs == rhs ? " = " : " != ") << rhs;
        cc.detail = os.str();
        out.push_back(std::move(cc));
    }

    auto echo = [&out](int id, std::string desc, const Assertion& a) {
        ConditionCheck cc;
        cc.id = id;
        cc.description = std::move(desc);
        cc.status = ConditionCheck::Status::Asserted;
        cc.detail = (a.value ? "asserted true" : "asserted FALSE") +
                    (a.source.empty() ? std::string() : " (" + a.source + ")");
        out.push_back(std::move(cc));
    };
    echo(2, "ambient complete intersection has only scalar-Z4 isolated singular points",
         c.quasismooth);
    echo(3, "anticanonical divisor is smooth and misses the singular points", c.d_smooth);

    {
        ConditionCheck cc;
        cc.id = 4;
        cc.description = "surface-cutting degree equals the divisor-cutting degree";
        const long long dk = c.ci_degrees.empty() ? 0 : c.ci_degrees.back();
        cc.status = c.s_degree == dk ? ConditionCheck::Status::Pass
                                     : ConditionCheck::Status::Fail;
        std::ostringstream os;
        os << c.s_degree << (c.s_degree == dk ? " = " : " != ") << dk;
        cc.detail = os.str();
        out.push_back(std::move(cc));
    }

    echo(5, "involution is real on the defining polynomials and free on divisor and surface",
         c.involution_free_on_d_and_s);
    echo(6, "fixed locus of the involution equals the singular locus",
         c.fixed_locus_is_singular_locus);
    return out;
}

bool fermat_quasismooth(const Weights& w, long long degree) {
    for (long long a : w.values())
        if (degree % a != 0)
            return false;
    return true;
}

} // namespace spin7
