#include "spin7/chern.hpp"

#include <sstream>

#include "spin7/errors.hpp"

namespace spin7 {

Integer euler_ci(int ambient_dim, const std::vector<long long>& degrees) {
    const int n = ambient_dim;
    const int k = static_cast<int>(degrees.size());
    if (n < 0)
        throw Error("ambient dimension must be nonnegative");
    if (k > n)
        throw Error("more defining equations than the ambient dimension");
    for (long long d : degrees)
        if (d < 1)
            throw Error("degrees must be positive");

    const int top = n - k;
    // (1+h)^(n+1) truncated
    std::vector<Integer> c(static_cast<std::size_t>(top) + 1, Integer(0));
    Integer binom = 1;
    for (int j = 0; j <= top; ++j) {
        c[static_cast<std::size_t>(j)] = binom;
        binom = binom * (n + 1 - j) / (j + 1);
    }
    // divide by each (1 + d h)
    for (long long d : degrees)
        for (int m = 1; m <= top; ++m)
            c[static_cast<std::size_t>(m)] -= d * c[static_cast<std::size_t>(m - 1)];

    Integer chi = c[static_cast<std::size_t>(top)];
    for (long long d : degrees)
        chi *= d;
    return chi;
}

Integer branched_euler(const Integer& chi_cover, const Integer& chi_branch, long long sheets) {
    if (sheets < 2)
        throw Error("a branched cover needs at least two sheets");
    const Integer v = chi_cover + (sheets - 1) * chi_branch;
    if (v % sheets != 0) {
        std::ostringstream os;
        os << "branched covering formula is not integral: (" << chi_cover << " + "
           << (sheets - 1) << "*" << chi_branch << ") / " << sheets
           << "; the branch data is wrong";
        throw InconsistencyError(os.str());
    }
    return v / sheets;
}

Integer euler_wps(const Weights& w) {
    return Integer(static_cast<long long>(w.count()));
}

} // namespace spin7
