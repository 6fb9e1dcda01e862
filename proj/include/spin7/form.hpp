#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "spin7/linalg.hpp"
#include "spin7/numeric.hpp"

namespace spin7 {

/// Strictly increasing indices from {1..8}; length equals the form degree.
using IndexTuple = std::vector<int>;

/// Exterior form on an oriented 8-dimensional real vector space with exact
/// rational coefficients, stored sparsely. An absent key is a zero coefficient.
class Form {
public:
    explicit Form(int degree);

    static Form basis(std::initializer_list<int> indices);
    static Form scalar(const Rational& c); // degree 0

    int degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t term_count() const { return coeffs_.size(); }

    /// Coefficient on a sorted index tuple (0 if absent).
    Rational coefficient(const IndexTuple& idx) const;

    /// Accumulate c on an index tuple in any order; sorting supplies the sign,
    /// repeated indices annihilate the term.
    void add_term(IndexTuple idx, const Rational& c);

    const std::map<IndexTuple, Rational>& terms() const { return coeffs_; }

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator-() const;
    Form operator*(const Rational& s) const;
    bool operator==(const Form& o) const;

    std::string to_string() const;

private:
    int degree_;
    std::map<IndexTuple, Rational> coeffs_;
};

Form operator*(const Rational& s, const Form& f);

/// Linear map of R^8 given by its action on coordinates: (m v)_i = sum_j m(i,j) v_j.
class LinearMap8 {
public:
    LinearMap8(); // zero map

    static LinearMap8 identity();
    /// images[i] describes row i+1 as the pair (source index 1..8, sign).
    static LinearMap8 signed_permutation(const std::array<std::pair<int, int>, 8>& images);
    static LinearMap8 elementary(int i, int j); // E_ij, 1-based

    Rational& at(int i, int j);             // 1-based
    const Rational& at(int i, int j) const; // 1-based

    LinearMap8 operator*(const LinearMap8& o) const; // composition
    LinearMap8 operator-() const;
    LinearMap8 power(int n) const; // n >= 0
    bool operator==(const LinearMap8& o) const;

    Rational determinant() const;
    bool invertible() const { return determinant() != 0; }

private:
    std::array<std::array<Rational, 8>, 8> m_;
};

/// Graded-commutative exterior product. Throws DegreeError past degree 8.
Form wedge(const Form& f, const Form& g);

/// Pullback along a linear map; functorial: pullback(f, a*b) = pullback(pullback(f, a), b).
Form pullback(const Form& f, const LinearMap8& a);

/// Derivation action L_A f = d/dt|_0 pullback(f, exp(tA)), computed
/// algebraically by substituting A into one slot at a time.
Form derivation_action(const Form& f, const LinearMap8& a);

/// Hodge star of a 4-form for the inner product making theta^1..theta^8
/// orthonormal, standard orientation. Involutive in the middle degree.
Form hodge_star4(const Form& f);

/// Inner product in which the basis monomials theta^I are orthonormal.
Rational inner(const Form& f, const Form& g);

/// All degree-4 index tuples in lexicographic order (the coordinate system
/// used by dense_coords4).
const std::vector<IndexTuple>& degree4_tuples();

/// Coefficient vector of a 4-form in the 70-dimensional monomial basis.
RationalVector dense_coords4(const Form& f);

} // namespace spin7
