#include "spin7/form.hpp"

#include <algorithm>
#include <sstream>

#include "spin7/errors.hpp"

namespace spin7 {

namespace {

// Sort in place by adjacent swaps; returns the permutation sign,
// 0 if an index repeats.
int sort_sign(IndexTuple& idx) {
    int sign = 1;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
            if (idx[j] == idx[j + 1])
                return 0;
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
            }
        }
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1])
            return 0;
    return sign;
}

void check_index_range(const IndexTuple& idx) {
    for (int i : idx)
        if (i < 1 || i > 8)
            throw Error("form index out of range 1..8");
}

} // namespace

Form::Form(int degree) : degree_(degree) {
    if (degree < 0 || degree > 8)
        throw DegreeError("form degree must be in 0..8");
}

Form Form::basis(std::initializer_list<int> indices) {
    Form f(static_cast<int>(indices.size()));
    f.add_term(IndexTuple(indices), Rational(1));
    return f;
}

Form Form::scalar(const Rational& c) {
    Form f(0);
    f.add_term({}, c);
    return f;
}

Rational Form::coefficient(const IndexTuple& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void Form::add_term(IndexTuple idx, const Rational& c) {
    if (static_cast<int>(idx.size()) != degree_)
        throw DegreeError("term length does not match form degree");
    if (c == 0)
        return;
    check_index_range(idx);
    const int sign = sort_sign(idx);
    if (sign == 0)
        return;
    Rational& slot = coeffs_[idx];
    slot += sign > 0 ? c : -c;
    if (slot == 0)
        coeffs_.erase(idx);
}

Form& Form::operator+=(const Form& o) {
    if (degree_ != o.degree_)
        throw DegreeError("cannot add forms of different degree");
    for (const auto& [idx, c] : o.coeffs_) {
        Rational& slot = coeffs_[idx];
        slot += c;
        if (slot == 0)
            coeffs_.erase(idx);
    }
    return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form Form::operator+(const Form& o) const {
    Form r = *this;
    r += o;
    return r;
}

Form Form::operator-(const Form& o) const {
    Form r = *this;
    r -= o;
    return r;
}

Form Form::operator-() const { return *this * Rational(-1); }

Form Form::operator*(const Rational& s) const {
    Form r(degree_);
    if (s == 0)
        return r;
    for (const auto& [idx, c] : coeffs_)
        r.coeffs_[idx] = c * s;
    return r;
}

bool Form::operator==(const Form& o) const {
    return degree_ == o.degree_ && coeffs_ == o.coeffs_;
}

std::string Form::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : coeffs_) {
        if (!first)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        first = false;
        const Rational a = c > 0 ? c : -c;
        if (a != 1 || idx.empty())
            os << a;
        if (!idx.empty()) {
            if (a != 1)
                os << "*";
            os << "theta^{";
            for (int i : idx)
                os << i;
            os << "}";
        }
    }
    return os.str();
}

Form operator*(const Rational& s, const Form& f) { return f * s; }

LinearMap8::LinearMap8() {
    for (auto& row : m_)
        row.fill(Rational(0));
}

LinearMap8 LinearMap8::identity() {
    LinearMap8 a;
    for (int i = 0; i < 8; ++i)
        a.m_[i][i] = 1;
    return a;
}

LinearMap8 LinearMap8::signed_permutation(const std::array<std::pair<int, int>, 8>& images) {
    LinearMap8 a;
    for (int i = 0; i < 8; ++i) {
        const auto& [src, sign] = images[i];
        a.m_[i][src - 1] = sign;
    }
    return a;
}

LinearMap8 LinearMap8::elementary(int i, int j) {
    LinearMap8 a;
    a.at(i, j) = 1;
    return a;
}

Rational& LinearMap8::at(int i, int j) { return m_[i - 1][j - 1]; }
const Rational& LinearMap8::at(int i, int j) const { return m_[i - 1][j - 1]; }

LinearMap8 LinearMap8::operator*(const LinearMap8& o) const {
    LinearMap8 r;
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            if (m_[i][k] == 0)
                continue;
            for (int j = 0; j < 8; ++j)
                if (o.m_[k][j] != 0)
                    r.m_[i][j] += m_[i][k] * o.m_[k][j];
        }
    return r;
}

LinearMap8 LinearMap8::operator-() const {
    LinearMap8 r;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            r.m_[i][j] = -m_[i][j];
    return r;
}

LinearMap8 LinearMap8::power(int n) const {
    if (n < 0)
        throw Error("negative power not supported");
    LinearMap8 r = identity();
    for (int i = 0; i < n; ++i)
        r = r * *this;
    return r;
}

bool LinearMap8::operator==(const LinearMap8& o) const { return m_ == o.m_; }

Rational LinearMap8::determinant() const {
    auto m = m_;
    Rational det = 1;
    for (int col = 0; col < 8; ++col) {
        int piv = col;
        while (piv < 8 && m[piv][col] == 0)
            ++piv;
        if (piv == 8)
            return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int i = col + 1; i < 8; ++i) {
            if (m[i][col] == 0)
                continue;
            const Rational f = m[i][col] / m[col][col];
            for (int j = col; j < 8; ++j)
                m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

Form wedge(const Form& f, const Form& g) {
    if (f.degree() + g.degree() > 8)
        throw DegreeError("wedge exceeds top degree 8");
    Form r(f.degree() + g.degree());
    for (const auto& [i1, c1] : f.terms())
        for (const auto& [i2, c2] : g.terms()) {
            IndexTuple idx = i1;
            idx.insert(idx.end(), i2.begin(), i2.end());
            r.add_term(std::move(idx), c1 * c2);
        }
    return r;
}

Form pullback(const Form& f, const LinearMap8& a) {
    // a^* theta^i = sum_j a(i,j) theta^j
    std::array<Form, 8> pulled{Form(1), Form(1), Form(1), Form(1),
                               Form(1), Form(1), Form(1), Form(1)};
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j)
            if (a.at(i, j) != 0)
                pulled[i - 1].add_term({j}, a.at(i, j));

    Form r(f.degree());
    for (const auto& [idx, c] : f.terms()) {
        Form term = Form::scalar(c);
        for (int i : idx)
            term = wedge(term, pulled[i - 1]);
        r += term;
    }
    return r;
}

Form derivation_action(const Form& f, const LinearMap8& a) {
    Form r(f.degree());
    for (const auto& [idx, c] : f.terms())
        for (std::size_t s = 0; s < idx.size(); ++s)
            for (int j = 1; j <= 8; ++j) {
                const Rational& m = a.at(idx[s], j);
                if (m != 0) {
                    IndexTuple t = idx;
                    t[s] = j;
                    r.add_term(std::move(t), c * m);
                }
            }
    return r;
}

Form hodge_star4(const Form& f) {
    if (f.degree() != 4)
        throw DegreeError("hodge_star4 requires a 4-form");
    Form r(4);
    for (const auto& [idx, c] : f.terms()) {
        IndexTuple comp;
        comp.reserve(4);
        for (int i = 1; i <= 8; ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end())
                comp.push_back(i);
        // sign of the permutation (idx, comp) relative to (1..8)
        IndexTuple whole = idx;
        whole.insert(whole.end(), comp.begin(), comp.end());
        int sign = sort_sign(whole);
        r.add_term(std::move(comp), sign > 0 ? c : -c);
    }
    return r;
}

Rational inner(const Form& f, const Form& g) {
    if (f.degree() != g.degree())
        throw DegreeError("inner product requires equal degrees");
    Rational s = 0;
    for (const auto& [idx, c] : f.terms()) {
        const Rational d = g.coefficient(idx);
        if (d != 0)
            s += c * d;
    }
    return s;
}

const std::vector<IndexTuple>& degree4_tuples() {
    static const std::vector<IndexTuple> tuples = [] {
        std::vector<IndexTuple> t;
        for (int a = 1; a <= 8; ++a)
            for (int b = a + 1; b <= 8; ++b)
                for (int c = b + 1; c <= 8; ++c)
                    for (int d = c + 1; d <= 8; ++d)
                        t.push_back({a, b, c, d});
        return t;
    }();
    return tuples;
}

RationalVector dense_coords4(const Form& f) {
    if (f.degree() != 4)
        throw DegreeError("dense_coords4 requires a 4-form");
    const auto& tuples = degree4_tuples();
    RationalVector v(tuples.size(), Rational(0));
    for (std::size_t k = 0; k < tuples.size(); ++k)
        v[k] = f.coefficient(tuples[k]);
    return v;
}

} // namespace spin7
