#include "spin7/cayley.hpp"

#include <sstream>

#include "spin7/errors.hpp"
#include "spin7/linalg.hpp"

namespace spin7 {

Form make_cayley_form() {
    Form phi(4);
    const std::vector<std::pair<IndexTuple, int>> terms = {
        {{1, 2, 3, 4}, +1}, {{1, 2, 5, 6}, +1}, {{1, 2, 7, 8}, +1}, {{1, 3, 5, 7}, +1},
        {{1, 3, 6, 8}, -1}, {{1, 4, 5, 8}, -1}, {{1, 4, 6, 7}, -1},
        {{2, 3, 5, 8}, -1}, {{2, 3, 6, 7}, -1}, {{2, 4, 5, 7}, -1}, {{2, 4, 6, 8}, +1},
        {{3, 4, 5, 6}, +1}, {{3, 4, 7, 8}, +1}, {{5, 6, 7, 8}, +1}};
    for (const auto& [idx, s] : terms)
        phi.add_term(idx, Rational(s));
    return phi;
}

AleModelMaps ale_model_maps() {
    AleModelMaps m;
    // (x1,...,x8) -> (-x2, x1, -x4, x3, -x6, x5, -x8, x7)
    m.alpha = LinearMap8::signed_permutation(
        {{{2, -1}, {1, +1}, {4, -1}, {3, +1}, {6, -1}, {5, +1}, {8, -1}, {7, +1}}});
    // (x1,...,x8) -> (x3, -x4, -x1, x2, x7, -x8, -x5, x6)
    m.beta = LinearMap8::signed_permutation(
        {{{3, +1}, {4, -1}, {1, -1}, {2, +1}, {7, +1}, {8, -1}, {5, -1}, {6, +1}}});
    // (x1,...,x8) -> (-x1, x3, x2, x4, -x5, x7, x6, x8)
    m.swap_zw = LinearMap8::signed_permutation(
        {{{1, -1}, {3, +1}, {2, +1}, {4, +1}, {5, -1}, {7, +1}, {6, +1}, {8, +1}}});
    return m;
}

namespace {

CalabiYauPresentation presentation_from_pairs(std::vector<std::pair<Form, Form>> pairs) {
    CalabiYauPresentation p{Form(2), Form(4), std::move(pairs)};
    for (const auto& [re, im] : p.coord_forms)
        p.kahler += wedge(re, im);
    // real part of the product of the four complex 1-forms (re + i im)
    Form re = Form::scalar(Rational(1));
    Form im(0);
    for (const auto& [r, i] : p.coord_forms) {
        Form nre = wedge(re, r) - wedge(im, i);
        Form nim = wedge(re, i) + wedge(im, r);
        re = std::move(nre);
        im = std::move(nim);
    }
    p.re_volume = re;
    return p;
}

} // namespace

CalabiYauPresentation cy_presentation_z() {
    // z_k = x_{2k-1} + i x_{2k}
    return presentation_from_pairs({{Form::basis({1}), Form::basis({2})},
                                    {Form::basis({3}), Form::basis({4})},
                                    {Form::basis({5}), Form::basis({6})},
                                    {Form::basis({7}), Form::basis({8})}});
}

CalabiYauPresentation cy_presentation_w() {
    // w1 = -x1 + i x3, w2 = x2 + i x4, w3 = -x5 + i x7, w4 = x6 + i x8
    return presentation_from_pairs({{-Form::basis({1}), Form::basis({3})},
                                    {Form::basis({2}), Form::basis({4})},
                                    {-Form::basis({5}), Form::basis({7})},
                                    {Form::basis({6}), Form::basis({8})}});
}

Form cayley_from_presentation(const CalabiYauPresentation& p) {
    return wedge(p.kahler, p.kahler) * Rational(1, 2) + p.re_volume;
}

bool CayleyReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

namespace {

void add_check(CayleyReport& r, std::string name, bool pass, std::string detail = "") {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
}

} // namespace

CayleyReport verify_group_relations() {
    CayleyReport r;
    const auto maps = ale_model_maps();
    const auto id = LinearMap8::identity();

    add_check(r, "alpha^4 = id", maps.alpha.power(4) == id);
    add_check(r, "beta^4 = id", maps.beta.power(4) == id);
    add_check(r, "alpha beta = beta alpha^3",
              maps.alpha * maps.beta == maps.beta * maps.alpha.power(3));

    const auto z = cy_presentation_z();
    const auto w = cy_presentation_w();
    bool coords_ok = true;
    for (std::size_t k = 0; k < 4; ++k) {
        coords_ok = coords_ok && pullback(z.coord_forms[k].first, maps.swap_zw) == w.coord_forms[k].first;
        coords_ok = coords_ok && pullback(z.coord_forms[k].second, maps.swap_zw) == w.coord_forms[k].second;
    }
    add_check(r, "swap map carries z-coordinates to w-coordinates", coords_ok);
    return r;
}

std::vector<Form> orbit_tangent_basis() {
    const Form phi = make_cayley_form();
    std::vector<Form> basis;
    basis.reserve(64);
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j)
            basis.push_back(derivation_action(phi, LinearMap8::elementary(i, j)));
    return basis;
}

namespace {

std::vector<RationalVector> orbit_tangent_rows() {
    std::vector<RationalVector> rows;
    rows.reserve(64);
    for (const auto& f : orbit_tangent_basis())
        rows.push_back(dense_coords4(f));
    return rows;
}

} // namespace

int orbit_tangent_rank() {
    return static_cast<int>(fraction_free_rank(orbit_tangent_rows()));
}

int stabilizer_dimension() {
    const auto rows = orbit_tangent_rows();
    const auto kernel = left_nullspace(rows);
    const Form phi = make_cayley_form();
    // each kernel combination is an honest annihilating matrix
    for (const auto& combo : kernel) {
        LinearMap8 a;
        for (int i = 1; i <= 8; ++i)
            for (int j = 1; j <= 8; ++j)
                a.at(i, j) = combo[static_cast<std::size_t>((i - 1) * 8 + (j - 1))];
        if (!derivation_action(phi, a).is_zero())
            throw InconsistencyError("nullspace element does not annihilate the Cayley form");
    }
    return static_cast<int>(kernel.size());
}

bool check_asd_inclusion() {
    RationalEchelon span(70);
    for (const auto& row : orbit_tangent_rows())
        span.insert(row);
    for (const auto& idx : degree4_tuples()) {
        Form e(4);
        e.add_term(idx, Rational(1));
        const Form asd = e - hodge_star4(e);
        if (!span.contains(dense_coords4(asd)))
            return false;
    }
    return true;
}

std::pair<Form, Form> split_tangent_normal(const Form& eta) {
    if (eta.degree() != 4)
        throw DegreeError("tangent/normal split is defined on 4-forms");
    static const std::vector<RationalVector> ortho = orthogonal_basis(orbit_tangent_rows());
    const RationalVector v = dense_coords4(eta);
    const RationalVector t = project_onto_span(ortho, v);
    Form tangent(4), normal(4);
    const auto& tuples = degree4_tuples();
    for (std::size_t k = 0; k < tuples.size(); ++k) {
        tangent.add_term(tuples[k], t[k]);
        normal.add_term(tuples[k], v[k] - t[k]);
    }
    return {tangent, normal};
}

CayleyReport run_cayley_suite() {
    CayleyReport r = verify_group_relations();
    const Form phi = make_cayley_form();
    const auto maps = ale_model_maps();

    add_check(r, "pullback by alpha fixes the Cayley form", pullback(phi, maps.alpha) == phi);
    add_check(r, "pullback by beta fixes the Cayley form", pullback(phi, maps.beta) == phi);
    add_check(r, "z-presentation: (1/2) omega^2 + Re(volume) = Cayley form",
              cayley_from_presentation(cy_presentation_z()) == phi);
    add_check(r, "w-presentation: (1/2) omega'^2 + Re(volume') = Cayley form",
              cayley_from_presentation(cy_presentation_w()) == phi);
    add_check(r, "Cayley form is self-dual", hodge_star4(phi) == phi);
    add_check(r, "identity matrix scales the Cayley form by 4",
              derivation_action(phi, LinearMap8::identity()) == phi * Rational(4));

    r.orbit_rank = orbit_tangent_rank();
    r.stabilizer_dim = stabilizer_dimension();
    r.normal_dim = 70 - r.orbit_rank;
    {
        std::ostringstream os;
        os << "rank " << r.orbit_rank << ", stabilizer " << r.stabilizer_dim
           << ", normal " << r.normal_dim;
        add_check(r, "orbit tangent rank equals 64 - stabilizer dimension",
                  r.orbit_rank == 64 - r.stabilizer_dim, os.str());
    }

    // dimension of the anti-self-dual 4-forms
    {
        std::vector<RationalVector> asd_rows;
        for (const auto& idx : degree4_tuples()) {
            Form e(4);
            e.add_term(idx, Rational(1));
            asd_rows.push_back(dense_coords4(e - hodge_star4(e)));
        }
        r.asd_dim = static_cast<int>(fraction_free_rank(asd_rows));
        add_check(r, "anti-self-dual space has dimension 35", r.asd_dim == 35);
    }
    add_check(r, "anti-self-dual 4-forms lie in the orbit tangent span", check_asd_inclusion());

    // informational: a self-dual probe need not lie in the tangent span
    {
        const Form sd = Form::basis({1, 2, 3, 4}) + Form::basis({5, 6, 7, 8});
        RationalEchelon span(70);
        for (const auto& row : orbit_tangent_rows())
            span.insert(row);
        r.sd_probe_in_tangent = span.contains(dense_coords4(sd));
    }

    // orthogonality of the split on a probe form
    {
        Form probe(4);
        probe.add_term({1, 2, 3, 4}, Rational(3));
        probe.add_term({1, 3, 6, 8}, Rational(-2, 5));
        probe.add_term({2, 4, 6, 8}, Rational(7, 2));
        auto [t, n] = split_tangent_normal(probe);
        bool ortho = t + n == probe;
        for (const auto& b : orbit_tangent_basis())
            ortho = ortho && inner(n, b) == 0;
        add_check(r, "normal component is orthogonal to every tangent generator", ortho);
    }
    return r;
}

} // namespace spin7
