#include <doctest.h>

#include <random>

#include "spin7/cayley.hpp"
#include "spin7/errors.hpp"
#include "spin7/form.hpp"
#include "spin7/linalg.hpp"

using namespace spin7;

namespace {

std::mt19937 rng(20240811);

Rational random_rational() {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    return Rational(num(rng), den(rng));
}

Form random_form(int degree, int terms = 4) {
    Form f(degree);
    std::uniform_int_distribution<int> idx(1, 8);
    for (int t = 0; t < terms; ++t) {
        IndexTuple tuple;
        while (static_cast<int>(tuple.size()) < degree) {
            int i = idx(rng);
            if (std::find(tuple.begin(), tuple.end(), i) == tuple.end())
                tuple.push_back(i);
        }
        f.add_term(tuple, random_rational());
    }
    return f;
}

LinearMap8 random_map() {
    LinearMap8 a;
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j)
            a.at(i, j) = random_rational();
    return a;
}

} // namespace

TEST_CASE("Cayley form has exactly the fourteen signed unit terms") {
    const Form phi = make_cayley_form();
    CHECK(phi.degree() == 4);
    CHECK(phi.term_count() == 14);
    CHECK(phi.coefficient({1, 2, 3, 4}) == 1);
    CHECK(phi.coefficient({1, 3, 6, 8}) == -1);
    CHECK(phi.coefficient({1, 2, 3, 5}) == 0);
    CHECK(phi.coefficient({5, 6, 7, 8}) == 1);
    CHECK(phi.coefficient({2, 4, 6, 8}) == 1);
    for (const auto& [idx, c] : phi.terms())
        CHECK((c == 1 || c == -1));
}

TEST_CASE("pullback basics") {
    const Form phi = make_cayley_form();
    CHECK(pullback(phi, LinearMap8::identity()) == phi);
    CHECK(pullback(phi, -LinearMap8::identity()) == phi); // degree 4: (-1)^4 = 1

    const auto maps = ale_model_maps();
    CHECK(pullback(phi, maps.alpha) == phi);
    CHECK(pullback(phi, maps.beta) == phi);
}

TEST_CASE("pullback is functorial and linear in the form") {
    for (int trial = 0; trial < 10; ++trial) {
        const LinearMap8 a = random_map();
        const LinearMap8 b = random_map();
        const Form f = random_form(3);
        CHECK(pullback(f, a * b) == pullback(pullback(f, a), b));

        const Form g = random_form(3);
        const Rational s = random_rational();
        CHECK(pullback(f + g * s, a) == pullback(f, a) + pullback(g, a) * s);
    }
}

TEST_CASE("wedge is graded-commutative and associative") {
    CHECK(wedge(Form::basis({1}), Form::basis({1})).is_zero());
    for (int trial = 0; trial < 12; ++trial) {
        const Form f = random_form(1), g = random_form(2), h = random_form(2);
        CHECK(wedge(f, g) == wedge(g, f)); // (-1)^{1*2} = +1
        CHECK(wedge(f, wedge(g, h)) == wedge(wedge(f, g), h));

        const Form u = random_form(1);
        CHECK(wedge(f, u) == wedge(u, f) * Rational(-1)); // deg 1*1 odd sign
    }
    CHECK_THROWS_AS(wedge(random_form(4), random_form(8)), DegreeError);
}

TEST_CASE("group relations of the quaternionic maps") {
    const CayleyReport r = verify_group_relations();
    CHECK(r.all_pass());

    const auto maps = ale_model_maps();
    CHECK(maps.alpha.power(2) == -LinearMap8::identity()); // the central element
    CHECK(maps.alpha.determinant() == 1);
    CHECK(maps.beta.determinant() == 1);
}

TEST_CASE("words in the two generators fix the Cayley form") {
    const Form phi = make_cayley_form();
    const auto maps = ale_model_maps();
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 8; ++trial) {
        LinearMap8 word = LinearMap8::identity();
        std::uniform_int_distribution<int> len(1, 6);
        for (int i = len(rng); i > 0; --i)
            word = word * (coin(rng) ? maps.alpha : maps.beta);
        CHECK(pullback(phi, word) == phi);
    }
}

TEST_CASE("both Calabi-Yau presentations rebuild the Cayley form") {
    const Form phi = make_cayley_form();
    const auto z = cy_presentation_z();
    const auto w = cy_presentation_w();
    CHECK(z.kahler == Form::basis({1, 2}) + Form::basis({3, 4}) + Form::basis({5, 6}) +
                          Form::basis({7, 8}));
    CHECK(cayley_from_presentation(z) == phi);
    CHECK(cayley_from_presentation(w) == phi);
}

TEST_CASE("hodge star on 4-forms") {
    CHECK(hodge_star4(Form::basis({1, 2, 3, 4})) == Form::basis({5, 6, 7, 8}));
    const Form phi = make_cayley_form();
    CHECK(hodge_star4(phi) == phi);

    const Form asd = Form::basis({1, 2, 3, 4}) - Form::basis({5, 6, 7, 8});
    CHECK(hodge_star4(asd) == asd * Rational(-1));

    for (int trial = 0; trial < 10; ++trial) {
        const Form f = random_form(4, 6);
        CHECK(hodge_star4(hodge_star4(f)) == f);
    }
    CHECK_THROWS_AS(hodge_star4(random_form(3)), DegreeError);
}

TEST_CASE("orbit tangent rank and stabilizer dimension") {
    const auto basis = orbit_tangent_basis();
    CHECK(basis.size() == 64);
    const int rank = orbit_tangent_rank();
    const int stab = stabilizer_dimension();
    CHECK(rank == 43);
    CHECK(stab == 21);
    CHECK(rank == 64 - stab);

    // the two elimination routes (fraction-free vs echelon) agree
    RationalEchelon span(70);
    for (const auto& f : basis)
        span.insert(dense_coords4(f));
    CHECK(static_cast<int>(span.rank()) == rank);
}

TEST_CASE("scaling direction lies in the tangent span") {
    const Form phi = make_cayley_form();
    CHECK(derivation_action(phi, LinearMap8::identity()) == phi * Rational(4));
}

TEST_CASE("rotation generator acts as a pure derivation") {
    // A = rotation generator in the (1,2)-plane; the result was frozen from an
    // independent exact computation
    LinearMap8 rot;
    rot.at(1, 2) = -1;
    rot.at(2, 1) = 1;
    const Form l = derivation_action(make_cayley_form(), rot);
    Form expected(4);
    expected.add_term({1, 3, 5, 8}, Rational(-1));
    expected.add_term({1, 3, 6, 7}, Rational(-1));
    expected.add_term({1, 4, 5, 7}, Rational(-1));
    expected.add_term({1, 4, 6, 8}, Rational(1));
    expected.add_term({2, 3, 5, 7}, Rational(-1));
    expected.add_term({2, 3, 6, 8}, Rational(1));
    expected.add_term({2, 4, 5, 8}, Rational(1));
    expected.add_term({2, 4, 6, 7}, Rational(1));
    CHECK(l == expected);

    auto [t, n] = split_tangent_normal(l);
    CHECK(n.is_zero()); // derivation images are tangent by construction
    CHECK(t == l);
}

TEST_CASE("anti-self-dual inclusion") {
    CHECK(check_asd_inclusion());

    // the zero form is trivially in the span
    RationalEchelon span(70);
    for (const auto& f : orbit_tangent_basis())
        span.insert(dense_coords4(f));
    CHECK(span.contains(RationalVector(70, Rational(0))));
}

TEST_CASE("tangent/normal split is orthogonal and recovers the form") {
    const auto basis = orbit_tangent_basis();
    for (int trial = 0; trial < 6; ++trial) {
        const Form f = random_form(4, 8);
        auto [t, n] = split_tangent_normal(f);
        CHECK(t + n == f);
        for (const auto& b : basis)
            CHECK(inner(n, b) == 0);
    }
}

TEST_CASE("full suite passes and reports the computed dimensions") {
    const CayleyReport r = run_cayley_suite();
    CHECK(r.all_pass());
    CHECK(r.orbit_rank == 43);
    CHECK(r.stabilizer_dim == 21);
    CHECK(r.normal_dim == 27);
    CHECK(r.asd_dim == 35);
    CHECK_FALSE(r.sd_probe_in_tangent);
}
