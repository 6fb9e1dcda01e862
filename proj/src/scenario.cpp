#include "spin7/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "spin7/chern.hpp"
#include "spin7/errors.hpp"

namespace spin7 {

std::string to_string(PipelineKind k) {
    switch (k) {
    case PipelineKind::Spin7Double: return "spin7_double";
    case PipelineKind::Spin7Glue: return "spin7_glue";
    case PipelineKind::CyDouble: return "cy_double";
    }
    return "?";
}

std::vector<std::string> builtin_scenario_names() {
    return {"section4", "m11", "m12", "m22", "cy-double"};
}

namespace {

HodgeDiamond rows_to_diamond(const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<Integer>> r;
    for (const auto& row : rows)
        r.emplace_back(row.begin(), row.end());
    return HodgeDiamond::from_triangle_rows(r);
}

const std::vector<std::vector<long long>> kDivisorDiamondRows = {
    {1}, {0, 0}, {0, 1, 0}, {1, 149, 149, 1}, {0, 1, 0}, {0, 0}, {1}};

Assertion asserted(const std::string& why) { return {true, why}; }

ConstructionConfig degree8_construction(const Weights& w) {
    ConstructionConfig c{w, {8}, 8, {}, {}, {}, {}, {}};
    c.quasismooth = asserted("diagonal members exist: every weight divides 8");
    c.d_smooth = asserted("the chosen degree-8 member is smooth away from the vertex stratum");
    c.s_smooth = asserted("generic second member makes the intersection smooth");
    c.involution_free_on_d_and_s =
        asserted("the defining polynomials are real and the involution has no fixed "
                 "points away from the singular point");
    c.fixed_locus_is_singular_locus =
        asserted("the involution fixes exactly the singular point");
    return c;
}

BlockSpec section4_block() {
    const Weights w({1, 1, 1, 1, 4});
    BlockSpec b;
    b.label = "V";
    b.construction = degree8_construction(w);
    b.ambient.kind = AmbientSpec::Kind::WeightedProjectiveSpace;
    b.ambient.tau = {1, "middle cohomology of the ambient space is rank one with "
                        "positive self-intersection"};
    b.divisor.kind = DivisorSpec::Kind::Hypersurface;
    b.divisor.degree = 8;
    b.divisor.cover = CoverSpec{4, {8}, 4};
    b.surface.kind = SurfaceSpec::Kind::BranchedCover;
    b.surface.cover = CoverSpec{4, {8, 8}, 4};
    b.surface.ci_degrees = {8, 8};
    b.fixed_points = {1, "the unique singular point, fixed by the involution"};
    b.stratum_restriction =
        SourcedStratumForm{StratumForm{1, {Rational(0)}},
                           "the ambient block is the whole weighted space, so the point "
                           "stratum lies on it"};
    return b;
}

const char* kBranchTypoNote =
    "note on chi(D-cover cap branch): the Chern-class computation gives 304 "
    "(degree-8 surface in P^3); the original computation prints 7808 at this spot, "
    "which duplicates chi(S-cover). Only 304 makes the 4:1 covering formula return "
    "chi(D) = -296.";

Scenario make_section4() {
    Scenario s;
    s.name = "section4";
    s.description = "doubling of the degree-8 hypersurface construction in the "
                    "weighted projective space P(1,1,1,1,4)";
    s.weights = Weights({1, 1, 1, 1, 4});
    s.kind = PipelineKind::Spin7Double;
    s.simply_connected = {true, "the glued manifold is simply connected (cross-section "
                                "and pieces have the needed connectivity)"};
    s.blocks = {section4_block()};
    s.notes = {kBranchTypoNote};
    return s;
}

Scenario make_cy_double() {
    Scenario s = make_section4();
    s.name = "cy-double";
    s.description = "Calabi-Yau doubling of the crepant resolution of the blown-up "
                    "degree-8 construction in P(1,1,1,1,4)";
    s.kind = PipelineKind::CyDouble;
    return s;
}

BlockSpec block_v1() {
    const Weights w({1, 1, 1, 1, 4, 4});
    BlockSpec b;
    b.label = "V1";
    b.construction = ConstructionConfig{w, {8, 4}, 4, {}, {}, {}, {}, {}};
    b.construction.quasismooth =
        asserted("the degree-8 member meets the vertex line in two scalar-Z4 points");
    b.construction.d_smooth = asserted("the degree-4 member cuts the singular points off");
    b.construction.s_smooth = asserted("a generic third member keeps the surface smooth");
    b.construction.involution_free_on_d_and_s =
        asserted("defining polynomials are real; the involution is free away from the "
                 "vertex line");
    b.construction.fixed_locus_is_singular_locus =
        asserted("the involution fixes exactly the two singular points");

    b.ambient.kind = AmbientSpec::Kind::Diamond;
    b.ambient.diamond = SourcedDiamond{
        rows_to_diamond({{1}, {0, 0}, {0, 1, 0}, {0, 0, 0, 0}, {0, 35, 232, 35, 0},
                         {0, 0, 0, 0}, {0, 1, 0}, {0, 0}, {1}}),
        "known Hodge diamond of the degree-8 hypersurface block"};
    b.ambient.tau = {162, "back-solved from the known final invariants through the "
                          "signature chain; equals the signed sum over the diamond"};
    b.ambient.verify_hypersurface_degree = 8;

    b.divisor.kind = DivisorSpec::Kind::Diamond;
    b.divisor.diamond =
        SourcedDiamond{rows_to_diamond(kDivisorDiamondRows),
                       "known Hodge diamond of the common anticanonical divisor"};
    b.divisor.ci_degrees = {8, 4};

    b.surface.kind = SurfaceSpec::Kind::Diamond;
    b.surface.diamond = SourcedDiamond{
        rows_to_diamond({{1}, {0, 0}, {35, 232, 35}, {0, 0}, {1}}),
        "known Hodge diamond of the surface cut by degrees (8,4,4)"};
    b.surface.ci_degrees = {8, 4, 4};

    b.fixed_points = {2, "distinct roots of the degree-8 member on the vertex line"};
    b.stratum_restriction = SourcedStratumForm{
        StratumForm{2, {Rational(-1), Rational(0), Rational(1)}},
        "restriction of the degree-8 member to the two weight-4 coordinates"};
    return b;
}

BlockSpec block_v2() {
    const Weights w({1, 1, 1, 1, 4, 4});
    BlockSpec b;
    b.label = "V2";
    b.construction = ConstructionConfig{w, {4, 8}, 8, {}, {}, {}, {}, {}};
    b.construction.quasismooth =
        asserted("the degree-4 member meets the vertex line in one scalar-Z4 point");
    b.construction.d_smooth = asserted("the degree-8 member cuts the singular point off");
    b.construction.s_smooth = asserted("a generic third member keeps the surface smooth");
    b.construction.involution_free_on_d_and_s =
        asserted("defining polynomials are real; the involution is free away from the "
                 "vertex line");
    b.construction.fixed_locus_is_singular_locus =
        asserted("the involution fixes exactly the singular point");

    b.ambient.kind = AmbientSpec::Kind::Diamond;
    b.ambient.diamond = SourcedDiamond{
        rows_to_diamond({{1}, {0, 0}, {0, 1, 0}, {0, 0, 0, 0}, {0, 0, 1, 0, 0},
                         {0, 0, 0, 0}, {0, 1, 0}, {0, 0}, {1}}),
        "known Hodge diamond of the degree-4 hypersurface block"};
    b.ambient.tau = {1, "the degree-4 member is linear in one weight-4 coordinate, so "
                        "the block is isomorphic to the rank-one ambient case"};
    b.ambient.verify_hypersurface_degree = 4;

    b.divisor.kind = DivisorSpec::Kind::Diamond;
    b.divisor.diamond =
        SourcedDiamond{rows_to_diamond(kDivisorDiamondRows),
                       "known Hodge diamond of the common anticanonical divisor"};
    b.divisor.ci_degrees = {4, 8};

    b.surface.kind = SurfaceSpec::Kind::Diamond;
    b.surface.diamond = SourcedDiamond{
        rows_to_diamond({{1}, {0, 0}, {199, 976, 199}, {0, 0}, {1}}),
        "known Hodge diamond of the surface cut by degrees (4,8,8)"};
    b.surface.ci_degrees = {4, 8, 8};

    b.fixed_points = {1, "single root of the degree-4 member on the vertex line"};
    b.stratum_restriction = SourcedStratumForm{
        StratumForm{2, {Rational(1), Rational(2)}},
        "restriction of the degree-4 member to the two weight-4 coordinates"};
    return b;
}

Scenario make_m(const std::string& name) {
    Scenario s;
    s.name = name;
    s.weights = Weights({1, 1, 1, 1, 4, 4});
    s.simply_connected = {true, "the glued manifold is simply connected (cross-section "
                                "and pieces have the needed connectivity)"};
    if (name == "m11") {
        s.description = "doubling of the degree-(8|4) block in P(1,1,1,1,4,4)";
        s.kind = PipelineKind::Spin7Double;
        s.blocks = {block_v1()};
    } else if (name == "m22") {
        s.description = "doubling of the degree-(4|8) block in P(1,1,1,1,4,4)";
        s.kind = PipelineKind::Spin7Double;
        s.blocks = {block_v2()};
    } else {
        s.description = "mixed gluing of the two complete-intersection blocks in "
                        "P(1,1,1,1,4,4) sharing one anticanonical divisor";
        s.kind = PipelineKind::Spin7Glue;
        s.blocks = {block_v1(), block_v2()};
    }
    return s;
}

} // namespace

Scenario builtin_scenario(const std::string& name) {
    if (name == "section4")
        return make_section4();
    if (name == "cy-double")
        return make_cy_double();
    if (name == "m11" || name == "m12" || name == "m22")
        return make_m(name);
    throw ParseError("unknown builtin scenario: " + name);
}

Scenario load_scenario(const std::string& name_or_path) {
    const auto names = builtin_scenario_names();
    if (std::find(names.begin(), names.end(), name_or_path) != names.end())
        return builtin_scenario(name_or_path);
    std::ifstream in(name_or_path);
    if (!in)
        throw ParseError("cannot open scenario file: " + name_or_path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario(text.str());
}

namespace {

struct BlockData {
    BlockInvariants v;
    DivisorData d;
    SurfaceInvariants s;
};

void mile(Report& rep, std::string name, const Integer& v) {
    rep.milestones.emplace_back(std::move(name), v);
}

std::string tagged(const char* base, const std::string& label, bool multi) {
    return multi ? std::string(base) + "[" + label + "]" : std::string(base);
}

long long to_ll(const Integer& v, const char* what) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        throw ParseError(std::string(what) + " out of range");
    return static_cast<long long>(v);
}

void run_conditions(const BlockSpec& b, Report& rep) {
    for (auto& check : check_conditions(b.construction)) {
        if (check.status == ConditionCheck::Status::Fail) {
            std::ostringstream os;
            os << "block " << b.label << ": condition (" << check.id << ") failed: "
               << check.description << " [" << check.detail << "]";
            rep.conditions.push_back({b.label, check});
            throw InconsistencyError(os.str());
        }
        rep.conditions.push_back({b.label, check});
    }
}

void check_strata(const Scenario& sc, const BlockSpec& b, Trace& tr) {
    const auto strata = singular_strata(sc.weights);
    for (const auto& st : strata) {
        std::ostringstream os;
        os << "singular stratum of " << sc.weights.to_string() << " on indices {";
        for (std::size_t i = 0; i < st.support.size(); ++i)
            os << (i ? "," : "") << st.support[i];
        os << "}: cyclic group of order " << st.group_order;
        if (!is_scalar_z4_action(st))
            throw InconsistencyError(os.str() + " is not the scalar Z4 action; the "
                                                "construction does not apply");
        tr.line("input", os.str() + ", scalar Z4 action", "local model of the quotient "
                                                          "singularities");
    }

    const long long k = to_ll(b.fixed_points.value, "fixed point count");
    if (b.stratum_restriction) {
        if (strata.size() != 1)
            throw InconsistencyError("stratum restriction given but the weights have " +
                                     std::to_string(strata.size()) + " strata");
        const int counted = count_stratum_points(b.stratum_restriction->form);
        std::ostringstream os;
        os << "fixed points on block " << b.label << ": counted " << counted
           << " on the stratum, declared " << k;
        if (counted != k)
            throw InconsistencyError(os.str());
        tr.line("input", os.str(), b.stratum_restriction->source);
    } else {
        std::ostringstream os;
        os << "fixed points on block " << b.label << ": " << k;
        tr.line("input", os.str(), b.fixed_points.source);
    }
}

BlockData assemble_block(const Scenario& sc, const BlockSpec& b, Report& rep, Trace& tr,
                         bool multi) {
    run_conditions(b, rep);
    check_strata(sc, b, tr);

    BlockData out;
    const Weights& w = sc.weights;

    // ambient fourfold
    Integer chi_v, b2_v, b3_v;
    if (b.ambient.kind == AmbientSpec::Kind::WeightedProjectiveSpace) {
        chi_v = euler_wps(w);
        b2_v = 1;
        b3_v = 0;
        std::ostringstream os;
        os << "chi(V) = " << chi_v << ", b2(V) = 1, b3(V) = 0";
        tr.line("V", os.str(), "rational cohomology of a weighted projective space "
                               "matches ordinary projective space");
    } else {
        if (!b.ambient.diamond)
            throw ParseError("block " + b.label + ": ambient diamond missing");
        const HodgeDiamond& dia = b.ambient.diamond->diamond;
        if (dia.dim() != 4)
            throw ParseError("ambient diamond must have complex dimension 4");
        chi_v = dia.euler();
        b2_v = dia.betti(2);
        b3_v = dia.betti(3);
        std::ostringstream os;
        os << "chi(V) = " << chi_v << ", b2(V) = " << b2_v << ", b3(V) = " << b3_v
           << " (signed sums over the diamond)";
        tr.line("V", os.str(), b.ambient.diamond->source);

        if (b.ambient.verify_hypersurface_degree) {
            const HodgeDiamond computed =
                hypersurface_hodge(w, *b.ambient.verify_hypersurface_degree);
            if (!(computed == dia))
                throw InconsistencyError("block " + b.label + ": input diamond disagrees "
                                         "with the Jacobian-ring computation");
            std::ostringstream v;
            v << "diamond of the degree-" << *b.ambient.verify_hypersurface_degree
              << " hypersurface recomputed from the Jacobian ring: agrees";
            tr.line("V", v.str(), "graded pieces of the Jacobian ring");
        }
        const Integer formal_tau = hodge_signature(dia);
        std::ostringstream t;
        t << "formal signed diamond sum gives " << formal_tau << " for tau(V); input is "
          << b.ambient.tau.value
          << (formal_tau == b.ambient.tau.value ? " (agrees)" : " (DIFFERS)");
        tr.line("V", t.str(), "consistency note; the diamond sum is not a theorem for "
                              "orbifolds");
    }
    {
        std::ostringstream os;
        os << "tau(V) = " << b.ambient.tau.value;
        tr.line("V", os.str(), "input: " + b.ambient.tau.source);
    }

    out.v.label = b.label;
    out.v.stage = Stage::V;
    out.v.chi = chi_v;
    out.v.tau = b.ambient.tau.value;
    out.v.b2 = b2_v;
    out.v.b3 = b3_v;
    out.v.sing_points = to_ll(b.fixed_points.value, "fixed point count");
    mile(rep, tagged("chi(V)", b.label, multi), out.v.chi);
    mile(rep, tagged("tau(V)", b.label, multi), out.v.tau);

    // anticanonical divisor
    if (b.divisor.kind == DivisorSpec::Kind::Hypersurface) {
        if (!b.divisor.degree)
            throw ParseError("block " + b.label + ": divisor degree missing");
        const HodgeDiamond dia = hypersurface_hodge(w, *b.divisor.degree);
        out.d.chi = dia.euler();
        out.d.b2 = dia.betti(2);
        std::ostringstream os;
        os << "chi(D) = " << out.d.chi << ", b2(D) = " << out.d.b2 << ", h^{2,1}(D) = "
           << dia.at(2, 1);
        tr.line("D", os.str(), "Hodge numbers of the quasismooth hypersurface from its "
                               "Jacobian ring");
    } else {
        if (!b.divisor.diamond)
            throw ParseError("block " + b.label + ": divisor diamond missing");
        const HodgeDiamond& dia = b.divisor.diamond->diamond;
        if (dia.dim() != 3)
            throw ParseError("divisor diamond must have complex dimension 3");
        out.d.chi = dia.euler();
        out.d.b2 = dia.betti(2);
        std::ostringstream os;
        os << "chi(D) = " << out.d.chi << ", b2(D) = " << out.d.b2;
        tr.line("D", os.str(), b.divisor.diamond->source);
        if (!b.divisor.ci_degrees.empty()) {
            const Integer h03 = ci_h0q(w, b.divisor.ci_degrees, 0, 3);
            if (h03 != dia.at(0, 3))
                throw InconsistencyError("block " + b.label + ": h^{0,3}(D) from the "
                                         "coordinate ring disagrees with the diamond");
            std::ostringstream v;
            v << "h^{0,3}(D) = " << h03 << " from the coordinate ring: agrees";
            tr.line("D", v.str(), "graded pieces of the complete-intersection ring");
        }
    }
    if (b.divisor.cover) {
        const auto& cv = *b.divisor.cover;
        const Integer chi_cover = euler_ci(cv.ambient_dim, cv.degrees);
        const Integer chi_branch = euler_ci(cv.ambient_dim - 1, cv.degrees);
        const Integer chi_down = branched_euler(chi_cover, chi_branch, cv.sheets);
        mile(rep, tagged("chi(D_cover)", b.label, multi), chi_cover);
        mile(rep, tagged("chi(D_branch)", b.label, multi), chi_branch);
        std::ostringstream os;
        os << "chi(D) = (" << chi_cover << " + " << (cv.sheets - 1) << "*(" << chi_branch
           << "))/" << cv.sheets << " = " << chi_down;
        tr.line("D", os.str(), "branched covering formula through the degree-1 cover");
        if (chi_down != out.d.chi)
            throw InconsistencyError("block " + b.label + ": covering route and Hodge "
                                     "route disagree on chi(D)");
        tr.line("D", "both chi(D) routes agree", "cross-check");
    }
    mile(rep, tagged("chi(D)", b.label, multi), out.d.chi);
    mile(rep, tagged("b2(D)", b.label, multi), out.d.b2);

    // surface
    Integer chi_s, h02;
    if (b.surface.kind == SurfaceSpec::Kind::BranchedCover) {
        if (!b.surface.cover)
            throw ParseError("block " + b.label + ": surface cover missing");
        const auto& cv = *b.surface.cover;
        const Integer chi_cover = euler_ci(cv.ambient_dim, cv.degrees);
        const Integer chi_branch = euler_ci(cv.ambient_dim - 1, cv.degrees);
        chi_s = branched_euler(chi_cover, chi_branch, cv.sheets);
        mile(rep, tagged("chi(S_cover)", b.label, multi), chi_cover);
        mile(rep, tagged("chi(S_branch)", b.label, multi), chi_branch);
        std::ostringstream os;
        os << "chi(S) = (" << chi_cover << " + " << (cv.sheets - 1) << "*(" << chi_branch
           << "))/" << cv.sheets << " = " << chi_s;
        tr.line("S", os.str(), "branched covering formula through the degree-1 cover");
        h02 = ci_h0q(w, b.surface.ci_degrees, b.surface.h02_twist, 2);
        std::ostringstream hs;
        hs << "h^{0,2}(S) = " << h02;
        tr.line("S", hs.str(), "top cohomology of the structure sheaf from the "
                               "coordinate ring");
    } else {
        if (!b.surface.diamond)
            throw ParseError("block " + b.label + ": surface diamond missing");
        const HodgeDiamond& dia = b.surface.diamond->diamond;
        if (dia.dim() != 2)
            throw ParseError("surface diamond must have complex dimension 2");
        chi_s = dia.euler();
        h02 = dia.at(0, 2);
        std::ostringstream os;
        os << "chi(S) = " << chi_s << ", h^{0,2}(S) = " << h02;
        tr.line("S", os.str(), b.surface.diamond->source);
        if (!b.surface.ci_degrees.empty()) {
            const Integer computed = ci_h0q(w, b.surface.ci_degrees, b.surface.h02_twist, 2);
            if (computed != h02)
                throw InconsistencyError("block " + b.label + ": h^{0,2}(S) from the "
                                         "coordinate ring disagrees with the diamond");
            std::ostringstream v;
            v << "h^{0,2}(S) = " << computed << " from the coordinate ring: agrees";
            tr.line("S", v.str(), "graded pieces of the complete-intersection ring");
        }
    }
    out.s = surface_from_chi_h02(chi_s, h02);
    tr.assume("b1(S) = 0 for the hyperplane-section surface");
    if (b.surface.kind == SurfaceSpec::Kind::Diamond &&
        !(out.s.diamond == b.surface.diamond->diamond))
        throw InconsistencyError("block " + b.label + ": assembled surface diamond "
                                 "disagrees with the input diamond");
    {
        std::ostringstream os;
        os << "h^{1,1}(S) = " << out.s.diamond.at(1, 1) << ", tau(S) = " << out.s.tau
           << ", b2(S) = " << out.s.b[2];
        tr.line("S", os.str(), "closing the surface diamond from chi and h^{0,2} with "
                               "b1 = 0; signature by the signed diamond sum");
    }
    mile(rep, tagged("chi(S)", b.label, multi), out.s.chi);
    mile(rep, tagged("tau(S)", b.label, multi), out.s.tau);
    mile(rep, tagged("h02(S)", b.label, multi), h02);

    return out;
}

BlockInvariants chain_to_z(const BlockData& bd, Report& rep, Trace& tr, bool multi) {
    const std::string& label = bd.v.label;
    BlockInvariants xbar = blow_up(bd.v, bd.s, &tr);
    mile(rep, tagged("chi(Xbar)", label, multi), xbar.chi);
    mile(rep, tagged("tau(Xbar)", label, multi), xbar.tau);
    mile(rep, tagged("b2(Xbar)", label, multi), *xbar.b2);
    mile(rep, tagged("b3(Xbar)", label, multi), *xbar.b3);

    BlockInvariants x = open_part(xbar, bd.d, &tr);
    mile(rep, tagged("chi(X)", label, multi), x.chi);
    mile(rep, tagged("tau(X)", label, multi), x.tau);
    mile(rep, tagged("b2(X)", label, multi), *x.b2);
    mile(rep, tagged("b3(X)", label, multi), *x.b3);

    BlockInvariants z = quotient(x, x.sing_points, &tr);
    mile(rep, tagged("chi(Z)", label, multi), z.chi);
    mile(rep, tagged("tau(Z)", label, multi), z.tau);
    return z;
}

void finish_spin7(const Scenario& sc, const BlockInvariants& z1, const BlockInvariants& z2,
                  Report& rep, Trace& tr) {
    BlockInvariants mt = glue(z1, z2, &tr);
    mile(rep, "chi(Mt)", mt.chi);
    mile(rep, "tau(Mt)", mt.tau);
    mile(rep, "b4(Mt)", *mt.b4);

    rep.result = resolve(mt, sc.simply_connected.value, &tr);
    mile(rep, "chi(M)", rep.result.final.chi);
    mile(rep, "tau(M)", rep.result.final.tau);
    mile(rep, "b2(M)", *rep.result.final.b2);
    mile(rep, "b3(M)", *rep.result.final.b3);
    mile(rep, "b4(M)", *rep.result.final.b4);
    mile(rep, "A_hat", rep.result.a_hat);
}

} // namespace

Report run(const Scenario& sc) {
    Report rep;
    rep.scenario = sc.name;
    rep.description = sc.description;

    Trace tr;
    for (const auto& n : sc.notes)
        tr.warn(n);

    {
        std::ostringstream os;
        os << "weights " << sc.weights.to_string()
           << (is_well_formed(sc.weights) ? ": well-formed" : ": NOT well-formed");
        if (!is_well_formed(sc.weights))
            throw InconsistencyError("weights are not well-formed; normalize to " +
                                     normalize(sc.weights).to_string());
        tr.line("input", os.str(), "every n of the n+1 weights are coprime");
    }

    const std::size_t expected_blocks = sc.kind == PipelineKind::Spin7Glue ? 2 : 1;
    if (sc.blocks.size() != expected_blocks)
        throw ParseError("pipeline " + to_string(sc.kind) + " needs " +
                         std::to_string(expected_blocks) + " block(s)");
    const bool multi = sc.blocks.size() > 1;
    if (sc.simply_connected.value)
        tr.assume("simply connected: " + sc.simply_connected.source);

    std::vector<BlockData> blocks;
    for (const auto& b : sc.blocks)
        blocks.push_back(assemble_block(sc, b, rep, tr, multi));

    switch (sc.kind) {
    case PipelineKind::Spin7Double: {
        BlockInvariants z = chain_to_z(blocks[0], rep, tr, multi);
        finish_spin7(sc, z, z, rep, tr);
        break;
    }
    case PipelineKind::Spin7Glue: {
        BlockInvariants z1 = chain_to_z(blocks[0], rep, tr, multi);
        BlockInvariants z2 = chain_to_z(blocks[1], rep, tr, multi);
        finish_spin7(sc, z1, z2, rep, tr);
        break;
    }
    case PipelineKind::CyDouble: {
        BlockInvariants xbar = blow_up(blocks[0].v, blocks[0].s, &tr);
        mile(rep, "chi(Xbar)", xbar.chi);
        mile(rep, "tau(Xbar)", xbar.tau);
        BlockInvariants xhat = crepant_block(xbar, &tr);
        mile(rep, "chi(Xhat)", xhat.chi);
        mile(rep, "tau(Xhat)", xhat.tau);
        rep.result = cy_double(xhat, blocks[0].d, sc.simply_connected.value, &tr);
        mile(rep, "chi(M)", rep.result.final.chi);
        mile(rep, "tau(M)", rep.result.final.tau);
        mile(rep, "A_hat", rep.result.a_hat);
        break;
    }
    }

    rep.trace = tr.lines;
    rep.assumptions = tr.assumptions;
    rep.warnings = tr.warnings;
    return rep;
}

namespace {

struct ExpectedEntry {
    const char* name;
    const char* value;
};

// Final and intermediate values the builtin scenarios must reproduce, with
// the A-genus and holonomy of each resulting 8-manifold.
const std::vector<ExpectedEntry>& expected_for(const std::string& name) {
    static const std::vector<ExpectedEntry> section4 = {
        {"chi(D_cover)", "-2096"}, {"chi(D_branch)", "304"}, {"chi(D)", "-296"},
        {"chi(S_cover)", "7808"},  {"chi(S_branch)", "-768"}, {"chi(S)", "1376"},
        {"tau(S)", "-576"},        {"h02(S)", "199"},        {"chi(V)", "5"},
        {"tau(V)", "1"},           {"chi(Xbar)", "1381"},    {"tau(Xbar)", "577"},
        {"b2(Xbar)", "2"},         {"b3(Xbar)", "0"},        {"chi(X)", "1677"},
        {"tau(X)", "577"},         {"b2(X)", "1"},           {"b3(X)", "0"},
        {"chi(Z)", "839"},         {"tau(Z)", "289"},        {"chi(Mt)", "1678"},
        {"tau(Mt)", "578"},        {"b4(Mt)", "1676"},       {"chi(M)", "1680"},
        {"tau(M)", "576"},         {"b2(M)", "0"},           {"b3(M)", "0"},
        {"b4(M)", "1678"},         {"A_hat", "1"},           {"holonomy", "Spin(7)"}};
    static const std::vector<ExpectedEntry> m11 = {
        {"chi(V)", "306"},  {"tau(V)", "162"},  {"chi(D)", "-296"}, {"chi(S)", "304"},
        {"tau(S)", "-160"}, {"h02(S)", "35"},   {"chi(Xbar)", "610"}, {"tau(Xbar)", "322"},
        {"chi(X)", "906"},  {"chi(Z)", "454"},  {"tau(Z)", "162"},  {"chi(Mt)", "908"},
        {"tau(Mt)", "324"}, {"chi(M)", "912"},  {"tau(M)", "320"},  {"b2(M)", "0"},
        {"b3(M)", "0"},     {"b4(M)", "910"},   {"A_hat", "1"},     {"holonomy", "Spin(7)"}};
    static const std::vector<ExpectedEntry> m12 = {
        {"chi(Z)[V1]", "454"}, {"tau(Z)[V1]", "162"}, {"chi(Z)[V2]", "839"},
        {"tau(Z)[V2]", "289"}, {"chi(Mt)", "1293"},   {"tau(Mt)", "451"},
        {"chi(M)", "1296"},    {"tau(M)", "448"},     {"b2(M)", "0"},
        {"b3(M)", "0"},        {"b4(M)", "1294"},     {"A_hat", "1"},
        {"holonomy", "Spin(7)"}};
    static const std::vector<ExpectedEntry> m22 = {
        {"chi(V)", "5"},    {"tau(V)", "1"},    {"chi(S)", "1376"}, {"tau(S)", "-576"},
        {"chi(Xbar)", "1381"}, {"tau(Xbar)", "577"}, {"chi(Z)", "839"}, {"chi(M)", "1680"},
        {"tau(M)", "576"},  {"b2(M)", "0"},     {"b3(M)", "0"},     {"b4(M)", "1678"},
        {"A_hat", "1"},     {"holonomy", "Spin(7)"}};
    static const std::vector<ExpectedEntry> cy = {
        {"chi(Xbar)", "1381"}, {"tau(Xbar)", "577"}, {"chi(Xhat)", "1384"},
        {"tau(Xhat)", "576"},  {"chi(D)", "-296"},   {"chi(M)", "3360"},
        {"tau(M)", "1152"},    {"A_hat", "2"},       {"holonomy", "SU(4)"}};
    if (name == "section4")
        return section4;
    if (name == "m11")
        return m11;
    if (name == "m12")
        return m12;
    if (name == "m22")
        return m22;
    if (name == "cy-double")
        return cy;
    throw ParseError("no expected values for scenario: " + name);
}

} // namespace

Report reproduce(const std::string& name) {
    Report rep = run(builtin_scenario(name));
    for (const auto& e : expected_for(name)) {
        ExpectedCheck check;
        check.name = e.name;
        check.expected = e.value;
        if (check.name == "holonomy") {
            check.actual = to_string(rep.result.holonomy);
        } else {
            auto it = std::find_if(rep.milestones.begin(), rep.milestones.end(),
                                   [&](const auto& m) { return m.first == check.name; });
            check.actual = it == rep.milestones.end() ? "<missing>" : it->second.str();
        }
        check.pass = check.actual == check.expected;
        rep.comparisons.push_back(std::move(check));
    }
    return rep;
}

bool all_comparisons_pass(const Report& r) {
    return std::all_of(r.comparisons.begin(), r.comparisons.end(),
                       [](const ExpectedCheck& c) { return c.pass; });
}

} // namespace spin7
