#include "spin7/pipeline.hpp"

#include <sstream>

#include "spin7/errors.hpp"

namespace spin7 {

std::string to_string(Stage s) {
    switch (s) {
    case Stage::V: return "V";
    case Stage::Xbar: return "Xbar";
    case Stage::X: return "X";
    case Stage::Z: return "Z";
    case Stage::Mtriangle: return "M-triangle";
    case Stage::M: return "M";
    case Stage::Xhat: return "Xhat";
    }
    return "?";
}

std::string to_string(Holonomy h) {
    switch (h) {
    case Holonomy::Spin7: return "Spin(7)";
    case Holonomy::SU4: return "SU(4)";
    case Holonomy::Sp2: return "Sp(2)";
    case Holonomy::Sp1xSp1: return "Sp(1)xSp(1)";
    case Holonomy::Indeterminate: return "indeterminate";
    }
    return "?";
}

void Trace::line(std::string stage, std::string equation, std::string source) {
    lines.push_back({std::move(stage), std::move(equation), std::move(source)});
}
void Trace::assume(std::string a) { assumptions.push_back(std::move(a)); }
void Trace::warn(std::string w) { warnings.push_back(std::move(w)); }

namespace {

void require_stage(const BlockInvariants& b, Stage s, const char* op) {
    if (b.stage != s) {
        std::ostringstream os;
        os << op << " expects a block at stage " << to_string(s) << ", got "
           << to_string(b.stage) << " (" << b.label << ")";
        throw StageError(os.str());
    }
}

const Integer& require_field(const std::optional<Integer>& f, const char* what) {
    if (!f) {
        std::ostringstream os;
        os << "missing Betti field " << what;
        throw Error(os.str());
    }
    return *f;
}

// "Xbar(V)" -> core "V"; plain labels pass through
std::string label_core(const std::string& label) {
    const auto open = label.find('(');
    if (open == std::string::npos || label.back() != ')')
        return label;
    return label.substr(open + 1, label.size() - open - 2);
}

std::string stage_label(Stage s, const std::string& core) {
    return to_string(s) + "(" + core + ")";
}

std::string eq(const char* lhs, const Integer& out, std::initializer_list<Integer> inputs,
               const char* op_symbol) {
    std::ostringstream os;
    os << lhs << " = ";
    bool first = true;
    for (const auto& v : inputs) {
        if (!first)
            os << " " << op_symbol << " ";
        first = false;
        if (v < 0)
            os << "(" << v << ")";
        else
            os << v;
    }
    os << " = " << out;
    return os.str();
}

} // namespace

BlockInvariants blow_up(const BlockInvariants& ambient, const SurfaceInvariants& s,
                        Trace* trace) {
    require_stage(ambient, Stage::V, "blow_up");
    const Integer& b2v = require_field(ambient.b2, "b2(V)");
    const Integer& b3v = require_field(ambient.b3, "b3(V)");

    BlockInvariants out;
    out.label = stage_label(Stage::Xbar, label_core(ambient.label));
    out.stage = Stage::Xbar;
    out.chi = ambient.chi + s.chi; // chi(E) - chi(S) = chi(S) for E = S x P^1
    out.tau = ambient.tau - s.tau;
    out.b2 = b2v + s.b[0];
    out.b3 = b3v + s.b[1];
    out.sing_points = ambient.sing_points;
    if (trace) {
        trace->line(to_string(out.stage), eq("chi(Xbar)", out.chi, {ambient.chi, s.chi}, "+"),
                    "blow-up along the surface; the exceptional divisor is S x P^1");
        trace->line(to_string(out.stage), eq("tau(Xbar)", out.tau, {ambient.tau, -s.tau}, "+"),
                    "signature of the blow-up");
        trace->line(to_string(out.stage), eq("b2(Xbar)", *out.b2, {b2v, s.b[0]}, "+"),
                    "Betti numbers of a blow-up: b^i gains b^{i-2}(S)");
        trace->line(to_string(out.stage), eq("b3(Xbar)", *out.b3, {b3v, s.b[1]}, "+"),
                    "Betti numbers of a blow-up: b^i gains b^{i-2}(S)");
    }
    return out;
}

BlockInvariants open_part(const BlockInvariants& xbar, const DivisorData& d, Trace* trace) {
    require_stage(xbar, Stage::Xbar, "open_part");
    const Integer& b2bar = require_field(xbar.b2, "b2(Xbar)");
    const Integer& b3bar = require_field(xbar.b3, "b3(Xbar)");

    BlockInvariants out;
    out.label = stage_label(Stage::X, label_core(xbar.label));
    out.stage = Stage::X;
    out.chi = xbar.chi - d.chi;
    out.tau = xbar.tau; // tau(D x P^1) = 0 on the tubular boundary side
    out.b2 = b2bar - 1;
    out.b3 = b3bar + d.b2 - *out.b2;
    out.sing_points = xbar.sing_points;
    if (trace) {
        trace->line(to_string(out.stage), eq("chi(X)", out.chi, {xbar.chi, -d.chi}, "+"),
                    "removing the anticanonical divisor");
        {
            std::ostringstream t;
            t << "tau(X) = tau(Xbar) = " << out.tau;
            trace->line(to_string(out.stage), t.str(),
                        "signature unchanged: the removed neighborhood retracts to D x P^1 with tau = 0");
        }
        trace->line(to_string(out.stage), eq("b2(X)", *out.b2, {b2bar, Integer(-1)}, "+"),
                    "Mayer-Vietoris for the tubular neighborhood of D");
        trace->line(to_string(out.stage),
                    eq("b3(X)", *out.b3, {b3bar, d.b2, -*out.b2}, "+"),
                    "Mayer-Vietoris for the tubular neighborhood of D");
    }
    return out;
}

BlockInvariants quotient(const BlockInvariants& x, long long fixed_points, Trace* trace) {
    require_stage(x, Stage::X, "quotient");
    if (fixed_points < 0)
        throw Error("negative fixed-point count");
    if ((x.chi + fixed_points) % 2 != 0 || (x.tau + fixed_points) % 2 != 0) {
        std::ostringstream os;
        os << "involution quotient is not integral: chi = " << x.chi << ", tau = " << x.tau
           << ", fixed points = " << fixed_points << "; the fixed-point count is wrong";
        throw InconsistencyError(os.str());
    }

    BlockInvariants out;
    out.label = stage_label(Stage::Z, label_core(x.label));
    out.stage = Stage::Z;
    out.chi = (x.chi + fixed_points) / 2;
    out.tau = (x.tau + fixed_points) / 2;
    out.b2 = 0;
    out.b3 = 0;
    out.sing_points = fixed_points;
    if (trace) {
        std::ostringstream c, t;
        c << "chi(Z) = (" << x.chi << " + " << fixed_points << ")/2 = " << out.chi;
        t << "tau(Z) = (" << x.tau << " + " << fixed_points << ")/2 = " << out.tau;
        trace->line(to_string(out.stage), c.str(),
                    "free quotient away from the isolated fixed points");
        trace->line(to_string(out.stage), t.str(),
                    "free quotient away from the isolated fixed points");
        trace->assume("b2(Z) = b3(Z) = 0: the Kahler class is anti-invariant under the "
                      "involution and b3 of the open part vanishes");
    }
    return out;
}

BlockInvariants glue(const BlockInvariants& z1, const BlockInvariants& z2, Trace* trace) {
    require_stage(z1, Stage::Z, "glue");
    require_stage(z2, Stage::Z, "glue");
    for (const BlockInvariants* z : {&z1, &z2})
        if ((z->b2 && *z->b2 != 0) || (z->b3 && *z->b3 != 0))
            throw InconsistencyError("glue needs pieces with b2 = b3 = 0 (" + z->label +
                                     " violates this)");

    BlockInvariants out;
    out.label = stage_label(Stage::Mtriangle, label_core(z1.label) + " u " + label_core(z2.label));
    out.stage = Stage::Mtriangle;
    out.chi = z1.chi + z2.chi;
    out.tau = z1.tau + z2.tau;
    out.b2 = 0;
    out.b3 = 0;
    out.b4 = out.chi - 2;
    out.sing_points = z1.sing_points + z2.sing_points;
    if (trace) {
        trace->line(to_string(out.stage), eq("chi(Mt)", out.chi, {z1.chi, z2.chi}, "+"),
                    "gluing along the common cylindrical cross-section");
        trace->line(to_string(out.stage), eq("tau(Mt)", out.tau, {z1.tau, z2.tau}, "+"),
                    "Novikov additivity over the cross-section");
        trace->line(to_string(out.stage), eq("b4(Mt)", *out.b4, {out.chi, Integer(-2)}, "+"),
                    "Mayer-Vietoris with b1 = b2 = b3 = 0 on both pieces and the cross-section");
        trace->assume("the gluing condition holds: both pieces share the asymptotic model");
        trace->assume("the cross-section (D x S^1)/involution has b1 = b2 = 0");
    }
    return out;
}

GluingReport resolve(const BlockInvariants& mt, bool simply_connected, Trace* trace) {
    require_stage(mt, Stage::Mtriangle, "resolve");
    const long long k = mt.sing_points;
    const Integer& b4t = require_field(mt.b4, "b4(Mt)");

    GluingReport rep;
    rep.final.label = stage_label(Stage::M, label_core(mt.label));
    rep.final.stage = Stage::M;
    rep.final.chi = mt.chi + k;
    rep.final.tau = mt.tau - k;
    rep.final.b2 = mt.b2;
    rep.final.b3 = mt.b3;
    rep.final.b4 = b4t + k;
    rep.final.sing_points = 0;

    const Integer three_tau_minus_chi = 3 * rep.final.tau - rep.final.chi;
    if (three_tau_minus_chi % 48 != 0) {
        std::ostringstream os;
        os << "A-genus relation fails: 3*" << rep.final.tau << " - " << rep.final.chi << " = "
           << three_tau_minus_chi << " is not divisible by 48";
        throw InconsistencyError(os.str());
    }
    rep.a_hat = three_tau_minus_chi / 48;
    if (simply_connected && (rep.a_hat < 1 || rep.a_hat > 4)) {
        std::ostringstream os;
        os << "A-genus " << rep.a_hat << " is outside 1..4 for a simply-connected manifold "
              "with holonomy inside Spin(7)";
        throw ClassificationError(os.str());
    }
    rep.holonomy = classify_holonomy(rep.a_hat, simply_connected);

    if (trace) {
        std::ostringstream c, t, b, a;
        c << "chi(M) = " << mt.chi << " + " << k << " = " << rep.final.chi;
        t << "tau(M) = " << mt.tau << " - " << k << " = " << rep.final.tau;
        b << "b4(M) = " << b4t << " + " << k << " = " << *rep.final.b4;
        a << "A-hat = (3*" << rep.final.tau << " - " << rep.final.chi << ")/48 = " << rep.a_hat;
        const char* src = "each ALE piece has chi = 2, b4 = 1 and replaces a cone with chi = 1";
        trace->line("M", c.str(), src);
        trace->line("M", t.str(), src);
        trace->line("M", b.str(), src);
        trace->line("M", a.str(), "A-genus of a compact 8-manifold with holonomy inside Spin(7)");
        if (simply_connected)
            trace->assume("the resolved manifold is simply connected");
        rep.assumption_log = trace->assumptions;
    }
    return rep;
}

BlockInvariants crepant_block(const BlockInvariants& xbar, Trace* trace) {
    require_stage(xbar, Stage::Xbar, "crepant_block");
    const long long k = xbar.sing_points;

    BlockInvariants out;
    out.label = stage_label(Stage::Xhat, label_core(xbar.label));
    out.stage = Stage::Xhat;
    out.chi = xbar.chi + 3 * k;
    out.tau = xbar.tau - k;
    out.b2 = xbar.b2;
    out.b3 = xbar.b3;
    out.sing_points = 0;
    if (trace) {
        std::ostringstream c, t;
        c << "chi(Xhat) = " << xbar.chi << " - " << k << " + " << 4 * k << " = " << out.chi;
        t << "tau(Xhat) = " << xbar.tau << " - " << k << " = " << out.tau;
        trace->line(to_string(out.stage), c.str(),
                    "crepant resolution: each scalar-Z4 point is replaced by the canonical "
                    "bundle of P^3 with chi = 4");
        trace->line(to_string(out.stage), t.str(), "one negative middle class per resolved point");
    }
    return out;
}

GluingReport cy_double(const BlockInvariants& xhat, const DivisorData& d,
                       bool simply_connected, Trace* trace) {
    require_stage(xhat, Stage::Xhat, "cy_double");

    GluingReport rep;
    rep.final.label = stage_label(Stage::M, "2x " + label_core(xhat.label));
    rep.final.stage = Stage::M;
    rep.final.chi = 2 * (xhat.chi - d.chi);
    rep.final.tau = 2 * xhat.tau;
    rep.final.sing_points = 0;

    const Integer three_tau_minus_chi = 3 * rep.final.tau - rep.final.chi;
    if (three_tau_minus_chi % 48 != 0) {
        std::ostringstream os;
        os << "A-genus relation fails: 3*" << rep.final.tau << " - " << rep.final.chi << " = "
           << three_tau_minus_chi << " is not divisible by 48";
        throw InconsistencyError(os.str());
    }
    rep.a_hat = three_tau_minus_chi / 48;
    rep.holonomy = classify_holonomy(rep.a_hat, simply_connected);

    if (trace) {
        std::ostringstream c, t, a;
        c << "chi(M) = 2*(" << xhat.chi << " - (" << d.chi << ")) = " << rep.final.chi;
        t << "tau(M) = 2*" << xhat.tau << " - 0 = " << rep.final.tau;
        a << "A-hat = (3*" << rep.final.tau << " - " << rep.final.chi << ")/48 = " << rep.a_hat;
        trace->line("M", c.str(), "doubling the open part along the divisor");
        trace->line("M", t.str(), "tau(D x P^1) = 0");
        trace->line("M", a.str(), "A-genus of a compact 8-manifold with holonomy inside Spin(7)");
        if (simply_connected)
            trace->assume("the doubled manifold is simply connected");
        rep.assumption_log = trace->assumptions;
    }
    return rep;
}

Holonomy classify_holonomy(const Integer& a_hat, bool simply_connected) {
    if (!simply_connected)
        return Holonomy::Indeterminate;
    if (a_hat == 1)
        return Holonomy::Spin7;
    if (a_hat == 2)
        return Holonomy::SU4;
    if (a_hat == 3)
        return Holonomy::Sp2;
    if (a_hat == 4)
        return Holonomy::Sp1xSp1;
    return Holonomy::Indeterminate;
}

} // namespace spin7
