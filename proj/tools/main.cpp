#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spin7/cayley.hpp"
#include "spin7/chern.hpp"
#include "spin7/cohomology.hpp"
#include "spin7/errors.hpp"
#include "spin7/report.hpp"
#include "spin7/scenario.hpp"
#include "spin7/series.hpp"

namespace {

using nlohmann::ordered_json;
using namespace spin7;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconsistency = 2;

std::vector<long long> parse_int_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            throw ParseError("empty entry in integer list: " + s);
        out.push_back(std::stoll(tok));
    }
    if (out.empty())
        throw ParseError("empty integer list");
    return out;
}

struct Options {
    std::string format = "text";
    bool strict = false;
};

int finish_report(const Report& rep, const Options& opt) {
    std::cout << emit(rep, parse_format(opt.format));
    if (!all_comparisons_pass(rep))
        return kExitInconsistency;
    for (const auto& c : rep.conditions)
        if (c.check.status == ConditionCheck::Status::Fail)
            return kExitInconsistency;
    if (opt.strict && !rep.warnings.empty()) {
        std::cerr << "strict mode: warnings present\n";
        return kExitInconsistency;
    }
    return kExitOk;
}

int cmd_hilbert(const std::string& num, const std::string& den, long long order,
                const Options& opt) {
    RationalSeriesSpec spec;
    if (!num.empty())
        spec.numerator = parse_int_list(num);
    spec.denominator = parse_int_list(den);
    spec.truncation_order = order;
    const PowerSeries series = expand(spec);
    if (parse_format(opt.format) == EmitFormat::Json) {
        ordered_json j;
        j["schema_version"] = 1;
        j["numerator"] = spec.numerator;
        j["denominator"] = spec.denominator;
        j["order"] = series.order();
        // decimal strings: the coefficients are exact big integers
        ordered_json coeffs = ordered_json::array();
        for (const auto& c : series.coefficients())
            coeffs.push_back(c.str());
        j["coefficients"] = std::move(coeffs);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "coefficients of prod(1-t^e)/prod(1-t^a), e = (" << num << "), a = ("
                  << den << ")\n";
        for (long long m = 0; m <= series.order(); ++m)
            std::cout << "  t^" << m << " : " << series.coefficient(m) << "\n";
    }
    return kExitOk;
}

int cmd_hodge(const std::string& weights, long long degree, const Options& opt) {
    const Weights w(parse_int_list(weights));
    const HodgeDiamond d = hypersurface_hodge(w, degree);
    if (parse_format(opt.format) == EmitFormat::Json) {
        ordered_json j;
        j["schema_version"] = 1;
        j["weights"] = w.values();
        j["degree"] = degree;
        j["dim"] = d.dim();
        ordered_json rows = ordered_json::array();
        for (const auto& row : d.triangle_rows()) {
            ordered_json rj = ordered_json::array();
            for (const auto& v : row)
                rj.push_back(v.str());
            rows.push_back(std::move(rj));
        }
        j["rows"] = std::move(rows);
        ordered_json betti = ordered_json::array();
        for (const auto& b : d.betti_vector())
            betti.push_back(b.str());
        j["betti"] = std::move(betti);
        j["euler"] = d.euler().str();
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "Hodge diamond of the degree-" << degree << " hypersurface in P"
              << w.to_string() << "\n";
    const auto rows = d.triangle_rows();
    std::size_t width = 1;
    for (const auto& row : rows)
        for (const auto& v : row)
            width = std::max(width, v.str().size());
    const std::size_t slot = width + 2;
    for (const auto& row : rows) {
        const std::size_t pad = (rows.size() - row.size()) * slot / 2;
        std::cout << std::string(pad, ' ');
        for (const auto& v : row) {
            std::string t = v.str();
            std::cout << std::string(slot - t.size(), ' ') << t;
        }
        std::cout << "\n";
    }
    std::cout << "betti:";
    for (const auto& b : d.betti_vector())
        std::cout << " " << b;
    std::cout << "\nchi = " << d.euler() << "\n";
    return kExitOk;
}

int cmd_euler_ci(int ambient, const std::string& degrees, const Options& opt) {
    const auto degs = degrees.empty() ? std::vector<long long>{} : parse_int_list(degrees);
    const Integer chi = euler_ci(ambient, degs);
    if (parse_format(opt.format) == EmitFormat::Json) {
        ordered_json j;
        j["schema_version"] = 1;
        j["ambient_dim"] = ambient;
        j["degrees"] = degs;
        j["euler"] = chi.str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "chi = " << chi << "\n";
    }
    return kExitOk;
}

int cmd_euler_branched(long long cover, long long branch, long long sheets,
                       const Options& opt) {
    const Integer chi = branched_euler(Integer(cover), Integer(branch), sheets);
    if (parse_format(opt.format) == EmitFormat::Json) {
        ordered_json j;
        j["schema_version"] = 1;
        j["cover"] = cover;
        j["branch"] = branch;
        j["sheets"] = sheets;
        j["euler"] = chi.str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "chi = " << chi << "\n";
    }
    return kExitOk;
}

int cmd_check(const std::string& scenario, const Options& opt) {
    const Scenario sc = load_scenario(scenario);
    Report rep;
    rep.scenario = sc.name;
    rep.description = sc.description;
    for (const auto& b : sc.blocks)
        for (auto& check : check_conditions(b.construction))
            rep.conditions.push_back({b.label, check});
    rep.warnings = sc.notes;
    return finish_report(rep, opt);
}

int cmd_pipeline(const std::string& scenario, const Options& opt) {
    return finish_report(run(load_scenario(scenario)), opt);
}

int cmd_reproduce(const std::string& name, const Options& opt) {
    std::vector<std::string> names;
    if (name == "all")
        names = builtin_scenario_names();
    else
        names = {name};

    // scenarios are pure value computations; fan out and print in order
    std::vector<std::future<Report>> futs;
    futs.reserve(names.size());
    for (const auto& n : names)
        futs.push_back(std::async(std::launch::async, [n] { return reproduce(n); }));

    int rc = kExitOk;
    for (auto& f : futs) {
        const Report rep = f.get();
        const int one = finish_report(rep, opt);
        rc = std::max(rc, one);
    }
    return rc;
}

int cmd_cayley_verify(const Options& opt) {
    const CayleyReport rep = run_cayley_suite();
    if (parse_format(opt.format) == EmitFormat::Json)
        std::cout << cayley_to_json(rep).dump(2) << "\n";
    else
        std::cout << emit_text(rep);
    return rep.all_pass() ? kExitOk : kExitInconsistency;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact topology of glued 8-manifolds with holonomy inside Spin(7)"};
    app.require_subcommand(1);
    app.fallthrough(); // accept --format/--strict after the subcommand too

    Options opt;
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--strict", opt.strict, "treat warnings as errors");

    std::string hilbert_num, hilbert_den;
    long long hilbert_order = 8;
    auto* hilbert = app.add_subcommand("hilbert", "expand prod(1-t^e)/prod(1-t^a)");
    hilbert->add_option("--num", hilbert_num, "numerator exponents, comma separated");
    hilbert->add_option("--den", hilbert_den, "denominator exponents, comma separated")
        ->required();
    hilbert->add_option("--order,-N", hilbert_order, "truncation order");

    std::string hodge_weights;
    long long hodge_degree = 0;
    auto* hodge = app.add_subcommand("hodge", "Hodge diamond of a weighted hypersurface");
    hodge->add_option("--weights", hodge_weights, "ambient weights, comma separated")
        ->required();
    hodge->add_option("--degree", hodge_degree, "hypersurface degree")->required();

    auto* euler = app.add_subcommand("euler", "Euler characteristics");
    euler->require_subcommand(1);
    int ci_ambient = 0;
    std::string ci_degrees;
    auto* euler_ci_cmd =
        euler->add_subcommand("ci", "smooth complete intersection in P^n");
    euler_ci_cmd->add_option("--ambient", ci_ambient, "ambient projective dimension")
        ->required();
    euler_ci_cmd->add_option("--degrees", ci_degrees, "degrees, comma separated");
    long long br_cover = 0, br_branch = 0, br_sheets = 4;
    auto* euler_br = euler->add_subcommand("branched", "push chi through a branched cover");
    euler_br->add_option("--cover", br_cover, "chi of the cover")->required();
    euler_br->add_option("--branch", br_branch, "chi of the branch slice")->required();
    euler_br->add_option("--sheets", br_sheets, "number of sheets");

    std::string check_scenario;
    auto* check = app.add_subcommand("check", "evaluate the construction conditions");
    check->add_option("scenario", check_scenario, "builtin name or scenario file")
        ->required();

    std::string pipeline_scenario;
    auto* pipeline =
        app.add_subcommand("pipeline", "run the full invariant chain of a scenario");
    pipeline->add_option("scenario", pipeline_scenario, "builtin name or scenario file")
        ->required();

    std::string reproduce_name;
    auto* reproduce_cmd =
        app.add_subcommand("reproduce", "run builtin scenarios against expected values");
    reproduce_cmd->add_option("name", reproduce_name, "builtin name or 'all'")->required();

    auto* cayley = app.add_subcommand("cayley", "Cayley form linear algebra");
    cayley->require_subcommand(1);
    cayley->add_subcommand("verify", "run the identity suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (hilbert->parsed())
            return cmd_hilbert(hilbert_num, hilbert_den, hilbert_order, opt);
        if (hodge->parsed())
            return cmd_hodge(hodge_weights, hodge_degree, opt);
        if (euler->parsed()) {
            if (euler_ci_cmd->parsed())
                return cmd_euler_ci(ci_ambient, ci_degrees, opt);
            return cmd_euler_branched(br_cover, br_branch, br_sheets, opt);
        }
        if (check->parsed())
            return cmd_check(check_scenario, opt);
        if (pipeline->parsed())
            return cmd_pipeline(pipeline_scenario, opt);
        if (reproduce_cmd->parsed())
            return cmd_reproduce(reproduce_name, opt);
        if (cayley->parsed())
            return cmd_cayley_verify(opt);
    } catch (const InconsistencyError& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return kExitInconsistency;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
