#include "spin7/report.hpp"

#include <iomanip>
#include <sstream>

#include "spin7/errors.hpp"

namespace spin7 {

using nlohmann::ordered_json;

EmitFormat parse_format(const std::string& s) {
    if (s == "text")
        return EmitFormat::Text;
    if (s == "json")
        return EmitFormat::Json;
    throw ParseError("unknown format: " + s + " (expected text or json)");
}

namespace {

long long checked_ll(const Integer& v, const std::string& what) {
    if (v < std::numeric_limits<long long>::min() ||
        v > std::numeric_limits<long long>::max())
        throw Error(what + " does not fit a JSON integer");
    return static_cast<long long>(v);
}

std::string status_name(ConditionCheck::Status s) {
    switch (s) {
    case ConditionCheck::Status::Pass: return "PASS";
    case ConditionCheck::Status::Fail: return "FAIL";
    case ConditionCheck::Status::Asserted: return "ASSERTED";
    }
    return "?";
}

ConditionCheck::Status status_from_name(const std::string& s) {
    if (s == "PASS")
        return ConditionCheck::Status::Pass;
    if (s == "FAIL")
        return ConditionCheck::Status::Fail;
    if (s == "ASSERTED")
        return ConditionCheck::Status::Asserted;
    throw ParseError("unknown condition status: " + s);
}

Stage stage_from_name(const std::string& s) {
    for (Stage st : {Stage::V, Stage::Xbar, Stage::X, Stage::Z, Stage::Mtriangle,
                     Stage::M, Stage::Xhat})
        if (to_string(st) == s)
            return st;
    throw ParseError("unknown stage: " + s);
}

Holonomy holonomy_from_name(const std::string& s) {
    for (Holonomy h : {Holonomy::Spin7, Holonomy::SU4, Holonomy::Sp2, Holonomy::Sp1xSp1,
                       Holonomy::Indeterminate})
        if (to_string(h) == s)
            return h;
    throw ParseError("unknown holonomy: " + s);
}

ordered_json block_to_json(const BlockInvariants& b) {
    ordered_json j;
    j["label"] = b.label;
    j["stage"] = to_string(b.stage);
    j["chi"] = checked_ll(b.chi, "chi");
    j["tau"] = checked_ll(b.tau, "tau");
    if (b.b2)
        j["b2"] = checked_ll(*b.b2, "b2");
    if (b.b3)
        j["b3"] = checked_ll(*b.b3, "b3");
    if (b.b4)
        j["b4"] = checked_ll(*b.b4, "b4");
    j["sing_points"] = b.sing_points;
    return j;
}

BlockInvariants block_from_json(const ordered_json& j) {
    BlockInvariants b;
    b.label = j.at("label").get<std::string>();
    b.stage = stage_from_name(j.at("stage").get<std::string>());
    b.chi = Integer(j.at("chi").get<long long>());
    b.tau = Integer(j.at("tau").get<long long>());
    if (j.contains("b2"))
        b.b2 = Integer(j.at("b2").get<long long>());
    if (j.contains("b3"))
        b.b3 = Integer(j.at("b3").get<long long>());
    if (j.contains("b4"))
        b.b4 = Integer(j.at("b4").get<long long>());
    b.sing_points = j.at("sing_points").get<long long>();
    return b;
}

} // namespace

bool operator==(const BlockInvariants& a, const BlockInvariants& b) {
    return a.label == b.label && a.stage == b.stage && a.chi == b.chi && a.tau == b.tau &&
           a.b2 == b.b2 && a.b3 == b.b3 && a.b4 == b.b4 && a.sing_points == b.sing_points;
}

bool operator==(const GluingReport& a, const GluingReport& b) {
    return a.final == b.final && a.a_hat == b.a_hat && a.holonomy == b.holonomy &&
           a.assumption_log == b.assumption_log;
}

bool operator==(const Report& a, const Report& b) {
    auto cond_eq = [](const LabeledCondition& x, const LabeledCondition& y) {
        return x.block == y.block && x.check.id == y.check.id &&
               x.check.description == y.check.description && x.check.status == y.check.status &&
               x.check.detail == y.check.detail;
    };
    if (a.conditions.size() != b.conditions.size())
        return false;
    for (std::size_t i = 0; i < a.conditions.size(); ++i)
        if (!cond_eq(a.conditions[i], b.conditions[i]))
            return false;
    return a.schema_version == b.schema_version && a.scenario == b.scenario &&
           a.description == b.description && a.trace == b.trace &&
           a.assumptions == b.assumptions && a.warnings == b.warnings &&
           a.milestones == b.milestones && a.result == b.result &&
           a.comparisons == b.comparisons;
}

ordered_json report_to_json(const Report& r) {
    ordered_json j;
    j["schema_version"] = r.schema_version;
    j["scenario"] = r.scenario;
    j["description"] = r.description;
    j["conditions"] = ordered_json::array();
    for (const auto& c : r.conditions) {
        ordered_json cj;
        cj["block"] = c.block;
        cj["id"] = c.check.id;
        cj["description"] = c.check.description;
        cj["status"] = status_name(c.check.status);
        cj["detail"] = c.check.detail;
        j["conditions"].push_back(std::move(cj));
    }
    j["trace"] = ordered_json::array();
    for (const auto& t : r.trace) {
        ordered_json tj;
        tj["stage"] = t.stage;
        tj["equation"] = t.equation;
        tj["source"] = t.source;
        j["trace"].push_back(std::move(tj));
    }
    j["assumptions"] = r.assumptions;
    j["warnings"] = r.warnings;
    j["milestones"] = ordered_json::array();
    for (const auto& [name, value] : r.milestones) {
        ordered_json mj;
        mj["name"] = name;
        mj["value"] = checked_ll(value, name);
        j["milestones"].push_back(std::move(mj));
    }
    j["result"] = block_to_json(r.result.final);
    j["A_hat"] = checked_ll(r.result.a_hat, "A_hat");
    j["holonomy"] = to_string(r.result.holonomy);
    j["assumption_log"] = r.result.assumption_log;
    j["comparisons"] = ordered_json::array();
    for (const auto& c : r.comparisons) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["expected"] = c.expected;
        cj["actual"] = c.actual;
        cj["pass"] = c.pass;
        j["comparisons"].push_back(std::move(cj));
    }
    return j;
}

Report report_from_json(const ordered_json& j) {
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != 1)
        throw ParseError("unsupported report schema version");
    r.scenario = j.at("scenario").get<std::string>();
    r.description = j.at("description").get<std::string>();
    for (const auto& cj : j.at("conditions")) {
        LabeledCondition c;
        c.block = cj.at("block").get<std::string>();
        c.check.id = cj.at("id").get<int>();
        c.check.description = cj.at("description").get<std::string>();
        c.check.status = status_from_name(cj.at("status").get<std::string>());
        c.check.detail = cj.at("detail").get<std::string>();
        r.conditions.push_back(std::move(c));
    }
    for (const auto& tj : j.at("trace"))
        r.trace.push_back({tj.at("stage").get<std::string>(),
                           tj.at("equation").get<std::string>(),
                           tj.at("source").get<std::string>()});
    r.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    for (const auto& mj : j.at("milestones"))
        r.milestones.emplace_back(mj.at("name").get<std::string>(),
                                  Integer(mj.at("value").get<long long>()));
    r.result.final = block_from_json(j.at("result"));
    r.result.a_hat = Integer(j.at("A_hat").get<long long>());
    r.result.holonomy = holonomy_from_name(j.at("holonomy").get<std::string>());
    r.result.assumption_log = j.at("assumption_log").get<std::vector<std::string>>();
    for (const auto& cj : j.at("comparisons"))
        r.comparisons.push_back({cj.at("name").get<std::string>(),
                                 cj.at("expected").get<std::string>(),
                                 cj.at("actual").get<std::string>(),
                                 cj.at("pass").get<bool>()});
    return r;
}

namespace {

void hline(std::ostringstream& os, std::size_t a, std::size_t b, std::size_t c) {
    os << "+" << std::string(a + 2, '-') << "+" << std::string(b + 2, '-') << "+"
       << std::string(c + 2, '-') << "+\n";
}

} // namespace

std::string emit_text(const Report& r) {
    std::ostringstream os;
    os << "scenario: " << r.scenario << "\n";
    if (!r.description.empty())
        os << "  " << r.description << "\n";

    if (!r.conditions.empty()) {
        os << "\nconditions:\n";
        for (const auto& c : r.conditions)
            os << "  [" << status_name(c.check.status) << "] (" << c.check.id << ") "
               << c.block << ": " << c.check.description
               << (c.check.detail.empty() ? "" : " -- " + c.check.detail) << "\n";
    }

    if (!r.trace.empty()) {
        std::size_t w1 = 5, w2 = 8, w3 = 6;
        for (const auto& t : r.trace) {
            w1 = std::max(w1, t.stage.size());
            w2 = std::max(w2, t.equation.size());
            w3 = std::max(w3, t.source.size());
        }
        os << "\ntrace:\n";
        hline(os, w1, w2, w3);
        os << "| " << std::left << std::setw(static_cast<int>(w1)) << "stage" << " | "
           << std::setw(static_cast<int>(w2)) << "equation" << " | "
           << std::setw(static_cast<int>(w3)) << "source" << " |\n";
        hline(os, w1, w2, w3);
        for (const auto& t : r.trace)
            os << "| " << std::left << std::setw(static_cast<int>(w1)) << t.stage << " | "
               << std::setw(static_cast<int>(w2)) << t.equation << " | "
               << std::setw(static_cast<int>(w3)) << t.source << " |\n";
        hline(os, w1, w2, w3);
    }

    if (!r.assumptions.empty()) {
        os << "\nassumptions:\n";
        for (const auto& a : r.assumptions)
            os << "  - " << a << "\n";
    }
    if (!r.warnings.empty()) {
        os << "\nwarnings:\n";
        for (const auto& w : r.warnings)
            os << "  ! " << w << "\n";
    }

    if (!r.result.final.label.empty()) {
        os << "\nresult: " << r.result.final.label << "\n";
        os << "  chi = " << r.result.final.chi << ", tau = " << r.result.final.tau;
        if (r.result.final.b2)
            os << ", b2 = " << *r.result.final.b2;
        if (r.result.final.b3)
            os << ", b3 = " << *r.result.final.b3;
        if (r.result.final.b4)
            os << ", b4 = " << *r.result.final.b4;
        os << "\n  A-hat = " << r.result.a_hat
           << ", holonomy = " << to_string(r.result.holonomy) << "\n";
    }

    if (!r.comparisons.empty()) {
        os << "\nexpected values:\n";
        for (const auto& c : r.comparisons)
            os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << " = " << c.actual
               << (c.pass ? "" : " (expected " + c.expected + ")") << "\n";
    }
    return os.str();
}

std::string emit(const Report& r, EmitFormat f) {
    if (f == EmitFormat::Json)
        return report_to_json(r).dump(2) + "\n";
    return emit_text(r);
}

std::string emit_text(const CayleyReport& r) {
    std::ostringstream os;
    os << "Cayley form identity suite\n";
    for (const auto& c : r.checks)
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name
           << (c.detail.empty() ? "" : " -- " + c.detail) << "\n";
    os << "  orbit tangent rank = " << r.orbit_rank
       << ", stabilizer dimension = " << r.stabilizer_dim
       << ", normal dimension = " << r.normal_dim << "\n";
    os << "  anti-self-dual dimension = " << r.asd_dim << "\n";
    os << "  self-dual probe theta^{1234}+theta^{5678} in tangent span: "
       << (r.sd_probe_in_tangent ? "yes" : "no") << " (no claim either way)\n";
    return os.str();
}

nlohmann::ordered_json cayley_to_json(const CayleyReport& r) {
    ordered_json j;
    j["schema_version"] = 1;
    j["checks"] = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty())
            cj["detail"] = c.detail;
        j["checks"].push_back(std::move(cj));
    }
    j["orbit_rank"] = r.orbit_rank;
    j["stabilizer_dim"] = r.stabilizer_dim;
    j["normal_dim"] = r.normal_dim;
    j["asd_dim"] = r.asd_dim;
    j["sd_probe_in_tangent"] = r.sd_probe_in_tangent;
    j["all_pass"] = r.all_pass();
    return j;
}

} // namespace spin7
