#include <json.hpp>

#include "spin7/errors.hpp"
#include "spin7/scenario.hpp"

// Strict scenario-file parsing: unknown fields are rejected, every error
// carries the path of the offending field, every numeric override needs a
// "source" string. The schema is documented in docs/scenario-schema.md.

namespace spin7 {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ParseError("scenario " + path + ": " + msg);
}

class Node {
public:
    Node(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

    const json& raw() const { return j_; }
    const std::string& path() const { return path_; }

    void require_object(std::initializer_list<const char*> allowed) const {
        if (!j_.is_object())
            fail(path_, "expected an object");
        for (const auto& [k, v] : j_.items()) {
            bool ok = false;
            for (const char* a : allowed)
                if (k == a) {
                    ok = true;
                    break;
                }
            if (!ok)
                fail(path_ + "." + k, "unknown field");
        }
    }

    bool has(const char* key) const { return j_.is_object() && j_.contains(key); }

    Node child(const char* key) const {
        if (!has(key))
            fail(path_ + "." + key, "missing field");
        return Node(j_.at(key), path_ + "." + key);
    }

    Node item(std::size_t i) const {
        return Node(j_.at(i), path_ + "[" + std::to_string(i) + "]");
    }

    std::size_t array_size() const {
        if (!j_.is_array())
            fail(path_, "expected an array");
        return j_.size();
    }

    std::string as_string() const {
        if (!j_.is_string())
            fail(path_, "expected a string");
        return j_.get<std::string>();
    }

    long long as_int() const {
        if (!j_.is_number_integer())
            fail(path_, "expected an integer");
        return j_.get<long long>();
    }

    bool as_bool() const {
        if (!j_.is_boolean())
            fail(path_, "expected a boolean");
        return j_.get<bool>();
    }

    std::vector<long long> as_int_array() const {
        std::vector<long long> out;
        for (std::size_t i = 0; i < array_size(); ++i)
            out.push_back(item(i).as_int());
        return out;
    }

    Rational as_rational() const {
        if (j_.is_number_integer())
            return Rational(j_.get<long long>());
        if (j_.is_string()) {
            try {
                return Rational(j_.get<std::string>());
            } catch (const std::exception&) {
                fail(path_, "not a rational number");
            }
        }
        fail(path_, "expected an integer or a rational string like \"3/4\"");
    }

private:
    const json& j_;
    std::string path_;
};

SourcedInt parse_sourced_int(const Node& n) {
    n.require_object({"value", "source"});
    return {Integer(n.child("value").as_int()), n.child("source").as_string()};
}

SourcedBool parse_sourced_bool(const Node& n) {
    n.require_object({"value", "source"});
    return {n.child("value").as_bool(), n.child("source").as_string()};
}

Assertion parse_assertion(const Node& n) {
    n.require_object({"value", "source"});
    return {n.child("value").as_bool(), n.child("source").as_string()};
}

SourcedDiamond parse_diamond(const Node& n) {
    n.require_object({"rows", "source"});
    const Node rows = n.child("rows");
    std::vector<std::vector<Integer>> triangle;
    for (std::size_t i = 0; i < rows.array_size(); ++i) {
        std::vector<Integer> row;
        const Node rn = rows.item(i);
        for (std::size_t k = 0; k < rn.array_size(); ++k)
            row.emplace_back(rn.item(k).as_int());
        triangle.push_back(std::move(row));
    }
    SourcedDiamond d;
    try {
        d.diamond = HodgeDiamond::from_triangle_rows(triangle);
    } catch (const ParseError& e) {
        fail(n.path() + ".rows", e.what());
    }
    d.source = n.child("source").as_string();
    return d;
}

CoverSpec parse_cover(const Node& n) {
    n.require_object({"ambient_dim", "degrees", "sheets"});
    CoverSpec c;
    c.ambient_dim = static_cast<int>(n.child("ambient_dim").as_int());
    c.degrees = n.child("degrees").as_int_array();
    c.sheets = n.child("sheets").as_int();
    return c;
}

StratumForm parse_stratum_form(const Node& n) {
    StratumForm f;
    f.variables = static_cast<int>(n.child("variables").as_int());
    const Node cs = n.child("coefficients");
    for (std::size_t i = 0; i < cs.array_size(); ++i)
        f.coeffs.push_back(cs.item(i).as_rational());
    return f;
}

ConstructionConfig parse_construction(const Node& n, const Weights& w) {
    n.require_object({"ci_degrees", "s_degree", "assertions"});
    ConstructionConfig c{w, {}, 0, {}, {}, {}, {}, {}};
    c.ci_degrees = n.child("ci_degrees").as_int_array();
    c.s_degree = n.child("s_degree").as_int();
    for (long long d : c.ci_degrees)
        if (d <= 0)
            fail(n.path() + ".ci_degrees", "degrees must be positive");
    if (c.s_degree <= 0)
        fail(n.path() + ".s_degree", "degrees must be positive");
    const Node a = n.child("assertions");
    a.require_object({"quasismooth", "d_smooth", "s_smooth", "involution_free_on_d_and_s",
                      "fixed_locus_is_singular_locus"});
    c.quasismooth = parse_assertion(a.child("quasismooth"));
    c.d_smooth = parse_assertion(a.child("d_smooth"));
    c.s_smooth = parse_assertion(a.child("s_smooth"));
    c.involution_free_on_d_and_s = parse_assertion(a.child("involution_free_on_d_and_s"));
    c.fixed_locus_is_singular_locus =
        parse_assertion(a.child("fixed_locus_is_singular_locus"));
    return c;
}

AmbientSpec parse_ambient(const Node& n) {
    n.require_object({"kind", "diamond", "tau", "verify_hypersurface_degree"});
    AmbientSpec a;
    const std::string kind = n.child("kind").as_string();
    if (kind == "weighted_projective_space")
        a.kind = AmbientSpec::Kind::WeightedProjectiveSpace;
    else if (kind == "diamond")
        a.kind = AmbientSpec::Kind::Diamond;
    else
        fail(n.path() + ".kind", "expected weighted_projective_space or diamond");
    if (n.has("diamond"))
        a.diamond = parse_diamond(n.child("diamond"));
    if (a.kind == AmbientSpec::Kind::Diamond && !a.diamond)
        fail(n.path() + ".diamond", "missing field");
    a.tau = parse_sourced_int(n.child("tau"));
    if (n.has("verify_hypersurface_degree"))
        a.verify_hypersurface_degree = n.child("verify_hypersurface_degree").as_int();
    return a;
}

DivisorSpec parse_divisor(const Node& n) {
    n.require_object({"kind", "degree", "diamond", "cover", "ci_degrees"});
    DivisorSpec d;
    const std::string kind = n.child("kind").as_string();
    if (kind == "hypersurface")
        d.kind = DivisorSpec::Kind::Hypersurface;
    else if (kind == "diamond")
        d.kind = DivisorSpec::Kind::Diamond;
    else
        fail(n.path() + ".kind", "expected hypersurface or diamond");
    if (n.has("degree"))
        d.degree = n.child("degree").as_int();
    if (n.has("diamond"))
        d.diamond = parse_diamond(n.child("diamond"));
    if (n.has("cover"))
        d.cover = parse_cover(n.child("cover"));
    if (n.has("ci_degrees"))
        d.ci_degrees = n.child("ci_degrees").as_int_array();
    if (d.kind == DivisorSpec::Kind::Hypersurface && !d.degree)
        fail(n.path() + ".degree", "missing field");
    if (d.kind == DivisorSpec::Kind::Diamond && !d.diamond)
        fail(n.path() + ".diamond", "missing field");
    return d;
}

SurfaceSpec parse_surface(const Node& n) {
    n.require_object({"kind", "cover", "ci_degrees", "h02_twist", "diamond"});
    SurfaceSpec s;
    const std::string kind = n.child("kind").as_string();
    if (kind == "branched_cover")
        s.kind = SurfaceSpec::Kind::BranchedCover;
    else if (kind == "diamond")
        s.kind = SurfaceSpec::Kind::Diamond;
    else
        fail(n.path() + ".kind", "expected branched_cover or diamond");
    if (n.has("cover"))
        s.cover = parse_cover(n.child("cover"));
    if (n.has("ci_degrees"))
        s.ci_degrees = n.child("ci_degrees").as_int_array();
    if (n.has("h02_twist"))
        s.h02_twist = n.child("h02_twist").as_int();
    if (n.has("diamond"))
        s.diamond = parse_diamond(n.child("diamond"));
    if (s.kind == SurfaceSpec::Kind::BranchedCover && !s.cover)
        fail(n.path() + ".cover", "missing field");
    if (s.kind == SurfaceSpec::Kind::BranchedCover && s.ci_degrees.empty())
        fail(n.path() + ".ci_degrees", "missing field");
    if (s.kind == SurfaceSpec::Kind::Diamond && !s.diamond)
        fail(n.path() + ".diamond", "missing field");
    return s;
}

BlockSpec parse_block(const Node& n, const Weights& w) {
    n.require_object({"label", "construction", "ambient", "divisor", "surface",
                      "fixed_points", "stratum_restriction"});
    BlockSpec b;
    b.label = n.child("label").as_string();
    b.construction = parse_construction(n.child("construction"), w);
    b.ambient = parse_ambient(n.child("ambient"));
    b.divisor = parse_divisor(n.child("divisor"));
    b.surface = parse_surface(n.child("surface"));
    b.fixed_points = parse_sourced_int(n.child("fixed_points"));
    if (b.fixed_points.value < 0)
        fail(n.path() + ".fixed_points.value", "must be nonnegative");
    if (n.has("stratum_restriction")) {
        const Node sr = n.child("stratum_restriction");
        sr.require_object({"variables", "coefficients", "source"});
        SourcedStratumForm f;
        f.form = parse_stratum_form(sr);
        f.source = sr.child("source").as_string();
        b.stratum_restriction = std::move(f);
    }
    return b;
}

} // namespace

Scenario parse_scenario(const std::string& json_text) {
    json parsed;
    try {
        parsed = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scenario: invalid JSON: ") + e.what());
    }
    const Node root(parsed, "$");
    root.require_object({"schema_version", "name", "description", "weights", "pipeline",
                         "simply_connected", "blocks", "notes"});
    if (root.child("schema_version").as_int() != 1)
        fail("$.schema_version", "unsupported version");

    Scenario s;
    s.name = root.child("name").as_string();
    if (root.has("description"))
        s.description = root.child("description").as_string();

    try {
        s.weights = Weights(root.child("weights").as_int_array());
    } catch (const ParseError& e) {
        fail("$.weights", e.what());
    }

    const std::string kind = root.child("pipeline").as_string();
    if (kind == "spin7_double")
        s.kind = PipelineKind::Spin7Double;
    else if (kind == "spin7_glue")
        s.kind = PipelineKind::Spin7Glue;
    else if (kind == "cy_double")
        s.kind = PipelineKind::CyDouble;
    else
        fail("$.pipeline", "expected spin7_double, spin7_glue or cy_double");

    s.simply_connected = parse_sourced_bool(root.child("simply_connected"));

    const Node blocks = root.child("blocks");
    for (std::size_t i = 0; i < blocks.array_size(); ++i)
        s.blocks.push_back(parse_block(blocks.item(i), s.weights));
    if (s.blocks.empty())
        fail("$.blocks", "at least one block is required");

    if (root.has("notes"))
        for (std::size_t i = 0; i < root.child("notes").array_size(); ++i)
            s.notes.push_back(root.child("notes").item(i).as_string());
    return s;
}

} // namespace spin7
