#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spin7/cohomology.hpp"
#include "spin7/pipeline.hpp"
#include "spin7/wps.hpp"

namespace spin7 {

/// Every numeric override carries the provenance of its value.
struct SourcedInt {
    Integer value = 0;
    std::string source;
    bool operator==(const SourcedInt&) const = default;
};

struct SourcedBool {
    bool value = false;
    std::string source;
    bool operator==(const SourcedBool&) const = default;
};

struct SourcedDiamond {
    HodgeDiamond diamond{0};
    std::string source;
};

struct SourcedStratumForm {
    StratumForm form;
    std::string source;
};

/// A complete intersection in the degree-1 cover of the weighted space,
/// together with the cover degree; its Euler characteristic and the one of
/// its branch-locus slice feed the branched covering formula.
struct CoverSpec {
    int ambient_dim = 0;
    std::vector<long long> degrees;
    long long sheets = 4;
};

struct AmbientSpec {
    enum class Kind { WeightedProjectiveSpace, Diamond } kind = Kind::WeightedProjectiveSpace;
    std::optional<SourcedDiamond> diamond;
    SourcedInt tau; // orbifold signatures are inputs, never computed
    std::optional<long long> verify_hypersurface_degree;
};

struct DivisorSpec {
    enum class Kind { Hypersurface, Diamond } kind = Kind::Hypersurface;
    std::optional<long long> degree;     // Hypersurface
    std::optional<SourcedDiamond> diamond;
    std::optional<CoverSpec> cover;      // independent chi route, cross-checked
    std::vector<long long> ci_degrees;   // graded-ring cross-checks for a diamond
};

struct SurfaceSpec {
    enum class Kind { BranchedCover, Diamond } kind = Kind::BranchedCover;
    std::optional<CoverSpec> cover;      // chi route for BranchedCover
    std::vector<long long> ci_degrees;   // degrees cutting the surface (graded-ring h^{0,2})
    long long h02_twist = 0;
    std::optional<SourcedDiamond> diamond;
};

struct BlockSpec {
    std::string label;
    ConstructionConfig construction;
    AmbientSpec ambient;
    DivisorSpec divisor;
    SurfaceSpec surface;
    SourcedInt fixed_points;
    std::optional<SourcedStratumForm> stratum_restriction;
};

enum class PipelineKind { Spin7Double, Spin7Glue, CyDouble };

std::string to_string(PipelineKind k);

struct Scenario {
    std::string name;
    std::string description;
    Weights weights{std::vector<long long>{1, 1}};
    PipelineKind kind = PipelineKind::Spin7Double;
    SourcedBool simply_connected;
    std::vector<BlockSpec> blocks; // one for doubles, two for a mixed gluing
    std::vector<std::string> notes; // pre-recorded warnings carried into reports
};

struct LabeledCondition {
    std::string block;
    ConditionCheck check;
};

struct ExpectedCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
    bool operator==(const ExpectedCheck&) const = default;
};

struct Report {
    int schema_version = 1;
    std::string scenario;
    std::string description;
    std::vector<LabeledCondition> conditions;
    std::vector<TraceLine> trace;
    std::vector<std::string> assumptions;
    std::vector<std::string> warnings;
    std::vector<std::pair<std::string, Integer>> milestones;
    GluingReport result;
    std::vector<ExpectedCheck> comparisons; // filled by reproduction runs
};

/// Names of the built-in reproduction scenarios.
std::vector<std::string> builtin_scenario_names();

/// Built-in scenario by name; throws ParseError for unknown names.
Scenario builtin_scenario(const std::string& name);

/// Built-in name, or a path to a scenario file (strict schema).
Scenario load_scenario(const std::string& name_or_path);

/// Parse a scenario from JSON text; unknown fields are rejected and errors
/// carry the offending field path.
Scenario parse_scenario(const std::string& json_text);

/// Validate, evaluate conditions, run the invariant chain, collect the trace.
Report run(const Scenario& s);

/// Run and compare against the embedded expected values for a builtin.
Report reproduce(const std::string& name);

/// True when every comparison line passed (vacuously true without comparisons).
bool all_comparisons_pass(const Report& r);

} // namespace spin7
