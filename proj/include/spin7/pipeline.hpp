#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spin7/cohomology.hpp"
#include "spin7/numeric.hpp"

namespace spin7 {

enum class Stage { V, Xbar, X, Z, Mtriangle, M, Xhat };
enum class Holonomy { Spin7, SU4, Sp2, Sp1xSp1, Indeterminate };

std::string to_string(Stage s);
std::string to_string(Holonomy h);

/// Topological bookkeeping of one building block as it moves through the
/// gluing chain. Betti numbers are tracked only where the chain needs them.
struct BlockInvariants {
    std::string label;
    Stage stage = Stage::V;
    Integer chi = 0;
    Integer tau = 0;
    std::optional<Integer> b2;
    std::optional<Integer> b3;
    std::optional<Integer> b4;
    long long sing_points = 0; // isolated scalar-Z4 points (or involution-fixed points)
};

/// Euler characteristic and middle Betti number of the anticanonical divisor,
/// the data the cylindrical-end removal consumes.
struct DivisorData {
    Integer chi = 0;
    Integer b2 = 0;
};

/// One instantiated equation of the chain, for the report.
struct TraceLine {
    std::string stage;
    std::string equation;
    std::string source;
    bool operator==(const TraceLine&) const = default;
};

struct Trace {
    std::vector<TraceLine> lines;
    std::vector<std::string> assumptions;
    std::vector<std::string> warnings;
    void line(std::string stage, std::string equation, std::string source);
    void assume(std::string a);
    void warn(std::string w);
};

struct GluingReport {
    BlockInvariants final;
    Integer a_hat = 0;
    Holonomy holonomy = Holonomy::Indeterminate;
    std::vector<std::string> assumption_log;
};

/// Blow up the ambient block along the surface; the exceptional divisor is
/// S x P^1, so chi gains chi(S) and tau loses tau(S).
BlockInvariants blow_up(const BlockInvariants& ambient, const SurfaceInvariants& s,
                        Trace* trace = nullptr);

/// Remove the anticanonical divisor (pass to the cylindrical-end piece).
BlockInvariants open_part(const BlockInvariants& xbar, const DivisorData& d,
                          Trace* trace = nullptr);

/// Divide by the antiholomorphic involution with the given number of isolated
/// fixed points; chi and tau both halve after the +k fixed-point correction.
BlockInvariants quotient(const BlockInvariants& x, long long fixed_points,
                         Trace* trace = nullptr);

/// Glue two cylindrical-end quotients along their common cross-section.
BlockInvariants glue(const BlockInvariants& z1, const BlockInvariants& z2,
                     Trace* trace = nullptr);

/// Replace each singular point by an ALE piece (chi +1, tau -1, b4 +1 per
/// point) and classify the holonomy through the A-genus.
GluingReport resolve(const BlockInvariants& mt, bool simply_connected,
                     Trace* trace = nullptr);

/// Crepant resolution of the scalar-Z4 points of the blown-up block
/// (each contributes chi +3 and tau -1).
BlockInvariants crepant_block(const BlockInvariants& xbar, Trace* trace = nullptr);

/// Double the crepant block along the anticanonical divisor into a closed
/// 8-manifold with holonomy inside SU(4) expected.
GluingReport cy_double(const BlockInvariants& xhat, const DivisorData& d,
                       bool simply_connected, Trace* trace = nullptr);

/// Holonomy of a compact 8-manifold with holonomy inside Spin(7) from its
/// A-genus, valid when simply connected; anything else is indeterminate.
Holonomy classify_holonomy(const Integer& a_hat, bool simply_connected);

} // namespace spin7
