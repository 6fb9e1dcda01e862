#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spin7/form.hpp"

namespace spin7 {

/// The standard Cayley 4-form on R^8: fourteen signed unit monomials.
Form make_cayley_form();

/// The two finite-order maps generating the quaternion group acting on
/// R^8 = H^2, and the coordinate swap identifying the two complex structures.
struct AleModelMaps {
    LinearMap8 alpha; // i-multiplication in the z-coordinates
    LinearMap8 beta;  // j-type map; i-multiplication in the w-coordinates
    LinearMap8 swap_zw;
};
AleModelMaps ale_model_maps();

/// Kahler form and real part of the holomorphic volume form of one of the two
/// flat Calabi-Yau structures inducing the Cayley form.
struct CalabiYauPresentation {
    Form kahler;         // omega
    Form re_volume;      // Re(dz1 ^ dz2 ^ dz3 ^ dz4)
    std::vector<std::pair<Form, Form>> coord_forms; // (Re dz_i, Im dz_i)
};
CalabiYauPresentation cy_presentation_z();
CalabiYauPresentation cy_presentation_w();

/// Cayley form assembled as (1/2) omega^2 + Re(volume).
Form cayley_from_presentation(const CalabiYauPresentation& p);

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CayleyReport {
    std::vector<CheckItem> checks;
    int orbit_rank = 0;     // dim span{L_A Phi : A in gl(8)}
    int stabilizer_dim = 0; // dim of the annihilator algebra, 64 - orbit_rank cross-checked
    int normal_dim = 0;     // 70 - orbit_rank
    int asd_dim = 0;        // dim of the anti-self-dual 4-forms
    bool sd_probe_in_tangent = false; // theta^1234 + theta^5678 membership, informational
    bool all_pass() const;
};

/// Group relations of the two generators plus the coordinate-swap identity.
CayleyReport verify_group_relations();

/// Spanning set {L_{E_ij} Phi} over the 64 elementary matrices.
std::vector<Form> orbit_tangent_basis();

/// Rank of the spanning set over Q (fraction-free elimination).
int orbit_tangent_rank();

/// Dimension of {A : L_A Phi = 0}, computed from the nullspace directly;
/// every kernel element is re-verified to annihilate the Cayley form.
int stabilizer_dimension();

/// True iff every anti-self-dual monomial combination theta^I - *theta^I lies
/// in the rational span of the orbit tangent basis.
bool check_asd_inclusion();

/// Orthogonal split of a 4-form into (tangent, normal) components at the
/// Cayley form, exact over Q. This is the linearization of the retraction
/// onto the orbit of Cayley forms.
std::pair<Form, Form> split_tangent_normal(const Form& eta);

/// Full identity suite: relations, pullback invariance, both Calabi-Yau
/// presentations, self-duality, orbit rank bookkeeping and the ASD inclusion.
CayleyReport run_cayley_suite();

} // namespace spin7
