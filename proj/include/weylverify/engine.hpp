#pragma once

#include "weylverify/catalog.hpp"
#include "weylverify/rootdata.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wv {

std::vector<PositiveRoot> e_perp(const GroupSpec& spec, const std::vector<Weight>& E);
// weights of g.x0 as a T_ad-module: positive roots outside E-perp, plus 0
std::vector<Weight> gx0_weight_set(const GroupSpec& spec, const std::vector<Weight>& E);

// Spherical-root table: orthogonal pairs (also across factors), doubled simple
// roots, strings of two or more consecutive simple roots, a_i + 2a_{i+1} + a_{i+2}.
std::vector<Weight> candidate_weights(const GroupSpec& spec);
// candidate_weights plus the simple roots themselves
std::vector<Weight> extended_candidates(const GroupSpec& spec);

struct FilterTrace {
    Weight candidate;
    bool passed_lattice = false;
    std::optional<Vec> witness;  // coefficients over E
    bool passed_simple_root = false;
    std::optional<SimpleRootId> delta;
    bool passed_mixed_pair = true;
    bool passed_occupancy = false;
    std::optional<int> occupied_by;  // index into E
    bool in_expected = false;

    bool survives() const { return passed_lattice && passed_simple_root && passed_mixed_pair && passed_occupancy; }
};

// gamma survives when q(gamma) lies in the group generated by q(E)
std::vector<FilterTrace> lattice_filter(const std::vector<Weight>& candidates, const GroupSpec& spec,
                                        const std::vector<Weight>& E, const QuotientMap& q);
// gamma survives when gamma - delta is a weight of g.x0 for some simple root delta
std::vector<FilterTrace> simple_root_filter(const std::vector<Weight>& candidates, const GroupSpec& spec,
                                            const std::vector<Weight>& E);
// gamma = sigma + sigma' across two factors survives only if sigma and sigma'
// pair nonzero with the same elements of E, in a constant ratio.
bool mixed_pair_ok(const GroupSpec& spec, const std::vector<Weight>& E, const Weight& gamma);
// Some lambda in E has lambda - gamma as a weight of V(lambda) (dominance test per factor).
std::optional<int> occupancy_witness(const GroupSpec& spec, const std::vector<Weight>& E, const Weight& gamma);

// All four filters in one pass.
std::vector<FilterTrace> run_filters(const std::vector<Weight>& candidates, const GroupSpec& spec,
                                     const std::vector<Weight>& E, const QuotientMap& q);

bool is_spherical_restriction(const std::vector<Weight>& E, const QuotientMap& q, std::size_t dim);
int dW_camus(const std::vector<Weight>& E, int b, std::size_t dim);

// Unique c with q(beta) = sum c_i q(E_i). Throws when q is not injective on <E>
// or q(beta) is outside <q(E)>.
Vec expand_in_E(const Weight& beta, const std::vector<Weight>& E, const QuotientMap& q, std::size_t dim);
bool in_lattice(const Weight& beta, const std::vector<Weight>& E, const QuotientMap& q, std::size_t dim);

bool codim1_orbit_check(const GroupSpec& spec, const std::vector<Weight>& E, int lambda);

struct ExclusionTrace {
    std::string label;
    Weight weight;
    int lambda = -1;
    Int es1_coefficient = 0;
    bool es1 = false, es2 = false, es3 = false, es4 = false;
    std::vector<std::pair<SimpleRootId, int>> es3_witness;  // eta -> lambda-tilde
    std::optional<int> xi;
    bool es4_vacuous = false;  // beta is not in R+ \ E-perp

    bool applicable() const { return es1 && es2 && es3 && es4; }
};

// When xi is absent the engine searches E \ {lambda} for one.
ExclusionTrace exclusion_applicable(const GroupSpec& spec, const std::vector<Weight>& E, const QuotientMap& q,
                                    const TangentCertificate& cert, int lambda, std::optional<int> xi);

enum class Status { Pass, Fail, Surplus, NonSpherical };
std::string status_name(Status s);
std::optional<Status> parse_status(const std::string& s);

struct VerificationReport {
    FamilyInstance instance;
    GroupSpec group;
    int dW_camus = 0;
    int dW_closed = 0;
    std::vector<Weight> candidates;
    std::vector<Weight> survivors;  // filter survivors at the level of the chosen group
    std::vector<Weight> surplus;    // survivors the filters could not rule out
    std::vector<ExclusionTrace> exclusions;
    std::vector<Weight> final_set;
    Status status = Status::Fail;
    std::vector<std::string> notes;
};

VerificationReport verify_instance(const FamilyInstance& inst);

bool verify_identity(const Weight& lhs, const std::vector<std::pair<Int, Weight>>& rhs_terms);

// omega_1, omega', omega''_1 are outside <w1+w', w'+w''1, w1+w''1> for GL(m) x SL(2) x GL(n)
bool noomone_check(int m = 2, int n = 2);

// nonzero simple-root coordinates in at least two factors
bool is_mixed(const GroupSpec& spec, const Weight& w);

}  // namespace wv
