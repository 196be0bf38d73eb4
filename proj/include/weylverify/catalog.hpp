#pragma once

#include "weylverify/rootdata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wv {

enum class TorusKind { Full, Derived, Param };

struct TorusChoice {
    TorusKind kind = TorusKind::Full;
    long param = 0;

    static TorusChoice full() { return {}; }
    static TorusChoice derived() { return {TorusKind::Derived, 0}; }
    static TorusChoice with_param(long p) { return {TorusKind::Param, p}; }
    bool operator==(const TorusChoice&) const = default;
};

struct FamilyInstance {
    int family = 1;
    int m = 1;
    int n = 1;
    TorusChoice torus;
    bool operator==(const FamilyInstance&) const = default;
};

// "full", "derived", "a=-2", "b=1"
std::string torus_label(const FamilyInstance& inst);
// letter naming the torus parameter of the instance, or '\0'
char torus_param_name(const FamilyInstance& inst);

struct TangentCertificate {
    Weight weight;
    std::vector<int> support;  // indices into E
};

struct ExclusionRecipe {
    std::string label;
    TangentCertificate cert;
    std::vector<int> alt_support;  // an equal representative, when the eigenvector has two
    int lambda = -1;               // index into E
    std::optional<int> xi;         // left empty when the table omits it
};

struct CaseData {
    FamilyInstance inst;
    GroupSpec group;
    std::vector<Weight> E;
    std::vector<std::string> E_names;
    int b = 1;
    int dW = 0;  // closed form
    std::vector<Weight> kernel;  // characters cutting out T inside Tbar
    std::vector<Weight> expected_final;
    std::vector<Weight> expected_Gprime;
    std::vector<TangentCertificate> certificates;
    std::vector<ExclusionRecipe> recipes;
    bool filters_exact = false;
};

bool valid_parameters(int family, int m, int n);
CaseData resolve(const FamilyInstance& inst);

// All torus choices for (family, m, n) with parameters drawn from [lo, hi].
std::vector<TorusChoice> torus_options(int family, int m, int n, long lo, long hi);
// Kernel characters for a torus choice.
std::vector<Weight> torus_kernel(int family, int m, int n, const TorusChoice& t);

// Both of these live in SL(m), factor 0 of a one-factor spec.
std::vector<Weight> consecfund_weights(int m, int k);
std::vector<Weight> consecfundgap_weights(int m, int k);

int closed_form_dW(int family, int m, int n);

struct Identity {
    std::string name;
    GroupSpec group;
    Weight lhs;
    std::vector<std::pair<Int, Weight>> rhs;
};

// Every expansion identity of the family for these parameters; for the
// torus-dependent ones, one identity per parameter value in [lo, hi].
std::vector<Identity> identities(int family, int m, int n, long lo, long hi);

}  // namespace wv
