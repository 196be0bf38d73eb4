#pragma once

#include "weylverify/intlattice.hpp"

#include <string>
#include <vector>

namespace wv {

using Weight = Vec;

enum class FactorKind { GL, SL, Torus };

struct GroupFactor {
    FactorKind kind = FactorKind::GL;
    int size = 1;

    // rank of the factor's character lattice
    int dim() const;
    bool has_roots() const { return kind != FactorKind::Torus && size >= 2; }
};

GroupFactor GL(int k);
GroupFactor SL(int k);
GroupFactor Torus();

class GroupSpec {
public:
    GroupSpec() = default;
    explicit GroupSpec(std::vector<GroupFactor> factors);

    const std::vector<GroupFactor>& factors() const { return factors_; }
    int basis_dim() const { return dim_; }
    int offset(int factor) const { return offsets_.at(factor); }
    // GL(k) -> SL(k), tori dropped
    GroupSpec derived() const;
    std::string describe() const;
    bool operator==(const GroupSpec& o) const;

private:
    std::vector<GroupFactor> factors_;
    std::vector<int> offsets_;
    int dim_ = 0;
};

struct SimpleRootId {
    int factor = 0;
    int position = 1;
    bool operator==(const SimpleRootId&) const = default;
    auto operator<=>(const SimpleRootId&) const = default;
};

struct PositiveRoot {
    int factor = 0;
    int i = 1, j = 2;
    bool operator==(const PositiveRoot&) const = default;
};

Weight zero_weight(const GroupSpec& spec);
// omega_i of a GL/SL factor; omega_0 and omega_k of SL(k) are the zero vector
Weight fundamental(const GroupSpec& spec, int factor, int i);
// epsilon of a torus factor
Weight torus_char(const GroupSpec& spec, int factor);

Weight simple_root(const GroupSpec& spec, SimpleRootId id);
std::vector<SimpleRootId> simple_roots(const GroupSpec& spec);
std::vector<PositiveRoot> positive_roots(const GroupSpec& spec);
Weight root_as_weight(const GroupSpec& spec, const PositiveRoot& r);

// e-coordinates of one GL/SL block; SL lifts have last coordinate 0
std::vector<Int> e_coords(const GroupSpec& spec, const Weight& w, int factor);
Weight from_e_coords(const GroupSpec& spec, int factor, const std::vector<Int>& c);

Int coroot_pairing(const GroupSpec& spec, const Weight& w, const PositiveRoot& r);
Int coroot_pairing(const GroupSpec& spec, const Weight& w, SimpleRootId s);
std::vector<std::vector<Int>> cartan_matrix(const GroupSpec& spec);

bool is_dominant(const GroupSpec& spec, const Weight& w);
Weight dual_weight(const GroupSpec& spec, const Weight& w);
Weight restrict_to_derived(const GroupSpec& spec, const Weight& w);
// characters vanishing on the derived group: omega_k per GL(k), epsilon per torus
std::vector<Weight> central_characters(const GroupSpec& spec);

// Coefficients of a root-lattice element over the simple roots, or nullopt
// when w is not in the root lattice.
std::optional<std::vector<Int>> simple_root_coords(const GroupSpec& spec, const Weight& w);
// Human-readable name such as "a1+2a2+a'1"; only for root-lattice elements.
std::string root_label(const GroupSpec& spec, const Weight& w);

// X(Tbar) -> X(T), where T is the connected subtorus cut out by kernel_chars.
class QuotientMap {
public:
    QuotientMap() = default;
    QuotientMap(const GroupSpec& spec, const std::vector<Weight>& kernel_chars);

    const IntegerLattice& kernel() const { return kernel_; }
    // canonical representative of w modulo the saturated kernel
    Weight apply(const Weight& w) const;
    bool equal(const Weight& u, const Weight& v) const;
    bool is_identity() const { return kernel_.rank() == 0; }

private:
    IntegerLattice kernel_;
};

QuotientMap quotient_by_subtorus(const GroupSpec& spec, const std::vector<Weight>& kernel_chars);

}  // namespace wv
