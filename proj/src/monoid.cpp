#include "weylverify/monoid.hpp"

#include <stdexcept>

namespace wv {

bool is_saturated_criterion(const std::vector<Weight>& E, const GroupSpec& spec) {
    if (!linearly_independent(E, spec.basis_dim())) throw std::invalid_argument("basic weights are dependent");
    auto pi = simple_roots(spec);
    // A simple root can serve lambda_i only if it is nonzero on lambda_i alone,
    // so distinct lambdas never compete and the matching reduces to existence.
    std::vector<bool> matched(E.size(), false);
    for (auto s : pi) {
        int owner = -1, hits = 0;
        for (std::size_t i = 0; i < E.size(); ++i)
            if (coroot_pairing(spec, E[i], s) != 0) {
                owner = static_cast<int>(i);
                ++hits;
            }
        if (hits == 1) matched[owner] = true;
    }
    for (bool b : matched)
        if (!b) return false;
    return true;
}

bool is_saturated_bruteforce(const std::vector<Weight>& E, const GroupSpec& spec, int box) {
    if (!linearly_independent(E, spec.basis_dim())) throw std::invalid_argument("basic weights are dependent");
    std::size_t k = E.size();
    if (k == 0) return true;
    std::vector<int> c(k, -box);
    while (true) {
        bool negative = false;
        for (int x : c) negative = negative || x < 0;
        if (negative) {
            Weight w = zero_weight(spec);
            for (std::size_t i = 0; i < k; ++i) w = add(w, scale(Int(c[i]), E[i]));
            if (is_dominant(spec, w)) return false;
        }
        std::size_t i = 0;
        while (i < k && c[i] == box) c[i++] = -box;
        if (i == k) return true;
        ++c[i];
    }
}

}  // namespace wv
