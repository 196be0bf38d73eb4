#include "weylverify/engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wv {

namespace {

void sort_unique(std::vector<Weight>& ws) {
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
}

bool contains_weight(const std::vector<Weight>& ws, const Weight& w) {
    return std::find(ws.begin(), ws.end(), w) != ws.end();
}

bool pairs_nonzero(const GroupSpec& spec, const Weight& w, const PositiveRoot& r) {
    return coroot_pairing(spec, w, r) != 0;
}

bool in_e_perp(const GroupSpec& spec, const std::vector<Weight>& E, const PositiveRoot& r) {
    for (const auto& l : E)
        if (pairs_nonzero(spec, l, r)) return false;
    return true;
}

PositiveRoot as_root(SimpleRootId s) { return {s.factor, s.position, s.position + 1}; }

// Sorted-decreasing majorization with equal totals.
bool dominated(std::vector<Int> mu, std::vector<Int> lam) {
    std::sort(mu.begin(), mu.end(), std::greater<>());
    std::sort(lam.begin(), lam.end(), std::greater<>());
    Int a = 0, b = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        a += mu[i];
        b += lam[i];
        if (a > b) return false;
    }
    return a == b;
}

IntegerLattice combined(const std::vector<Weight>& E, const QuotientMap& q, std::size_t dim) {
    std::vector<Vec> gens = E;
    for (const auto& k : q.kernel().basis()) gens.push_back(k);
    return IntegerLattice(dim, gens);
}

}  // namespace

std::vector<PositiveRoot> e_perp(const GroupSpec& spec, const std::vector<Weight>& E) {
    std::vector<PositiveRoot> out;
    for (const auto& r : positive_roots(spec))
        if (in_e_perp(spec, E, r)) out.push_back(r);
    return out;
}

std::vector<Weight> gx0_weight_set(const GroupSpec& spec, const std::vector<Weight>& E) {
    std::vector<Weight> out{zero_weight(spec)};
    for (const auto& r : positive_roots(spec))
        if (!in_e_perp(spec, E, r)) out.push_back(root_as_weight(spec, r));
    sort_unique(out);
    return out;
}

std::vector<Weight> candidate_weights(const GroupSpec& spec) {
    auto pi = simple_roots(spec);
    std::vector<Weight> out;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        Weight a = simple_root(spec, pi[i]);
        out.push_back(scale(Int(2), a));
        for (std::size_t j = i + 1; j < pi.size(); ++j) {
            bool orthogonal = pi[i].factor != pi[j].factor || std::abs(pi[i].position - pi[j].position) >= 2;
            if (orthogonal) out.push_back(add(a, simple_root(spec, pi[j])));
        }
    }
    for (int f = 0; f < static_cast<int>(spec.factors().size()); ++f) {
        const auto& fac = spec.factors()[f];
        if (!fac.has_roots()) continue;
        for (int i = 1; i < fac.size; ++i) {
            Weight s = simple_root(spec, {f, i});
            for (int j = i + 1; j < fac.size; ++j) {
                s = add(s, simple_root(spec, {f, j}));
                out.push_back(s);
            }
            if (i + 2 < fac.size)
                out.push_back(add(add(simple_root(spec, {f, i}), scale(Int(2), simple_root(spec, {f, i + 1}))),
                                  simple_root(spec, {f, i + 2})));
        }
    }
    sort_unique(out);
    return out;
}

std::vector<Weight> extended_candidates(const GroupSpec& spec) {
    auto out = candidate_weights(spec);
    for (auto s : simple_roots(spec)) out.push_back(simple_root(spec, s));
    sort_unique(out);
    return out;
}

std::vector<FilterTrace> lattice_filter(const std::vector<Weight>& candidates, const GroupSpec& spec,
                                        const std::vector<Weight>& E, const QuotientMap& q) {
    std::size_t dim = spec.basis_dim();
    IntegerLattice L = combined(E, q, dim);
    bool injective = is_spherical_restriction(E, q, dim);
    std::vector<FilterTrace> out;
    for (const auto& g : candidates) {
        FilterTrace t;
        t.candidate = g;
        auto c = member(g, L);
        t.passed_lattice = c.has_value();
        if (c && injective) t.witness = Vec(c->begin(), c->begin() + E.size());
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<FilterTrace> simple_root_filter(const std::vector<Weight>& candidates, const GroupSpec& spec,
                                            const std::vector<Weight>& E) {
    auto allowed = gx0_weight_set(spec, E);
    std::vector<FilterTrace> out;
    for (const auto& g : candidates) {
        FilterTrace t;
        t.candidate = g;
        for (auto s : simple_roots(spec)) {
            if (contains_weight(allowed, sub(g, simple_root(spec, s)))) {
                t.passed_simple_root = true;
                t.delta = s;
                break;
            }
        }
        out.push_back(std::move(t));
    }
    return out;
}

bool mixed_pair_ok(const GroupSpec& spec, const std::vector<Weight>& E, const Weight& gamma) {
    auto coords = simple_root_coords(spec, gamma);
    if (!coords) return true;
    auto pi = simple_roots(spec);
    std::vector<SimpleRootId> used;
    for (std::size_t k = 0; k < pi.size(); ++k) {
        if ((*coords)[k] == 0) continue;
        if ((*coords)[k] != 1) return true;
        used.push_back(pi[k]);
    }
    if (used.size() != 2 || used[0].factor == used[1].factor) return true;
    // ratio p/q must be constant over the lambdas pairing nonzero with either root
    std::optional<std::pair<Int, Int>> ratio;
    bool any = false;
    for (const auto& l : E) {
        Int p = coroot_pairing(spec, l, used[0]);
        Int r = coroot_pairing(spec, l, used[1]);
        if ((p == 0) != (r == 0)) return false;
        if (p == 0) continue;
        any = true;
        if (!ratio)
            ratio = std::make_pair(p, r);
        else if (p * ratio->second != r * ratio->first)
            return false;
    }
    return any;
}

std::optional<int> occupancy_witness(const GroupSpec& spec, const std::vector<Weight>& E, const Weight& gamma) {
    for (std::size_t li = 0; li < E.size(); ++li) {
        bool ok = true;
        for (int f = 0; f < static_cast<int>(spec.factors().size()) && ok; ++f) {
            const auto& fac = spec.factors()[f];
            if (fac.kind == FactorKind::Torus) {
                ok = gamma[spec.offset(f)] == 0;
                continue;
            }
            auto lam = e_coords(spec, E[li], f);
            auto gam = e_coords(spec, gamma, f);
            Int s = 0;
            for (const auto& x : gam) s += x;
            if (!mpz_divisible_ui_p(s.get_mpz_t(), fac.size)) {
                ok = false;
                break;
            }
            Int shift = s / fac.size;
            std::vector<Int> mu(lam.size());
            for (std::size_t i = 0; i < lam.size(); ++i) mu[i] = lam[i] - (gam[i] - shift);
            ok = dominated(mu, lam);
        }
        if (ok) return static_cast<int>(li);
    }
    return std::nullopt;
}

std::vector<FilterTrace> run_filters(const std::vector<Weight>& candidates, const GroupSpec& spec,
                                     const std::vector<Weight>& E, const QuotientMap& q) {
    auto out = lattice_filter(candidates, spec, E, q);
    auto sr = simple_root_filter(candidates, spec, E);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].passed_simple_root = sr[i].passed_simple_root;
        out[i].delta = sr[i].delta;
        out[i].passed_mixed_pair = mixed_pair_ok(spec, E, out[i].candidate);
        out[i].occupied_by = occupancy_witness(spec, E, out[i].candidate);
        out[i].passed_occupancy = out[i].occupied_by.has_value();
    }
    return out;
}

bool is_spherical_restriction(const std::vector<Weight>& E, const QuotientMap& q, std::size_t dim) {
    IntegerLattice e(dim, E);
    return intersect(q.kernel(), e).rank() == 0;
}

int dW_camus(const std::vector<Weight>& E, int b, std::size_t dim) {
    if (b < 1) throw std::invalid_argument("summand count must be positive");
    return static_cast<int>(IntegerLattice(dim, E).rank()) - b;
}

Vec expand_in_E(const Weight& beta, const std::vector<Weight>& E, const QuotientMap& q, std::size_t dim) {
    if (!linearly_independent(E, dim) || !is_spherical_restriction(E, q, dim))
        throw std::logic_error("q is not injective on <E>");
    auto c = member(beta, combined(E, q, dim));
    if (!c) throw std::domain_error("weight is not in <q(E)>");
    return Vec(c->begin(), c->begin() + E.size());
}

bool in_lattice(const Weight& beta, const std::vector<Weight>& E, const QuotientMap& q, std::size_t dim) {
    return member(beta, combined(E, q, dim)).has_value();
}

bool codim1_orbit_check(const GroupSpec& spec, const std::vector<Weight>& E, int lambda) {
    if (lambda < 0 || lambda >= static_cast<int>(E.size())) throw std::invalid_argument("lambda is not in E");
    std::vector<Weight> rest;
    for (std::size_t i = 0; i < E.size(); ++i)
        if (static_cast<int>(i) != lambda) rest.push_back(E[i]);
    for (auto s : simple_roots(spec))
        if (in_e_perp(spec, E, as_root(s)) != in_e_perp(spec, rest, as_root(s))) return false;
    return true;
}

ExclusionTrace exclusion_applicable(const GroupSpec& spec, const std::vector<Weight>& E, const QuotientMap& q,
                                    const TangentCertificate& cert, int lambda, std::optional<int> xi) {
    if (lambda < 0 || lambda >= static_cast<int>(E.size())) throw std::invalid_argument("lambda is not in E");
    ExclusionTrace t;
    t.weight = cert.weight;
    t.lambda = lambda;
    const Weight& beta = cert.weight;
    auto in_support = [&](int i) {
        return std::find(cert.support.begin(), cert.support.end(), i) != cert.support.end();
    };

    Vec c = expand_in_E(beta, E, q, spec.basis_dim());
    t.es1_coefficient = c[lambda];
    t.es1 = t.es1_coefficient > 0;

    t.es2 = !in_support(lambda);

    t.es3 = true;
    for (auto eta : simple_roots(spec)) {
        if (coroot_pairing(spec, E[lambda], eta) == 0) continue;
        int found = -1;
        for (std::size_t i = 0; i < E.size() && found < 0; ++i)
            if (static_cast<int>(i) != lambda && coroot_pairing(spec, E[i], eta) != 0) found = static_cast<int>(i);
        if (found < 0) {
            t.es3 = false;
            break;
        }
        t.es3_witness.push_back({eta, found});
    }

    std::optional<PositiveRoot> root;
    for (const auto& r : positive_roots(spec))
        if (root_as_weight(spec, r) == beta) root = r;
    if (!root || in_e_perp(spec, E, *root)) {
        t.es4_vacuous = true;
        t.es4 = true;
    } else {
        auto good = [&](int i) {
            return i != lambda && !in_support(i) && pairs_nonzero(spec, E[i], *root);
        };
        if (xi) {
            t.xi = xi;
            t.es4 = *xi >= 0 && *xi < static_cast<int>(E.size()) && good(*xi);
        } else {
            for (int i = 0; i < static_cast<int>(E.size()) && !t.xi; ++i)
                if (good(i)) t.xi = i;
            t.es4 = t.xi.has_value();
        }
    }
    return t;
}

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Surplus: return "SURPLUS";
        case Status::NonSpherical: return "NONSPHERICAL";
    }
    return "FAIL";
}

std::optional<Status> parse_status(const std::string& s) {
    for (Status st : {Status::Pass, Status::Fail, Status::Surplus, Status::NonSpherical})
        if (status_name(st) == s) return st;
    return std::nullopt;
}

VerificationReport verify_instance(const FamilyInstance& inst) {
    CaseData cd = resolve(inst);
    const GroupSpec& G = cd.group;
    const std::size_t dim = G.basis_dim();
    VerificationReport rep;
    rep.instance = inst;
    rep.group = G;
    rep.dW_closed = cd.dW;
    rep.dW_camus = dW_camus(cd.E, cd.b, dim);

    QuotientMap q(G, cd.kernel);
    if (!is_spherical_restriction(cd.E, q, dim)) {
        rep.status = Status::NonSpherical;
        rep.notes.push_back("q is not injective on <E>");
        return rep;
    }
    QuotientMap qprime(G, central_characters(G));

    rep.candidates = extended_candidates(G);
    auto traces = run_filters(rep.candidates, G, cd.E, q);
    auto traces_prime = run_filters(rep.candidates, G, cd.E, qprime);
    std::vector<Weight> u_prime;
    for (std::size_t i = 0; i < traces.size(); ++i) {
        if (traces[i].survives()) rep.survivors.push_back(traces[i].candidate);
        if (traces_prime[i].survives()) u_prime.push_back(traces_prime[i].candidate);
    }

    bool ok = true;
    for (const auto& w : cd.expected_Gprime)
        if (!contains_weight(u_prime, w)) {
            ok = false;
            rep.notes.push_back("expected derived-level weight " + root_label(G, w) + " was filtered out");
        }

    std::vector<Weight> D;
    for (const auto& w : cd.expected_Gprime)
        if (in_lattice(w, cd.E, q, dim)) D.push_back(w);

    std::set<Weight> excluded;
    for (const auto& r : cd.recipes) {
        if (!contains_weight(D, r.cert.weight)) continue;
        auto t = exclusion_applicable(G, cd.E, q, r.cert, r.lambda, r.xi);
        t.label = r.label;
        if (t.applicable())
            excluded.insert(t.weight);
        else
            rep.notes.push_back("exclusion of " + root_label(G, t.weight) + " did not apply");
        rep.exclusions.push_back(std::move(t));
    }
    for (const auto& w : D)
        if (!excluded.count(w)) rep.final_set.push_back(w);

    if (rep.final_set != cd.expected_final) {
        ok = false;
        rep.notes.push_back("final set differs from the expected set");
    }
    int sz = static_cast<int>(rep.final_set.size());
    if (sz != rep.dW_camus || rep.dW_camus != rep.dW_closed) {
        ok = false;
        rep.notes.push_back("cardinality " + std::to_string(sz) + ", rank bound " + std::to_string(rep.dW_camus) +
                            ", closed form " + std::to_string(rep.dW_closed));
    }

    for (const auto& w : rep.survivors)
        if (!contains_weight(D, w)) rep.surplus.push_back(w);

    if (!ok) {
        rep.status = Status::Fail;
    } else if (rep.surplus.empty()) {
        rep.status = Status::Pass;
    } else if (cd.filters_exact && inst.torus.kind == TorusKind::Full) {
        rep.status = Status::Fail;
        rep.notes.push_back("filters were expected to be exact");
    } else {
        rep.status = Status::Surplus;
    }
    return rep;
}

bool verify_identity(const Weight& lhs, const std::vector<std::pair<Int, Weight>>& rhs_terms) {
    Weight acc = zero_vec(lhs.size());
    for (const auto& [c, w] : rhs_terms) {
        if (w.size() != lhs.size()) throw std::invalid_argument("identity: dimension mismatch");
        acc = add(acc, scale(c, w));
    }
    return acc == lhs;
}

bool noomone_check(int m, int n) {
    GroupSpec G({GL(m), SL(2), GL(n)});
    Weight w1 = fundamental(G, 0, 1), wp = fundamental(G, 1, 1), w2 = fundamental(G, 2, 1);
    IntegerLattice L(G.basis_dim(), {add(w1, wp), add(wp, w2), add(w1, w2)});
    return !member(w1, L) && !member(wp, L) && !member(w2, L);
}

bool is_mixed(const GroupSpec& spec, const Weight& w) {
    auto coords = simple_root_coords(spec, w);
    if (!coords) return false;
    auto pi = simple_roots(spec);
    std::set<int> factors;
    for (std::size_t k = 0; k < pi.size(); ++k)
        if ((*coords)[k] != 0) factors.insert(pi[k].factor);
    return factors.size() >= 2;
}

}  // namespace wv
