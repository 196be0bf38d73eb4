#include "weylverify/engine.hpp"

#include <doctest.h>

#include <algorithm>

using namespace wv;

namespace {

std::vector<FamilyInstance> sweep(std::initializer_list<int> families, int max_size) {
    std::vector<FamilyInstance> out;
    for (int f : families)
        for (int m = 1; m <= max_size; ++m)
            for (int n = 1; n <= max_size; ++n) {
                if (f >= 2 && f <= 5 && m != n) continue;
                if (!valid_parameters(f, m, n)) continue;
                for (auto t : torus_options(f, m, n, -3, 3)) out.push_back({f, m, n, t});
            }
    return out;
}

bool has(const std::vector<Weight>& ws, const Weight& w) { return std::find(ws.begin(), ws.end(), w) != ws.end(); }

std::size_t choose2(std::size_t r) { return r * (r - 1) / 2; }

}  // namespace

TEST_CASE("candidate table for GL(2) x GL(2)") {
    GroupSpec g({GL(2), GL(2)});
    Weight a = simple_root(g, {0, 1}), b = simple_root(g, {1, 1});
    auto c = candidate_weights(g);
    CHECK(c.size() == 3);
    CHECK(has(c, add(a, b)));
    CHECK(has(c, scale(Int(2), a)));
    CHECK(has(c, scale(Int(2), b)));
    CHECK(extended_candidates(g).size() == 5);
}

TEST_CASE("candidate count for a single GL(n) matches a direct count") {
    for (int n = 2; n <= 9; ++n) {
        std::size_t r = n - 1;
        // doubled roots, orthogonal pairs, strings, a_i + 2a_{i+1} + a_{i+2}
        std::size_t want = r + (r >= 2 ? choose2(r - 1) : 0) + choose2(r) + (r >= 3 ? r - 2 : 0);
        CHECK(candidate_weights(GroupSpec({GL(n)})).size() == want);
    }
}

TEST_CASE("expected answers lie among the extended candidates") {
    for (const auto& inst : sweep({1, 2, 3, 4, 5, 6, 7, 8}, 6)) {
        CaseData cd = resolve(inst);
        auto c = extended_candidates(cd.group);
        for (const auto& w : cd.expected_final) CHECK(has(c, w));
        for (const auto& w : cd.expected_Gprime) CHECK(has(c, w));
    }
}

TEST_CASE("filters are exact where flagged, at the full torus") {
    for (const auto& inst : sweep({1, 2, 3, 8}, 6)) {
        if (inst.torus.kind != TorusKind::Full) continue;
        CaseData cd = resolve(inst);
        if (!cd.filters_exact) continue;
        QuotientMap q(cd.group, cd.kernel);
        std::vector<Weight> surv;
        for (const auto& t : run_filters(extended_candidates(cd.group), cd.group, cd.E, q))
            if (t.survives()) surv.push_back(t.candidate);
        CAPTURE(inst.family);
        CAPTURE(inst.m);
        CAPTURE(inst.n);
        CHECK(surv == cd.expected_final);
    }
}

TEST_CASE("filter witnesses re-verify and agree with a bounded search") {
    for (const auto& inst : sweep({1, 4, 5, 6, 8}, 4)) {
        CaseData cd = resolve(inst);
        QuotientMap q(cd.group, cd.kernel);
        std::vector<Vec> gens = cd.E;
        for (const auto& k : q.kernel().basis()) gens.push_back(k);
        auto cands = extended_candidates(cd.group);
        auto traces = lattice_filter(cands, cd.group, cd.E, q);
        auto sr = simple_root_filter(cands, cd.group, cd.E);
        auto allowed = gx0_weight_set(cd.group, cd.E);
        for (std::size_t i = 0; i < traces.size(); ++i) {
            const auto& t = traces[i];
            if (t.witness) {
                Weight s = zero_weight(cd.group);
                for (std::size_t j = 0; j < cd.E.size(); ++j) s = add(s, scale((*t.witness)[j], cd.E[j]));
                CHECK(q.equal(s, t.candidate));
            }
            if (gens.size() <= 6 && member_bruteforce(t.candidate, gens, 2)) CHECK(t.passed_lattice);
            if (sr[i].passed_simple_root) {
                REQUIRE(sr[i].delta.has_value());
                CHECK(has(allowed, sub(t.candidate, simple_root(cd.group, *sr[i].delta))));
            }
        }
    }
}

TEST_CASE("weights of g.x0 for family 1 m = n = 2") {
    CaseData cd = resolve({1, 2, 2, TorusChoice::full()});
    // E = {w1 + w'1, w2 + w'2}; both roots pair nonzero with w1 + w'1
    CHECK(e_perp(cd.group, cd.E).empty());
    CHECK(gx0_weight_set(cd.group, cd.E).size() == 3);
}

TEST_CASE("exclusion recipes apply and ES2 breaks when lambda joins the support") {
    int traces = 0;
    for (const auto& inst : sweep({5, 6, 7}, 6)) {
        CaseData cd = resolve(inst);
        QuotientMap q(cd.group, cd.kernel);
        std::size_t dim = cd.group.basis_dim();
        for (const auto& r : cd.recipes) {
            if (!in_lattice(r.cert.weight, cd.E, q, dim)) continue;
            CAPTURE(inst.family);
            CAPTURE(inst.m);
            CAPTURE(inst.n);
            CAPTURE(r.label);
            auto t = exclusion_applicable(cd.group, cd.E, q, r.cert, r.lambda, r.xi);
            CHECK(t.es1);
            CHECK(t.es2);
            CHECK(t.es3);
            CHECK(t.es4);
            CHECK(codim1_orbit_check(cd.group, cd.E, r.lambda));
            TangentCertificate flipped = r.cert;
            flipped.support.push_back(r.lambda);
            CHECK_FALSE(exclusion_applicable(cd.group, cd.E, q, flipped, r.lambda, r.xi).es2);
            ++traces;
        }
    }
    CHECK(traces > 50);
}

TEST_CASE("expansion reproduces the weight in the quotient") {
    for (const auto& inst : sweep({5, 6, 7}, 5)) {
        CaseData cd = resolve(inst);
        QuotientMap q(cd.group, cd.kernel);
        std::size_t dim = cd.group.basis_dim();
        for (const auto& w : cd.expected_Gprime) {
            if (!in_lattice(w, cd.E, q, dim)) {
                CHECK_THROWS_AS(expand_in_E(w, cd.E, q, dim), std::domain_error);
                continue;
            }
            Vec c = expand_in_E(w, cd.E, q, dim);
            Weight s = zero_vec(dim);
            for (std::size_t j = 0; j < c.size(); ++j) s = add(s, scale(c[j], cd.E[j]));
            CHECK(q.equal(s, w));
        }
    }
}

TEST_CASE("ES3 implies the codimension-one check") {
    for (const auto& inst : sweep({4, 5, 6, 7, 8}, 5)) {
        CaseData cd = resolve(inst);
        QuotientMap q(cd.group, cd.kernel);
        std::size_t dim = cd.group.basis_dim();
        for (const auto& w : cd.expected_Gprime) {
            if (!in_lattice(w, cd.E, q, dim)) continue;
            for (int l = 0; l < static_cast<int>(cd.E.size()); ++l) {
                auto t = exclusion_applicable(cd.group, cd.E, q, {w, {}}, l, std::nullopt);
                if (t.es3) CHECK(codim1_orbit_check(cd.group, cd.E, l));
            }
        }
    }
}

TEST_CASE("no filter survivor mixes two factors in families 6, 7, 8") {
    for (const auto& inst : sweep({6, 7, 8}, 6)) {
        auto rep = verify_instance(inst);
        for (const auto& w : rep.survivors) {
            CAPTURE(root_label(rep.group, w));
            CHECK_FALSE(is_mixed(rep.group, w));
        }
    }
}

TEST_CASE("mixed detection") {
    GroupSpec g({GL(3), GL(3)});
    CHECK(is_mixed(g, add(simple_root(g, {0, 1}), simple_root(g, {1, 1}))));
    CHECK_FALSE(is_mixed(g, add(simple_root(g, {0, 1}), simple_root(g, {0, 2}))));
    CHECK_FALSE(is_mixed(g, fundamental(g, 0, 1)));
}

TEST_CASE("verify_instance on family 1") {
    auto rep = verify_instance({1, 3, 3, TorusChoice::full()});
    CHECK(rep.status == Status::Pass);
    CHECK(rep.final_set.size() == 2);
    CHECK(rep.dW_camus == 2);
    CHECK(rep.surplus.empty());
    CHECK(std::is_sorted(rep.candidates.begin(), rep.candidates.end()));
}

TEST_CASE("no instance in the sweep fails") {
    for (const auto& inst : sweep({1, 2, 3, 4, 5, 6, 7, 8}, 5)) {
        auto rep = verify_instance(inst);
        CAPTURE(inst.family);
        CAPTURE(inst.m);
        CAPTURE(inst.n);
        CAPTURE(torus_label(inst));
        CHECK(rep.status != Status::Fail);
        CHECK(rep.status != Status::NonSpherical);
        CHECK(rep.final_set.size() == static_cast<std::size_t>(rep.dW_closed));
    }
}

TEST_CASE("non-injective quotient is reported, not expanded") {
    CaseData cd = resolve({1, 2, 2, TorusChoice::full()});
    QuotientMap q(cd.group, {cd.E[0]});
    std::size_t dim = cd.group.basis_dim();
    CHECK_FALSE(is_spherical_restriction(cd.E, q, dim));
    CHECK_THROWS_AS(expand_in_E(cd.expected_final[0], cd.E, q, dim), std::logic_error);
}

TEST_CASE("status names round trip") {
    for (Status s : {Status::Pass, Status::Fail, Status::Surplus, Status::NonSpherical})
        CHECK(parse_status(status_name(s)) == s);
    CHECK_FALSE(parse_status("pass").has_value());
}

TEST_CASE("d_W from ranks") {
    GroupSpec g({GL(2)});
    CHECK(dW_camus({fundamental(g, 0, 1), fundamental(g, 0, 2)}, 1, 2) == 1);
    CHECK_THROWS(dW_camus({}, 0, 2));
}

TEST_CASE("identity check is exact") {
    Weight a = make_vec({1, 2}), b = make_vec({0, 1});
    CHECK(verify_identity(make_vec({2, 5}), {{Int(2), a}, {Int(1), b}}));
    CHECK_FALSE(verify_identity(make_vec({2, 4}), {{Int(2), a}, {Int(1), b}}));
    CHECK_THROWS(verify_identity(make_vec({2}), {{Int(2), a}}));
}

TEST_CASE("fundamental weights are outside the family 8 lattice") {
    CHECK(noomone_check());
    for (int m = 2; m <= 5; ++m)
        for (int n = m; n <= 5; ++n) CHECK(noomone_check(m, n));
}
