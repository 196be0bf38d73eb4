#include "weylverify/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace wv {

namespace {

// Weight builder over a fixed group; index 0 (and past-the-end for SL) give 0.
struct Builder {
    GroupSpec g;

    Weight zero() const { return zero_weight(g); }
    Weight w(int f, int i) const {
        if (i <= 0) return zero();
        return fundamental(g, f, i);
    }
    Weight eps(int f) const { return torus_char(g, f); }
    Weight a(int f, int i) const { return simple_root(g, {f, i}); }
    // alpha_i + ... + alpha_j
    Weight string(int f, int i, int j) const {
        Weight r = zero();
        for (int p = i; p <= j; ++p) r = add(r, a(f, p));
        return r;
    }
    Weight pair(int f, int i) const { return add(a(f, i), a(f, i + 1)); }
};

Weight operator+(const Weight& x, const Weight& y) { return add(x, y); }
Weight operator-(const Weight& x, const Weight& y) { return sub(x, y); }
Weight operator*(long c, const Weight& x) { return scale(Int(c), x); }

void sort_unique(std::vector<Weight>& ws) {
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
}

struct GLxGL {
    int K, L;
};

GLxGL kl(int family, int m, int n) {
    if (family == 6) return {std::min(m + 1, n), std::min(m, n)};
    return {std::min(m, n - 1), std::min(m, n)};
}

bool spherical_kernel(const std::vector<Weight>& E, const std::vector<Weight>& kernel, std::size_t dim) {
    IntegerLattice k = saturate(IntegerLattice(dim, kernel));
    IntegerLattice e(dim, E);
    return intersect(k, e).rank() == 0;
}

// Index helpers for families 6 and 7: E = lambda_1..K, lambda'_1..L (, mu).
struct Idx {
    int K, L;
    int lam(int i) const { return i - 1; }
    int lamp(int i) const { return K + i - 1; }
    int mu() const { return K + L; }
};

}  // namespace

std::string torus_label(const FamilyInstance& inst) {
    switch (inst.torus.kind) {
        case TorusKind::Full: return "full";
        case TorusKind::Derived: return "derived";
        case TorusKind::Param: return std::string(1, torus_param_name(inst)) + "=" + std::to_string(inst.torus.param);
    }
    return "full";
}

char torus_param_name(const FamilyInstance& inst) {
    if (inst.family == 5) return 'a';
    if ((inst.family == 6 || inst.family == 7) && inst.n == inst.m - 1) return 'b';
    if ((inst.family == 6 || inst.family == 7) && inst.m == inst.n - 2) return 'a';
    return '\0';
}

bool valid_parameters(int family, int m, int n) {
    switch (family) {
        case 1: return 1 <= m && m <= n;
        case 2: return n >= 1;
        case 3: return n >= 2;
        case 4:
        case 5: return n >= 4;
        case 6:
        case 7: return m >= 1 && n >= 2;
        case 8: return 2 <= m && m <= n;
    }
    return false;
}

int closed_form_dW(int family, int m, int n) {
    if (!valid_parameters(family, m, n)) throw std::invalid_argument("parameters out of range");
    switch (family) {
        case 1: return m - 1;
        case 2: return n - 1;
        case 3: return n / 2 - 1;
        case 4:
        case 5: return n - 2;
        case 6: {
            auto [K, L] = kl(6, m, n);
            return K + L - 2;
        }
        case 7: {
            auto [K, L] = kl(7, m, n);
            return K + L - 1;
        }
        case 8: return 3;
    }
    return 0;
}

namespace {

GroupSpec family_group(int family, int m, int n) {
    switch (family) {
        case 1:
        case 6:
        case 7: return GroupSpec({GL(m), GL(n)});
        case 2:
        case 3: return GroupSpec({GL(n)});
        case 4:
        case 5: return GroupSpec({GL(n), Torus()});
        case 8: return GroupSpec({GL(m), SL(2), GL(n)});
    }
    throw std::invalid_argument("unknown family");
}

void basic_weights(CaseData& cd) {
    const int m = cd.inst.m, n = cd.inst.n;
    Builder B{cd.group};
    auto push = [&](Weight w, std::string name) {
        cd.E.push_back(std::move(w));
        cd.E_names.push_back(std::move(name));
    };
    auto s = [](int i) { return std::to_string(i); };
    switch (cd.inst.family) {
        case 1:
            for (int i = 1; i <= m; ++i) push(B.w(0, i) + B.w(1, i), "w" + s(i) + "+w'" + s(i));
            cd.b = 1;
            break;
        case 2:
            for (int i = 1; i <= n; ++i) push(2 * B.w(0, i), "2w" + s(i));
            cd.b = 1;
            break;
        case 3:
            for (int i = 1; 2 * i <= n; ++i) push(B.w(0, 2 * i), "w" + s(2 * i));
            cd.b = 1;
            break;
        case 4:
            for (int i = 1; i <= n; ++i) {
                if (i % 2)
                    push(B.w(0, i) + B.eps(1), "w" + s(i) + "+e");
                else
                    push(B.w(0, i), "w" + s(i));
            }
            cd.b = 2;
            break;
        case 5:
            for (int i = 1; i <= n; ++i) {
                if (i % 2 && i <= n - 2)
                    push(B.w(0, i) + B.eps(1), "l" + s(i));
                else if (i % 2 == 0)
                    push(B.w(0, i), "l" + s(i));
            }
            push(B.w(0, n - 1) - B.w(0, n) + B.eps(1), "mu");
            cd.b = 2;
            break;
        case 6: {
            auto [K, L] = kl(6, m, n);
            for (int i = 1; i <= K; ++i) push(B.w(0, i - 1) + B.w(1, i), "l" + s(i));
            for (int i = 1; i <= L; ++i) push(B.w(0, i) + B.w(1, i), "l'" + s(i));
            cd.b = 2;
            break;
        }
        case 7: {
            auto [K, L] = kl(7, m, n);
            for (int i = 1; i <= K; ++i) push(B.w(0, i) + B.w(1, i - 1), "l" + s(i));
            for (int i = 1; i <= L; ++i) push(B.w(0, i) + B.w(1, i), "l'" + s(i));
            push(B.w(1, n - 1) - B.w(1, n), "mu");
            cd.b = 2;
            break;
        }
        case 8:
            push(B.w(0, 1) + B.w(1, 1), "w1+w'");
            push(B.w(1, 1) + B.w(2, 1), "w'+w''1");
            push(B.w(0, 1) + B.w(2, 1), "w1+w''1");
            push(B.w(0, 2), "w2");
            push(B.w(2, 2), "w''2");
            cd.b = 2;
            break;
    }
}

void add_recipe(CaseData& cd, std::string label, Weight beta, std::vector<int> support, std::vector<int> alt,
                int lambda, std::optional<int> xi) {
    ExclusionRecipe r;
    r.label = std::move(label);
    r.cert = {std::move(beta), std::move(support)};
    r.alt_support = std::move(alt);
    r.lambda = lambda;
    r.xi = xi;
    cd.certificates.push_back(r.cert);
    cd.recipes.push_back(std::move(r));
}

void expected_sets(CaseData& cd) {
    const int m = cd.inst.m, n = cd.inst.n;
    const long param = cd.inst.torus.kind == TorusKind::Param ? cd.inst.torus.param : 0;
    Builder B{cd.group};
    auto& fin = cd.expected_final;
    auto& gp = cd.expected_Gprime;
    auto s = [](int i) { return std::to_string(i); };
    switch (cd.inst.family) {
        case 1:
            for (int i = 1; i <= m - 1; ++i) fin.push_back(B.a(0, i) + B.a(1, i));
            gp = fin;
            break;
        case 2:
            for (int i = 1; i <= n - 1; ++i) fin.push_back(2 * B.a(0, i));
            gp = fin;
            break;
        case 3:
            for (int i = 1; i <= n - 3; i += 2) fin.push_back(B.a(0, i) + 2 * B.a(0, i + 1) + B.a(0, i + 2));
            gp = fin;
            break;
        case 4:
            for (int i = 1; i <= n - 2; ++i) fin.push_back(B.pair(0, i));
            gp = fin;
            break;
        case 5: {
            for (int i = 1; i <= n - 2; ++i) gp.push_back(B.pair(0, i));
            if (n % 2 == 0) {
                fin = gp;
                break;
            }
            gp.push_back(B.a(0, n - 1));
            Weight beta = B.pair(0, n - 2);
            for (const auto& w : gp)
                if (w != beta) fin.push_back(w);
            // E = l1..l(n-1), mu
            int l_n2 = n - 3, l_n1 = n - 2, mu = n - 1;
            if (param < 0)
                add_recipe(cd, "a" + s(n - 2) + "+a" + s(n - 1), beta, {l_n2}, {l_n1, mu}, mu, l_n1);
            else
                add_recipe(cd, "a" + s(n - 2) + "+a" + s(n - 1), beta, {l_n2}, {l_n1, mu}, l_n1, mu);
            break;
        }
        case 6: {
            auto [K, L] = kl(6, m, n);
            Idx I{K, L};
            for (int i = 1; i <= L - 1; ++i) fin.push_back(B.a(0, i));
            for (int j = 1; j <= K - 1; ++j) fin.push_back(B.a(1, j));
            gp = fin;
            for (int r = 2; r <= L - 1; ++r) {
                gp.push_back(B.pair(0, r - 1));
                add_recipe(cd, "b" + s(r), B.pair(0, r - 1), {I.lam(r), I.lamp(r - 1)}, {I.lam(r + 1), I.lamp(r)},
                           I.lam(r + 1), I.lamp(r));
            }
            for (int j = 2; j <= K - 1; ++j) {
                gp.push_back(B.pair(1, j - 1));
                add_recipe(cd, "b'" + s(j), B.pair(1, j - 1), {I.lam(j - 1), I.lamp(j - 1)}, {I.lam(j), I.lamp(j)},
                           I.lamp(j), I.lam(j));
            }
            if (n == m - 1) {
                gp.push_back(B.pair(0, m - 2));
                bool low = param <= -2;
                add_recipe(cd, "b" + s(m - 1), B.pair(0, m - 2), {I.lamp(m - 1)}, {I.lam(m - 1), I.lamp(m - 2)},
                           low ? I.lam(m - 1) : I.lamp(m - 2), low ? I.lamp(m - 2) : I.lam(m - 1));
            }
            if (m == n - 2) {
                gp.push_back(B.pair(1, n - 2));
                bool low = param <= -2;
                add_recipe(cd, "b'" + s(n - 1), B.pair(1, n - 2), {I.lam(n - 1)}, {I.lam(n - 2), I.lamp(n - 2)},
                           low ? I.lamp(n - 2) : I.lam(n - 2), low ? I.lam(n - 2) : I.lamp(n - 2));
            }
            break;
        }
        case 7: {
            auto [K, L] = kl(7, m, n);
            Idx I{K, L};
            for (int i = 1; i <= L - 1; ++i) fin.push_back(B.a(0, i));
            for (int j = 1; j <= K - 1; ++j) fin.push_back(B.a(1, j));
            fin.push_back(B.string(1, K, n - 1));
            gp = fin;
            for (int r = 2; r <= L - 1; ++r) gp.push_back(B.pair(0, r - 1));
            for (int j = 2; j <= K - 1; ++j) gp.push_back(B.pair(1, j - 1));
            for (int r = 2; r <= K - 1; ++r)
                add_recipe(cd, "b" + s(r), B.pair(0, r - 1), {I.lam(r), I.lamp(r)}, {}, I.lam(r - 1), std::nullopt);
            if (3 <= n && n <= m)
                add_recipe(cd, "b" + s(n - 1), B.pair(0, n - 2), {I.lam(n - 1), I.lamp(n - 1)}, {}, I.lam(n - 2),
                           std::nullopt);
            for (int j = 2; j <= K - 1; ++j)
                add_recipe(cd, "b'" + s(j), B.pair(1, j - 1), {I.lam(j + 1), I.lamp(j)}, {}, I.lamp(j - 1),
                           std::nullopt);
            if (1 < n - 1 && n - 1 <= m) {
                gp.push_back(B.pair(1, n - 2));
                add_recipe(cd, "b'" + s(n - 1), B.pair(1, n - 2), {I.lam(n - 1), I.lamp(n - 2)}, {}, I.mu(),
                           std::nullopt);
            }
            if (n == m - 1) {
                gp.push_back(B.pair(0, m - 2));
                add_recipe(cd, "b" + s(m - 1), B.pair(0, m - 2), {I.lamp(m - 1)}, {},
                           param >= -1 ? I.lam(m - 2) : I.lamp(m - 2), std::nullopt);
            }
            if (m == n - 2 && m > 1) {
                gp.push_back(B.pair(1, n - 3));
                add_recipe(cd, "b'" + s(n - 2), B.pair(1, n - 3), {I.lamp(n - 2)}, {},
                           param >= -1 ? I.lamp(n - 3) : I.lam(n - 2), std::nullopt);
            }
            break;
        }
        case 8:
            fin = {B.a(0, 1), B.a(1, 1), B.a(2, 1)};
            gp = fin;
            break;
    }
    sort_unique(fin);
    sort_unique(gp);
}

}  // namespace

std::vector<Weight> torus_kernel(int family, int m, int n, const TorusChoice& t) {
    GroupSpec g = family_group(family, m, n);
    Builder B{g};
    switch (t.kind) {
        case TorusKind::Full: return {};
        case TorusKind::Derived: return central_characters(g);
        case TorusKind::Param: break;
    }
    const long p = t.param;
    if (family == 5 && n % 2 == 1) return {(p + 1) * B.w(0, n) - (p - 1) * B.eps(1)};
    if ((family == 6 || family == 7) && n == m - 1) return {B.w(0, m) - p * B.w(1, n)};
    if (family == 6 && m == n - 2) return {p * B.w(0, m) - B.w(1, n)};
    if (family == 7 && m == n - 2 && m > 1) return {p * B.w(0, m) - B.w(1, n)};
    throw std::invalid_argument("this instance has no parameterized torus");
}

CaseData resolve(const FamilyInstance& inst) {
    if (inst.family < 1 || inst.family > 8) throw std::invalid_argument("family must be 1..8");
    if (!valid_parameters(inst.family, inst.m, inst.n)) throw std::invalid_argument("parameters out of range");
    CaseData cd;
    cd.inst = inst;
    cd.group = family_group(inst.family, inst.m, inst.n);
    basic_weights(cd);
    cd.dW = closed_form_dW(inst.family, inst.m, inst.n);
    cd.kernel = torus_kernel(inst.family, inst.m, inst.n, inst.torus);
    expected_sets(cd);
    cd.filters_exact = inst.family == 1 || inst.family == 2 || (inst.family == 3 && inst.n % 2 == 0) || inst.family == 8;
    return cd;
}

std::vector<TorusChoice> torus_options(int family, int m, int n, long lo, long hi) {
    if (!valid_parameters(family, m, n)) throw std::invalid_argument("parameters out of range");
    std::vector<TorusChoice> out{TorusChoice::full()};
    bool derived = (family == 1 && m < n) || (family == 3 && n % 2 == 1) || (family == 8 && m > 2);
    if (derived) out.push_back(TorusChoice::derived());
    bool param = (family == 5 && n % 2 == 1) || ((family == 6 || family == 7) && n == m - 1) ||
                 (family == 6 && m == n - 2) || (family == 7 && m == n - 2 && m > 1);
    if (param) {
        CaseData base = resolve({family, m, n, TorusChoice::full()});
        for (long p = lo; p <= hi; ++p) {
            auto t = TorusChoice::with_param(p);
            if (spherical_kernel(base.E, torus_kernel(family, m, n, t), base.group.basis_dim())) out.push_back(t);
        }
    }
    return out;
}

std::vector<Weight> consecfund_weights(int m, int k) {
    if (m < 2 || k < 1 || k > m - 1) throw std::invalid_argument("consecfund: need m >= 2 and 1 <= k <= m-1");
    Builder B{GroupSpec({SL(m)})};
    int p = k < m - 1 ? k - 1 : k;
    std::vector<Weight> out;
    for (int i = 1; i <= p - 1; ++i) out.push_back(B.pair(0, i));
    return out;
}

std::vector<Weight> consecfundgap_weights(int m, int k) {
    if (m < 4 || k < 1 || k > m - 3) throw std::invalid_argument("consecfundgap: need m >= 4 and 1 <= k <= m-3");
    Builder B{GroupSpec({SL(m)})};
    std::vector<Weight> out;
    for (int i = 1; i <= k - 2; ++i) out.push_back(B.pair(0, i));
    out.push_back(B.string(0, k, m - 1));
    return out;
}

std::vector<Identity> identities(int family, int m, int n, long lo, long hi) {
    if (!valid_parameters(family, m, n)) throw std::invalid_argument("parameters out of range");
    CaseData cd = resolve({family, m, n, TorusChoice::full()});
    Builder B{cd.group};
    const auto& E = cd.E;
    std::vector<Identity> out;
    auto s = [](long i) { return std::to_string(i); };
    using Terms = std::vector<std::pair<Int, Weight>>;
    auto emit = [&](std::string name, Weight lhs, Terms rhs) {
        out.push_back({std::move(name), cd.group, std::move(lhs), std::move(rhs)});
    };

    if (family == 5 && n % 2 == 1) {
        // E = l1..l(n-1), mu
        auto l = [&](int i) { return E[i - 1]; };
        const Weight& mu = E[n - 1];
        Weight beta = B.pair(0, n - 2);
        for (long a = lo; a <= hi; ++a)
            emit("f5 beta a=" + s(a), beta + (a + 1) * B.w(0, n) - (a - 1) * B.eps(1),
                 {{1, l(n - 2)}, {a + 1, l(n - 1)}, {-a, mu}, {-1, l(n - 3)}});
    }

    if (family == 6) {
        auto [K, L] = kl(6, m, n);
        Idx I{K, L};
        auto lam = [&](int i) { return i <= 0 ? B.zero() : E[I.lam(i)]; };
        auto lamp = [&](int i) { return i <= 0 ? B.zero() : E[I.lamp(i)]; };
        auto diffs = [&](Terms& t, long c, int upto) {
            for (int k = 1; k <= upto; ++k) {
                t.push_back({c, lamp(k)});
                t.push_back({-c, lam(k)});
            }
        };
        for (int i = 1; i <= K; ++i) {
            Terms t{{1, lam(i)}};
            diffs(t, -1, i - 1);
            emit("f6 w'" + s(i), B.w(1, i), t);
        }
        for (int j = 1; j <= L; ++j) {
            Terms t;
            diffs(t, 1, j);
            emit("f6 w" + s(j), B.w(0, j), t);
        }
        for (int r = 2; r <= L - 1; ++r)
            emit("f6 b" + s(r), B.pair(0, r - 1), {{1, lamp(r - 1)}, {1, lam(r + 1)}, {-1, lam(r - 1)}, {-1, lamp(r + 1)}});
        for (int j = 2; j <= K - 1; ++j)
            emit("f6 b'" + s(j), B.pair(1, j - 1), {{1, lam(j - 1)}, {1, lamp(j)}, {-1, lamp(j - 2)}, {-1, lam(j + 1)}});
        if (n == m - 1)
            for (long b = lo; b <= hi; ++b) {
                Terms t{{1, lamp(m - 1)}, {-1 - b, lam(m - 1)}, {b + 2, lamp(m - 2)}, {-(b + 2), lam(m - 2)}};
                diffs(t, b + 1, m - 3);
                emit("f6 b" + s(m - 1) + " b=" + s(b), B.pair(0, m - 2) + B.w(0, m) - b * B.w(1, n), t);
            }
        if (m == n - 2)
            for (long a = lo; a <= hi; ++a) {
                Terms t{{1, lam(n - 1)},      {2 + a, lam(n - 2)},   {-2 - a, lamp(n - 3)},
                        {1 + a, lam(n - 3)},  {-1 - a, lamp(n - 2)}};
                diffs(t, -(1 + a), n - 4);
                emit("f6 b'" + s(n - 1) + " a=" + s(a), B.pair(1, n - 2) - (a * B.w(0, m) - B.w(1, n)), t);
            }
    }

    if (family == 7) {
        auto [K, L] = kl(7, m, n);
        Idx I{K, L};
        auto lam = [&](int i) { return i <= 0 ? B.zero() : E[I.lam(i)]; };
        auto lamp = [&](int i) { return i <= 0 ? B.zero() : E[I.lamp(i)]; };
        const Weight& mu = E[I.mu()];
        auto diffs = [&](Terms& t, long c, int upto) {
            for (int k = 1; k <= upto; ++k) {
                t.push_back({c, lamp(k)});
                t.push_back({-c, lam(k)});
            }
        };
        for (int i = 1; i <= K; ++i) {
            Terms t{{1, lam(i)}};
            diffs(t, -1, i - 1);
            emit("f7 w" + s(i), B.w(0, i), t);
            Terms u;
            diffs(u, 1, i);
            emit("f7 w'" + s(i), B.w(1, i), u);
        }
        if (m >= n - 1) {
            Terms t{{-1, mu}};
            diffs(t, 1, n - 1);
            emit("f7 w'" + s(n), B.w(1, n), t);
        }
        if (m > n - 1) {
            Terms t{{1, lamp(n)}, {1, mu}};
            diffs(t, -1, n - 1);
            emit("f7 w" + s(n), B.w(0, n), t);
        }
        for (int r = 2; r <= K - 1; ++r)
            emit("f7 b" + s(r), B.pair(0, r - 1), {{-1, lamp(r - 2)}, {1, lam(r - 1)}, {1, lamp(r)}, {-1, lam(r + 1)}});
        for (int j = 2; j <= K - 1; ++j)
            emit("f7 b'" + s(j), B.pair(1, j - 1), {{-1, lam(j - 1)}, {1, lamp(j - 1)}, {1, lam(j + 1)}, {-1, lamp(j + 1)}});
        if (3 <= n && n <= m)
            emit("f7 b" + s(n - 1), B.pair(0, n - 2),
                 {{1, lam(n - 2)}, {1, lamp(n - 1)}, {-1, mu}, {-1, lamp(n)}, {-1, lamp(n - 3)}});
        if (n - 1 <= m && n != 2)
            emit("f7 b'" + s(n - 1), B.pair(1, n - 2), {{-1, lam(n - 2)}, {1, lamp(n - 2)}, {1, mu}});
        if (n == m - 1 && m >= 3)
            for (long b = lo; b <= hi; ++b) {
                Terms t{{1, lamp(m - 1)}, {1 + b, mu}, {b + 2, lam(m - 2)}, {-(b + 2), lamp(m - 3)},
                        {-(b + 1), lamp(m - 2)}, {b + 1, lam(m - 3)}};
                diffs(t, -(b + 1), m - 4);
                emit("f7 b" + s(m - 1) + " b=" + s(b), B.pair(0, m - 2) + B.w(0, m) - b * B.w(1, n), t);
            }
        if (m == n - 2 && m > 1)
            for (long a = lo; a <= hi; ++a) {
                Terms t{{1, lamp(n - 2)}, {-1, mu}, {-(1 + a), lam(n - 2)}, {2 + a, lamp(n - 3)}, {-(2 + a), lam(n - 3)}};
                diffs(t, 1 + a, n - 4);
                emit("f7 b'" + s(n - 2) + " a=" + s(a), B.pair(1, n - 3) - (a * B.w(0, m) - B.w(1, n)), t);
            }
    }
    return out;
}

}  // namespace wv
