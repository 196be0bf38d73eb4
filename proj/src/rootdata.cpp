#include "weylverify/rootdata.hpp"

#include <stdexcept>

namespace wv {

int GroupFactor::dim() const {
    switch (kind) {
        case FactorKind::GL: return size;
        case FactorKind::SL: return size - 1;
        case FactorKind::Torus: return 1;
    }
    return 0;
}

GroupFactor GL(int k) {
    if (k < 1) throw std::invalid_argument("GL(k) needs k >= 1");
    return {FactorKind::GL, k};
}

GroupFactor SL(int k) {
    if (k < 2) throw std::invalid_argument("SL(k) needs k >= 2");
    return {FactorKind::SL, k};
}

GroupFactor Torus() { return {FactorKind::Torus, 1}; }

GroupSpec::GroupSpec(std::vector<GroupFactor> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_) {
        if (f.kind == FactorKind::SL && f.size < 2) throw std::invalid_argument("SL(k) needs k >= 2");
        if (f.kind == FactorKind::GL && f.size < 1) throw std::invalid_argument("GL(k) needs k >= 1");
        offsets_.push_back(dim_);
        dim_ += f.dim();
    }
}

GroupSpec GroupSpec::derived() const {
    std::vector<GroupFactor> out;
    for (const auto& f : factors_) {
        if (f.kind == FactorKind::Torus) continue;
        if (f.size == 1) continue;  // GL(1) has trivial derived group
        out.push_back(SL(f.size));
    }
    return GroupSpec(out);
}

std::string GroupSpec::describe() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += "x";
        const auto& f = factors_[i];
        if (f.kind == FactorKind::Torus)
            s += "T";
        else
            s += (f.kind == FactorKind::GL ? "GL(" : "SL(") + std::to_string(f.size) + ")";
    }
    return s;
}

bool GroupSpec::operator==(const GroupSpec& o) const {
    if (factors_.size() != o.factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].kind != o.factors_[i].kind || factors_[i].size != o.factors_[i].size) return false;
    return true;
}

namespace {

const GroupFactor& root_factor(const GroupSpec& spec, int factor) {
    if (factor < 0 || factor >= static_cast<int>(spec.factors().size()))
        throw std::invalid_argument("factor index out of range");
    const auto& f = spec.factors()[factor];
    if (f.kind == FactorKind::Torus) throw std::invalid_argument("torus factor has no roots");
    return f;
}

void check_len(const GroupSpec& spec, const Weight& w) {
    if (static_cast<int>(w.size()) != spec.basis_dim()) throw std::invalid_argument("weight length mismatch");
}

}  // namespace

Weight zero_weight(const GroupSpec& spec) { return zero_vec(spec.basis_dim()); }

Weight fundamental(const GroupSpec& spec, int factor, int i) {
    const auto& f = root_factor(spec, factor);
    if (i < 0 || i > f.size) throw std::invalid_argument("fundamental weight index out of range");
    Weight w = zero_weight(spec);
    if (i >= 1 && i <= f.dim()) w[spec.offset(factor) + i - 1] = 1;
    return w;
}

Weight torus_char(const GroupSpec& spec, int factor) {
    if (spec.factors().at(factor).kind != FactorKind::Torus) throw std::invalid_argument("not a torus factor");
    Weight w = zero_weight(spec);
    w[spec.offset(factor)] = 1;
    return w;
}

Weight simple_root(const GroupSpec& spec, SimpleRootId id) {
    const auto& f = root_factor(spec, id.factor);
    if (id.position < 1 || id.position > f.size - 1) throw std::invalid_argument("simple root position out of range");
    Weight w = zero_weight(spec);
    auto put = [&](int j, long c) {
        if (j >= 1 && j <= f.dim()) w[spec.offset(id.factor) + j - 1] += c;
    };
    put(id.position - 1, -1);
    put(id.position, 2);
    put(id.position + 1, -1);
    return w;
}

std::vector<SimpleRootId> simple_roots(const GroupSpec& spec) {
    std::vector<SimpleRootId> out;
    for (int f = 0; f < static_cast<int>(spec.factors().size()); ++f) {
        const auto& fac = spec.factors()[f];
        if (fac.kind == FactorKind::Torus) continue;
        for (int i = 1; i < fac.size; ++i) out.push_back({f, i});
    }
    return out;
}

std::vector<PositiveRoot> positive_roots(const GroupSpec& spec) {
    std::vector<PositiveRoot> out;
    for (int f = 0; f < static_cast<int>(spec.factors().size()); ++f) {
        const auto& fac = spec.factors()[f];
        if (fac.kind == FactorKind::Torus) continue;
        for (int i = 1; i <= fac.size; ++i)
            for (int j = i + 1; j <= fac.size; ++j) out.push_back({f, i, j});
    }
    return out;
}

Weight root_as_weight(const GroupSpec& spec, const PositiveRoot& r) {
    const auto& f = root_factor(spec, r.factor);
    if (r.i < 1 || r.i >= r.j || r.j > f.size) throw std::invalid_argument("invalid positive root");
    Weight w = zero_weight(spec);
    for (int p = r.i; p < r.j; ++p) w = add(w, simple_root(spec, {r.factor, p}));
    return w;
}

std::vector<Int> e_coords(const GroupSpec& spec, const Weight& w, int factor) {
    check_len(spec, w);
    const auto& f = root_factor(spec, factor);
    std::vector<Int> c(f.size, Int(0));
    int off = spec.offset(factor);
    for (int a = 1; a <= f.dim(); ++a)
        for (int t = 0; t < a; ++t) c[t] += w[off + a - 1];
    return c;
}

Weight from_e_coords(const GroupSpec& spec, int factor, const std::vector<Int>& c) {
    const auto& f = root_factor(spec, factor);
    if (static_cast<int>(c.size()) != f.size) throw std::invalid_argument("e-coordinate length mismatch");
    Weight w = zero_weight(spec);
    int off = spec.offset(factor);
    for (int a = 1; a <= f.dim(); ++a) w[off + a - 1] = (a < f.size) ? c[a - 1] - c[a] : c[a - 1];
    return w;
}

Int coroot_pairing(const GroupSpec& spec, const Weight& w, const PositiveRoot& r) {
    auto c = e_coords(spec, w, r.factor);
    if (r.i < 1 || r.i >= r.j || r.j > static_cast<int>(c.size())) throw std::invalid_argument("invalid positive root");
    return c[r.i - 1] - c[r.j - 1];
}

Int coroot_pairing(const GroupSpec& spec, const Weight& w, SimpleRootId s) {
    check_len(spec, w);
    const auto& f = root_factor(spec, s.factor);
    if (s.position < 1 || s.position >= f.size) throw std::invalid_argument("simple root position out of range");
    // <omega_a, alpha_i^vee> = delta_ai
    return w[spec.offset(s.factor) + s.position - 1];
}

std::vector<std::vector<Int>> cartan_matrix(const GroupSpec& spec) {
    auto pi = simple_roots(spec);
    std::vector<std::vector<Int>> m(pi.size(), std::vector<Int>(pi.size()));
    for (std::size_t i = 0; i < pi.size(); ++i) {
        Weight a = simple_root(spec, pi[i]);
        for (std::size_t j = 0; j < pi.size(); ++j)
            m[i][j] = coroot_pairing(spec, a, PositiveRoot{pi[j].factor, pi[j].position, pi[j].position + 1});
    }
    return m;
}

bool is_dominant(const GroupSpec& spec, const Weight& w) {
    for (auto s : simple_roots(spec))
        if (coroot_pairing(spec, w, s) < 0) return false;
    return true;
}

Weight dual_weight(const GroupSpec& spec, const Weight& w) {
    check_len(spec, w);
    if (!is_dominant(spec, w)) throw std::invalid_argument("dual_weight needs a dominant weight");
    Weight out = zero_weight(spec);
    for (int f = 0; f < static_cast<int>(spec.factors().size()); ++f) {
        const auto& fac = spec.factors()[f];
        if (fac.kind == FactorKind::Torus) {
            out[spec.offset(f)] = -w[spec.offset(f)];
            continue;
        }
        auto c = e_coords(spec, w, f);
        std::vector<Int> d(c.size());
        for (std::size_t t = 0; t < c.size(); ++t) d[t] = -c[c.size() - 1 - t];
        out = add(out, from_e_coords(spec, f, d));
    }
    return out;
}

Weight restrict_to_derived(const GroupSpec& spec, const Weight& w) {
    check_len(spec, w);
    Weight out;
    for (int f = 0; f < static_cast<int>(spec.factors().size()); ++f) {
        const auto& fac = spec.factors()[f];
        if (fac.kind == FactorKind::Torus || fac.size == 1) continue;
        for (int a = 1; a <= fac.size - 1; ++a) out.push_back(w[spec.offset(f) + a - 1]);
    }
    return out;
}

std::vector<Weight> central_characters(const GroupSpec& spec) {
    std::vector<Weight> out;
    for (int f = 0; f < static_cast<int>(spec.factors().size()); ++f) {
        const auto& fac = spec.factors()[f];
        if (fac.kind == FactorKind::GL) out.push_back(fundamental(spec, f, fac.size));
        if (fac.kind == FactorKind::Torus) out.push_back(torus_char(spec, f));
    }
    return out;
}

std::optional<std::vector<Int>> simple_root_coords(const GroupSpec& spec, const Weight& w) {
    check_len(spec, w);
    std::vector<Int> out;
    for (int f = 0; f < static_cast<int>(spec.factors().size()); ++f) {
        const auto& fac = spec.factors()[f];
        if (fac.kind == FactorKind::Torus) {
            if (w[spec.offset(f)] != 0) return std::nullopt;
            continue;
        }
        auto c = e_coords(spec, w, f);
        Int s = 0;
        for (const auto& x : c) s += x;
        if (fac.kind == FactorKind::SL) {
            if (!mpz_divisible_ui_p(s.get_mpz_t(), fac.size)) return std::nullopt;
            Int shift = s / fac.size;
            for (auto& x : c) x -= shift;
        } else if (s != 0) {
            return std::nullopt;
        }
        Int partial = 0;
        for (int i = 1; i < fac.size; ++i) {
            partial += c[i - 1];
            out.push_back(partial);
        }
    }
    return out;
}

std::string root_label(const GroupSpec& spec, const Weight& w) {
    auto coords = simple_root_coords(spec, w);
    if (!coords) return to_string(w);
    auto pi = simple_roots(spec);
    std::string s;
    for (std::size_t k = 0; k < pi.size(); ++k) {
        const Int& c = (*coords)[k];
        if (c == 0) continue;
        if (!s.empty() && c > 0) s += "+";
        if (c == -1)
            s += "-";
        else if (c != 1)
            s += c.get_str();
        s += "a" + std::string(pi[k].factor, '\'') + std::to_string(pi[k].position);
    }
    return s.empty() ? "0" : s;
}

QuotientMap::QuotientMap(const GroupSpec& spec, const std::vector<Weight>& kernel_chars)
    : kernel_(saturate(IntegerLattice(spec.basis_dim(), kernel_chars))) {}

Weight QuotientMap::apply(const Weight& w) const {
    Weight r = w;
    for (const auto& b : kernel_.basis()) {
        std::size_t p = 0;
        while (b[p] == 0) ++p;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), r[p].get_mpz_t(), b[p].get_mpz_t());
        if (q != 0) r = sub(r, scale(q, b));
    }
    return r;
}

bool QuotientMap::equal(const Weight& u, const Weight& v) const { return apply(u) == apply(v); }

QuotientMap quotient_by_subtorus(const GroupSpec& spec, const std::vector<Weight>& kernel_chars) {
    return QuotientMap(spec, kernel_chars);
}

}  // namespace wv
