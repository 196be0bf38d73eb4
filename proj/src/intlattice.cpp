#include "weylverify/intlattice.hpp"

#include <stdexcept>
#include <utility>

namespace wv {

Vec make_vec(std::initializer_list<long> xs) {
    Vec v;
    v.reserve(xs.size());
    for (long x : xs) v.emplace_back(x);
    return v;
}

Vec zero_vec(std::size_t n) { return Vec(n, Int(0)); }

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Int& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool is_zero(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

std::string to_string(const Vec& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += a[i].get_str();
    }
    return s + ")";
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vec IntMatrix::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

std::vector<Vec> IntMatrix::columns() const {
    std::vector<Vec> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vec IntMatrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    Vec y = zero_vec(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
    return y;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product size mismatch");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((*this)(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += (*this)(i, k) * o(k, j);
        }
    return p;
}

namespace {

// col_a <- x col_a + y col_b ; col_b <- s col_a + t col_b (simultaneously)
void combine(IntMatrix& m, std::size_t a, std::size_t b, const Int& x, const Int& y,
             const Int& s, const Int& t) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Int va = m(r, a), vb = m(r, b);
        m(r, a) = x * va + y * vb;
        m(r, b) = s * va + t * vb;
    }
}

void addmul_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

void negate_col(IntMatrix& m, std::size_t c) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}

IntMatrix hnf_impl(const IntMatrix& m, IntMatrix* u) {
    IntMatrix h = m;
    if (u) *u = IntMatrix::identity(m.cols());
    std::size_t piv = 0;
    for (std::size_t row = 0; row < h.rows() && piv < h.cols(); ++row) {
        for (std::size_t j = piv + 1; j < h.cols(); ++j) {
            if (h(row, j) == 0) continue;
            Int a = h(row, piv), b = h(row, j), g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Int s = -b / g, t = a / g;
            combine(h, piv, j, x, y, s, t);
            if (u) combine(*u, piv, j, x, y, s, t);
        }
        if (h(row, piv) == 0) {
            // nothing in this row beyond already-placed pivots
            continue;
        }
        if (h(row, piv) < 0) {
            negate_col(h, piv);
            if (u) negate_col(*u, piv);
        }
        for (std::size_t k = 0; k < piv; ++k) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(row, k).get_mpz_t(), h(row, piv).get_mpz_t());
            if (q == 0) continue;
            addmul_col(h, k, piv, q);
            if (u) addmul_col(*u, k, piv, q);
        }
        ++piv;
    }
    return h;
}

std::size_t nonzero_columns(const IntMatrix& h) {
    std::size_t n = 0;
    for (std::size_t c = 0; c < h.cols(); ++c) {
        bool nz = false;
        for (std::size_t r = 0; r < h.rows() && !nz; ++r) nz = h(r, c) != 0;
        if (nz) n = c + 1;
    }
    return n;
}

// Solve h y = v for an HNF matrix h with k leading nonzero columns.
std::optional<Vec> solve_echelon(const IntMatrix& h, std::size_t k, const Vec& v) {
    Vec rest = v;
    Vec y = zero_vec(h.cols());
    std::size_t row = 0;
    for (std::size_t c = 0; c < k; ++c) {
        while (row < h.rows() && h(row, c) == 0) {
            if (rest[row] != 0) return std::nullopt;
            ++row;
        }
        if (row == h.rows()) break;
        if (!mpz_divisible_p(rest[row].get_mpz_t(), h(row, c).get_mpz_t())) return std::nullopt;
        y[c] = rest[row] / h(row, c);
        for (std::size_t r = row; r < h.rows(); ++r) rest[r] -= y[c] * h(r, c);
        ++row;
    }
    if (!is_zero(rest)) return std::nullopt;
    return y;
}

}  // namespace

IntMatrix hnf(const IntMatrix& m) { return hnf_impl(m, nullptr); }

IntMatrix hnf(const IntMatrix& m, IntMatrix& u) { return hnf_impl(m, &u); }

IntMatrix integer_kernel(const IntMatrix& m) {
    IntMatrix u;
    IntMatrix h = hnf_impl(m, &u);
    std::size_t k = nonzero_columns(h);
    IntMatrix ker(m.cols(), m.cols() - k);
    for (std::size_t c = k; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.cols(); ++r) ker(r, c - k) = u(r, c);
    return hnf(ker);
}

IntegerLattice::IntegerLattice(std::size_t ambient, std::vector<Vec> generators)
    : ambient_(ambient), gens_(std::move(generators)) {
    for (const auto& g : gens_)
        if (g.size() != ambient_) throw std::invalid_argument("generator dimension mismatch");
    IntMatrix h = hnf(IntMatrix::from_columns(ambient_, gens_));
    std::size_t k = nonzero_columns(h);
    for (std::size_t c = 0; c < k; ++c) basis_.push_back(h.column(c));
}

std::size_t rank(const IntegerLattice& l) { return l.rank(); }

std::optional<Vec> member(const Vec& v, const IntegerLattice& l) {
    if (v.size() != l.ambient_dim()) throw std::invalid_argument("member: dimension mismatch");
    if (l.generators().empty()) {
        if (is_zero(v)) return Vec{};
        return std::nullopt;
    }
    IntMatrix u;
    IntMatrix h = hnf(IntMatrix::from_columns(l.ambient_dim(), l.generators()), u);
    auto y = solve_echelon(h, nonzero_columns(h), v);
    if (!y) return std::nullopt;
    return u.apply(*y);
}

IntegerLattice sum(const IntegerLattice& a, const IntegerLattice& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient mismatch");
    std::vector<Vec> g = a.generators();
    g.insert(g.end(), b.generators().begin(), b.generators().end());
    return IntegerLattice(a.ambient_dim(), g);
}

IntegerLattice intersect(const IntegerLattice& a, const IntegerLattice& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient mismatch");
    std::size_t n = a.ambient_dim();
    const auto& ba = a.basis();
    const auto& bb = b.basis();
    if (ba.empty() || bb.empty()) return IntegerLattice(n, {});
    std::vector<Vec> cols = ba;
    for (const auto& v : bb) cols.push_back(scale(Int(-1), v));
    IntMatrix ker = integer_kernel(IntMatrix::from_columns(n, cols));
    std::vector<Vec> gens;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        Vec w = zero_vec(n);
        for (std::size_t i = 0; i < ba.size(); ++i) w = add(w, scale(ker(i, c), ba[i]));
        gens.push_back(w);
    }
    return IntegerLattice(n, gens);
}

IntegerLattice saturate(const IntegerLattice& l) {
    std::size_t n = l.ambient_dim();
    if (l.basis().empty()) return IntegerLattice(n, {});
    IntMatrix rows = IntMatrix::from_rows(l.basis());  // rank x n
    IntMatrix perp = integer_kernel(rows);             // n x (n - rank)
    if (perp.cols() == 0) return IntegerLattice(n, IntMatrix::identity(n).columns());
    return IntegerLattice(n, integer_kernel(perp.transpose()).columns());
}

bool contains(const IntegerLattice& big, const IntegerLattice& small) {
    for (const auto& g : small.basis())
        if (!member(g, big)) return false;
    return true;
}

bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b) {
    return a.ambient_dim() == b.ambient_dim() && a.basis() == b.basis();
}

bool linearly_independent(const std::vector<Vec>& vs, std::size_t ambient) {
    return IntegerLattice(ambient, vs).rank() == vs.size();
}

std::optional<Vec> member_bruteforce(const Vec& v, const std::vector<Vec>& gens, int box) {
    std::size_t k = gens.size();
    Vec c(k, Int(-box));
    if (k == 0) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    while (true) {
        Vec w = zero_vec(v.size());
        for (std::size_t i = 0; i < k; ++i) w = add(w, scale(c[i], gens[i]));
        if (w == v) return c;
        std::size_t i = 0;
        while (i < k && c[i] == box) c[i++] = -box;
        if (i == k) return std::nullopt;
        c[i] += 1;
    }
}

}  // namespace wv
