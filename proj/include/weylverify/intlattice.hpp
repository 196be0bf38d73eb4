#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace wv {

using Int = mpz_class;
using Vec = std::vector<Int>;

Vec make_vec(std::initializer_list<long> xs);
Vec zero_vec(std::size_t n);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Int& c, const Vec& a);
bool is_zero(const Vec& a);
std::string to_string(const Vec& a);

// dense row-major matrix; lattices are spanned by its columns
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(std::size_t rows, const std::vector<Vec>& cols);
    static IntMatrix from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vec column(std::size_t c) const;
    std::vector<Vec> columns() const;
    IntMatrix transpose() const;
    Vec apply(const Vec& x) const;
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Column Hermite normal form: lower echelon, positive pivots, entries left of a
// pivot reduced into [0, pivot). Zero columns are moved to the right.
IntMatrix hnf(const IntMatrix& m);

// Same, also returning a unimodular U with m * U = H.
IntMatrix hnf(const IntMatrix& m, IntMatrix& u);

// Basis (as columns) of {x in Z^cols : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

class IntegerLattice {
public:
    IntegerLattice() = default;
    IntegerLattice(std::size_t ambient, std::vector<Vec> generators);

    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<Vec>& generators() const { return gens_; }
    // nonzero HNF columns, a canonical basis
    const std::vector<Vec>& basis() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> gens_;
    std::vector<Vec> basis_;
};

std::size_t rank(const IntegerLattice& l);

// Coefficients over the original generators, or nullopt when v is not in l.
std::optional<Vec> member(const Vec& v, const IntegerLattice& l);

IntegerLattice intersect(const IntegerLattice& a, const IntegerLattice& b);
IntegerLattice saturate(const IntegerLattice& l);
IntegerLattice sum(const IntegerLattice& a, const IntegerLattice& b);
bool contains(const IntegerLattice& big, const IntegerLattice& small);
bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b);
bool linearly_independent(const std::vector<Vec>& vs, std::size_t ambient);

// Bounded coefficient search, |c_i| <= box. Used as an oracle for member().
std::optional<Vec> member_bruteforce(const Vec& v, const std::vector<Vec>& gens, int box);

}  // namespace wv
