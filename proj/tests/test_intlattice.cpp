#include "weylverify/intlattice.hpp"

#include <doctest.h>

#include <random>

using namespace wv;

namespace {

std::vector<Vec> random_gens(std::mt19937& rng, std::size_t dim, std::size_t count, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<Vec> out(count, Vec(dim));
    for (auto& v : out)
        for (auto& x : v) x = d(rng);
    return out;
}

Vec combine(const std::vector<Vec>& gens, const Vec& c, std::size_t dim) {
    Vec out = zero_vec(dim);
    for (std::size_t i = 0; i < gens.size(); ++i) out = add(out, scale(c[i], gens[i]));
    return out;
}

}  // namespace

TEST_CASE("hnf is idempotent and U is a change of basis") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 6;
        auto cols_v = random_gens(rng, rows, cols, -5, 5);
        IntMatrix m = IntMatrix::from_columns(rows, cols_v);
        IntMatrix u;
        IntMatrix h = hnf(m, u);
        CHECK(m * u == h);
        CHECK(hnf(h) == h);
        // U is invertible over Z: the columns of H span the same lattice as m
        IntegerLattice a(rows, cols_v), b(rows, h.columns());
        CHECK(lattice_equal(a, b));
    }
}

TEST_CASE("hnf shape on a small example") {
    IntMatrix m = IntMatrix::from_columns(2, {make_vec({4, 6}), make_vec({6, 9})});
    IntMatrix h = hnf(m);
    // lattice spanned by (4,6),(6,9) is Z*(2,3)
    CHECK(h.column(0) == make_vec({2, 3}));
    CHECK(is_zero(h.column(1)));
}

TEST_CASE("integer kernel annihilates and is saturated") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 1 + trial % 3, cols = 2 + trial % 4;
        IntMatrix m = IntMatrix::from_rows(random_gens(rng, cols, rows, -4, 4));
        IntMatrix k = integer_kernel(m);
        for (const auto& c : k.columns()) CHECK(is_zero(m.apply(c)));
        IntegerLattice kl(cols, k.columns());
        CHECK(lattice_equal(kl, saturate(kl)));
    }
}

TEST_CASE("member agrees with bounded brute force") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t dim = 1 + trial % 4, count = 1 + trial % 3;
        auto gens = random_gens(rng, dim, count, -3, 3);
        IntegerLattice L(dim, gens);
        Vec v;
        if (trial % 2 == 0) {
            Vec c(count);
            for (auto& x : c) x = coef(rng);
            v = combine(gens, c, dim);
        } else {
            v = random_gens(rng, dim, 1, -4, 4)[0];
        }
        auto c = member(v, L);
        if (c) CHECK(combine(gens, *c, dim) == v);
        auto bf = member_bruteforce(v, gens, 4);
        if (bf) CHECK(c.has_value());
    }
}

TEST_CASE("member rejects dimension mismatch") {
    IntegerLattice L(2, {make_vec({1, 0})});
    CHECK_THROWS_AS(member(make_vec({1, 0, 0}), L), std::invalid_argument);
}

TEST_CASE("intersection, sum and saturation on hand examples") {
    IntegerLattice a(1, {make_vec({2})}), b(1, {make_vec({3})});
    CHECK(lattice_equal(intersect(a, b), IntegerLattice(1, {make_vec({6})})));
    CHECK(lattice_equal(sum(a, b), IntegerLattice(1, {make_vec({1})})));
    IntegerLattice c(2, {make_vec({2, 4})});
    CHECK(lattice_equal(saturate(c), IntegerLattice(2, {make_vec({1, 2})})));
    CHECK(contains(sum(a, b), a));
    CHECK_FALSE(contains(a, b));
}

TEST_CASE("intersection agrees with enumeration") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto ga = random_gens(rng, 2, 2, -3, 3), gb = random_gens(rng, 2, 2, -3, 3);
        IntegerLattice a(2, ga), b(2, gb);
        IntegerLattice i = intersect(a, b);
        for (int x = -6; x <= 6; ++x)
            for (int y = -6; y <= 6; ++y) {
                Vec v = make_vec({x, y});
                bool in_both = member(v, a).has_value() && member(v, b).has_value();
                CHECK(in_both == member(v, i).has_value());
            }
    }
}

TEST_CASE("rank and independence") {
    CHECK(linearly_independent({make_vec({1, 0}), make_vec({1, 1})}, 2));
    CHECK_FALSE(linearly_independent({make_vec({1, 2}), make_vec({2, 4})}, 2));
    CHECK(IntegerLattice(3, {make_vec({1, 2, 3}), make_vec({2, 4, 6})}).rank() == 1);
    CHECK(IntegerLattice(3, {}).rank() == 0);
}
