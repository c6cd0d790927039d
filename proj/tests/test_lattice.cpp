#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wps/lattice.hpp"

using namespace wps;

TEST_CASE("p_content on known values") {
    CHECK(p_content(12, 2) == 4);
    CHECK(p_content(12, 5) == 1);
    CHECK(p_content(72, 3) == 9);
    CHECK(p_content(-72, 3) == 9);
    CHECK_THROWS_AS(p_content(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(p_content(12, 4), std::invalid_argument);
    CHECK_THROWS_AS(p_content(12, 1), std::invalid_argument);
}

TEST_CASE("p_content is multiplicative") {
    std::mt19937_64 gen(11);
    std::vector<Int> primes;
    for (Int p = 2; p <= 100; ++p)
        if (is_prime(p)) primes.push_back(p);
    for (int trial = 0; trial < 200; ++trial) {
        Int a = test::rand_nonzero(gen, 1000000);
        Int b = test::rand_nonzero(gen, 1000000);
        const Int& p = primes[test::rand_range(gen, 0, primes.size() - 1)];
        CHECK(p_content(a * b, p) == p_content(a, p) * p_content(b, p));
    }
}

TEST_CASE("factorize and primes_dividing") {
    auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<Int, int>{2, 3});
    CHECK(f[1] == std::pair<Int, int>{3, 2});
    CHECK(f[2] == std::pair<Int, int>{5, 1});
    CHECK(factorize(1).empty());
    CHECK(primes_dividing({6, 35}) == std::vector<Int>{2, 3, 5, 7});
}

TEST_CASE("extended gcd") {
    std::mt19937_64 gen(12);
    for (int trial = 0; trial < 200; ++trial) {
        Int a = test::rand_range(gen, -500, 500);
        Int b = test::rand_range(gen, -500, 500);
        Int x, y;
        Int g = extended_gcd(a, b, x, y);
        CHECK(g == gcd(abs(a), abs(b)));
        CHECK(a * x + b * y == g);
    }
}

namespace {

bool all_ones(const std::vector<Int>& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& d) { return d == 1; });
}

}  // namespace

TEST_CASE("column Hermite form invariants") {
    std::mt19937_64 gen(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t rows = test::rand_range(gen, 1, 5);
        std::size_t cols = test::rand_range(gen, 1, 5);
        IntMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a(i, j) = test::rand_range(gen, -20, 20);
        ColumnHermite ch = column_hermite(a);
        CHECK(a.multiplied(ch.u) == ch.h);
        CHECK(abs_det(ch.u) == 1);
        // Pivots positive, strictly descending pivot rows is impossible by
        // construction; entries right of a pivot in its row vanish, entries
        // left are reduced.
        for (std::size_t k = 0; k < ch.rank; ++k) {
            std::size_t r = ch.pivot_rows[k];
            CHECK(ch.h(r, k) > 0);
            for (std::size_t j = k + 1; j < cols; ++j) CHECK(ch.h(r, j) == 0);
            for (std::size_t j = 0; j < k; ++j) {
                CHECK(ch.h(r, j) >= 0);
                CHECK(ch.h(r, j) < ch.h(r, k));
            }
        }
        // Determinism.
        ColumnHermite again = column_hermite(a);
        CHECK(again.h == ch.h);
        CHECK(again.u == ch.u);
    }
}

TEST_CASE("smith invariant factors on known matrices") {
    CHECK(smith_invariant_factors(IntMatrix::from_rows({{2, 0}, {0, 3}}, 2)) ==
          std::vector<Int>{1, 6});
    CHECK(smith_invariant_factors(IntMatrix::from_rows({{2, 0}, {0, 2}}, 2)) ==
          std::vector<Int>{2, 2});
    CHECK(smith_invariant_factors(IntMatrix::from_rows({{1, 2}, {3, 4}}, 2)) ==
          std::vector<Int>{1, 2});
    CHECK(smith_invariant_factors(IntMatrix(2, 3)).empty());
}

TEST_CASE("abs_det and unimodularity") {
    CHECK(abs_det(IntMatrix::from_rows({{1, 2}, {3, 4}}, 2)) == 2);
    CHECK(abs_det(IntMatrix::identity(4)) == 1);
    CHECK(is_unimodular(IntMatrix::identity(3)));
    CHECK_FALSE(is_unimodular(IntMatrix::from_rows({{2, 0}, {0, 1}}, 2)));
    std::mt19937_64 gen(14);
    for (int trial = 0; trial < 50; ++trial) {
        auto [u, inv] = test::random_unimodular_pair(gen, test::rand_range(gen, 2, 5));
        CHECK(is_unimodular(u));
        CHECK(u.multiplied(inv) == IntMatrix::identity(u.rows()));
    }
}

TEST_CASE("kernel of a single relation row") {
    IntMatrix m = IntMatrix::from_rows({{2, 3, 4}}, 3);
    auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 2);
    for (const auto& b : basis) CHECK(dot(m.row(0), b) == 0);
    // Saturation: the basis spans a rank-2 primitive sublattice.
    auto factors = smith_invariant_factors(IntMatrix::from_rows(basis, 3));
    REQUIRE(factors.size() == 2);
    CHECK(all_ones(factors));
}

TEST_CASE("kernel edge cases") {
    CHECK(kernel_basis(IntMatrix::identity(3)).empty());
    auto full = kernel_basis(IntMatrix(1, 3));
    REQUIRE(full.size() == 3);
    auto factors = smith_invariant_factors(IntMatrix::from_rows(full, 3));
    CHECK(factors == std::vector<Int>{1, 1, 1});
}

TEST_CASE("kernel basis is saturated on random matrices") {
    std::mt19937_64 gen(15);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix m(4, 6);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 6; ++j) m(i, j) = test::rand_range(gen, -20, 20);
        auto basis = kernel_basis(m);
        for (const auto& b : basis) {
            auto mb = m.apply(b);
            CHECK(std::all_of(mb.begin(), mb.end(), [](const Int& x) { return x == 0; }));
        }
        CHECK(basis.size() == 6 - matrix_rank(m));
        if (!basis.empty()) {
            auto factors = smith_invariant_factors(IntMatrix::from_rows(basis, 6));
            CHECK(factors.size() == basis.size());
            CHECK(all_ones(factors));
        }
    }
}

TEST_CASE("quotient basis examples") {
    IntMatrix q = quotient_basis({1, 0, 0});
    CHECK(q == IntMatrix::from_rows({{0, 1, 0}, {0, 0, 1}}, 3));

    IntMatrix q2 = quotient_basis({1, 2, 3, 4});
    auto qu = q2.apply({1, 2, 3, 4});
    CHECK(std::all_of(qu.begin(), qu.end(), [](const Int& x) { return x == 0; }));
    CHECK(smith_invariant_factors(q2) == std::vector<Int>{1, 1, 1});

    CHECK_THROWS_WITH_AS(quotient_basis({2, 4, 6}), "weight vector not primitive",
                         std::invalid_argument);
}

TEST_CASE("quotient basis on random primitive vectors") {
    std::mt19937_64 gen(16);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n1 = test::rand_range(gen, 2, 6);
        LatticeVector u(n1);
        do {
            for (auto& x : u) x = test::rand_range(gen, -30, 30);
        } while (gcd_all(u) == 0);
        Int g = gcd_all(u);
        for (auto& x : u) x /= g;
        IntMatrix q = quotient_basis(u);
        auto qu = q.apply(u);
        CHECK(std::all_of(qu.begin(), qu.end(), [](const Int& x) { return x == 0; }));
        auto factors = smith_invariant_factors(q);
        CHECK(factors.size() == n1 - 1);
        CHECK(all_ones(factors));
        // Determinism.
        CHECK(quotient_basis(u) == q);
    }
}
