#include <doctest.h>

#include <random>

#include "mext/mat.hpp"

using namespace mext;

namespace {

// cofactor-expansion characteristic polynomial, kept as an independent oracle
Poly det_poly(std::vector<std::vector<Poly>> m) {
    const size_t n = m.size();
    const PrimeField f = m[0][0].field();
    if (n == 1) return m[0][0];
    Poly acc = Poly::zero(f);
    for (size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<Poly> row;
            for (size_t c = 1; c < n; ++c) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Poly term = m[i][0] * det_poly(std::move(minor));
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

Poly charpoly_cofactor(const Mat& m) {
    const size_t n = m.rows();
    const PrimeField& f = m.field();
    std::vector<std::vector<Poly>> entries(n, std::vector<Poly>(n, Poly::zero(f)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            Poly e(f, {f.neg(m.at(i, j))});
            if (i == j) e = e + Poly::monomial(f, 1);
            entries[i][j] = std::move(e);
        }
    }
    return det_poly(std::move(entries));
}

Mat random_mat(PrimeField f, size_t rows, size_t cols, std::mt19937_64& gen) {
    Mat m(f, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) m.set(i, j, static_cast<uint32_t>(gen() % f.modulus()));
    }
    return m;
}

Mat random_invertible(PrimeField f, size_t n, std::mt19937_64& gen) {
    while (true) {
        Mat m = random_mat(f, n, n, gen);
        if (rank(m) == n) return m;
    }
}

}  // namespace

TEST_CASE("rank") {
    const PrimeField f2(2);
    CHECK(rank(Mat::identity(f2, 4)) == 4);
    CHECK(rank(Mat::from_rows(f2, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}})) == 3);
    CHECK(rank(Mat(f2, 3, 5)) == 0);
    CHECK(rank(Mat::from_rows(f2, {{1, 1}, {1, 1}})) == 1);
}

TEST_CASE("rank equals rank of the transpose") {
    std::mt19937_64 gen(7);
    const PrimeField f2(2);
    for (size_t rows = 1; rows <= 6; ++rows) {
        for (size_t cols = 1; cols <= 6; ++cols) {
            for (int trial = 0; trial < 40; ++trial) {
                const Mat m = random_mat(f2, rows, cols, gen);
                CHECK(rank(m) == rank(m.transpose()));
            }
        }
    }
}

TEST_CASE("solve_left") {
    const PrimeField f2(2);
    const Mat id3 = Mat::identity(f2, 3);
    CHECK(solve_left(id3, {0, 0, 1}) == std::vector<uint32_t>{0, 0, 1});

    const Mat perm = Mat::from_rows(f2, {{0, 1}, {1, 0}});
    CHECK(solve_left(perm, {1, 0}) == std::vector<uint32_t>{0, 1});

    // power matrix of x = (0,1,1,0) under the companion of s^4+s+1
    const Mat a4 = companion_matrix(Poly(f2, {1, 1, 0, 0, 1}));
    Mat powers(f2, 4, 4);
    std::vector<uint32_t> row = {0, 1, 1, 0};
    for (size_t i = 0; i < 4; ++i) {
        if (i > 0) row = row_times(row, a4);
        powers.set_row(i, row);
    }
    REQUIRE(rank(powers) == 4);
    const std::vector<uint32_t> e4 = {0, 0, 0, 1};
    const auto a = solve_left(powers, e4);
    CHECK(row_times(a, powers) == e4);

    // inconsistent system: zero matrix, nonzero rhs
    CHECK_THROWS_AS(solve_left(Mat(f2, 2, 2), {1, 0}), NoSolution);
    // singular but consistent: any solution is fine, re-multiplying must hit e
    const Mat sing = Mat::from_rows(f2, {{1, 1}, {1, 1}});
    const auto sol = solve_left(sing, {1, 1});
    CHECK(row_times(sol, sing) == std::vector<uint32_t>{1, 1});
}

TEST_CASE("solve_left re-multiplication property") {
    std::mt19937_64 gen(11);
    for (uint32_t q : {2u, 5u}) {
        const PrimeField f(q);
        for (int trial = 0; trial < 60; ++trial) {
            const Mat m = random_invertible(f, 4, gen);
            std::vector<uint32_t> e(4);
            for (auto& v : e) v = static_cast<uint32_t>(gen() % q);
            CHECK(row_times(solve_left(m, e), m) == e);
        }
    }
}

TEST_CASE("inverse") {
    const PrimeField f2(2);
    CHECK(inverse(Mat::identity(f2, 3)) == Mat::identity(f2, 3));
    const Mat u = Mat::from_rows(f2, {{1, 1}, {0, 1}});
    CHECK(inverse(u) == u);
    CHECK_THROWS_AS(inverse(Mat(f2, 2, 2)), Singular);
    CHECK_THROWS_AS(inverse(Mat(f2, 2, 3)), ShapeMismatch);

    std::mt19937_64 gen(3);
    for (uint32_t q : {2u, 3u, 7u}) {
        const PrimeField f(q);
        for (int trial = 0; trial < 25; ++trial) {
            const Mat m = random_invertible(f, 5, gen);
            CHECK(m * inverse(m) == Mat::identity(f, 5));
        }
    }
}

TEST_CASE("companion matrix layout") {
    const PrimeField f2(2);
    const Poly p6{f2, {1, 1, 0, 0, 0, 0, 1}};  // s^6+s+1
    const Mat a6 = companion_matrix(p6);
    CHECK(row_times({0, 0, 0, 0, 0, 1}, a6) == std::vector<uint32_t>{0, 0, 0, 0, 1, 0});
    CHECK(row_times({0, 1, 0, 1, 1, 0}, a6) == std::vector<uint32_t>{1, 0, 1, 1, 0, 1});
    CHECK(companion_matrix(Poly(f2, {1, 1})) == Mat::from_rows(f2, {{1}}));
    CHECK_THROWS_AS(companion_matrix(Poly(f2, {0, 1})), ZeroConstantTerm);
    CHECK_THROWS_AS(companion_matrix(Poly(PrimeField(5), {1, 2})), NotMonic);

    // over F_5 the last column carries negated coefficients
    const PrimeField f5(5);
    const Mat a = companion_matrix(Poly(f5, {2, 3, 1}));  // s^2+3s+2
    CHECK(a.at(0, 1) == 3);  // -2 mod 5
    CHECK(a.at(1, 1) == 2);  // -3 mod 5
    CHECK(a.at(1, 0) == 1);
}

TEST_CASE("charpoly") {
    const PrimeField f2(2);
    const Poly p4{f2, {1, 1, 0, 0, 1}};
    CHECK(charpoly(companion_matrix(p4)) == p4);
    CHECK(charpoly(Mat(f2, 2, 2)) == Poly::monomial(f2, 2));
    CHECK(charpoly(Mat::identity(f2, 3)) == Poly(f2, {1, 1, 1, 1}));  // (s-1)^3 over F_2
}

TEST_CASE("charpoly of companion matrices round-trips") {
    const PrimeField f2(2);
    // exhaustive over F_2 up to degree 8 (monic, nonzero constant term)
    for (size_t deg = 1; deg <= 8; ++deg) {
        for (uint32_t bits = 0; bits < (1u << (deg - 1)); ++bits) {
            std::vector<uint32_t> c(deg + 1, 0);
            c[0] = 1;
            for (size_t i = 1; i < deg; ++i) c[i] = (bits >> (i - 1)) & 1u;
            c[deg] = 1;
            const Poly p{f2, c};
            CHECK(charpoly(companion_matrix(p)) == p);
        }
    }
    // sampled over F_3 and F_5
    std::mt19937_64 gen(19);
    for (uint32_t q : {3u, 5u}) {
        const PrimeField f(q);
        for (int trial = 0; trial < 120; ++trial) {
            const size_t deg = 1 + gen() % 8;
            std::vector<uint32_t> c(deg + 1);
            for (auto& v : c) v = static_cast<uint32_t>(gen() % q);
            c[0] = 1 + static_cast<uint32_t>(gen() % (q - 1));
            c[deg] = 1;
            const Poly p{f, c};
            CHECK(charpoly(companion_matrix(p)) == p);
        }
    }
}

TEST_CASE("charpoly agrees with cofactor expansion") {
    const PrimeField f2(2);
    // all 2x2 over F_2
    for (uint32_t bits = 0; bits < 16; ++bits) {
        const Mat m = Mat::from_rows(
            f2, {{bits & 1u, (bits >> 1) & 1u}, {(bits >> 2) & 1u, (bits >> 3) & 1u}});
        CHECK(charpoly(m) == charpoly_cofactor(m));
    }
    // random sample up to 4x4 over F_2 and F_3
    std::mt19937_64 gen(23);
    for (int trial = 0; trial < 10000; ++trial) {
        const PrimeField f(trial % 2 == 0 ? 2 : 3);
        const size_t n = 1 + gen() % 4;
        const Mat m = random_mat(f, n, n, gen);
        CHECK(charpoly(m) == charpoly_cofactor(m));
    }
}

TEST_CASE("charpoly is a similarity invariant") {
    std::mt19937_64 gen(29);
    for (uint32_t q : {2u, 3u}) {
        const PrimeField f(q);
        for (int trial = 0; trial < 50; ++trial) {
            const Mat m = random_mat(f, 5, 5, gen);
            const Mat p = random_invertible(f, 5, gen);
            CHECK(charpoly(p * m * inverse(p)) == charpoly(m));
        }
    }
}

TEST_CASE("poly_apply matches the power expansion") {
    const PrimeField f2(2);
    const Mat a = companion_matrix(Poly(f2, {1, 1, 0, 0, 1}));
    const Poly fpoly{f2, {1, 1, 1}};  // 1 + s + s^2
    const Mat expect = [&] {
        Mat acc = Mat::identity(f2, 4);
        Mat a2 = a * a;
        Mat out(f2, 4, 4);
        for (size_t i = 0; i < 4; ++i) {
            for (size_t j = 0; j < 4; ++j) {
                out.set(i, j, f2.add(f2.add(acc.at(i, j), a.at(i, j)), a2.at(i, j)));
            }
        }
        return out;
    }();
    CHECK(poly_apply(fpoly, a) == expect);
    CHECK(poly_apply(Poly::zero(f2), a) == Mat(f2, 4, 4));
}
