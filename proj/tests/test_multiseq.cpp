#include <doctest.h>

#include <random>

#include "mext/multiseq.hpp"

using namespace mext;

namespace {

const PrimeField f2(2);

// matrix state of the reference 3-component multisequence over F_2 with
// minimal polynomial s^6+s+1
MultiseqState reference_state() {
    return {Mat::from_rows(f2, {{0, 0, 0, 0, 0, 1}, {0, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 1}}),
            Poly(f2, {1, 1, 0, 0, 0, 0, 1})};
}

// scalar LRR run forward from the minimal polynomial, independent of the
// matrix stepping path
std::vector<uint32_t> lrr_samples(const Poly& minpoly, std::vector<uint32_t> init, size_t count) {
    const PrimeField& f = minpoly.field();
    const size_t n = static_cast<size_t>(minpoly.degree());
    std::vector<uint32_t> s = std::move(init);
    while (s.size() < count) {
        uint32_t next = 0;
        const size_t k = s.size() - n;
        for (size_t i = 0; i < n; ++i) {
            next = f.add(next, f.mul(f.neg(minpoly.coeff(i)), s[k + i]));
        }
        s.push_back(next);
    }
    s.resize(count);
    return s;
}

// every column of b lies in the column span of a
bool colspan_contains(const Mat& a, const Mat& b) {
    const size_t base = rank(a);
    Mat joined(a.field(), a.rows(), a.cols() + 1);
    for (size_t j2 = 0; j2 < b.cols(); ++j2) {
        for (size_t i = 0; i < a.rows(); ++i) {
            for (size_t j = 0; j < a.cols(); ++j) joined.set(i, j, a.at(i, j));
            joined.set(i, a.cols(), b.at(i, j2));
        }
        if (rank(joined) != base) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("multisequence state validation") {
    const Poly p4{f2, {1, 1, 0, 0, 1}};
    CHECK_THROWS_AS(MultiseqState(Mat(f2, 2, 4), p4), ZeroState);
    CHECK_THROWS_AS(MultiseqState(Mat::identity(f2, 3), p4), ShapeMismatch);
    // s^4+s^3+s^2+s+1 is irreducible but not primitive
    CHECK_THROWS_AS(MultiseqState(Mat::identity(f2, 4), Poly(f2, {1, 1, 1, 1, 1})), NotPrimitive);
    CHECK_NOTHROW(MultiseqState(Mat::identity(f2, 4), p4));
}

TEST_CASE("step") {
    const MultiseqState s = reference_state();
    CHECK(step(s, 0) == s);
    CHECK(step(step(s, 1), -1) == s);
    CHECK(step(step(s, 5), -2) == step(s, 3));
    CHECK(step(s, 1).state().row(0) == std::vector<uint32_t>{0, 0, 0, 0, 1, 0});
    // full period returns to the start
    CHECK(step(s, 63) == s);
}

TEST_CASE("dimension") {
    CHECK(dimension(reference_state()) == 3);
    const MultiseqState flat{Mat::from_rows(f2, {{1, 0, 1}, {1, 0, 1}, {0, 0, 0}}),
                             Poly(f2, {1, 1, 0, 1})};
    CHECK(dimension(flat) == 1);
    const MultiseqState m3{Mat::from_rows(f2, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}),
                           Poly(f2, {1, 1, 0, 1})};
    CHECK(dimension(m3) == 3);
}

TEST_CASE("rank and column span are shift invariant") {
    std::mt19937_64 gen(41);
    for (uint32_t q : {2u, 3u}) {
        const PrimeField f(q);
        const Poly p = find_primitive(f, 4);
        for (int trial = 0; trial < 20; ++trial) {
            Mat state(f, 3, 4);
            do {
                for (size_t i = 0; i < 3; ++i) {
                    for (size_t j = 0; j < 4; ++j) state.set(i, j, static_cast<uint32_t>(gen() % q));
                }
            } while (state.is_zero());
            const MultiseqState s{state, p};
            for (int64_t k : {1, 2, 5, -3}) {
                const MultiseqState t = step(s, k);
                CHECK(dimension(t) == dimension(s));
                CHECK(colspan_contains(s.state(), t.state()));
                CHECK(colspan_contains(t.state(), s.state()));
            }
        }
    }
}

TEST_CASE("extension state") {
    const MultiseqState s = reference_state();
    CHECK(extension_state(s, RVector{{1, 1, 1}}) == s.state());

    const Mat ext = extension_state(s, RVector{{2, 2, 2}});
    CHECK(ext.rows() == 6);
    CHECK(rank(ext) == 6);
    // rows come grouped by component: x_i then x_i A
    for (size_t i = 0; i < 3; ++i) {
        CHECK(ext.row(2 * i) == s.state().row(i));
        CHECK(ext.row(2 * i + 1) == row_times(s.state().row(i), s.companion()));
    }

    // sigma W_1 = W_2 duplicates a row in the (2,1)-extension
    const Poly p2{f2, {1, 1, 1}};
    const Mat a2 = companion_matrix(p2);
    const std::vector<uint32_t> x = {0, 1};
    const MultiseqState dup{Mat::from_rows(f2, {x, row_times(x, a2)}), p2};
    const Mat dup_ext = extension_state(dup, RVector{{2, 1}});
    CHECK(dup_ext.row(1) == dup_ext.row(2));
    CHECK(rank(dup_ext) < 3);

    CHECK_THROWS_AS(extension_state(s, RVector{{1, 1}}), ShapeMismatch);
}

TEST_CASE("extension dimension") {
    const MultiseqState s = reference_state();
    CHECK(extension_dimension(s, RVector{{2, 2, 2}}) == 6);
    CHECK(extension_dimension(s, RVector{{1, 1, 1}}) == dimension(s));
    // r > n forces deficiency: only n columns available
    const MultiseqState m3{Mat::from_rows(f2, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}),
                           Poly(f2, {1, 1, 0, 1})};
    CHECK(extension_dimension(m3, RVector{{2, 2, 2}}) == 3);
}

TEST_CASE("extension dimension is shift invariant") {
    const MultiseqState s = reference_state();
    for (int64_t k = 1; k < 63; k += 7) {
        CHECK(extension_dimension(step(s, k), RVector{{2, 2, 2}}) == 6);
    }
}

TEST_CASE("minimal polynomial oracle") {
    CHECK(minimal_poly_oracle(f2, std::vector<uint32_t>(10, 0)) == Poly::one(f2));
    CHECK(minimal_poly_oracle(f2, std::vector<uint32_t>(8, 1)) == Poly(f2, {1, 1}));  // s-1
    const PrimeField f3(3);
    CHECK(minimal_poly_oracle(f3, std::vector<uint32_t>(8, 1)) == Poly(f3, {2, 1}));

    // component 1 of the reference multisequence, run forward by the LRR
    const Poly p6{f2, {1, 1, 0, 0, 0, 0, 1}};
    const auto samples = lrr_samples(p6, {0, 0, 0, 0, 0, 1}, 12);
    CHECK(samples == std::vector<uint32_t>{0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1});
    CHECK(minimal_poly_oracle(f2, samples) == p6);
}

TEST_CASE("nonzero components of a primitive multisequence share its minimal polynomial") {
    std::mt19937_64 gen(43);
    for (uint32_t q : {2u, 3u}) {
        const PrimeField f(q);
        const Poly p = find_primitive(f, 5);
        for (int trial = 0; trial < 10; ++trial) {
            Mat state(f, 2, 5);
            do {
                for (size_t i = 0; i < 2; ++i) {
                    for (size_t j = 0; j < 5; ++j) state.set(i, j, static_cast<uint32_t>(gen() % q));
                }
            } while (state.is_zero());
            for (size_t i = 0; i < 2; ++i) {
                std::vector<uint32_t> init = state.row(i);
                bool zero = true;
                for (uint32_t v : init) zero &= (v == 0);
                if (zero) continue;
                CHECK(minimal_poly_oracle(f, lrr_samples(p, init, 10)) == p);
            }
        }
    }
}

TEST_CASE("canonical state") {
    const Poly p2{f2, {1, 1, 1}};
    const MultiseqState a{Mat::from_rows(f2, {{0, 1}}), p2};
    const MultiseqState b{Mat::from_rows(f2, {{1, 1}}), p2};
    const MultiseqState c{Mat::from_rows(f2, {{1, 0}}), p2};
    for (const auto& s : {a, b, c}) {
        CHECK(canonical_state(s).state() == Mat::from_rows(f2, {{0, 1}}));
    }

    const MultiseqState s = reference_state();
    CHECK(canonical_state(canonical_state(s)) == canonical_state(s));
    CHECK(canonical_state(step(s, 5)) == canonical_state(s));
    CHECK(canonical_state(step(s, 62)) == canonical_state(s));

    // distinct orbits stay distinct: 15 nonzero 1x4 states over F_2 fall into
    // one orbit of the primitive companion, so all are equivalent
    const Poly p4{f2, {1, 1, 0, 0, 1}};
    const MultiseqState u{Mat::from_rows(f2, {{1, 0, 0, 0}}), p4};
    for (uint32_t bits = 1; bits < 16; ++bits) {
        const MultiseqState v{
            Mat::from_rows(f2, {{bits & 1u, (bits >> 1) & 1u, (bits >> 2) & 1u, (bits >> 3) & 1u}}),
            p4};
        CHECK(canonical_state(v) == canonical_state(u));
    }
}

TEST_CASE("canonical state rejects oversized orbits") {
    const Poly p21 = find_primitive(f2, 21);
    Mat state(f2, 1, 21);
    state.set(0, 0, 1);
    CHECK_THROWS_AS(canonical_state(MultiseqState{state, p21}), OrbitTooLarge);
}
