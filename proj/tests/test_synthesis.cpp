#include <doctest.h>

#include "mext/synthesis.hpp"

using namespace mext;

namespace {

const PrimeField f2(2);

PolyLadder reference_ladder() {
    PolyLadder ladder;
    ladder.set(Poly(f2, {1, 1, 0, 1}));              // s^3+s+1
    ladder.set(Poly(f2, {1, 1, 0, 0, 1}));           // s^4+s+1
    ladder.set(Poly(f2, {1, 0, 1, 0, 0, 1}));        // s^5+s^2+1
    ladder.set(Poly(f2, {1, 1, 0, 0, 0, 0, 1}));     // s^6+s+1
    return ladder;
}

const Mat kM3 = Mat::from_rows(f2, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});

ChoiceScript reference_script() { return {kM3, {{1, 0}, {0, 1}, {0, 1}}}; }

}  // namespace

TEST_CASE("poly ladder") {
    PolyLadder ladder = reference_ladder();
    CHECK(ladder.covers(3, 6));
    CHECK_FALSE(ladder.covers(2, 6));
    CHECK(ladder.at(4) == Poly(f2, {1, 1, 0, 0, 1}));
    CHECK_THROWS_AS(ladder.at(7), BadLadder);
    CHECK_THROWS_AS(ladder.set(Poly(f2, {1, 1, 1, 1, 1})), BadLadder);  // not primitive

    const PolyLadder gen = PolyLadder::generate(f2, 3, 6);
    CHECK(gen.covers(3, 6));
    CHECK(gen.at(4) == find_primitive(f2, 4));
}

TEST_CASE("find_f") {
    const Mat a4 = companion_matrix(Poly(f2, {1, 1, 0, 0, 1}));
    CHECK(find_f({0, 0, 0, 1}, a4) == Poly::one(f2));
    // the first unit row maps to e_4 in one shift (constant term of p is 1)
    CHECK(find_f({1, 0, 0, 0}, a4) == Poly::monomial(f2, 1));

    const Poly f = find_f({0, 1, 1, 0}, a4);
    CHECK(row_times({0, 1, 1, 0}, poly_apply(f, a4)) == std::vector<uint32_t>{0, 0, 0, 1});

    CHECK_THROWS_AS(find_f({0, 0, 0, 0}, a4), ZeroRow);

    // f is reproduced for every row of a full orbit
    std::vector<uint32_t> x = {1, 0, 1, 1};
    for (int k = 0; k < 15; ++k) {
        const Poly fk = find_f(x, a4);
        CHECK(row_times(x, poly_apply(fk, a4)) == std::vector<uint32_t>{0, 0, 0, 1});
        x = row_times(x, a4);
    }
}

TEST_CASE("realign reproduces the reference iterations") {
    const PolyLadder ladder = reference_ladder();

    const MultiseqState s3{kM3, ladder.at(3)};
    CHECK(realign(s3, 3).state() == kM3);  // third row is already e_3

    const MultiseqState it1{Mat::from_rows(f2, {{1, 1, 1, 1}, {0, 1, 1, 0}, {0, 0, 0, 1}}),
                            ladder.at(4)};
    CHECK(realign(it1, 2).state() ==
          Mat::from_rows(f2, {{1, 1, 0, 1}, {0, 0, 0, 1}, {0, 1, 1, 1}}));

    const MultiseqState it2{Mat::from_rows(f2, {{1, 1, 0, 1, 0}, {0, 0, 0, 0, 1}, {0, 1, 1, 1, 1}}),
                            ladder.at(5)};
    CHECK(realign(it2, 1).state() ==
          Mat::from_rows(f2, {{0, 0, 0, 0, 1}, {0, 1, 0, 1, 1}, {0, 0, 0, 1, 1}}));
}

TEST_CASE("lift reproduces the reference iterations") {
    const PolyLadder ladder = reference_ladder();

    const MultiseqState s3{kM3, ladder.at(3)};
    CHECK(lift(s3, 3, {1, 0}, ladder.at(4)).state() ==
          Mat::from_rows(f2, {{1, 1, 1, 1}, {0, 1, 1, 0}, {0, 0, 0, 1}}));

    const MultiseqState m4{Mat::from_rows(f2, {{1, 1, 0, 1}, {0, 0, 0, 1}, {0, 1, 1, 1}}),
                           ladder.at(4)};
    CHECK(lift(m4, 2, {0, 1}, ladder.at(5)).state() ==
          Mat::from_rows(f2, {{1, 1, 0, 1, 0}, {0, 0, 0, 0, 1}, {0, 1, 1, 1, 1}}));

    const MultiseqState m5{Mat::from_rows(f2, {{0, 0, 0, 0, 1}, {0, 1, 0, 1, 1}, {0, 0, 0, 1, 1}}),
                           ladder.at(5)};
    CHECK(lift(m5, 1, {0, 1}, ladder.at(6)).state() ==
          Mat::from_rows(f2, {{0, 0, 0, 0, 0, 1}, {0, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 1}}));

    // row 1 of m4 is not a unit vector
    CHECK_THROWS_AS(lift(m4, 1, {0, 1}, ladder.at(5)), RowNotUnit);
    // wrong target degree
    CHECK_THROWS_AS(lift(m4, 2, {0, 1}, ladder.at(6)), BadDegree);
}

TEST_CASE("synthesize end to end on the reference script") {
    const MultiseqState result =
        synthesize(RVector{{2, 2, 2}}, 6, reference_ladder(), reference_script(), true);
    CHECK(result.state() ==
          Mat::from_rows(f2, {{0, 0, 0, 0, 0, 1}, {0, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 1}}));
    CHECK(result.minpoly() == Poly(f2, {1, 1, 0, 0, 0, 0, 1}));
    CHECK(extension_dimension(result, RVector{{2, 2, 2}}) == 6);
}

TEST_CASE("synthesize with an all-ones profile returns the initial state") {
    PolyLadder ladder;
    ladder.set(Poly(f2, {1, 1, 0, 1}));
    const MultiseqState result = synthesize(RVector{{1, 1, 1}}, 3, ladder, {kM3, {}});
    CHECK(result.state() == kM3);
    CHECK(result.minpoly() == ladder.at(3));
}

TEST_CASE("synthesize input validation") {
    const PolyLadder ladder = reference_ladder();
    const RVector r{{2, 2, 2}};
    CHECK_THROWS_AS(synthesize(r, 2, ladder, reference_script()), BadRange);
    CHECK_THROWS_AS(synthesize(RVector{{2, 2, 2, 2}}, 8, ladder, reference_script()), BadLadder);

    ChoiceScript bad_shape = reference_script();
    bad_shape.initial_state = Mat::identity(f2, 2);
    CHECK_THROWS_AS(synthesize(r, 6, ladder, bad_shape), BadInitialState);

    ChoiceScript rank_deficient = reference_script();
    rank_deficient.initial_state = Mat::from_rows(f2, {{1, 1, 1}, {1, 1, 1}, {0, 0, 1}});
    CHECK_THROWS_AS(synthesize(r, 6, ladder, rank_deficient), BadInitialState);

    ChoiceScript short_script = reference_script();
    short_script.appended.pop_back();
    CHECK_THROWS_AS(synthesize(r, 6, ladder, short_script), BadChoiceScript);
}

TEST_CASE("synthesized extensions reach full dimension for random choices") {
    std::vector<std::tuple<uint32_t, std::vector<uint32_t>, size_t>> grid = {
        {2, {2, 1}, 3}, {2, {2, 1}, 4}, {2, {3, 2}, 6}, {2, {2, 2, 2}, 6},
        {2, {4, 2}, 8},  {2, {3, 3, 2}, 9}, {3, {2, 1}, 3}, {3, {2, 2}, 5},
    };
    uint64_t seed = 1;
    for (const auto& [q, parts, n] : grid) {
        const PrimeField f(q);
        const RVector r{parts};
        const PolyLadder ladder = PolyLadder::generate(f, n - r.sum() + r.size(), n);
        for (int trial = 0; trial < 5; ++trial) {
            const ChoiceScript choices = random_choices(f, r, n, seed++);
            const MultiseqState result = synthesize(r, n, ladder, choices, true);
            CHECK(extension_dimension(result, r) == r.sum());
            CHECK(result.minpoly() == ladder.at(n));
        }
    }
}

TEST_CASE("random_choices is deterministic in the seed") {
    const RVector r{{2, 2}};
    const ChoiceScript a = random_choices(f2, r, 5, 99);
    const ChoiceScript b = random_choices(f2, r, 5, 99);
    CHECK(a.initial_state == b.initial_state);
    CHECK(a.appended == b.appended);
    CHECK(rank(a.initial_state) == 2);
    CHECK(a.appended.size() == 2);

    const ChoiceScript c = random_choices(f2, r, 5, 100);
    CHECK((!(a.initial_state == c.initial_state) || a.appended != c.appended));
}

TEST_CASE("distinct appended choices give distinct states") {
    // one lift step at m = 2: every full-row-rank initial state, both choices
    PolyLadder ladder;
    ladder.set(Poly(f2, {1, 1, 1}));     // s^2+s+1
    ladder.set(Poly(f2, {1, 1, 0, 1}));  // s^3+s+1
    const RVector r{{2, 1}};
    for (uint32_t bits = 0; bits < 16; ++bits) {
        const Mat init = Mat::from_rows(
            f2, {{bits & 1u, (bits >> 1) & 1u}, {(bits >> 2) & 1u, (bits >> 3) & 1u}});
        if (rank(init) != 2) continue;
        const MultiseqState out0 = synthesize(r, 3, ladder, {init, {{0}}});
        const MultiseqState out1 = synthesize(r, 3, ladder, {init, {{1}}});
        CHECK(!(out0.state() == out1.state()));
    }
}

TEST_CASE("iteration count is exactly r - m") {
    for (const auto& parts : {std::vector<uint32_t>{2, 1}, {3, 2}, {2, 2, 2}, {1, 1}}) {
        const RVector r{parts};
        CHECK(backward_traverse(r).size() == r.sum() - r.size());
        CHECK(road(r).size() == r.sum() - r.size() + 1);
    }
}
