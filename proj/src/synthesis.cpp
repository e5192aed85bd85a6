#include "mext/synthesis.hpp"

#include <random>

namespace mext {

void PolyLadder::set(Poly p) {
    if (!is_primitive(p)) throw BadLadder("ladder entries must be primitive");
    const size_t degree = static_cast<size_t>(p.degree());
    polys_.erase(degree);
    polys_.emplace(degree, std::move(p));
}

const Poly& PolyLadder::at(size_t degree) const {
    auto it = polys_.find(degree);
    if (it == polys_.end()) {
        throw BadLadder("ladder has no polynomial of degree " + std::to_string(degree));
    }
    return it->second;
}

bool PolyLadder::covers(size_t lo, size_t hi) const {
    for (size_t d = lo; d <= hi; ++d) {
        if (!polys_.count(d)) return false;
    }
    return true;
}

PolyLadder PolyLadder::generate(PrimeField f, size_t lo, size_t hi) {
    PolyLadder ladder;
    for (size_t d = lo; d <= hi; ++d) ladder.set(find_primitive(f, d));
    return ladder;
}

Poly find_f(const std::vector<uint32_t>& x, const Mat& a) {
    const size_t k = a.rows();
    if (x.size() != k) throw ShapeMismatch("row length must match the companion size");
    bool nonzero = false;
    for (uint32_t v : x) nonzero |= (v != 0);
    if (!nonzero) throw ZeroRow();

    // power matrix [x; xA; ...; xA^(k-1)], invertible since A has a primitive
    // minimal polynomial of full degree and x != 0
    Mat powers(a.field(), k, k);
    std::vector<uint32_t> row = x;
    for (size_t i = 0; i < k; ++i) {
        if (i > 0) row = row_times(row, a);
        powers.set_row(i, row);
    }
    std::vector<uint32_t> e(k, 0);
    e[k - 1] = 1;
    return {a.field(), solve_left(powers, e)};
}

MultiseqState realign(const MultiseqState& s, size_t c) {
    if (c < 1 || c > s.m()) throw ShapeMismatch("row index out of range");
    const Poly f = find_f(s.state().row(c - 1), s.companion());
    return {s.state() * poly_apply(f, s.companion()), s.minpoly()};
}

MultiseqState lift(const MultiseqState& s, size_t c, const std::vector<uint32_t>& d,
                   const Poly& p_next) {
    const size_t k = s.n();
    if (c < 1 || c > s.m()) throw ShapeMismatch("row index out of range");
    if (d.size() != s.m() - 1) throw BadChoiceScript("expected m - 1 appended elements");
    if (p_next.degree() != static_cast<int>(k) + 1) throw BadDegree();
    const std::vector<uint32_t> crow = s.state().row(c - 1);
    for (size_t j = 0; j < k; ++j) {
        if (crow[j] != (j + 1 == k ? 1u : 0u)) throw RowNotUnit();
    }

    Mat out(s.field(), s.m(), k + 1);
    size_t di = 0;
    for (size_t i = 0; i < s.m(); ++i) {
        if (i + 1 == c) {
            out.set(i, k, 1);
            continue;
        }
        for (size_t j = 0; j < k; ++j) out.set(i, j, s.state().at(i, j));
        out.set(i, k, d[di++]);
    }
    return {out, p_next};
}

MultiseqState synthesize(const RVector& r, size_t n, const PolyLadder& ladder,
                         const ChoiceScript& choices, bool check_invariants) {
    const size_t m = r.size();
    if (n < r.sum()) throw BadRange("need n >= sum of the extension profile");
    const size_t base = n - r.sum() + m;
    if (!ladder.covers(base, n)) throw BadLadder("ladder must cover degrees n-r+m through n");
    if (choices.initial_state.rows() != m || choices.initial_state.cols() != base) {
        throw BadInitialState("initial state must be m x (n-r+m)");
    }
    if (rank(choices.initial_state) != m) {
        throw BadInitialState("initial state must have full row rank");
    }
    if (choices.appended.size() != r.sum() - m) {
        throw BadChoiceScript("expected r - m appended rows");
    }

    MultiseqState state{choices.initial_state, ladder.at(base)};
    size_t iter = 0;
    for (const auto& [g, c] : backward_traverse(r)) {
        state = lift(realign(state, c), c, choices.appended[iter], ladder.at(base + iter + 1));
        ++iter;
        if (check_invariants) {
            // after incrementing the active coordinate, the current point's
            // extension must have full dimension g + 1
            std::vector<uint32_t> parts = g.parts();
            ++parts[c - 1];
            if (extension_dimension(state, RVector(parts)) != g.sum() + 1) {
                throw Error("synthesis invariant violated");
            }
        }
    }
    return state;
}

ChoiceScript random_choices(PrimeField f, const RVector& r, size_t n, uint64_t seed) {
    if (n < r.sum()) throw BadRange("need n >= sum of the extension profile");
    const size_t m = r.size();
    const size_t base = n - r.sum() + m;
    std::mt19937_64 gen(seed);
    const uint32_t q = f.modulus();
    // gen() % q keeps the stream platform-independent; the bias is irrelevant
    // for test purposes at q < 2^16
    auto draw = [&] { return static_cast<uint32_t>(gen() % q); };

    Mat initial(f, m, base);
    do {
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < base; ++j) initial.set(i, j, draw());
        }
    } while (rank(initial) != m);

    std::vector<std::vector<uint32_t>> appended(r.sum() - m);
    for (auto& row : appended) {
        row.resize(m - 1);
        for (auto& v : row) v = draw();
    }
    return {std::move(initial), std::move(appended)};
}

}  // namespace mext
