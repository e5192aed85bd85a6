#pragma once

#include <cstdint>
#include <map>

#include "mext/rroad.hpp"

namespace mext {

/// A series of primitive polynomials keyed by degree; every entry is
/// validated primitive on insertion.
class PolyLadder {
public:
    void set(Poly p);                       // throws BadLadder if not primitive
    const Poly& at(size_t degree) const;    // throws BadLadder if missing
    bool covers(size_t lo, size_t hi) const;
    const std::map<size_t, Poly>& polys() const noexcept { return polys_; }

    /// find_primitive for every degree in [lo, hi].
    static PolyLadder generate(PrimeField f, size_t lo, size_t hi);

private:
    std::map<size_t, Poly> polys_;
};

/// Everything free in a synthesis run: the full-row-rank initial state and,
/// for each of the r - m iterations, the m - 1 appended elements d_i
/// (i != active coordinate, ascending i).
struct ChoiceScript {
    Mat initial_state;
    std::vector<std::vector<uint32_t>> appended;
};

/// A polynomial f of degree < k with x * f(A) = e_k (last unit row vector),
/// for A the k x k companion matrix of a primitive polynomial and x != 0.
/// Builds the power matrix [x; xA; ...; xA^(k-1)] and solves one left system.
Poly find_f(const std::vector<uint32_t>& x, const Mat& a);

/// A state of the same multisequence whose c-th row (1-based) is the last
/// unit vector, obtained by right-multiplying with f(A).
MultiseqState realign(const MultiseqState& s, size_t c);

/// Degree-raising step: every row i != c gains the trailing element d_i, row
/// c becomes the last unit vector of the longer length, and the minimal
/// polynomial moves to p_next (degree + 1, primitive). Requires the c-th row
/// to already be the last unit vector (realign first).
MultiseqState lift(const MultiseqState& s, size_t c, const std::vector<uint32_t>& d,
                   const Poly& p_next);

/// Generates a multisequence whose R-extension has maximum dimension r, by
/// walking the road backwards from (1,...,1) to R with one (realign, lift)
/// pair per step. With check_invariants set, verifies after each step that
/// the current G-extension has full dimension.
MultiseqState synthesize(const RVector& r, size_t n, const PolyLadder& ladder,
                         const ChoiceScript& choices, bool check_invariants = false);

/// Deterministic choice material for a given seed: a uniformly drawn
/// full-row-rank initial state plus uniform appended elements.
ChoiceScript random_choices(PrimeField f, const RVector& r, size_t n, uint64_t seed);

}  // namespace mext
