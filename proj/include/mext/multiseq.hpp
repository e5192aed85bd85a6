#pragma once

#include <cstdint>
#include <vector>

#include "mext/mat.hpp"

namespace mext {

/// An extension profile R = (r_1, ..., r_m) of positive integers; also used
/// for road points G. Positions are reported 1-based throughout to match the
/// usual indexing convention for these vectors.
class RVector {
public:
    explicit RVector(std::vector<uint32_t> parts);

    size_t size() const noexcept { return parts_.size(); }  // m
    uint32_t operator[](size_t i) const noexcept { return parts_[i]; }  // 0-based access
    uint32_t sum() const noexcept { return sum_; }  // r
    const std::vector<uint32_t>& parts() const noexcept { return parts_; }
    bool all_ones() const;
    uint32_t max() const;

    bool operator==(const RVector& other) const { return parts_ == other.parts_; }

private:
    std::vector<uint32_t> parts_;
    uint32_t sum_;
};

/// A multisequence, represented by one of its matrix states together with its
/// primitive minimal polynomial. The state is an m x n matrix whose rows are
/// the component state vectors; the companion matrix of the minimal
/// polynomial is cached for stepping.
class MultiseqState {
public:
    MultiseqState(Mat state, Poly minpoly);

    const Mat& state() const noexcept { return state_; }
    const Poly& minpoly() const noexcept { return minpoly_; }
    const Mat& companion() const noexcept { return companion_; }
    size_t m() const noexcept { return state_.rows(); }
    size_t n() const noexcept { return state_.cols(); }
    const PrimeField& field() const noexcept { return state_.field(); }

    bool operator==(const MultiseqState& other) const {
        return state_ == other.state_ && minpoly_ == other.minpoly_;
    }

private:
    Mat state_;
    Poly minpoly_;
    Mat companion_;
};

/// Shift by k: state -> state * A^k. k may be negative (A is invertible).
MultiseqState step(const MultiseqState& s, int64_t k);

/// Rank of the matrix state; shift-invariant.
size_t dimension(const MultiseqState& s);

/// The r x n matrix state of the R-extension, grouped by component: for each
/// component i the rows x_i, x_i A, ..., x_i A^(r_i - 1) in order.
Mat extension_state(const MultiseqState& s, const RVector& r);

size_t extension_dimension(const MultiseqState& s, const RVector& r);

/// Berlekamp-Massey: minimal polynomial of a scalar sample sequence. Needs at
/// least 2n samples where n is the true linear complexity; with fewer the
/// result may be a proper divisor. Used as a cross-check oracle.
Poly minimal_poly_oracle(PrimeField f, const std::vector<uint32_t>& samples);

/// The lexicographically least matrix state in the shift orbit
/// {state * A^k : 0 <= k < q^n - 1} (row-major element order). Two states
/// represent the same multisequence iff their canonical states are equal.
/// Throws OrbitTooLarge when q^n - 1 > 2^20.
MultiseqState canonical_state(const MultiseqState& s);

}  // namespace mext
