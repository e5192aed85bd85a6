#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mext/multiseq.hpp"

namespace mext {

/// A word LFSR with m-input m-output delay blocks: b feedback blocks of size
/// m x m realizing W(k+b) = B_0 W(k) + B_1 W(k+1) + ... + B_{b-1} W(k+b-1).
struct LfsrSpec {
    LfsrSpec(size_t m, std::vector<Mat> blocks);

    size_t m;
    size_t b;
    std::vector<Mat> blocks;  // B_0 ... B_{b-1}

    const PrimeField& field() const noexcept { return blocks.front().field(); }
    size_t n() const noexcept { return m * b; }
};

/// An n x n transition matrix in m-companion form: m x m identity blocks on
/// the block superdiagonal, feedback blocks in the bottom block row, zeros
/// elsewhere above. Acts on column state stacks from the left.
class MCompanion {
public:
    MCompanion(Mat mat, size_t m);  // throws NotMCompanion on bad structure

    const Mat& mat() const noexcept { return mat_; }
    size_t m() const noexcept { return m_; }
    size_t b() const noexcept { return mat_.rows() / m_; }

private:
    Mat mat_;
    size_t m_;
};

/// The n x n stack [M; MA; ...; MA^(b-1)] of a state matrix M with n = m*b.
Mat stacked_state(const MultiseqState& s, size_t b);

/// The m-companion transition matrix of the unique word LFSR generating s:
/// M* A (M*)^-1 for the stacked state M*. Throws ExtensionDeficient when the
/// stacked state is singular (s is not realizable at word width m).
MCompanion transition_from_multiseq(const MultiseqState& s);

/// Slices the bottom m rows of an m-companion matrix into the feedback
/// blocks B_0 ... B_{b-1}.
LfsrSpec feedback_blocks(const MCompanion& a);

/// Assembles the full m-companion transition matrix from the blocks.
MCompanion build_transition(const LfsrSpec& spec);

/// One clock of the LFSR on the stacked column state (W(k); ...; W(k+b-1)),
/// via the word-oriented path: shift up one word, compute the new word from
/// the block recurrence.
std::vector<uint32_t> lfsr_step(const LfsrSpec& spec, const std::vector<uint32_t>& state);

/// Least t > 0 with A_mb^t * state = state, by iteration. Throws ZeroState
/// for the zero state and OrbitTooLarge when q^n - 1 > 2^24.
uint64_t period(const LfsrSpec& spec, const std::vector<uint32_t>& state);

struct LfsrReport {
    bool structure_ok = false;
    Poly charpoly;
    bool charpoly_matches = false;
    bool primitive = false;
    std::optional<uint64_t> period_checked;

    bool passed() const { return structure_ok && charpoly_matches && primitive; }
};

/// Structure, characteristic polynomial, and primitivity checks against a
/// target polynomial; optionally measures the period from a unit state when
/// the orbit is desk-sized.
LfsrReport verify_lfsr(const LfsrSpec& spec, const Poly& p, bool check_period = false);

}  // namespace mext
