#include "mext/lfsr.hpp"

namespace mext {

LfsrSpec::LfsrSpec(size_t m_, std::vector<Mat> blocks_)
    : m(m_), b(blocks_.size()), blocks(std::move(blocks_)) {
    if (m == 0 || blocks.empty()) throw ShapeMismatch("need m >= 1 and at least one block");
    for (const auto& blk : blocks) {
        if (blk.rows() != m || blk.cols() != m) throw ShapeMismatch("feedback blocks must be m x m");
        if (!(blk.field() == blocks.front().field())) throw FieldMismatch();
    }
}

MCompanion::MCompanion(Mat mat, size_t m) : mat_(std::move(mat)), m_(m) {
    const size_t n = mat_.rows();
    if (m == 0 || n == 0 || mat_.cols() != n || n % m != 0) {
        throw NotMCompanion("transition matrix must be n x n with m | n");
    }
    // top (b-1)m rows: exactly the block shift structure
    for (size_t i = 0; i + m < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const uint32_t want = (j == i + m) ? 1u : 0u;
            if (mat_.at(i, j) != want) throw NotMCompanion("bad block shift structure");
        }
    }
}

Mat stacked_state(const MultiseqState& s, size_t b) {
    if (s.n() != s.m() * b) throw ShapeMismatch("need n = m * b");
    Mat out(s.field(), s.n(), s.n());
    Mat block = s.state();
    for (size_t t = 0; t < b; ++t) {
        if (t > 0) block = block * s.companion();
        for (size_t i = 0; i < s.m(); ++i) out.set_row(t * s.m() + i, block.row(i));
    }
    return out;
}

MCompanion transition_from_multiseq(const MultiseqState& s) {
    if (s.n() % s.m() != 0) throw ShapeMismatch("word width must divide the degree");
    const size_t b = s.n() / s.m();
    const Mat mstar = stacked_state(s, b);
    Mat mstar_inv(s.field(), 0, 0);
    try {
        mstar_inv = inverse(mstar);
    } catch (const Singular&) {
        throw ExtensionDeficient("stacked state is singular; not LFSR-realizable at this width");
    }
    return {mstar * s.companion() * mstar_inv, s.m()};
}

LfsrSpec feedback_blocks(const MCompanion& a) {
    const size_t m = a.m();
    const size_t b = a.b();
    const size_t n = a.mat().rows();
    std::vector<Mat> blocks;
    blocks.reserve(b);
    for (size_t t = 0; t < b; ++t) {
        Mat blk(a.mat().field(), m, m);
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < m; ++j) blk.set(i, j, a.mat().at(n - m + i, t * m + j));
        }
        blocks.push_back(std::move(blk));
    }
    return {m, std::move(blocks)};
}

MCompanion build_transition(const LfsrSpec& spec) {
    const size_t n = spec.n();
    Mat a(spec.field(), n, n);
    for (size_t i = 0; i + spec.m < n; ++i) a.set(i, i + spec.m, 1);
    for (size_t t = 0; t < spec.b; ++t) {
        for (size_t i = 0; i < spec.m; ++i) {
            for (size_t j = 0; j < spec.m; ++j) {
                a.set(n - spec.m + i, t * spec.m + j, spec.blocks[t].at(i, j));
            }
        }
    }
    return {std::move(a), spec.m};
}

std::vector<uint32_t> lfsr_step(const LfsrSpec& spec, const std::vector<uint32_t>& state) {
    const size_t n = spec.n();
    if (state.size() != n) throw ShapeMismatch("state length must be m * b");
    const PrimeField& f = spec.field();
    std::vector<uint32_t> next(n);
    for (size_t i = 0; i + spec.m < n; ++i) next[i] = f.reduce(state[i + spec.m]);
    for (size_t i = 0; i < spec.m; ++i) {
        uint32_t acc = 0;
        for (size_t t = 0; t < spec.b; ++t) {
            for (size_t j = 0; j < spec.m; ++j) {
                acc = f.add(acc, f.mul(spec.blocks[t].at(i, j), f.reduce(state[t * spec.m + j])));
            }
        }
        next[n - spec.m + i] = acc;
    }
    return next;
}

uint64_t period(const LfsrSpec& spec, const std::vector<uint32_t>& state) {
    bool nonzero = false;
    for (uint32_t v : state) nonzero |= (v != 0);
    if (!nonzero) throw ZeroState();
    const uint64_t q = spec.field().modulus();
    unsigned __int128 space = 1;
    for (size_t i = 0; i < spec.n(); ++i) {
        space *= q;
        if (space - 1 > (1u << 24)) throw OrbitTooLarge("state space exceeds 2^24");
    }
    std::vector<uint32_t> cur = state;
    for (uint64_t t = 1; t <= static_cast<uint64_t>(space); ++t) {
        cur = lfsr_step(spec, cur);
        if (cur == state) return t;
    }
    throw Error("state does not recur; transition matrix is singular");
}

LfsrReport verify_lfsr(const LfsrSpec& spec, const Poly& p, bool check_period) {
    LfsrReport report{.structure_ok = false,
                      .charpoly = Poly(spec.field()),
                      .charpoly_matches = false,
                      .primitive = false,
                      .period_checked = std::nullopt};
    const MCompanion a = build_transition(spec);
    report.structure_ok = true;
    report.charpoly = charpoly(a.mat());
    report.charpoly_matches = (report.charpoly == p);
    report.primitive = is_primitive(report.charpoly);
    if (check_period) {
        std::vector<uint32_t> unit(spec.n(), 0);
        unit[0] = 1;
        report.period_checked = period(spec, unit);
    }
    return report;
}

}  // namespace mext
