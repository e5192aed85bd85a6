#include "mext/multiseq.hpp"

#include <algorithm>

namespace mext {

RVector::RVector(std::vector<uint32_t> parts) : parts_(std::move(parts)), sum_(0) {
    if (parts_.empty()) throw BadRange("extension profile must have at least one part");
    for (uint32_t p : parts_) {
        if (p < 1) throw BadRange("extension profile parts must be positive");
        sum_ += p;
    }
}

bool RVector::all_ones() const {
    return std::all_of(parts_.begin(), parts_.end(), [](uint32_t p) { return p == 1; });
}

uint32_t RVector::max() const {
    return *std::max_element(parts_.begin(), parts_.end());
}

MultiseqState::MultiseqState(Mat state, Poly minpoly)
    : state_(std::move(state)),
      minpoly_(std::move(minpoly)),
      companion_(companion_matrix(minpoly_)) {
    if (!(state_.field() == minpoly_.field())) throw FieldMismatch();
    if (!is_primitive(minpoly_)) throw NotPrimitive("minimal polynomial must be primitive");
    if (state_.cols() != static_cast<size_t>(minpoly_.degree())) {
        throw ShapeMismatch("state columns must equal the minimal polynomial degree");
    }
    if (state_.rows() == 0) throw ShapeMismatch("state must have at least one row");
    if (state_.is_zero()) throw ZeroState("the zero state has minimal polynomial 1");
}

MultiseqState step(const MultiseqState& s, int64_t k) {
    if (k == 0) return s;
    return {s.state() * matpow_signed(s.companion(), k), s.minpoly()};
}

size_t dimension(const MultiseqState& s) { return rank(s.state()); }

Mat extension_state(const MultiseqState& s, const RVector& r) {
    if (r.size() != s.m()) throw ShapeMismatch("profile length must equal the component count");
    Mat out(s.field(), r.sum(), s.n());
    size_t out_row = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        std::vector<uint32_t> x = s.state().row(i);
        for (uint32_t j = 0; j < r[i]; ++j) {
            if (j > 0) x = row_times(x, s.companion());
            out.set_row(out_row++, x);
        }
    }
    return out;
}

size_t extension_dimension(const MultiseqState& s, const RVector& r) {
    return rank(extension_state(s, r));
}

Poly minimal_poly_oracle(PrimeField f, const std::vector<uint32_t>& samples) {
    // Berlekamp-Massey. C is the connection polynomial with C(0) = 1; the
    // minimal polynomial is its degree-L reciprocal.
    const size_t n = samples.size();
    std::vector<uint32_t> c = {1};
    std::vector<uint32_t> b = {1};
    size_t l = 0;
    size_t m = 1;
    uint32_t bb = 1;
    for (size_t i = 0; i < n; ++i) {
        uint32_t d = f.reduce(samples[i]);
        for (size_t j = 1; j <= l && j < c.size(); ++j) {
            d = f.add(d, f.mul(c[j], f.reduce(samples[i - j])));
        }
        if (d == 0) {
            ++m;
        } else if (2 * l <= i) {
            std::vector<uint32_t> t = c;
            const uint32_t coef = f.mul(d, f.inv(bb));
            if (c.size() < b.size() + m) c.resize(b.size() + m, 0);
            for (size_t j = 0; j < b.size(); ++j) {
                c[j + m] = f.sub(c[j + m], f.mul(coef, b[j]));
            }
            l = i + 1 - l;
            b = std::move(t);
            bb = d;
            m = 1;
        } else {
            const uint32_t coef = f.mul(d, f.inv(bb));
            if (c.size() < b.size() + m) c.resize(b.size() + m, 0);
            for (size_t j = 0; j < b.size(); ++j) {
                c[j + m] = f.sub(c[j + m], f.mul(coef, b[j]));
            }
            ++m;
        }
    }
    std::vector<uint32_t> mp(l + 1, 0);
    for (size_t j = 0; j < c.size() && j <= l; ++j) mp[l - j] = c[j];
    return {f, std::move(mp)};
}

MultiseqState canonical_state(const MultiseqState& s) {
    const uint64_t q = s.field().modulus();
    unsigned __int128 orbit = 1;
    for (size_t i = 0; i < s.n(); ++i) {
        orbit *= q;
        if (orbit - 1 > (1u << 20)) throw OrbitTooLarge("shift orbit exceeds 2^20 states");
    }
    const uint64_t period = static_cast<uint64_t>(orbit) - 1;
    Mat best = s.state();
    Mat cur = s.state();
    for (uint64_t k = 1; k < period; ++k) {
        cur = cur * s.companion();
        if (cur.data() < best.data()) best = cur;
    }
    return {best, s.minpoly()};
}

}  // namespace mext
