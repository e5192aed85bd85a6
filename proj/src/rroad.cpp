#include "mext/rroad.hpp"

namespace mext {

RVector phi(const RVector& g) {
    if (g.all_ones()) throw AtOnes("phi is undefined at the all-ones vector");
    const uint32_t gmax = g.max();
    std::vector<uint32_t> parts = g.parts();
    for (auto& p : parts) {
        if (p == gmax) {
            --p;
            break;
        }
    }
    return RVector(parts);
}

std::vector<RVector> road(const RVector& r) {
    std::vector<RVector> out;
    out.reserve(r.sum() - r.size() + 1);
    out.push_back(r);
    while (!out.back().all_ones()) out.push_back(phi(out.back()));
    return out;
}

namespace {

bool on_road(const RVector& g, const RVector& r) {
    if (g.size() != r.size()) return false;
    RVector cur = r;
    while (true) {
        if (cur == g) return true;
        if (cur.all_ones()) return false;
        cur = phi(cur);
    }
}

size_t active_coordinate_unchecked(const RVector& g, const RVector& r) {
    const uint32_t gmax = g.max();
    const size_t m = g.size();
    // three linear passes, each O(m)
    for (size_t c = m; c-- > 0;) {
        if (g[c] + 1 == gmax && g[c] < r[c]) return c + 1;
    }
    for (size_t c = m; c-- > 0;) {
        if (g[c] == gmax && g[c] < r[c]) return c + 1;
    }
    throw NotOnRoad("no active coordinate exists");
}

}  // namespace

size_t active_coordinate(const RVector& g, const RVector& r, bool validate) {
    if (g.size() != r.size()) throw ShapeMismatch("profile lengths differ");
    if (g == r) throw AlreadyAtR();
    if (validate && !on_road(g, r)) throw NotOnRoad();
    return active_coordinate_unchecked(g, r);
}

std::vector<std::pair<RVector, size_t>> backward_traverse(const RVector& r) {
    std::vector<std::pair<RVector, size_t>> out;
    out.reserve(r.sum() - r.size());
    std::vector<uint32_t> parts(r.size(), 1);
    RVector g{parts};
    while (!(g == r)) {
        const size_t c = active_coordinate_unchecked(g, r);
        out.emplace_back(g, c);
        ++parts[c - 1];
        g = RVector(parts);
    }
    return out;
}

}  // namespace mext
