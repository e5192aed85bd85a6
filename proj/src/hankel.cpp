#include "mext/hankel.hpp"

namespace mext {

HankelVec::HankelVec(PrimeField field_, std::vector<uint32_t> entries)
    : field(field_), a(std::move(entries)) {
    if (a.empty() || a.size() % 2 == 0) {
        throw EvenLength("Hankel vector needs odd length 2n-1");
    }
    for (auto& v : a) v %= field.modulus();
}

bool HankelVec::is_zero() const {
    for (uint32_t v : a) {
        if (v != 0) return false;
    }
    return true;
}

Mat hankel_from_vector(const HankelVec& a) {
    const size_t n = a.n();
    Mat h(a.field, n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) h.set(i, j, a.a[i + j]);
    }
    return h;
}

bool fullrank_via_extension(const HankelVec& a, const Poly& p) {
    const size_t n = a.n();
    if (p.degree() != static_cast<int>(a.a.size()) || !is_primitive(p)) {
        throw BadDegree("need a primitive polynomial of degree 2n-1");
    }
    if (a.is_zero()) return false;  // H = 0; no valid two-row state exists
    if (n == 1) return a.a[0] != 0;  // 1 x 1 case: no (0, 1)-profile, rank directly

    Mat state(a.field, 2, a.a.size());
    state.set(0, a.a.size() - 1, 1);
    state.set_row(1, a.a);
    const MultiseqState s{state, p};
    const RVector profile{{static_cast<uint32_t>(n - 1), static_cast<uint32_t>(n)}};
    return extension_dimension(s, profile) == a.a.size();
}

BigUint count_fullrank_hankel(uint32_t q, size_t n) {
    if (n < 1) throw BadRange("need n >= 1");
    return BigUint::power(q, 2 * n - 1) - BigUint::power(q, 2 * n - 2);
}

uint64_t hankel_space(PrimeField f, size_t n) {
    if (n < 1) throw BadRange("need n >= 1");
    const uint64_t q = f.modulus();
    unsigned __int128 space = 1;
    for (size_t i = 0; i < 2 * n - 1; ++i) {
        space *= q;
        if (space > (uint64_t(1) << 22)) throw TooLarge("Hankel space exceeds 2^22");
    }
    return static_cast<uint64_t>(space);
}

uint64_t enumerate_fullrank_hankel_range(PrimeField f, size_t n, uint64_t begin, uint64_t end) {
    const uint32_t q = f.modulus();
    std::vector<uint32_t> entries(2 * n - 1, 0);
    uint64_t count = 0;
    for (uint64_t idx = begin; idx < end; ++idx) {
        uint64_t v = idx;
        for (auto& e : entries) {
            e = static_cast<uint32_t>(v % q);
            v /= q;
        }
        if (rank(hankel_from_vector(HankelVec(f, entries))) == n) ++count;
    }
    return count;
}

uint64_t enumerate_fullrank_hankel(PrimeField f, size_t n) {
    return enumerate_fullrank_hankel_range(f, n, 0, hankel_space(f, n));
}

}  // namespace mext
