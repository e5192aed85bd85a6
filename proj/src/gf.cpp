#include "mext/gf.hpp"

namespace mext {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

PrimeField::PrimeField(uint32_t p) : p_(p) {
    if (p >= (1u << 16) || !is_prime(p)) {
        throw NotPrime("modulus must be a prime in [2, 2^16)");
    }
}

uint32_t PrimeField::inv(uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    return pow(a, p_ - 2);
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const noexcept {
    uint64_t result = 1;
    uint64_t base = a % p_;
    while (e > 0) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<uint32_t>(result);
}

}  // namespace mext
