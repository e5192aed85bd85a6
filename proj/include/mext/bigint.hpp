#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mext/errors.hpp"

namespace mext {

/// Unsigned arbitrary-precision integer, base-2^32 limbs little-endian.
/// Counting formulas outgrow 64 bits quickly (q^n products); this covers the
/// handful of exact operations they need.
class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v);

    static BigUint power(uint64_t base, uint64_t exp);
    BigUint pow(uint64_t exp) const;

    bool is_zero() const noexcept { return limbs_.empty(); }
    bool fits_uint64() const noexcept { return limbs_.size() <= 2; }
    uint64_t to_uint64() const;  // throws TooLarge when it does not fit
    std::string to_string() const;

    friend BigUint operator+(const BigUint& a, const BigUint& b);
    friend BigUint operator-(const BigUint& a, const BigUint& b);  // requires a >= b
    friend BigUint operator*(const BigUint& a, const BigUint& b);
    /// Quotient and remainder; throws DivisionByZero.
    static std::pair<BigUint, BigUint> divmod(const BigUint& a, const BigUint& b);
    friend BigUint operator/(const BigUint& a, const BigUint& b) { return divmod(a, b).first; }
    friend BigUint operator%(const BigUint& a, const BigUint& b) { return divmod(a, b).second; }

    std::strong_ordering operator<=>(const BigUint& other) const;
    bool operator==(const BigUint& other) const = default;

private:
    void trim();
    size_t bits() const;
    void shift_left_one();
    bool sub_in_place_if_ge(const BigUint& b);

    std::vector<uint32_t> limbs_;
};

/// Exact binomial coefficient.
BigUint binomial(uint64_t n, uint64_t k);

}  // namespace mext
