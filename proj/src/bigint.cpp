#include "mext/bigint.hpp"

#include <algorithm>
#include <compare>

namespace mext {

BigUint::BigUint(uint64_t v) {
    if (v) limbs_.push_back(static_cast<uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

uint64_t BigUint::to_uint64() const {
    if (!fits_uint64()) throw TooLarge("value exceeds 64 bits");
    uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

std::strong_ordering BigUint::operator<=>(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size()) {
        return limbs_.size() <=> other.limbs_.size();
    }
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] <=> other.limbs_[i];
    }
    return std::strong_ordering::equal;
}

BigUint operator+(const BigUint& a, const BigUint& b) {
    BigUint out;
    const size_t n = std::max(a.limbs_.size(), b.limbs_.size());
    out.limbs_.resize(n + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t s = carry;
        if (i < a.limbs_.size()) s += a.limbs_[i];
        if (i < b.limbs_.size()) s += b.limbs_[i];
        out.limbs_[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    out.limbs_[n] = static_cast<uint32_t>(carry);
    out.trim();
    return out;
}

BigUint operator-(const BigUint& a, const BigUint& b) {
    if (a < b) throw Error("BigUint subtraction underflow");
    BigUint out;
    out.limbs_.resize(a.limbs_.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        int64_t d = static_cast<int64_t>(a.limbs_[i]) - borrow -
                    (i < b.limbs_.size() ? static_cast<int64_t>(b.limbs_[i]) : 0);
        borrow = 0;
        if (d < 0) {
            d += int64_t(1) << 32;
            borrow = 1;
        }
        out.limbs_[i] = static_cast<uint32_t>(d);
    }
    out.trim();
    return out;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return {};
    BigUint out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                           out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + b.limbs_.size();
        while (carry) {
            uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

size_t BigUint::bits() const {
    if (limbs_.empty()) return 0;
    size_t b = 32 * (limbs_.size() - 1);
    uint32_t top = limbs_.back();
    while (top) {
        ++b;
        top >>= 1;
    }
    return b;
}

void BigUint::shift_left_one() {
    uint32_t carry = 0;
    for (auto& limb : limbs_) {
        const uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry) limbs_.push_back(carry);
}

bool BigUint::sub_in_place_if_ge(const BigUint& b) {
    if (*this < b) return false;
    int64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        int64_t d = static_cast<int64_t>(limbs_[i]) - borrow -
                    (i < b.limbs_.size() ? static_cast<int64_t>(b.limbs_[i]) : 0);
        borrow = 0;
        if (d < 0) {
            d += int64_t(1) << 32;
            borrow = 1;
        }
        limbs_[i] = static_cast<uint32_t>(d);
    }
    trim();
    return true;
}

std::pair<BigUint, BigUint> BigUint::divmod(const BigUint& a, const BigUint& b) {
    if (b.is_zero()) throw DivisionByZero("BigUint division by zero");
    if (a < b) return {BigUint(), a};
    // binary long division, msb first
    BigUint quot, rem;
    const size_t nbits = a.bits();
    quot.limbs_.assign((nbits + 31) / 32, 0);
    for (size_t i = nbits; i-- > 0;) {
        rem.shift_left_one();
        if ((a.limbs_[i / 32] >> (i % 32)) & 1u) {
            if (rem.limbs_.empty()) rem.limbs_.push_back(1);
            else rem.limbs_[0] |= 1u;
        }
        if (rem.sub_in_place_if_ge(b)) quot.limbs_[i / 32] |= (1u << (i % 32));
    }
    quot.trim();
    return {quot, rem};
}

BigUint BigUint::power(uint64_t base, uint64_t exp) {
    return BigUint(base).pow(exp);
}

BigUint BigUint::pow(uint64_t exp) const {
    BigUint result(1);
    BigUint b = *this;
    while (exp > 0) {
        if (exp & 1) result = result * b;
        b = b * b;
        exp >>= 1;
    }
    return result;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    BigUint cur = *this;
    const BigUint chunk(1000000000);
    while (!cur.is_zero()) {
        auto [q, r] = divmod(cur, chunk);
        uint64_t digits = r.is_zero() ? 0 : r.to_uint64();
        for (int i = 0; i < 9; ++i) {
            out += static_cast<char>('0' + digits % 10);
            digits /= 10;
        }
        cur = std::move(q);
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    std::reverse(out.begin(), out.end());
    return out;
}

BigUint binomial(uint64_t n, uint64_t k) {
    if (k > n) return {};
    if (k > n - k) k = n - k;
    BigUint result(1);
    for (uint64_t i = 1; i <= k; ++i) {
        auto [q, r] = BigUint::divmod(result * BigUint(n - k + i), BigUint(i));
        if (!r.is_zero()) throw Error("binomial internal division not exact");
        result = std::move(q);
    }
    return result;
}

}  // namespace mext
