#pragma once

#include <cstdint>

#include "mext/errors.hpp"

namespace mext {

class FieldElement;

/// The prime field F_p, 2 <= p < 2^16. Primality is checked at construction
/// by trial division. Cheap value type; all arithmetic works on canonical
/// residues in [0, p).
class PrimeField {
public:
    explicit PrimeField(uint32_t p);

    uint32_t modulus() const noexcept { return p_; }
    bool operator==(const PrimeField& other) const noexcept = default;

    uint32_t add(uint32_t a, uint32_t b) const noexcept { return (a + b) % p_; }
    uint32_t sub(uint32_t a, uint32_t b) const noexcept { return (a + p_ - b) % p_; }
    uint32_t neg(uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const noexcept {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    }
    uint32_t inv(uint32_t a) const;  // throws DivisionByZero for a == 0
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, uint64_t e) const noexcept;
    uint32_t reduce(uint64_t v) const noexcept { return static_cast<uint32_t>(v % p_); }

    FieldElement element(uint64_t v) const;
    FieldElement zero() const;
    FieldElement one() const;

private:
    uint32_t p_;
};

/// An element of F_p carrying its field context. Mixed-field arithmetic
/// throws FieldMismatch.
class FieldElement {
public:
    FieldElement(uint64_t value, PrimeField field)
        : f_(field), v_(field.reduce(value)) {}

    uint32_t value() const noexcept { return v_; }
    const PrimeField& field() const noexcept { return f_; }

    FieldElement operator-() const { return {f_.neg(v_), f_}; }
    FieldElement inv() const { return {f_.inv(v_), f_}; }
    FieldElement pow(uint64_t e) const { return {f_.pow(v_, e), f_}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.require_same(b);
        return {a.f_.add(a.v_, b.v_), a.f_};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.require_same(b);
        return {a.f_.sub(a.v_, b.v_), a.f_};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.require_same(b);
        return {a.f_.mul(a.v_, b.v_), a.f_};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        a.require_same(b);
        return {a.f_.div(a.v_, b.v_), a.f_};
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        a.require_same(b);
        return a.v_ == b.v_;
    }

private:
    FieldElement(uint32_t value, const PrimeField& field) : f_(field), v_(value) {}
    void require_same(const FieldElement& other) const {
        if (!(f_ == other.f_)) throw FieldMismatch();
    }

    PrimeField f_;
    uint32_t v_;
};

inline FieldElement PrimeField::element(uint64_t v) const { return FieldElement(v, *this); }
inline FieldElement PrimeField::zero() const { return element(0); }
inline FieldElement PrimeField::one() const { return element(1); }

}  // namespace mext
