#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mext/gf.hpp"

namespace mext {

/// Dense polynomial over F_p with little-endian coefficients (index i holds
/// the coefficient of s^i, trailing zeros trimmed). The zero polynomial has
/// an empty coefficient vector; degree() returns kZeroDegree for it, which
/// stands in for -infinity.
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    explicit Poly(PrimeField field) : f_(field) {}
    Poly(PrimeField field, std::vector<uint32_t> coeffs);

    static Poly zero(PrimeField f) { return Poly(f); }
    static Poly one(PrimeField f) { return {f, {1}}; }
    static Poly monomial(PrimeField f, size_t degree, uint32_t coeff = 1);

    const PrimeField& field() const noexcept { return f_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    uint32_t coeff(size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    uint32_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    const std::vector<uint32_t>& coeffs() const noexcept { return c_; }

    uint32_t eval(uint32_t x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator/(const Poly& a, const Poly& b);  // euclidean quotient
    friend Poly operator%(const Poly& a, const Poly& b);  // throws ModulusZero
    bool operator==(const Poly& other) const {
        return f_ == other.f_ && c_ == other.c_;
    }

private:
    static void require_same(const Poly& a, const Poly& b) {
        if (!(a.f_ == b.f_)) throw FieldMismatch();
    }
    static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
    void trim();

    PrimeField f_;
    std::vector<uint32_t> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// base^e mod m by square-and-multiply.
Poly powmod(const Poly& base, uint64_t e, const Poly& m);

/// Rabin's irreducibility test. Requires p monic of degree >= 1.
bool is_irreducible(const Poly& p);

/// Multiplicative order of s modulo p(s): the least e > 0 with s^e = 1 (mod p).
/// Requires p monic, irreducible, p(0) != 0, and q^deg(p) - 1 < 2^63 so the
/// group order can be factored by trial division.
uint64_t order(const Poly& p);

/// True iff p is irreducible with order(p) = q^n - 1. Reducible input or a
/// zero constant term yields false.
bool is_primitive(const Poly& p);

/// The primitive polynomial of the given degree over F_q whose coefficient
/// vector (a_0, ..., a_{n-1}) is smallest read as a little-endian base-q
/// integer. Deterministic; throws DegreeZero for degree < 1.
Poly find_primitive(PrimeField f, size_t degree);

/// "s^6+s+1" style, terms descending; coefficients > 1 print as "3*s^2".
std::string format_poly(const Poly& p);

/// Accepts the text form ("s^6+s+1", "3*s^2+2") and the coefficient form
/// ("coeffs=[1,1,0,0,0,0,1]", little-endian).
Poly parse_poly(PrimeField f, const std::string& text);

}  // namespace mext
