#include "mext/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mext {

Poly::Poly(PrimeField field, std::vector<uint32_t> coeffs) : f_(field), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= f_.modulus();
    trim();
}

Poly Poly::monomial(PrimeField f, size_t degree, uint32_t coeff) {
    std::vector<uint32_t> c(degree + 1, 0);
    c[degree] = coeff;
    return {f, std::move(c)};
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

uint32_t Poly::eval(uint32_t x) const {
    uint32_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = f_.add(f_.mul(acc, x), *it);
    }
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly::require_same(a, b);
    std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.f_.add(a.coeff(i), b.coeff(i));
    return {a.f_, std::move(c)};
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly::require_same(a, b);
    std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.f_.sub(a.coeff(i), b.coeff(i));
    return {a.f_, std::move(c)};
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly::require_same(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.f_);
    std::vector<uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            c[i + j] = a.f_.add(c[i + j], a.f_.mul(a.c_[i], b.c_[j]));
        }
    }
    return {a.f_, std::move(c)};
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    require_same(a, b);
    if (b.is_zero()) throw ModulusZero("polynomial division by zero");
    const PrimeField& f = a.f_;
    std::vector<uint32_t> r = a.c_;
    std::vector<uint32_t> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, 0);
    const uint32_t lead_inv = f.inv(b.c_.back());
    while (r.size() >= b.c_.size() && !r.empty()) {
        const uint32_t factor = f.mul(r.back(), lead_inv);
        const size_t shift = r.size() - b.c_.size();
        q[shift] = factor;
        for (size_t i = 0; i < b.c_.size(); ++i) {
            r[shift + i] = f.sub(r[shift + i], f.mul(factor, b.c_[i]));
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    quot = Poly(f, std::move(q));
    rem = Poly(f, std::move(r));
}

Poly operator/(const Poly& a, const Poly& b) {
    Poly q(a.f_), r(a.f_);
    Poly::divmod(a, b, q, r);
    return q;
}

Poly operator%(const Poly& a, const Poly& b) {
    Poly q(a.f_), r(a.f_);
    Poly::divmod(a, b, q, r);
    return r;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.leading() != 1) {
        // normalize monic
        const uint32_t inv = a.field().inv(a.leading());
        std::vector<uint32_t> c = a.coeffs();
        for (auto& x : c) x = a.field().mul(x, inv);
        return {a.field(), std::move(c)};
    }
    return a;
}

Poly powmod(const Poly& base, uint64_t e, const Poly& m) {
    if (m.is_zero()) throw ModulusZero("powmod modulus is zero");
    Poly result = Poly::one(base.field()) % m;
    Poly b = base % m;
    while (e > 0) {
        if (e & 1) result = result * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return result;
}

namespace {

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// q^n - 1 as the order of the multiplicative group of F_{q^n}; desk scale.
uint64_t group_order(const Poly& p) {
    const uint64_t q = p.field().modulus();
    const int n = p.degree();
    unsigned __int128 acc = 1;
    for (int i = 0; i < n; ++i) {
        acc *= q;
        if (acc > (static_cast<unsigned __int128>(1) << 63)) {
            throw TooLarge("q^n - 1 exceeds the factorable range");
        }
    }
    return static_cast<uint64_t>(acc) - 1;
}

}  // namespace

bool is_irreducible(const Poly& p) {
    if (!p.is_monic() || p.degree() < 1) throw NotMonic("irreducibility requires a monic polynomial of degree >= 1");
    const int n = p.degree();
    if (n == 1) return true;
    const PrimeField& f = p.field();
    const uint32_t q = f.modulus();
    const Poly s = Poly::monomial(f, 1);

    // x^(q^j) mod p for j = 1..n by repeated q-th powers
    std::vector<Poly> frob;
    frob.reserve(n);
    Poly h = s % p;
    for (int j = 1; j <= n; ++j) {
        h = powmod(h, q, p);
        frob.push_back(h);
    }
    if (!(frob[n - 1] == s % p)) return false;  // x^(q^n) != x
    for (uint64_t d : prime_factors(n)) {
        const Poly diff = frob[n / d - 1] - s;
        if (gcd(diff, p).degree() != 0) return false;
    }
    return true;
}

uint64_t order(const Poly& p) {
    if (!p.is_monic()) throw NotMonic();
    if (p.coeff(0) == 0) throw ZeroConstantTerm();
    if (!is_irreducible(p)) throw NotIrreducible();
    const uint64_t n = group_order(p);
    uint64_t e = n;
    for (uint64_t d : prime_factors(n)) {
        while (e % d == 0 && powmod(Poly::monomial(p.field(), 1), e / d, p).is_one()) {
            e /= d;
        }
    }
    return e;
}

bool is_primitive(const Poly& p) {
    if (!p.is_monic() || p.degree() < 1) return false;
    if (p.coeff(0) == 0) return false;
    if (!is_irreducible(p)) return false;
    return order(p) == group_order(p);
}

Poly find_primitive(PrimeField f, size_t degree) {
    if (degree < 1) throw DegreeZero("find_primitive requires degree >= 1");
    const uint64_t q = f.modulus();
    std::vector<uint32_t> coeffs(degree + 1, 0);
    coeffs[degree] = 1;
    // Scan candidates in increasing little-endian coefficient order.
    while (true) {
        size_t i = 0;
        while (i < degree && coeffs[i] == q - 1) coeffs[i++] = 0;
        if (i == degree) break;
        ++coeffs[i];
        if (coeffs[0] == 0) continue;
        Poly cand(f, coeffs);
        if (is_primitive(cand)) return cand;
    }
    throw Error("no primitive polynomial found");  // unreachable for valid fields
}

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const uint32_t c = p.coeff(static_cast<size_t>(i));
        if (c == 0) continue;
        if (!first) out << "+";
        first = false;
        if (i == 0) {
            out << c;
        } else {
            if (c != 1) out << c << "*";
            out << "s";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

namespace {

Poly parse_coeff_form(PrimeField f, const std::string& body) {
    std::vector<uint32_t> coeffs;
    std::string t;
    for (char ch : body) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            t += ch;
        } else if (ch == ',' || ch == ']') {
            if (!t.empty()) {
                coeffs.push_back(static_cast<uint32_t>(std::stoul(t)));
                t.clear();
            }
        } else if (ch != '[' && !std::isspace(static_cast<unsigned char>(ch))) {
            throw ParseError("bad character in coefficient list: " + std::string(1, ch));
        }
    }
    if (!t.empty()) coeffs.push_back(static_cast<uint32_t>(std::stoul(t)));
    return {f, std::move(coeffs)};
}

}  // namespace

Poly parse_poly(PrimeField f, const std::string& text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.rfind("coeffs=", 0) == 0) return parse_coeff_form(f, s.substr(7));
    if (!s.empty() && s[0] == '[') return parse_coeff_form(f, s);
    if (s.empty()) throw ParseError("empty polynomial");

    Poly result(f);
    size_t pos = 0;
    bool negate = false;
    while (pos < s.size()) {
        if (s[pos] == '+') {
            negate = false;
            ++pos;
        } else if (s[pos] == '-') {
            negate = true;
            ++pos;
        }
        if (pos >= s.size()) throw ParseError("dangling sign in polynomial");
        uint64_t coeff = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                coeff = coeff * 10 + static_cast<uint64_t>(s[pos] - '0');
                ++pos;
            }
            saw_coeff = true;
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        size_t exp = 0;
        if (pos < s.size() && (s[pos] == 's' || s[pos] == 'x')) {
            ++pos;
            exp = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    throw ParseError("missing exponent");
                }
                exp = 0;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    exp = exp * 10 + static_cast<size_t>(s[pos] - '0');
                    ++pos;
                }
            }
        } else if (!saw_coeff) {
            throw ParseError("expected term at position " + std::to_string(pos));
        }
        uint32_t c = f.reduce(coeff);
        if (negate) c = f.neg(c);
        result = result + Poly::monomial(f, exp, c);
    }
    return result;
}

}  // namespace mext
