#include "mext/counting.hpp"

#include <functional>
#include <thread>

#include "mext/lfsr.hpp"

namespace mext {

BigUint grassmannian_size(size_t l, size_t m, uint32_t q) {
    if (l > m) throw BadRange("need 0 <= l <= m");
    BigUint num(1), den(1);
    for (size_t i = 0; i < l; ++i) {
        num = num * (BigUint::power(q, m) - BigUint::power(q, i));
        den = den * (BigUint::power(q, l) - BigUint::power(q, i));
    }
    auto [quot, rem] = BigUint::divmod(num, den);
    if (!rem.is_zero()) throw Error("Gaussian binomial division not exact");
    return quot;
}

BigUint count_by_dimension(size_t l, size_t m, size_t n, uint32_t q) {
    if (l > m || l > n) throw BadRange("need l <= min(m, n)");
    if (l == 0) return {};
    BigUint out = grassmannian_size(l, m, q);
    for (size_t i = 1; i < l; ++i) {
        out = out * (BigUint::power(q, n) - BigUint::power(q, i));
    }
    return out;
}

BigUint count_independent(size_t m, size_t n, uint32_t q) {
    if (m < 1 || m > n) throw BadRange("need 1 <= m <= n");
    BigUint out(1);
    for (size_t i = 1; i < m; ++i) {
        out = out * (BigUint::power(q, n) - BigUint::power(q, i));
    }
    return out;
}

BigUint count_max_extension(const RVector& r, size_t n, uint32_t q) {
    const size_t m = r.size();
    const size_t rsum = r.sum();
    if (rsum > n) throw BadRange("need sum(R) <= n");
    BigUint out(1);
    for (size_t i = rsum - m + 1; i < rsum; ++i) {
        out = out * (BigUint::power(q, n) - BigUint::power(q, i));
    }
    return out;
}

BigUint count_nr(size_t m, size_t r, size_t n, uint32_t q) {
    if (m < 1 || m > r || r > n) throw BadRange("need 1 <= m <= r <= n");
    std::vector<uint32_t> parts(m, 1);
    parts[0] = static_cast<uint32_t>(r - m + 1);
    return binomial(r - 1, r - m) * count_max_extension(RVector(parts), n, q);
}

BigUint count_lfsr(size_t m, size_t b, uint32_t q) {
    if (m < 1 || b < 1) throw BadRange("need m >= 1 and b >= 1");
    const size_t n = m * b;
    BigUint out(1);
    for (size_t i = 1; i < m; ++i) {
        out = out * (BigUint::power(q, n) - BigUint::power(q, n - i));
    }
    return out;
}

// ---------------------------------------------------------------------------
// oracles
// ---------------------------------------------------------------------------

namespace {

constexpr uint64_t kOracleSpaceBound = uint64_t(1) << 22;

uint64_t checked_space(uint64_t q, size_t cells) {
    unsigned __int128 space = 1;
    for (size_t i = 0; i < cells; ++i) {
        space *= q;
        if (space > kOracleSpaceBound) throw TooLarge("oracle search space exceeds 2^22");
    }
    return static_cast<uint64_t>(space);
}

void decode_digits(uint64_t index, uint32_t q, std::vector<uint32_t>& digits) {
    for (auto& d : digits) {
        d = static_cast<uint32_t>(index % q);
        index /= q;
    }
}

uint64_t orbit_divide(uint64_t raw, uint64_t orbit) {
    if (raw % orbit != 0) {
        throw NonIntegralOrbitQuotient("matrix count is not a multiple of the orbit size");
    }
    return raw / orbit;
}

uint64_t run_sharded(uint64_t space, unsigned jobs,
                     const std::function<uint64_t(uint64_t, uint64_t)>& shard) {
    if (jobs <= 1) return shard(0, space);
    std::vector<uint64_t> results(jobs, 0);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
        const uint64_t lo = space * t / jobs;
        const uint64_t hi = space * (t + 1) / jobs;
        threads.emplace_back([&, t, lo, hi] { results[t] = shard(lo, hi); });
    }
    for (auto& th : threads) th.join();
    uint64_t total = 0;
    for (uint64_t v : results) total += v;
    return total;
}

}  // namespace

uint64_t oracle_space_matrices(size_t m, size_t n, uint32_t q) {
    return checked_space(q, m * n);
}

uint64_t oracle_space_lfsr(size_t m, size_t b, uint32_t q) {
    return checked_space(q, b * m * m);
}

uint64_t oracle_raw_by_dimension(size_t l, size_t m, size_t n, PrimeField f,
                                 uint64_t begin, uint64_t end) {
    const uint32_t q = f.modulus();
    std::vector<uint32_t> digits(m * n);
    Mat state(f, m, n);
    uint64_t count = 0;
    for (uint64_t idx = begin; idx < end; ++idx) {
        if (idx == 0) continue;  // zero matrix excluded
        decode_digits(idx, q, digits);
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < n; ++j) state.set(i, j, digits[i * n + j]);
        }
        if (rank(state) == l) ++count;
    }
    return count;
}

uint64_t oracle_raw_max_extension(const RVector& r, const Poly& p,
                                  uint64_t begin, uint64_t end) {
    const PrimeField& f = p.field();
    const uint32_t q = f.modulus();
    const size_t m = r.size();
    const size_t n = static_cast<size_t>(p.degree());
    const Mat a = companion_matrix(p);
    std::vector<uint32_t> digits(m * n);
    Mat ext(f, r.sum(), n);
    uint64_t count = 0;
    for (uint64_t idx = begin; idx < end; ++idx) {
        if (idx == 0) continue;
        decode_digits(idx, q, digits);
        size_t out_row = 0;
        for (size_t i = 0; i < m; ++i) {
            std::vector<uint32_t> row(digits.begin() + static_cast<ptrdiff_t>(i * n),
                                      digits.begin() + static_cast<ptrdiff_t>((i + 1) * n));
            for (uint32_t j = 0; j < r[i]; ++j) {
                if (j > 0) row = row_times(row, a);
                ext.set_row(out_row++, row);
            }
        }
        if (rank(ext) == r.sum()) ++count;
    }
    return count;
}

uint64_t oracle_raw_lfsr(size_t m, size_t b, const Poly& p,
                         uint64_t begin, uint64_t end) {
    const PrimeField& f = p.field();
    const uint32_t q = f.modulus();
    const size_t n = m * b;
    std::vector<uint32_t> digits(b * m * m);
    Mat a(f, n, n);
    for (size_t i = 0; i + m < n; ++i) a.set(i, i + m, 1);
    uint64_t count = 0;
    for (uint64_t idx = begin; idx < end; ++idx) {
        decode_digits(idx, q, digits);
        for (size_t t = 0; t < b; ++t) {
            for (size_t i = 0; i < m; ++i) {
                for (size_t j = 0; j < m; ++j) {
                    a.set(n - m + i, t * m + j, digits[(t * m + i) * m + j]);
                }
            }
        }
        if (charpoly(a) == p) ++count;
    }
    return count;
}

uint64_t oracle_by_dimension(size_t l, size_t m, size_t n, PrimeField f, unsigned jobs) {
    const uint64_t space = oracle_space_matrices(m, n, f.modulus());
    const uint64_t raw = run_sharded(space, jobs, [&](uint64_t lo, uint64_t hi) {
        return oracle_raw_by_dimension(l, m, n, f, lo, hi);
    });
    const uint64_t orbit = checked_space(f.modulus(), n) - 1;
    return orbit_divide(raw, orbit);
}

uint64_t oracle_max_extension(const RVector& r, const Poly& p, unsigned jobs) {
    const size_t n = static_cast<size_t>(p.degree());
    if (r.sum() > n) throw BadRange("need sum(R) <= deg(p)");
    // orbit division below assumes every nonzero state has a full orbit
    if (!is_primitive(p)) throw NotPrimitive("oracle requires a primitive polynomial");
    const uint64_t space = oracle_space_matrices(r.size(), n, p.field().modulus());
    const uint64_t raw = run_sharded(space, jobs, [&](uint64_t lo, uint64_t hi) {
        return oracle_raw_max_extension(r, p, lo, hi);
    });
    const uint64_t orbit = checked_space(p.field().modulus(), n) - 1;
    return orbit_divide(raw, orbit);
}

uint64_t oracle_lfsr(size_t m, size_t b, const Poly& p, unsigned jobs) {
    if (static_cast<size_t>(p.degree()) != m * b) throw BadRange("need deg(p) = m * b");
    const uint64_t space = oracle_space_lfsr(m, b, p.field().modulus());
    return run_sharded(space, jobs, [&](uint64_t lo, uint64_t hi) {
        return oracle_raw_lfsr(m, b, p, lo, hi);
    });
}

std::vector<RVector> compositions(size_t r, size_t m) {
    std::vector<RVector> out;
    std::vector<uint32_t> parts(m, 1);
    // enumerate compositions of r into m positive parts recursively
    auto rec = [&](auto&& self, size_t pos, size_t remaining) -> void {
        if (pos + 1 == m) {
            parts[pos] = static_cast<uint32_t>(remaining);
            out.emplace_back(parts);
            return;
        }
        for (size_t v = 1; v + (m - pos - 1) <= remaining; ++v) {
            parts[pos] = static_cast<uint32_t>(v);
            self(self, pos + 1, remaining - v);
        }
    };
    if (m < 1 || r < m) throw BadRange("need 1 <= m <= r");
    rec(rec, 0, r);
    return out;
}

uint64_t oracle_nr(size_t m, size_t r, const Poly& p, unsigned jobs) {
    uint64_t total = 0;
    for (const RVector& comp : compositions(r, m)) {
        total += oracle_max_extension(comp, p, jobs);
    }
    return total;
}

}  // namespace mext
