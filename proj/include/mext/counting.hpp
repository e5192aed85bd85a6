#pragma once

#include <map>
#include <optional>
#include <string>

#include "mext/bigint.hpp"
#include "mext/multiseq.hpp"

namespace mext {

/// Number of l-dimensional subspaces of F_q^m:
/// prod_{i=0}^{l-1} (q^m - q^i) / prod_{i=0}^{l-1} (q^l - q^i). Exact.
BigUint grassmannian_size(size_t l, size_t m, uint32_t q);

/// Number of multisequences in F_q^m with a given primitive minimal
/// polynomial of degree n and dimension l:
/// grassmannian_size(l, m, q) * prod_{i=1}^{l-1} (q^n - q^i).
/// l = 0 returns 0 (the zero multisequence has minimal polynomial 1).
BigUint count_by_dimension(size_t l, size_t m, size_t n, uint32_t q);

/// Number with linearly independent component sequences:
/// prod_{i=1}^{m-1} (q^n - q^i).
BigUint count_independent(size_t m, size_t n, uint32_t q);

/// Number whose R-extension has maximum dimension r = sum(R):
/// prod_{i=r-m+1}^{r-1} (q^n - q^i). Depends on R only through r and m.
BigUint count_max_extension(const RVector& r, size_t n, uint32_t q);

/// Number of dimension-r extended multisequences in F_q^r over all profiles
/// of length m summing to r: C(r-1, r-m) * count_max_extension.
BigUint count_nr(size_t m, size_t r, size_t n, uint32_t q);

/// Number of word-LFSR configurations with m-input m-output delay blocks
/// realizing a given primitive characteristic polynomial of degree n = m*b:
/// prod_{i=1}^{m-1} (q^n - q^(n-i)).
BigUint count_lfsr(size_t m, size_t b, uint32_t q);

// ---------------------------------------------------------------------------
// Brute-force oracles. Each iterates an explicit index space, counts the
// defining predicate, and (for the orbit-quotient oracles) divides by
// q^n - 1, raising NonIntegralOrbitQuotient if the division is not exact.
// The raw variants count over an index sub-range so shards can run in
// parallel and sum; `jobs` shards internally with threads.
// ---------------------------------------------------------------------------

uint64_t oracle_raw_by_dimension(size_t l, size_t m, size_t n, PrimeField f,
                                 uint64_t begin, uint64_t end);
uint64_t oracle_raw_max_extension(const RVector& r, const Poly& p,
                                  uint64_t begin, uint64_t end);
uint64_t oracle_raw_lfsr(size_t m, size_t b, const Poly& p,
                         uint64_t begin, uint64_t end);

/// Index space sizes for the raw counters (q^(m*n) and q^(b*m*m)).
/// Throw TooLarge beyond 2^22 elements.
uint64_t oracle_space_matrices(size_t m, size_t n, uint32_t q);
uint64_t oracle_space_lfsr(size_t m, size_t b, uint32_t q);

uint64_t oracle_by_dimension(size_t l, size_t m, size_t n, PrimeField f, unsigned jobs = 1);
uint64_t oracle_max_extension(const RVector& r, const Poly& p, unsigned jobs = 1);
uint64_t oracle_lfsr(size_t m, size_t b, const Poly& p, unsigned jobs = 1);

/// Composition-summed oracle: sum of oracle_max_extension over every profile
/// of length m with positive parts summing to r.
uint64_t oracle_nr(size_t m, size_t r, const Poly& p, unsigned jobs = 1);

std::vector<RVector> compositions(size_t r, size_t m);

/// Result of one formula evaluation, optionally paired with its oracle.
struct CountReport {
    BigUint formula_value;
    std::optional<uint64_t> oracle_value;
    std::map<std::string, std::string> parameters;

    std::optional<bool> match() const {
        if (!oracle_value) return std::nullopt;
        return formula_value == BigUint(*oracle_value);
    }
};

}  // namespace mext
