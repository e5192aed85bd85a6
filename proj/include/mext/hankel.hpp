#pragma once

#include "mext/bigint.hpp"
#include "mext/multiseq.hpp"

namespace mext {

/// The defining vector (a_1, ..., a_{2n-1}) of an n x n Hankel matrix.
struct HankelVec {
    HankelVec(PrimeField field, std::vector<uint32_t> entries);

    PrimeField field;
    std::vector<uint32_t> a;

    size_t n() const noexcept { return (a.size() + 1) / 2; }
    bool is_zero() const;
};

/// The n x n matrix constant along anti-diagonals: H[i][j] = a_{i+j-1}.
Mat hankel_from_vector(const HankelVec& a);

/// Full-rank test routed through the extension machinery: the two-row state
/// [e_{2n-1}; a] with a primitive minimal polynomial p of degree 2n-1 has an
/// (n-1, n)-extension of maximum dimension exactly when the Hankel matrix of
/// a is nonsingular. The zero vector short-circuits to false (H = 0).
bool fullrank_via_extension(const HankelVec& a, const Poly& p);

/// q^{2n-1} - q^{2n-2}, exact.
BigUint count_fullrank_hankel(uint32_t q, size_t n);

/// Exhaustive count of full-rank n x n Hankel matrices by direct rank over
/// all q^{2n-1} defining vectors. Throws TooLarge beyond 2^22 vectors.
uint64_t enumerate_fullrank_hankel(PrimeField f, size_t n);

/// Shard of the enumeration over defining-vector indices [begin, end).
uint64_t enumerate_fullrank_hankel_range(PrimeField f, size_t n, uint64_t begin, uint64_t end);

/// Number of defining vectors, q^{2n-1}; throws TooLarge beyond 2^22.
uint64_t hankel_space(PrimeField f, size_t n);

}  // namespace mext
