#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "mext/poly.hpp"

namespace mext {

/// Dense row-major matrix over F_p. Value type: all operations return fresh
/// matrices, nothing mutates in place through the public surface.
class Mat {
public:
    Mat(PrimeField field, size_t rows, size_t cols)
        : f_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Mat(PrimeField field, size_t rows, size_t cols, std::vector<uint32_t> data);

    static Mat identity(PrimeField f, size_t n);
    static Mat from_rows(PrimeField f, const std::vector<std::vector<uint32_t>>& rows);

    const PrimeField& field() const noexcept { return f_; }
    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }
    uint32_t at(size_t i, size_t j) const noexcept { return data_[i * cols_ + j]; }
    void set(size_t i, size_t j, uint64_t v) noexcept { data_[i * cols_ + j] = f_.reduce(v); }
    const std::vector<uint32_t>& data() const noexcept { return data_; }

    std::vector<uint32_t> row(size_t i) const;
    void set_row(size_t i, const std::vector<uint32_t>& r);

    Mat transpose() const;
    bool is_zero() const;

    friend Mat operator*(const Mat& a, const Mat& b);
    bool operator==(const Mat& other) const {
        return f_ == other.f_ && rows_ == other.rows_ && cols_ == other.cols_ &&
               data_ == other.data_;
    }

private:
    PrimeField f_;
    size_t rows_;
    size_t cols_;
    std::vector<uint32_t> data_;
};

/// x * A for a row vector x (length = A.rows()).
std::vector<uint32_t> row_times(const std::vector<uint32_t>& x, const Mat& a);

/// Rank by Gaussian elimination with first-nonzero pivoting.
size_t rank(const Mat& m);

/// Reduced row echelon form (deterministic elimination order).
Mat rref(const Mat& m);

/// Inverse of a nonsingular square matrix; throws Singular.
Mat inverse(const Mat& m);

/// Some a with a * m = e, unique when m is invertible; throws NoSolution if
/// e lies outside the row space of m.
std::vector<uint32_t> solve_left(const Mat& m, const std::vector<uint32_t>& e);

/// Companion matrix of a monic polynomial p with p(0) != 0: identity band
/// below the diagonal, last column holds (a_0, ..., a_{n-1}) where
/// p(s) = s^n - sum a_i s^i. Acts on row states as x(k+1) = x(k) * A.
Mat companion_matrix(const Poly& p);

/// Monic characteristic polynomial det(sI - M) via Hessenberg reduction
/// (valid in any characteristic).
Poly charpoly(const Mat& m);

/// f(A) by Horner's rule on matrices.
Mat poly_apply(const Poly& f, const Mat& a);

Mat matpow(const Mat& a, uint64_t e);
Mat matpow_signed(const Mat& a, int64_t e);  // negative exponents via inverse

std::ostream& operator<<(std::ostream& os, const Mat& m);

}  // namespace mext
