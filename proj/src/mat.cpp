#include "mext/mat.hpp"

#include <ostream>

namespace mext {

Mat::Mat(PrimeField field, size_t rows, size_t cols, std::vector<uint32_t> data)
    : f_(field), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw ShapeMismatch("matrix data size mismatch");
    for (auto& v : data_) v %= f_.modulus();
}

Mat Mat::identity(PrimeField f, size_t n) {
    Mat m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Mat Mat::from_rows(PrimeField f, const std::vector<std::vector<uint32_t>>& rows) {
    if (rows.empty()) return Mat(f, 0, 0);
    const size_t cols = rows[0].size();
    std::vector<uint32_t> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw ShapeMismatch("ragged rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return Mat(f, rows.size(), cols, std::move(data));
}

std::vector<uint32_t> Mat::row(size_t i) const {
    return {data_.begin() + static_cast<ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<ptrdiff_t>((i + 1) * cols_)};
}

void Mat::set_row(size_t i, const std::vector<uint32_t>& r) {
    if (r.size() != cols_) throw ShapeMismatch("row length mismatch");
    for (size_t j = 0; j < cols_; ++j) set(i, j, r[j]);
}

Mat Mat::transpose() const {
    Mat t(f_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    }
    return t;
}

bool Mat::is_zero() const {
    for (uint32_t v : data_) {
        if (v != 0) return false;
    }
    return true;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (!(a.f_ == b.f_)) throw FieldMismatch();
    if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product shapes");
    const PrimeField& f = a.f_;
    Mat out(f, a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
        for (size_t k = 0; k < a.cols_; ++k) {
            const uint32_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                out.set(i, j, f.add(out.at(i, j), f.mul(aik, b.at(k, j))));
            }
        }
    }
    return out;
}

std::vector<uint32_t> row_times(const std::vector<uint32_t>& x, const Mat& a) {
    if (x.size() != a.rows()) throw ShapeMismatch("row vector length");
    const PrimeField& f = a.field();
    std::vector<uint32_t> out(a.cols(), 0);
    for (size_t k = 0; k < x.size(); ++k) {
        if (x[k] == 0) continue;
        for (size_t j = 0; j < a.cols(); ++j) {
            out[j] = f.add(out[j], f.mul(x[k], a.at(k, j)));
        }
    }
    return out;
}

namespace {

// Forward elimination in place; returns pivot columns. Deterministic: scans
// for the first nonzero entry top-down in each column.
std::vector<size_t> eliminate(Mat& m) {
    const PrimeField& f = m.field();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r) {
            for (size_t j = 0; j < m.cols(); ++j) {
                const uint32_t tmp = m.at(r, j);
                m.set(r, j, m.at(pivot, j));
                m.set(pivot, j, tmp);
            }
        }
        const uint32_t inv = f.inv(m.at(r, c));
        for (size_t j = c; j < m.cols(); ++j) m.set(r, j, f.mul(inv, m.at(r, j)));
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const uint32_t factor = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j) {
                m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(r, j))));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

size_t rank(const Mat& m) {
    Mat work = m;
    return eliminate(work).size();
}

Mat rref(const Mat& m) {
    Mat work = m;
    eliminate(work);
    return work;
}

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("inverse of non-square matrix");
    const size_t n = m.rows();
    Mat aug(m.field(), n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
        aug.set(i, n + i, 1);
    }
    const auto pivots = eliminate(aug);
    if (pivots.size() != n || pivots.back() != n - 1) throw Singular();
    Mat out(m.field(), n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) out.set(i, j, aug.at(i, n + j));
    }
    return out;
}

std::vector<uint32_t> solve_left(const Mat& m, const std::vector<uint32_t>& e) {
    if (m.rows() != m.cols()) throw ShapeMismatch("solve_left expects a square matrix");
    if (e.size() != m.cols()) throw ShapeMismatch("rhs length mismatch");
    const size_t n = m.rows();
    // a * m = e  <=>  m^T * a^T = e^T
    Mat aug(m.field(), n, n + 1);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.set(i, j, m.at(j, i));
        aug.set(i, n, e[i]);
    }
    eliminate(aug);
    std::vector<uint32_t> a(n, 0);
    for (size_t i = 0; i < n; ++i) {
        size_t lead = 0;
        while (lead < n && aug.at(i, lead) == 0) ++lead;
        if (lead == n) {
            if (aug.at(i, n) != 0) throw NoSolution();
            continue;
        }
        a[lead] = aug.at(i, n);  // free variables stay 0
    }
    return a;
}

Mat companion_matrix(const Poly& p) {
    if (!p.is_monic()) throw NotMonic("companion matrix requires a monic polynomial");
    if (p.coeff(0) == 0) throw ZeroConstantTerm();
    const size_t n = static_cast<size_t>(p.degree());
    const PrimeField& f = p.field();
    Mat a(f, n, n);
    for (size_t i = 1; i < n; ++i) a.set(i, i - 1, 1);
    // p(s) = s^n - sum a_i s^i, so the last column holds -coeff_i(p)
    for (size_t i = 0; i < n; ++i) a.set(i, n - 1, f.neg(p.coeff(i)));
    return a;
}

Poly charpoly(const Mat& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("charpoly of non-square matrix");
    const size_t n = m.rows();
    const PrimeField& f = m.field();
    if (n == 0) return Poly::one(f);

    // Reduce to upper Hessenberg form by similarity transforms.
    Mat h = m;
    for (size_t c = 0; c + 2 < n; ++c) {
        size_t pivot = c + 1;
        while (pivot < n && h.at(pivot, c) == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != c + 1) {
            for (size_t j = 0; j < n; ++j) {  // swap rows then matching columns
                uint32_t t = h.at(c + 1, j);
                h.set(c + 1, j, h.at(pivot, j));
                h.set(pivot, j, t);
            }
            for (size_t i = 0; i < n; ++i) {
                uint32_t t = h.at(i, c + 1);
                h.set(i, c + 1, h.at(i, pivot));
                h.set(i, pivot, t);
            }
        }
        const uint32_t inv = f.inv(h.at(c + 1, c));
        for (size_t i = c + 2; i < n; ++i) {
            const uint32_t factor = f.mul(h.at(i, c), inv);
            if (factor == 0) continue;
            for (size_t j = 0; j < n; ++j) {
                h.set(i, j, f.sub(h.at(i, j), f.mul(factor, h.at(c + 1, j))));
            }
            for (size_t i2 = 0; i2 < n; ++i2) {
                h.set(i2, c + 1, f.add(h.at(i2, c + 1), f.mul(factor, h.at(i2, i))));
            }
        }
    }

    // det(sI - H) for Hessenberg H by the leading-principal-minor recurrence:
    // p_k = (s - h_kk) p_{k-1} - sum_i h_ik (prod_{j=i..k-1} h_{j+1,j}) p_{i-1}
    std::vector<Poly> p;
    p.reserve(n + 1);
    p.push_back(Poly::one(f));
    for (size_t k = 1; k <= n; ++k) {
        Poly term = Poly(f, {f.neg(h.at(k - 1, k - 1)), 1}) * p[k - 1];
        uint32_t subprod = 1;
        for (size_t i = k - 1; i >= 1; --i) {
            subprod = f.mul(subprod, h.at(i, i - 1));
            if (subprod == 0) break;
            const uint32_t w = f.mul(h.at(i - 1, k - 1), subprod);
            if (w == 0) continue;
            Poly scaled(f, [&] {
                std::vector<uint32_t> c = p[i - 1].coeffs();
                for (auto& x : c) x = f.mul(x, w);
                return c;
            }());
            term = term - scaled;
        }
        p.push_back(std::move(term));
    }
    return p[n];
}

Mat poly_apply(const Poly& f, const Mat& a) {
    if (a.rows() != a.cols()) throw ShapeMismatch("poly_apply expects a square matrix");
    const size_t n = a.rows();
    Mat acc(a.field(), n, n);
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * a;
        const uint32_t c = f.coeff(static_cast<size_t>(i));
        if (c != 0) {
            for (size_t d = 0; d < n; ++d) acc.set(d, d, a.field().add(acc.at(d, d), c));
        }
    }
    return acc;
}

Mat matpow(const Mat& a, uint64_t e) {
    if (a.rows() != a.cols()) throw ShapeMismatch("matpow expects a square matrix");
    Mat result = Mat::identity(a.field(), a.rows());
    Mat base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Mat matpow_signed(const Mat& a, int64_t e) {
    if (e >= 0) return matpow(a, static_cast<uint64_t>(e));
    return matpow(inverse(a), static_cast<uint64_t>(-e));
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m.at(i, j);
        }
        os << '\n';
    }
    return os;
}

}  // namespace mext
