#pragma once

// Dense matrices and exact elimination.
//
// exact_rank / nullspace_basis run fraction-free (Bareiss) elimination: each
// row is first scaled into Z[zeta], after which every entry stays a minor of
// the scaled matrix and each division by the previous pivot is exact.

#include "field.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fatpoints {

template <class T> class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T &fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void append_row(std::span<const T> values) {
        if (rows_ == 0 && cols_ == 0)
            cols_ = values.size();
        if (values.size() != cols_)
            throw std::invalid_argument("append_row: width mismatch");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    Matrix transpose() const {
        if (data_.empty())
            return Matrix(cols_, rows_, T{});
        Matrix t(cols_, rows_, data_.front());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix &a, const Matrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

template <class T> Matrix<T> multiply(const Matrix<T> &a, const Matrix<T> &b, const T &zero) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: shape mismatch");
    Matrix<T> r(a.rows(), b.cols(), zero);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T &x = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j)
                r(i, j) += x * b(k, j);
        }
    return r;
}

template <class T> T det3(const Matrix<T> &m) {
    if (m.rows() != 3 || m.cols() != 3)
        throw std::invalid_argument("det3: not 3x3");
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

class SingularMatrix : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

inline Matrix<Scalar> identity3(const FieldPtr &f) {
    Matrix<Scalar> m(3, 3, Scalar(f));
    for (std::size_t i = 0; i < 3; ++i)
        m(i, i) = Scalar(f, 1);
    return m;
}

// Adjugate inverse of a 3x3 matrix.
inline Matrix<Scalar> inverse3(const Matrix<Scalar> &m) {
    const Scalar det = det3(m);
    if (det.is_zero())
        throw SingularMatrix("matrix is singular");
    const Scalar inv = det.inverse();
    Matrix<Scalar> r(3, 3, Scalar(det.field()));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            const std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            r(i, j) = (m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)) * inv;
        }
    return r;
}

struct Echelon {
    Matrix<Scalar> form;              // upper echelon (fraction-free scaled rows)
    std::vector<std::size_t> pivots;  // pivot column of each of the first rank rows
    std::size_t rank() const noexcept { return pivots.size(); }
};

inline Echelon fraction_free_echelon(Matrix<Scalar> m) {
    Echelon out;
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) {
        out.form = std::move(m);
        return out;
    }
    const FieldPtr field = m(0, 0).field();
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (const auto &x : m.row(i)) {
            const mpz_class d = x.denominator_lcm();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        if (l != 1) {
            const Scalar s(field, mpq_class(l));
            for (auto &x : m.row(i))
                x *= s;
        }
    }
    Scalar prev_inv(field, 1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero())
            ++p;
        if (p == rows)
            continue;
        m.swap_rows(p, r);
        const Scalar pivot = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Scalar lead = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                Scalar v = pivot * m(i, j);
                if (!lead.is_zero())
                    v -= lead * m(r, j);
                m(i, j) = v * prev_inv;
            }
            m(i, c) = Scalar(field);
        }
        prev_inv = pivot.inverse();
        out.pivots.push_back(c);
        ++r;
    }
    out.form = std::move(m);
    return out;
}

inline std::size_t exact_rank(const Matrix<Scalar> &m) { return fraction_free_echelon(m).rank(); }

// Basis of {v : M v = 0}; vector k has a 1 in the k-th free column and 0 in the others.
inline std::vector<std::vector<Scalar>> nullspace_basis(const Matrix<Scalar> &m, const FieldPtr &field) {
    const Echelon e = fraction_free_echelon(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Scalar> v(cols, Scalar(field));
        v[f] = Scalar(field, 1);
        for (std::size_t r = e.rank(); r-- > 0;) {
            const std::size_t pc = e.pivots[r];
            Scalar acc(field);
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (!v[j].is_zero() && !e.form(r, j).is_zero())
                    acc += e.form(r, j) * v[j];
            v[pc] = -(acc / e.form(r, pc));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::vector<std::vector<Scalar>> nullspace_basis(const Matrix<Scalar> &m) {
    if (m.rows() == 0 || m.cols() == 0)
        throw std::invalid_argument("nullspace_basis: field unknown for empty matrix");
    return nullspace_basis(m, m(0, 0).field());
}

// Arithmetic modulo the Mersenne prime 2^61 - 1. Ranks computed here satisfy
// rank_p(M mod p) <= rank_Q(M) for integer M, so coranks are upper bounds.
namespace modp {

inline constexpr std::uint64_t prime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t reduce(unsigned __int128 x) {
    std::uint64_t lo = static_cast<std::uint64_t>(x & prime) + static_cast<std::uint64_t>(x >> 61);
    lo = (lo & prime) + (lo >> 61);
    return lo >= prime ? lo - prime : lo;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    return reduce(static_cast<unsigned __int128>(a) * b);
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t s = a + b;
    return s >= prime ? s - prime : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + prime - b; }

inline std::uint64_t pow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1U)
            r = mul(r, b);
        b = mul(b, b);
        e >>= 1U;
    }
    return r;
}

inline std::uint64_t inverse(std::uint64_t a) { return pow(a, prime - 2); }

inline std::uint64_t from_mpz(const mpz_class &z) {
    mpz_class r = z % mpz_class(static_cast<unsigned long>(prime));
    if (r < 0)
        r += static_cast<unsigned long>(prime);
    return r.get_ui();
}

inline std::uint64_t from_signed(long long v) {
    if (v >= 0)
        return static_cast<std::uint64_t>(v) % prime;
    return sub(0, static_cast<std::uint64_t>(-v) % prime);
}

// Row-major rows x cols matrix, destroyed.
inline std::size_t rank(std::vector<std::uint64_t> &m, std::size_t rows, std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p * cols + c] == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m[p * cols + j], m[r * cols + j]);
        const std::uint64_t inv = inverse(m[r * cols + c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::uint64_t f = mul(m[i * cols + c], inv);
            if (f == 0)
                continue;
            for (std::size_t j = c; j < cols; ++j)
                m[i * cols + j] = sub(m[i * cols + j], mul(f, m[r * cols + j]));
        }
        ++r;
    }
    return r;
}

} // namespace modp

} // namespace fatpoints
