#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "ppav/errors.hpp"

namespace ppav {

using Integer = mpz_class;
using Rational = mpq_class;

/* n/d in lowest terms. */
inline Rational make_rational(const Integer& n, const Integer& d)
{
    Rational q(n, d);
    q.canonicalize();
    return q;
}

/*
 * Dense row-major matrix over an exact ring. Vectors are columns, a lattice
 * basis is stored with one basis vector per column and maps act by left
 * multiplication.
 */
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    Matrix(std::initializer_list<std::initializer_list<long>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw DomainError("ragged matrix literal");
            for (long v : r)
                data_.emplace_back(v);
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix I(n, n);
        for (std::size_t i = 0; i < n; ++i)
            I(i, i) = T(1);
        return I;
    }

    static Matrix column_vector(const std::vector<T>& v)
    {
        Matrix M(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i)
            M(i, 0) = v[i];
        return M;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    void set_column(std::size_t j, const std::vector<T>& c)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) = c[i];
    }

    Matrix columns(std::size_t first, std::size_t count) const
    {
        Matrix R(rows_, count);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < count; ++j)
                R(i, j) = (*this)(i, first + j);
        return R;
    }

    Matrix row_block(std::size_t first, std::size_t count) const
    {
        Matrix R(count, cols_);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                R(i, j) = (*this)(first + i, j);
        return R;
    }

    Matrix transpose() const
    {
        Matrix R(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                R(j, i) = (*this)(i, j);
        return R;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    /* row[dst] += q * row[src] */
    void add_row_multiple(std::size_t dst, std::size_t src, const T& q)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(dst, j) += q * (*this)(src, j);
    }

    /* col[dst] += q * col[src] */
    void add_col_multiple(std::size_t dst, std::size_t src, const T& q)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, dst) += q * (*this)(i, src);
    }

    void negate_row(std::size_t r)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(r, j) = -(*this)(r, j);
    }

    void negate_col(std::size_t c)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, c) = -(*this)(i, c);
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
    }

    const std::vector<T>& data() const { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        check_same_shape(a, b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k)
            r.data_[k] += b.data_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        check_same_shape(a, b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k)
            r.data_[k] -= b.data_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a)
    {
        Matrix r = a;
        for (auto& x : r.data_)
            x = -x;
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw DomainError("matrix product: inner dimensions differ");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Matrix operator*(const T& s, const Matrix& a)
    {
        Matrix r = a;
        for (auto& x : r.data_)
            x *= s;
        return r;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v)
    {
        if (a.cols_ != v.size())
            throw DomainError("matrix-vector product: dimensions differ");
        std::vector<T> r(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                r[i] += a(i, j) * v[j];
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m)
    {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j)
                os << (j ? ", " : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

private:
    static void check_same_shape(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DomainError("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/* Horizontal concatenation [A | B]. */
template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.rows() != b.rows() && a.cols() != 0 && b.cols() != 0)
        throw DomainError("hstack: row counts differ");
    std::size_t rows = a.cols() ? a.rows() : b.rows();
    Matrix<T> r(rows, a.cols() + b.cols());
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

inline Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline long long floor_div(long long a, long long b)
{
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline Integer abs_value(const Integer& a) { return abs(a); }
inline long long abs_value(long long a) { return a < 0 ? -a : a; }

/*
 * Column Hermite normal form: the columns of the result are the canonical
 * basis of the lattice spanned by the columns of `a`. The result is in
 * lower echelon form, pivots positive, and entries left of each pivot are
 * reduced into [0, pivot). Zero columns are dropped.
 */
template <class T>
Matrix<T> column_hnf(Matrix<T> a)
{
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t piv = 0;
    for (std::size_t i = 0; i < rows && piv < cols; ++i) {
        for (;;) {
            std::size_t best = cols;
            for (std::size_t k = piv; k < cols; ++k)
                if (a(i, k) != 0 && (best == cols || abs_value(a(i, k)) < abs_value(a(i, best))))
                    best = k;
            if (best == cols)
                break;
            a.swap_cols(piv, best);
            bool clean = true;
            for (std::size_t k = piv + 1; k < cols; ++k) {
                if (a(i, k) == 0)
                    continue;
                T q = a(i, k) / a(i, piv);
                a.add_col_multiple(k, piv, -q);
                if (a(i, k) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (a(i, piv) == 0)
            continue;
        if (a(i, piv) < 0)
            a.negate_col(piv);
        for (std::size_t k = 0; k < piv; ++k) {
            T q = floor_div(a(i, k), a(i, piv));
            if (q != 0)
                a.add_col_multiple(k, piv, -q);
        }
        ++piv;
    }
    return a.columns(0, piv);
}

/* Lexicographic order on (rows, cols, entries); used for canonical sorting. */
template <class T>
bool lex_less(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.rows() != b.rows())
        return a.rows() < b.rows();
    if (a.cols() != b.cols())
        return a.cols() < b.cols();
    return std::lexicographical_compare(a.data().begin(), a.data().end(), b.data().begin(), b.data().end());
}

RatMatrix to_rational(const IntMatrix& m);
/* Throws DomainError when some entry is not an integer. */
IntMatrix to_integer(const RatMatrix& m);
bool is_integral(const RatMatrix& m);
bool is_integral(const RatVector& v);
/* Least common multiple of all denominators (1 for an empty matrix). */
Integer common_denominator(const RatMatrix& m);

} // namespace ppav
