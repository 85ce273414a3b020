#ifndef EAEKIT_MATRIX_HPP
#define EAEKIT_MATRIX_HPP

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace eaekit {

using scalar_t = std::complex<double>;
using cvector = std::vector<scalar_t>;

//
// dense complex matrix, row-major
//
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, scalar_t(0.0)) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<scalar_t> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("Matrix: data size does not match shape");
    }

    // real row lists, mostly for tests and literals
    Matrix(std::initializer_list<std::initializer_list<double>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("Matrix: ragged initializer");
            for (double v : r) data_.emplace_back(v, 0.0);
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    static Matrix diagonal(std::span<const double> d)
    {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    static Matrix diagonal(std::initializer_list<double> d)
    {
        std::vector<double> v(d);
        return diagonal(std::span<const double>(v));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool        square() const noexcept { return rows_ == cols_; }
    bool        empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    scalar_t&       operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const scalar_t& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const scalar_t> data() const noexcept { return data_; }
    std::span<scalar_t>       data() noexcept { return data_; }

    bool all_finite() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const scalar_t& z) {
            return std::isfinite(z.real()) && std::isfinite(z.imag());
        });
    }

    Matrix adjoint() const
    {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        if (r0 + nr > rows_ || c0 + nc > cols_)
            throw std::out_of_range("Matrix::block out of range");
        Matrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b)
    {
        if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
            throw std::out_of_range("Matrix::set_block out of range");
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    cvector column(std::size_t j) const
    {
        cvector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    cvector row(std::size_t i) const
    {
        return cvector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                       data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    Matrix& operator+=(const Matrix& o)
    {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o)
    {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }

    Matrix& operator*=(scalar_t c)
    {
        for (auto& z : data_) z *= c;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, scalar_t c) { return a *= c; }
    friend Matrix operator*(scalar_t c, Matrix a) { return a *= c; }
    friend Matrix operator-(Matrix a) { return a *= -1.0; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: inner dimensions differ");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const scalar_t aik = a(i, k);
                if (aik == scalar_t(0.0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend cvector operator*(const Matrix& a, std::span<const scalar_t> x)
    {
        if (a.cols_ != x.size()) throw std::invalid_argument("Matrix-vector product: size mismatch");
        cvector y(a.rows_, scalar_t(0.0));
        for (std::size_t i = 0; i < a.rows_; ++i) {
            scalar_t acc = 0.0;
            for (std::size_t j = 0; j < a.cols_; ++j) acc += a(i, j) * x[j];
            y[i] = acc;
        }
        return y;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    void check_same_shape(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t           rows_ = 0;
    std::size_t           cols_ = 0;
    std::vector<scalar_t> data_;
};

inline double frobenius_norm(const Matrix& a)
{
    double s = 0.0;
    for (const auto& z : a.data()) s += std::norm(z);
    return std::sqrt(s);
}

inline double max_abs(const Matrix& a)
{
    double m = 0.0;
    for (const auto& z : a.data()) m = std::max(m, std::abs(z));
    return m;
}

// diag(A, B)
inline Matrix block_diag(const Matrix& a, const Matrix& b)
{
    Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), a.cols(), b);
    return r;
}

// [[A, B], [C, D]]
inline Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d)
{
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
        throw std::invalid_argument("block2x2: inconsistent block shapes");
    Matrix r(a.rows() + c.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    r.set_block(a.rows(), 0, c);
    r.set_block(a.rows(), a.cols(), d);
    return r;
}

inline double vector_norm2(std::span<const scalar_t> x)
{
    double s = 0.0;
    for (const auto& z : x) s += std::norm(z);
    return std::sqrt(s);
}

inline scalar_t dot(std::span<const scalar_t> x, std::span<const scalar_t> y)  // x^* y
{
    scalar_t s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

// residual relative to max(1, ‖reference‖_F)
inline double relative_residual(const Matrix& got, const Matrix& reference)
{
    return frobenius_norm(got - reference) / std::max(1.0, frobenius_norm(reference));
}

}  // namespace eaekit

#endif  // EAEKIT_MATRIX_HPP
