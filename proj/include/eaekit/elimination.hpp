#ifndef EAEKIT_ELIMINATION_HPP
#define EAEKIT_ELIMINATION_HPP

#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eaekit/matrix.hpp"

namespace eaekit {

//
// A = left · diag(I_r, 0) · right with left, right invertible
//
struct RankNormalForm {
    Matrix      left;
    Matrix      right;
    std::size_t rank = 0;
};

//
// Gaussian elimination with full pivoting on a square matrix, stopped after
// `rank` pivots; the trailing Schur complement is discarded (it is below the
// rank cut by assumption).
//
//   Pr A Pc = L U,  L unit lower, U = [[U11, U12], [0, *]]
//   A ≈ (Pr^T L) · diag(I_r, 0) · ([[U11, U12], [0, I]] Pc^T)
//
inline RankNormalForm rank_normal_form(const Matrix& a, std::size_t rank)
{
    if (!a.square()) throw std::invalid_argument("rank_normal_form: matrix not square");
    const std::size_t n = a.rows();
    if (rank > n) throw std::invalid_argument("rank_normal_form: rank exceeds size");

    Matrix                   w = a;
    Matrix                   l = Matrix::identity(n);
    std::vector<std::size_t> rp(n), cp(n);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);

    for (std::size_t k = 0; k < rank; ++k) {
        std::size_t pi = k, pj = k;
        double      best = -1.0;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (std::abs(w(i, j)) > best) {
                    best = std::abs(w(i, j));
                    pi   = i;
                    pj   = j;
                }
        if (best == 0.0) throw std::runtime_error("rank_normal_form: zero pivot before declared rank");

        if (pi != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(pi, j));
            for (std::size_t j = 0; j < k; ++j) std::swap(l(k, j), l(pi, j));
            std::swap(rp[k], rp[pi]);
        }
        if (pj != k) {
            for (std::size_t i = 0; i < n; ++i) std::swap(w(i, k), w(i, pj));
            std::swap(cp[k], cp[pj]);
        }

        const scalar_t piv = w(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const scalar_t f = w(i, k) / piv;
            l(i, k)          = f;
            w(i, k)          = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) w(i, j) -= f * w(k, j);
        }
    }

    // right factor before undoing the column permutation
    Matrix u = Matrix::identity(n);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i; j < n; ++j) u(i, j) = w(i, j);

    RankNormalForm out;
    out.rank  = rank;
    out.left  = Matrix(n, n);
    out.right = Matrix(n, n);
    // Pr^T L : row rp[i] of the result is row i of L
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.left(rp[i], j) = l(i, j);
    // U Pc^T : column cp[j] of the result is column j of U
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.right(i, cp[j]) = u(i, j);
    return out;
}

inline Matrix normal_form_core(std::size_t n, std::size_t rank)
{
    Matrix nf(n, n);
    for (std::size_t i = 0; i < rank; ++i) nf(i, i) = 1.0;
    return nf;
}

//
// LU with partial pivoting; solve and inverse
//
class LuDecomposition {
public:
    explicit LuDecomposition(const Matrix& a) : lu_(a), perm_(a.rows())
    {
        if (!a.square()) throw std::invalid_argument("LuDecomposition: matrix not square");
        const std::size_t n = a.rows();
        std::iota(perm_.begin(), perm_.end(), 0);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t p    = k;
            double      best = std::abs(lu_(k, k));
            for (std::size_t i = k + 1; i < n; ++i)
                if (std::abs(lu_(i, k)) > best) {
                    best = std::abs(lu_(i, k));
                    p    = i;
                }
            if (best == 0.0) {
                singular_ = true;
                continue;
            }
            if (p != k) {
                for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
                std::swap(perm_[k], perm_[p]);
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                lu_(i, k) /= lu_(k, k);
                const scalar_t f = lu_(i, k);
                for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
            }
        }
    }

    bool singular() const noexcept { return singular_; }

    Matrix solve(const Matrix& b) const
    {
        if (singular_) throw std::runtime_error("LuDecomposition::solve: singular matrix");
        const std::size_t n = lu_.rows();
        if (b.rows() != n) throw std::invalid_argument("LuDecomposition::solve: size mismatch");
        Matrix x(n, b.cols());
        for (std::size_t c = 0; c < b.cols(); ++c) {
            cvector y(n);
            for (std::size_t i = 0; i < n; ++i) {
                scalar_t s = b(perm_[i], c);
                for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * y[j];
                y[i] = s;
            }
            for (std::size_t ii = n; ii-- > 0;) {
                scalar_t s = y[ii];
                for (std::size_t j = ii + 1; j < n; ++j) s -= lu_(ii, j) * x(j, c);
                x(ii, c) = s / lu_(ii, ii);
            }
        }
        return x;
    }

    Matrix inverse() const { return solve(Matrix::identity(lu_.rows())); }

private:
    Matrix                   lu_;
    std::vector<std::size_t> perm_;
    bool                     singular_ = false;
};

inline Matrix inverse(const Matrix& a) { return LuDecomposition(a).inverse(); }

}  // namespace eaekit

#endif  // EAEKIT_ELIMINATION_HPP
