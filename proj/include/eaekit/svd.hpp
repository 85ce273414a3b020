#ifndef EAEKIT_SVD_HPP
#define EAEKIT_SVD_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "eaekit/matrix.hpp"

namespace eaekit {

struct SvdResult {
    Matrix              left_vectors;     // m×m unitary
    Matrix              right_vectors;    // n×n unitary
    std::vector<double> singular_values;  // min(m,n), non-increasing
    int                 sweeps = 0;
};

namespace detail {

// Complete the first `k` orthonormal columns of q (m×m) to a unitary basis
// by Gram-Schmidt against the canonical basis, twice for stability.
inline void complete_unitary(Matrix& q, std::size_t k)
{
    const std::size_t m    = q.rows();
    std::size_t       have = k;
    for (std::size_t e = 0; e < m && have < m; ++e) {
        cvector v(m, 0.0);
        v[e] = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t c = 0; c < have; ++c) {
                scalar_t proj = 0.0;
                for (std::size_t i = 0; i < m; ++i) proj += std::conj(q(i, c)) * v[i];
                for (std::size_t i = 0; i < m; ++i) v[i] -= proj * q(i, c);
            }
        const double nv = vector_norm2(v);
        if (nv < 1e-8) continue;
        for (std::size_t i = 0; i < m; ++i) q(i, have) = v[i] / nv;
        ++have;
    }
}

//
// one-sided (Hestenes) Jacobi on the columns of a (m ≥ n)
//
inline SvdResult jacobi_tall(const Matrix& a)
{
    const std::size_t m = a.rows(), n = a.cols();
    Matrix            w = a;
    Matrix            v = Matrix::identity(n);
    const double      eps = std::numeric_limits<double>::epsilon();
    int               sweep = 0;

    for (; sweep < 80; ++sweep) {
        bool rotated = false;
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                double   alpha = 0.0, beta = 0.0;
                scalar_t gamma = 0.0;
                for (std::size_t r = 0; r < m; ++r) {
                    alpha += std::norm(w(r, i));
                    beta += std::norm(w(r, j));
                    gamma += std::conj(w(r, i)) * w(r, j);
                }
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= eps * std::sqrt(alpha * beta)) continue;
                rotated = true;

                // phase so that a_i^* (a_j e^{-iφ}) is real positive
                const scalar_t phase = std::conj(gamma) / g;
                const double   zeta  = (beta - alpha) / (2.0 * g);
                const double   t     = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double   c     = 1.0 / std::sqrt(1.0 + t * t);
                const double   s     = c * t;

                for (std::size_t r = 0; r < m; ++r) {
                    const scalar_t wi = w(r, i);
                    const scalar_t wj = w(r, j) * phase;
                    w(r, i)           = c * wi - s * wj;
                    w(r, j)           = s * wi + c * wj;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const scalar_t vi = v(r, i);
                    const scalar_t vj = v(r, j) * phase;
                    v(r, i)           = c * vi - s * vj;
                    v(r, j)           = s * vi + c * vj;
                }
            }
        if (!rotated) break;
    }

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t r = 0; r < m; ++r) s += std::norm(w(r, j));
        sigma[j] = std::sqrt(s);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    SvdResult res;
    res.sweeps = sweep;
    res.singular_values.resize(n);
    res.left_vectors  = Matrix(m, m);
    res.right_vectors = Matrix(n, n);

    const double smax  = n > 0 ? sigma[order[0]] : 0.0;
    std::size_t  nonzero = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        res.singular_values[k] = sigma[j];
        for (std::size_t r = 0; r < n; ++r) res.right_vectors(r, k) = v(r, j);
        if (sigma[j] > 0.0 && sigma[j] > smax * eps * static_cast<double>(std::max(m, n))) {
            for (std::size_t r = 0; r < m; ++r) res.left_vectors(r, k) = w(r, j) / sigma[j];
            nonzero = k + 1;
        }
    }
    complete_unitary(res.left_vectors, nonzero);
    return res;
}

}  // namespace detail

//
// A = U Σ V^*, one-sided Jacobi; full unitary factors
//
inline SvdResult svd(const Matrix& a)
{
    if (a.rows() == 0 || a.cols() == 0) throw std::invalid_argument("svd: empty matrix");
    if (!a.all_finite()) throw std::invalid_argument("svd: non-finite entry");

    if (a.rows() >= a.cols()) return detail::jacobi_tall(a);

    // wide: A^* = U' Σ V'^*  ⇒  A = V' Σ U'^*
    SvdResult t = detail::jacobi_tall(a.adjoint());
    std::swap(t.left_vectors, t.right_vectors);
    return t;
}

inline std::vector<double> singular_values(const Matrix& a) { return svd(a).singular_values; }

inline double spectral_norm(const Matrix& a)
{
    if (a.empty()) return 0.0;
    return svd(a).singular_values.front();
}

// U Σ V^* from the leading min(m,n) columns
inline Matrix reconstruct(const SvdResult& s)
{
    const std::size_t m = s.left_vectors.rows(), n = s.right_vectors.rows();
    Matrix            r(m, n);
    for (std::size_t k = 0; k < s.singular_values.size(); ++k) {
        const double sk = s.singular_values[k];
        if (sk == 0.0) continue;
        for (std::size_t i = 0; i < m; ++i) {
            const scalar_t ui = s.left_vectors(i, k) * sk;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += ui * std::conj(s.right_vectors(j, k));
        }
    }
    return r;
}

//
// numerical rank with a relative cut; the gap around the cut is reported
//
struct RankInfo {
    std::size_t rank           = 0;
    double      cut            = 0.0;  // absolute threshold used
    double      smallest_kept  = 0.0;  // σ_r (0 when rank = 0)
    double      largest_dropped = 0.0; // σ_{r+1} (0 when full rank)
    bool        borderline     = false;  // σ_r within 10× of the cut
};

inline RankInfo rank_info(std::span<const double> sigma, double rel_tol)
{
    RankInfo info;
    if (sigma.empty()) return info;
    info.cut = rel_tol * sigma.front();
    for (double s : sigma)
        if (s > info.cut) ++info.rank;
    if (info.rank > 0) info.smallest_kept = sigma[info.rank - 1];
    if (info.rank < sigma.size()) info.largest_dropped = sigma[info.rank];
    info.borderline = info.rank > 0 && info.smallest_kept < 10.0 * info.cut;
    return info;
}

inline RankInfo rank_info(const Matrix& a, double rel_tol)
{
    if (a.empty()) return {};
    auto s = singular_values(a);
    return rank_info(s, rel_tol);
}

inline std::size_t numerical_rank(const Matrix& a, double rel_tol = 1e-9) { return rank_info(a, rel_tol).rank; }

// σ_min / σ_max of a square matrix; 0 for singular or empty
inline double reciprocal_condition(const Matrix& a)
{
    if (!a.square()) throw std::invalid_argument("reciprocal_condition: matrix not square");
    if (a.empty()) return 1.0;
    auto s = singular_values(a);
    if (s.front() == 0.0) return 0.0;
    return s.back() / s.front();
}

}  // namespace eaekit

#endif  // EAEKIT_SVD_HPP
