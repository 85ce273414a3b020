#ifndef EAEKIT_NORMS_HPP
#define EAEKIT_NORMS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "eaekit/operator.hpp"
#include "eaekit/random.hpp"
#include "eaekit/svd.hpp"

namespace eaekit {

enum class Method { Exact, Search };

inline const char* to_string(Method m) { return m == Method::Exact ? "Exact" : "Search"; }

inline double lp_norm(std::span<const scalar_t> x, LpExponent p)
{
    if (p.is_infinite()) {
        double m = 0.0;
        for (const auto& z : x) m = std::max(m, std::abs(z));
        return m;
    }
    const double e = p.value();
    if (e == 1.0) {
        double s = 0.0;
        for (const auto& z : x) s += std::abs(z);
        return s;
    }
    if (e == 2.0) return vector_norm2(x);
    // scaled to avoid overflow in |x|^p
    double amax = 0.0;
    for (const auto& z : x) amax = std::max(amax, std::abs(z));
    if (amax == 0.0) return 0.0;
    double s = 0.0;
    for (const auto& z : x) s += std::pow(std::abs(z) / amax, e);
    return amax * std::pow(s, 1.0 / e);
}

namespace detail {

inline scalar_t unit_phase(scalar_t z)
{
    const double a = std::abs(z);
    return a == 0.0 ? scalar_t(1.0) : z / a;
}

//
// norming functional: the vector g with ‖g‖_{p'} = 1 and ⟨g, x⟩ = ‖x‖_p
//
inline cvector norming_functional(std::span<const scalar_t> x, LpExponent p)
{
    cvector      g(x.size(), 0.0);
    const double nx = lp_norm(x, p);
    if (nx == 0.0) return g;
    if (p.is_infinite()) {
        std::size_t k = 0;
        for (std::size_t i = 1; i < x.size(); ++i)
            if (std::abs(x[i]) > std::abs(x[k])) k = i;
        g[k] = unit_phase(x[k]);
        return g;
    }
    const double e = p.value();
    if (e == 1.0) {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != scalar_t(0.0)) g[i] = unit_phase(x[i]);
        return g;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double a = std::abs(x[i]);
        if (a == 0.0) continue;
        g[i] = unit_phase(x[i]) * std::pow(a / nx, e - 1.0);
    }
    return g;
}

// Boyd's fixed-point step for ‖A‖_{p→q}: x ← dual(A^* dual(Ax))
inline cvector power_step(const Matrix& a, const Matrix& a_adj, std::span<const scalar_t> x, LpExponent p, LpExponent q)
{
    const cvector y = a * x;
    const cvector g = norming_functional(y, q);
    const cvector z = a_adj * std::span<const scalar_t>(g);
    // maximiser of Re⟨z, x⟩ on the ℓ^p sphere is the norming functional of z in ℓ^{p'}
    return norming_functional(z, p.dual());
}

inline double ratio(const Matrix& a, std::span<const scalar_t> x, LpExponent p, LpExponent q)
{
    const double nx = lp_norm(x, p);
    if (nx == 0.0) return 0.0;
    return lp_norm(a * x, q) / nx;
}

inline cvector normalized(cvector x, LpExponent p)
{
    const double nx = lp_norm(x, p);
    if (nx > 0.0)
        for (auto& z : x) z /= nx;
    return x;
}

}  // namespace detail

struct NormOptions {
    int           starts     = 32;
    int           iterations = 400;
    std::uint64_t seed       = 0x5eed;
    bool          grid       = true;
};

struct NormResult {
    double  value = 0.0;
    cvector witness;  // unit vector in ℓ^{p_dom} attaining `value`
    Method  method = Method::Exact;
};

//
// ‖A‖_{p_dom → p_cod}; exact where a closed form exists, otherwise a
// multi-start power search whose witness certifies `value` as a lower bound
//
inline NormResult op_norm(const MatrixOperator& op, const NormOptions& opts = {})
{
    const Matrix&     a = op.a;
    const std::size_t n = a.cols();
    const LpExponent  p = op.p_dom, q = op.p_cod;
    NormResult        out;
    out.witness.assign(n, 0.0);
    if (n == 0 || a.rows() == 0) return out;

    if (op.hilbert()) {
        const auto s = svd(a);
        out.witness  = s.right_vectors.column(0);
        out.value    = detail::ratio(a, out.witness, p, q);
        out.method   = Method::Exact;
        return out;
    }

    if (p.is(1.0)) {
        // extreme points of the ℓ^1 ball are unimodular multiples of e_j
        for (std::size_t j = 0; j < n; ++j) {
            cvector e(n, 0.0);
            e[j]           = 1.0;
            const double v = detail::ratio(a, e, p, q);
            if (v > out.value || j == 0) {
                out.value   = v;
                out.witness = e;
            }
        }
        out.method = Method::Exact;
        return out;
    }

    if (q.is_infinite()) {
        // max over rows of the dual norm, attained by the norming functional of conj(row)
        for (std::size_t i = 0; i < a.rows(); ++i) {
            cvector r = a.row(i);
            for (auto& z : r) z = std::conj(z);
            cvector x = detail::norming_functional(r, p.dual());
            if (lp_norm(x, p) == 0.0) x[0] = 1.0;
            const double v = detail::ratio(a, x, p, q);
            if (v > out.value || i == 0) {
                out.value   = v;
                out.witness = detail::normalized(x, p);
            }
        }
        out.value  = detail::ratio(a, out.witness, p, q);
        out.method = Method::Exact;
        return out;
    }

    const Matrix         a_adj = a.adjoint();
    std::vector<cvector> starts;

    if (opts.grid) {
        for (std::size_t j = 0; j < n; ++j) {
            cvector e(n, 0.0);
            e[j] = 1.0;
            starts.push_back(e);
        }
        if (n <= 10) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (n - 1)); ++mask) {
                cvector s(n, 1.0);
                for (std::size_t j = 1; j < n; ++j)
                    if (mask & (std::uint64_t(1) << (j - 1))) s[j] = -1.0;
                starts.push_back(s);
            }
        }
        starts.push_back(svd(a).right_vectors.column(0));
    }
    for (int k = 0; k < opts.starts; ++k) {
        Rng r(derive_seed(opts.seed, static_cast<std::uint64_t>(k)));
        starts.push_back(r.complex_vector(n));
    }

    out.method = Method::Search;
    out.value  = -1.0;
    for (const auto& s0 : starts) {
        cvector x = detail::normalized(s0, p);
        double  v = detail::ratio(a, x, p, q);
        for (int it = 0; it < opts.iterations; ++it) {
            cvector nx = detail::power_step(a, a_adj, x, p, q);
            if (lp_norm(nx, p) == 0.0) break;
            const double nv = detail::ratio(a, nx, p, q);
            if (!(nv > v * (1.0 + 1e-15))) {
                if (nv > v) {
                    x = std::move(nx);
                    v = nv;
                }
                break;
            }
            x = std::move(nx);
            v = nv;
        }
        if (v > out.value) {
            out.value   = v;
            out.witness = x;
        }
    }
    out.witness = detail::normalized(out.witness, p);
    out.value   = detail::ratio(a, out.witness, p, q);
    return out;
}

inline double op_norm_value(const MatrixOperator& op, const NormOptions& opts = {}) { return op_norm(op, opts).value; }

//
// sup over x ∈ span(basis) of ‖Ax‖_q / ‖x‖_p; basis columns orthonormal in ℓ^2
//
inline NormResult restricted_norm(const MatrixOperator& op, const Matrix& basis, const NormOptions& opts = {})
{
    const std::size_t d = basis.cols();
    NormResult        out;
    out.method = Method::Search;
    out.witness.assign(op.cols(), 0.0);
    if (d == 0) return out;

    const Matrix ab     = op.a * basis;
    const Matrix ab_adj = ab.adjoint();
    const Matrix b_adj  = basis.adjoint();
    const auto   p = op.p_dom, q = op.p_cod;

    auto objective = [&](std::span<const scalar_t> y) {
        const cvector x  = basis * y;
        const double  nx = lp_norm(x, p);
        return nx == 0.0 ? 0.0 : lp_norm(ab * y, q) / nx;
    };

    std::vector<cvector> starts;
    for (std::size_t j = 0; j < d; ++j) {
        cvector e(d, 0.0);
        e[j] = 1.0;
        starts.push_back(e);
    }
    if (opts.grid) starts.push_back(svd(ab).right_vectors.column(0));
    for (int k = 0; k < opts.starts; ++k) {
        Rng r(derive_seed(opts.seed, static_cast<std::uint64_t>(k)));
        starts.push_back(r.complex_vector(d));
    }

    double  best = -1.0;
    cvector best_y;
    for (auto y : starts) {
        double ny = vector_norm2(y);
        for (auto& z : y) z /= ny;
        double v    = objective(y);
        double step = 0.5;
        for (int it = 0; it < opts.iterations && step > 1e-13; ++it) {
            const cvector x  = basis * std::span<const scalar_t>(y);
            const cvector ax = ab * std::span<const scalar_t>(y);
            const double  nax = lp_norm(ax, q), nx = lp_norm(x, p);
            if (nax == 0.0 || nx == 0.0) break;
            // gradient of log‖ABy‖_q − log‖By‖_p in the conjugate direction
            const cvector gq = detail::norming_functional(ax, q);
            const cvector gp = detail::norming_functional(x, p);
            const cvector u1 = ab_adj * std::span<const scalar_t>(gq);
            const cvector u2 = b_adj * std::span<const scalar_t>(gp);
            cvector       grad(d);
            for (std::size_t i = 0; i < d; ++i) grad[i] = u1[i] / nax - u2[i] / nx;
            const double gn = vector_norm2(grad);
            if (gn == 0.0) break;

            bool accepted = false;
            while (step > 1e-13) {
                cvector cand(d);
                for (std::size_t i = 0; i < d; ++i) cand[i] = y[i] + step * grad[i] / gn;
                const double cn = vector_norm2(cand);
                for (auto& z : cand) z /= cn;
                const double cv = objective(cand);
                if (cv > v) {
                    y        = std::move(cand);
                    v        = cv;
                    step     = std::min(1.0, step * 1.5);
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if (!accepted) break;
        }
        if (v > best) {
            best   = v;
            best_y = y;
        }
    }
    out.witness = detail::normalized(basis * std::span<const scalar_t>(best_y), p);
    out.value   = detail::ratio(op.a, out.witness, p, q);
    return out;
}

//
// ‖id : ℓ^p_n → ℓ^q_n‖ = n^{max(0, 1/q − 1/p)}
//
struct IdentityNorm {
    double                value = 1.0;
    std::optional<double> searched;  // op_norm cross-check for n <= 6
    bool                  agrees = true;
};

inline IdentityNorm lp_identity_norm(std::size_t n, LpExponent p, LpExponent q)
{
    if (n == 0) throw std::invalid_argument("lp_identity_norm: n must be positive");
    IdentityNorm out;
    const double expo = std::max(0.0, q.reciprocal() - p.reciprocal());
    out.value         = std::pow(static_cast<double>(n), expo);
    if (n <= 6) {
        const double s = op_norm(MatrixOperator(Matrix::identity(n), p, q)).value;
        out.searched   = s;
        out.agrees     = std::abs(s - out.value) <= 1e-6;
    }
    return out;
}

}  // namespace eaekit

#endif  // EAEKIT_NORMS_HPP
