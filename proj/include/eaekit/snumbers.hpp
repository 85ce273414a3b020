#ifndef EAEKIT_SNUMBERS_HPP
#define EAEKIT_SNUMBERS_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "eaekit/norms.hpp"
#include "eaekit/optimize.hpp"
#include "eaekit/svd.hpp"

namespace eaekit {

enum class SKind { HilbertSingular, Approximation, Kolmogorov, Gelfand };

inline const char* to_string(SKind k)
{
    switch (k) {
    case SKind::HilbertSingular: return "HilbertSingular";
    case SKind::Approximation: return "Approximation";
    case SKind::Kolmogorov: return "Kolmogorov";
    case SKind::Gelfand: return "Gelfand";
    }
    return "?";
}

inline SKind parse_skind(const std::string& s)
{
    if (s == "hilbert" || s == "HilbertSingular" || s == "singular") return SKind::HilbertSingular;
    if (s == "approximation" || s == "Approximation") return SKind::Approximation;
    if (s == "kolmogorov" || s == "Kolmogorov") return SKind::Kolmogorov;
    if (s == "gelfand" || s == "Gelfand") return SKind::Gelfand;
    throw std::invalid_argument("unknown s-number kind: " + s);
}

struct SNumberResult {
    SKind       kind                  = SKind::HilbertSingular;
    std::size_t index                 = 1;
    double      value                 = 0.0;
    Method      method                = Method::Exact;
    double      certified_lower_bound = 0.0;
};

struct SNumberOptions {
    std::size_t   search_ceiling = 6;
    int           outer_starts   = 4;
    int           outer_evals    = 4000;
    NormOptions   inner{4, 120, 0x1111, true};
    NormOptions   final{32, 400, 0x2222, true};
    std::uint64_t seed = 0x5eed;
};

namespace detail {

// inf ‖y‖_q/‖y‖_2 over ℂ^m and sup ‖x‖_p/‖x‖_2 over ℂ^n
inline double hilbert_comparison_factor(std::size_t m, std::size_t n, LpExponent p, LpExponent q)
{
    const double alpha_q = std::pow(static_cast<double>(m), std::min(0.0, q.reciprocal() - 0.5));
    const double beta_p  = std::pow(static_cast<double>(n), std::max(0.0, p.reciprocal() - 0.5));
    return alpha_q / beta_p;
}

inline std::vector<double> pack(const Matrix& m)
{
    std::vector<double> v;
    v.reserve(2 * m.rows() * m.cols());
    for (const auto& z : m.data()) {
        v.push_back(z.real());
        v.push_back(z.imag());
    }
    return v;
}

inline Matrix unpack(std::span<const double> v, std::size_t rows, std::size_t cols)
{
    Matrix m(rows, cols);
    auto   d = m.data();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = scalar_t(v[2 * i], v[2 * i + 1]);
    return m;
}

// orthonormal basis of ker W (W has r rows, n columns); W is assumed of full row rank
inline Matrix kernel_basis(const Matrix& w)
{
    const std::size_t n = w.cols();
    const auto        s = svd(w);
    const auto        info = rank_info(s.singular_values, 1e-12);
    Matrix            b(n, n - info.rank);
    for (std::size_t j = info.rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) b(i, j - info.rank) = s.right_vectors(i, j);
    return b;
}

// indices of the r largest values
inline std::vector<std::size_t> top_indices(const std::vector<double>& v, std::size_t r)
{
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
    idx.resize(std::min(r, idx.size()));
    return idx;
}

//
// a_k: inf ‖A − F‖ over rank F < k, F = U·V with U m×(k−1), V (k−1)×n
//
inline double approximation_search(const MatrixOperator& op, std::size_t k, const SNumberOptions& o)
{
    const std::size_t m = op.rows(), n = op.cols(), r = k - 1;
    auto              split = [&](const std::vector<double>& th) {
        return unpack(std::span<const double>(th).subspan(0, 2 * m * r), m, r) *
               unpack(std::span<const double>(th).subspan(2 * m * r), r, n);
    };
    auto f = [&](const std::vector<double>& th) {
        return op_norm(op.with_matrix(op.a - split(th)), o.inner).value;
    };

    std::vector<std::vector<double>> starts;
    {
        // truncated SVD: the ℓ^2 optimum
        const auto s = svd(op.a);
        Matrix     u(m, r), v(r, n);
        for (std::size_t c = 0; c < r; ++c) {
            for (std::size_t i = 0; i < m; ++i) u(i, c) = s.left_vectors(i, c) * s.singular_values[c];
            for (std::size_t j = 0; j < n; ++j) v(c, j) = std::conj(s.right_vectors(j, c));
        }
        auto th = pack(u);
        auto tv = pack(v);
        th.insert(th.end(), tv.begin(), tv.end());
        starts.push_back(th);
    }
    {
        // keep the r heaviest columns exactly
        std::vector<double> col_norms(n);
        for (std::size_t j = 0; j < n; ++j) col_norms[j] = lp_norm(op.a.column(j), op.p_cod);
        const auto cols = top_indices(col_norms, r);
        Matrix     u(m, r), v(r, n);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (std::size_t i = 0; i < m; ++i) u(i, c) = op.a(i, cols[c]);
            v(c, cols[c]) = 1.0;
        }
        auto th = pack(u);
        auto tv = pack(v);
        th.insert(th.end(), tv.begin(), tv.end());
        starts.push_back(th);
    }
    for (int s = 2; s < o.outer_starts; ++s) {
        Rng  rng(derive_seed(o.seed, static_cast<std::uint64_t>(s)));
        auto th = starts[static_cast<std::size_t>(s) % 2];
        for (auto& x : th) x += 0.3 * rng.normal();
        starts.push_back(std::move(th));
    }

    double best = op_norm(op, o.final).value;  // F = 0
    for (std::size_t s = 0; s < starts.size(); ++s) {
        PatternSearchOptions po;
        po.max_evals = o.outer_evals;
        po.seed      = derive_seed(o.seed, 1000 + s);
        const auto res = pattern_minimize(f, starts[s], po);
        best           = std::min(best, op_norm(op.with_matrix(op.a - split(res.x)), o.final).value);
    }
    return best;
}

//
// c_k: inf over W ((k−1)×n) of ‖A restricted to ker W‖
//
inline double gelfand_search(const MatrixOperator& op, std::size_t k, const SNumberOptions& o)
{
    const std::size_t n = op.cols(), r = k - 1;
    auto f = [&](const std::vector<double>& th) {
        const Matrix b = kernel_basis(unpack(th, r, n));
        return restricted_norm(op, b, o.inner).value;
    };

    std::vector<std::vector<double>> starts;
    {
        const auto s = svd(op.a);
        Matrix     w(r, n);
        for (std::size_t c = 0; c < r; ++c)
            for (std::size_t j = 0; j < n; ++j) w(c, j) = std::conj(s.right_vectors(j, c));
        starts.push_back(pack(w));
    }
    {
        // annihilate the r heaviest coordinates
        std::vector<double> col_norms(n);
        for (std::size_t j = 0; j < n; ++j) col_norms[j] = lp_norm(op.a.column(j), op.p_cod);
        const auto cols = top_indices(col_norms, r);
        Matrix     w(r, n);
        for (std::size_t c = 0; c < cols.size(); ++c) w(c, cols[c]) = 1.0;
        starts.push_back(pack(w));
    }
    for (int s = 2; s < o.outer_starts; ++s) {
        Rng  rng(derive_seed(o.seed, static_cast<std::uint64_t>(s)));
        auto th = starts[static_cast<std::size_t>(s) % 2];
        for (auto& x : th) x += 0.3 * rng.normal();
        starts.push_back(std::move(th));
    }

    double best = op_norm(op, o.final).value;
    for (std::size_t s = 0; s < starts.size(); ++s) {
        PatternSearchOptions po;
        po.max_evals   = o.outer_evals;
        po.seed        = derive_seed(o.seed, 2000 + s);
        const auto res = pattern_minimize(f, starts[s], po);
        best = std::min(best, restricted_norm(op, kernel_basis(unpack(res.x, r, n)), o.final).value);
    }
    return best;
}

}  // namespace detail

//
// k-th s-number of the given kind. Hilbert operators are exact (σ_k);
// otherwise `value` is a searched upper bound and the certified lower bound
// is σ_k scaled by the ℓ^p/ℓ^2 comparison constants.
//
inline SNumberResult s_number(const MatrixOperator& op, SKind kind, std::size_t k, const SNumberOptions& opts = {})
{
    const std::size_t dmin = std::min(op.rows(), op.cols());
    if (k < 1 || k > dmin + 1) throw std::invalid_argument("s_number: index out of range");

    SNumberResult res;
    res.kind  = kind;
    res.index = k;

    const auto   sigma   = singular_values(op.a);
    const double sigma_k = k <= dmin ? sigma[k - 1] : 0.0;

    if (kind == SKind::HilbertSingular || op.hilbert()) {
        res.value                 = sigma_k;
        res.certified_lower_bound = sigma_k;
        res.method                = Method::Exact;
        return res;
    }
    if (op.rows() > opts.search_ceiling || op.cols() > opts.search_ceiling)
        throw std::invalid_argument("s_number: dimension above the search ceiling");

    if (k > dmin) {
        res.value  = 0.0;
        res.method = Method::Exact;
        return res;
    }

    const double lower = detail::hilbert_comparison_factor(op.rows(), op.cols(), op.p_dom, op.p_cod) * sigma_k;
    if (k == 1) {
        // all three kinds reduce to the operator norm
        const auto nr = op_norm(op, opts.final);
        res.value     = nr.value;
        res.method    = nr.method;
    } else {
        res.method = Method::Search;
        switch (kind) {
        case SKind::Approximation: res.value = detail::approximation_search(op, k, opts); break;
        case SKind::Gelfand: res.value = detail::gelfand_search(op, k, opts); break;
        case SKind::Kolmogorov: {
            // d_k(A) = c_k(A^*) on the dual exponents
            const MatrixOperator dual(op.a.adjoint(), op.p_cod.dual(), op.p_dom.dual());
            const std::size_t    dk = std::min(dual.rows(), dual.cols());
            res.value = k > dk ? 0.0 : detail::gelfand_search(dual, k, opts);
            break;
        }
        case SKind::HilbertSingular: break;
        }
    }
    // the searched value can only be an over-estimate of the true s-number
    // up to the inner norm search; the comparison bound is rigorous
    res.value                 = std::max(res.value, lower);
    res.certified_lower_bound = lower;
    return res;
}

inline std::vector<SNumberResult> s_numbers(const MatrixOperator& op, SKind kind, const SNumberOptions& opts = {})
{
    std::vector<SNumberResult> out;
    for (std::size_t k = 1; k <= std::min(op.rows(), op.cols()); ++k) out.push_back(s_number(op, kind, k, opts));
    return out;
}

}  // namespace eaekit

#endif  // EAEKIT_SNUMBERS_HPP
