// Reference computations for the tests. Written independently of the
// library's numerics: they only share the Matrix container.
#ifndef EAEKIT_TESTS_ORACLES_HPP
#define EAEKIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "eaekit/matrix.hpp"

namespace oracle {

using eaekit::Matrix;
using Real = std::vector<std::vector<double>>;

// real symmetric embedding of the Hermitian Jordan–Wielandt matrix [[0, A], [A*, 0]];
// its spectrum is {±σ_i} with every value doubled
inline Real jordan_wielandt(const Matrix& a)
{
    const std::size_t m = a.rows(), n = a.cols(), h = m + n;
    std::vector<std::vector<std::complex<double>>> c(h, std::vector<std::complex<double>>(h));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            c[i][m + j] = a(i, j);
            c[m + j][i] = std::conj(a(i, j));
        }
    Real r(2 * h, std::vector<double>(2 * h, 0.0));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            r[i][j]         = c[i][j].real();
            r[i][j + h]     = -c[i][j].imag();
            r[i + h][j]     = c[i][j].imag();
            r[i + h][j + h] = c[i][j].real();
        }
    return r;
}

// Householder reduction to tridiagonal form (diagonal d, off-diagonal e)
inline void tridiagonalize(Real a, std::vector<double>& d, std::vector<double>& e)
{
    const std::size_t n = a.size();
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double alpha = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) alpha += a[i][k] * a[i][k];
        alpha = std::sqrt(alpha);
        if (alpha == 0.0) continue;
        if (a[k + 1][k] > 0) alpha = -alpha;
        std::vector<double> v(n, 0.0);
        v[k + 1] = a[k + 1][k] - alpha;
        for (std::size_t i = k + 2; i < n; ++i) v[i] = a[i][k];
        double vn = 0.0;
        for (double x : v) vn += x * x;
        if (vn == 0.0) continue;
        // A ← (I − 2vvᵀ/vᵀv) A (I − 2vvᵀ/vᵀv)
        std::vector<double> p(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p[i] += a[i][j] * v[j];
        for (double& x : p) x *= 2.0 / vn;
        double vp = 0.0;
        for (std::size_t i = 0; i < n; ++i) vp += v[i] * p[i];
        std::vector<double> q(n);
        for (std::size_t i = 0; i < n; ++i) q[i] = p[i] - (vp / vn) * v[i];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= v[i] * q[j] + q[i] * v[j];
    }
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = a[i][i];
    for (std::size_t i = 1; i < n; ++i) e[i] = a[i][i - 1];
}

// Sturm count: number of eigenvalues of the tridiagonal matrix below x
inline std::size_t sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x)
{
    std::size_t count = 0;
    double      q     = 1.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        q = d[i] - x - (i ? e[i] * e[i] / q : 0.0);
        if (q == 0.0) q = -1e-300;
        if (q < 0) ++count;
    }
    return count;
}

// singular values (descending) via bisection on the Jordan–Wielandt spectrum
inline std::vector<double> singular_values(const Matrix& a)
{
    std::vector<double> d, e;
    tridiagonalize(jordan_wielandt(a), d, e);
    const std::size_t h     = d.size();
    double            bound = 0.0;
    for (std::size_t i = 0; i < h; ++i)
        bound = std::max(bound, std::abs(d[i]) + std::abs(e[i]) + (i + 1 < h ? std::abs(e[i + 1]) : 0.0));
    bound += 1.0;

    const std::size_t   k = std::min(a.rows(), a.cols());
    std::vector<double> out;
    for (std::size_t i = 0; i < k; ++i) {
        // the (2i+1)-th largest eigenvalue; eigenvalues come in equal pairs
        const std::size_t target = h - 2 * i - 1;  // ascending position of σ_{i+1}
        double            lo = -bound, hi = bound;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * bound; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (sturm_count(d, e, mid) >= target + 1) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push_back(std::max(0.0, 0.5 * (lo + hi)));
    }
    return out;
}

// numerical rank from the oracle spectrum, same relative cut as the library default
inline std::size_t rank(const Matrix& a, double rel = 1e-9)
{
    const auto  s = oracle::singular_values(a);
    std::size_t r = 0;
    for (double v : s)
        if (!s.empty() && v > rel * s.front()) ++r;
    return r;
}

inline double lp(const std::vector<double>& x, double p)
{
    if (std::isinf(p)) {
        double m = 0.0;
        for (double v : x) m = std::max(m, std::abs(v));
        return m;
    }
    double s = 0.0;
    for (double v : x) s += std::pow(std::abs(v), p);
    return std::pow(s, 1.0 / p);
}

// max ‖x‖_q / ‖x‖_p over a grid of the nonnegative orthant (norms only see |x_i|)
inline double identity_norm_grid(std::size_t n, double p, double q, int levels = 5)
{
    std::vector<int> idx(n, 0);
    double           best = 0.0;
    std::vector<double> x(n);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>(idx[i]) / (levels - 1);
        const double np = lp(x, p);
        if (np > 0) best = std::max(best, lp(x, q) / np);
        std::size_t i = 0;
        while (i < n && ++idx[i] == levels) idx[i++] = 0;
        if (i == n) break;
    }
    return best;
}

// ‖A‖_{p→p} of a real 3×3 matrix: angle grid on the sphere plus coordinate refinement
inline double real3_norm(const double a[3][3], double p)
{
    auto ratio = [&](double th, double ph) {
        const double x[3] = {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
        std::vector<double> xv(x, x + 3), y(3, 0.0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) y[i] += a[i][j] * x[j];
        return lp(y, p) / lp(xv, p);
    };
    const double pi = std::acos(-1.0);
    double       best = 0.0, bt = 0.0, bp = 0.0;
    const int    G    = 12;
    for (int i = 0; i <= G; ++i)
        for (int j = 0; j < 2 * G; ++j) {
            const double th = pi * i / G, ph = pi * j / G;
            const double v  = ratio(th, ph);
            if (v > best) best = v, bt = th, bp = ph;
        }
    for (double h = pi / G; h > 1e-9; h *= 0.5)
        for (bool moved = true; moved;) {
            moved = false;
            for (auto [dt, dp] : {std::pair{h, 0.0}, {-h, 0.0}, {0.0, h}, {0.0, -h}}) {
                const double v = ratio(bt + dt, bp + dp);
                if (v > best) best = v, bt += dt, bp += dp, moved = true;
            }
        }
    return best;
}

// inf over real rank-one F = u vᵀ of ‖D − F‖_{p→p}, D = diag(d), by multi-start Nelder–Mead
inline double rank1_approximation(const double d[3], double p, unsigned seed = 7)
{
    auto f = [&](const std::vector<double>& th) {
        double a[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a[i][j] = (i == j ? d[i] : 0.0) - th[i] * th[3 + j];
        return real3_norm(a, p);
    };
    std::mt19937 gen(seed);
    std::normal_distribution<double> nd;
    double best = f(std::vector<double>(6, 0.0));

    for (int start = 0; start < 6; ++start) {
        std::vector<std::vector<double>> s(7, std::vector<double>(6));
        for (auto& v : s[0]) v = nd(gen);
        if (start == 0) s[0] = {1, 0, 0, d[0], 0, 0};
        for (int k = 1; k < 7; ++k) {
            s[k] = s[0];
            s[k][k - 1] += 0.3;
        }
        std::vector<double> fv(7);
        for (int k = 0; k < 7; ++k) fv[k] = f(s[k]);
        for (int it = 0; it < 400; ++it) {
            std::vector<int> ord(7);
            for (int k = 0; k < 7; ++k) ord[k] = k;
            std::sort(ord.begin(), ord.end(), [&](int x, int y) { return fv[x] < fv[y]; });
            const int           w = ord[6];
            std::vector<double> c(6, 0.0);
            for (int k = 0; k < 6; ++k)
                for (int i = 0; i < 6; ++i) c[i] += s[ord[k]][i] / 6.0;
            auto along = [&](double t) {
                std::vector<double> r(6);
                for (int i = 0; i < 6; ++i) r[i] = c[i] + t * (s[w][i] - c[i]);
                return r;
            };
            auto   xr = along(-1.0);
            double fr = f(xr);
            if (fr < fv[ord[0]]) {
                auto   xe = along(-2.0);
                double fe = f(xe);
                if (fe < fr) s[w] = xe, fv[w] = fe;
                else s[w] = xr, fv[w] = fr;
            } else if (fr < fv[ord[5]]) {
                s[w] = xr, fv[w] = fr;
            } else {
                auto   xc = along(0.5);
                double fc = f(xc);
                if (fc < fv[w]) s[w] = xc, fv[w] = fc;
                else {
                    for (int k = 1; k < 7; ++k) {
                        for (int i = 0; i < 6; ++i) s[ord[k]][i] = s[ord[0]][i] + 0.5 * (s[ord[k]][i] - s[ord[0]][i]);
                        fv[ord[k]] = f(s[ord[k]]);
                    }
                }
            }
        }
        best = std::min(best, *std::min_element(fv.begin(), fv.end()));
    }
    return best;
}

// bounded iff the second half of the window adds less than `slack` to the log-sup;
// unbounded geometric or polynomial ratios grow by at least |Δ|·ln 2 there
inline bool bounded_by_window(const std::function<double(long)>& log_ratio, long N = 1000, double slack = 0.05)
{
    double first = -std::numeric_limits<double>::infinity(), second = first;
    for (long n = 1; n <= N; ++n) {
        const double v = log_ratio(n);
        if (n <= N / 2) first = std::max(first, v);
        else second = std::max(second, v);
    }
    return second <= first + slack;
}

}  // namespace oracle

#endif  // EAEKIT_TESTS_ORACLES_HPP
