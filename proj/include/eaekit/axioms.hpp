#ifndef EAEKIT_AXIOMS_HPP
#define EAEKIT_AXIOMS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "eaekit/criteria.hpp"
#include "eaekit/norms.hpp"
#include "eaekit/random.hpp"
#include "eaekit/relations.hpp"
#include "eaekit/snumbers.hpp"

namespace eaekit {

//
// an s-function under test: (operator, index) ↦ s_index(operator)
//
struct SFunction {
    std::string                                               name;
    Method                                                    method = Method::Exact;
    LpExponent                                                p_dom{};
    LpExponent                                                p_cod{};
    std::size_t                                               search_ceiling = 64;
    std::function<double(const MatrixOperator&, std::size_t)> eval;

    double operator()(const MatrixOperator& op, std::size_t k) const { return eval(op, k); }
    MatrixOperator wrap(Matrix m) const { return MatrixOperator(std::move(m), p_dom, p_cod); }
};

inline SFunction make_sfunction(SKind kind, LpExponent p_dom = LpExponent(2.0), LpExponent p_cod = LpExponent(2.0),
                                SNumberOptions opts = {})
{
    SFunction f;
    f.name  = to_string(kind);
    f.p_dom = p_dom;
    f.p_cod = p_cod;
    const bool exact = kind == SKind::HilbertSingular || (p_dom.is(2.0) && p_cod.is(2.0));
    f.method         = exact ? Method::Exact : Method::Search;
    f.search_ceiling = exact ? 64 : opts.search_ceiling;
    f.eval           = [kind, opts](const MatrixOperator& op, std::size_t k) {
        const std::size_t dmin = std::min(op.rows(), op.cols());
        if (k > dmin + 1) return 0.0;
        return s_number(op, kind, k, opts).value;
    };
    return f;
}

enum class IdealBoundIndexing {
    ShiftFromOne,  // j ∈ {1,…,m}: s_{m(n−1)+j}(S) ≤ M s_n(T)
    ShiftFromZero  // j ∈ {0,…,m−1}, index 0 skipped
};

struct Violation {
    std::size_t                                 sample = 0;
    std::string                                 inequality;
    std::vector<std::size_t>                    indices;  // the index arguments (n, m, …)
    double                                      lhs   = 0.0;
    double                                      rhs   = 0.0;
    double                                      slack = 0.0;
    std::vector<std::pair<std::string, Matrix>> inputs;
};

struct AxiomReport {
    std::string            id;  // "A1".."A5", "ideal_bound", "shift_bound"
    std::size_t            samples_run = 0;
    std::size_t            checks      = 0;
    std::vector<Violation> violations;
    std::vector<std::string> notes;

    bool passed() const { return violations.empty(); }
};

struct AxiomOptions {
    double        strict_slack   = 1e-7;
    double        widened_slack  = 1e-3;  // Search values on the large side of an inequality
    bool          complex_entries = true;
    std::uint64_t seed            = 0;
};

namespace detail {

inline bool within(double lhs, double rhs, double slack) { return lhs <= rhs + slack * std::max(1.0, std::abs(rhs)); }

inline const Matrix& input(const Violation& v, const std::string& name)
{
    for (const auto& [k, m] : v.inputs)
        if (k == name) return m;
    throw std::invalid_argument("violation has no input " + name);
}

}  // namespace detail

//
// recompute both sides of a stored violation from its inputs alone
//
inline std::pair<double, double> evaluate_violation(const std::string& axiom, const Violation& v, const SFunction& s)
{
    using detail::input;
    auto norm = [&](const Matrix& m) { return op_norm_value(s.wrap(m)); };
    if (axiom == "A1") {
        const auto& t = input(v, "T");
        if (v.indices.front() == 0) return {norm(t), s(s.wrap(t), 1)};  // ‖T‖ vs s_1, compared both ways
        const std::size_t i = v.indices.front();
        return {s(s.wrap(t), i + 1), s(s.wrap(t), i)};
    }
    if (axiom == "A2") {
        const auto&       a = input(v, "S");
        const auto&       b = input(v, "T");
        const std::size_t n = v.indices[0], m = v.indices[1];
        return {s(s.wrap(a + b), n + m - 1), s(s.wrap(a), n) + s(s.wrap(b), m)};
    }
    if (axiom == "A3") {
        const auto&       a = input(v, "S");
        const auto&       t = input(v, "T");
        const auto&       r = input(v, "R");
        const std::size_t n = v.indices[0];
        return {s(s.wrap(a * t * r), n), norm(a) * norm(r) * s(s.wrap(t), n)};
    }
    if (axiom == "A4") return {s(s.wrap(input(v, "T")), v.indices[0]), 0.0};
    if (axiom == "A5") {
        const std::size_t n = v.indices[0];
        return {std::abs(s(MatrixOperator(Matrix::identity(n)), n) - 1.0), 0.0};
    }
    if (axiom == "ideal_bound") {
        const auto&       big = input(v, "S");
        const auto&       t   = input(v, "T");
        const std::size_t idx = v.indices[0], n = v.indices[1];
        return {s(s.wrap(big), idx), v.rhs / std::max(s(s.wrap(t), n), 1e-300) * s(s.wrap(t), n)};
    }
    if (axiom == "shift_bound") {
        const auto&       t = input(v, "T");
        const auto&       sm = input(v, "S");
        const std::size_t n = v.indices[0], m = v.indices[1];
        return {s(s.wrap(t), n + m), norm(input(v, "G")) * norm(input(v, "H")) * s(s.wrap(sm), n)};
    }
    throw std::invalid_argument("unknown axiom id " + axiom);
}

//
// the five s-function axioms on seeded random instances
//
inline std::vector<AxiomReport> check_axioms(const SFunction& s, std::size_t sample_count, std::size_t dim_ceiling,
                                             const AxiomOptions& opts = {})
{
    if (dim_ceiling == 0) throw std::invalid_argument("check_axioms: dim_ceiling must be positive");
    if (dim_ceiling > s.search_ceiling)
        throw std::invalid_argument("check_axioms: dim_ceiling exceeds the s-function's search ceiling");

    const bool   search = s.method == Method::Search;
    const double strict = opts.strict_slack;
    const double loose  = search ? opts.widened_slack : opts.strict_slack;

    std::vector<AxiomReport> reports(5);
    for (std::size_t a = 0; a < 5; ++a) {
        reports[a].id = "A" + std::to_string(a + 1);
        reports[a].notes.push_back("ensemble: i.i.d. " + std::string(opts.complex_entries ? "complex" : "real") +
                                   " Gaussian entries, optionally rank-truncated by SVD; seed " +
                                   std::to_string(opts.seed));
        if (search)
            reports[a].notes.push_back("Search-method values are upper bounds: slack " + detail::num(opts.widened_slack) +
                                       " where the tested value sits on the larger side, " +
                                       detail::num(opts.strict_slack) + " elsewhere");
    }
    auto record = [&](std::size_t axiom, Violation v) { reports[axiom].violations.push_back(std::move(v)); };

    for (std::size_t i = 0; i < sample_count; ++i) {
        Rng               rng(derive_seed(opts.seed, i));
        const std::size_t m    = rng.index(1, dim_ceiling);
        const std::size_t n    = rng.index(1, dim_ceiling);
        const std::size_t dmin = std::min(m, n);
        const bool        trunc = rng.uniform() < 0.3;
        const Matrix      t     = trunc ? rng.gaussian_rank(m, n, rng.index(0, dmin), opts.complex_entries)
                                        : rng.gaussian(m, n, opts.complex_entries);
        const auto        top   = s.wrap(t);
        auto seq_of = [&](const Matrix& x) {
            std::vector<double> v;
            const auto          w = s.wrap(x);
            for (std::size_t k = 1; k <= std::min(x.rows(), x.cols()) + 1; ++k) v.push_back(s(w, k));
            return v;
        };
        const std::vector<double> t_seq = seq_of(t);

        // (1) ‖T‖ = s_1(T) ≥ s_2(T) ≥ … ≥ 0
        {
            auto&        rep  = reports[0];
            const double norm = op_norm_value(top);
            const auto&  seq  = t_seq;
            ++rep.checks;
            if (!detail::within(seq[0], norm, loose) || !detail::within(norm, seq[0], loose))
                record(0, {i, "||T|| = s_1(T)", {0}, seq[0], norm, loose, {{"T", t}}});
            for (std::size_t k = 1; k <= dmin; ++k) {
                ++rep.checks;
                if (!detail::within(seq[k], seq[k - 1], loose) || seq[k] < 0.0)
                    record(0, {i, "s_{k+1}(T) <= s_k(T)", {k}, seq[k], seq[k - 1], loose, {{"T", t}}});
            }
        }
        // (2) s_{n+m−1}(S+T) ≤ s_n(S) + s_m(T)
        {
            auto&        rep = reports[1];
            const Matrix a   = rng.gaussian(m, n, opts.complex_entries);
            const auto   a_seq = seq_of(a), ab_seq = seq_of(a + t);
            for (std::size_t p = 1; p <= dmin + 1; ++p)
                for (std::size_t q = 1; p + q - 1 <= dmin + 1; ++q) {
                    ++rep.checks;
                    const double lhs = ab_seq[p + q - 2], rhs = a_seq[p - 1] + t_seq[q - 1];
                    if (!detail::within(lhs, rhs, loose))
                        record(1, {i, "s_{n+m-1}(S+T) <= s_n(S) + s_m(T)", {p, q}, lhs, rhs, loose, {{"S", a}, {"T", t}}});
                }
        }
        // (3) s_n(S T R) ≤ ‖S‖ ‖R‖ s_n(T)
        {
            auto&             rep = reports[2];
            const std::size_t z1 = rng.index(1, dim_ceiling), z2 = rng.index(1, dim_ceiling);
            const Matrix      left  = rng.gaussian(z2, m, opts.complex_entries);
            const Matrix      right = rng.gaussian(n, z1, opts.complex_entries);
            const Matrix      prod  = left * t * right;
            const double      factor = op_norm_value(s.wrap(left)) * op_norm_value(s.wrap(right));
            const std::size_t lim    = std::min(dmin, std::min(z1, z2)) + 1;
            for (std::size_t k = 1; k <= lim; ++k) {
                ++rep.checks;
                const double lhs = s(s.wrap(prod), k), rhs = factor * t_seq[k - 1];
                if (!detail::within(lhs, rhs, loose))
                    record(2, {i, "s_n(STR) <= ||S|| ||R|| s_n(T)", {k}, lhs, rhs, loose,
                               {{"S", left}, {"T", t}, {"R", right}}});
            }
        }
        // (4) rank T < n ⇒ s_n(T) = 0
        {
            auto&             rep = reports[3];
            const std::size_t r   = rng.index(0, dmin - 1 + (dmin == 0 ? 1 : 0));
            const Matrix      low = rng.gaussian_rank(m, n, r, opts.complex_entries);
            for (std::size_t k = r + 1; k <= dmin + 1; ++k) {
                ++rep.checks;
                const double v = s(s.wrap(low), k);
                if (!detail::within(v, 0.0, loose))
                    record(3, {i, "rank T < n => s_n(T) = 0", {k}, v, 0.0, loose, {{"T", low}}});
            }
        }
        for (std::size_t a = 0; a < 4; ++a) ++reports[a].samples_run;
    }

    // (5) s_n(id on ℓ^2_n) = 1, exactly for exact s-functions
    for (std::size_t k = 1; k <= dim_ceiling; ++k) {
        auto&        rep = reports[4];
        const double v   = s(MatrixOperator(Matrix::identity(k)), k);
        ++rep.checks;
        ++rep.samples_run;
        const bool ok = s.method == Method::Exact ? v == 1.0 : std::abs(v - 1.0) <= strict;
        if (!ok) record(4, {k, "s_n(id_{l2_n}) = 1", {k}, std::abs(v - 1.0), 0.0, 0.0, {}});
    }
    return reports;
}

//
// s_{m(n−1)+j}(Σ R_j T R'_j) ≤ (Σ ‖R_j‖‖R'_j‖) s_n(T)
//
inline AxiomReport check_ideal_bound(const Matrix& t, const std::vector<std::pair<Matrix, Matrix>>& factors, const SFunction& s,
                                     std::size_t horizon, IdealBoundIndexing indexing = IdealBoundIndexing::ShiftFromOne,
                                     double slack = 1e-7)
{
    if (factors.empty()) throw std::invalid_argument("check_ideal_bound: need at least one factor pair");
    Matrix big;
    double bound = 0.0;
    for (const auto& [r, rp] : factors) {
        if (r.cols() != t.rows() || rp.rows() != t.cols())
            throw std::invalid_argument("check_ideal_bound: factor shapes do not compose with T");
        const Matrix term = r * t * rp;
        if (big.empty()) big = term;
        else if (big.rows() != term.rows() || big.cols() != term.cols())
            throw std::invalid_argument("check_ideal_bound: factor products differ in shape");
        else big += term;
        bound += op_norm_value(s.wrap(r)) * op_norm_value(s.wrap(rp));
    }

    AxiomReport rep;
    rep.id          = "ideal_bound";
    rep.samples_run = 1;
    const std::size_t m = factors.size();
    rep.notes.push_back(indexing == IdealBoundIndexing::ShiftFromOne
                            ? "index set j in {1,...,m}"
                            : "index set j in {0,...,m-1} (index 0 skipped)");
    rep.notes.push_back("M = sum_j ||R_j|| ||R'_j|| = " + detail::num(bound));

    const std::size_t dim_s = std::min(big.rows(), big.cols());
    const std::size_t dim_t = std::min(t.rows(), t.cols());
    const std::size_t j_lo  = indexing == IdealBoundIndexing::ShiftFromOne ? 1 : 0;
    const auto        ts    = s.wrap(t);
    const auto        ss    = s.wrap(big);
    for (std::size_t n = 1; n <= std::min(horizon, dim_t + 1); ++n) {
        const double rhs = bound * s(ts, n);
        for (std::size_t j = j_lo; j < j_lo + m; ++j) {
            const std::size_t idx = m * (n - 1) + j;
            if (idx == 0 || idx > dim_s + 1) continue;
            ++rep.checks;
            const double lhs = s(ss, idx);
            if (!detail::within(lhs, rhs, slack))
                rep.violations.push_back({n, "s_{m(n-1)+j}(S) <= M s_n(T)", {idx, n, j}, lhs, rhs, slack, {{"S", big}, {"T", t}}});
        }
    }
    return rep;
}

//
// T = G S H + R ⇒ s_{n+m}(T) ≤ ‖G‖‖H‖ s_n(S) for m = rank R
//
inline AxiomReport check_shift_bound(const Matrix& t, const Matrix& s_op, const Matrix& g, const Matrix& h, const Matrix& r,
                                     const SFunction& s, const Tolerances& tol = {}, double slack = 1e-7)
{
    const double res = relative_residual(g * s_op * h + r, t);
    if (res > tol.tol_witness) throw std::invalid_argument("check_shift_bound: T != G S H + R within tolerance");

    AxiomReport rep;
    rep.id          = "shift_bound";
    rep.samples_run = 1;
    const std::size_t m      = max_abs(r) == 0.0 ? 0 : numerical_rank(r, tol.rank_tol);
    const double      factor = op_norm_value(s.wrap(g)) * op_norm_value(s.wrap(h));
    rep.notes.push_back("m = rank R = " + std::to_string(m) + ", ||G|| ||H|| = " + detail::num(factor) +
                        ", identity residual " + detail::num(res));

    const std::size_t dim_t = std::min(t.rows(), t.cols());
    const std::size_t dim_s = std::min(s_op.rows(), s_op.cols());
    const auto        ts    = s.wrap(t);
    const auto        ss    = s.wrap(s_op);
    for (std::size_t n = 1; n + m <= dim_t; ++n) {
        ++rep.checks;
        const double lhs = s(ts, n + m);
        const double rhs = n <= dim_s + 1 ? factor * s(ss, n) : 0.0;
        if (!detail::within(lhs, rhs, slack))
            rep.violations.push_back({n, "s_{n+m}(T) <= ||G|| ||H|| s_n(S)", {n, m}, lhs, rhs, slack,
                                      {{"T", t}, {"S", s_op}, {"G", g}, {"H", h}, {"R", r}}});
    }
    return rep;
}

}  // namespace eaekit

#endif  // EAEKIT_AXIOMS_HPP
