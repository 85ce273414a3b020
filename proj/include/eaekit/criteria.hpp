#ifndef EAEKIT_CRITERIA_HPP
#define EAEKIT_CRITERIA_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "eaekit/sequence.hpp"

namespace eaekit {

enum class Criterion { Schatten, Timotin };

inline const char* to_string(Criterion c) { return c == Criterion::Schatten ? "schatten" : "timotin"; }

struct CriterionOptions {
    index_t horizon     = 10000;
    index_t m_max       = 16;
    double  delta_floor = 1e-6;
};

//
// t_{m(n-1)+j} <= M s_n and s_{m(n-1)+j} <= M t_n for all n, j = 1..m
//
struct SchattenWitness {
    index_t m     = 1;
    double  M     = 1.0;
    double  log_M = 0.0;
};

enum class TimotinDirection { S_over_T_shifted, T_over_S_shifted };

inline const char* to_string(TimotinDirection d)
{
    return d == TimotinDirection::S_over_T_shifted ? "S_over_T_shifted" : "T_over_S_shifted";
}

//
// delta <= ratio_n <= 1/delta for all n; ratio is s_n/t_{n+m} or t_n/s_{n+m}
//
struct TimotinWitness {
    index_t          m         = 0;
    double           delta     = 0.5;
    TimotinDirection direction = TimotinDirection::S_over_T_shifted;
    double           ratio_inf = 1.0;
    double           ratio_sup = 1.0;
};

using Witness = std::variant<SchattenWitness, TimotinWitness>;

enum class RefutationKind { RatioUnbounded, RatioVanishes, OneSidedIdealFailure };

inline const char* to_string(RefutationKind k)
{
    switch (k) {
    case RefutationKind::RatioUnbounded: return "RatioUnbounded";
    case RefutationKind::RatioVanishes: return "RatioVanishes";
    case RefutationKind::OneSidedIdealFailure: return "OneSidedIdealFailure";
    }
    return "?";
}

struct EvidencePoint {
    index_t n         = 1;
    double  ratio     = 0.0;
    double  log_ratio = 0.0;
};

struct RefutationCertificate {
    RefutationKind             kind                = RefutationKind::RatioUnbounded;
    index_t                    shift_range_checked = 0;
    std::string                quantity;          // which ratio diverges
    std::string                rate_description;  // closed form of its growth
    index_t                    evidence_shift = 0;  // m used for the sampled evidence
    std::vector<EvidencePoint> evidence;
};

struct Holds {
    Witness witness;
    bool    analytic = false;  // validity beyond the horizon proven from the tail classes
};

struct RefutedAnalytic {
    std::vector<RefutationCertificate> certificates;
};

struct InconclusiveAtHorizon {
    index_t                horizon = 0;
    std::optional<Witness> best_partial;
    std::string            reason;
};

struct CriterionVerdict {
    Criterion                                                criterion = Criterion::Schatten;
    std::variant<Holds, RefutedAnalytic, InconclusiveAtHorizon> outcome;
    std::vector<std::string>                                 notes;

    bool holds() const { return std::holds_alternative<Holds>(outcome); }
    bool refuted() const { return std::holds_alternative<RefutedAnalytic>(outcome); }
    bool inconclusive() const { return std::holds_alternative<InconclusiveAtHorizon>(outcome); }

    const char* label() const
    {
        if (holds()) return "Holds";
        if (refuted()) return "RefutedAnalytic";
        return "InconclusiveAtHorizon";
    }
};

namespace detail {

constexpr double kInf    = std::numeric_limits<double>::infinity();
constexpr double kRelTol = 1e-12;

inline bool nearly_equal(double a, double b) { return std::abs(a - b) <= kRelTol * std::max(std::abs(a), std::abs(b)); }

// a <= b up to relative rounding
inline bool nearly_le(double a, double b) { return a <= b + kRelTol * std::max(std::abs(a), std::abs(b)); }

inline std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// log(lhs/rhs) treating 0 <= M·0 as vacuous (-inf) and x > 0 over 0 as +inf
inline double log_quotient(double ln_lhs, double ln_rhs)
{
    if (ln_lhs == -kInf) return -kInf;
    if (ln_rhs == -kInf) return kInf;
    return ln_lhs - ln_rhs;
}

//
// max over n in [1, horizon] and j in 1..m of both Schatten quotients (log)
//
inline double schatten_log_sup(const SingularSequence& t, const SingularSequence& s, index_t m, index_t horizon)
{
    double best = -kInf;
    for (index_t n = 1; n <= horizon; ++n) {
        const double ln_t = t.log_value_at(n);
        const double ln_s = s.log_value_at(n);
        for (index_t j = 1; j <= m; ++j) {
            const index_t k = m * (n - 1) + j;
            best            = std::max(best, log_quotient(t.log_value_at(k), ln_s));
            best            = std::max(best, log_quotient(s.log_value_at(k), ln_t));
        }
        if (best == kInf) break;
    }
    return best;
}

struct LogRange {
    double lo = kInf;
    double hi = -kInf;
};

// ratio num_n / den_{n+m} over n in [1, horizon]; 0/0 counts as 1
inline LogRange timotin_log_range(const SingularSequence& num, const SingularSequence& den, index_t m, index_t horizon)
{
    LogRange r;
    for (index_t n = 1; n <= horizon; ++n) {
        const double ln_n = num.log_value_at(n);
        const double ln_d = den.log_value_at(n + m);
        double       q;
        if (ln_n == -kInf && ln_d == -kInf) q = 0.0;
        else if (ln_d == -kInf) q = kInf;
        else q = ln_n - ln_d;
        r.lo = std::min(r.lo, q);
        r.hi = std::max(r.hi, q);
    }
    return r;
}

// doubling grid on [1, horizon], trimmed to its longest strictly monotone suffix
inline std::vector<EvidencePoint> monotone_evidence(const std::function<double(index_t)>& log_ratio, index_t horizon,
                                                    bool increasing)
{
    std::vector<EvidencePoint> pts;
    for (index_t n = 1; n <= horizon; n *= 2) pts.push_back({n, 0.0, log_ratio(n)});
    if (pts.back().n != horizon) pts.push_back({horizon, 0.0, log_ratio(horizon)});
    for (auto& p : pts) p.ratio = std::exp(p.log_ratio);

    std::size_t start = pts.size() - 1;
    while (start > 0) {
        const double a = pts[start - 1].log_ratio, b = pts[start].log_ratio;
        if (increasing ? (a < b) : (a > b)) --start;
        else break;
    }
    return {pts.begin() + static_cast<std::ptrdiff_t>(start), pts.end()};
}

//
// asymptotic tail description
//
struct Tail {
    bool   geometric = true;
    double param     = 0.5;  // base r or exponent α
    double scale     = 1.0;
};

inline std::optional<Tail> tail_of(const SingularSequence& seq)
{
    const DecayClass* c = asymptotic_class(seq.decay());
    if (!c) return std::nullopt;
    if (const auto* g = std::get_if<Geometric>(&c->form)) return Tail{true, g->base, seq.scale()};
    return Tail{false, std::get<Polynomial>(c->form).exponent, seq.scale()};
}

// log2 of x when x is an exact power of two (up to rounding)
inline std::optional<long> integer_log2(double x)
{
    const double l = std::log2(x);
    const double r = std::round(l);
    if (std::abs(l - r) > 1e-12) return std::nullopt;
    return static_cast<long>(r);
}

// "a n + b m" with unit coefficients elided
inline std::string linear_nm(long a, long b)
{
    std::string out;
    auto        term = [&](long c, const char* var) {
        if (c == 0) return;
        if (!out.empty()) out += c > 0 ? "+" : "-";
        else if (c < 0) out += "-";
        const long ac = std::abs(c);
        if (ac != 1) out += std::to_string(ac);
        out += var;
    };
    term(a, "n");
    term(b, "m");
    return out.empty() ? "0" : out;
}

inline std::string coefficient_prefix(double c)
{
    if (nearly_equal(c, 1.0)) return "";
    return num(c) + "*";
}

//
// closed form of num_n / den_{n+m} for classified tails
//
inline std::string timotin_rate(const Tail& num_t, const Tail& den_t)
{
    const std::string coef = coefficient_prefix(num_t.scale / den_t.scale);
    if (num_t.geometric && den_t.geometric) {
        // (a/b)^n b^{-m}
        const auto a2 = integer_log2(num_t.param), b2 = integer_log2(den_t.param);
        if (a2 && b2) {
            const long A = *a2 - *b2, B = -*b2;
            if (A < 0) return coef + "2^{-(" + linear_nm(-A, -B) + ")}";
            return coef + "2^{" + linear_nm(A, B) + "}";
        }
        return coef + "(" + num(num_t.param / den_t.param) + ")^{n}*(" + num(den_t.param) + ")^{-m}";
    }
    if (!num_t.geometric && !den_t.geometric)
        return coef + "n^{-" + num(num_t.param) + "}*(n+m)^{" + num(den_t.param) + "} ~ n^{" +
               num(den_t.param - num_t.param) + "}";
    if (num_t.geometric) return coef + "(" + num(num_t.param) + ")^{n}*(n+m)^{" + num(den_t.param) + "}";
    return coef + "n^{-" + num(num_t.param) + "}*(" + num(den_t.param) + ")^{-(n+m)}";
}

// +1 unbounded, -1 vanishing, 0 bounded away from 0 and ∞
inline int timotin_growth(const Tail& num_t, const Tail& den_t)
{
    if (num_t.geometric && den_t.geometric) {
        if (nearly_equal(num_t.param, den_t.param)) return 0;
        return num_t.param > den_t.param ? 1 : -1;
    }
    if (!num_t.geometric && !den_t.geometric) {
        if (nearly_equal(num_t.param, den_t.param)) return 0;
        return den_t.param > num_t.param ? 1 : -1;
    }
    return num_t.geometric ? -1 : 1;
}

// does lhs_{m(n-1)+j} / rhs_n stay bounded for this m
inline bool schatten_side_bounded(const Tail& lhs, const Tail& rhs, index_t m)
{
    if (lhs.geometric && rhs.geometric)
        return nearly_le(static_cast<double>(m) * std::log(lhs.param), std::log(rhs.param));
    if (!lhs.geometric && !rhs.geometric) return nearly_le(rhs.param, lhs.param);
    return lhs.geometric;
}

inline std::string schatten_rate(const Tail& lhs, const Tail& rhs)
{
    const std::string coef = coefficient_prefix(lhs.scale / rhs.scale);
    if (!lhs.geometric && !rhs.geometric)
        return coef + "(m n)^{-" + num(lhs.param) + "} / n^{-" + num(rhs.param) + "} ~ n^{" +
               num(rhs.param - lhs.param) + "} -> inf";
    // only geometric rhs with polynomial lhs can diverge for every m
    return coef + "(m n)^{-" + num(lhs.param) + "} / (" + num(rhs.param) + ")^{n} -> inf";
}

inline index_t ceil_ratio_of_logs(double num_base, double den_base)
{
    const double q = std::log(num_base) / std::log(den_base);
    const double r = std::round(q);
    if (std::abs(q - r) <= kRelTol * std::max(1.0, std::abs(q))) return static_cast<index_t>(std::max(1.0, r));
    return static_cast<index_t>(std::max(1.0, std::ceil(q)));
}

// smallest m for which both Schatten quotients are bounded; 0 when none
inline index_t schatten_analytic_m(const Tail& t, const Tail& s)
{
    if (t.geometric && s.geometric) return std::max(ceil_ratio_of_logs(s.param, t.param), ceil_ratio_of_logs(t.param, s.param));
    if (!t.geometric && !s.geometric) return nearly_equal(t.param, s.param) ? 1 : 0;
    return 0;
}

inline void validate(const CriterionOptions& o)
{
    if (o.horizon == 0) throw std::invalid_argument("horizon must be positive");
}

inline RefutedAnalytic schatten_refutation(const SingularSequence& t, const SingularSequence& s, const Tail& tt,
                                           const Tail& st, const CriterionOptions& o)
{
    // the diverging side: lhs_{m(n-1)+1} / rhs_n
    const bool t_side = !schatten_side_bounded(tt, st, o.m_max);
    const auto& lhs   = t_side ? t : s;
    const auto& rhs   = t_side ? s : t;
    const index_t m   = o.m_max;

    RefutationCertificate cert;
    cert.kind                = RefutationKind::OneSidedIdealFailure;
    cert.shift_range_checked = o.m_max;
    cert.evidence_shift      = m;
    cert.quantity            = t_side ? "t_{m(n-1)+j} <= M s_n" : "s_{m(n-1)+j} <= M t_n";
    cert.rate_description    = t_side ? schatten_rate(tt, st) : schatten_rate(st, tt);
    cert.evidence            = monotone_evidence(
        [&](index_t n) { return log_quotient(lhs.log_value_at(m * (n - 1) + 1), rhs.log_value_at(n)); }, o.horizon, true);
    return RefutedAnalytic{{cert}};
}

inline RefutedAnalytic timotin_refutation(const SingularSequence& t, const SingularSequence& s, const Tail& tt,
                                          const Tail& st, const CriterionOptions& o)
{
    RefutedAnalytic out;
    const index_t   m = o.m_max;
    for (auto dir : {TimotinDirection::T_over_S_shifted, TimotinDirection::S_over_T_shifted}) {
        const bool  t_num = dir == TimotinDirection::T_over_S_shifted;
        const auto& nseq  = t_num ? t : s;
        const auto& dseq  = t_num ? s : t;
        const Tail& nt    = t_num ? tt : st;
        const Tail& dt    = t_num ? st : tt;
        const int   g     = timotin_growth(nt, dt);

        RefutationCertificate cert;
        cert.kind                = g > 0 ? RefutationKind::RatioUnbounded : RefutationKind::RatioVanishes;
        cert.shift_range_checked = o.m_max;
        cert.evidence_shift      = m;
        cert.quantity            = t_num ? "t_n / s_{n+m}" : "s_n / t_{n+m}";
        cert.rate_description    = timotin_rate(nt, dt);
        cert.evidence            = monotone_evidence(
            [&](index_t n) { return log_quotient(nseq.log_value_at(n), dseq.log_value_at(n + m)); }, o.horizon, g > 0);
        out.certificates.push_back(std::move(cert));
    }
    return out;
}

}  // namespace detail

//
// closed-form decision for classified decay pairs (explicit prefixes stripped)
//
inline std::optional<CriterionVerdict> analytic_decision(const DecayClass& t_class, const DecayClass& s_class,
                                                         Criterion criterion, const CriterionOptions& opts = {})
{
    const DecayClass* tc = asymptotic_class(t_class);
    const DecayClass* sc = asymptotic_class(s_class);
    if (!tc || !sc) return std::nullopt;

    const SingularSequence t(*tc), s(*sc);
    const auto             tt = *detail::tail_of(t);
    const auto             st = *detail::tail_of(s);

    CriterionVerdict v;
    v.criterion = criterion;

    if (criterion == Criterion::Schatten) {
        const index_t m = detail::schatten_analytic_m(tt, st);
        if (m == 0) {
            v.outcome = detail::schatten_refutation(t, s, tt, st, opts);
            return v;
        }
        // unit-scale tails: both quotients are non-increasing in n, so the sup sits at n = 1
        SchattenWitness w;
        w.m     = m;
        w.log_M = detail::schatten_log_sup(t, s, m, 1);
        w.M     = std::exp(w.log_M);
        v.outcome = Holds{w, true};
        return v;
    }

    if (detail::timotin_growth(tt, st) != 0) {
        v.outcome = detail::timotin_refutation(t, s, tt, st, opts);
        return v;
    }
    // equal tails: s_n / t_n ≡ 1 at m = 0
    TimotinWitness w;
    w.m         = 0;
    w.direction = TimotinDirection::S_over_T_shifted;
    w.ratio_inf = 1.0;
    w.ratio_sup = 1.0;
    w.delta     = 1.0 - opts.delta_floor;
    v.outcome   = Holds{w, true};
    return v;
}

//
// Schatten same-ideal criterion: search m in 1..m_max
//
inline CriterionVerdict schatten_test(const SingularSequence& t, const SingularSequence& s, const CriterionOptions& opts = {})
{
    if (opts.m_max == 0) throw std::invalid_argument("schatten_test: m_max must be positive");
    if (opts.horizon == 0) throw std::invalid_argument("schatten_test: horizon must be positive");
    if (opts.horizon < opts.m_max + 1) throw std::invalid_argument("schatten_test: horizon must exceed m_max");

    CriterionVerdict v;
    v.criterion = Criterion::Schatten;
    v.notes.push_back("index set j in {1,...,m}");

    const auto tt = detail::tail_of(t);
    const auto st = detail::tail_of(s);

    if (tt && st) {
        const index_t m_star = detail::schatten_analytic_m(*tt, *st);
        if (m_star == 0) {
            v.outcome = detail::schatten_refutation(t, s, *tt, *st, opts);
            return v;
        }
        const index_t prefix = std::max(prefix_length(t.decay()), prefix_length(s.decay()));
        if (opts.horizon <= prefix + 1) {
            v.outcome = InconclusiveAtHorizon{opts.horizon, std::nullopt, "horizon does not cover the explicit prefix"};
            return v;
        }
        // smaller m are unbounded by the table; their sampled M are never witnesses
        if (m_star > opts.m_max) {
            SchattenWitness partial;
            partial.m     = opts.m_max;
            partial.log_M = detail::schatten_log_sup(t, s, opts.m_max, opts.horizon);
            partial.M     = std::exp(partial.log_M);
            v.outcome     = InconclusiveAtHorizon{opts.horizon, Witness{partial},
                                              "analytic witness needs m = " + std::to_string(m_star) + " > m_max"};
            return v;
        }
        SchattenWitness w;
        w.m     = m_star;
        w.log_M = detail::schatten_log_sup(t, s, m_star, opts.horizon);
        w.M     = std::exp(w.log_M);
        v.outcome = Holds{w, true};
        return v;
    }

    // frozen explicit tails: numerical evidence only
    std::optional<SchattenWitness> best;
    const index_t                  half = std::max<index_t>(1, opts.horizon / 2);
    for (index_t m = 1; m <= opts.m_max; ++m) {
        const double full = detail::schatten_log_sup(t, s, m, opts.horizon);
        if (!std::isfinite(full)) continue;
        SchattenWitness cand{m, std::exp(full), full};
        if (!best || cand.log_M < best->log_M) best = cand;
        if (detail::schatten_log_sup(t, s, m, half) == full) {
            v.outcome = Holds{cand, false};
            v.notes.push_back("frozen tail: sup attained within the first half of the horizon");
            return v;
        }
    }
    InconclusiveAtHorizon inc{opts.horizon, std::nullopt, "no stabilised finite M within the horizon"};
    if (best) inc.best_partial = *best;
    v.outcome = inc;
    return v;
}

//
// Timotin EAE criterion: search m in 0..m_max and both directions
//
inline CriterionVerdict timotin_test(const SingularSequence& t, const SingularSequence& s, const CriterionOptions& opts = {})
{
    if (!(opts.delta_floor > 0.0 && opts.delta_floor < 1.0))
        throw std::invalid_argument("timotin_test: delta_floor must lie in (0,1)");
    if (opts.horizon == 0 || opts.horizon <= opts.m_max)
        throw std::invalid_argument("timotin_test: horizon must exceed m_max");

    CriterionVerdict v;
    v.criterion = Criterion::Timotin;
    v.notes.push_back("m = 0 permitted (pure ratio comparison)");

    const auto tt         = detail::tail_of(t);
    const auto st         = detail::tail_of(s);
    const bool classified = tt && st;

    if (classified && detail::timotin_growth(*tt, *st) != 0) {
        v.outcome = detail::timotin_refutation(t, s, *tt, *st, opts);
        return v;
    }
    if (classified) {
        const index_t prefix = std::max(prefix_length(t.decay()), prefix_length(s.decay()));
        if (opts.horizon <= prefix + 1) {
            v.outcome = InconclusiveAtHorizon{opts.horizon, std::nullopt, "horizon does not cover the explicit prefix"};
            return v;
        }
    }

    const double                  log_floor = std::log(opts.delta_floor);
    std::optional<TimotinWitness> best;
    const index_t                 half = std::max<index_t>(1, opts.horizon / 2);

    for (index_t m = 0; m <= opts.m_max; ++m)
        for (auto dir : {TimotinDirection::S_over_T_shifted, TimotinDirection::T_over_S_shifted}) {
            const bool  t_num = dir == TimotinDirection::T_over_S_shifted;
            const auto& nseq  = t_num ? t : s;
            const auto& dseq  = t_num ? s : t;
            auto        range = detail::timotin_log_range(nseq, dseq, m, opts.horizon);
            if (!std::isfinite(range.lo) || !std::isfinite(range.hi)) continue;

            if (classified && !(*tt).geometric) {
                // polynomial tails: (n+m)^α / n^α decreases to the scale ratio, which is never attained
                const double limit = std::log(nseq.scale() / dseq.scale());
                range.lo           = std::min(range.lo, limit);
                range.hi           = std::max(range.hi, limit);
            }

            TimotinWitness cand;
            cand.m         = m;
            cand.direction = dir;
            cand.ratio_inf = std::exp(range.lo);
            cand.ratio_sup = std::exp(range.hi);
            cand.delta     = std::min({std::exp(range.lo), std::exp(-range.hi), 1.0 - opts.delta_floor});
            if (!best || cand.delta > best->delta) best = cand;

            if (range.lo < log_floor || range.hi > -log_floor) continue;
            if (!classified) {
                const auto h = detail::timotin_log_range(nseq, dseq, m, half);
                if (h.lo != range.lo || h.hi != range.hi) continue;
                v.notes.push_back("frozen tail: ratio range attained within the first half of the horizon");
            }
            v.outcome = Holds{cand, classified};
            return v;
        }

    InconclusiveAtHorizon inc{opts.horizon, std::nullopt,
                              classified ? "ratio range exceeds the delta_floor window" : "no stabilised ratio range"};
    if (best) inc.best_partial = *best;
    v.outcome = inc;
    return v;
}

//
// re-check stored witnesses from their data alone
//
inline bool verify_schatten_witness(const SingularSequence& t, const SingularSequence& s, const SchattenWitness& w,
                                    index_t horizon)
{
    for (index_t n = 1; n <= horizon; ++n)
        for (index_t j = 1; j <= w.m; ++j) {
            const index_t k = w.m * (n - 1) + j;
            if (!detail::nearly_le(detail::log_quotient(t.log_value_at(k), s.log_value_at(n)), w.log_M)) return false;
            if (!detail::nearly_le(detail::log_quotient(s.log_value_at(k), t.log_value_at(n)), w.log_M)) return false;
        }
    return true;
}

inline bool verify_timotin_witness(const SingularSequence& t, const SingularSequence& s, const TimotinWitness& w,
                                   index_t horizon)
{
    if (!(w.delta > 0.0 && w.delta < 1.0)) return false;
    const bool  t_num = w.direction == TimotinDirection::T_over_S_shifted;
    const auto  range = detail::timotin_log_range(t_num ? t : s, t_num ? s : t, w.m, horizon);
    const double ld   = std::log(w.delta);
    return detail::nearly_le(ld, range.lo) && detail::nearly_le(range.hi, -ld);
}

//
// ℓ^p obstruction rules
//
enum class Relation { EAE, EAOE };
enum class ObstructionRule { DifferentLpCompact, DifferentLpOneSided };

inline const char* to_string(Relation r) { return r == Relation::EAE ? "EAE" : "EAOE"; }
inline const char* to_string(ObstructionRule r)
{
    return r == ObstructionRule::DifferentLpCompact ? "DifferentLpCompact" : "DifferentLpOneSided";
}

struct Obstruction {
    Relation        relation;
    ObstructionRule rule;
    std::string     explanation;
};

inline std::optional<Obstruction> geometry_obstruction(const OperatorMeta& meta_t, const OperatorMeta& meta_s,
                                                       Relation relation)
{
    using Space = OperatorMeta::Space;
    if (meta_t.space != Space::LpSequence || meta_s.space != Space::LpSequence) return std::nullopt;
    if (meta_t.p == meta_s.p) return std::nullopt;

    const std::string spaces = "l^" + detail::num(meta_t.p) + " and l^" + detail::num(meta_s.p);
    if (relation == Relation::EAOE)
        return Obstruction{relation, ObstructionRule::DifferentLpOneSided,
                           "operators on " + spaces +
                               " are never equivalent after one-sided extension: an isomorphism between l^q and a "
                               "complemented piece of l^p would factor the identity through a compact operator"};
    if (meta_t.compact || meta_s.compact)
        return Obstruction{relation, ObstructionRule::DifferentLpCompact,
                           "a compact operator on " + spaces +
                               " cannot be equivalent after extension: the identity block would be compact"};
    return std::nullopt;
}

}  // namespace eaekit

#endif  // EAEKIT_CRITERIA_HPP
