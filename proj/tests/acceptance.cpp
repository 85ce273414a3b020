// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "eaekit/axioms.hpp"
#include "eaekit/criteria.hpp"
#include "eaekit/matrix_io.hpp"
#include "eaekit/relations.hpp"
#include "eaekit/svd.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace eaekit;

namespace {

struct Outcome {
    bool        pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) detail = "first failure: " + what;
        pass = pass && ok;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

Outcome schatten_example()
{
    Outcome    o;
    const auto t0 = std::chrono::steady_clock::now();
    const SingularSequence t(DecayClass::geometric(0.5)), s(DecayClass::geometric(0.25));
    const auto             v = schatten_test(t, s);
    o.require(v.holds(), "verdict is not Holds");
    if (!v.holds()) return o;
    const auto& h = std::get<Holds>(v.outcome);
    const auto& w = std::get<SchattenWitness>(h.witness);
    o.require(w.m == 2, "m != 2");
    o.require(w.M <= 16.0, "M > 16");
    o.require(h.analytic, "tails not certified analytically");
    o.require(verify_schatten_witness(t, s, w, 10000), "witness fails on n <= 10^4");
    const double dt = seconds_since(t0);
    o.require(dt < 1.0, "runtime >= 1 s");
    if (o.pass) o.detail = "m=2 M=" + fmt("%.6g", w.M) + ", " + fmt("%.3f s", dt);
    return o;
}

Outcome timotin_example()
{
    Outcome    o;
    const auto t0 = std::chrono::steady_clock::now();
    const SingularSequence t(DecayClass::geometric(0.5)), s(DecayClass::geometric(0.25));
    const auto             v = timotin_test(t, s);
    o.require(v.refuted(), "verdict is not RefutedAnalytic");
    if (!v.refuted()) return o;
    const auto& certs = std::get<RefutedAnalytic>(v.outcome).certificates;
    o.require(certs.size() == 2, "expected two certificates");
    if (certs.size() != 2) return o;
    o.require(certs[0].kind == RefutationKind::RatioUnbounded && certs[0].rate_description == "2^{n+2m}",
              "unbounded rate");
    o.require(certs[1].kind == RefutationKind::RatioVanishes && certs[1].rate_description == "2^{-(n-m)}",
              "vanishing rate");
    for (const auto& c : certs) o.require(c.shift_range_checked >= 16, "shift range below 16");
    // the evidence follows the stated rates at m = 16
    for (const auto& p : certs[0].evidence)
        o.require(std::abs(p.log_ratio / std::log(2.0) - (p.n + 32.0)) < 1e-6, "unbounded evidence off rate");
    for (const auto& p : certs[1].evidence)
        o.require(std::abs(p.log_ratio / std::log(2.0) + (p.n - 16.0)) < 1e-6, "vanishing evidence off rate");
    const double dt = seconds_since(t0);
    o.require(dt < 1.0, "runtime >= 1 s");
    if (o.pass) o.detail = "rates 2^{n+2m}, 2^{-(n-m)} for m <= 16, " + fmt("%.3f s", dt);
    return o;
}

Outcome criterion_without_eae()
{
    Outcome                o;
    const SingularSequence p(DecayClass::polynomial(1.0));
    const auto             v = timotin_test(p, p);
    o.require(v.holds(), "timotin does not hold");
    if (v.holds()) o.require(std::get<TimotinWitness>(std::get<Holds>(v.outcome).witness).m == 0, "m != 0");
    const auto obs = geometry_obstruction(OperatorMeta::lp(2, true), OperatorMeta::lp(3, true), Relation::EAE);
    o.require(obs && obs->rule == ObstructionRule::DifferentLpCompact, "no DifferentLpCompact obstruction");
    if (o.pass) o.detail = "Holds at m=0 with DifferentLpCompact obstruction";
    return o;
}

struct Spec {
    bool   geometric;
    double param;
    double scale;
    SingularSequence seq() const
    {
        return SingularSequence(geometric ? DecayClass::geometric(param) : DecayClass::polynomial(param), scale);
    }
};

Outcome coherence()
{
    Outcome           o;
    std::vector<Spec> grid;
    for (double r : {0.5, 0.25, 1.0 / 3, 0.8, 0.125}) grid.push_back({true, r, 1.0});
    for (double a : {0.5, 1.0, 2.0}) grid.push_back({false, a, 1.0});
    grid.push_back({false, 1.0, 5.0});
    int pairs = 0, holds = 0, inconclusive = 0;
    for (const auto& a : grid)
        for (const auto& b : grid) {
            ++pairs;
            const auto t = a.seq(), s = b.seq();
            const auto tv = timotin_test(t, s);
            const auto sv = schatten_test(t, s);
            if (tv.inconclusive() || sv.inconclusive()) ++inconclusive;
            if (tv.holds()) {
                ++holds;
                o.require(sv.holds(), "timotin holds but schatten does not");
            }
        }
    o.require(pairs >= 50, "grid below 50 pairs");
    o.require(inconclusive == 0, "unclassified pair in the grid");
    if (o.pass) o.detail = std::to_string(pairs) + " pairs, " + std::to_string(holds) + " timotin-holds, 0 exceptions";
    return o;
}

Outcome svd_quality()
{
    Outcome o;
    double  worst = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng               rng(derive_seed(1005, i));
        const std::size_t m = rng.index(1, 32), n = rng.index(1, 32);
        const Matrix      a = rng.gaussian(m, n);
        const auto        s = svd(a);
        const double      rec = relative_residual(reconstruct(s), a);
        const double      ou  = frobenius_norm(s.left_vectors.adjoint() * s.left_vectors - Matrix::identity(s.left_vectors.cols()));
        const double ov = frobenius_norm(s.right_vectors.adjoint() * s.right_vectors - Matrix::identity(s.right_vectors.cols()));
        worst = std::max({worst, rec, ou, ov});
        o.require(rec <= 1e-10 && ou <= 1e-10 && ov <= 1e-10, "residual above 1e-10 at " + std::to_string(i));
    }
    double worst_sv = 0.0;
    for (std::uint64_t i = 0; i < 30; ++i) {
        Rng               rng(derive_seed(1006, i));
        const std::size_t m = rng.index(1, 8), n = rng.index(1, 8);
        const Matrix      a   = rng.gaussian(m, n);
        const auto        got = singular_values(a);
        const auto        ref = oracle::singular_values(a);
        for (std::size_t k = 0; k < got.size(); ++k) worst_sv = std::max(worst_sv, std::abs(got[k] - ref[k]));
    }
    o.require(worst_sv <= 1e-8, "singular values differ from the eigenvalue oracle");
    if (o.pass) o.detail = "max residual " + fmt("%.2e", worst) + ", oracle gap " + fmt("%.2e", worst_sv);
    return o;
}

Outcome snumber_correctness()
{
    Outcome o;
    double  gap = 0.0;
    for (std::uint64_t i = 0; i < 20; ++i) {
        Rng               rng(derive_seed(1007, i));
        const std::size_t m = rng.index(1, 8), n = rng.index(1, 8);
        const Matrix      a   = rng.gaussian(m, n);
        const auto        ref = singular_values(a);
        for (std::size_t k = 1; k <= ref.size(); ++k)
            gap = std::max(gap, std::abs(s_number(MatrixOperator(a), SKind::Approximation, k).value - ref[k - 1]));
    }
    o.require(gap <= 1e-8, "Hilbert approximation numbers differ from SVD");
    const double d[3] = {1.0, 0.5, 1.0 / 3};
    std::string  vals;
    for (double p : {1.0, 3.0}) {
        const LpExponent e(p);
        const double     got = s_number(MatrixOperator(Matrix::diagonal({d[0], d[1], d[2]}), e, e), SKind::Approximation, 2).value;
        const double     ref = oracle::rank1_approximation(d, p);
        o.require(std::abs(got - 0.5) <= 1e-3, "searched a_2 outside [0.499, 0.501] at p=" + fmt("%g", p));
        o.require(std::abs(ref - 0.5) <= 1e-3, "brute-force oracle outside [0.499, 0.501] at p=" + fmt("%g", p));
        vals += " l" + fmt("%g", p) + ": a_2=" + fmt("%.6f", got) + " (oracle " + fmt("%.6f", ref) + ")";
    }
    if (o.pass) o.detail = "Hilbert gap " + fmt("%.1e", gap) + ";" + vals;
    return o;
}

Outcome pietsch_axioms()
{
    Outcome    o;
    const auto t0   = std::chrono::steady_clock::now();
    const auto s    = make_sfunction(SKind::HilbertSingular);
    const auto reps = check_axioms(s, 100, 6);
    std::size_t checks = 0;
    for (const auto& r : reps) {
        o.require(r.passed(), r.id + " has violations");
        checks += r.checks;
    }
    for (std::size_t n = 1; n <= 6; ++n)
        o.require(s(MatrixOperator(Matrix::identity(n)), n) == 1.0, "axiom 5 not exact at n=" + std::to_string(n));
    const double dt = seconds_since(t0);
    o.require(dt < 30.0, "runtime >= 30 s");
    if (o.pass) o.detail = std::to_string(checks) + " checks, 0 violations, " + fmt("%.3f s", dt);
    return o;
}

Outcome ideal_and_shift_bounds()
{
    Outcome     o;
    const auto  s      = make_sfunction(SKind::HilbertSingular);
    std::size_t checks = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        Rng               rng(derive_seed(1008, i));
        const std::size_t m = rng.index(1, 6), n = rng.index(1, 6), a = rng.index(1, 6), b = rng.index(1, 6);
        const Matrix      t = rng.gaussian_rank(m, n, rng.index(0, std::min(m, n)));
        std::vector<std::pair<Matrix, Matrix>> factors;
        for (std::size_t j = rng.index(1, 3); j > 0; --j) factors.emplace_back(rng.gaussian(a, m), rng.gaussian(n, b));
        const auto rep = check_ideal_bound(t, factors, s, 64);
        o.require(rep.passed(), "ideal bound violated at instance " + std::to_string(i));
        checks += rep.checks;
    }
    for (std::uint64_t i = 0; i < 50; ++i) {
        Rng               rng(derive_seed(1009, i));
        const std::size_t k = rng.index(1, 6), l = rng.index(1, 6);
        const Matrix      sm = rng.gaussian_rank(l, l, rng.index(0, l));
        const Matrix      g = rng.gaussian(k, l), h = rng.gaussian(l, k);
        const Matrix      r = rng.gaussian_rank(k, k, rng.index(0, k));
        const auto        rep = check_shift_bound(g * sm * h + r, sm, g, h, r, s);
        o.require(rep.passed(), "shift bound violated at instance " + std::to_string(i));
        checks += rep.checks;
    }
    if (o.pass) o.detail = "100 instances, " + std::to_string(checks) + " checks, 0 violations";
    return o;
}

std::size_t oracle_nullity(const Matrix& a) { return a.rows() - oracle::rank(a); }

Outcome finite_decisions()
{
    Outcome o;
    int     eae = 0, eaoe = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng        rng(derive_seed(1010, i));
        const auto p  = fixture::square_pair(rng, 8);
        const auto d  = decide_eae(p.t, p.s);
        const auto id = std::to_string(i);
        o.require(d.eae == (oracle_nullity(p.t) == oracle_nullity(p.s)), "disagrees with nullity oracle at " + id);
        if (d.eae) {
            ++eae;
            const auto c = verify_eae_witness(*d.witness, p.t, p.s);
            o.require(c.residual <= 1e-8 && std::min(c.rcond_E, c.rcond_F) >= 1e-8, "EAE witness fails at " + id);
        }
        const auto e = decide_eaoe(p.t, p.s);
        if (e.eaoe) {
            ++eaoe;
            o.require(d.eae, "EAOE without EAE at " + id);
            const auto c = verify_eaoe_witness(*e.witness, p.t, p.s);
            o.require(c.residual <= 1e-8 && std::min(c.rcond_E, c.rcond_F) >= 1e-8, "EAOE witness fails at " + id);
        }
    }
    if (o.pass) o.detail = "200 pairs, " + std::to_string(eae) + " EAE, " + std::to_string(eaoe) + " EAOE";
    return o;
}

Outcome ranlemma_pipeline()
{
    Outcome o;
    double  worst = 0.0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        Rng        rng(derive_seed(1011, i));
        const auto c = i % 5 == 0 ? fixture::diag_coupling(rng) : fixture::random_coupling(rng, 6);
        const auto b = structured_blocks_from_coupling(c.u, c.k);
        const auto r = ranlemma_structured(b, c.t, c.s);
        const auto& d = r.decomposition;
        worst         = std::max(worst, d.residual);
        const Matrix m = Matrix::identity(c.k) - b.H21 * c.t;
        o.require(d.residual <= 1e-8, "residual above 1e-8 at " + std::to_string(i));
        o.require(d.rank_R <= c.k - oracle::rank(m), "rank R exceeds nullity(I - H21 T) at " + std::to_string(i));
    }
    // T = S = 0 through U = [[0, I], [I, 0]]; U is its own inverse, so the
    // same coupling serves both directions
    const Matrix z(2, 2);
    const Matrix u = block2x2(Matrix(2, 2), Matrix::identity(2), Matrix::identity(2), Matrix(2, 2));
    const auto   r = ranlemma_structured(structured_blocks_from_coupling(u, 2), z, z);
    o.require(r.decomposition.rank_R <= 2 && r.decomposition.residual <= 1e-8, "zero case");
    if (o.pass) o.detail = "50 witnesses, max residual " + fmt("%.2e", worst) + ", zero case finite rank";
    return o;
}

Outcome identity_norm_law()
{
    Outcome                 o;
    const std::vector<double> ps = {1.0, 1.5, 2.0, 3.0, 4.0, INFINITY};
    double                  gap = 0.0, fit_gap = 0.0;
    for (double p : ps)
        for (double q : ps) {
            const LpExponent    ep = std::isinf(p) ? LpExponent::infinity() : LpExponent(p);
            const LpExponent    eq = std::isinf(q) ? LpExponent::infinity() : LpExponent(q);
            std::vector<double> lx, ly;
            for (std::size_t n = 1; n <= 6; ++n) {
                const double v = lp_identity_norm(n, ep, eq).value;
                gap            = std::max(gap, std::abs(v - oracle::identity_norm_grid(n, p, q)));
                lx.push_back(std::log(static_cast<double>(n)));
                ly.push_back(std::log(v));
            }
            const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / 6;
            const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / 6;
            double       sxy = 0.0, sxx = 0.0;
            for (std::size_t i = 0; i < 6; ++i) {
                sxy += (lx[i] - mx) * (ly[i] - my);
                sxx += (lx[i] - mx) * (lx[i] - mx);
            }
            const double expected = std::max(0.0, (std::isinf(q) ? 0.0 : 1 / q) - (std::isinf(p) ? 0.0 : 1 / p));
            fit_gap               = std::max(fit_gap, std::abs(sxy / sxx - expected));
        }
    o.require(gap <= 1e-6, "value differs from sphere maximization");
    o.require(fit_gap <= 0.05, "log-log slope off the exponent");
    if (o.pass) o.detail = "36 exponent pairs, value gap " + fmt("%.1e", gap) + ", slope gap " + fmt("%.1e", fit_gap);
    return o;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream      in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism()
{
    Outcome               o;
    namespace fs          = std::filesystem;
    const fs::path dir    = fs::temp_directory_path() / "eaekit_acceptance";
    fs::create_directories(dir);
    {
        std::ofstream(dir / "a.txt") << write_matrix(Matrix::diagonal({1.0, 0.5, 1.0 / 3}), LpExponent(3.0), LpExponent(3.0));
        std::ofstream(dir / "t.txt") << write_matrix(Matrix::diagonal({1.0, 0.0}));
        std::ofstream(dir / "s.txt") << write_matrix(Matrix::diagonal({5.0, 0.0}));
    }
    const std::string d = dir.string() + "/";
    const std::vector<std::string> cmds = {
        "criteria --kind schatten --t geometric:r=0.5 --s geometric:r=0.25",
        "criteria --kind timotin --t geometric:r=0.5 --s geometric:r=0.25",
        "finite decide-eae --t " + d + "t.txt --s " + d + "s.txt",
        "finite decide-eaoe --t " + d + "t.txt --s " + d + "s.txt",
        "finite snumber --a " + d + "a.txt --kind approximation",
        "axioms run --kind approximation --p 1 --q 1 --samples 4 --dims 3",
        "norms --identity 6 --p 4 --q 1.5",
    };
    for (const auto& c : cmds) {
        std::string first;
        for (int rep = 0; rep < 2; ++rep) {
            const auto path = d + "r.json";
            fs::remove(path);
            const int status =
                std::system((std::string(EAEKIT_CLI_PATH) + " --seed 11 -o " + path + " " + c + " > /dev/null 2>&1").c_str());
            o.require(status != -1, "could not launch: " + c);
            const auto text = slurp(path);
            o.require(!text.empty(), "empty report: " + c);
            if (rep == 0) first = text;
            else o.require(text == first, "reports differ: " + c);
        }
    }
    fs::remove_all(dir);
    if (o.pass) o.detail = std::to_string(cmds.size()) + " commands, byte-identical reports";
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"schatten, geometric 1/2 vs 1/4", schatten_example},
        {"timotin, geometric 1/2 vs 1/4", timotin_example},
        {"timotin holds, lp obstruction", criterion_without_eae},
        {"timotin => schatten on a grid", coherence},
        {"svd quality", svd_quality},
        {"s-number correctness", snumber_correctness},
        {"axiom suite, hilbert kind", pietsch_axioms},
        {"ideal and shift bounds", ideal_and_shift_bounds},
        {"finite eae/eaoe decisions", finite_decisions},
        {"structured decomposition", ranlemma_pipeline},
        {"lp identity-norm law", identity_norm_law},
        {"cli determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass   = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += !o.pass;
        std::printf("%s %2zu  %-32s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
