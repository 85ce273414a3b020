#ifndef EAEKIT_CLI_HPP
#define EAEKIT_CLI_HPP

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eaekit/axioms.hpp"
#include "eaekit/config.hpp"
#include "eaekit/criteria.hpp"
#include "eaekit/matrix_io.hpp"
#include "eaekit/relations.hpp"
#include "eaekit/sequence_io.hpp"
#include "eaekit/snumbers.hpp"

namespace eaekit::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { Ok = 0, False = 1, Inconclusive = 2, Usage = 64, Data = 65 };

constexpr int kReportVersion = 1;

namespace detail {

// JSON has no infinities
inline json jnum(double v)
{
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

inline json rank_json(const RankInfo& r)
{
    return {{"rank", r.rank},
            {"cut", jnum(r.cut)},
            {"smallest_kept", jnum(r.smallest_kept)},
            {"largest_dropped", jnum(r.largest_dropped)},
            {"borderline", r.borderline}};
}

inline json check_json(const WitnessCheck& c)
{
    return {{"ok", c.ok}, {"residual", jnum(c.residual)}, {"rcond_E", jnum(c.rcond_E)}, {"rcond_F", jnum(c.rcond_F)}};
}

inline json witness_json(const Witness& w)
{
    if (const auto* s = std::get_if<SchattenWitness>(&w))
        return {{"type", "schatten"}, {"m", s->m}, {"M", jnum(s->M)}, {"log_M", jnum(s->log_M)}};
    const auto& t = std::get<TimotinWitness>(w);
    return {{"type", "timotin"},
            {"m", t.m},
            {"delta", jnum(t.delta)},
            {"direction", to_string(t.direction)},
            {"ratio_inf", jnum(t.ratio_inf)},
            {"ratio_sup", jnum(t.ratio_sup)}};
}

inline json certificate_json(const RefutationCertificate& c)
{
    json ev = json::array();
    for (const auto& p : c.evidence) ev.push_back({{"n", p.n}, {"ratio", jnum(p.ratio)}, {"log_ratio", jnum(p.log_ratio)}});
    return {{"kind", to_string(c.kind)},
            {"quantity", c.quantity},
            {"rate", c.rate_description},
            {"shift_range_checked", c.shift_range_checked},
            {"evidence_shift", c.evidence_shift},
            {"evidence", ev}};
}

inline json obstruction_json(const std::optional<Obstruction>& o, Relation rel)
{
    if (!o) return {{"relation", to_string(rel)}, {"rule", nullptr}};
    return {{"relation", to_string(o->relation)}, {"rule", to_string(o->rule)}, {"explanation", o->explanation}};
}

inline SchattenWitness schatten_from_json(const json& j)
{
    SchattenWitness w;
    w.m     = j.at("m").get<index_t>();
    w.M     = j.at("M").get<double>();
    w.log_M = j.at("log_M").get<double>();
    return w;
}

inline TimotinWitness timotin_from_json(const json& j)
{
    TimotinWitness w;
    w.m         = j.at("m").get<index_t>();
    w.delta     = j.at("delta").get<double>();
    const auto d = j.at("direction").get<std::string>();
    if (d == to_string(TimotinDirection::S_over_T_shifted)) w.direction = TimotinDirection::S_over_T_shifted;
    else if (d == to_string(TimotinDirection::T_over_S_shifted)) w.direction = TimotinDirection::T_over_S_shifted;
    else throw DataError("unknown timotin direction " + d);
    return w;
}

inline std::string csv_real(double v) { return format_real(v); }

// log ratio used for the plot columns of a criterion verdict
inline std::string criterion_csv(const CriterionVerdict& v, const SingularSequence& t, const SingularSequence& s,
                                 index_t horizon)
{
    std::ostringstream out;
    out << "n,t_n,s_n,ratio\n";
    const Witness* w = nullptr;
    if (const auto* h = std::get_if<Holds>(&v.outcome)) w = &h->witness;
    else if (const auto* i = std::get_if<InconclusiveAtHorizon>(&v.outcome); i && i->best_partial) w = &*i->best_partial;

    index_t m         = v.criterion == Criterion::Schatten ? 1 : 0;
    bool    t_over_s  = true;
    if (w) {
        if (const auto* sw = std::get_if<SchattenWitness>(w)) m = sw->m;
        else {
            const auto& tw = std::get<TimotinWitness>(*w);
            m              = tw.m;
            t_over_s       = tw.direction == TimotinDirection::T_over_S_shifted;
        }
    } else if (const auto* r = std::get_if<RefutedAnalytic>(&v.outcome); r && !r->certificates.empty()) {
        m = r->certificates.front().evidence_shift;
    }
    for (index_t n = 1; n <= horizon; ++n) {
        double ratio = 0.0;
        if (v.criterion == Criterion::Schatten) {
            ratio = std::exp(eaekit::detail::log_quotient(t.log_value_at(m * (n - 1) + 1), s.log_value_at(n)));
        } else {
            ratio = (t_over_s ? shifted_ratio(t, s, m, n) : shifted_ratio(s, t, m, n)).value;
        }
        out << n << ',' << csv_real(t.value_at(n).value) << ',' << csv_real(s.value_at(n).value) << ','
            << csv_real(ratio) << '\n';
    }
    return out.str();
}

struct Outcome {
    int         code = Ok;
    json        result;
    std::string csv;  // filled when the command has a tabular form
};

inline Matrix matrix_from_json(const json& j, const char* key)
{
    return read_matrix_string(j.at(key).get<std::string>()).a;
}

inline std::string hilbert_text(const Matrix& m) { return write_matrix(m); }

inline Outcome run_criteria(const RunConfig& cfg, const std::string& kind, const std::string& t_spec,
                            const std::string& s_spec, const std::string& meta_t, const std::string& meta_s)
{
    Criterion crit;
    if (kind == "schatten") crit = Criterion::Schatten;
    else if (kind == "timotin") crit = Criterion::Timotin;
    else throw ConfigError("--kind must be schatten or timotin");

    const auto t    = parse_sequence(t_spec);
    const auto s    = parse_sequence(s_spec);
    const auto opts = cfg.criterion_options();
    const auto v    = crit == Criterion::Schatten ? schatten_test(t, s, opts) : timotin_test(t, s, opts);

    Outcome o;
    json&   r    = o.result;
    r["criterion"] = to_string(crit);
    r["verdict"]   = v.label();
    r["t"]         = t_spec;
    r["s"]         = s_spec;
    r["horizon"]   = opts.horizon;
    r["m_max"]     = opts.m_max;
    r["witness"]     = nullptr;
    r["certificate"] = nullptr;
    std::visit(
        [&](const auto& out) {
            using O = std::decay_t<decltype(out)>;
            if constexpr (std::is_same_v<O, Holds>) {
                r["witness"]  = witness_json(out.witness);
                r["analytic"] = out.analytic;
                o.code        = Ok;
            } else if constexpr (std::is_same_v<O, RefutedAnalytic>) {
                json certs = json::array();
                for (const auto& c : out.certificates) certs.push_back(certificate_json(c));
                r["certificate"] = certs;
                o.code           = False;
            } else {
                r["reason"]       = out.reason;
                r["best_partial"] = out.best_partial ? witness_json(*out.best_partial) : json(nullptr);
                o.code            = Inconclusive;
            }
        },
        v.outcome);
    r["notes"] = v.notes;

    if (!meta_t.empty() || !meta_s.empty()) {
        const auto mt = parse_meta(meta_t.empty() ? "unspecified" : meta_t);
        const auto ms = parse_meta(meta_s.empty() ? "unspecified" : meta_s);
        r["meta_t"]   = meta_t;
        r["meta_s"]   = meta_s;
        json obs      = json::array();
        obs.push_back(obstruction_json(geometry_obstruction(mt, ms, Relation::EAE), Relation::EAE));
        obs.push_back(obstruction_json(geometry_obstruction(mt, ms, Relation::EAOE), Relation::EAOE));
        r["obstructions"] = obs;
        r["obstruction_policy"] = "obstruction notes are reported alongside the criterion verdict and never change it";
    }
    if (cfg.format == OutputFormat::Csv) o.csv = criterion_csv(v, t, s, opts.horizon);
    return o;
}

inline Outcome run_decide(const RunConfig& cfg, Relation rel, const std::string& t_path, const std::string& s_path)
{
    const auto t = read_matrix_file(t_path);
    const auto s = read_matrix_file(s_path);
    if (!t.a.square() || !s.a.square()) throw DataError("T and S must be square");

    Outcome o;
    json&   r  = o.result;
    r["relation"] = to_string(rel);
    r["T"]        = write_matrix(t);
    r["S"]        = write_matrix(s);
    r["notes"]    = json::array({"direct sums carry the l2 combination of the summand norms"});

    if (rel == Relation::EAE) {
        const auto d   = decide_eae(t.a, s.a, cfg.tol);
        r["eae"]       = d.eae;
        r["nullity_t"] = d.nullity_t;
        r["nullity_s"] = d.nullity_s;
        r["rank_t"]    = rank_json(d.rank_t);
        r["rank_s"]    = rank_json(d.rank_s);
        r["ill_conditioned"] = d.ill_conditioned;
        r["witness"]   = nullptr;
        if (d.witness) {
            r["witness"] = {{"k", d.witness->k},
                            {"l", d.witness->l},
                            {"E", hilbert_text(d.witness->E)},
                            {"F", hilbert_text(d.witness->F)}};
            r["check"]   = check_json(*d.check);
        }
        o.code = !d.eae ? False : (d.check && d.check->ok ? Ok : Inconclusive);
    } else {
        const auto d   = decide_eaoe(t.a, s.a, cfg.tol);
        r["eaoe"]      = d.eaoe;
        r["nullity_t"] = d.nullity_t;
        r["nullity_s"] = d.nullity_s;
        r["side"]      = d.side ? json(to_string(*d.side)) : json(nullptr);
        r["extension_dim"]   = d.extension_dim;
        r["ill_conditioned"] = d.ill_conditioned;
        r["witness"]   = nullptr;
        if (d.witness) {
            r["witness"] = {{"E", hilbert_text(d.witness->E)}, {"F", hilbert_text(d.witness->F)}};
            r["check"]   = check_json(*d.check);
        }
        o.code = !d.eaoe ? False : (d.check && d.check->ok ? Ok : Inconclusive);
    }
    return o;
}

inline Outcome run_snumber(const RunConfig& cfg, const std::string& a_path, const std::string& kind_name,
                           std::size_t index)
{
    const auto op   = read_matrix_file(a_path);
    SKind      kind;
    try {
        kind = parse_skind(kind_name);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    SNumberOptions opts;
    opts.seed       = eaekit::derive_seed(cfg.seed, 1);
    opts.inner.seed = eaekit::derive_seed(cfg.seed, 2);
    opts.final.seed = eaekit::derive_seed(cfg.seed, 3);

    const std::size_t dmin = std::min(op.rows(), op.cols());
    std::vector<std::size_t> ks;
    if (index) ks.push_back(index);
    else
        for (std::size_t k = 1; k <= dmin + 1; ++k) ks.push_back(k);

    Outcome o;
    json&   r   = o.result;
    r["kind"]   = to_string(kind);
    r["A"]      = write_matrix(op);
    json values = json::array();
    std::ostringstream csv;
    csv << "n,s_number,certified_lower_bound,method\n";
    for (auto k : ks) {
        const auto v = s_number(op, kind, k, opts);
        values.push_back({{"index", v.index},
                          {"value", jnum(v.value)},
                          {"certified_lower_bound", jnum(v.certified_lower_bound)},
                          {"method", to_string(v.method)}});
        csv << k << ',' << csv_real(v.value) << ',' << csv_real(v.certified_lower_bound) << ',' << to_string(v.method)
            << '\n';
    }
    r["values"] = values;
    if (cfg.format == OutputFormat::Csv) o.csv = csv.str();
    return o;
}

inline Outcome run_verify(const RunConfig& cfg, const std::string& report_path)
{
    std::ifstream in(report_path);
    if (!in) throw DataError("cannot open report " + report_path);
    const auto doc = nlohmann::json::parse(in);  // parse errors surface as data errors
    const auto& res = doc.at("result");

    Outcome o;
    json&   r = o.result;
    r["report"] = report_path;
    bool verified = false;

    if (res.contains("relation")) {
        if (res.at("witness").is_null()) throw DataError("report carries no witness");
        const Matrix t   = matrix_from_json(res, "T");
        const Matrix s   = matrix_from_json(res, "S");
        const auto&  w   = res.at("witness");
        const auto   rel = res.at("relation").get<std::string>();
        WitnessCheck c;
        if (rel == "EAE") {
            EAEWitnessFinite ew{matrix_from_json(w, "E"), matrix_from_json(w, "F"), w.at("k").get<std::size_t>(),
                                w.at("l").get<std::size_t>()};
            c = verify_eae_witness(ew, t, s, cfg.tol);
        } else if (rel == "EAOE") {
            OneSidedWitness ow{matrix_from_json(w, "E"), matrix_from_json(w, "F")};
            c = verify_eaoe_witness(ow, t, s, cfg.tol);
        } else {
            throw DataError("unknown relation " + rel);
        }
        r["relation"] = rel;
        r["check"]    = check_json(c);
        verified      = c.ok;
    } else if (res.contains("criterion")) {
        if (res.at("witness").is_null()) throw DataError("report carries no witness");
        const auto    t       = parse_sequence(res.at("t").get<std::string>());
        const auto    s       = parse_sequence(res.at("s").get<std::string>());
        const index_t horizon = res.at("horizon").get<index_t>();
        const auto&   w       = res.at("witness");
        const auto    crit    = res.at("criterion").get<std::string>();
        if (crit == "schatten") verified = verify_schatten_witness(t, s, schatten_from_json(w), horizon);
        else if (crit == "timotin") verified = verify_timotin_witness(t, s, timotin_from_json(w), horizon);
        else throw DataError("unknown criterion " + crit);
        r["criterion"] = crit;
        r["horizon"]   = horizon;
    } else {
        throw DataError("report has no verifiable witness");
    }
    r["verified"] = verified;
    o.code        = verified ? Ok : False;
    return o;
}

inline Outcome run_axioms(const RunConfig& cfg, const std::string& kind_name, std::size_t samples, std::size_t dims,
                          const std::string& p_text, const std::string& q_text)
{
    SKind kind;
    try {
        kind = parse_skind(kind_name);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    LpExponent p, q;
    try {
        p = parse_exponent(p_text);
        q = parse_exponent(q_text);
    } catch (const std::exception&) {
        throw ConfigError("--p/--q must be reals >= 1 or inf");
    }
    SNumberOptions sopts;
    sopts.seed       = eaekit::derive_seed(cfg.seed, 1);
    const auto sfun  = make_sfunction(kind, p, q, sopts);
    if (dims == 0 || dims > sfun.search_ceiling) throw ConfigError("--dims must lie in 1..search ceiling");

    AxiomOptions aopts;
    aopts.seed        = cfg.seed;
    const auto reps   = check_axioms(sfun, samples, dims, aopts);

    Outcome o;
    json&   r   = o.result;
    r["kind"]   = to_string(kind);
    r["method"] = to_string(sfun.method);
    r["p_dom"]  = p.to_string();
    r["p_cod"]  = q.to_string();
    r["samples"] = samples;
    r["dims"]    = dims;
    r["seed"]    = cfg.seed;
    json arr     = json::array();
    bool clean   = true;
    for (const auto& rep : reps) {
        json viol = json::array();
        for (const auto& v : rep.violations) {
            json inputs = json::object();
            for (const auto& [name, m] : v.inputs) inputs[name] = write_matrix(m, p, q);
            viol.push_back({{"sample", v.sample},
                            {"inequality", v.inequality},
                            {"indices", v.indices},
                            {"lhs", jnum(v.lhs)},
                            {"rhs", jnum(v.rhs)},
                            {"slack", jnum(v.slack)},
                            {"inputs", inputs}});
        }
        clean = clean && rep.passed();
        arr.push_back({{"id", rep.id},
                       {"samples_run", rep.samples_run},
                       {"checks", rep.checks},
                       {"violations", viol},
                       {"notes", rep.notes}});
    }
    r["reports"] = arr;
    o.code       = clean ? Ok : False;
    return o;
}

inline Outcome run_norms(const RunConfig& cfg, const std::string& a_path, std::size_t identity_n, const std::string& p_text,
                         const std::string& q_text)
{
    Outcome o;
    json&   r = o.result;
    if (!a_path.empty()) {
        const auto  op = read_matrix_file(a_path);
        NormOptions opts;
        opts.seed      = eaekit::derive_seed(cfg.seed, 4);
        const auto nr  = op_norm(op, opts);
        r["A"]         = write_matrix(op);
        r["value"]     = jnum(nr.value);
        r["method"]    = to_string(nr.method);
        json wit       = json::array();
        for (const auto& z : nr.witness) wit.push_back({jnum(z.real()), jnum(z.imag())});
        r["witness"]   = wit;
        if (cfg.format == OutputFormat::Csv) throw ConfigError("csv output is available for `norms --identity` only");
        return o;
    }
    if (identity_n == 0) throw ConfigError("norms needs --a FILE or --identity N");
    LpExponent p, q;
    try {
        p = parse_exponent(p_text);
        q = parse_exponent(q_text);
    } catch (const std::exception&) {
        throw ConfigError("--p/--q must be reals >= 1 or inf");
    }
    r["p"]        = p.to_string();
    r["q"]        = q.to_string();
    r["exponent"] = std::max(0.0, q.reciprocal() - p.reciprocal());
    json rows     = json::array();
    std::ostringstream csv;
    csv << "n,value,searched\n";
    bool agree = true;
    for (std::size_t n = 1; n <= identity_n; ++n) {
        const auto in = lp_identity_norm(n, p, q);
        agree         = agree && in.agrees;
        rows.push_back({{"n", n},
                        {"value", jnum(in.value)},
                        {"searched", in.searched ? jnum(*in.searched) : json(nullptr)},
                        {"agrees", in.agrees}});
        csv << n << ',' << csv_real(in.value) << ',' << (in.searched ? csv_real(*in.searched) : std::string()) << '\n';
    }
    r["identity"] = rows;
    r["agrees"]   = agree;
    o.code        = agree ? Ok : False;
    if (cfg.format == OutputFormat::Csv) o.csv = csv.str();
    return o;
}

}  // namespace detail

//
// run(args) with args excluding the program name; the report (or CSV) goes
// to the configured output path, else to `out`
//
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"equivalence-after-extension toolkit", "eaekit"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string config_path, output, format, seed, horizon, m_max, delta_floor, tol_svd, tol_witness, rank_tol,
        split_floor, cond_floor;
    bool timing = false;
    std::vector<std::pair<std::string, CLI::Option*>> overrides;
    auto add = [&](const char* flag, const char* key, std::string& dest, const char* help) {
        overrides.emplace_back(key, app.add_option(flag, dest, help));
    };
    app.add_option("--config", config_path, "config file (default: $EAEKIT_CONFIG)");
    add("--output,-o", "output", output, "report path (default: stdout)");
    add("--format", "format", format, "json or csv");
    add("--seed", "seed", seed, "base RNG seed");
    add("--horizon", "horizon", horizon, "criterion horizon");
    add("--m-max", "m_max", m_max, "largest shift m searched");
    add("--delta-floor", "delta_floor", delta_floor, "smallest admissible Timotin delta");
    add("--tol-svd", "tol_svd", tol_svd, "SVD tolerance");
    add("--tol-witness", "tol_witness", tol_witness, "witness residual tolerance");
    add("--rank-tol", "rank_tol", rank_tol, "relative rank cut");
    add("--split-floor", "split_floor", split_floor, "L + K split floor, relative");
    add("--cond-floor", "cond_floor", cond_floor, "smallest acceptable reciprocal condition");
    app.add_flag("--timing", timing, "include wall time in the report");

    // criteria
    auto*       crit = app.add_subcommand("criteria", "Schatten / Timotin criteria on two sequence specs");
    std::string c_kind, c_t, c_s, c_mt, c_ms;
    crit->add_option("--kind", c_kind, "schatten or timotin")->required();
    crit->add_option("--t", c_t, "sequence spec for T")->required();
    crit->add_option("--s", c_s, "sequence spec for S")->required();
    crit->add_option("--meta-t", c_mt, "hilbert | lp:<p>[,compact] | unspecified");
    crit->add_option("--meta-s", c_ms, "hilbert | lp:<p>[,compact] | unspecified");

    // finite
    auto* fin = app.add_subcommand("finite", "finite-dimensional decisions and checks");
    fin->require_subcommand(1);
    std::string f_t, f_s, f_a, f_kind = "approximation", f_report;
    std::size_t f_index = 0;
    auto*       eae     = fin->add_subcommand("decide-eae", "equivalence after extension");
    eae->add_option("--t", f_t, "matrix file for T")->required();
    eae->add_option("--s", f_s, "matrix file for S")->required();
    auto* eaoe = fin->add_subcommand("decide-eaoe", "equivalence after one-sided extension");
    eaoe->add_option("--t", f_t, "matrix file for T")->required();
    eaoe->add_option("--s", f_s, "matrix file for S")->required();
    auto* snum = fin->add_subcommand("snumber", "s-numbers of a matrix operator");
    snum->add_option("--a", f_a, "matrix file")->required();
    snum->add_option("--kind", f_kind, "hilbert | approximation | kolmogorov | gelfand");
    snum->add_option("--index,-k", f_index, "single index k (default: all)");
    auto* ver = fin->add_subcommand("verify", "re-verify the witness stored in a report");
    ver->add_option("--report", f_report, "report JSON")->required();

    // axioms
    auto*       ax = app.add_subcommand("axioms", "s-function axiom checks");
    ax->require_subcommand(1);
    auto*       ax_run = ax->add_subcommand("run", "run the five axioms on seeded samples");
    std::string a_kind = "approximation", a_p = "2", a_q = "2";
    std::size_t a_samples = 100, a_dims = 6;
    ax_run->add_option("--kind", a_kind, "s-number kind");
    ax_run->add_option("--samples", a_samples, "sample count");
    ax_run->add_option("--dims", a_dims, "dimension ceiling");
    ax_run->add_option("--p", a_p, "domain exponent");
    ax_run->add_option("--q", a_q, "codomain exponent");

    // norms
    auto*       nm = app.add_subcommand("norms", "operator norms and the identity-norm law");
    std::string n_a, n_p = "2", n_q = "2";
    std::size_t n_identity = 0;
    nm->add_option("--a", n_a, "matrix file");
    nm->add_option("--identity", n_identity, "tabulate ||id: l^p_n -> l^q_n|| for n = 1..N");
    nm->add_option("--p", n_p, "domain exponent");
    nm->add_option("--q", n_q, "codomain exponent");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return Usage;
    }

    RunConfig cfg;
    try {
        if (!config_path.empty()) load_config_file(cfg, config_path);
        else if (const char* env = std::getenv(config_env_var()); env && *env) load_config_file(cfg, env);
        for (const auto& [key, opt] : overrides)
            if (opt->count()) apply_config_value(cfg, key, opt->as<std::string>());
        cfg.validate();
    } catch (const ConfigError& e) {
        err << "usage error: " << e.what() << "\n";
        return Usage;
    }

    const auto      t0 = std::chrono::steady_clock::now();
    detail::Outcome outcome;
    try {
        if (crit->parsed()) outcome = detail::run_criteria(cfg, c_kind, c_t, c_s, c_mt, c_ms);
        else if (eae->parsed()) outcome = detail::run_decide(cfg, Relation::EAE, f_t, f_s);
        else if (eaoe->parsed()) outcome = detail::run_decide(cfg, Relation::EAOE, f_t, f_s);
        else if (snum->parsed()) outcome = detail::run_snumber(cfg, f_a, f_kind, f_index);
        else if (ver->parsed()) outcome = detail::run_verify(cfg, f_report);
        else if (ax_run->parsed()) outcome = detail::run_axioms(cfg, a_kind, a_samples, a_dims, a_p, a_q);
        else if (nm->parsed()) outcome = detail::run_norms(cfg, n_a, n_identity, n_p, n_q);
        if (cfg.format == OutputFormat::Csv && outcome.csv.empty())
            throw ConfigError("csv output is available for criteria, finite snumber and norms --identity");
    } catch (const ConfigError& e) {
        err << "usage error: " << e.what() << "\n";
        return Usage;
    } catch (const std::exception& e) {
        err << "data error: " << e.what() << "\n";
        return Data;
    }

    std::string text;
    if (cfg.format == OutputFormat::Csv) {
        text = outcome.csv;
    } else {
        json report;
        report["version"] = kReportVersion;
        report["command"] = args;
        report["config"]  = config_snapshot(cfg);
        if (timing)
            outcome.result["wall_time_s"] =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report["result"] = outcome.result;
        text             = report.dump(2) + "\n";
    }

    if (cfg.output.empty()) {
        out << text;
    } else {
        std::ofstream f(cfg.output, std::ios::binary);
        if (!(f << text)) {
            err << "data error: cannot write " << cfg.output << "\n";
            return Data;
        }
    }
    return outcome.code;
}

inline int run(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace eaekit::cli

#endif  // EAEKIT_CLI_HPP
