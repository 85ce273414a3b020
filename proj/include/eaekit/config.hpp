#ifndef EAEKIT_CONFIG_HPP
#define EAEKIT_CONFIG_HPP

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "eaekit/criteria.hpp"
#include "eaekit/relations.hpp"
#include "eaekit/sequence_io.hpp"

namespace eaekit {

// bad configuration values or config file syntax (a usage error, not a data error)
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Json, Csv };

struct RunConfig {
    index_t       horizon     = 10000;
    index_t       m_max       = 16;
    double        delta_floor = 1e-6;
    Tolerances    tol{};
    std::uint64_t seed   = 0;
    std::string   output;  // empty: standard output
    OutputFormat  format = OutputFormat::Json;

    CriterionOptions criterion_options() const { return {horizon, m_max, delta_floor}; }

    void validate() const
    {
        if (horizon <= m_max) throw ConfigError("horizon must exceed m_max");
        if (m_max == 0) throw ConfigError("m_max must be positive");
        if (!(delta_floor > 0.0 && delta_floor < 1.0)) throw ConfigError("delta_floor must lie in (0, 1)");
        for (double v : {tol.tol_svd, tol.tol_witness, tol.rank_tol, tol.split_floor, tol.cond_floor})
            if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("tolerances must be positive");
    }
};

inline const char* config_env_var() { return "EAEKIT_CONFIG"; }

namespace detail {

inline std::uint64_t parse_count(const std::string& key, const std::string& v)
{
    std::uint64_t out = 0;
    auto [p, ec]      = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size() || v.empty())
        throw ConfigError("config key " + key + " needs a nonnegative integer, got '" + v + "'");
    return out;
}

inline double parse_config_real(const std::string& key, const std::string& v)
{
    try {
        return parse_real(v, key.c_str());
    } catch (const DataError& e) {
        throw ConfigError(e.what());
    }
}

}  // namespace detail

inline void apply_config_value(RunConfig& c, const std::string& key, const std::string& value)
{
    using detail::parse_config_real;
    if (key == "horizon") c.horizon = detail::parse_count(key, value);
    else if (key == "m_max") c.m_max = detail::parse_count(key, value);
    else if (key == "seed") c.seed = detail::parse_count(key, value);
    else if (key == "delta_floor") c.delta_floor = parse_config_real(key, value);
    else if (key == "tol_svd") c.tol.tol_svd = parse_config_real(key, value);
    else if (key == "tol_witness") c.tol.tol_witness = parse_config_real(key, value);
    else if (key == "rank_tol") c.tol.rank_tol = parse_config_real(key, value);
    else if (key == "split_floor") c.tol.split_floor = parse_config_real(key, value);
    else if (key == "cond_floor") c.tol.cond_floor = parse_config_real(key, value);
    else if (key == "output") c.output = value;
    else if (key == "format") {
        if (value == "json") c.format = OutputFormat::Json;
        else if (value == "csv") c.format = OutputFormat::Csv;
        else throw ConfigError("format must be json or csv");
    } else throw ConfigError("unknown config key '" + key + "'");
}

// `key = value` lines; '#' starts a comment
inline void load_config(RunConfig& c, std::istream& in)
{
    std::string line;
    int         lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto body = detail::trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        apply_config_value(c, std::string(detail::trim(body.substr(0, eq))), std::string(detail::trim(body.substr(eq + 1))));
    }
}

inline void load_config_file(RunConfig& c, const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    load_config(c, in);
}

inline nlohmann::ordered_json config_snapshot(const RunConfig& c)
{
    nlohmann::ordered_json j;
    j["horizon"]     = c.horizon;
    j["m_max"]       = c.m_max;
    j["delta_floor"] = c.delta_floor;
    j["tol_svd"]     = c.tol.tol_svd;
    j["tol_witness"] = c.tol.tol_witness;
    j["rank_tol"]    = c.tol.rank_tol;
    j["split_floor"] = c.tol.split_floor;
    j["cond_floor"]  = c.tol.cond_floor;
    j["seed"]        = c.seed;
    j["format"]      = c.format == OutputFormat::Json ? "json" : "csv";
    return j;
}

}  // namespace eaekit

#endif  // EAEKIT_CONFIG_HPP
