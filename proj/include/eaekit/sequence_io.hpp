#ifndef EAEKIT_SEQUENCE_IO_HPP
#define EAEKIT_SEQUENCE_IO_HPP

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eaekit/sequence.hpp"

namespace eaekit {

// malformed textual input (sequence specs, matrix files, reports)
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline double parse_real(std::string_view s, const char* what)
{
    s = trim(s);
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v   = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        throw DataError(std::string("malformed number for ") + what + ": '" + std::string(s) + "'");
    return v;
}

inline std::vector<double> parse_list(std::string_view s)
{
    s = trim(s);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw DataError("explicit values must be a [..] list");
    s = s.substr(1, s.size() - 2);
    std::vector<double> out;
    if (trim(s).empty()) return out;
    while (true) {
        const auto comma = s.find(',');
        out.push_back(parse_real(s.substr(0, comma), "explicit value"));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

struct ParsedSpec {
    DecayClass cls;
    double     scale = 1.0;
    bool       has_scale = false;
};

inline ParsedSpec parse_spec(std::string_view text)
{
    text             = trim(text);
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw DataError("sequence spec needs 'kind:params': '" + std::string(text) + "'");
    const std::string_view kind = trim(text.substr(0, colon));
    std::string_view       rest = text.substr(colon + 1);

    std::optional<double>              r, alpha, scale;
    std::optional<std::vector<double>> values;
    std::optional<DecayClass>          tail;

    while (!trim(rest).empty()) {
        rest = trim(rest);
        if (rest.front() == '[') {
            // a bare [..] list is shorthand for values=[..]
            const auto close = rest.find(']');
            if (close == std::string_view::npos) throw DataError("unterminated [ in explicit list");
            if (values) throw DataError("explicit value list given twice");
            values = parse_list(rest.substr(0, close + 1));
            rest.remove_prefix(close + 1);
            rest = trim(rest);
            if (!rest.empty()) {
                if (rest.front() != ';' && rest.front() != ',') throw DataError("expected ';' after the value list");
                rest.remove_prefix(1);
            }
            continue;
        }
        const auto eq  = rest.find('=');
        if (eq == std::string_view::npos) throw DataError("expected key=value in '" + std::string(rest) + "'");
        const auto key = trim(rest.substr(0, eq));
        rest.remove_prefix(eq + 1);
        if (key == "tail") {
            // the tail spec consumes the remainder
            auto sub = parse_spec(rest);
            if (sub.has_scale) throw DataError("a tail spec cannot carry its own scale");
            tail = std::move(sub.cls);
            break;
        }
        std::size_t end = 0;
        if (!rest.empty() && rest.front() == '[') {
            end = rest.find(']');
            if (end == std::string_view::npos) throw DataError("unterminated [ in explicit list");
            ++end;
        } else {
            end = rest.find_first_of(";,");
            if (end == std::string_view::npos) end = rest.size();
        }
        const auto val = rest.substr(0, end);
        rest.remove_prefix(end);
        if (!rest.empty()) {
            if (trim(rest).empty() || (rest.front() != ';' && rest.front() != ','))
                throw DataError("expected ';' between parameters");
            rest.remove_prefix(1);
        }
        if (key == "r") r = parse_real(val, "r");
        else if (key == "alpha") alpha = parse_real(val, "alpha");
        else if (key == "scale") scale = parse_real(val, "scale");
        else if (key == "values") values = parse_list(val);
        else throw DataError("unknown sequence parameter '" + std::string(key) + "'");
    }

    ParsedSpec out{DecayClass::geometric(0.5)};
    try {
        if (kind == "geometric") {
            if (!r || alpha || values || tail) throw DataError("geometric takes exactly r=");
            out.cls = DecayClass::geometric(*r);
        } else if (kind == "polynomial") {
            if (!alpha || r || values || tail) throw DataError("polynomial takes exactly alpha=");
            out.cls = DecayClass::polynomial(*alpha);
        } else if (kind == "explicit") {
            if (r || alpha) throw DataError("explicit takes a value list and an optional tail=");
            if (!values) throw DataError("explicit needs a [..] value list");
            out.cls = DecayClass::explicit_values(*values, tail);
        } else {
            throw DataError("unknown sequence kind '" + std::string(kind) + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what());
    }
    if (scale) {
        if (!(*scale > 0.0) || !std::isfinite(*scale)) throw DataError("scale must be a positive finite real");
        out.scale     = *scale;
        out.has_scale = true;
    }
    return out;
}

}  // namespace detail

//
// geometric:r=0.5   polynomial:alpha=1;scale=2   explicit:[1,0.5,0.25];tail=geometric:r=0.5
//
inline SingularSequence parse_sequence(std::string_view text)
{
    auto spec = detail::parse_spec(text);
    return SingularSequence(std::move(spec.cls), spec.scale);
}

// hilbert | unspecified | lp:<p> ; each optionally followed by ",compact"
inline OperatorMeta parse_meta(std::string_view text)
{
    std::string_view s       = detail::trim(text);
    bool             compact = false;
    for (std::string_view suffix : {",compact", ",noncompact"}) {
        if (s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix) {
            compact = suffix == ",compact";
            s.remove_suffix(suffix.size());
            break;
        }
    }
    if (s == "hilbert") return OperatorMeta::hilbert(compact);
    if (s == "unspecified") return OperatorMeta::unspecified(compact);
    if (s.substr(0, 3) == "lp:") {
        const double p = detail::parse_real(s.substr(3), "lp exponent");
        try {
            return OperatorMeta::lp(p, compact);
        } catch (const std::invalid_argument& e) {
            throw DataError(e.what());
        }
    }
    throw DataError("unknown operator meta '" + std::string(text) + "'");
}

}  // namespace eaekit

#endif  // EAEKIT_SEQUENCE_IO_HPP
