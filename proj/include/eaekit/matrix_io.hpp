#ifndef EAEKIT_MATRIX_IO_HPP
#define EAEKIT_MATRIX_IO_HPP

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "eaekit/operator.hpp"
#include "eaekit/sequence_io.hpp"

namespace eaekit {

//
// text format:
//   rows cols p_dom p_cod
//   re im  re im  ...      (row-major, whitespace separated)
// exponents are reals >= 1 or "inf"
//

inline std::string format_real(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string write_matrix(const Matrix& a, LpExponent p_dom = LpExponent(2.0), LpExponent p_cod = LpExponent(2.0))
{
    std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + " " + p_dom.to_string() + " " +
                      p_cod.to_string() + "\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) out += "  ";
            out += format_real(a(i, j).real()) + " " + format_real(a(i, j).imag());
        }
        out += "\n";
    }
    return out;
}

inline std::string write_matrix(const MatrixOperator& op) { return write_matrix(op.a, op.p_dom, op.p_cod); }

inline MatrixOperator read_matrix(std::istream& in)
{
    auto token = [&](const char* what) {
        std::string t;
        if (!(in >> t)) throw DataError(std::string("matrix text ended before ") + what);
        return t;
    };
    auto count = [&](const char* what) {
        const double v = detail::parse_real(token(what), what);
        if (!(v >= 1.0) || v != std::floor(v) || v > 4096) throw DataError(std::string("bad matrix ") + what);
        return static_cast<std::size_t>(v);
    };
    auto exponent = [&](const char* what) {
        const double v = detail::parse_real(token(what), what);
        if (std::isinf(v) && v > 0) return LpExponent::infinity();
        if (!(v >= 1.0) || !std::isfinite(v)) throw DataError(std::string("exponent must be >= 1 or inf: ") + what);
        return LpExponent(v);
    };
    const std::size_t rows = count("rows");
    const std::size_t cols = count("cols");
    const LpExponent  pd   = exponent("p_dom");
    const LpExponent  pc   = exponent("p_cod");
    Matrix            a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const double re = detail::parse_real(token("all entries were read"), "entry");
            const double im = detail::parse_real(token("all entries were read"), "entry");
            if (!std::isfinite(re) || !std::isfinite(im)) throw DataError("non-finite matrix entry");
            a(i, j) = scalar_t(re, im);
        }
    std::string extra;
    if (in >> extra) throw DataError("trailing data after matrix entries");
    return MatrixOperator(std::move(a), pd, pc);
}

inline MatrixOperator read_matrix_string(const std::string& text)
{
    std::istringstream in(text);
    return read_matrix(in);
}

inline MatrixOperator read_matrix_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DataError("cannot open matrix file " + path);
    return read_matrix(in);
}

}  // namespace eaekit

#endif  // EAEKIT_MATRIX_IO_HPP
