#ifndef EAEKIT_OPERATOR_HPP
#define EAEKIT_OPERATOR_HPP

#include <cstdio>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "eaekit/matrix.hpp"

namespace eaekit {

//
// exponent p of an ℓ^p_n space; p = ∞ is a distinct state, never a large finite p
//
class LpExponent {
public:
    constexpr LpExponent() = default;

    explicit LpExponent(double p) : p_(p)
    {
        if (!(p >= 1.0) || !std::isfinite(p))
            throw std::invalid_argument("LpExponent: p must be a finite real >= 1 (use infinity())");
    }

    static constexpr LpExponent infinity()
    {
        LpExponent e;
        e.inf_ = true;
        e.p_   = 0.0;
        return e;
    }

    constexpr bool   is_infinite() const noexcept { return inf_; }
    constexpr double value() const noexcept { return inf_ ? std::numeric_limits<double>::infinity() : p_; }
    constexpr bool   is(double p) const noexcept { return !inf_ && p_ == p; }

    // 1/p with 1/∞ = 0
    constexpr double reciprocal() const noexcept { return inf_ ? 0.0 : 1.0 / p_; }

    // Hölder conjugate p'
    LpExponent dual() const
    {
        if (inf_) return LpExponent(1.0);
        if (p_ == 1.0) return infinity();
        return LpExponent(p_ / (p_ - 1.0));
    }

    std::string to_string() const
    {
        if (inf_) return "inf";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", p_);
        return buf;
    }

    friend constexpr bool operator==(const LpExponent&, const LpExponent&) = default;

private:
    double p_   = 2.0;
    bool   inf_ = false;
};

inline LpExponent parse_exponent(const std::string& s)
{
    if (s == "inf" || s == "infinity" || s == "Inf") return LpExponent::infinity();
    std::size_t pos = 0;
    double      v   = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad exponent: " + s);
    return LpExponent(v);
}

//
// finite matrix acting ℓ^{p_dom}_cols → ℓ^{p_cod}_rows
//
struct MatrixOperator {
    Matrix     a;
    LpExponent p_dom{};
    LpExponent p_cod{};

    MatrixOperator() = default;

    explicit MatrixOperator(Matrix m, LpExponent dom = LpExponent(2.0), LpExponent cod = LpExponent(2.0))
        : a(std::move(m)), p_dom(dom), p_cod(cod)
    {
        if (!a.all_finite()) throw std::invalid_argument("MatrixOperator: non-finite entry");
    }

    std::size_t rows() const noexcept { return a.rows(); }
    std::size_t cols() const noexcept { return a.cols(); }
    bool        hilbert() const noexcept { return p_dom.is(2.0) && p_cod.is(2.0); }

    MatrixOperator with_matrix(Matrix m) const { return MatrixOperator(std::move(m), p_dom, p_cod); }
};

}  // namespace eaekit

#endif  // EAEKIT_OPERATOR_HPP
