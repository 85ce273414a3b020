#ifndef EAEKIT_SEQUENCE_HPP
#define EAEKIT_SEQUENCE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace eaekit {

using index_t = std::uint64_t;  // 1-based sequence index

struct Geometric {
    double base;  // r ∈ (0,1): value r^n
};

struct Polynomial {
    double exponent;  // α > 0: value n^{-α}
};

struct DecayClass;

//
// finite prefix; beyond it either a tail class (evaluated at the absolute
// index) or, without a tail, the last value frozen
//
struct Explicit {
    std::vector<double>               values;
    std::shared_ptr<const DecayClass> tail;
};

struct DecayClass {
    std::variant<Geometric, Polynomial, Explicit> form;

    static DecayClass geometric(double r)
    {
        if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("Geometric: base must lie in (0,1)");
        return DecayClass{Geometric{r}};
    }

    static DecayClass polynomial(double alpha)
    {
        if (!(alpha > 0.0) || !std::isfinite(alpha))
            throw std::invalid_argument("Polynomial: exponent must be positive");
        return DecayClass{Polynomial{alpha}};
    }

    static DecayClass explicit_values(std::vector<double> values, std::optional<DecayClass> tail = std::nullopt);

    bool is_geometric() const { return std::holds_alternative<Geometric>(form); }
    bool is_polynomial() const { return std::holds_alternative<Polynomial>(form); }
    bool is_explicit() const { return std::holds_alternative<Explicit>(form); }
};

namespace detail {

// unit-scale log value; -inf for an exact zero
inline double class_log_value(const DecayClass& c, index_t n, bool& frozen)
{
    const double dn = static_cast<double>(n);
    if (const auto* g = std::get_if<Geometric>(&c.form)) return dn * std::log(g->base);
    if (const auto* p = std::get_if<Polynomial>(&c.form)) return -p->exponent * std::log(dn);
    const auto& e = std::get<Explicit>(c.form);
    if (n <= e.values.size()) {
        const double v = e.values[n - 1];
        return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
    }
    if (e.tail) return class_log_value(*e.tail, n, frozen);
    frozen         = true;
    const double v = e.values.back();
    return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
}

inline double class_value(const DecayClass& c, index_t n, bool& frozen)
{
    const double dn = static_cast<double>(n);
    if (const auto* g = std::get_if<Geometric>(&c.form)) return std::pow(g->base, dn);
    if (const auto* p = std::get_if<Polynomial>(&c.form)) return std::pow(dn, -p->exponent);
    const auto& e = std::get<Explicit>(c.form);
    if (n <= e.values.size()) return e.values[n - 1];
    if (e.tail) return class_value(*e.tail, n, frozen);
    frozen = true;
    return e.values.back();
}

}  // namespace detail

inline DecayClass DecayClass::explicit_values(std::vector<double> values, std::optional<DecayClass> tail)
{
    if (values.empty()) throw std::invalid_argument("Explicit: empty value list");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] >= 0.0) || !std::isfinite(values[i]))
            throw std::invalid_argument("Explicit: values must be finite and nonnegative");
        if (i > 0 && values[i] > values[i - 1]) throw std::invalid_argument("Explicit: values must be non-increasing");
    }
    Explicit e{std::move(values), nullptr};
    if (tail) {
        bool         frozen = false;
        const double first  = detail::class_value(*tail, e.values.size() + 1, frozen);
        if (first > e.values.back())
            throw std::invalid_argument("Explicit: tail value at the first tail index exceeds the last explicit value");
        e.tail = std::make_shared<const DecayClass>(std::move(*tail));
    }
    return DecayClass{std::move(e)};
}

//
// the class reached after stripping explicit prefixes; nullptr for a frozen tail
//
inline const DecayClass* asymptotic_class(const DecayClass& c)
{
    const DecayClass* cur = &c;
    while (const auto* e = std::get_if<Explicit>(&cur->form)) {
        if (!e->tail) return nullptr;
        cur = e->tail.get();
    }
    return cur;
}

// total number of explicit entries before the asymptotic tail takes over
inline index_t prefix_length(const DecayClass& c)
{
    index_t           len = 0;
    const DecayClass* cur = &c;
    while (const auto* e = std::get_if<Explicit>(&cur->form)) {
        len = std::max<index_t>(len, e->values.size());
        if (!e->tail) break;
        cur = e->tail.get();
    }
    return len;
}

struct SeqValue {
    double value       = 0.0;
    bool   frozen_tail = false;  // explicit list exhausted, last value held
    bool   underflow   = false;  // true value positive but not representable
};

//
// s-number model: scale × class value
//
class SingularSequence {
public:
    SingularSequence(DecayClass cls, double scale = 1.0) : class_(std::move(cls)), scale_(scale)
    {
        if (!(scale > 0.0) || !std::isfinite(scale))
            throw std::invalid_argument("SingularSequence: scale must be a positive finite real");
    }

    const DecayClass& decay() const noexcept { return class_; }
    double            scale() const noexcept { return scale_; }

    // both tails classified (no frozen explicit list)
    bool classified() const noexcept { return asymptotic_class(class_) != nullptr; }

    SeqValue value_at(index_t n) const
    {
        if (n < 1) throw std::invalid_argument("value_at: index is 1-based");
        SeqValue out;
        out.value = scale_ * detail::class_value(class_, n, out.frozen_tail);
        if (out.value == 0.0) {
            bool         ignored = false;
            const double lv      = detail::class_log_value(class_, n, ignored);
            out.underflow        = std::isfinite(lv);
        }
        return out;
    }

    // natural log of the term; -inf for an exact zero
    double log_value_at(index_t n) const
    {
        if (n < 1) throw std::invalid_argument("log_value_at: index is 1-based");
        bool frozen = false;
        return std::log(scale_) + detail::class_log_value(class_, n, frozen);
    }

private:
    DecayClass class_;
    double     scale_;
};

struct Ratio {
    double value       = 0.0;   // may be +inf
    double log_value   = 0.0;   // natural log; ±inf at the extremes
    bool   zero_by_zero = false;  // 0/0, conventionally 1
    bool   frozen_tail = false;
};

//
// numerator_n / denominator_{n+m}, evaluated in the log domain
//
inline Ratio shifted_ratio(const SingularSequence& numerator, const SingularSequence& denominator, index_t m, index_t n)
{
    if (n < 1) throw std::invalid_argument("shifted_ratio: index is 1-based");
    const double ln_num = numerator.log_value_at(n);
    const double ln_den = denominator.log_value_at(n + m);
    Ratio        r;
    r.frozen_tail = numerator.value_at(n).frozen_tail || denominator.value_at(n + m).frozen_tail;
    const double ninf = -std::numeric_limits<double>::infinity();
    if (ln_num == ninf && ln_den == ninf) {
        r.zero_by_zero = true;
        r.value        = 1.0;
        r.log_value    = 0.0;
        return r;
    }
    if (ln_den == ninf) {
        r.value     = std::numeric_limits<double>::infinity();
        r.log_value = std::numeric_limits<double>::infinity();
        return r;
    }
    r.log_value = ln_num - ln_den;
    r.value     = std::exp(r.log_value);
    return r;
}

//
// hypotheses on the underlying space, consumed by the obstruction rules
//
struct OperatorMeta {
    enum class Space { Hilbert, LpSequence, Unspecified };

    Space  space   = Space::Unspecified;
    double p       = 2.0;  // meaningful for LpSequence
    bool   compact = false;

    static OperatorMeta hilbert(bool compact = true) { return {Space::Hilbert, 2.0, compact}; }
    static OperatorMeta unspecified(bool compact = false) { return {Space::Unspecified, 2.0, compact}; }
    static OperatorMeta lp(double p, bool compact)
    {
        if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("OperatorMeta: need finite p >= 1");
        return {Space::LpSequence, p, compact};
    }
};

}  // namespace eaekit

#endif  // EAEKIT_SEQUENCE_HPP
