#ifndef EAEKIT_OPTIMIZE_HPP
#define EAEKIT_OPTIMIZE_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "eaekit/random.hpp"

namespace eaekit {

struct PatternSearchOptions {
    double        initial_step = 0.25;
    double        min_step     = 1e-7;
    int           max_evals    = 20000;
    int           random_polls = 8;  // extra random directions per poll, for non-smooth kinks
    std::uint64_t seed         = 1;
};

struct PatternSearchResult {
    std::vector<double> x;
    double              value = 0.0;
    int                 evals = 0;
};

//
// derivative-free compass search with random polling; minimises f
//
inline PatternSearchResult pattern_minimize(const std::function<double(const std::vector<double>&)>& f,
                                            std::vector<double> x0, const PatternSearchOptions& opts = {})
{
    PatternSearchResult res;
    res.x     = std::move(x0);
    res.value = f(res.x);
    res.evals = 1;

    const std::size_t dim  = res.x.size();
    double            step = opts.initial_step;
    Rng               rng(opts.seed);
    std::vector<double> dir(dim), trial(dim);

    auto poll = [&](const std::vector<double>& d) {
        for (int sign : {1, -1}) {
            for (std::size_t i = 0; i < dim; ++i) trial[i] = res.x[i] + sign * step * d[i];
            const double v = f(trial);
            ++res.evals;
            if (v < res.value) {
                res.value = v;
                res.x     = trial;
                return true;
            }
        }
        return false;
    };

    while (step > opts.min_step && res.evals < opts.max_evals) {
        bool improved = false;
        for (std::size_t i = 0; i < dim && !improved; ++i) {
            std::fill(dir.begin(), dir.end(), 0.0);
            dir[i]   = 1.0;
            improved = poll(dir);
        }
        for (int k = 0; k < opts.random_polls && !improved; ++k) {
            double n = 0.0;
            for (auto& d : dir) {
                d = rng.normal();
                n += d * d;
            }
            n = std::sqrt(n);
            for (auto& d : dir) d /= n;
            improved = poll(dir);
        }
        if (improved) step *= 1.5;
        else step *= 0.5;
    }
    return res;
}

}  // namespace eaekit

#endif  // EAEKIT_OPTIMIZE_HPP
