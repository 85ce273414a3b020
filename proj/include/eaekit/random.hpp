#ifndef EAEKIT_RANDOM_HPP
#define EAEKIT_RANDOM_HPP

#include <cstdint>
#include <random>

#include "eaekit/matrix.hpp"
#include "eaekit/svd.hpp"

namespace eaekit {

// splitmix64 step; derives independent per-task seeds from one base seed
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream)
{
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z               = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z               = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double normal() { return normal_(eng_); }
    double uniform(double lo = 0.0, double hi = 1.0) { return lo + (hi - lo) * unif_(eng_); }

    std::size_t index(std::size_t lo, std::size_t hi)  // inclusive
    {
        return lo + static_cast<std::size_t>(unif_(eng_) * static_cast<double>(hi - lo + 1)) % (hi - lo + 1);
    }

    scalar_t complex_normal() { return {normal() / std::sqrt(2.0), normal() / std::sqrt(2.0)}; }

    Matrix gaussian(std::size_t rows, std::size_t cols, bool complex_entries = true)
    {
        Matrix m(rows, cols);
        for (auto& z : m.data()) z = complex_entries ? complex_normal() : scalar_t(normal(), 0.0);
        return m;
    }

    // Gaussian matrix conditioned to rank r by truncated SVD
    Matrix gaussian_rank(std::size_t rows, std::size_t cols, std::size_t rank, bool complex_entries = true)
    {
        Matrix g = gaussian(rows, cols, complex_entries);
        auto   s = svd(g);
        for (std::size_t k = rank; k < s.singular_values.size(); ++k) s.singular_values[k] = 0.0;
        return reconstruct(s);
    }

    cvector complex_vector(std::size_t n)
    {
        cvector v(n);
        for (auto& z : v) z = complex_normal();
        return v;
    }

private:
    std::mt19937_64                        eng_;
    std::normal_distribution<double>       normal_{0.0, 1.0};
    std::uniform_real_distribution<double> unif_{0.0, 1.0};
};

}  // namespace eaekit

#endif  // EAEKIT_RANDOM_HPP
