// Seeded instance generators shared by the unit tests and the acceptance run.
#ifndef EAEKIT_TESTS_FIXTURES_HPP
#define EAEKIT_TESTS_FIXTURES_HPP

#include "eaekit/elimination.hpp"
#include "eaekit/random.hpp"

namespace fixture {

using eaekit::Matrix;
using eaekit::Rng;

struct SquarePair {
    Matrix      t, s;
    std::size_t nullity_t = 0, nullity_s = 0;  // by construction
};

// square T, S up to dim_max with prescribed ranks; equal nullity about half the time
inline SquarePair square_pair(Rng& rng, std::size_t dim_max)
{
    SquarePair p;
    const std::size_t k = rng.index(1, dim_max), l = rng.index(1, dim_max);
    p.nullity_t         = rng.index(0, k);
    if (rng.uniform() < 0.5 && p.nullity_t <= l) p.nullity_s = p.nullity_t;
    else p.nullity_s = rng.index(0, l);
    p.t = rng.gaussian_rank(k, k, k - p.nullity_t);
    p.s = rng.gaussian_rank(l, l, l - p.nullity_s);
    return p;
}

struct Coupling {
    Matrix      u;
    std::size_t k = 0;
    Matrix      t, s;  // t = U11, s = (U^{-1})22
};

// random invertible U whose (1,1) block has prescribed rank
inline Coupling random_coupling(Rng& rng, std::size_t dim_max)
{
    Coupling c;
    c.k                 = rng.index(1, dim_max);
    const std::size_t l = rng.index(1, dim_max);
    // U is singular unless rank U11 >= k - l
    const std::size_t r = rng.index(c.k > l ? c.k - l : 0, c.k);
    c.u                 = rng.gaussian(c.k + l, c.k + l);
    c.u.set_block(0, 0, rng.gaussian_rank(c.k, c.k, r));
    c.t = c.u.block(0, 0, c.k, c.k);
    c.s = eaekit::inverse(c.u).block(c.k, c.k, l, l);
    return c;
}

// coupling for T = diag(1, 0), S = diag(5, 0) on (x1, x2, y1, y2), moved by
// seeded gauges that keep U11 and (U^{-1})22 fixed
inline Coupling diag_coupling(Rng& rng)
{
    Matrix u(4, 4);
    u(0, 0) = 1.0;
    u(1, 3) = 1.0;
    u(2, 2) = 0.2;
    u(3, 1) = 1.0;

    // one of the two triangular gauges: combined they no longer fix U11
    Matrix tri = Matrix::identity(4);
    const bool upper = rng.uniform() < 0.5;
    if (upper) tri(0, 2) = rng.normal();  // [[I, W], [0, I]] · U, W = [[w1, 0], [0, 0]]
    else tri(2, 0) = rng.normal();        // U · [[I, 0], [Z, I]], Z = [[z1, 0], [0, 0]]
    Matrix qinv = Matrix::identity(4);    // U · diag(I, Q) with Q^{-1} = [[1, q12], [0, q22]]
    qinv(2, 3)  = rng.normal();
    qinv(3, 3)  = 1.0 + rng.uniform();

    Coupling c;
    c.k = 2;
    c.u = (upper ? tri * u : u * tri) * eaekit::inverse(qinv);
    c.t = Matrix::diagonal({1.0, 0.0});
    c.s = Matrix::diagonal({5.0, 0.0});
    return c;
}

}  // namespace fixture

#endif  // EAEKIT_TESTS_FIXTURES_HPP
