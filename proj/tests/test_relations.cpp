#include <gtest/gtest.h>

#include "eaekit/relations.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace eaekit;

namespace {

std::size_t oracle_nullity(const Matrix& a) { return a.rows() - oracle::rank(a); }

Matrix scalar(double v) { return Matrix{{v}}; }

}  // namespace

TEST(DecideEae, EqualNullityBuildsWitness)
{
    const Matrix t = Matrix::diagonal({1.0, 0.0}), s = Matrix::diagonal({5.0, 0.0});
    const auto   d = decide_eae(t, s);
    ASSERT_TRUE(d.eae);
    ASSERT_TRUE(d.witness && d.check);
    EXPECT_TRUE(d.check->ok);
    EXPECT_LE(d.check->residual, 1e-8);
    // the stored witness re-verifies on its own
    EXPECT_TRUE(verify_eae_witness(*d.witness, t, s).ok);
}

TEST(DecideEae, InvertiblesOfDifferentSize)
{
    const auto d = decide_eae(Matrix::identity(3), Matrix::identity(2));
    EXPECT_TRUE(d.eae);
    EXPECT_TRUE(d.check->ok);
}

TEST(DecideEae, NullityMismatch)
{
    const auto d = decide_eae(Matrix::diagonal({1.0, 0.0}), Matrix::identity(2));
    EXPECT_FALSE(d.eae);
    EXPECT_FALSE(d.witness);
    EXPECT_EQ(d.nullity_t, 1u);
    EXPECT_EQ(d.nullity_s, 0u);
}

TEST(DecideEae, NoCheapWitnessForMismatch)
{
    // residual of random invertible E, F stays away from 0 when nullities differ
    const Matrix t = Matrix::diagonal({1.0, 0.0}), s = Matrix::identity(2);
    const Matrix lhs = block_diag(t, Matrix::identity(2));
    double       best = 1e300;
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng          rng(derive_seed(51, i));
        const Matrix e = rng.gaussian(4, 4), f = rng.gaussian(4, 4);
        best = std::min(best, relative_residual(e * block_diag(s, Matrix::identity(2)) * f, lhs));
    }
    EXPECT_GT(best, 0.1);
}

TEST(DecideEae, FlagsBorderlineRank)
{
    const auto d = decide_eae(Matrix::diagonal({1.0, 5e-9}), Matrix::diagonal({1.0, 0.0}));
    EXPECT_TRUE(d.ill_conditioned);
}

TEST(DecideEae, RejectsNonSquare)
{
    EXPECT_THROW(decide_eae(Matrix(2, 3), Matrix::identity(2)), std::invalid_argument);
}

TEST(DecideEae, AgreesWithNullityOracle)
{
    for (std::uint64_t i = 0; i < 60; ++i) {
        Rng        rng(derive_seed(52, i));
        const auto p = fixture::square_pair(rng, 8);
        const auto d = decide_eae(p.t, p.s);
        EXPECT_EQ(d.eae, oracle_nullity(p.t) == oracle_nullity(p.s));
        if (d.eae) {
            EXPECT_LE(d.check->residual, 1e-8);
            EXPECT_GE(std::min(d.check->rcond_E, d.check->rcond_F), 1e-8);
        }
    }
}

TEST(DecideEae, EquivalenceRelationOnPool)
{
    std::vector<Matrix> pool;
    for (std::uint64_t i = 0; i < 8; ++i) {
        Rng rng(derive_seed(53, i));
        pool.push_back(fixture::square_pair(rng, 4).t);
    }
    const std::size_t n = pool.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) rel[a][b] = decide_eae(pool[a], pool[b]).eae;
    for (std::size_t a = 0; a < n; ++a) {
        EXPECT_TRUE(rel[a][a]);
        for (std::size_t b = 0; b < n; ++b) {
            EXPECT_EQ(rel[a][b], rel[b][a]);
            for (std::size_t c = 0; c < n; ++c)
                if (rel[a][b] && rel[b][c]) EXPECT_TRUE(rel[a][c]);
        }
    }
}

TEST(DecideEaoe, Examples)
{
    auto d = decide_eaoe(Matrix::identity(3), Matrix::identity(2));
    ASSERT_TRUE(d.eaoe);
    EXPECT_EQ(*d.side, ExtensionSide::ExtendS);
    EXPECT_EQ(d.extension_dim, 1u);
    EXPECT_TRUE(d.check->ok);

    d = decide_eaoe(Matrix::diagonal({1.0, 0.0, 0.0}), Matrix::diagonal({1.0, 0.0}));
    EXPECT_FALSE(d.eaoe);

    d = decide_eaoe(Matrix::diagonal({1.0, 1.0, 0.0}), Matrix::diagonal({2.0, 0.0}));
    ASSERT_TRUE(d.eaoe);
    EXPECT_EQ(*d.side, ExtensionSide::ExtendS);
    EXPECT_EQ(d.extension_dim, 1u);
    EXPECT_TRUE(d.check->ok);

    d = decide_eaoe(Matrix::diagonal({2.0, 0.0}), Matrix::diagonal({1.0, 1.0, 0.0}));
    ASSERT_TRUE(d.eaoe);
    EXPECT_EQ(*d.side, ExtensionSide::ExtendT);
    EXPECT_TRUE(d.check->ok);
}

TEST(DecideEaoe, ImpliesEae)
{
    for (std::uint64_t i = 0; i < 40; ++i) {
        Rng        rng(derive_seed(54, i));
        const auto p = fixture::square_pair(rng, 6);
        const auto o = decide_eaoe(p.t, p.s);
        if (o.eaoe) {
            EXPECT_TRUE(decide_eae(p.t, p.s).eae);
            EXPECT_TRUE(o.check->ok);
        }
    }
}

TEST(ConstructInvertible, ScalarCase)
{
    const auto w = construct_eae_invertible(Matrix::diagonal({2.0, 2.0}), Matrix::diagonal({3.0, 3.0}));
    EXPECT_LE(frobenius_norm(w.E - Matrix::diagonal({2.0 / 3, 2.0 / 3, 1.0, 1.0})), 1e-15);
    EXPECT_EQ(w.F, Matrix::identity(4));
}

TEST(ConstructInvertible, OneByOneIdentity)
{
    const auto w = construct_eae_invertible(scalar(1.0), scalar(1.0));
    EXPECT_EQ(w.E, Matrix::identity(2));
    EXPECT_EQ(w.F, Matrix::identity(2));
}

TEST(ConstructInvertible, RandomResidual)
{
    Rng          rng(55);
    const Matrix t = rng.gaussian(3, 3), s = rng.gaussian(3, 3);
    EXPECT_LE(verify_eae_witness(construct_eae_invertible(t, s), t, s).residual, 1e-10);
    EXPECT_THROW(construct_eae_invertible(Matrix::diagonal({1.0, 0.0}), s), std::invalid_argument);
}

TEST(RanLemmaStructured, InvertibleCouplingGivesZeroR)
{
    // U = [[T, I], [I, 0]] has V11 = 0, so I − H21 T = I
    Rng          rng(56);
    const Matrix t = rng.gaussian(2, 2);
    const Matrix u = block2x2(t, Matrix::identity(2), Matrix::identity(2), Matrix(2, 2));
    const Matrix s = inverse(u).block(2, 2, 2, 2);
    const auto   b = structured_blocks_from_coupling(u, 2);
    EXPECT_LE(max_abs(b.H21), 1e-14);
    const auto r = ranlemma_structured(b, t, s);
    EXPECT_EQ(r.replaced, 0u);
    EXPECT_EQ(r.decomposition.rank_R, 0u);
    EXPECT_LE(r.decomposition.residual, 1e-10);
}

TEST(RanLemmaStructured, GaugedDiagonalPair)
{
    for (std::uint64_t i = 0; i < 10; ++i) {
        Rng        rng(derive_seed(57, i));
        const auto c = fixture::diag_coupling(rng);
        EXPECT_LE(frobenius_norm(c.u.block(0, 0, 2, 2) - c.t), 1e-12);
        EXPECT_LE(frobenius_norm(inverse(c.u).block(2, 2, 2, 2) - c.s), 1e-12);
        const auto b = structured_blocks_from_coupling(c.u, c.k);
        const auto r = ranlemma_structured(b, c.t, c.s);
        EXPECT_LE(r.decomposition.residual, 1e-8);
        const Matrix m = Matrix::identity(2) - b.H21 * c.t;
        EXPECT_LE(r.decomposition.rank_R, 2 - oracle::rank(m));
        EXPECT_LE(r.decomposition.rank_R, r.decomposition.rank_bound);
    }
}

TEST(RanLemmaStructured, ZeroOperators)
{
    const Matrix z(2, 2);
    const Matrix u = block2x2(Matrix(2, 2), Matrix::identity(2), Matrix::identity(2), Matrix(2, 2));
    const auto   r = ranlemma_structured(structured_blocks_from_coupling(u, 2), z, z);
    EXPECT_LE(r.decomposition.rank_R, 2u);
    EXPECT_LE(r.decomposition.residual, 1e-12);
}

TEST(RanLemmaStructured, RejectsInconsistentBlocks)
{
    StructuredBlocks b{Matrix(1, 1), Matrix(1, 1), Matrix(1, 1), Matrix(1, 1), Matrix(1, 1), Matrix(2, 2)};
    EXPECT_THROW(ranlemma_structured(b, scalar(1.0), scalar(1.0)), std::invalid_argument);
    // consistent shapes, identity violated
    StructuredBlocks bad{scalar(0.0), scalar(1.0), scalar(0.0), scalar(1.0), scalar(0.0), scalar(1.0)};
    EXPECT_THROW(ranlemma_structured(bad, scalar(2.0), scalar(1.0)), std::invalid_argument);
}

TEST(RanLemmaStructured, RandomCouplings)
{
    for (std::uint64_t i = 0; i < 30; ++i) {
        Rng        rng(derive_seed(58, i));
        const auto c = fixture::random_coupling(rng, 4);
        const auto b = structured_blocks_from_coupling(c.u, c.k);
        const auto r = ranlemma_structured(b, c.t, c.s);
        EXPECT_LE(r.decomposition.residual, 1e-8) << i;
        const Matrix m = Matrix::identity(c.k) - b.H21 * c.t;
        EXPECT_LE(r.decomposition.rank_R, c.k - oracle::rank(m)) << i;
    }
}

TEST(RanLemmaGeneric, FromInvertibleConstruction)
{
    Rng          rng(59);
    const Matrix t = rng.gaussian(2, 2), s = rng.gaussian(3, 3);
    const auto   d = ranlemma_generic(construct_eae_invertible(t, s), t, s);
    EXPECT_EQ(max_abs(d.R), 0.0);
    EXPECT_EQ(d.rank_R, 0u);
    EXPECT_LE(d.residual, 1e-10);
}

TEST(RanLemmaGeneric, FromDecision)
{
    const Matrix t = Matrix::diagonal({1.0, 0.0}), s = Matrix::diagonal({5.0, 0.0});
    const auto   d = ranlemma_generic(*decide_eae(t, s).witness, t, s);
    EXPECT_LE(d.residual, 1e-8);
    EXPECT_LE(d.rank_R, d.rank_bound);
}

TEST(RanLemmaGeneric, PermutedWitness)
{
    // E = [[0, T], [I, 0]], F = [[0, S^{-1}], [I, 0]] swaps the summands
    Rng          rng(60);
    const Matrix t = rng.gaussian(2, 2), s = rng.gaussian(2, 2);
    EAEWitnessFinite w;
    w.k = w.l = 2;
    w.E       = block2x2(Matrix(2, 2), t, Matrix::identity(2), Matrix(2, 2));
    w.F       = block2x2(Matrix(2, 2), inverse(s), Matrix::identity(2), Matrix(2, 2));
    EXPECT_TRUE(verify_eae_witness(w, t, s).ok);
    const auto d = ranlemma_generic(w, t, s);
    EXPECT_LE(d.residual, 1e-10);
    EXPECT_EQ(d.rank_R, 2u);
}

TEST(RanLemmaGeneric, BoundIsDomainDimension)
{
    Rng          rng(61);
    const Matrix t = rng.gaussian(3, 3), s = rng.gaussian(1, 1);
    const auto   d = ranlemma_generic(construct_eae_invertible(t, s), t, s);
    EXPECT_LE(d.rank_R, d.rank_bound);
    EXPECT_EQ(d.rank_bound, 3u);
}

TEST(VerifyMc, Examples)
{
    EXPECT_TRUE(verify_mc(Matrix::identity(2), 1, scalar(1.0), scalar(1.0)).ok);
    EXPECT_TRUE(verify_mc(Matrix{{0, 1}, {1, 0}}, 1, scalar(0.0), scalar(0.0)).ok);
    const auto r = verify_mc(Matrix::identity(2), 1, scalar(2.0), scalar(1.0));
    EXPECT_FALSE(r.ok);
    EXPECT_NEAR(r.residual_T, 1.0, 1e-15);
    EXPECT_THROW(verify_mc(Matrix(2, 2), 1, scalar(0.0), scalar(0.0)), std::invalid_argument);
}

TEST(VerifySc, Examples)
{
    Rng          rng(62);
    const Matrix t = rng.gaussian(2, 2), s = rng.gaussian(3, 3);
    EXPECT_TRUE(verify_sc(t, Matrix(2, 3), Matrix(3, 2), s, t, s).ok);
    EXPECT_TRUE(verify_sc(scalar(2), scalar(1), scalar(1), scalar(1), scalar(1), scalar(0.5)).ok);
    const auto r = verify_sc(scalar(2), scalar(1), scalar(1), scalar(0), scalar(1), scalar(0.5));
    EXPECT_FALSE(r.ok);
    EXPECT_TRUE(r.definitional_failure);
}
