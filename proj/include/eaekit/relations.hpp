#ifndef EAEKIT_RELATIONS_HPP
#define EAEKIT_RELATIONS_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "eaekit/elimination.hpp"
#include "eaekit/matrix.hpp"
#include "eaekit/svd.hpp"

namespace eaekit {

struct Tolerances {
    double tol_svd     = 1e-10;
    double tol_witness = 1e-8;
    double rank_tol    = 1e-9;  // σ counts as zero below rank_tol · σ_max
    double split_floor = 1e-6;  // relative to ‖I − H21 T‖
    double cond_floor  = 1e-8;
};

//
// diag(T, I_l) = E · diag(S, I_k) · F with T k×k and S l×l.
// E : Y ⊕ X → X ⊕ Y, F : X ⊕ Y → Y ⊕ X (blocks split as (k,l)/(l,k)).
//
struct EAEWitnessFinite {
    Matrix      E;
    Matrix      F;
    std::size_t k = 0;
    std::size_t l = 0;
};

struct WitnessCheck {
    bool   ok       = false;
    double residual = 0.0;
    double rcond_E  = 0.0;
    double rcond_F  = 0.0;
};

inline WitnessCheck verify_eae_witness(const EAEWitnessFinite& w, const Matrix& t, const Matrix& s, const Tolerances& tol = {})
{
    if (t.rows() != w.k || s.rows() != w.l || !t.square() || !s.square())
        throw std::invalid_argument("verify_eae_witness: operator sizes do not match the witness split");
    const std::size_t n = w.k + w.l;
    if (w.E.rows() != n || w.E.cols() != n || w.F.rows() != n || w.F.cols() != n)
        throw std::invalid_argument("verify_eae_witness: witness blocks have the wrong size");

    WitnessCheck c;
    const Matrix lhs = block_diag(t, Matrix::identity(w.l));
    const Matrix rhs = w.E * block_diag(s, Matrix::identity(w.k)) * w.F;
    c.residual       = relative_residual(rhs, lhs);
    c.rcond_E        = reciprocal_condition(w.E);
    c.rcond_F        = reciprocal_condition(w.F);
    c.ok             = c.residual <= tol.tol_witness && c.rcond_E >= tol.cond_floor && c.rcond_F >= tol.cond_floor;
    return c;
}

struct EaeDecision {
    bool                            eae = false;
    std::optional<EAEWitnessFinite> witness;
    std::optional<WitnessCheck>     check;
    RankInfo                        rank_t;
    RankInfo                        rank_s;
    std::size_t                     nullity_t       = 0;
    std::size_t                     nullity_s       = 0;
    bool                            ill_conditioned = false;
};

namespace detail {

inline void require_square(const Matrix& m, const char* what)
{
    if (!m.square() || m.empty()) throw std::invalid_argument(std::string(what) + ": operator must be square and non-empty");
}

// left · N · right = a  ⇒  the (E, F) pair mapping b's normal form onto a's
inline std::pair<Matrix, Matrix> equivalence_pair(const Matrix& a, const Matrix& b, std::size_t rank)
{
    const auto na = rank_normal_form(a, rank);
    const auto nb = rank_normal_form(b, rank);
    Matrix     e  = na.left * inverse(nb.left);
    Matrix     f  = inverse(nb.right) * na.right;
    return {std::move(e), std::move(f)};
}

}  // namespace detail

//
// square T, S are EAE iff nullity(T) = nullity(S); the witness comes from
// rank normal forms of diag(T, I_l) and diag(S, I_k)
//
inline EaeDecision decide_eae(const Matrix& t, const Matrix& s, const Tolerances& tol = {})
{
    detail::require_square(t, "decide_eae");
    detail::require_square(s, "decide_eae");
    const std::size_t k = t.rows(), l = s.rows();

    EaeDecision d;
    d.rank_t          = rank_info(t, tol.rank_tol);
    d.rank_s          = rank_info(s, tol.rank_tol);
    d.nullity_t       = k - d.rank_t.rank;
    d.nullity_s       = l - d.rank_s.rank;
    d.ill_conditioned = d.rank_t.borderline || d.rank_s.borderline;
    d.eae             = d.nullity_t == d.nullity_s;
    if (!d.eae) return d;

    const Matrix ta = block_diag(t, Matrix::identity(l));
    const Matrix sa = block_diag(s, Matrix::identity(k));
    auto [e, f]     = detail::equivalence_pair(ta, sa, d.rank_t.rank + l);
    d.witness       = EAEWitnessFinite{std::move(e), std::move(f), k, l};
    d.check         = verify_eae_witness(*d.witness, t, s, tol);
    return d;
}

enum class ExtensionSide { ExtendT, ExtendS };

inline const char* to_string(ExtensionSide s) { return s == ExtensionSide::ExtendT ? "T" : "S"; }

//
// one-sided witness: with side ExtendS (k ≥ l), T = E · diag(S, I_{k−l}) · F;
// with side ExtendT, diag(T, I_{l−k}) = E · S · F
//
struct OneSidedWitness {
    Matrix E;
    Matrix F;
};

struct EaoeDecision {
    bool                           eaoe = false;
    std::optional<ExtensionSide>   side;  // absent when the sizes already agree
    std::size_t                    extension_dim = 0;
    std::optional<OneSidedWitness> witness;
    std::optional<WitnessCheck>    check;
    std::size_t                    nullity_t       = 0;
    std::size_t                    nullity_s       = 0;
    bool                           ill_conditioned = false;
};

inline WitnessCheck verify_eaoe_witness(const OneSidedWitness& w, const Matrix& t, const Matrix& s, const Tolerances& tol = {})
{
    const std::size_t k = t.rows(), l = s.rows();
    const Matrix lhs = k >= l ? t : block_diag(t, Matrix::identity(l - k));
    const Matrix mid = k >= l ? block_diag(s, Matrix::identity(k - l)) : s;
    if (w.E.rows() != lhs.rows() || w.F.cols() != lhs.cols() || w.E.cols() != mid.rows() || w.F.rows() != mid.cols())
        throw std::invalid_argument("verify_eaoe_witness: witness has the wrong size");
    WitnessCheck c;
    c.residual = relative_residual(w.E * mid * w.F, lhs);
    c.rcond_E  = reciprocal_condition(w.E);
    c.rcond_F  = reciprocal_condition(w.F);
    c.ok       = c.residual <= tol.tol_witness && c.rcond_E >= tol.cond_floor && c.rcond_F >= tol.cond_floor;
    return c;
}

inline EaoeDecision decide_eaoe(const Matrix& t, const Matrix& s, const Tolerances& tol = {})
{
    detail::require_square(t, "decide_eaoe");
    detail::require_square(s, "decide_eaoe");
    const std::size_t k = t.rows(), l = s.rows();

    EaoeDecision d;
    const auto   rt   = rank_info(t, tol.rank_tol);
    const auto   rs   = rank_info(s, tol.rank_tol);
    d.nullity_t       = k - rt.rank;
    d.nullity_s       = l - rs.rank;
    d.ill_conditioned = rt.borderline || rs.borderline;
    d.eaoe            = d.nullity_t == d.nullity_s;
    if (!d.eaoe) return d;

    d.extension_dim = k >= l ? k - l : l - k;
    if (k != l) d.side = k > l ? ExtensionSide::ExtendS : ExtensionSide::ExtendT;

    const Matrix lhs = k >= l ? t : block_diag(t, Matrix::identity(l - k));
    const Matrix mid = k >= l ? block_diag(s, Matrix::identity(k - l)) : s;
    auto [e, f]      = detail::equivalence_pair(lhs, mid, k >= l ? rt.rank : rt.rank + (l - k));
    d.witness        = OneSidedWitness{std::move(e), std::move(f)};
    d.check          = verify_eaoe_witness(*d.witness, t, s, tol);
    return d;
}

//
// invertible T, S: E = diag(T, I_l) · diag(S, I_k)^{-1}, F = I
//
inline EAEWitnessFinite construct_eae_invertible(const Matrix& t, const Matrix& s, const Tolerances& tol = {})
{
    detail::require_square(t, "construct_eae_invertible");
    detail::require_square(s, "construct_eae_invertible");
    if (reciprocal_condition(t) < tol.cond_floor || reciprocal_condition(s) < tol.cond_floor)
        throw std::invalid_argument("construct_eae_invertible: operators must be invertible");
    const std::size_t k = t.rows(), l = s.rows();
    EAEWitnessFinite  w;
    w.k = k;
    w.l = l;
    w.E = block_diag(t, Matrix::identity(l)) * inverse(block_diag(s, Matrix::identity(k)));
    w.F = Matrix::identity(k + l);
    return w;
}

//
// T = G S H + R with R of finite (numerical) rank
//
struct RanDecomposition {
    Matrix      G;
    Matrix      H;
    Matrix      R;
    std::size_t rank_R     = 0;
    std::size_t rank_bound = 0;
    double      residual   = 0.0;
};

namespace detail {

// rank of R with the cut taken relative to max(‖R‖, ‖T‖): rounding noise in an
// R that should vanish does not count
inline std::size_t rank_against(const Matrix& r, double scale, double rel_tol)
{
    if (max_abs(r) == 0.0) return 0;
    const auto  sv  = singular_values(r);
    const double cut = rel_tol * std::max(sv.front(), scale);
    return static_cast<std::size_t>(std::count_if(sv.begin(), sv.end(), [&](double v) { return v > cut; }));
}

}  // namespace detail

inline double ran_residual(const Matrix& t, const Matrix& s, const RanDecomposition& d)
{
    return relative_residual(d.G * s * d.H + d.R, t);
}

//
// blocks of the structured witness
//   E = [[G11, T], [G21, G22]],  F = [[H11, I], [H21·T, H22]]
//
struct StructuredBlocks {
    Matrix G11, G21, G22;
    Matrix H11, H21, H22;
};

inline EAEWitnessFinite assemble_structured(const StructuredBlocks& b, const Matrix& t, const Matrix& s)
{
    const std::size_t k = t.rows(), l = s.rows();
    auto              shape = [](const Matrix& m, std::size_t r, std::size_t c, const char* name) {
        if (m.rows() != r || m.cols() != c)
            throw std::invalid_argument(std::string("ranlemma_structured: inconsistent block ") + name);
    };
    shape(b.G11, k, l, "G11");
    shape(b.G21, l, l, "G21");
    shape(b.G22, l, k, "G22");
    shape(b.H11, l, k, "H11");
    shape(b.H21, k, k, "H21");
    shape(b.H22, k, l, "H22");

    EAEWitnessFinite w;
    w.k = k;
    w.l = l;
    w.E = block2x2(b.G11, t, b.G21, b.G22);
    w.F = block2x2(b.H11, Matrix::identity(l), b.H21 * t, b.H22);
    return w;
}

//
// an invertible U with U11 = T and (U^{-1})22 = S yields a structured witness:
//   G11 = U12, G21 = U22, G22 = U21, H11 = −U21, H21 = V11, H22 = V12
//
inline StructuredBlocks structured_blocks_from_coupling(const Matrix& u, std::size_t k)
{
    if (!u.square() || k > u.rows()) throw std::invalid_argument("structured_blocks_from_coupling: bad split");
    const std::size_t l = u.rows() - k;
    const Matrix      v = inverse(u);
    StructuredBlocks  b;
    b.G11 = u.block(0, k, k, l);
    b.G21 = u.block(k, k, l, l);
    b.G22 = u.block(k, 0, l, k);
    b.H11 = -u.block(k, 0, l, k);
    b.H21 = v.block(0, 0, k, k);
    b.H22 = v.block(0, k, k, l);
    return b;
}

struct StructuredRanResult {
    RanDecomposition    decomposition;
    WitnessCheck        witness_check;
    std::vector<double> m_singular_values;  // of I − H21·T
    double              split_floor = 0.0;  // absolute
    std::size_t         replaced    = 0;    // σ(I − H21 T) lifted to the floor
};

//
// I − H21 T = L + K with L invertible (σ below the floor lifted to it) and
// K of rank `replaced`; G = G11, H = H11 L^{-1}, R = −T K L^{-1}
//
inline StructuredRanResult ranlemma_structured(const StructuredBlocks& b, const Matrix& t, const Matrix& s,
                                               const Tolerances& tol = {})
{
    detail::require_square(t, "ranlemma_structured");
    detail::require_square(s, "ranlemma_structured");
    const EAEWitnessFinite w = assemble_structured(b, t, s);

    StructuredRanResult out;
    out.witness_check = verify_eae_witness(w, t, s, tol);
    if (out.witness_check.residual > tol.tol_witness)
        throw std::invalid_argument("ranlemma_structured: assembled E, F do not satisfy the EAE identity");
    if (out.witness_check.rcond_E < tol.cond_floor || out.witness_check.rcond_F < tol.cond_floor)
        throw std::invalid_argument("ranlemma_structured: assembled E or F is not invertible");

    const std::size_t k = t.rows();
    const Matrix      m = Matrix::identity(k) - b.H21 * t;
    const SvdResult   ms = svd(m);
    out.m_singular_values = ms.singular_values;
    out.split_floor       = tol.split_floor * ms.singular_values.front();

    SvdResult lifted = ms;
    for (auto& sv : lifted.singular_values)
        if (sv < out.split_floor) {
            sv = out.split_floor;
            ++out.replaced;
        }
    const Matrix l_part = reconstruct(lifted);
    const Matrix k_part = m - l_part;
    const Matrix l_inv  = inverse(l_part);

    auto& d      = out.decomposition;
    d.G          = b.G11;
    d.H          = b.H11 * l_inv;
    d.R          = -(t * k_part * l_inv);
    d.rank_bound = out.replaced;
    d.rank_R     = detail::rank_against(d.R, spectral_norm(t), tol.rank_tol);
    d.residual = ran_residual(t, s, d);
    return out;
}

//
// from any witness: T = E11 S F11 + E12 F21
//
inline RanDecomposition ranlemma_generic(const EAEWitnessFinite& w, const Matrix& t, const Matrix& s, const Tolerances& tol = {})
{
    const auto check = verify_eae_witness(w, t, s, tol);
    if (!check.ok) throw std::invalid_argument("ranlemma_generic: invalid EAE witness");
    const std::size_t k = w.k, l = w.l;
    RanDecomposition  d;
    d.G          = w.E.block(0, 0, k, l);
    d.H          = w.F.block(0, 0, l, k);
    d.R          = w.E.block(0, l, k, k) * w.F.block(l, 0, k, k);
    d.rank_bound = k;
    d.rank_R     = detail::rank_against(d.R, spectral_norm(t), tol.rank_tol);
    d.residual   = ran_residual(t, s, d);
    return d;
}

//
// matricial coupling: T = U11, S = (U^{-1})22
//
struct CouplingReport {
    bool   ok          = false;
    double residual_T  = 0.0;
    double residual_S  = 0.0;
    double rcond       = 0.0;
    bool   invertible  = false;
    std::string reason;
};

inline CouplingReport verify_mc(const Matrix& u, std::size_t k, const Matrix& t, const Matrix& s, const Tolerances& tol = {})
{
    if (!u.square() || k > u.rows()) throw std::invalid_argument("verify_mc: U must be square with a valid split");
    const std::size_t l = u.rows() - k;
    if (t.rows() != k || t.cols() != k || s.rows() != l || s.cols() != l)
        throw std::invalid_argument("verify_mc: T, S do not match the split");

    CouplingReport r;
    r.rcond      = reciprocal_condition(u);
    r.invertible = r.rcond >= tol.cond_floor;
    if (!r.invertible) throw std::invalid_argument("verify_mc: U is singular");
    const Matrix v = inverse(u);
    r.residual_T   = frobenius_norm(t - u.block(0, 0, k, k));
    r.residual_S   = frobenius_norm(s - v.block(k, k, l, l));
    r.ok           = r.residual_T <= tol.tol_witness && r.residual_S <= tol.tol_witness;
    if (!r.ok) r.reason = "block identity mismatch";
    return r;
}

//
// Schur coupling: T = A − B D^{-1} C and S = D − C A^{-1} B
//
struct SchurReport {
    bool        ok         = false;
    bool        definitional_failure = false;  // A or D not invertible
    double      residual_T = 0.0;
    double      residual_S = 0.0;
    double      rcond_A    = 0.0;
    double      rcond_D    = 0.0;
    std::string reason;
};

inline SchurReport verify_sc(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d, const Matrix& t,
                             const Matrix& s, const Tolerances& tol = {})
{
    if (!a.square() || !d.square()) throw std::invalid_argument("verify_sc: A and D must be square");
    if (b.rows() != a.rows() || b.cols() != d.cols() || c.rows() != d.rows() || c.cols() != a.cols())
        throw std::invalid_argument("verify_sc: inconsistent block shapes");
    if (t.rows() != a.rows() || t.cols() != a.cols() || s.rows() != d.rows() || s.cols() != d.cols())
        throw std::invalid_argument("verify_sc: T, S do not match A, D");

    SchurReport r;
    r.rcond_A = reciprocal_condition(a);
    r.rcond_D = reciprocal_condition(d);
    if (r.rcond_A < tol.cond_floor || r.rcond_D < tol.cond_floor) {
        r.definitional_failure = true;
        r.reason = r.rcond_A < tol.cond_floor ? "A is not invertible" : "D is not invertible";
        return r;
    }
    r.residual_T = frobenius_norm(t - (a - b * inverse(d) * c));
    r.residual_S = frobenius_norm(s - (d - c * inverse(a) * b));
    r.ok         = r.residual_T <= tol.tol_witness && r.residual_S <= tol.tol_witness;
    if (!r.ok) r.reason = "Schur complement mismatch";
    return r;
}

}  // namespace eaekit

#endif  // EAEKIT_RELATIONS_HPP
