#pragma once

// Continuous cohomology of K_U = Z_p (upper unipotent integral matrices)
// with coefficients in finite-dimensional smooth modules.
//
// The smooth action of the topological generator gamma = [[1,1],[0,1]]
// factors through Z/p^level, so H^0 = ker(gamma - 1), and once the norm
// element sum_{i < p^m} gamma^i vanishes, H^1 = coker(gamma - 1).  The
// cocycle_oracle and transfer_oracle recompute both facts from explicit
// inhomogeneous cocycles of the finite quotient, independently of the
// kernel/cokernel realization.
//
// Positive diagonal elements m act on H^i by corestriction after
// conjugation; the character delta recovered from the top-degree action is
// omega (x) omega^{-1}.

#include <functional>
#include <utility>
#include <vector>

#include "modp/ffield.hpp"
#include "modp/padic.hpp"
#include "modp/torus.hpp"
#include "modp/weights.hpp"

namespace modp {

// A finite-dimensional smooth module over the monoid of upper-triangular
// matrices that the caller intends to act: the K_U-generator action, plus
// the action of diagonal elements where the module has one.
struct SmoothModule {
    Field field;
    FieldMatrix gamma;
    long level = 0;  // gamma^{p^level} = 1
    std::function<FieldMatrix(const GMatrix&)> diag_act;

    long dim() const { return gamma.rows(); }
    long p() const { return field->p(); }
};

inline long smooth_level(const FieldMatrix& gamma, long p, long cap = 20) {
    detail::require(gamma.rows() == gamma.cols(), "gamma must be square");
    FieldMatrix id = FieldMatrix::identity(gamma.field(), gamma.rows());
    FieldMatrix g = gamma;
    for (long l = 0; l <= cap; ++l) {
        if (g == id) return l;
        g = g.pow(p);
    }
    throw std::invalid_argument("action does not factor through a finite p-quotient");
}

inline SmoothModule make_module(Field field, FieldMatrix gamma,
                                std::function<FieldMatrix(const GMatrix&)> diag_act) {
    detail::require(mat_rank(gamma) == gamma.rows(), "gamma must be invertible");
    long level = smooth_level(gamma, field->p());
    return SmoothModule{std::move(field), std::move(gamma), level, std::move(diag_act)};
}

inline SmoothModule trivial_module(const Field& field, long dim = 1) {
    FieldMatrix id = FieldMatrix::identity(field, dim);
    return make_module(field, id,
                       [field, dim](const GMatrix&) { return FieldMatrix::identity(field, dim); });
}

inline SmoothModule weight_module(const Weight& w) {
    return make_module(w.field, weight_gamma_matrix(w),
                       [w](const GMatrix& m) { return weight_action_matrix(m, w); });
}

// Inflation of chi1 (x) chi2 from T to the Borel; K_U acts trivially.
inline SmoothModule inflated_character_module(const TorusCharacter& chi) {
    const Field& F = chi.chi1.field();
    FieldMatrix id = FieldMatrix::identity(F, 1);
    return make_module(F, id, [chi, F](const GMatrix& m) {
        FieldMatrix r(F, 1, 1);
        r.at(0, 0) = chi.eval(m);
        return r;
    });
}

// chi o det as a one-dimensional smooth module.
inline SmoothModule det_character_module(const PadicCharacter& chi) {
    const Field& F = chi.field();
    FieldMatrix id = FieldMatrix::identity(F, 1);
    return make_module(F, id, [chi, F](const GMatrix& m) {
        detail::require(m.is_diagonal(), "det-character module acts through diagonals here");
        FieldMatrix r(F, 1, 1);
        r.at(0, 0) = chi.eval(m.a() * m.d());
        return r;
    });
}

// Same gamma, diagonal action multiplied by the scalar character `c`.
inline SmoothModule scalar_twist(const SmoothModule& M,
                                 std::function<FieldElement(const GMatrix&)> c) {
    SmoothModule T = M;
    auto base = M.diag_act;
    T.diag_act = [base, c](const GMatrix& m) { return base(m).scaled(c(m)); };
    return T;
}

// ---------------------------------------------------------------------------
// H^0 and H^1
// ---------------------------------------------------------------------------

struct CohomologyClass {
    int degree = 0;
    std::vector<FieldElement> vec;  // coordinates in the h0 basis (degree 0)
                                    // or in the fixed coker complement (degree 1)
};

inline FieldMatrix gamma_minus_one(const SmoothModule& M, long sub_index = 0) {
    Int q = int_pow(M.p(), sub_index);
    detail::require(q <= (1 << 20), "subgroup index too large");
    FieldMatrix g = M.gamma.pow((long)q);
    return g - FieldMatrix::identity(M.field, M.dim());
}

// Basis of ker(gamma^{p^a} - 1) as matrix columns.
inline FieldMatrix h0_basis(const SmoothModule& M, long sub_index = 0) {
    auto ker = mat_kernel(gamma_minus_one(M, sub_index));
    FieldMatrix B(M.field, M.dim(), (long)ker.size());
    for (long j = 0; j < (long)ker.size(); ++j)
        for (long i = 0; i < M.dim(); ++i) B.at(i, j) = ker[j][i];
    return B;
}

inline Cokernel h1_cokernel(const SmoothModule& M, long sub_index = 0) {
    return mat_cokernel(gamma_minus_one(M, sub_index));
}

inline long h0_dim(const SmoothModule& M) { return h0_basis(M).cols(); }
inline long h1_dim(const SmoothModule& M) { return h1_cokernel(M).dim; }

// Norm element sum_{i < p^m} gamma^i as a matrix.
inline FieldMatrix norm_matrix(const SmoothModule& M, long m) {
    FieldMatrix N = FieldMatrix::identity(M.field, M.dim());
    FieldMatrix g = M.gamma;
    for (long l = 0; l < m; ++l) {
        // sum over a transversal of the next p-power layer
        FieldMatrix s(M.field, M.dim(), M.dim());
        FieldMatrix gp = FieldMatrix::identity(M.field, M.dim());
        for (long i = 0; i < M.p(); ++i) {
            s = s + gp;
            gp = gp * g;
        }
        N = s * N;
        g = g.pow(M.p());
    }
    return N;
}

// Smallest m with vanishing norm (needed for the coker(gamma - 1)
// realization of H^1 and for evaluating cocycles on unit powers of gamma).
inline long norm_exponent(const SmoothModule& M, long cap_pm = (1 << 15)) {
    Int q = 1;
    for (long m = 0;; ++m) {
        if (q > cap_pm)
            throw std::runtime_error("no admissible finite quotient at desk scale");
        if (norm_matrix(M, m).is_zero()) return m;
        q *= M.p();
    }
}

// Dimensions of H^0 and H^1 computed from inhomogeneous cocycles of the
// finite quotient Z/p^m: Z^1 = ker(norm), B^1 = im(gamma - 1).
struct OracleDims {
    long h0 = 0;
    long h1 = 0;
    long quotient_exponent = 0;  // the m that was used
};

inline OracleDims cocycle_oracle(const SmoothModule& M) {
    long m = norm_exponent(M);
    FieldMatrix gm1 = gamma_minus_one(M);
    long z1 = M.dim() - mat_rank(norm_matrix(M, m));
    long b1 = mat_rank(gm1);
    OracleDims out;
    out.h0 = M.dim() - b1;
    out.h1 = z1 - b1;
    out.quotient_exponent = m;
    return out;
}

// ---------------------------------------------------------------------------
// Restriction, corestriction, conjugation, Hecke action
// ---------------------------------------------------------------------------

namespace detail {

// Coordinates of the columns of the full-space map T relative to the column
// basis B (solving B x = T e_j for each j).
inline FieldMatrix in_basis(const FieldMatrix& B, const FieldMatrix& T) {
    FieldMatrix out(B.field(), B.cols(), T.cols());
    for (long j = 0; j < T.cols(); ++j) {
        std::vector<FieldElement> col;
        col.reserve(T.rows());
        for (long i = 0; i < T.rows(); ++i) col.push_back(T.at(i, j));
        auto x = mat_solve(B, col);
        require(x.has_value(), "image does not lie in the target subspace");
        for (long i = 0; i < B.cols(); ++i) out.at(i, j) = x->at(i);
    }
    return out;
}

}  // namespace detail

// Partial sum 1 + gamma + ... + gamma^{j-1}.
inline FieldMatrix gamma_partial_sum(const SmoothModule& M, long j) {
    FieldMatrix s(M.field, M.dim(), M.dim());
    FieldMatrix g = FieldMatrix::identity(M.field, M.dim());
    for (long i = 0; i < j; ++i) {
        s = s + g;
        g = g * M.gamma;
    }
    return s;
}

// res: H^i(K_U, V) -> H^i(p^a K_U, V).  In degree 0 the inclusion of
// invariants; in degree 1 a cocycle restricts along gamma' = gamma^{p^a},
// i.e. representatives map by the partial norm sum.
inline FieldMatrix res(const SmoothModule& M, long a, int degree) {
    detail::require(a >= 0, "subgroup index must be p^a with a >= 0");
    Int pa = int_pow(M.p(), a);
    if (degree == 0) {
        FieldMatrix Bfull = h0_basis(M, 0), Bsub = h0_basis(M, a);
        return detail::in_basis(Bsub, Bfull);
    }
    detail::require(degree == 1, "only degrees 0 and 1 are supported");
    Cokernel full = h1_cokernel(M, 0), sub = h1_cokernel(M, a);
    FieldMatrix norm = gamma_partial_sum(M, (long)pa);
    return sub.projection * norm * full.reps;
}

// cores: H^i(p^a K_U, V) -> H^i(K_U, V).  In degree 0 the norm sum over
// K_U / p^a K_U; in degree 1 the transfer acts as the identity on
// representatives (validated against transfer_oracle below).
inline FieldMatrix cores(const SmoothModule& M, long a, int degree) {
    detail::require(a >= 0, "subgroup index must be p^a with a >= 0");
    Int pa = int_pow(M.p(), a);
    if (degree == 0) {
        FieldMatrix Bfull = h0_basis(M, 0), Bsub = h0_basis(M, a);
        FieldMatrix norm = gamma_partial_sum(M, (long)pa);
        return detail::in_basis(Bfull, norm * Bsub);
    }
    detail::require(degree == 1, "only degrees 0 and 1 are supported");
    Cokernel full = h1_cokernel(M, 0), sub = h1_cokernel(M, a);
    return full.projection * sub.reps;
}

inline bool is_positive_diagonal(const GMatrix& m) {
    return m.is_diagonal() && !m.a().is_zero() && !m.d().is_zero() &&
           m.a().val() >= m.d().val();
}

// conj_m: H^i(K_U, V) -> H^i(m K_U m^{-1}, V) for positive diagonal m.
// m K_U m^{-1} = p^s K_U with s = val(a) - val(d); on degree 1 the
// generator gamma^{p^s} of the target pulls back to gamma^w with
// w = p^s d/a a unit, so representatives map by m . S_w.
inline FieldMatrix conj(const GMatrix& m, const SmoothModule& M, int degree) {
    detail::require(is_positive_diagonal(m), "conjugation needs a positive diagonal element");
    long s = m.a().val() - m.d().val();
    FieldMatrix act = M.diag_act(m);
    if (degree == 0) {
        FieldMatrix Bfull = h0_basis(M, 0), Bsub = h0_basis(M, s);
        return detail::in_basis(Bsub, act * Bfull);
    }
    detail::require(degree == 1, "only degrees 0 and 1 are supported");
    long me = norm_exponent(M);
    Int pm = int_pow(M.p(), me);
    Int w = (m.d().num() % pm) * mod_inverse(m.a().num(), pm) % pm;
    w = ((w % pm) + pm) % pm;
    FieldMatrix Sw = gamma_partial_sum(M, (long)w);
    Cokernel full = h1_cokernel(M, 0), sub = h1_cokernel(M, s);
    return sub.projection * act * Sw * full.reps;
}

// Hecke action of a positive diagonal m on H^i(K_U, V): cores after conj.
inline FieldMatrix hecke(const GMatrix& m, const SmoothModule& M, int degree) {
    detail::require(is_positive_diagonal(m), "Hecke action needs a positive element");
    long s = m.a().val() - m.d().val();
    FieldMatrix cj = conj(m, M, degree);
    FieldMatrix cr = cores(M, s, degree);
    return cr * cj;
}

// ---------------------------------------------------------------------------
// Independent transfer oracle (finite-quotient double-coset formula)
// ---------------------------------------------------------------------------

// Degree-1 corestriction H^1(p^a K_U, V) -> H^1(K_U, V) computed on the
// finite quotient G = Z/p^mtot, H = p^a G, from the classical formula
//   cor(c)(g) = sum_{r in R} r ( c(r^{-1} g sigma(r^{-1}g)^{-1})
//                               - c(r^{-1} sigma(r^{-1})^{-1}) ),
// with sigma the coset-representative section.  No identification of the
// transfer with a coker-level map is assumed here.
inline FieldMatrix transfer_oracle(const SmoothModule& M, long a) {
    detail::require(a >= 1, "transfer oracle needs a proper subgroup");
    long p = M.p();
    long mtot = std::max(norm_exponent(M), a + 1);
    // the subgroup norm sum_{j} gamma^{p^a j} must vanish as well
    for (;; ++mtot) {
        detail::require(int_pow(p, mtot) <= (1 << 15), "finite quotient too large");
        FieldMatrix gsub = M.gamma.pow((long)int_pow(p, a));
        FieldMatrix s(M.field, M.dim(), M.dim());
        FieldMatrix gp = FieldMatrix::identity(M.field, M.dim());
        long reps = (long)int_pow(p, mtot - a);
        for (long j = 0; j < reps; ++j) {
            s = s + gp;
            gp = gp * gsub;
        }
        if (s.is_zero()) break;
    }
    long q = (long)int_pow(p, a);
    long Q = (long)int_pow(p, mtot);
    Cokernel full = h1_cokernel(M, 0), sub = h1_cokernel(M, a);
    FieldMatrix gsub = M.gamma.pow(q);
    SmoothModule Msub = M;
    Msub.gamma = gsub;
    // cocycle on H with c(gamma^{q j}) = (1 + gamma^q + ... ) w, and gamma
    // powers reduced mod Q
    auto subgroup_sum = [&](long j) { return gamma_partial_sum(Msub, j); };
    FieldMatrix out(M.field, full.dim, sub.dim);
    for (long col = 0; col < sub.dim; ++col) {
        std::vector<FieldElement> w(M.dim(), M.field->zero());
        for (long i = 0; i < M.dim(); ++i) w[i] = sub.reps.at(i, col);
        std::vector<FieldElement> v(M.dim(), M.field->zero());
        for (long i = 0; i < q; ++i) {
            long e1 = (((1 - i) % Q) + Q) % Q;
            long j1 = (e1 - e1 % q) / q;
            long e2 = (((-i) % Q) + Q) % Q;
            long j2 = (e2 - e2 % q) / q;
            FieldMatrix term = subgroup_sum(j1) - subgroup_sum(j2);
            std::vector<FieldElement> t = (M.gamma.pow(i) * term).apply(w);
            for (long k = 0; k < M.dim(); ++k) v[k] = v[k] + t[k];
        }
        std::vector<FieldElement> cls = full.projection.apply(v);
        for (long k = 0; k < full.dim; ++k) out.at(k, col) = cls[k];
    }
    return out;
}

// ---------------------------------------------------------------------------
// The character delta
// ---------------------------------------------------------------------------

// Inverse of the scalar by which cores o conj acts on H^1(K_U, 1); extended
// multiplicatively from positive elements to all diagonal matrices.  Equals
// omega (x) omega^{-1}.
inline FieldElement delta_from_cohomology(const GMatrix& m, const Field& field) {
    detail::require(m.is_diagonal() && !m.a().is_zero() && !m.d().is_zero(),
                    "delta is a character of the torus");
    SmoothModule triv = trivial_module(field, 1);
    auto positive_delta = [&](const GMatrix& g) {
        FieldMatrix h = hecke(g, triv, 1);
        detail::require(h.rows() == 1 && h.cols() == 1, "H^1(K_U, 1) must be a line");
        return h.at(0, 0).inverse();
    };
    if (is_positive_diagonal(m)) return positive_delta(m);
    long n = m.d().val() - m.a().val();
    GMatrix zn = GMatrix::diag(PScalar::p_power(m.p(), n), PScalar::one(m.p()));
    GMatrix z = GMatrix::diag(PScalar::p_power(m.p(), 1), PScalar::one(m.p()));
    return positive_delta(m * zn) * positive_delta(z).pow(n).inverse();
}

// delta as a function usable for twisting coefficient modules.
inline std::function<FieldElement(const GMatrix&)> delta_character(const Field& field) {
    return [field](const GMatrix& m) { return delta_from_cohomology(m, field); };
}

}  // namespace modp
