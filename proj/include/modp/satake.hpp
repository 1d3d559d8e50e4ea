#pragma once

// The mod-p Satake homomorphisms in degrees 0 and 1 computed by their
// coset-sum formulas, truncated at a certified depth:
//
//   S^0(Phi)([1, eta(v)])(t) = eta( sum_{u in K_U\U} Phi([1,v])(u t) )
//   S^1(Phi)([1, v])(t)      =      sum_{u in U/K_U} Phi([1,v])(t u),   v in H^0
//
// assembled over the torus classes t_n = diag(p^n, 1).  The class of
// [t_n^{-1}, gen] is written X^n.  Both sums are infinite; only finitely
// many cosets meet the compact support, and every run checks that the
// boundary shell one step beyond the truncation contributes nothing.
//
// Also here: the projection maps mu_{m,g} between invariants of the groups
// K_U^g cap K_P, and the unwinding isomorphism onto ind_{K_M}^M H^0(K_U, W).

#include <cstdlib>
#include <map>
#include <optional>
#include <vector>

#include "modp/cohomology.hpp"
#include "modp/ffield.hpp"
#include "modp/gl2ind.hpp"
#include "modp/padic.hpp"
#include "modp/torus.hpp"
#include "modp/weights.hpp"

namespace modp {

inline GMatrix torus_class_rep(long p, long n) {
    return GMatrix::diag(PScalar::p_power(p, n), PScalar::one(p));
}

struct TruncationUnsound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Shared enumeration for both Satake degrees.  mul_left_u: true evaluates
// f(u t), false evaluates f(t u).
inline std::map<long, WeightVector> satake_sums(const IndElement& f, long depth,
                                                bool mul_left_u) {
    long p = f.weight().p();
    long window = f.max_abs_exponent();
    std::map<long, WeightVector> sums;
    auto accumulate = [&](long n, const UCoset& u) {
        GMatrix t = torus_class_rep(p, n);
        GMatrix g = mul_left_u ? u.rep() * t : t * u.rep();
        WeightVector val = f.evaluate(g);
        if (val.is_zero()) return;
        auto it = sums.find(n);
        if (it == sums.end())
            sums.emplace(n, val);
        else
            it->second = it->second + val;
    };
    for (long n = -window; n <= window; ++n)
        for (const UCoset& u : enumerate_ucosets(p, depth)) accumulate(n, u);
    // boundary shells: one extra coset depth everywhere, and one extra torus
    // class on each side over all cosets
    for (long n = -window - 1; n <= window + 1; ++n) {
        std::vector<UCoset> extra = ucoset_shell(p, depth + 1);
        if (std::labs(n) == window + 1) {
            auto inner = enumerate_ucosets(p, depth);
            extra.insert(extra.end(), inner.begin(), inner.end());
        }
        for (const UCoset& u : extra) {
            GMatrix t = torus_class_rep(p, n);
            GMatrix g = mul_left_u ? u.rep() * t : t * u.rep();
            if (!f.evaluate(g).is_zero())
                throw TruncationUnsound("boundary shell contributes at depth " +
                                        std::to_string(depth + 1));
        }
    }
    return sums;
}

}  // namespace detail

// S^0 of q(Phi) on ind_{ZK_T}^T of the coinvariant character of w.
inline HeckeLaurent satake0(const HeckePoly& q, const Weight& w,
                            std::optional<long> depth = std::nullopt) {
    const Field& F = w.field;
    IndElement f = phi_poly(q, IndElement::unit_symbol(WeightVector::monomial(w, w.r)));
    HeckeLaurent out(F);
    if (f.is_zero()) return out;
    long d = depth.value_or(f.tree_radius() + 1);
    Coinvariants eta = ku_coinvariants(w);
    for (const auto& [n, sum] : detail::satake_sums(f, d, /*mul_left_u=*/true))
        out.add_to(n, eta.eta(sum));
    return out;
}

// S^1 of q(Phi) on ind_{ZK_T}^T of the delta-twisted invariant character.
inline HeckeLaurent satake1(const HeckePoly& q, const Weight& w,
                            std::optional<long> depth = std::nullopt) {
    const Field& F = w.field;
    IndElement f = phi_poly(q, IndElement::unit_symbol(WeightVector::monomial(w, 0)));
    HeckeLaurent out(F);
    if (f.is_zero()) return out;
    long d = depth.value_or(f.tree_radius() + 1);
    for (const auto& [n, sum] : detail::satake_sums(f, d, /*mul_left_u=*/false)) {
        // the coset sum lands in H^0(K_U, w) = <x^r>
        for (long j = 1; j <= w.r; ++j)
            detail::require(sum.coeffs[j].is_zero(), "coset sum left the invariant line");
        out.add_to(n, sum.coeffs[0]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// mu-calculus
// ---------------------------------------------------------------------------

// Exponent c with K_U^g cap K_P = p^c K_U, for upper triangular g.
inline long ku_conjugate_exponent(const GMatrix& g) {
    detail::require(g.is_upper_triangular() && !g.a().is_zero() && !g.d().is_zero(),
                    "need an invertible upper triangular element");
    return std::max((long)0, g.d().val() - g.a().val());
}

inline bool in_P_plus(const GMatrix& g) {
    if (!g.is_upper_triangular() || g.a().is_zero() || g.d().is_zero()) return false;
    if (g.a().val() < g.d().val()) return false;
    // g = [[1, b/d],[0,1]] diag(a, d); the unipotent part must be integral
    return g.b().is_zero() || g.b().val() >= g.d().val();
}

// mu_{m,g}: H^0(K_U^g cap K_P, W) -> H^0(K_U^{mg} cap K_P, W),
// w |-> sum over (K_U^{mg} cap K_P)/(K_U^g cap K_P) of u w.
struct MuProjection {
    Weight weight;
    long c_from = 0;  // domain invariants of gamma^{p^c_from}
    long c_to = 0;
    FieldMatrix matrix;  // full-space realization of the coset sum

    WeightVector apply(const WeightVector& v) const {
        SmoothModule M = weight_module(weight);
        FieldMatrix gsub = M.gamma.pow((long)int_pow(weight.p(), c_from));
        detail::require((gsub.apply(v.coeffs) == v.coeffs),
                        "vector is not invariant under the domain subgroup");
        return WeightVector(weight, matrix.apply(v.coeffs));
    }
};

inline MuProjection mu_projection(const GMatrix& m, const GMatrix& g, const Weight& w) {
    detail::require(is_positive_diagonal(m), "mu needs a positive element");
    long c_from = ku_conjugate_exponent(g);
    long c_to = ku_conjugate_exponent(m * g);
    detail::require(c_to <= c_from, "positivity must shrink the conjugate exponent");
    SmoothModule M = weight_module(w);
    FieldMatrix gsub = M.gamma.pow((long)int_pow(w.p(), c_to));
    FieldMatrix sum(w.field, w.dim(), w.dim());
    FieldMatrix gp = FieldMatrix::identity(w.field, w.dim());
    long reps = (long)int_pow(w.p(), c_from - c_to);
    for (long j = 0; j < reps; ++j) {
        sum = sum + gp;
        gp = gp * gsub;
    }
    return MuProjection{w, c_from, c_to, sum};
}

// mu_g = mu_{m,g} for any m in M^+ with m g in P^+ (independent of the choice).
inline MuProjection mu_g(const GMatrix& g, const Weight& w) {
    long p = g.p();
    long n = std::max({(long)0, g.d().val() - g.a().val(),
                       g.b().is_zero() ? 0 : g.d().val() - g.b().val()});
    GMatrix m = GMatrix::diag(PScalar::p_power(p, n), PScalar::one(p));
    detail::require(in_P_plus(m * g), "failed to move g into P^+");
    return mu_projection(m, g, w);
}

// ---------------------------------------------------------------------------
// The Hecke star action and the unwinding isomorphism
// ---------------------------------------------------------------------------

// m * f = sum_{u in K_U / m K_U m^{-1}} u m f on K_U-invariant induced
// elements, for positive diagonal m.
inline IndElement hecke_star(const GMatrix& m, const IndElement& f) {
    detail::require(is_positive_diagonal(m), "Hecke star action needs a positive element");
    long p = f.weight().p();
    long s = m.a().val() - m.d().val();
    IndElement out(f.weight());
    Int ps = int_pow(p, s);
    for (Int j = 0; j < ps; ++j) {
        GMatrix u = GMatrix::upper_unipotent(PScalar(p, j));
        out = out + f.acted(u * m);
    }
    return out;
}

// [K_U g, w] = sum_{u in K_U / K_U cap K_P^{g^{-1}}} [u g, w]; w must be
// invariant under K_U^g cap K_P.
inline IndElement ku_orbit_sum(const GMatrix& g, const WeightVector& w) {
    long p = w.weight.p();
    auto [vx, h] = canonical_vertex(g);
    long c = ku_conjugate_exponent(g);
    SmoothModule M = weight_module(w.weight);
    FieldMatrix gsub = M.gamma.pow((long)int_pow(p, c));
    detail::require(gsub.apply(w.coeffs) == w.coeffs, "w not fixed by K_U^g cap K_P");
    IndElement out(w.weight);
    Int reps = int_pow(p, std::max((long)0, vx.a));
    for (Int j = 0; j < reps; ++j) {
        GMatrix u = GMatrix::upper_unipotent(PScalar(p, j));
        out.add_symbol(u * g, w);
    }
    return out;
}

// Element of ind_{K_M}^M H^0(K_U, W): finitely many torus classes
// diag(p,1)^n ZK_M with coefficients on the invariant line x^r.
struct TorusIndElement {
    Weight weight;
    std::map<long, FieldElement> terms;

    explicit TorusIndElement(Weight w) : weight(std::move(w)) {}
    void add(long n, const FieldElement& c) {
        if (c.is_zero()) return;
        auto it = terms.find(n);
        if (it == terms.end()) {
            terms.emplace(n, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
    bool operator==(const TorusIndElement& o) const { return terms == o.terms; }
    bool operator!=(const TorusIndElement& o) const { return !(*this == o); }

    // Translation by a diagonal element whose unit parts act on the
    // invariant line through the K_T-character of the weight.
    TorusIndElement translated(const GMatrix& m) const {
        detail::require(m.is_diagonal(), "torus induction translates by diagonal elements");
        long p = weight.p();
        long shift = m.a().val() - m.d().val();
        auto [e1, e2] = kt_character_on_invariants(weight);
        const Field& F = weight.field;
        FieldElement ua = F->from_int((m.a() * PScalar::p_power(p, -m.a().val()))
                                          .unit_residue_mod_p());
        FieldElement ud = F->from_int((m.d() * PScalar::p_power(p, -m.d().val()))
                                          .unit_residue_mod_p());
        FieldElement scale = ua.pow(e1) * ud.pow(e2);
        TorusIndElement out(weight);
        for (const auto& [n, c] : terms) out.add(n + shift, c * scale);
        return out;
    }
};

// Decomposes a K_U-invariant element of ind_{K_P}^P W into orbit sums
// [K_U g, w] and maps each to [pr_M(g), mu_g(w)].  Fails loudly when the
// input is not an exact sum of such orbits.
inline TorusIndElement unwind(const IndElement& f) {
    const Weight& w = f.weight();
    TorusIndElement out(w);
    IndElement remainder = f;
    while (!remainder.is_zero()) {
        auto it = remainder.terms().begin();
        VertexCoset vx = it->first;
        // orbit representative: keep only the fractional digits of u
        VertexCoset rep_vx{vx.a, vx.u.residue_below(std::min(vx.a, (long)0))};
        WeightVector wv = remainder.value_at(rep_vx);
        detail::require(!wv.is_zero(), "no value at the orbit representative");
        IndElement orbit = ku_orbit_sum(rep_vx.rep(), wv);
        IndElement next = remainder - orbit;
        // the orbit must cancel exactly; anything left at its vertices means
        // the input was not K_U-invariant
        for (const auto& [ov, oc] : orbit.terms())
            detail::require(next.terms().find(ov) == next.terms().end(),
                            "input is not a sum of K_U-orbits");
        remainder = next;
        MuProjection mu = mu_g(rep_vx.rep(), w);
        WeightVector image = mu.apply(wv);
        for (long j = 1; j <= w.r; ++j)
            detail::require(image.coeffs[j].is_zero(), "mu image left the invariant line");
        out.add(rep_vx.a, image.coeffs[0]);
    }
    return out;
}

}  // namespace modp
