#pragma once

// The cohomology functors L^0(U, V) and L^{-1}(U, V) for the irreducible
// smooth GL_2(Q_p)-representations, computed through the Satake images of
// Phi: both are cokernels of a rank-one Laurent operator, reassembled into
// torus characters and twisted back.
//
// The four families:
//   character      chi o det            -> (0, chi (x) chi)
//   special series (chi o det) (x) Sp   -> (chi omega (x) chi omega^{-1}, 0)
//   principal      i_T^G(chi1 (x) chi2) -> (chi2 omega (x) chi1 omega^{-1},
//                                           chi1 (x) chi2)
//   supersingular  V(r, 0, chi)         -> (0, 0)
// arranged as (L^{-1}, L^0); every row is computed, none is hard-coded.

#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <utility>

#include "modp/cohomology.hpp"
#include "modp/ffield.hpp"
#include "modp/gl2ind.hpp"
#include "modp/satake.hpp"
#include "modp/torus.hpp"
#include "modp/weights.hpp"

namespace modp {

struct JacquetResult {
    std::optional<TorusCharacter> Lm1;  // L^{-1}(U, V)
    std::optional<TorusCharacter> L0;   // L^0(U, V)

    // L^{-i}(U, V); zero outside degrees i in {0, 1}.
    std::optional<TorusCharacter> component(long i) const {
        if (i == 0) return L0;
        if (i == 1) return Lm1;
        return std::nullopt;
    }
    JacquetResult det_twist(const PadicCharacter& chi) const {
        JacquetResult r;
        if (Lm1) r.Lm1 = Lm1->det_twist(chi);
        if (L0) r.L0 = L0->det_twist(chi);
        return r;
    }
    bool operator==(const JacquetResult& o) const { return Lm1 == o.Lm1 && L0 == o.L0; }
    bool operator!=(const JacquetResult& o) const { return !(*this == o); }
};

// Precomputed Satake images of Phi for a weight (both degrees).
struct SatakePair {
    HeckeLaurent s0, s1;
    static SatakePair of_phi(const Weight& w) {
        HeckePoly q = HeckePoly::phi_power(w.field, 1);
        return SatakePair{satake0(q, w), satake1(q, w)};
    }
};

// Memoized Satake images keyed by (p, extension degree, r); the modulus is
// deterministic per (p, k), so equal keys mean equal arithmetic.
inline const SatakePair& cached_satake_pair(const Weight& w) {
    static std::map<std::tuple<long, long, long>, SatakePair> cache;
    static std::mutex mutex;
    std::scoped_lock lock(mutex);
    auto key = std::make_tuple(w.p(), w.field->degree(), w.r);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, SatakePair::of_phi(w)).first;
    return it->second;
}

// L(U, V(r, lambda, chi)) through the presentation
// 0 -> ind(Sym^r) --Phi - lambda--> ind(Sym^r) -> V(r, lambda) -> 0:
// L^0 and L^{-1} are the cokernels of S^0(Phi) - lambda and
// S^1(Phi) - lambda on the respective rank-one torus inductions.
inline JacquetResult jacquet_of_presentation(const Field& F, long r,
                                             const FieldElement& lambda,
                                             const PadicCharacter& chi,
                                             const SatakePair* precomputed = nullptr) {
    Weight w(F, r, 0);
    SatakePair sp = precomputed ? *precomputed : SatakePair::of_phi(w);
    auto co_units = kt_character_on_coinvariants(w);
    // delta-twisted invariant character: omega^{r+1} (x) omega^{-1}
    auto inv_units = kt_character_on_invariants(w);
    long m = F->p() - 1;
    std::pair<long, long> tw_units{m == 0 ? 0 : (inv_units.first + 1) % m,
                                   m == 0 ? 0 : ((inv_units.second - 1) % m + m) % m};
    FieldElement central = F->one();  // p acts trivially on the weight
    JacquetResult out;
    out.L0 = ind_cokernel(sp.s0, lambda, co_units, central);
    out.Lm1 = ind_cokernel(sp.s1, lambda, tw_units, central);
    return out.det_twist(chi);
}

// ---------------------------------------------------------------------------
// Irreducible labels
// ---------------------------------------------------------------------------

enum class IrreducibleType { character, special, principal, supersingular };

struct IrreducibleLabel {
    IrreducibleType type;
    PadicCharacter chi;         // character, special, supersingular twists
    PadicCharacter chi1, chi2;  // principal parameters
    long r = 0;                 // supersingular weight

    static IrreducibleLabel character(PadicCharacter chi) {
        IrreducibleLabel l;
        l.type = IrreducibleType::character;
        l.chi = std::move(chi);
        return l;
    }
    static IrreducibleLabel special(PadicCharacter chi) {
        IrreducibleLabel l;
        l.type = IrreducibleType::special;
        l.chi = std::move(chi);
        return l;
    }
    static IrreducibleLabel principal(PadicCharacter chi1, PadicCharacter chi2) {
        detail::require(!(chi1 == chi2),
                        "principal series requires chi1 != chi2: the induced "
                        "representation is irreducible only for distinct characters");
        IrreducibleLabel l;
        l.type = IrreducibleType::principal;
        l.chi1 = std::move(chi1);
        l.chi2 = std::move(chi2);
        return l;
    }
    static IrreducibleLabel supersingular(long r, PadicCharacter chi) {
        IrreducibleLabel l;
        l.type = IrreducibleType::supersingular;
        l.r = r;
        l.chi = std::move(chi);
        return l;
    }
};

// Square root in F, if one exists there.
inline std::optional<FieldElement> sqrt_in(const FieldElement& x) {
    const Field& F = x.field();
    long q = F->order();
    for (long n = 0; n < q; ++n) {
        FieldElement y = F->from_index(n);
        if (y * y == x) return y;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// The character row, through unipotent cohomology and localization
// ---------------------------------------------------------------------------

// Reads off the torus character of a localized one-dimensional Hecke module:
// values of the Hecke action of diag(p,1), diag(p,p), diag(c,1), diag(1,c)
// for a primitive root lift c determine chi1 and chi2.
inline TorusCharacter character_of_localized_line(const SmoothModule& M, int degree) {
    const Field& F = M.field;
    long p = F->p();
    auto scalar = [&](const GMatrix& g) {
        FieldMatrix h = hecke(g, M, degree);
        detail::require(h.rows() == 1 && h.cols() == 1, "localized module is not a line");
        return h.at(0, 0);
    };
    GMatrix z = GMatrix::diag(PScalar::p_power(p, 1), PScalar::one(p));
    FieldElement chi1_p = scalar(z);
    detail::require(!chi1_p.is_zero(), "z acts nilpotently; the localization vanished");
    FieldElement chi2_p = scalar(GMatrix::central(PScalar::p_power(p, 1))) * chi1_p.inverse();
    // primitive root of F_p^*
    long c = 1;
    for (long a = 2; a < p; ++a) {
        bool prim = true;
        long pw = a % p;
        for (long i = 1; i < p - 2; ++i) {
            pw = (pw * a) % p;
            if (pw == 1) { prim = false; break; }
        }
        if (prim) { c = a; break; }
    }
    auto unit_exponent = [&](const GMatrix& g) {
        FieldElement s = scalar(g);
        FieldElement base = F->from_int(c);
        FieldElement pw = F->one();
        for (long e = 0; e < std::max((long)1, p - 1); ++e) {
            if (pw == s) return e;
            pw = pw * base;
        }
        throw std::runtime_error("unit scalar is not a power of omega");
    };
    long e1 = p == 2 ? 0 : unit_exponent(GMatrix::diag(PScalar(p, c), PScalar::one(p)));
    long e2 = p == 2 ? 0 : unit_exponent(GMatrix::diag(PScalar::one(p), PScalar(p, c)));
    return TorusCharacter(PadicCharacter(chi1_p, e1), PadicCharacter(chi2_p, e2));
}

// L(U, chi o det) via localized K_U-cohomology of the delta-twisted module:
// the H^0-line has nilpotent Hecke z-action (hence localizes to zero), the
// H^1-line is inverted by z and carries chi (x) chi.
inline JacquetResult character_case(const PadicCharacter& chi) {
    const Field& F = chi.field();
    SmoothModule M = scalar_twist(det_character_module(chi), delta_character(F));
    GMatrix z = GMatrix::diag(PScalar::p_power(F->p(), 1), PScalar::one(F->p()));
    JacquetResult out;
    if (localize_finite(hecke(z, M, 0)) > 0) out.Lm1 = character_of_localized_line(M, 0);
    if (localize_finite(hecke(z, M, 1)) > 0) out.L0 = character_of_localized_line(M, 1);
    return out;
}

// ---------------------------------------------------------------------------
// Special series through the long exact sequence of 0 -> Sp -> V(0,1) -> 1 -> 0
// ---------------------------------------------------------------------------

inline JacquetResult special_series_via_les(const PadicCharacter& chi) {
    const Field& F = chi.field();
    JacquetResult v01 =
        jacquet_of_presentation(F, 0, F->one(), chi, &cached_satake_pair(Weight(F, 0, 0)));
    JacquetResult triv = character_case(chi);
    // L^{-1} of the character vanishes, so L^{-1}(Sp) = L^{-1}(V(0,1));
    // the edge map L^0(V(0,1)) -> L^0(1) is onto between lines carrying the
    // same character, hence bijective, so L^0(Sp) = 0.
    detail::require(!triv.Lm1.has_value(), "character case must have vanishing L^{-1}");
    detail::require(v01.L0.has_value() && triv.L0.has_value() && *v01.L0 == *triv.L0,
                    "edge map is not between equal characters");
    JacquetResult out;
    out.Lm1 = v01.Lm1;
    return out;
}

// ---------------------------------------------------------------------------
// Table rows
// ---------------------------------------------------------------------------

// The computed row (L^{-1}, L^0) for an irreducible label.  The principal
// case solves lambda^2 = lambda1 lambda2, passing to a quadratic extension
// when the product is not a square; the special case reduces to the trivial
// twist and twists back.
inline JacquetResult table1(const IrreducibleLabel& label) {
    switch (label.type) {
        case IrreducibleType::character:
            return character_case(label.chi);
        case IrreducibleType::special: {
            const Field& F = label.chi.field();
            JacquetResult base = special_series_via_les(PadicCharacter::trivial(F));
            return base.det_twist(label.chi);
        }
        case IrreducibleType::supersingular: {
            const Field& F = label.chi.field();
            JacquetResult r = jacquet_of_presentation(
                F, label.r, F->zero(), label.chi,
                &cached_satake_pair(Weight(F, label.r, 0)));
            detail::require(!r.L0 && !r.Lm1, "supersingular Jacquet modules must vanish");
            return r;
        }
        case IrreducibleType::principal:
            break;
    }
    const PadicCharacter& chi1 = label.chi1;
    const PadicCharacter& chi2 = label.chi2;
    const Field& F = chi1.field();
    long p = F->p();
    long m = p - 1;
    long r = m == 0 ? 0 : (((chi2.e() - chi1.e()) % m) + m) % m;
    FieldElement prod = chi1.lambda() * chi2.lambda();
    Field Fwork = F;
    FieldElement lam = F->zero(), l2 = F->zero();
    long e1 = chi1.e();
    if (auto s = sqrt_in(prod)) {
        lam = *s;
        l2 = chi2.lambda();
    } else {
        Fwork = FieldSpec::make(p, 2 * F->degree());
        FieldEmbedding emb(F, Fwork);
        auto s2 = sqrt_in(emb.apply(prod));
        detail::require(s2.has_value(), "no square root in the quadratic extension");
        lam = *s2;
        l2 = emb.apply(chi2.lambda());
    }
    FieldElement lambda_param = l2 * lam.inverse();
    PadicCharacter twist(lam, e1);
    return jacquet_of_presentation(Fwork, r, lambda_param, twist,
                                   &cached_satake_pair(Weight(Fwork, r, 0)));
}

}  // namespace modp
