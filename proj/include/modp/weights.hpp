#pragma once

// The irreducible smooth GL_2(Z_p)-representations Sym^r(k^2) (x) det^e with
// the substitution action f(x,y) -> f(ax+cy, bx+dy), the coefficient
// projections X and Y, and the K_U-invariants/coinvariants together with the
// quotient map eta.

#include <utility>
#include <vector>

#include "modp/ffield.hpp"
#include "modp/padic.hpp"

namespace modp {

// Sym^r(k^2) (x) det^e with basis x^r, x^{r-1}y, ..., y^r (dimension r+1).
// Central p-powers act trivially.
struct Weight {
    Field field;
    long r = 0;
    long e = 0;

    Weight() = default;
    Weight(Field f, long r_, long e_ = 0) : field(std::move(f)), r(r_), e(e_) {
        long p = field->p();
        detail::require(0 <= r && r <= p - 1, "need 0 <= r <= p-1");
        detail::require(0 <= e && (e < p - 1 || (p == 2 && e == 0)), "need 0 <= e < p-1");
    }

    long p() const { return field->p(); }
    long dim() const { return r + 1; }
    bool operator==(const Weight& o) const {
        return r == o.r && e == o.e && field->p() == o.field->p() &&
               field->degree() == o.field->degree();
    }
};

struct WeightVector {
    Weight weight;
    std::vector<FieldElement> coeffs;  // length r+1

    WeightVector() = default;
    WeightVector(Weight w, std::vector<FieldElement> c)
        : weight(std::move(w)), coeffs(std::move(c)) {
        detail::require((long)coeffs.size() == weight.dim(), "coefficient count != dim");
    }
    static WeightVector zero(const Weight& w) {
        return WeightVector(w, std::vector<FieldElement>(w.dim(), w.field->zero()));
    }
    // j-th basis monomial x^{r-j} y^j
    static WeightVector monomial(const Weight& w, long j) {
        WeightVector v = zero(w);
        v.coeffs[j] = w.field->one();
        return v;
    }

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }
    WeightVector operator+(const WeightVector& o) const {
        WeightVector r = *this;
        for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = coeffs[i] + o.coeffs[i];
        return r;
    }
    WeightVector operator-(const WeightVector& o) const {
        WeightVector r = *this;
        for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = coeffs[i] - o.coeffs[i];
        return r;
    }
    WeightVector scaled(const FieldElement& c) const {
        WeightVector r = *this;
        for (auto& x : r.coeffs) x = x * c;
        return r;
    }
    bool operator==(const WeightVector& o) const {
        return weight == o.weight && coeffs == o.coeffs;
    }
    bool operator!=(const WeightVector& o) const { return !(*this == o); }
};

// Matrix of g acting on Sym^r (x) det^e.  g must lie in ZK (an integral
// matrix with unit determinant times a central p-power); the action factors
// through GL_2(F_p), central p-powers acting trivially.
inline FieldMatrix weight_action_matrix(const GMatrix& g, const Weight& w) {
    detail::require(g.in_ZK(), "group element does not act on a weight");
    long s = g.central_val();
    PScalar scale = PScalar::p_power(g.p(), -s);
    const Field& F = w.field;
    FieldElement a = F->from_int((g.a() * scale).unit_residue_mod_p());
    FieldElement b = F->from_int((g.b() * scale).unit_residue_mod_p());
    FieldElement c = F->from_int((g.c() * scale).unit_residue_mod_p());
    FieldElement d = F->from_int((g.d() * scale).unit_residue_mod_p());
    long r = w.r;
    // powers of the linear forms a x + c y and b x + d y
    auto lin_pow = [&](const FieldElement& u, const FieldElement& v, long n) {
        // coefficients of (u x + v y)^n in x^n, x^{n-1}y, ..., y^n
        std::vector<FieldElement> cur{F->one()};
        for (long i = 0; i < n; ++i) {
            std::vector<FieldElement> nxt(cur.size() + 1, F->zero());
            for (size_t j = 0; j < cur.size(); ++j) {
                nxt[j] = nxt[j] + cur[j] * u;
                nxt[j + 1] = nxt[j + 1] + cur[j] * v;
            }
            cur = std::move(nxt);
        }
        return cur;
    };
    std::vector<std::vector<FieldElement>> xpow(r + 1), ypow(r + 1);
    for (long n = 0; n <= r; ++n) {
        xpow[n] = lin_pow(a, c, n);
        ypow[n] = lin_pow(b, d, n);
    }
    FieldElement dete = (a * d - b * c).pow(w.e);
    FieldMatrix m(F, r + 1, r + 1);
    for (long j = 0; j <= r; ++j) {
        // image of x^{r-j} y^j is (ax+cy)^{r-j} (bx+dy)^j
        const auto& xp = xpow[r - j];
        const auto& yp = ypow[j];
        for (long i1 = 0; i1 <= r - j; ++i1)
            for (long i2 = 0; i2 <= j; ++i2) {
                long row = i1 + i2;
                m.at(row, j) = m.at(row, j) + xp[i1] * yp[i2] * dete;
            }
    }
    return m;
}

inline WeightVector act(const GMatrix& g, const WeightVector& v) {
    FieldMatrix m = weight_action_matrix(g, v.weight);
    return WeightVector(v.weight, m.apply(v.coeffs));
}

// X and Y are the coefficient projections onto the span of x^r and of y^r,
// respectively, with respect to the monomial basis.
inline FieldElement proj_X(const WeightVector& v) { return v.coeffs.front(); }
inline FieldElement proj_Y(const WeightVector& v) { return v.coeffs.back(); }

// Topological generator of K_U.
inline GMatrix standard_unipotent(long p) {
    return GMatrix::upper_unipotent(PScalar::one(p));
}

inline FieldMatrix weight_gamma_matrix(const Weight& w) {
    return weight_action_matrix(standard_unipotent(w.p()), w);
}

// Basis of H^0(K_U, w) = ker(gamma - 1); equals <x^r>.
inline std::vector<WeightVector> ku_invariants(const Weight& w) {
    FieldMatrix g = weight_gamma_matrix(w);
    auto ker = mat_kernel(g - FieldMatrix::identity(w.field, w.dim()));
    std::vector<WeightVector> basis;
    for (auto& v : ker) basis.emplace_back(w, std::move(v));
    return basis;
}

// Coinvariants of K_U on w: the dimension and the quotient map eta,
// normalized so that eta(y^r) = 1.
struct Coinvariants {
    long dim = 0;
    std::vector<FieldElement> eta_row;  // eta(v) = sum eta_row[j] v[j]

    FieldElement eta(const WeightVector& v) const {
        FieldElement s = v.weight.field->zero();
        for (size_t j = 0; j < eta_row.size(); ++j) s = s + eta_row[j] * v.coeffs[j];
        return s;
    }
};

inline Coinvariants ku_coinvariants(const Weight& w) {
    FieldMatrix g = weight_gamma_matrix(w);
    Cokernel ck = mat_cokernel(g - FieldMatrix::identity(w.field, w.dim()));
    detail::require(ck.dim == 1, "coinvariants of a weight must be one-dimensional");
    Coinvariants co;
    co.dim = ck.dim;
    co.eta_row.resize(w.dim());
    FieldElement at_yr = ck.projection.at(0, w.r);
    detail::require(!at_yr.is_zero(), "eta does not see y^r");
    FieldElement inv = at_yr.inverse();
    for (long j = 0; j < w.dim(); ++j) co.eta_row[j] = ck.projection.at(0, j) * inv;
    return co;
}

// omega-exponents (on the two torus unit factors) of the K_T-action.
// On invariants <x^r> the unit diag(a,d) acts by a^{e+r} d^e; on the
// coinvariant line (image of y^r) it acts by a^e d^{e+r}.
inline std::pair<long, long> kt_character_on_invariants(const Weight& w) {
    long m = w.p() - 1;
    return {((w.e + w.r) % m + m) % m, ((w.e) % m + m) % m};
}
inline std::pair<long, long> kt_character_on_coinvariants(const Weight& w) {
    long m = w.p() - 1;
    return {((w.e) % m + m) % m, ((w.e + w.r) % m + m) % m};
}

}  // namespace modp
