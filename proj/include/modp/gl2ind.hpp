#pragma once

// Compactly induced representations ind_{ZK}^G(Sym^r (x) det^e) as finitely
// supported formal sums of symbols [g, v], with g in canonical vertex-coset
// form, the translation action of G, point evaluation, and the spherical
// Hecke operator Phi generating the endomorphism algebra.
//
// Phi is stored through its values on [1, v] and extended G-equivariantly;
// on [1, v] it is
//   [diag(p,1)^{-1}, Y(v)] + sum_{i<p} [([[1,i],[0,p]])^{-1}, X(u_i v)]
// with u_i the unipotent lift of i.

#include <cstdlib>
#include <map>
#include <vector>

#include "modp/ffield.hpp"
#include "modp/padic.hpp"
#include "modp/weights.hpp"

namespace modp {

class IndElement {
public:
    explicit IndElement(Weight w) : weight_(std::move(w)) {}

    // [g, v]
    static IndElement symbol(const GMatrix& g, const WeightVector& v) {
        IndElement f(v.weight);
        f.add_symbol(g, v);
        return f;
    }
    static IndElement unit_symbol(const WeightVector& v) {
        return symbol(GMatrix::identity(v.weight.p()), v);
    }

    const Weight& weight() const { return weight_; }
    const std::map<VertexCoset, std::vector<FieldElement>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long support_size() const { return (long)terms_.size(); }

    // Adds [g, v] after reducing g to its canonical coset representative.
    void add_symbol(const GMatrix& g, const WeightVector& v) {
        if (v.is_zero()) return;
        auto [vx, h] = canonical_vertex(g);
        add_at(vx, act(h, v));
    }
    void add_at(const VertexCoset& vx, const WeightVector& v) {
        if (v.is_zero()) return;
        auto it = terms_.find(vx);
        if (it == terms_.end()) {
            terms_.emplace(vx, v.coeffs);
            return;
        }
        bool all_zero = true;
        for (size_t i = 0; i < it->second.size(); ++i) {
            it->second[i] = it->second[i] + v.coeffs[i];
            if (!it->second[i].is_zero()) all_zero = false;
        }
        if (all_zero) terms_.erase(it);
    }

    WeightVector value_at(const VertexCoset& vx) const {
        auto it = terms_.find(vx);
        if (it == terms_.end()) return WeightVector::zero(weight_);
        return WeightVector(weight_, it->second);
    }

    IndElement operator+(const IndElement& o) const {
        IndElement r = *this;
        for (const auto& [vx, c] : o.terms_) r.add_at(vx, WeightVector(weight_, c));
        return r;
    }
    IndElement operator-(const IndElement& o) const { return *this + o.scaled(-weight_.field->one()); }
    IndElement scaled(const FieldElement& c) const {
        IndElement r(weight_);
        if (c.is_zero()) return r;
        for (const auto& [vx, v] : terms_) r.add_at(vx, WeightVector(weight_, v).scaled(c));
        return r;
    }
    bool operator==(const IndElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const IndElement& o) const { return !(*this == o); }

    // Translation action g . [h, v] = [g h, v].
    IndElement acted(const GMatrix& g) const {
        IndElement r(weight_);
        for (const auto& [vx, v] : terms_) r.add_symbol(g * vx.rep(), WeightVector(weight_, v));
        return r;
    }

    // f(t) = sum over terms [s, v] with t s in ZK of (t s) . v.
    WeightVector evaluate(const GMatrix& t) const {
        WeightVector out = WeightVector::zero(weight_);
        if (t.is_upper_triangular()) {
            // t * rep is upper triangular with diagonal (t11 p^a, t22); it
            // lies in ZK only when both diagonal valuations agree, which
            // rejects almost every term before any big-integer work
            long v11_base = t.a().val();
            long v22 = t.d().val();
            for (const auto& [vx, v] : terms_) {
                long sigma = v11_base + vx.a;
                if (sigma != v22) continue;
                PScalar h12 = t.a() * vx.u + t.b();
                if (h12.val() < sigma) continue;
                GMatrix h(t.a() * PScalar::p_power(t.p(), vx.a), h12,
                          PScalar::zero(t.p()), t.d());
                out = out + act(h, WeightVector(weight_, v));
            }
            return out;
        }
        for (const auto& [vx, v] : terms_) {
            GMatrix h = t * vx.rep();
            if (!h.in_ZK()) continue;
            out = out + act(h, WeightVector(weight_, v));
        }
        return out;
    }

    long tree_radius() const {
        long r = 0;
        for (const auto& [vx, v] : terms_) r = std::max(r, vx.distance());
        return r;
    }
    long max_abs_exponent() const {
        long r = 0;
        for (const auto& [vx, v] : terms_) r = std::max(r, std::labs(vx.a));
        return r;
    }

private:
    Weight weight_;
    std::map<VertexCoset, std::vector<FieldElement>> terms_;
};

// Phi([1, v]); the X- and Y-projections land on the monomial lines x^r, y^r.
inline IndElement phi_on_unit_symbol(const WeightVector& v) {
    const Weight& w = v.weight;
    long p = w.p();
    const Field& F = w.field;
    IndElement out(w);
    GMatrix t = GMatrix::diag(PScalar::p_power(p, 1), PScalar::one(p));
    out.add_symbol(t.inverse(), WeightVector::monomial(w, w.r).scaled(proj_Y(v)));
    for (long i = 0; i < p; ++i) {
        GMatrix ui = GMatrix::upper_unipotent(PScalar(p, i));
        GMatrix si(PScalar::one(p), PScalar(p, i), PScalar::zero(p), PScalar::p_power(p, 1));
        FieldElement c = proj_X(act(ui, v));
        out.add_symbol(si.inverse(), WeightVector::monomial(w, 0).scaled(c));
    }
    return out;
}

// Phi extended G-equivariantly: Phi(sum [s_j, v_j]) = sum s_j . Phi([1, v_j]).
inline IndElement phi(const IndElement& f) {
    IndElement out(f.weight());
    for (const auto& [vx, v] : f.terms()) {
        IndElement base = phi_on_unit_symbol(WeightVector(f.weight(), v));
        out = out + base.acted(vx.rep());
    }
    return out;
}

// Polynomial in Phi with field coefficients (c_0 + c_1 Phi + ...).
struct HeckePoly {
    std::vector<FieldElement> coeffs;

    static HeckePoly phi_power(const Field& F, long n) {
        detail::require(n >= 0, "negative power of Phi");
        HeckePoly q;
        q.coeffs.assign(n + 1, F->zero());
        q.coeffs[n] = F->one();
        return q;
    }
    static HeckePoly identity(const Field& F) { return phi_power(F, 0); }
    static HeckePoly phi_minus(const FieldElement& lambda) {
        HeckePoly q;
        q.coeffs = {-lambda, lambda.field()->one()};
        return q;
    }
    long degree() const { return (long)coeffs.size() - 1; }
};

inline IndElement phi_poly(const HeckePoly& q, const IndElement& f) {
    IndElement out(f.weight());
    IndElement power = f;
    for (size_t i = 0; i < q.coeffs.size(); ++i) {
        if (i > 0) power = phi(power);
        out = out + power.scaled(q.coeffs[i]);
    }
    return out;
}

}  // namespace modp
