#pragma once

// JSON encodings: field elements as coefficient lists [c0,...,c_{k-1}],
// matrices as row-major nested lists, Z[1/p]-scalars as
// {"num": "...", "pexp": n}, Laurent operators as {"X^n": coeff}.
// Prime-field coefficients render as bare integers.

#include <json.hpp>

#include "modp/cohomology.hpp"
#include "modp/gl2ind.hpp"
#include "modp/jacquet.hpp"
#include "modp/padic.hpp"
#include "modp/satake.hpp"
#include "modp/torus.hpp"
#include "modp/weights.hpp"

namespace modp {

using json = nlohmann::json;

inline json to_json(const FieldElement& a) {
    if (a.field()->degree() == 1) return a.coeffs()[0];
    json arr = json::array();
    for (long c : a.coeffs()) arr.push_back(c);
    return arr;
}

inline json to_json(const FieldMatrix& m) {
    json rows = json::array();
    for (long i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline json to_json(const PScalar& s) {
    return json{{"num", s.num().str()}, {"pexp", s.pexp()}};
}

inline json to_json(const GMatrix& g) {
    return json::array({json::array({to_json(g.a()), to_json(g.b())}),
                        json::array({to_json(g.c()), to_json(g.d())})});
}

inline json to_json(const Weight& w) {
    return json{{"r", w.r}, {"e", w.e}, {"p", w.p()}, {"k", w.field->degree()}};
}

inline json to_json(const PadicCharacter& c) {
    return json{{"lambda", to_json(c.lambda())}, {"e", c.e()}};
}

inline json to_json(const TorusCharacter& c) {
    return json{{"chi1", to_json(c.chi1)}, {"chi2", to_json(c.chi2)}};
}

inline json to_json(const HeckeLaurent& h) {
    json out = json::object();
    for (const auto& [n, c] : h.coeffs()) out["X^" + std::to_string(n)] = to_json(c);
    return out;
}

inline json to_json(const IndElement& f) {
    json out = json::array();
    for (const auto& [vx, v] : f.terms()) {
        json coeffs = json::array();
        for (const auto& c : v) coeffs.push_back(to_json(c));
        out.push_back(json{{"vertex", json{{"a", vx.a}, {"u", to_json(vx.u)}}},
                           {"coeffs", coeffs}});
    }
    return out;
}

inline json to_json(const JacquetResult& r) {
    json out;
    out["L^-1"] = r.Lm1 ? to_json(*r.Lm1) : json(0);
    out["L^0"] = r.L0 ? to_json(*r.L0) : json(0);
    return out;
}

inline std::string row_name(IrreducibleType t) {
    switch (t) {
        case IrreducibleType::character: return "character";
        case IrreducibleType::special: return "special series";
        case IrreducibleType::principal: return "principal series";
        case IrreducibleType::supersingular: return "supersingular";
    }
    return "?";
}

inline json row_json(IrreducibleType t, const JacquetResult& r) {
    return json{{"type", row_name(t)},
                {"L^-1", r.Lm1 ? to_json(*r.Lm1) : json(0)},
                {"L^0", r.L0 ? to_json(*r.L0) : json(0)}};
}

// The reproducibility corpus: Satake images of Phi for p in {2,3,5,7} and
// the standard table rows for p in {3,5}, keyed by (p, verb, params).
// Rendered content is byte-stable across runs.
inline std::vector<std::pair<std::string, std::string>> golden_corpus() {
    std::vector<std::pair<std::string, std::string>> out;
    for (long p : {2L, 3L, 5L, 7L}) {
        Field F = FieldSpec::make(p, 1);
        for (long r = 0; r <= p - 1; ++r) {
            Weight w(F, r, 0);
            HeckePoly q = HeckePoly::phi_power(F, 1);
            out.emplace_back("p" + std::to_string(p) + "/satake_r" + std::to_string(r) +
                                 "_phi_deg0.json",
                             to_json(satake0(q, w)).dump() + "\n");
            out.emplace_back("p" + std::to_string(p) + "/satake_r" + std::to_string(r) +
                                 "_phi_deg1.json",
                             to_json(satake1(q, w)).dump() + "\n");
        }
    }
    for (long p : {3L, 5L}) {
        Field F = FieldSpec::make(p, 1);
        PadicCharacter one = PadicCharacter::trivial(F);
        json rows = json::array();
        rows.push_back(row_json(IrreducibleType::character,
                                table1(IrreducibleLabel::character(one))));
        rows.push_back(row_json(IrreducibleType::special,
                                table1(IrreducibleLabel::special(one))));
        rows.push_back(row_json(
            IrreducibleType::principal,
            table1(IrreducibleLabel::principal(one, PadicCharacter::omega(F)))));
        rows.push_back(row_json(IrreducibleType::supersingular,
                                table1(IrreducibleLabel::supersingular(1, one))));
        out.emplace_back("p" + std::to_string(p) + "/table1_all.json", rows.dump() + "\n");
    }
    return out;
}

// Text rendering of characters for the table output.
inline std::string render_character(const PadicCharacter& c) {
    std::string s;
    bool printed = false;
    if (!(c.lambda() == c.field()->one())) {
        s += "μ_" + c.lambda().str();
        printed = true;
    }
    if (c.e() != 0) {
        if (printed) s += " ";
        s += "ω";
        if (c.e() != 1) s += "^" + std::to_string(c.e());
        printed = true;
    }
    if (!printed) s = "1";
    return s;
}

inline std::string render_torus_character(const std::optional<TorusCharacter>& c) {
    if (!c) return "0";
    return render_character(c->chi1) + " ⊠ " + render_character(c->chi2);
}

}  // namespace modp
