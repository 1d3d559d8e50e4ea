#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "modp/weights.hpp"

using namespace modp;

TEST_CASE("substitution action on monomials") {
    Field F3 = FieldSpec::make(3, 1);
    Weight w(F3, 2, 0);

    WeightVector y2 = WeightVector::monomial(w, 2);
    REQUIRE(act(GMatrix::identity(3), y2) == y2);

    // [[1,1],[0,1]] sends y^2 to x^2 + 2xy + y^2
    WeightVector img = act(standard_unipotent(3), y2);
    REQUIRE(img.coeffs[0] == F3->one());
    REQUIRE(img.coeffs[1] == F3->from_int(2));
    REQUIRE(img.coeffs[2] == F3->one());

    Field F5 = FieldSpec::make(5, 1);
    Weight w1(F5, 1, 0);
    GMatrix d = GMatrix::diag(PScalar(5, 2), PScalar(5, 3));
    REQUIRE(act(d, WeightVector::monomial(w1, 0)).coeffs[0] == F5->from_int(2));
    REQUIRE(act(d, WeightVector::monomial(w1, 1)).coeffs[1] == F5->from_int(3));

    // central p-powers act trivially, non ZK elements are rejected
    REQUIRE(act(GMatrix::central(PScalar::p_power(5, 2)), WeightVector::monomial(w1, 0)) ==
            WeightVector::monomial(w1, 0));
    REQUIRE_THROWS_AS(act(GMatrix::diag(PScalar::p_power(5, 1), PScalar::one(5)),
                          WeightVector::monomial(w1, 0)),
                      std::invalid_argument);

    // det twist
    Weight wt(F5, 1, 2);
    WeightVector xm = WeightVector::monomial(wt, 0);
    // diag(2,3): x -> 2x, times det^2 = 6^2 = 36 = 1
    REQUIRE(act(d, xm).coeffs[0] == F5->from_int(2) * F5->from_int(36 % 5));
}

TEST_CASE("coefficient projections") {
    Field F5 = FieldSpec::make(5, 1);
    for (long r = 1; r <= 4; ++r) {
        Weight w(F5, r, 0);
        WeightVector xr = WeightVector::monomial(w, 0);
        WeightVector yr = WeightVector::monomial(w, r);
        REQUIRE(proj_X(xr) == F5->one());
        REQUIRE(proj_Y(xr) == F5->zero());
        REQUIRE(proj_Y(yr) == F5->one());
        // (x+y)^r has x^r-coefficient 1
        GMatrix lower(PScalar::one(5), PScalar::zero(5), PScalar::one(5), PScalar::one(5));
        REQUIRE(proj_X(act(lower, xr)) == F5->one());
    }
}

TEST_CASE("invariants, coinvariants and eta") {
    for (long p : {2L, 3L, 5L}) {
        Field F = FieldSpec::make(p, 1);
        for (long r = 0; r <= p - 1; ++r) {
            Weight w(F, r, 0);
            auto inv = ku_invariants(w);
            REQUIRE(inv.size() == 1);
            REQUIRE(inv[0].coeffs[0] != F->zero());
            for (long j = 1; j <= r; ++j) REQUIRE(inv[0].coeffs[j].is_zero());

            Coinvariants co = ku_coinvariants(w);
            REQUIRE(co.dim == 1);
            REQUIRE(co.eta(WeightVector::monomial(w, r)) == F->one());
            for (long j = 0; j < r; ++j) {
                if (j == r - 1 && r >= 1)
                    REQUIRE(co.eta(WeightVector::monomial(w, r - 1)) == F->zero());
                // the whole span x^r, ..., x y^{r-1} dies
                REQUIRE(co.eta(WeightVector::monomial(w, j)) == F->zero());
            }
            if (r == 0) REQUIRE(co.eta_row[0] == F->one());
        }
    }
}

TEST_CASE("torus unit characters on the invariant and coinvariant lines") {
    Field F5 = FieldSpec::make(5, 1);
    Weight w(F5, 3, 0);
    REQUIRE(kt_character_on_coinvariants(w) == std::pair<long, long>{0, 3});
    REQUIRE(kt_character_on_invariants(w) == std::pair<long, long>{3, 0});
    Weight w0(F5, 0, 0);
    REQUIRE(kt_character_on_coinvariants(w0) == std::pair<long, long>{0, 0});
    Weight we(F5, 2, 1);
    REQUIRE(kt_character_on_coinvariants(we) == std::pair<long, long>{1, 3});
    REQUIRE(kt_character_on_invariants(we) == std::pair<long, long>{3, 1});

    // the lines really transform that way under unit diagonals
    for (long a = 1; a < 5; ++a)
        for (long d = 1; d < 5; ++d) {
            GMatrix t = GMatrix::diag(PScalar(5, a), PScalar(5, d));
            auto [e1, e2] = kt_character_on_invariants(we);
            WeightVector xr = WeightVector::monomial(we, 0);
            REQUIRE(act(t, xr) ==
                    xr.scaled(F5->from_int(a).pow(e1) * F5->from_int(d).pow(e2)));
        }
}

TEST_CASE("action is a homomorphism on sampled pairs") {
    std::mt19937_64 rng(5);
    for (long p : {2L, 3L, 5L}) {
        Field F = FieldSpec::make(p, 1);
        std::uniform_int_distribution<long> unit(1, p - 1);
        std::uniform_int_distribution<long> smalld(0, p - 1);
        auto random_k = [&] {
            GMatrix g = GMatrix::identity(p);
            for (int i = 0; i < 4; ++i) {
                g = g * GMatrix::upper_unipotent(PScalar(p, smalld(rng)));
                g = g * GMatrix(PScalar::one(p), PScalar::zero(p), PScalar(p, smalld(rng)),
                                PScalar::one(p));
                g = g * GMatrix::diag(PScalar(p, unit(rng)), PScalar(p, unit(rng)));
            }
            return g;
        };
        for (long r = 0; r <= p - 1; ++r) {
            Weight w(F, r, (r + 1) % std::max((long)1, p - 1));
            for (int trial = 0; trial < 10; ++trial) {
                GMatrix g1 = random_k(), g2 = random_k();
                REQUIRE(weight_action_matrix(g1 * g2, w) ==
                        weight_action_matrix(g1, w) * weight_action_matrix(g2, w));
            }
        }
    }
}

TEST_CASE("gamma - 1 is a single Jordan block") {
    for (long p : {2L, 3L, 5L, 7L}) {
        Field F = FieldSpec::make(p, 1);
        for (long r = 0; r <= p - 1; ++r) {
            Weight w(F, r, 0);
            FieldMatrix n = weight_gamma_matrix(w) - FieldMatrix::identity(F, r + 1);
            REQUIRE(n.pow(r + 1).is_zero());
            if (r >= 1) REQUIRE(!n.pow(r).is_zero());
        }
    }
}

TEST_CASE("eta is K_U-coinvariant") {
    Field F5 = FieldSpec::make(5, 1);
    for (long r = 0; r <= 4; ++r) {
        Weight w(F5, r, 0);
        Coinvariants co = ku_coinvariants(w);
        for (long u = 0; u < 5; ++u) {
            GMatrix ku = GMatrix::upper_unipotent(PScalar(5, u));
            for (long j = 0; j <= r; ++j) {
                WeightVector v = WeightVector::monomial(w, j);
                REQUIRE(co.eta(act(ku, v)) == co.eta(v));
            }
        }
    }
}
