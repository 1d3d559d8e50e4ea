#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "modp/ffield.hpp"

using namespace modp;

TEST_CASE("field construction picks the smallest irreducible modulus") {
    Field F5 = FieldSpec::make(5, 1);
    REQUIRE(F5->modulus() == std::vector<long>{0, 1});  // degenerate modulus x

    Field F9 = FieldSpec::make(3, 2);
    REQUIRE(F9->modulus() == std::vector<long>{1, 0, 1});  // x^2 + 1

    Field F2 = FieldSpec::make(2, 1);
    REQUIRE(F2->order() == 2);

    REQUIRE_THROWS_AS(FieldSpec::make(6, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(FieldSpec::make(1, 1), std::invalid_argument);
}

TEST_CASE("modulus is irreducible: no roots for quadratics and cubics") {
    for (long p : {2L, 3L, 5L, 7L})
        for (long k : {2L, 3L}) {
            Field F = FieldSpec::make(p, k);
            const auto& f = F->modulus();
            for (long x = 0; x < p; ++x) {
                long v = 0;
                for (long i = k; i >= 0; --i) v = (v * x + f[i]) % p;
                REQUIRE(v != 0);
            }
        }
    // degree 4 goes through the Frobenius-gcd test
    Field F16 = FieldSpec::make(2, 4);
    REQUIRE(F16->modulus() == std::vector<long>{1, 1, 0, 0, 1});  // x^4 + x + 1
}

TEST_CASE("field axioms on randomized triples") {
    std::mt19937_64 rng(42);
    for (long p : {2L, 3L, 5L})
        for (long k : {1L, 2L}) {
            Field F = FieldSpec::make(p, k);
            std::uniform_int_distribution<long> dist(0, F->order() - 1);
            for (int i = 0; i < 50; ++i) {
                FieldElement a = F->from_index(dist(rng));
                FieldElement b = F->from_index(dist(rng));
                FieldElement c = F->from_index(dist(rng));
                REQUIRE((a + b) + c == a + (b + c));
                REQUIRE((a * b) * c == a * (b * c));
                REQUIRE(a * (b + c) == a * b + a * c);
                REQUIRE(a + (-a) == F->zero());
                if (!a.is_zero()) {
                    REQUIRE(a * a.inverse() == F->one());
                    REQUIRE(a.pow(F->order() - 1) == F->one());
                }
            }
        }
}

TEST_CASE("Frobenius fixes exactly the prime subfield") {
    for (long p : {2L, 3L, 5L})
        for (long k : {2L, 3L}) {
            Field F = FieldSpec::make(p, k);
            long fixed = 0;
            for (long n = 0; n < F->order(); ++n) {
                FieldElement a = F->from_index(n);
                FieldElement ap = a.pow(p);
                if (ap == a) ++fixed;
                // Frobenius is a ring homomorphism
                FieldElement b = F->from_index((n * 7 + 3) % F->order());
                REQUIRE((a + b).pow(p) == a.pow(p) + b.pow(p));
                REQUIRE((a * b).pow(p) == a.pow(p) * b.pow(p));
            }
            REQUIRE(fixed == p);
        }
}

namespace {

// gamma = [[1,1],[0,1]] acting on Sym^r by substitution, built directly from
// the binomial expansion of (x + y)^j; independent of the weights module.
FieldMatrix unipotent_on_symr(const Field& F, long r) {
    FieldMatrix m(F, r + 1, r + 1);
    std::vector<std::vector<long>> binom(r + 1, std::vector<long>(r + 1, 0));
    for (long n = 0; n <= r; ++n) {
        binom[n][0] = 1;
        for (long j = 1; j <= n; ++j)
            binom[n][j] = binom[n - 1][j - 1] + (j <= n - 1 ? binom[n - 1][j] : 0);
    }
    // x^{r-j} y^j |-> x^{r-j} (x+y)^j = sum_i C(j,i) x^{r-i} y^i
    for (long j = 0; j <= r; ++j)
        for (long i = 0; i <= j; ++i) m.at(i, j) = F->from_int(binom[j][i]);
    return m;
}

}  // namespace

TEST_CASE("kernel: identity, zero, and the unipotent on Sym^2 over F_5") {
    Field F5 = FieldSpec::make(5, 1);
    REQUIRE(mat_kernel(FieldMatrix::identity(F5, 3)).empty());
    REQUIRE(mat_kernel(FieldMatrix(F5, 2, 2)).size() == 2);

    FieldMatrix g = unipotent_on_symr(F5, 2);
    auto ker = mat_kernel(g - FieldMatrix::identity(F5, 3));
    REQUIRE(ker.size() == 1);
    // kernel is the x^2 line
    REQUIRE(!ker[0][0].is_zero());
    REQUIRE(ker[0][1].is_zero());
    REQUIRE(ker[0][2].is_zero());
}

TEST_CASE("cokernel: dimensions and annihilation") {
    Field F5 = FieldSpec::make(5, 1);
    REQUIRE(mat_cokernel(FieldMatrix::identity(F5, 4)).dim == 0);
    REQUIRE(mat_cokernel(FieldMatrix(F5, 3, 3)).dim == 3);

    for (long p : {3L, 5L}) {
        Field F = FieldSpec::make(p, 1);
        for (long r = 0; r <= p - 1; ++r) {
            FieldMatrix n = unipotent_on_symr(F, r) - FieldMatrix::identity(F, r + 1);
            // single Jordan block of size r+1, so rank r and cokernel dim 1
            REQUIRE(mat_rank(n) == r);
            Cokernel ck = mat_cokernel(n);
            REQUIRE(ck.dim == 1);
            REQUIRE((ck.projection * n).is_zero());
            REQUIRE(ck.projection * ck.reps == FieldMatrix::identity(F, 1));
        }
    }
}

TEST_CASE("solve: exact solutions and inconsistency") {
    Field F7 = FieldSpec::make(7, 1);
    std::vector<FieldElement> b{F7->from_int(3), F7->from_int(5)};
    auto x = mat_solve(FieldMatrix::identity(F7, 2), b);
    REQUIRE(x.has_value());
    REQUIRE(*x == b);

    FieldMatrix zero(F7, 2, 2);
    REQUIRE(!mat_solve(zero, b).has_value());
    REQUIRE_THROWS_AS(mat_solve(zero, std::vector<FieldElement>{F7->one()}),
                      std::invalid_argument);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(0, 6);
    for (int trial = 0; trial < 20; ++trial) {
        FieldMatrix m(F7, 4, 4);
        do {
            for (long i = 0; i < 4; ++i)
                for (long j = 0; j < 4; ++j) m.at(i, j) = F7->from_int(dist(rng));
        } while (mat_rank(m) < 4);
        std::vector<FieldElement> rhs;
        for (long i = 0; i < 4; ++i) rhs.push_back(F7->from_int(dist(rng)));
        auto sol = mat_solve(m, rhs);
        REQUIRE(sol.has_value());
        REQUIRE(m.apply(*sol) == rhs);
        REQUIRE(m * mat_inverse(m) == FieldMatrix::identity(F7, 4));
    }
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937_64 rng(99);
    for (long p : {2L, 5L}) {
        Field F = FieldSpec::make(p, 1);
        std::uniform_int_distribution<long> dist(0, p - 1);
        std::uniform_int_distribution<long> shape(1, 6);
        for (int trial = 0; trial < 30; ++trial) {
            long rows = shape(rng), cols = shape(rng);
            FieldMatrix m(F, rows, cols);
            for (long i = 0; i < rows; ++i)
                for (long j = 0; j < cols; ++j) m.at(i, j) = F->from_int(dist(rng));
            long rank = mat_rank(m);
            REQUIRE(rank + (long)mat_kernel(m).size() == cols);
            REQUIRE(mat_cokernel(m).dim == rows - rank);
        }
    }
}

TEST_CASE("subfield embeddings") {
    Field F3 = FieldSpec::make(3, 1);
    Field F9 = FieldSpec::make(3, 2);
    FieldEmbedding emb(F3, F9);
    for (long n = 0; n < 3; ++n) {
        FieldElement a = F3->from_index(n);
        FieldElement im = emb.apply(a);
        auto back = emb.preimage(im);
        REQUIRE(back.has_value());
        REQUIRE(*back == a);
    }
    // multiplicative
    REQUIRE(emb.apply(F3->from_int(2) * F3->from_int(2)) ==
            emb.apply(F3->from_int(2)) * emb.apply(F3->from_int(2)));
    // an element outside the prime subfield has no preimage
    REQUIRE(!emb.preimage(F9->gen()).has_value());

    Field F81 = FieldSpec::make(3, 4);
    FieldEmbedding big(F9, F81);
    FieldElement g = F9->gen();
    REQUIRE(big.apply(g * g + g) == big.apply(g) * big.apply(g) + big.apply(g));
    REQUIRE(big.preimage(big.apply(g)).value() == g);
}
