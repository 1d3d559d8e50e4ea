#pragma once

// Exact arithmetic in GL_2(Q_p) restricted to matrices with entries in
// Z[1/p], the Iwasawa decomposition, and canonical coset representatives
// for G/ZK and U/K_U.
//
// A scalar is num * p^pexp with p not dividing num; this covers every group
// element showing up in the Hecke and Satake computations (Phi supports,
// torus elements, coset representatives).  The Iwasawa kappa-part is found
// inside SL_2(Z) via an extended gcd on the bottom row, which keeps all
// arithmetic in Z[1/p].

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "modp/ffield.hpp"

namespace modp {

using Int = boost::multiprecision::cpp_int;

inline Int int_pow(long base, long exp) {
    Int r = 1;
    for (long i = 0; i < exp; ++i) r *= base;
    return r;
}

// Extended gcd: returns (g, x, y) with a x + b y = g, g >= 0.
inline std::tuple<Int, Int, Int> ext_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

inline Int mod_inverse(const Int& a, const Int& m) {
    auto [g, x, y] = ext_gcd(((a % m) + m) % m, m);
    detail::require(g == 1, "element not invertible modulo m");
    return ((x % m) + m) % m;
}

// num * p^pexp with p coprime to num; zero is (0, 0).
class PScalar {
public:
    static constexpr long kInfVal = std::numeric_limits<long>::max() / 2;

    PScalar() : p_(0), num_(0), pexp_(0) {}
    PScalar(long p, Int num, long pexp = 0) : p_(p), num_(std::move(num)), pexp_(pexp) {
        normalize();
    }
    static PScalar zero(long p) { return PScalar(p, 0, 0); }
    static PScalar one(long p) { return PScalar(p, 1, 0); }
    static PScalar p_power(long p, long e) { return PScalar(p, 1, e); }

    long p() const { return p_; }
    const Int& num() const { return num_; }
    long pexp() const { return pexp_; }
    bool is_zero() const { return num_ == 0; }
    // p-adic valuation; kInfVal for zero
    long val() const { return is_zero() ? kInfVal : pexp_; }

    PScalar operator+(const PScalar& o) const {
        check(o);
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        long e = std::min(pexp_, o.pexp_);
        Int n = num_ * int_pow(p_, pexp_ - e) + o.num_ * int_pow(p_, o.pexp_ - e);
        return PScalar(p_, std::move(n), e);
    }
    PScalar operator-() const { return PScalar(p_, -num_, pexp_); }
    PScalar operator-(const PScalar& o) const { return *this + (-o); }
    PScalar operator*(const PScalar& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return zero(p_);
        return PScalar(p_, num_ * o.num_, pexp_ + o.pexp_);
    }
    bool operator==(const PScalar& o) const {
        return p_ == o.p_ && num_ == o.num_ && pexp_ == o.pexp_;
    }
    bool operator!=(const PScalar& o) const { return !(*this == o); }
    std::strong_ordering operator<=>(const PScalar& o) const {
        if (auto c = pexp_ <=> o.pexp_; c != 0) return c;
        return num_ < o.num_ ? std::strong_ordering::less
             : num_ > o.num_ ? std::strong_ordering::greater
                             : std::strong_ordering::equal;
    }

    // Inverse within Z[1/p]; requires num = +-1.
    PScalar inverse() const {
        detail::require(num_ == 1 || num_ == -1, "not invertible in Z[1/p]");
        return PScalar(p_, num_, -pexp_);
    }

    // The residue sum_{i < bound} c_i p^i of the digit expansion, i.e. the
    // class modulo p^bound Z_p represented by its finite principal part.
    PScalar residue_below(long bound) const {
        if (is_zero() || pexp_ >= bound) return zero(p_);
        Int m = int_pow(p_, bound - pexp_);
        Int n = ((num_ % m) + m) % m;
        return PScalar(p_, std::move(n), pexp_);
    }

    // Image in F_p of a p-adic unit (or of zero / positive-valuation values).
    long unit_residue_mod_p() const {
        if (is_zero() || pexp_ > 0) return 0;
        detail::require(pexp_ == 0, "not a p-adic integer");
        Int r = ((num_ % p_) + p_) % p_;
        return (long)r;
    }

    std::string str() const {
        std::ostringstream os;
        os << num_;
        if (pexp_ != 0) os << "*" << p_ << "^" << pexp_;
        return os.str();
    }

private:
    void check(const PScalar& o) const { detail::require(p_ == o.p_, "prime mismatch"); }
    void normalize() {
        detail::require(p_ >= 2, "scalar needs a prime context");
        if (num_ == 0) {
            pexp_ = 0;
            return;
        }
        while (num_ % p_ == 0) {
            num_ /= p_;
            ++pexp_;
        }
    }

    long p_;
    Int num_;
    long pexp_;
};

// Element of GL_2(Q_p) with Z[1/p] entries.
class GMatrix {
public:
    GMatrix() = default;
    GMatrix(PScalar a, PScalar b, PScalar c, PScalar d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        long p = a_.p();
        detail::require(b_.p() == p && c_.p() == p && d_.p() == p, "prime mismatch");
    }

    static GMatrix identity(long p) {
        return GMatrix(PScalar::one(p), PScalar::zero(p), PScalar::zero(p), PScalar::one(p));
    }
    static GMatrix diag(PScalar x, PScalar y) {
        long p = x.p();
        return GMatrix(std::move(x), PScalar::zero(p), PScalar::zero(p), std::move(y));
    }
    static GMatrix diag_int(long p, Int x, long xe, Int y, long ye) {
        return diag(PScalar(p, std::move(x), xe), PScalar(p, std::move(y), ye));
    }
    static GMatrix upper_unipotent(PScalar x) {
        long p = x.p();
        return GMatrix(PScalar::one(p), std::move(x), PScalar::zero(p), PScalar::one(p));
    }
    static GMatrix central(PScalar s) {
        PScalar t = s;
        return diag(std::move(s), std::move(t));
    }
    static GMatrix from_ints(long p, long a, long b, long c, long d) {
        return GMatrix(PScalar(p, a), PScalar(p, b), PScalar(p, c), PScalar(p, d));
    }

    long p() const { return a_.p(); }
    const PScalar& a() const { return a_; }
    const PScalar& b() const { return b_; }
    const PScalar& c() const { return c_; }
    const PScalar& d() const { return d_; }

    PScalar det() const { return a_ * d_ - b_ * c_; }

    GMatrix operator*(const GMatrix& o) const {
        return GMatrix(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                       c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
    }
    bool operator==(const GMatrix& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const GMatrix& o) const { return !(*this == o); }

    // Inverse within Z[1/p]-matrices; requires det = +-p^e.
    GMatrix inverse() const {
        PScalar dv = det().inverse();
        return GMatrix(d_ * dv, (-b_) * dv, (-c_) * dv, a_ * dv);
    }

    bool is_upper_triangular() const { return c_.is_zero(); }
    bool is_diagonal() const { return b_.is_zero() && c_.is_zero(); }

    long min_entry_val() const {
        return std::min(std::min(a_.val(), b_.val()), std::min(c_.val(), d_.val()));
    }

    // Membership in Z K = Q_p^* GL_2(Z_p): the determinant valuation must be
    // even, say 2s, and every entry must have valuation >= s.
    bool in_ZK() const {
        PScalar dt = det();
        if (dt.is_zero()) return false;
        if (dt.val() % 2 != 0) return false;
        return min_entry_val() >= dt.val() / 2;
    }
    // Central valuation s as above (precondition: in_ZK()).
    long central_val() const { return det().val() / 2; }

    bool in_GL2Zp() const {
        PScalar dt = det();
        return !dt.is_zero() && dt.val() == 0 && min_entry_val() >= 0;
    }

    std::string str() const {
        return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
    }

private:
    PScalar a_, b_, c_, d_;
};

// Canonical representative [[p^a, u],[0,1]] of a coset g ZK; u is reduced
// modulo p^a Z_p and bijects with the vertices of the Bruhat-Tits tree.
struct VertexCoset {
    long a = 0;
    PScalar u;  // residue_below(a)

    GMatrix rep() const {
        long p = u.p();
        return GMatrix(PScalar::p_power(p, a), u, PScalar::zero(p), PScalar::one(p));
    }
    bool operator==(const VertexCoset& o) const { return a == o.a && u == o.u; }
    auto operator<=>(const VertexCoset& o) const {
        if (auto c = a <=> o.a; c != 0) return c;
        return u <=> o.u;
    }
    // Distance from the root vertex in the (p+1)-regular tree, read off the
    // elementary divisors of the representative.
    long distance() const {
        long k2 = std::min({(long)0, a, u.val()});
        return a - 2 * k2;
    }
    std::string str() const { return "(" + std::to_string(a) + "," + u.str() + ")"; }
};

// Class of [[1,u],[0,1]] in U/K_U; u keeps only digits at negative p-powers.
struct UCoset {
    PScalar u;  // residue_below(0)

    GMatrix rep() const { return GMatrix::upper_unipotent(u); }
    bool operator==(const UCoset& o) const { return u == o.u; }
    long depth() const { return u.is_zero() ? 0 : -u.val(); }
};

// Iwasawa decomposition g = b * kappa with b upper triangular over Z[1/p]
// and kappa in SL_2(Z) (in particular in GL_2(Z_p)).
inline std::pair<GMatrix, GMatrix> iwasawa(const GMatrix& g) {
    detail::require(!g.det().is_zero(), "singular matrix");
    long p = g.p();
    if (g.c().is_zero()) return {g, GMatrix::identity(p)};
    const PScalar& c = g.c();
    const PScalar& d = g.d();
    // scale the bottom row to a primitive integer vector (c2, d2)
    long shift = std::max({(long)0, -c.val(), d.is_zero() ? 0 : -d.val()});
    Int c0 = c.num() * int_pow(p, c.val() + shift);
    Int d0 = d.is_zero() ? Int(0) : d.num() * int_pow(p, d.val() + shift);
    Int g0 = boost::multiprecision::gcd(c0 < 0 ? -c0 : c0, d0 < 0 ? -d0 : d0);
    Int c1 = c0 / g0, d1 = d0 / g0;
    while (c1 % p == 0 && d1 % p == 0) {
        c1 /= p;
        d1 /= p;
    }
    auto [one, x, y] = ext_gcd(d1, -c1);
    detail::require(one == 1, "primitive row reduction failed");
    // kappa = [[x, y],[c1, d1]] has determinant 1
    GMatrix kappa(PScalar(p, x), PScalar(p, y), PScalar(p, c1), PScalar(p, d1));
    GMatrix b = g * kappa.inverse();
    detail::require(b.is_upper_triangular(), "Iwasawa pivot failed");
    return {b, kappa};
}

// g = rep(v) * h with h in ZK; elements of the same right ZK-coset get equal v.
inline std::pair<VertexCoset, GMatrix> canonical_vertex(const GMatrix& g) {
    auto [b, kappa] = iwasawa(g);
    long p = g.p();
    const PScalar& t1 = b.a();
    const PScalar& t2 = b.d();
    detail::require(!t1.is_zero() && !t2.is_zero(), "singular triangular part");
    VertexCoset v;
    v.a = t1.val() - t2.val();
    // u = b12 / t2 reduced mod p^a, via a modular inverse of the unit part
    const PScalar& beta = b.b();
    if (beta.is_zero()) {
        v.u = PScalar::zero(p);
    } else {
        long e = beta.val() - t2.val();
        long window = v.a - e;
        if (window <= 0) {
            v.u = PScalar::zero(p);
        } else {
            Int m = int_pow(p, window);
            Int inv = mod_inverse(t2.num(), m);
            Int n = ((beta.num() % m) * inv) % m;
            n = ((n % m) + m) % m;
            v.u = PScalar(p, std::move(n), e).residue_below(v.a);
        }
    }
    GMatrix h = v.rep().inverse() * g;
    detail::require(h.in_ZK(), "canonical vertex reduction left ZK");
    return {v, h};
}

// All p^depth classes of U/K_U with valuation >= -depth.
inline std::vector<UCoset> enumerate_ucosets(long p, long depth) {
    detail::require(depth >= 0, "negative depth");
    Int q = int_pow(p, depth);
    std::vector<UCoset> out;
    for (Int n = 0; n < q; ++n)
        out.push_back(UCoset{PScalar(p, n, -depth).residue_below(0)});
    return out;
}

// Classes with valuation exactly -depth (the shell added at this depth).
inline std::vector<UCoset> ucoset_shell(long p, long depth) {
    if (depth == 0) return {UCoset{PScalar::zero(p)}};
    Int q = int_pow(p, depth);
    std::vector<UCoset> out;
    for (Int n = 1; n < q; ++n) {
        if (n % p == 0) continue;
        out.push_back(UCoset{PScalar(p, n, -depth).residue_below(0)});
    }
    return out;
}

}  // namespace modp
