#pragma once

// Exact arithmetic over F_p and F_{p^k}, plus dense exact linear algebra
// (rank, kernel, cokernel, solve) over such fields.
//
// An extension field is F_p[x]/(f) for the lexicographically smallest monic
// irreducible f of the requested degree, so encodings are reproducible
// across runs.  Elements are coefficient vectors in [0, p), lowest degree
// first.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace modp {

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long mod_pow(long base, long exp, long m) {
    long r = 1 % m;
    base %= m;
    if (base < 0) base += m;
    while (exp > 0) {
        if (exp & 1) r = (r * base) % m;
        base = (base * base) % m;
        exp >>= 1;
    }
    return r;
}

}  // namespace detail

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(Field field, std::vector<long> coeffs)
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

    const Field& field() const { return field_; }
    const std::vector<long>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (long c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    // Defined below, after FieldSpec.
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    FieldElement inverse() const;
    FieldElement pow(long n) const;
    std::string str() const;

private:
    Field field_;
    std::vector<long> coeffs_;
};

// F_{p^k} with a fixed monic irreducible modulus of degree k over F_p.
// The prime field uses the degenerate modulus x.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
public:
    static Field make(long p, long k = 1);

    long p() const { return p_; }
    long degree() const { return k_; }
    long order() const {
        long q = 1;
        for (long i = 0; i < k_; ++i) q *= p_;
        return q;
    }
    // Modulus coefficients c_0..c_k (monic, c_k = 1).
    const std::vector<long>& modulus() const { return modulus_; }

    FieldElement zero() const { return element(std::vector<long>(k_, 0)); }
    FieldElement one() const { return from_int(1); }
    FieldElement from_int(long n) const {
        std::vector<long> c(k_, 0);
        c[0] = ((n % p_) + p_) % p_;
        return element(std::move(c));
    }
    // The class of x, a root of the modulus (for k >= 2).
    FieldElement gen() const {
        std::vector<long> c(k_, 0);
        if (k_ >= 2) c[1] = 1;
        return element(std::move(c));
    }
    FieldElement element(std::vector<long> coeffs) const {
        detail::require((long)coeffs.size() == k_, "coefficient count != degree");
        for (long& c : coeffs) c = ((c % p_) + p_) % p_;
        return FieldElement(shared_from_this(), std::move(coeffs));
    }
    // Element with index n in [0, p^k), base-p digits = coefficients.
    FieldElement from_index(long n) const {
        std::vector<long> c(k_, 0);
        for (long i = 0; i < k_; ++i) {
            c[i] = n % p_;
            n /= p_;
        }
        return element(std::move(c));
    }
    long index_of(const FieldElement& a) const {
        long n = 0;
        for (long i = k_ - 1; i >= 0; --i) n = n * p_ + a.coeffs()[i];
        return n;
    }

    // Polynomial arithmetic on coefficient vectors mod (p, modulus).
    std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) const;
    std::vector<long> poly_add(const std::vector<long>& a, const std::vector<long>& b) const;
    std::vector<long> frobenius(const std::vector<long>& a) const;  // a^p

private:
    FieldSpec(long p, long k, std::vector<long> modulus)
        : p_(p), k_(k), modulus_(std::move(modulus)) {}

    static bool irreducible(long p, const std::vector<long>& f);

    long p_;
    long k_;
    std::vector<long> modulus_;
};

inline std::vector<long> FieldSpec::poly_add(const std::vector<long>& a,
                                             const std::vector<long>& b) const {
    std::vector<long> r(k_, 0);
    for (long i = 0; i < k_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
}

inline std::vector<long> FieldSpec::poly_mul(const std::vector<long>& a,
                                             const std::vector<long>& b) const {
    std::vector<long> prod(2 * k_ - 1, 0);
    for (long i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    }
    // reduce by the monic modulus
    for (long d = 2 * k_ - 2; d >= k_; --d) {
        long c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (long i = 0; i < k_; ++i) {
            long idx = d - k_ + i;
            prod[idx] = ((prod[idx] - c * modulus_[i]) % p_ + p_) % p_;
        }
    }
    prod.resize(k_);
    return prod;
}

inline std::vector<long> FieldSpec::frobenius(const std::vector<long>& a) const {
    std::vector<long> r(k_, 0);
    r[0] = 1;
    std::vector<long> base = a;
    long e = p_;
    while (e > 0) {
        if (e & 1) r = poly_mul(r, base);
        base = poly_mul(base, base);
        e >>= 1;
    }
    return r;
}

inline bool FieldSpec::irreducible(long p, const std::vector<long>& f) {
    long k = (long)f.size() - 1;
    if (k <= 1) return true;
    if (k <= 3) {
        // degree 2 or 3: irreducible iff no root in F_p
        for (long x = 0; x < p; ++x) {
            long v = 0;
            for (long i = k; i >= 0; --i) v = (v * x + f[i]) % p;
            if (v == 0) return false;
        }
        return true;
    }
    // gcd-with-Frobenius test: f irreducible over F_p iff x^{p^k} = x mod f
    // and gcd(x^{p^{k/q}} - x, f) is constant for every prime q | k.
    FieldSpec tmp(p, k, f);
    auto x_poly = [&] {
        std::vector<long> x(k, 0);
        x[1] = 1;
        return x;
    };
    auto frob_iter = [&](long times) {
        std::vector<long> r = x_poly();
        for (long i = 0; i < times; ++i) r = tmp.frobenius(r);
        return r;
    };
    auto poly_gcd_is_const = [&](std::vector<long> a) {
        // gcd(a, f) over F_p[x]; returns true iff it has degree 0
        std::vector<long> b(f.begin(), f.end());
        auto deg = [](const std::vector<long>& v) {
            for (long i = (long)v.size() - 1; i >= 0; --i)
                if (v[i] != 0) return i;
            return (long)-1;
        };
        while (deg(a) >= 0) {
            long da = deg(a), db = deg(b);
            if (da < db) std::swap(a, b);
            da = deg(a), db = deg(b);
            if (db < 0) break;
            long inv = detail::mod_pow(b[db], p - 2, p);
            long c = (a[da] * inv) % p;
            for (long i = 0; i <= db; ++i)
                a[da - db + i] = ((a[da - db + i] - c * b[i]) % p + p) % p;
        }
        long db = deg(b);
        long da = deg(a);
        return (da < 0 && db == 0) || (db < 0 && da == 0);
    };
    std::vector<long> xq = frob_iter(k);
    if (xq != x_poly()) return false;
    for (long q = 2; q <= k; ++q) {
        if (k % q != 0 || !detail::is_prime(q)) continue;
        std::vector<long> h = frob_iter(k / q);
        // h - x
        h[1] = ((h[1] - 1) % p + p) % p;
        if (!poly_gcd_is_const(h)) return false;
    }
    return true;
}

inline Field FieldSpec::make(long p, long k) {
    detail::require(detail::is_prime(p), "p must be prime");
    detail::require(k >= 1, "extension degree must be >= 1");
    std::vector<long> f(k + 1, 0);
    f[k] = 1;
    if (k == 1) {
        // prime field: degenerate modulus x
    } else {
        long q = 1;
        for (long i = 0; i < k; ++i) q *= p;
        long n = 0;
        for (; n < q; ++n) {
            long m = n;
            for (long i = 0; i < k; ++i) {
                f[i] = m % p;
                m /= p;
            }
            if (irreducible(p, f)) break;
        }
        detail::require(n < q, "no irreducible modulus found");
    }
    return Field(new FieldSpec(p, k, std::move(f)));
}

inline void check_same_field(const FieldElement& a, const FieldElement& b) {
    detail::require(a.field() && b.field() && a.field()->p() == b.field()->p() &&
                        a.field()->degree() == b.field()->degree(),
                    "field mismatch");
}

inline FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(*this, o);
    return FieldElement(field_, field_->poly_add(coeffs_, o.coeffs_));
}

inline FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(*this, o);
    std::vector<long> r(coeffs_.size());
    long p = field_->p();
    for (size_t i = 0; i < r.size(); ++i) r[i] = ((coeffs_[i] - o.coeffs_[i]) % p + p) % p;
    return FieldElement(field_, std::move(r));
}

inline FieldElement FieldElement::operator-() const { return field_->zero() - *this; }

inline FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(*this, o);
    return FieldElement(field_, field_->poly_mul(coeffs_, o.coeffs_));
}

inline bool FieldElement::operator==(const FieldElement& o) const {
    check_same_field(*this, o);
    return coeffs_ == o.coeffs_;
}

inline FieldElement FieldElement::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    FieldElement r = field_->one();
    FieldElement base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

inline FieldElement FieldElement::inverse() const {
    detail::require(!is_zero(), "inverse of zero");
    // a^{q-2} = a^{-1} in F_q
    return pow(field_->order() - 2);
}

inline std::string FieldElement::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i];
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Dense matrices
// ---------------------------------------------------------------------------

class FieldMatrix {
public:
    FieldMatrix() : rows_(0), cols_(0) {}
    FieldMatrix(Field field, long rows, long cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          entries_(rows * cols, field_->zero()) {}

    static FieldMatrix identity(const Field& f, long n) {
        FieldMatrix m(f, n, n);
        for (long i = 0; i < n; ++i) m.at(i, i) = f->one();
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const Field& field() const { return field_; }

    FieldElement& at(long i, long j) { return entries_[i * cols_ + j]; }
    const FieldElement& at(long i, long j) const { return entries_[i * cols_ + j]; }

    bool operator==(const FieldMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (size_t i = 0; i < entries_.size(); ++i)
            if (!(entries_[i] == o.entries_[i])) return false;
        return true;
    }
    bool operator!=(const FieldMatrix& o) const { return !(*this == o); }

    FieldMatrix operator+(const FieldMatrix& o) const {
        detail::require(rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch");
        FieldMatrix r = *this;
        for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
        return r;
    }
    FieldMatrix operator-(const FieldMatrix& o) const {
        detail::require(rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch");
        FieldMatrix r = *this;
        for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
        return r;
    }
    FieldMatrix operator*(const FieldMatrix& o) const {
        detail::require(cols_ == o.rows_, "inner dimension mismatch");
        FieldMatrix r(field_, rows_, o.cols_);
        for (long i = 0; i < rows_; ++i)
            for (long k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (long j = 0; j < o.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        return r;
    }
    FieldMatrix scaled(const FieldElement& c) const {
        FieldMatrix r = *this;
        for (auto& e : r.entries_) e = e * c;
        return r;
    }
    std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const {
        detail::require((long)v.size() == cols_, "vector length mismatch");
        std::vector<FieldElement> r(rows_, field_->zero());
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }
    FieldMatrix transpose() const {
        FieldMatrix r(field_, cols_, rows_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }
    FieldMatrix pow(long n) const {
        detail::require(rows_ == cols_, "pow of non-square matrix");
        detail::require(n >= 0, "negative matrix power");
        FieldMatrix r = identity(field_, rows_);
        FieldMatrix base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }
    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    // Row echelon form in place; returns pivot columns.
    std::vector<long> rref() {
        std::vector<long> pivots;
        long r = 0;
        for (long c = 0; c < cols_ && r < rows_; ++c) {
            long pr = -1;
            for (long i = r; i < rows_; ++i)
                if (!at(i, c).is_zero()) {
                    pr = i;
                    break;
                }
            if (pr < 0) continue;
            if (pr != r)
                for (long j = 0; j < cols_; ++j) std::swap(at(pr, j), at(r, j));
            FieldElement inv = at(r, c).inverse();
            for (long j = 0; j < cols_; ++j) at(r, j) = at(r, j) * inv;
            for (long i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                FieldElement f = at(i, c);
                for (long j = 0; j < cols_; ++j) at(i, j) = at(i, j) - f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

private:
    Field field_;
    long rows_, cols_;
    std::vector<FieldElement> entries_;
};

inline long mat_rank(const FieldMatrix& m) {
    FieldMatrix c = m;
    return (long)c.rref().size();
}

// Basis of the null space; columns of the result span ker(m).
inline std::vector<std::vector<FieldElement>> mat_kernel(const FieldMatrix& m) {
    FieldMatrix r = m;
    std::vector<long> pivots = r.rref();
    std::vector<bool> is_pivot(m.cols(), false);
    for (long c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    const Field& f = m.field();
    for (long c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<FieldElement> v(m.cols(), f->zero());
        v[c] = f->one();
        for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -r.at((long)pi, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Particular solution of m x = b, or nullopt when inconsistent.
inline std::optional<std::vector<FieldElement>> mat_solve(const FieldMatrix& m,
                                                          const std::vector<FieldElement>& b) {
    detail::require((long)b.size() == m.rows(), "rhs length mismatch");
    const Field& f = m.field();
    FieldMatrix aug(f, m.rows(), m.cols() + 1);
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<long> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<FieldElement> x(m.cols(), f->zero());
    for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at((long)pi, m.cols());
    return x;
}

inline FieldMatrix mat_inverse(const FieldMatrix& m) {
    detail::require(m.rows() == m.cols(), "inverse of non-square matrix");
    const Field& f = m.field();
    long n = m.rows();
    FieldMatrix aug(f, n, 2 * n);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = f->one();
    }
    std::vector<long> pivots = aug.rref();
    detail::require((long)pivots.size() == n && pivots[n - 1] == n - 1, "matrix is singular");
    FieldMatrix inv(f, n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

// Cokernel of m: a complement of the column space inside the row-index space,
// with the projection onto coordinates in that complement and representative
// vectors (projection * reps = identity, projection * m = 0).
struct Cokernel {
    long dim = 0;
    FieldMatrix projection;  // dim x rows
    FieldMatrix reps;        // rows x dim, standard-basis representatives
};

inline Cokernel mat_cokernel(const FieldMatrix& m) {
    const Field& f = m.field();
    FieldMatrix t = m.transpose();  // rows of t span the column space of m
    std::vector<long> pivots = t.rref();
    std::vector<bool> is_pivot(m.rows(), false);
    for (long c : pivots) is_pivot[c] = true;
    Cokernel ck;
    ck.dim = m.rows() - (long)pivots.size();
    ck.projection = FieldMatrix(f, ck.dim, m.rows());
    ck.reps = FieldMatrix(f, m.rows(), ck.dim);
    long out = 0;
    for (long c = 0; c < m.rows(); ++c) {
        if (is_pivot[c]) continue;
        // reduce e_c modulo the column space: subtract pivot-row combinations
        ck.projection.at(out, c) = f->one();
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            ck.projection.at(out, pivots[pi]) = -t.at((long)pi, c);
        ck.reps.at(c, out) = f->one();
        ++out;
    }
    return ck;
}

// ---------------------------------------------------------------------------
// Embeddings F_{p^k} -> F_{p^K} for k | K
// ---------------------------------------------------------------------------

// Maps the generator of the small field to the smallest root of the small
// modulus inside the big field, extended multiplicatively.  Deterministic,
// so serialized values are stable across runs.
class FieldEmbedding {
public:
    FieldEmbedding(Field from, Field to) : from_(std::move(from)), to_(std::move(to)) {
        detail::require(from_->p() == to_->p(), "different characteristic");
        detail::require(to_->degree() % from_->degree() == 0,
                        "degree of target must be a multiple of source degree");
        if (from_->degree() == 1) {
            gen_image_ = to_->one();
            return;
        }
        const auto& f = from_->modulus();
        long q = to_->order();
        for (long n = 0; n < q; ++n) {
            FieldElement x = to_->from_index(n);
            FieldElement v = to_->zero();
            for (long i = (long)f.size() - 1; i >= 0; --i)
                v = v * x + to_->from_int(f[i]);
            if (v.is_zero()) {
                gen_image_ = x;
                return;
            }
        }
        throw std::runtime_error("modulus has no root in target field");
    }

    const Field& from() const { return from_; }
    const Field& to() const { return to_; }

    FieldElement apply(const FieldElement& a) const {
        FieldElement r = to_->zero();
        FieldElement xp = to_->one();
        for (long i = 0; i < from_->degree(); ++i) {
            r = r + xp * to_->from_int(a.coeffs()[i]);
            xp = xp * gen_image_;
        }
        return r;
    }

    // Inverse on the image; nullopt when the element is not in the subfield.
    std::optional<FieldElement> preimage(const FieldElement& b) const {
        long p = from_->p();
        long k = from_->degree(), K = to_->degree();
        FieldMatrix em(to_, K, k);
        FieldElement xp = to_->one();
        for (long j = 0; j < k; ++j) {
            for (long i = 0; i < K; ++i) em.at(i, j) = to_->from_int(xp.coeffs()[i]);
            xp = xp * gen_image_;
        }
        std::vector<FieldElement> rhs;
        rhs.reserve(K);
        for (long i = 0; i < K; ++i) rhs.push_back(to_->from_int(b.coeffs()[i]));
        auto sol = mat_solve(em, rhs);
        if (!sol) return std::nullopt;
        std::vector<long> c(k);
        for (long j = 0; j < k; ++j) c[j] = sol->at(j).coeffs()[0] % p;
        return from_->element(std::move(c));
    }

private:
    Field from_, to_;
    FieldElement gen_image_;
};

}  // namespace modp
