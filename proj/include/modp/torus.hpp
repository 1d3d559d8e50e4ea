#pragma once

// Smooth characters of Q_p^* and of the diagonal torus T, the rank-one
// Hecke modules k[X^{+-1}] acting on ind_{ZK_T}^T(unit character), and the
// localization of a finite-dimensional module at a single operator.
//
// A smooth character of Q_p^* is mu_lambda omega^e:  p |-> lambda on the
// uniformizer and u |-> (u mod p)^e on units.  X encodes left translation
// by diag(p,1)^{-1}, so that T/ZK_T = Z.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "modp/ffield.hpp"
#include "modp/padic.hpp"

namespace modp {

// mu_lambda omega^e with lambda in k^* and e taken mod p-1.
class PadicCharacter {
public:
    PadicCharacter() = default;
    PadicCharacter(FieldElement lambda, long e) : lambda_(std::move(lambda)) {
        detail::require(!lambda_.is_zero(), "character value at p must be nonzero");
        long m = lambda_.field()->p() - 1;
        e_ = m == 0 ? 0 : ((e % m) + m) % m;
    }
    static PadicCharacter trivial(const Field& f) { return PadicCharacter(f->one(), 0); }
    static PadicCharacter omega(const Field& f, long e = 1) {
        return PadicCharacter(f->one(), e);
    }
    static PadicCharacter mu(FieldElement lambda, long e = 0) {
        return PadicCharacter(std::move(lambda), e);
    }

    const FieldElement& lambda() const { return lambda_; }
    long e() const { return e_; }
    const Field& field() const { return lambda_.field(); }

    FieldElement eval(const PScalar& x) const {
        detail::require(!x.is_zero(), "character of zero");
        const Field& F = field();
        FieldElement unit = F->from_int((x * PScalar::p_power(x.p(), -x.val()))
                                            .unit_residue_mod_p());
        return lambda_.pow(x.val()) * unit.pow(e_);
    }

    PadicCharacter operator*(const PadicCharacter& o) const {
        return PadicCharacter(lambda_ * o.lambda_, e_ + o.e_);
    }
    PadicCharacter inverse() const {
        long m = field()->p() - 1;
        return PadicCharacter(lambda_.inverse(), m == 0 ? 0 : m - e_);
    }
    bool operator==(const PadicCharacter& o) const {
        return lambda_ == o.lambda_ && e_ == o.e_;
    }
    bool operator!=(const PadicCharacter& o) const { return !(*this == o); }
    bool is_trivial() const { return e_ == 0 && lambda_ == field()->one(); }

    std::string str() const {
        std::ostringstream os;
        bool printed = false;
        if (!(lambda_ == field()->one())) {
            os << "mu_" << lambda_.str();
            printed = true;
        }
        if (e_ != 0) {
            if (printed) os << " ";
            os << "omega";
            if (e_ != 1) os << "^" << e_;
            printed = true;
        }
        if (!printed) os << "1";
        return os.str();
    }

private:
    FieldElement lambda_;
    long e_ = 0;
};

// chi1 (x) chi2 on the diagonal torus: diag(a,d) |-> chi1(a) chi2(d).
struct TorusCharacter {
    PadicCharacter chi1, chi2;

    TorusCharacter() = default;
    TorusCharacter(PadicCharacter c1, PadicCharacter c2)
        : chi1(std::move(c1)), chi2(std::move(c2)) {}

    FieldElement eval(const GMatrix& m) const {
        detail::require(m.is_diagonal(), "torus character needs a diagonal argument");
        return chi1.eval(m.a()) * chi2.eval(m.d());
    }
    TorusCharacter operator*(const TorusCharacter& o) const {
        return TorusCharacter(chi1 * o.chi1, chi2 * o.chi2);
    }
    // Twist by chi o det.
    TorusCharacter det_twist(const PadicCharacter& chi) const {
        return TorusCharacter(chi1 * chi, chi2 * chi);
    }
    bool operator==(const TorusCharacter& o) const {
        return chi1 == o.chi1 && chi2 == o.chi2;
    }
    bool operator!=(const TorusCharacter& o) const { return !(*this == o); }
    std::string str() const { return chi1.str() + " (x) " + chi2.str(); }
};

// Laurent polynomial in X over the coefficient field; X acts on
// ind_{ZK_T}^T(unit character) as left translation by diag(p,1)^{-1}.
class HeckeLaurent {
public:
    explicit HeckeLaurent(Field field) : field_(std::move(field)) {}
    static HeckeLaurent monomial(const Field& f, long n, FieldElement c) {
        HeckeLaurent h(f);
        h.set(n, std::move(c));
        return h;
    }
    static HeckeLaurent X(const Field& f, long n = 1) {
        return monomial(f, n, f->one());
    }
    static HeckeLaurent constant(const Field& f, FieldElement c) {
        return monomial(f, 0, std::move(c));
    }

    const Field& field() const { return field_; }
    const std::map<long, FieldElement>& coeffs() const { return coeffs_; }

    void set(long n, FieldElement c) {
        if (c.is_zero())
            coeffs_.erase(n);
        else
            coeffs_.insert_or_assign(n, std::move(c));
    }
    void add_to(long n, const FieldElement& c) {
        auto it = coeffs_.find(n);
        if (it == coeffs_.end()) {
            set(n, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    FieldElement coeff(long n) const {
        auto it = coeffs_.find(n);
        return it == coeffs_.end() ? field_->zero() : it->second;
    }
    bool is_zero() const { return coeffs_.empty(); }
    long lo() const { return coeffs_.begin()->first; }
    long hi() const { return coeffs_.rbegin()->first; }

    HeckeLaurent operator+(const HeckeLaurent& o) const {
        HeckeLaurent r = *this;
        for (const auto& [n, c] : o.coeffs_) r.add_to(n, c);
        return r;
    }
    HeckeLaurent operator-(const HeckeLaurent& o) const {
        HeckeLaurent r = *this;
        for (const auto& [n, c] : o.coeffs_) r.add_to(n, -c);
        return r;
    }
    HeckeLaurent operator*(const HeckeLaurent& o) const {
        HeckeLaurent r(field_);
        for (const auto& [n, c] : coeffs_)
            for (const auto& [m, d] : o.coeffs_) r.add_to(n + m, c * d);
        return r;
    }
    HeckeLaurent scaled_by(const FieldElement& c) const {
        HeckeLaurent r(field_);
        for (const auto& [n, a] : coeffs_) r.add_to(n, a * c);
        return r;
    }
    HeckeLaurent pow(long n) const {
        detail::require(n >= 0, "negative power of a Laurent operator");
        HeckeLaurent r = constant(field_, field_->one());
        for (long i = 0; i < n; ++i) r = r * *this;
        return r;
    }
    bool operator==(const HeckeLaurent& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const HeckeLaurent& o) const { return !(*this == o); }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [n, c] : coeffs_) {
            if (!first) os << " + ";
            os << c.str() << "*X^" << n;
            first = false;
        }
        return os.str();
    }

private:
    Field field_;
    std::map<long, FieldElement> coeffs_;
};

// Cokernel of (op - lambda) on ind_{ZK_T}^T of the character whose unit
// part has omega-exponents `units` and whose central character takes the
// value `central_at_p` on p.  Returns nullopt for a vanishing quotient.
// The quotient must be zero- or one-dimensional; a one-dimensional quotient
// is reassembled into a full torus character.
inline std::optional<TorusCharacter> ind_cokernel(const HeckeLaurent& op,
                                                  const FieldElement& lambda,
                                                  std::pair<long, long> units,
                                                  FieldElement central_at_p) {
    const Field& F = op.field();
    HeckeLaurent L = op - HeckeLaurent::constant(F, lambda);
    detail::require(!L.is_zero(), "operator equal to lambda: cokernel not finite");
    long span = L.hi() - L.lo();
    if (span == 0) return std::nullopt;  // unit times X^n has zero cokernel
    detail::require(span == 1, "cokernel is not a character (dimension > 1)");
    // k[X^{+-1}]/(c_lo X^lo + c_hi X^{lo+1}): X acts by xi = -c_lo/c_hi,
    // hence diag(p,1) (which acts by X^{-1}) acts by xi^{-1}.
    FieldElement xi = -(L.coeff(L.lo()) * L.coeff(L.hi()).inverse());
    FieldElement chi1_at_p = xi.inverse();
    FieldElement chi2_at_p = central_at_p * xi;
    return TorusCharacter(PadicCharacter(chi1_at_p, units.first),
                          PadicCharacter(chi2_at_p, units.second));
}

// Dimension of the localization colim(V -z-> V -z-> ...) of a
// finite-dimensional module at the operator z: the rank of the eventual
// image.  Zero exactly when z is nilpotent.
inline long localize_finite(const FieldMatrix& z) {
    detail::require(z.rows() == z.cols(), "localization needs a square matrix");
    if (z.rows() == 0) return 0;
    return mat_rank(z.pow(z.rows()));
}

}  // namespace modp
