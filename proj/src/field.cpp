#include "qsh/field.hpp"

namespace qsh {

Regime Regime::root_of_unity(int l) {
    if (l < 3 || l % 2 == 0)
        throw std::invalid_argument("Regime::root_of_unity: l must be odd and >= 3");
    return Regime(l);
}

int Regime::totient() const {
    if (is_generic()) throw std::logic_error("Regime::totient: generic regime");
    int n = ell_, result = ell_;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::string Regime::to_string() const {
    return is_generic() ? "generic" : "root_of_unity(" + std::to_string(ell_) + ")";
}

void FieldElem::check_same_regime(const FieldElem& o) const {
    if (regime_ != o.regime_)
        throw RegimeMismatchError("FieldElem: mixing scalars from regimes " + regime_.to_string() +
                                  " and " + o.regime_.to_string());
}

void FieldElem::canonicalize() {
    if (regime_.is_generic()) {
        if (den_.is_zero()) throw DivisionByZeroError("FieldElem: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(1L);
            return;
        }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly::div_exact(num_, g);
            den_ = Poly::div_exact(den_, g);
        }
        // unique form: denominator's lowest-degree coefficient is 1
        int ld = den_.low_degree();
        mpq_class low = den_.coeff(ld);
        if (low != 1) {
            mpq_class inv = 1 / low;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    } else {
        // reduce mod Phi_l; division happens in operator/ via inverse()
        Poly phi = Poly::cyclotomic(regime_.ell());
        if (num_.degree() >= phi.degree()) {
            Poly q, r;
            Poly::divmod(num_, phi, q, r);
            num_ = r;
        }
        den_ = Poly(1L);
    }
}

FieldElem FieldElem::qpow(const Regime& r, long k) {
    if (r.is_generic()) {
        if (k >= 0) return FieldElem(r, Poly::power_of_q(static_cast<int>(k)), Poly(1L));
        return FieldElem(r, Poly(1L), Poly::power_of_q(static_cast<int>(-k)));
    }
    long e = k % r.ell();
    if (e < 0) e += r.ell();  // q^l = 1 mod Phi_l
    FieldElem x(r, Poly::power_of_q(static_cast<int>(e)), Poly(1L));
    x.canonicalize();
    return x;
}

FieldElem FieldElem::fraction(const Regime& r, const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZeroError("FieldElem::fraction: zero denominator");
    if (r.is_generic()) {
        FieldElem x(r, num, den);
        x.canonicalize();
        return x;
    }
    FieldElem n(r, num, Poly(1L));
    n.canonicalize();
    FieldElem d(r, den, Poly(1L));
    d.canonicalize();
    return n / d;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_regime(o);
    FieldElem x(regime_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    x.canonicalize();
    return x;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator-() const { return FieldElem(regime_, -num_, den_); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_regime(o);
    FieldElem x(regime_, num_ * o.num_, den_ * o.den_);
    x.canonicalize();
    return x;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw DivisionByZeroError("FieldElem::inverse: zero scalar");
    if (regime_.is_generic()) {
        FieldElem x(regime_, den_, num_);
        x.canonicalize();
        return x;
    }
    // extended Euclid in Q[q] against the (irreducible) Phi_l
    Poly phi = Poly::cyclotomic(regime_.ell());
    Poly r0 = phi, r1 = num_;
    Poly t0, t1(1L);
    while (!r1.is_zero()) {
        Poly q, r;
        Poly::divmod(r0, r1, q, r);
        Poly t = t0 - q * t1;
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    // r0 = gcd = nonzero constant since Phi_l is irreducible and num != 0
    if (r0.degree() != 0)
        throw std::logic_error("FieldElem::inverse: Phi_l not coprime to payload");
    FieldElem x(regime_, t0.scaled(1 / r0.coeff(0)), Poly(1L));
    x.canonicalize();
    return x;
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    check_same_regime(o);
    if (o.is_zero()) throw DivisionByZeroError("FieldElem: division by zero");
    if (regime_.is_generic()) {
        FieldElem x(regime_, num_ * o.den_, den_ * o.num_);
        x.canonicalize();
        return x;
    }
    return *this * o.inverse();
}

std::string FieldElem::to_string() const {
    if (!regime_.is_generic()) return num_.to_string() + " mod Phi_" + std::to_string(regime_.ell());
    if (den_ == Poly(1L)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

FieldElem FieldElem::parse(const Regime& r, const std::string& s) {
    if (!r.is_generic()) {
        auto pos = s.find(" mod Phi_");
        std::string body = pos == std::string::npos ? s : s.substr(0, pos);
        FieldElem x(r, Poly::parse(body), Poly(1L));
        x.canonicalize();
        return x;
    }
    auto slash = s.find(")/(");
    if (slash == std::string::npos) {
        FieldElem x(r, Poly::parse(s), Poly(1L));
        x.canonicalize();
        return x;
    }
    std::string ns = s.substr(1, slash - 1);
    std::string ds = s.substr(slash + 3);
    if (ds.empty() || ds.back() != ')')
        throw std::invalid_argument("FieldElem::parse: malformed fraction");
    ds.pop_back();
    return fraction(r, Poly::parse(ns), Poly::parse(ds));
}

}  // namespace qsh
