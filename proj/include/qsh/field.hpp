#pragma once

#include <stdexcept>
#include <string>

#include "qsh/poly.hpp"

namespace qsh {

/// Raised when two scalars from different regimes meet (configuration error).
struct RegimeMismatchError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Raised on division by zero (caller bug).
struct DivisionByZeroError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Scalar regime: generic q, or q a primitive l-th root of unity (odd l >= 3).
class Regime {
public:
    static Regime generic() { return Regime(0); }
    static Regime root_of_unity(int l);

    bool is_generic() const { return ell_ == 0; }
    int ell() const { return ell_; }
    /// deg Phi_l (Euler totient), only meaningful at a root of unity.
    int totient() const;

    bool operator==(const Regime& o) const { return ell_ == o.ell_; }
    bool operator!=(const Regime& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    explicit Regime(int ell) : ell_(ell) {}
    int ell_;  // 0 = generic
};

/// Exact scalar: an element of Q(q) (generic regime, stored as a reduced
/// fraction with denominator normalized so its lowest-degree coefficient is 1)
/// or of Q[q]/Phi_l (root-of-unity regime, stored reduced mod Phi_l).
///
/// Values are immutable after construction and canonical, so structural
/// equality coincides with mathematical equality.
class FieldElem {
public:
    FieldElem() : regime_(Regime::generic()), num_(), den_(1) {}

    static FieldElem zero(const Regime& r) { return FieldElem(r, Poly(), Poly(1L)); }
    static FieldElem one(const Regime& r) { return FieldElem(r, Poly(1L), Poly(1L)); }
    static FieldElem from_integer(const Regime& r, long n) { return FieldElem(r, Poly(n), Poly(1L)); }
    static FieldElem from_rational(const Regime& r, const mpq_class& x) {
        return FieldElem(r, Poly(x), Poly(1L));
    }
    /// q^k (any sign of k); reduced mod Phi_l at a root of unity.
    static FieldElem qpow(const Regime& r, long k);
    /// num/den as given; canonicalized. den must be nonzero.
    static FieldElem fraction(const Regime& r, const Poly& num, const Poly& den);

    const Regime& regime() const { return regime_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == Poly(1L) && num_ == Poly(1L); }

    bool operator==(const FieldElem& o) const {
        return regime_ == o.regime_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem inverse() const;

    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    /// "(1+q^2)/(1-q^3)" in the generic regime, "-1-q mod Phi_3" at a root of unity.
    std::string to_string() const;
    /// Parses the to_string format relative to the given regime.
    static FieldElem parse(const Regime& r, const std::string& s);

private:
    FieldElem(Regime r, Poly num, Poly den)
        : regime_(r), num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();
    void check_same_regime(const FieldElem& o) const;

    Regime regime_;
    Poly num_;
    Poly den_;  // always 1 at a root of unity
};

}  // namespace qsh
