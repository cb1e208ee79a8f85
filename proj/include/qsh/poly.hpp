#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qsh {

/// Dense univariate polynomial over Q in the variable q.
///
/// Coefficients are exact rationals; coeffs_[i] is the coefficient of q^i.
/// The representation is normalized: no trailing zero coefficients, the zero
/// polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(const mpq_class& constant);
    explicit Poly(long constant);
    explicit Poly(std::vector<mpq_class> coeffs);

    /// q^k for k >= 0.
    static Poly power_of_q(int k);
    /// The l-th cyclotomic polynomial Phi_l.
    static Poly cyclotomic(int l);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Exponent of the lowest-degree nonzero term; -1 for the zero polynomial.
    int low_degree() const;
    const mpq_class& coeff(int i) const;
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;

    /// Quotient and remainder with deg(rem) < deg(divisor). Divisor must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
    /// Exact division; throws std::logic_error if the remainder is nonzero.
    static Poly div_exact(const Poly& a, const Poly& b);
    /// Monic gcd (Euclid); gcd(0,0) = 0.
    static Poly gcd(const Poly& a, const Poly& b);

    /// Multiply by a rational scalar.
    Poly scaled(const mpq_class& s) const;
    /// Divide all coefficients so the lowest-degree term becomes 1 (nonzero input).
    Poly normalized_by_low_term() const;

    /// Renders like "1-q^2+3/2*q^5" (ascending powers); "0" for zero.
    std::string to_string() const;
    /// Parses the to_string format back; throws std::invalid_argument on junk.
    static Poly parse(const std::string& s);

private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

}  // namespace qsh
