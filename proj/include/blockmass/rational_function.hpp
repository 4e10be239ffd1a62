#pragma once

#include "blockmass/polynomial.hpp"
#include "blockmass/rational.hpp"

#include <string>
#include <vector>

namespace blockmass {

/// Exact quotient of polynomials in t, kept in a canonical form that makes
/// equality a structural comparison: numerator and denominator have integer
/// coefficients, their contents share no factor, they are coprime in Q[t],
/// and the lowest nonzero denominator coefficient is positive.
///
/// Values expandable as power series at 0 additionally have den(0) != 0;
/// that is checked where the expansion is actually requested, so that
/// intermediates of field arithmetic (pivots in a linear solve, say) may
/// pass through states like 1/t.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::one()) {}
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction from_polynomial(Polynomial p);
    static RationalFunction constant(const Rational& value);
    // t^exp as a rational function; negative exponents give 1/t^{-exp}.
    static RationalFunction monomial_power(int exp);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool expandable_at_zero() const { return sgn(den_.coeff(0)) != 0; }

    // Exact value at x. Throws std::domain_error on a pole.
    Rational evaluate(const Rational& x) const;

    // Taylor coefficients at 0 through t^order (order+1 values), by the
    // division recurrence. Throws std::domain_error when den(0) == 0.
    std::vector<Rational> series_coefficients(std::size_t order) const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

    RationalFunction pow(int exp) const;

    std::string to_string() const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

} // namespace blockmass
