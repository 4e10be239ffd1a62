#pragma once

#include "blockmass/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace blockmass {

/// Dense univariate polynomial in t over the rationals, coefficient index =
/// degree. The zero polynomial is the empty coefficient sequence; trailing
/// zero coefficients are always trimmed.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial one();
    static Polynomial monomial(std::size_t degree, Rational coeff = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    // Zero beyond the stored degree.
    const Rational& coeff(std::size_t i) const;
    const Rational& leading() const;
    bool is_integral() const;

    Rational evaluate(const Rational& x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) = default;

    Polynomial scaled(const Rational& factor) const;
    // Multiply by t^k.
    Polynomial shifted(std::size_t k) const;
    Polynomial pow(unsigned exp) const;

    // Field division over Q: this = q*divisor + r with deg r < deg divisor.
    // Throws std::domain_error on division by the zero polynomial.
    std::pair<Polynomial, Polynomial> divrem(const Polynomial& divisor) const;

    // "[c0, c1, ...]" with integer entries printed bare and non-integers as
    // num/den. Meant for witnesses and debug output.
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

// Primitive integer-coefficient gcd with positive leading coefficient;
// gcd(0, 0) = 0. Works over Q internally, with contents cleared every step
// to keep coefficient growth in check.
Polynomial poly_gcd(Polynomial a, Polynomial b);

// Largest factor of the form (lcm of coefficient denominators): multiplying
// by it makes the polynomial integral.
Int denominator_lcm(const Polynomial& p);

// gcd of the (integer) coefficients; requires an integral polynomial.
Int integer_content(const Polynomial& p);

} // namespace blockmass
