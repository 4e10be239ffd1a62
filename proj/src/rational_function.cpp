#include "blockmass/rational_function.hpp"

#include <stdexcept>
#include <utility>

namespace blockmass {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
    normalize();
}

RationalFunction RationalFunction::from_polynomial(Polynomial p)
{
    return RationalFunction(std::move(p), Polynomial::one());
}

RationalFunction RationalFunction::constant(const Rational& value)
{
    return RationalFunction(Polynomial({value}), Polynomial::one());
}

RationalFunction RationalFunction::monomial_power(int exp)
{
    if (exp >= 0) {
        return RationalFunction(Polynomial::monomial(static_cast<std::size_t>(exp)),
                                Polynomial::one());
    }
    return RationalFunction(Polynomial::one(),
                            Polynomial::monomial(static_cast<std::size_t>(-exp)));
}

void RationalFunction::normalize()
{
    if (num_.is_zero()) {
        den_ = Polynomial::one();
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    // Same factor on both sides throughout, so the value never changes.
    Int scale;
    mpz_lcm(scale.get_mpz_t(), denominator_lcm(num_).get_mpz_t(),
            denominator_lcm(den_).get_mpz_t());
    num_ = num_.scaled(Rational(scale));
    den_ = den_.scaled(Rational(scale));
    Int content;
    mpz_gcd(content.get_mpz_t(), integer_content(num_).get_mpz_t(),
            integer_content(den_).get_mpz_t());
    std::size_t low = 0;
    while (sgn(den_.coeff(low)) == 0) {
        ++low;
    }
    if (sgn(den_.coeff(low)) < 0) {
        content = -content;
    }
    const Rational inv = make_rational(Int(1), content);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
}

Rational RationalFunction::evaluate(const Rational& x) const
{
    Rational d = den_.evaluate(x);
    if (sgn(d) == 0) {
        throw std::domain_error("rational function pole at " + rational_str(x));
    }
    return num_.evaluate(x) / d;
}

std::vector<Rational> RationalFunction::series_coefficients(std::size_t order) const
{
    if (!expandable_at_zero()) {
        throw std::domain_error("series expansion at a pole of the denominator");
    }
    const Rational& d0 = den_.coeff(0);
    std::vector<Rational> out(order + 1, Rational(0));
    const std::size_t dlen = den_.size();
    for (std::size_t j = 0; j <= order; ++j) {
        Rational acc = num_.coeff(j);
        const std::size_t imax = std::min(j, dlen - 1);
        for (std::size_t i = 1; i <= imax; ++i) {
            acc -= den_.coeff(i) * out[j - i];
        }
        out[j] = acc / d0;
    }
    return out;
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
{
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
{
    if (b.is_zero()) {
        throw std::domain_error("rational function division by zero");
    }
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(int exp) const
{
    if (exp < 0) {
        if (is_zero()) {
            throw std::domain_error("negative power of the zero function");
        }
        return RationalFunction(den_.pow(static_cast<unsigned>(-exp)),
                                num_.pow(static_cast<unsigned>(-exp)));
    }
    return RationalFunction(num_.pow(static_cast<unsigned>(exp)),
                            den_.pow(static_cast<unsigned>(exp)));
}

std::string RationalFunction::to_string() const
{
    return num_.to_string() + " / " + den_.to_string();
}

} // namespace blockmass
