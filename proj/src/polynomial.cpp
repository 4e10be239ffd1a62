#include "blockmass/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace blockmass {

namespace {
const Rational kZero(0);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    trim();
}

Polynomial Polynomial::one()
{
    return Polynomial{1};
}

Polynomial Polynomial::monomial(std::size_t degree, Rational coeff)
{
    if (sgn(coeff) == 0) {
        return Polynomial();
    }
    std::vector<Rational> c(degree + 1, kZero);
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

const Rational& Polynomial::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rational& Polynomial::leading() const
{
    if (coeffs_.empty()) {
        throw std::domain_error("leading coefficient of zero polynomial");
    }
    return coeffs_.back();
}

bool Polynomial::is_integral() const
{
    for (const auto& c : coeffs_) {
        if (c.get_den() != 1) {
            return false;
        }
    }
    return true;
}

Rational Polynomial::evaluate(const Rational& x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), kZero);
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), kZero);
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs)
{
    if (lhs.is_zero() || rhs.is_zero()) {
        return Polynomial();
    }
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, kZero);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (sgn(lhs.coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& factor) const
{
    if (sgn(factor) == 0) {
        return Polynomial();
    }
    Polynomial r(*this);
    for (auto& c : r.coeffs_) {
        c *= factor;
    }
    return r;
}

Polynomial Polynomial::shifted(std::size_t k) const
{
    if (is_zero() || k == 0) {
        Polynomial r(*this);
        return r;
    }
    std::vector<Rational> out(coeffs_.size() + k, kZero);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i + k] = coeffs_[i];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned exp) const
{
    Polynomial result = one();
    Polynomial base(*this);
    while (exp != 0) {
        if (exp & 1u) {
            result = result * base;
        }
        exp >>= 1u;
        if (exp != 0) {
            base = base * base;
        }
    }
    return result;
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& divisor) const
{
    if (divisor.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    Polynomial rem(*this);
    if (degree() < divisor.degree()) {
        return {Polynomial(), rem};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - divisor.degree()) + 1, kZero);
    const Rational& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
        Rational factor = rem.leading() / lead;
        quot[shift] = factor;
        rem -= divisor.shifted(shift).scaled(factor);
    }
    return {Polynomial(std::move(quot)), std::move(rem)};
}

std::string Polynomial::to_string() const
{
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i != 0) {
            out << ", ";
        }
        if (coeffs_[i].get_den() == 1) {
            out << coeffs_[i].get_num().get_str();
        } else {
            out << rational_str(coeffs_[i]);
        }
    }
    out << "]";
    return out.str();
}

Int denominator_lcm(const Polynomial& p)
{
    Int l(1);
    for (const auto& c : p.coefficients()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return l;
}

Int integer_content(const Polynomial& p)
{
    Int g(0);
    for (const auto& c : p.coefficients()) {
        if (c.get_den() != 1) {
            throw std::invalid_argument("content of a non-integral polynomial");
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    }
    return g;
}

namespace {

// Integer-primitive form with positive leading coefficient.
Polynomial make_primitive(const Polynomial& p)
{
    if (p.is_zero()) {
        return p;
    }
    Polynomial q = p.scaled(Rational(denominator_lcm(p)));
    Int content = integer_content(q);
    if (sgn(q.leading()) < 0) {
        content = -content;
    }
    return q.scaled(make_rational(Int(1), content));
}

} // namespace

Polynomial poly_gcd(Polynomial a, Polynomial b)
{
    a = make_primitive(a);
    b = make_primitive(b);
    while (!b.is_zero()) {
        Polynomial r = a.divrem(b).second;
        a = std::move(b);
        b = make_primitive(r);
    }
    return a;
}

} // namespace blockmass
