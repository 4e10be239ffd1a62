#include "blockmass/rational.hpp"

#include <stdexcept>

namespace blockmass {

Rational make_rational(Int num, Int den)
{
    if (sgn(den) == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

Int int_pow(const Int& base, unsigned long exp)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational rational_pow(const Rational& base, long exp)
{
    if (exp >= 0) {
        Rational r;
        mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()),
                   static_cast<unsigned long>(exp));
        mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()),
                   static_cast<unsigned long>(exp));
        return r; // base reduced with den > 0, so powers are reduced too
    }
    if (sgn(base) == 0) {
        throw std::domain_error("negative power of zero");
    }
    Rational inv;
    mpq_inv(inv.get_mpq_t(), base.get_mpq_t());
    return rational_pow(inv, -exp);
}

std::string rational_str(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Int(std::string(text)));
        }
        Int num(std::string(text.substr(0, slash)));
        Int den(std::string(text.substr(slash + 1)));
        return make_rational(std::move(num), std::move(den));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: " + std::string(text));
    }
}

Int floor_scaled(const Rational& q, unsigned fbits)
{
    Int shifted;
    mpz_mul_2exp(shifted.get_mpz_t(), mpq_numref(q.get_mpq_t()), fbits);
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), shifted.get_mpz_t(), mpq_denref(q.get_mpq_t()));
    return out;
}

Int ceil_scaled(const Rational& q, unsigned fbits)
{
    Int shifted;
    mpz_mul_2exp(shifted.get_mpz_t(), mpq_numref(q.get_mpq_t()), fbits);
    Int out;
    mpz_cdiv_q(out.get_mpz_t(), shifted.get_mpz_t(), mpq_denref(q.get_mpq_t()));
    return out;
}

} // namespace blockmass
