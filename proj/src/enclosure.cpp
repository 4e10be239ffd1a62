#include "blockmass/enclosure.hpp"

#include <stdexcept>
#include <utility>

namespace blockmass {

Enclosure::Enclosure(Int lower_scaled, Int upper_scaled, unsigned fbits)
    : lo_(std::move(lower_scaled)), hi_(std::move(upper_scaled)), fbits_(fbits)
{
    if (lo_ > hi_) {
        throw std::invalid_argument("enclosure with lower > upper");
    }
}

Enclosure Enclosure::exact_zero(unsigned fbits)
{
    return Enclosure(Int(0), Int(0), fbits);
}

Enclosure Enclosure::of_rational(const Rational& q, unsigned fbits)
{
    return Enclosure(floor_scaled(q, fbits), ceil_scaled(q, fbits), fbits);
}

Rational Enclosure::lower() const
{
    return make_rational(lo_, Int(1) << fbits_);
}

Rational Enclosure::upper() const
{
    return make_rational(hi_, Int(1) << fbits_);
}

Rational Enclosure::width() const
{
    return make_rational(hi_ - lo_, Int(1) << fbits_);
}

bool Enclosure::contains(const Rational& q) const
{
    return lower() <= q && q <= upper();
}

Enclosure operator+(const Enclosure& a, const Enclosure& b)
{
    if (a.fbits_ != b.fbits_) {
        throw std::invalid_argument("adding enclosures with different precisions");
    }
    return Enclosure(a.lo_ + b.lo_, a.hi_ + b.hi_, a.fbits_);
}

Enclosure Enclosure::scaled_by(const Int& factor) const
{
    if (sgn(factor) < 0) {
        throw std::invalid_argument("enclosure scaling by a negative factor");
    }
    return Enclosure(lo_ * factor, hi_ * factor, fbits_);
}

namespace {

// Decimal rendering of scaled / 2^fbits, truncated toward zero, as
// ("integer digits", "fraction digits").
std::pair<std::string, std::string> decimal_parts(const Int& scaled, unsigned fbits,
                                                  unsigned fraction_digits)
{
    Int abs_scaled = abs(scaled);
    Int int_part = abs_scaled >> fbits;
    Int frac_part = abs_scaled - (int_part << fbits);
    Int scaled_frac = frac_part * int_pow(Int(10), fraction_digits);
    mpz_fdiv_q_2exp(scaled_frac.get_mpz_t(), scaled_frac.get_mpz_t(), fbits);
    std::string frac = scaled_frac.get_str();
    if (frac.size() < fraction_digits) {
        frac.insert(frac.begin(), fraction_digits - frac.size(), '0');
    }
    return {int_part.get_str(), frac};
}

} // namespace

Enclosure::SharedDecimal Enclosure::shared_decimal(unsigned max_fraction_digits) const
{
    if (sgn(lo_) < 0 && sgn(hi_) > 0) {
        return {"", 0};
    }
    const bool negative = sgn(hi_) <= 0 && sgn(lo_) < 0;
    // For negative enclosures compare magnitudes with the roles swapped so
    // truncation still brackets correctly.
    const Int& a = negative ? hi_ : lo_;
    const Int& b = negative ? lo_ : hi_;
    auto [ia, fa] = decimal_parts(a, fbits_, max_fraction_digits);
    auto [ib, fb] = decimal_parts(b, fbits_, max_fraction_digits);
    if (ia.size() != ib.size()) {
        return {negative ? "-" : "", 0};
    }
    std::string sa = ia + "." + fa;
    std::string sb = ib + "." + fb;
    std::size_t common = 0;
    while (common < sa.size() && common < sb.size() && sa[common] == sb[common]) {
        ++common;
    }
    std::string shared = sa.substr(0, common);
    unsigned certified = 0;
    const auto dot = shared.find('.');
    if (dot != std::string::npos) {
        certified = static_cast<unsigned>(shared.size() - dot - 1);
        if (shared.back() == '.') {
            shared.pop_back();
        }
    }
    return {(negative ? "-" : "") + shared, certified};
}

Enclosure log_enclosure(unsigned base, unsigned fbits)
{
    if (base < 2) {
        throw std::invalid_argument("log enclosure needs base >= 2");
    }
    // log(b) = 2 atanh(x) at x = (b-1)/(b+1); tail after the x^{2i+1} term
    // is geometric with ratio x^2.
    const Rational x = make_rational(Int(base) - 1, Int(base) + 1);
    const Rational x2 = x * x;
    const Rational tail_threshold = rational_pow(Rational(2), -static_cast<long>(fbits) - 1);

    Rational sum(0);
    Rational power = x; // x^{2i+1}
    unsigned long denom = 1;
    Rational remainder_bound;
    while (true) {
        sum += power / Rational(denom);
        power *= x2;
        denom += 2;
        // 2 * sum_{j >= i+1} x^{2j+1}/(2j+1) <= 2 x^{2i+3} / ((2i+3)(1 - x^2))
        remainder_bound = Rational(2) * power / (Rational(denom) * (Rational(1) - x2));
        if (remainder_bound <= tail_threshold) {
            break;
        }
    }
    sum *= 2;
    return Enclosure(floor_scaled(sum, fbits), ceil_scaled(sum + remainder_bound, fbits),
                     fbits);
}

} // namespace blockmass
