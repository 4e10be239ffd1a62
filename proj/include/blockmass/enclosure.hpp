#pragma once

#include "blockmass/rational.hpp"

#include <string>

namespace blockmass {

inline constexpr unsigned kDefaultFractionBits = 128;

/// Certified two-sided bound [lower, upper] on a real number. Bounds are
/// scaled integers with an implicit denominator 2^fbits; every accumulation
/// step rounds outward, so containment of the target is preserved by
/// construction. Masses and measures stay exact rationals elsewhere; only
/// sums of many unrelated terms go through this representation.
class Enclosure {
public:
    Enclosure(Int lower_scaled, Int upper_scaled, unsigned fbits);

    static Enclosure exact_zero(unsigned fbits);
    // [floor(q 2^F), ceil(q 2^F)] / 2^F.
    static Enclosure of_rational(const Rational& q, unsigned fbits);

    unsigned fraction_bits() const { return fbits_; }
    const Int& lower_scaled() const { return lo_; }
    const Int& upper_scaled() const { return hi_; }

    Rational lower() const;
    Rational upper() const;
    Rational width() const;
    // lower == upper: the enclosed value is known exactly.
    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& q) const;

    friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
    // factor >= 0, exact.
    Enclosure scaled_by(const Int& factor) const;

    struct SharedDecimal {
        std::string digits;        // decimal prefix common to both bounds
        unsigned certified_digits; // fractional digits pinned down by it
    };
    SharedDecimal shared_decimal(unsigned max_fraction_digits = 40) const;

private:
    Int lo_;
    Int hi_;
    unsigned fbits_;
};

/// Builds an enclosure of a sum of exact rational terms, one directed
/// rounding per term.
class EnclosureAccumulator {
public:
    explicit EnclosureAccumulator(unsigned fbits) : lo_(0), hi_(0), fbits_(fbits) {}

    void add(const Rational& term)
    {
        lo_ += floor_scaled(term, fbits_);
        hi_ += ceil_scaled(term, fbits_);
    }
    void add_bracket(const Rational& lower, const Rational& upper)
    {
        lo_ += floor_scaled(lower, fbits_);
        hi_ += ceil_scaled(upper, fbits_);
    }

    Enclosure result() const { return Enclosure(lo_, hi_, fbits_); }

private:
    Int lo_;
    Int hi_;
    unsigned fbits_;
};

// Certified enclosure of log(base), width <= 2^{2-fbits}. Uses the atanh
// series at (base-1)/(base+1) with a geometric remainder bound; the partial
// sum is computed exactly and only the final bounds are rounded outward.
Enclosure log_enclosure(unsigned base, unsigned fbits = kDefaultFractionBits);

} // namespace blockmass
