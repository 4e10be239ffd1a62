#pragma once

#include "blockmass/automaton.hpp"
#include "blockmass/enclosure.hpp"
#include "blockmass/rational.hpp"
#include "blockmass/words.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace blockmass {

/// Half-open interval [n1/b^l, n2/b^l) with b-imal endpoints.
struct BimalInterval {
    unsigned base;
    unsigned resolution; // l
    Int n1;
    Int n2;

    BimalInterval(unsigned base, unsigned resolution, Int n1, Int n2);

    // Endpoints written "n" (integers, so 0 or 1) or "n/d" with d a power of
    // the base. Mixed resolutions are unified to the finer one.
    static BimalInterval from_endpoints(unsigned base, const std::string& from,
                                        const std::string& to);

    Rational lower() const;
    Rational upper() const;
    Rational width() const;
};

// mu_k(I): total mass b^{-|X|} over the k-admissible strings X with
// x(X) = n(X)/b^{|X|} in I. Exact. The finitely many strings shorter than
// the resolution are enumerated; longer ones enter through prefix masses.
// Throws CapExceeded when the interval spans more than cap prefixes.
Rational measure_interval(const Block& block, std::uint64_t k, const BimalInterval& interval,
                          std::uint64_t cap = kDefaultEnumerationCap);

// Cell i = mu_k([i/b^l, (i+1)/b^l)) for all b^l cells at resolution l.
std::vector<Rational> measure_histogram(const Block& block, std::uint64_t k,
                                        unsigned resolution,
                                        std::uint64_t cap = kDefaultEnumerationCap);

// Exact sum of 1/m over the k-admissible positive integers m whose minimal
// representation has at most max_length digits.
Rational partial_sum(const Block& block, std::uint64_t k, std::size_t max_length,
                     std::uint64_t cap = kDefaultEnumerationCap);

// Certified enclosure of S_w(k): integers shorter than depth contribute
// exact 1/m terms; each length-depth prefix s with nonzero leading digit
// contributes its k-admissible mass times the bracket of 1/x over its cell.
// Certified width (before rounding slack) shrinks like b^{-depth}.
// Refinement is uniform in depth; adaptive subdivision would replace the
// leaf visit.
Enclosure enclose_sum(const Block& block, std::uint64_t k, unsigned depth,
                      unsigned fbits = kDefaultFractionBits,
                      std::uint64_t cap = kDefaultEnumerationCap);

struct LimitCheck {
    enum class Status { verified, violated, undecided };

    std::uint64_t k = 0;
    unsigned depth = 0;
    Enclosure sum;
    Enclosure target;       // b^p log(b)
    Rational certified_gap; // worst |s - c| over the two enclosures
    Rational proven_gap;    // best lower bound on |S - b^p log b| (0 if none)
    Rational bound;         // (b-1) b^{p - max(k,2) + 1}
    Status status = Status::undecided;

    std::string status_str() const;
};

// Verifies |S_w(k) - b^p log b| <= (b-1) b^{p-max(k,2)+1} at the given
// depth. An enclosure too wide to decide reports undecided rather than
// failing; retry with a larger depth.
LimitCheck check_limit_bound(const Block& block, std::uint64_t k, unsigned depth,
                             unsigned fbits = kDefaultFractionBits,
                             std::uint64_t cap = kDefaultEnumerationCap);

// Smallest depth whose predicted enclosure width b^p (b-1) b^{-depth} is
// below bound/divisor; the usual starting point for check_limit_bound.
unsigned suggest_limit_depth(const Block& block, std::uint64_t k, unsigned divisor = 10);

} // namespace blockmass
