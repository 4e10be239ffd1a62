#pragma once

#include "blockmass/rational_function.hpp"
#include "blockmass/words.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace blockmass {

// Closed-form powers grow linearly in k; this bounds k per call unless the
// caller raises it.
inline constexpr unsigned kDefaultMaxK = 64;

/// Autocorrelation data of a block: flag i is 1 exactly when i is a period
/// of w (the prefix of length p-i equals the suffix of the same length).
/// Flag 0 is always 1.
struct Correlation {
    Block block;
    std::vector<std::uint8_t> flags;

    // A_w = sum of t^i over the periods i.
    Polynomial polynomial() const;
    // The positive periods 0 < i_1 < i_2 < ... in increasing order.
    std::vector<unsigned> positive_periods() const;
};

Correlation autocorrelation(const Block& block);

// (1 - bt) A_w + t^p: the common denominator of every closed form below.
Polynomial gf_denominator(const Correlation& corr);

// Z_w(0) = A_w / ((1 - bt) A_w + t^p).
RationalFunction gf_zero(const Correlation& corr);
RationalFunction gf_zero(const Block& block);

// Z_w(v,0) = t^{p-1} / ((1 - bt) A_w + t^p): zero-occurrence strings that
// start with the suffix v.
RationalFunction gf_v0(const Correlation& corr);
RationalFunction gf_v0(const Block& block);

// The loop factor t^{2-p} Z_w(v,0,u) = ((1 - bt)(A_w - 1) + t^p) / denom.
RationalFunction gf_loop(const Correlation& corr);
RationalFunction gf_loop(const Block& block);

// Z_w(v,0,u) itself (the loop factor divided by t^{2-p}).
RationalFunction gf_v0u(const Correlation& corr);
RationalFunction gf_v0u(const Block& block);

// Z_w(k): gf_zero for k = 0, else t^p loop^{k-1} / denom^{k+1}.
RationalFunction gf_k(const Correlation& corr, unsigned k, unsigned max_k = kDefaultMaxK);
RationalFunction gf_k(const Block& block, unsigned k, unsigned max_k = kDefaultMaxK);

// Total mass M_w(k) = Z_w(k)(1/b).
Rational mass(const Block& block, unsigned k, unsigned max_k = kDefaultMaxK);

struct BatteryOptions {
    std::size_t max_length = 12;
    unsigned max_k = 4;
    std::uint64_t cap = kDefaultEnumerationCap;
    // Negative control: corrupts the correlation fed to gf_zero / gf_k while
    // the rest of the battery uses the true one, the way a localized
    // construction bug would.
    bool corrupt_autocorrelation = false;
};

struct BatteryItem {
    std::string name;
    bool pass = true;
    std::string witness; // first failing length / coefficient pair, if any
};

struct BatteryReport {
    std::vector<BatteryItem> items;

    bool all_pass() const;
    const BatteryItem* first_failure() const;
};

// Verifies, exactly:
//   lemma_c_v0:       (1 - bt) Z_w(0) = 1 - t Z_w(v,0)
//   lemma_c_v0u:      (1 - bt) t^{1-p} Z_w(v,0) = 1 - t^{2-p} Z_w(v,0,u)
//   cluster_identity: Z_w(0) = A_w t^{1-p} Z_w(v,0)
//   coefficients_vs_enumeration: [t^l] Z_w(k) = N_w(k,l), l <= L, k <= K
//   reversal_counts:  zero-occurrence strings ending in u vs starting with v
//   cluster_partition: the 0-admissible X with k_w(vX) = j, per positive
//                      period, against shifted zero-occurrence counts
//   mass_upper_bound: sum_{j<=k} M_w(j) <= p (k+1) b^p
BatteryReport identity_battery(const Block& block, const BatteryOptions& opts = {});

} // namespace blockmass
