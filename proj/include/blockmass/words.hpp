#pragma once

#include "blockmass/rational.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace blockmass {

// Default bound on exhaustive enumerations: base^length may not exceed it.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t(1) << 24;

inline constexpr unsigned kMaxBase = 1u << 16;

/// A finite sequence of base-b digits, possibly empty. Equal digit sequences
/// of different lengths are different strings (042 is not 42).
class DigitString {
public:
    DigitString() = delete;
    DigitString(unsigned base, std::vector<std::uint32_t> digits);

    unsigned base() const { return base_; }
    const std::vector<std::uint32_t>& digits() const { return digits_; }
    std::size_t length() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }

    // Positional value; the empty string has value 0.
    Int value() const;

    std::string to_string() const;

    friend bool operator==(const DigitString& a, const DigitString& b) = default;

private:
    unsigned base_;
    std::vector<std::uint32_t> digits_;
};

/// The fixed pattern block w: a nonempty digit string with its derived
/// prefix u (all but the last digit) and suffix v (all but the first).
class Block {
public:
    Block() = delete;
    Block(unsigned base, std::vector<std::uint32_t> digits);

    unsigned base() const { return base_; }
    const std::vector<std::uint32_t>& digits() const { return digits_; }
    std::size_t length() const { return digits_.size(); }

    DigitString prefix() const;  // u = d_1 .. d_{p-1}
    DigitString suffix() const;  // v = d_2 .. d_p
    DigitString as_digit_string() const;

    std::string to_string() const;

    friend bool operator==(const Block& a, const Block& b) = default;

private:
    unsigned base_;
    std::vector<std::uint32_t> digits_;
};

// Compact digit string for bases <= 10 ("942"); comma-separated digit values
// for larger bases ("17,0,3"). Throws std::invalid_argument on bad input.
Block parse_block(unsigned base, const std::string& text);
DigitString parse_digit_string(unsigned base, const std::string& text);

// base^length if it fits under cap, else throws CapExceeded.
std::uint64_t checked_string_count(unsigned base, std::size_t length, std::uint64_t cap);

// Calls fn once per digit string of exactly the given length, in
// lexicographic order. The enumeration backbone of every brute-force oracle.
void for_each_string(unsigned base, std::size_t length,
                     const std::function<void(const std::vector<std::uint32_t>&)>& fn);

// k_w(X): number of possibly overlapping occurrences of w in X.
std::uint64_t count_occurrences(const DigitString& text, const Block& block);

// k_w^*(s) = max over strings z of length p-1 of k_w(s z).
std::uint64_t k_star(const DigitString& s, const Block& block,
                     std::uint64_t cap = kDefaultEnumerationCap);

// Minimal representation X(n): no leading zero, X(0) = empty.
DigitString minimal_representation(const Int& n, unsigned base);

// x(X) = n(X) / b^{|X|} in [0, 1).
Rational to_fraction(const DigitString& text);

DigitString reverse(const DigitString& text);
Block reverse(const Block& block);

// N_w(k, l) by exhaustive enumeration of all b^l strings.
std::uint64_t enumerate_admissible(const Block& block, std::uint64_t k, std::size_t length,
                                   std::uint64_t cap = kDefaultEnumerationCap);

// The k-admissible strings themselves; meant for small cases.
std::vector<DigitString> admissible_strings(const Block& block, std::uint64_t k,
                                            std::size_t length,
                                            std::uint64_t cap = kDefaultEnumerationCap);

// counts[l][k] = N_w(k, l) for l <= max_length, k <= l, in one sweep per
// length. Shared by the identity battery and the acceptance suite.
std::vector<std::vector<std::uint64_t>> occurrence_census(
    const Block& block, std::size_t max_length, std::uint64_t cap = kDefaultEnumerationCap);

} // namespace blockmass
