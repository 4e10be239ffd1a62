#include "blockmass/words.hpp"

#include "blockmass/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace blockmass {

namespace {

void validate_base(unsigned base)
{
    if (base < 2 || base > kMaxBase) {
        throw std::invalid_argument("base must be in [2, " + std::to_string(kMaxBase) + "]");
    }
}

void validate_digits(unsigned base, const std::vector<std::uint32_t>& digits)
{
    for (std::uint32_t d : digits) {
        if (d >= base) {
            throw std::invalid_argument("digit " + std::to_string(d) +
                                        " out of range for base " + std::to_string(base));
        }
    }
}

void require_same_base(unsigned a, unsigned b)
{
    if (a != b) {
        throw std::invalid_argument("base mismatch: " + std::to_string(a) + " vs " +
                                    std::to_string(b));
    }
}

std::string digits_to_string(unsigned base, const std::vector<std::uint32_t>& digits)
{
    if (digits.empty()) {
        return "";
    }
    std::ostringstream out;
    if (base <= 10) {
        for (std::uint32_t d : digits) {
            out << d;
        }
    } else {
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (i != 0) {
                out << ',';
            }
            out << digits[i];
        }
    }
    return out.str();
}

std::vector<std::uint32_t> parse_digits(unsigned base, const std::string& text)
{
    validate_base(base);
    std::vector<std::uint32_t> digits;
    if (text.find(',') != std::string::npos) {
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
                throw std::invalid_argument("malformed digit list: " + text);
            }
            digits.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        }
        if (!text.empty() && text.back() == ',') {
            throw std::invalid_argument("malformed digit list: " + text);
        }
    } else if (base <= 10) {
        digits.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument("malformed digit string: " + text);
            }
            digits.push_back(static_cast<std::uint32_t>(c - '0'));
        }
    } else if (!text.empty()) {
        // Single digit value in a large base.
        if (text.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("bases above 10 use comma-separated digits: " + text);
        }
        digits.push_back(static_cast<std::uint32_t>(std::stoul(text)));
    }
    validate_digits(base, digits);
    return digits;
}

// Naive substring scan; deliberately the dumbest correct implementation,
// since this is the oracle everything else is checked against.
std::uint64_t scan_occurrences(const std::vector<std::uint32_t>& text,
                               const std::vector<std::uint32_t>& pattern)
{
    if (pattern.size() > text.size()) {
        return 0;
    }
    std::uint64_t count = 0;
    for (std::size_t offset = 0; offset + pattern.size() <= text.size(); ++offset) {
        if (std::equal(pattern.begin(), pattern.end(), text.begin() + offset)) {
            ++count;
        }
    }
    return count;
}

} // namespace

DigitString::DigitString(unsigned base, std::vector<std::uint32_t> digits)
    : base_(base), digits_(std::move(digits))
{
    validate_base(base_);
    validate_digits(base_, digits_);
}

Int DigitString::value() const
{
    Int n(0);
    for (std::uint32_t d : digits_) {
        n = n * base_ + d;
    }
    return n;
}

std::string DigitString::to_string() const
{
    return digits_to_string(base_, digits_);
}

Block::Block(unsigned base, std::vector<std::uint32_t> digits)
    : base_(base), digits_(std::move(digits))
{
    validate_base(base_);
    if (digits_.empty()) {
        throw std::invalid_argument("the empty block is rejected");
    }
    validate_digits(base_, digits_);
}

DigitString Block::prefix() const
{
    return DigitString(base_, {digits_.begin(), digits_.end() - 1});
}

DigitString Block::suffix() const
{
    return DigitString(base_, {digits_.begin() + 1, digits_.end()});
}

DigitString Block::as_digit_string() const
{
    return DigitString(base_, digits_);
}

std::string Block::to_string() const
{
    return digits_to_string(base_, digits_);
}

Block parse_block(unsigned base, const std::string& text)
{
    return Block(base, parse_digits(base, text));
}

DigitString parse_digit_string(unsigned base, const std::string& text)
{
    return DigitString(base, parse_digits(base, text));
}

std::uint64_t checked_string_count(unsigned base, std::size_t length, std::uint64_t cap)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < length; ++i) {
        if (total > cap / base) {
            throw CapExceeded("enumeration of " + std::to_string(base) + "^" +
                              std::to_string(length) + " strings exceeds cap " +
                              std::to_string(cap));
        }
        total *= base;
    }
    if (total > cap) {
        throw CapExceeded("enumeration exceeds cap " + std::to_string(cap));
    }
    return total;
}

void for_each_string(unsigned base, std::size_t length,
                     const std::function<void(const std::vector<std::uint32_t>&)>& fn)
{
    std::vector<std::uint32_t> digits(length, 0);
    while (true) {
        fn(digits);
        std::size_t pos = length;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < base) {
                break;
            }
            digits[pos] = 0;
            if (pos == 0) {
                return;
            }
        }
        if (length == 0) {
            return;
        }
    }
}

std::uint64_t count_occurrences(const DigitString& text, const Block& block)
{
    require_same_base(text.base(), block.base());
    return scan_occurrences(text.digits(), block.digits());
}

std::uint64_t k_star(const DigitString& s, const Block& block, std::uint64_t cap)
{
    require_same_base(s.base(), block.base());
    const std::size_t ext = block.length() - 1;
    checked_string_count(block.base(), ext, cap);
    std::uint64_t best = 0;
    std::vector<std::uint32_t> text = s.digits();
    text.resize(s.length() + ext);
    for_each_string(block.base(), ext, [&](const std::vector<std::uint32_t>& z) {
        std::copy(z.begin(), z.end(), text.begin() + static_cast<std::ptrdiff_t>(s.length()));
        best = std::max(best, scan_occurrences(text, block.digits()));
    });
    return best;
}

DigitString minimal_representation(const Int& n, unsigned base)
{
    validate_base(base);
    if (sgn(n) < 0) {
        throw std::invalid_argument("minimal representation of a negative integer");
    }
    std::vector<std::uint32_t> digits;
    Int rest = n;
    while (sgn(rest) != 0) {
        digits.push_back(static_cast<std::uint32_t>(mpz_fdiv_ui(rest.get_mpz_t(), base)));
        rest /= base;
    }
    std::reverse(digits.begin(), digits.end());
    return DigitString(base, std::move(digits));
}

Rational to_fraction(const DigitString& text)
{
    return make_rational(text.value(), int_pow(Int(text.base()), text.length()));
}

DigitString reverse(const DigitString& text)
{
    std::vector<std::uint32_t> digits(text.digits().rbegin(), text.digits().rend());
    return DigitString(text.base(), std::move(digits));
}

Block reverse(const Block& block)
{
    std::vector<std::uint32_t> digits(block.digits().rbegin(), block.digits().rend());
    return Block(block.base(), std::move(digits));
}

std::uint64_t enumerate_admissible(const Block& block, std::uint64_t k, std::size_t length,
                                   std::uint64_t cap)
{
    checked_string_count(block.base(), length, cap);
    std::uint64_t count = 0;
    for_each_string(block.base(), length, [&](const std::vector<std::uint32_t>& digits) {
        if (scan_occurrences(digits, block.digits()) == k) {
            ++count;
        }
    });
    return count;
}

std::vector<DigitString> admissible_strings(const Block& block, std::uint64_t k,
                                            std::size_t length, std::uint64_t cap)
{
    checked_string_count(block.base(), length, cap);
    std::vector<DigitString> out;
    for_each_string(block.base(), length, [&](const std::vector<std::uint32_t>& digits) {
        if (scan_occurrences(digits, block.digits()) == k) {
            out.emplace_back(block.base(), digits);
        }
    });
    return out;
}

std::vector<std::vector<std::uint64_t>> occurrence_census(const Block& block,
                                                          std::size_t max_length,
                                                          std::uint64_t cap)
{
    checked_string_count(block.base(), max_length, cap);
    std::vector<std::vector<std::uint64_t>> counts(max_length + 1);
    for (std::size_t l = 0; l <= max_length; ++l) {
        counts[l].assign(l + 1, 0);
        for_each_string(block.base(), l, [&](const std::vector<std::uint32_t>& digits) {
            ++counts[l][scan_occurrences(digits, block.digits())];
        });
    }
    return counts;
}

} // namespace blockmass
