#include "blockmass/kempner.hpp"

#include "blockmass/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace blockmass {

namespace {

// Guard against absurd mass-table depths before allocating rows.
constexpr std::uint64_t kMaxOccurrenceIndex = std::uint64_t(1) << 20;

void require_same_base(const Block& block, unsigned base)
{
    if (block.base() != base) {
        throw std::invalid_argument("base mismatch between block and interval");
    }
}

std::vector<std::uint32_t> pad_digits(const Int& n, unsigned base, std::size_t width)
{
    std::vector<std::uint32_t> digits(width, 0);
    Int rest = n;
    std::size_t pos = width;
    while (sgn(rest) != 0) {
        if (pos == 0) {
            throw std::logic_error("value does not fit the requested digit width");
        }
        --pos;
        digits[pos] = static_cast<std::uint32_t>(mpz_fdiv_ui(rest.get_mpz_t(), base));
        rest /= base;
    }
    return digits;
}

// Endpoint "n" or "n/d" with d a power of the base; returns (resolution, index).
std::pair<unsigned, Int> parse_endpoint(unsigned base, const std::string& text)
{
    const auto slash = text.find('/');
    Int num;
    Int den(1);
    try {
        num = Int(text.substr(0, slash));
        if (slash != std::string::npos) {
            den = Int(text.substr(slash + 1));
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed b-imal endpoint: " + text);
    }
    unsigned resolution = 0;
    Int rest = den;
    while (rest > 1) {
        if (mpz_fdiv_ui(rest.get_mpz_t(), base) != 0) {
            throw std::invalid_argument("endpoint denominator " + den.get_str() +
                                        " is not a power of base " + std::to_string(base));
        }
        rest /= base;
        ++resolution;
        if (resolution > 4096) {
            throw std::invalid_argument("endpoint resolution is unreasonably deep");
        }
    }
    if (rest != 1) {
        throw std::invalid_argument("endpoint denominator must be positive");
    }
    return {resolution, num};
}

} // namespace

BimalInterval::BimalInterval(unsigned base_in, unsigned resolution_in, Int n1_in, Int n2_in)
    : base(base_in), resolution(resolution_in), n1(std::move(n1_in)), n2(std::move(n2_in))
{
    if (base < 2 || base > kMaxBase) {
        throw std::invalid_argument("interval base out of range");
    }
    if (sgn(n1) < 0 || n1 >= n2 || n2 > int_pow(Int(base), resolution)) {
        throw std::invalid_argument("interval needs 0 <= n1 < n2 <= b^l");
    }
}

BimalInterval BimalInterval::from_endpoints(unsigned base, const std::string& from,
                                            const std::string& to)
{
    auto [l1, a] = parse_endpoint(base, from);
    auto [l2, b] = parse_endpoint(base, to);
    const unsigned l = std::max(l1, l2);
    a *= int_pow(Int(base), l - l1);
    b *= int_pow(Int(base), l - l2);
    return BimalInterval(base, l, std::move(a), std::move(b));
}

Rational BimalInterval::lower() const
{
    return make_rational(n1, int_pow(Int(base), resolution));
}

Rational BimalInterval::upper() const
{
    return make_rational(n2, int_pow(Int(base), resolution));
}

Rational BimalInterval::width() const
{
    return make_rational(n2 - n1, int_pow(Int(base), resolution));
}

Rational measure_interval(const Block& block, std::uint64_t k, const BimalInterval& interval,
                          std::uint64_t cap)
{
    require_same_base(block, interval.base);
    if (k > kMaxOccurrenceIndex) {
        throw CapExceeded("occurrence count " + std::to_string(k) + " is unreasonable");
    }
    const unsigned b = block.base();
    const unsigned l = interval.resolution;
    if (interval.n2 - interval.n1 > Int(static_cast<unsigned long>(cap))) {
        throw CapExceeded("interval spans more prefixes than the cap allows");
    }

    const OccurrenceAutomaton automaton(block);
    MassTable table(automaton);
    const Rational inv_b = make_rational(Int(1), Int(b));

    Rational total(0);
    // Strings shorter than the resolution that land in the interval: their
    // fractions sit on b-imal grid points, so the index range is exact.
    Rational weight(1);
    for (unsigned j = 0; j < l; ++j, weight *= inv_b) {
        const Int scale = int_pow(Int(b), l - j);
        Int n;
        mpz_cdiv_q(n.get_mpz_t(), interval.n1.get_mpz_t(), scale.get_mpz_t());
        Int end;
        mpz_cdiv_q(end.get_mpz_t(), interval.n2.get_mpz_t(), scale.get_mpz_t());
        for (; n < end; ++n) {
            if (automaton.run(pad_digits(n, b, j)).emissions == k) {
                total += weight;
            }
        }
    }
    // Length-l prefixes inside the interval carry the remaining mass.
    const Rational cell_weight = rational_pow(Rational(b), -static_cast<long>(l));
    for (Int n = interval.n1; n < interval.n2; ++n) {
        const auto run = automaton.run(pad_digits(n, b, l));
        if (run.emissions <= k) {
            total += cell_weight *
                     table.value(static_cast<unsigned>(k - run.emissions), run.state);
        }
    }
    return total;
}

std::vector<Rational> measure_histogram(const Block& block, std::uint64_t k,
                                        unsigned resolution, std::uint64_t cap)
{
    if (k > kMaxOccurrenceIndex) {
        throw CapExceeded("occurrence count " + std::to_string(k) + " is unreasonable");
    }
    const unsigned b = block.base();
    const std::uint64_t cells = checked_string_count(b, resolution, cap);

    const OccurrenceAutomaton automaton(block);
    MassTable table(automaton);
    table.ensure(static_cast<unsigned>(k));

    std::vector<Rational> out(cells, Rational(0));
    const Rational inv_b = make_rational(Int(1), Int(b));
    std::vector<Rational> short_weight(resolution + 1);
    short_weight[0] = Rational(1);
    for (unsigned j = 1; j <= resolution; ++j) {
        short_weight[j] = short_weight[j - 1] * inv_b;
    }
    std::vector<std::uint64_t> stretch(resolution + 1);
    stretch[resolution] = 1;
    for (unsigned j = resolution; j > 0; --j) {
        stretch[j - 1] = stretch[j] * b;
    }

    auto dfs = [&](auto&& self, unsigned j, unsigned state, std::uint64_t occurrences,
                   std::uint64_t index) -> void {
        if (j == resolution) {
            // Prefix masses absorb every string of length >= resolution,
            // including the prefix itself.
            out[index] += short_weight[resolution] *
                          table.value(static_cast<unsigned>(k - occurrences), state);
            return;
        }
        if (occurrences == k) {
            out[index * stretch[j]] += short_weight[j];
        }
        for (std::uint32_t d = 0; d < b; ++d) {
            const std::uint64_t next_occ = occurrences + (automaton.emits(state, d) ? 1 : 0);
            if (next_occ > k) {
                continue;
            }
            self(self, j + 1, automaton.next(state, d), next_occ, index * b + d);
        }
    };
    dfs(dfs, 0, 0, 0, 0);
    return out;
}

Rational partial_sum(const Block& block, std::uint64_t k, std::size_t max_length,
                     std::uint64_t cap)
{
    const unsigned b = block.base();
    checked_string_count(b, max_length, cap);

    const OccurrenceAutomaton automaton(block);
    Rational acc(0);
    if (max_length == 0) {
        return acc;
    }
    auto dfs = [&](auto&& self, std::size_t length, unsigned state,
                   std::uint64_t occurrences, std::uint64_t value) -> void {
        if (occurrences == k) {
            acc += make_rational(Int(1), Int(static_cast<unsigned long>(value)));
        }
        if (length == max_length) {
            return;
        }
        for (std::uint32_t d = 0; d < b; ++d) {
            const std::uint64_t next_occ = occurrences + (automaton.emits(state, d) ? 1 : 0);
            if (next_occ > k) {
                continue;
            }
            self(self, length + 1, automaton.next(state, d), next_occ, value * b + d);
        }
    };
    for (std::uint32_t d = 1; d < b; ++d) {
        const std::uint64_t occ = automaton.emits(0, d) ? 1 : 0;
        if (occ <= k) {
            dfs(dfs, 1, automaton.next(0, d), occ, d);
        }
    }
    return acc;
}

Enclosure enclose_sum(const Block& block, std::uint64_t k, unsigned depth, unsigned fbits,
                      std::uint64_t cap)
{
    if (depth == 0) {
        throw std::invalid_argument("enclosure depth must be >= 1");
    }
    if (k > kMaxOccurrenceIndex) {
        throw CapExceeded("occurrence count " + std::to_string(k) + " is unreasonable");
    }
    const unsigned b = block.base();
    checked_string_count(b, depth, cap);

    const OccurrenceAutomaton automaton(block);
    MassTable table(automaton);
    table.ensure(static_cast<unsigned>(k));
    const unsigned states = automaton.state_count();

    // Numerators pre-shifted by 2^fbits so each leaf costs one mul and one
    // division per bound.
    std::vector<std::vector<Int>> mass_num(k + 1, std::vector<Int>(states));
    std::vector<std::vector<Int>> mass_den(k + 1, std::vector<Int>(states));
    for (std::uint64_t j = 0; j <= k; ++j) {
        for (unsigned q = 0; q < states; ++q) {
            const Rational& m = table.value(static_cast<unsigned>(j), q);
            mpz_mul_2exp(mass_num[j][q].get_mpz_t(), m.get_num().get_mpz_t(), fbits);
            mass_den[j][q] = m.get_den();
        }
    }

    Int one_shifted;
    mpz_setbit(one_shifted.get_mpz_t(), fbits);
    Int lo(0);
    Int hi(0);
    Int scratch;

    auto dfs = [&](auto&& self, unsigned length, unsigned state, std::uint64_t occurrences,
                   std::uint64_t value) -> void {
        if (occurrences == k && length < depth) {
            // The integer value itself, 1/m exactly, rounded outward.
            mpz_fdiv_q_ui(scratch.get_mpz_t(), one_shifted.get_mpz_t(),
                          static_cast<unsigned long>(value));
            lo += scratch;
            mpz_cdiv_q_ui(scratch.get_mpz_t(), one_shifted.get_mpz_t(),
                          static_cast<unsigned long>(value));
            hi += scratch;
        }
        if (length == depth) {
            // Bracket the cell [value/b^d, (value+1)/b^d): its k-admissible
            // mass is b^{-d} m_j(q); multiplied by 1/x in (b^d/(n+1), b^d/n]
            // the b^d cancels.
            const std::uint64_t j = k - occurrences;
            mpz_mul_ui(scratch.get_mpz_t(), mass_den[j][state].get_mpz_t(),
                       static_cast<unsigned long>(value) + 1);
            mpz_fdiv_q(scratch.get_mpz_t(), mass_num[j][state].get_mpz_t(),
                       scratch.get_mpz_t());
            lo += scratch;
            mpz_mul_ui(scratch.get_mpz_t(), mass_den[j][state].get_mpz_t(),
                       static_cast<unsigned long>(value));
            mpz_cdiv_q(scratch.get_mpz_t(), mass_num[j][state].get_mpz_t(),
                       scratch.get_mpz_t());
            hi += scratch;
            return;
        }
        for (std::uint32_t d = 0; d < b; ++d) {
            const std::uint64_t next_occ = occurrences + (automaton.emits(state, d) ? 1 : 0);
            if (next_occ > k) {
                continue;
            }
            self(self, length + 1, automaton.next(state, d), next_occ, value * b + d);
        }
    };
    for (std::uint32_t d = 1; d < b; ++d) {
        const std::uint64_t occ = automaton.emits(0, d) ? 1 : 0;
        if (occ <= k) {
            dfs(dfs, 1, automaton.next(0, d), occ, d);
        }
    }
    return Enclosure(std::move(lo), std::move(hi), fbits);
}

std::string LimitCheck::status_str() const
{
    switch (status) {
    case Status::verified:
        return "verified";
    case Status::violated:
        return "violated";
    default:
        return "undecided";
    }
}

LimitCheck check_limit_bound(const Block& block, std::uint64_t k, unsigned depth,
                             unsigned fbits, std::uint64_t cap)
{
    if (k < 1) {
        throw std::invalid_argument("the limit bound is stated for k >= 1");
    }
    const unsigned b = block.base();
    const std::size_t p = block.length();

    Enclosure sum = enclose_sum(block, k, depth, fbits, cap);
    Enclosure target =
        log_enclosure(b, fbits).scaled_by(int_pow(Int(b), static_cast<unsigned long>(p)));

    const Rational certified =
        std::max(sum.upper() - target.lower(), target.upper() - sum.lower());
    Rational proven =
        std::max(sum.lower() - target.upper(), target.lower() - sum.upper());
    if (sgn(proven) < 0) {
        proven = 0;
    }
    const long exponent =
        static_cast<long>(p) - static_cast<long>(std::max<std::uint64_t>(k, 2)) + 1;
    const Rational bound =
        Rational(b - 1) * rational_pow(Rational(b), exponent);

    LimitCheck::Status status = LimitCheck::Status::undecided;
    if (certified <= bound) {
        status = LimitCheck::Status::verified;
    } else if (proven > bound) {
        status = LimitCheck::Status::violated;
    }
    return LimitCheck{k,     depth, std::move(sum), std::move(target),
                      certified, proven, bound,  status};
}

unsigned suggest_limit_depth(const Block& block, std::uint64_t k, unsigned divisor)
{
    const unsigned b = block.base();
    const std::size_t p = block.length();
    const long exponent =
        static_cast<long>(p) - static_cast<long>(std::max<std::uint64_t>(k, 2)) + 1;
    const Rational bound = Rational(b - 1) * rational_pow(Rational(b), exponent);
    const Rational target = bound / Rational(divisor);
    const Rational scale =
        Rational(int_pow(Int(b), static_cast<unsigned long>(p))) * Rational(b - 1);
    unsigned depth = 1;
    while (scale * rational_pow(Rational(b), -static_cast<long>(depth)) >= target &&
           depth < 64) {
        ++depth;
    }
    return depth;
}

} // namespace blockmass
