#include "blockmass/genfun.hpp"

#include "blockmass/errors.hpp"

#include <algorithm>
#include <sstream>

namespace blockmass {

namespace {

Polynomial one_minus_bt(unsigned base)
{
    return Polynomial({Rational(1), Rational(-static_cast<long>(base))});
}

// (1 - bt)(A_w - 1) + t^p, the numerator of the loop factor.
Polynomial loop_numerator(const Correlation& corr)
{
    Polynomial a_minus_one = corr.polynomial() - Polynomial::one();
    return one_minus_bt(corr.block.base()) * a_minus_one +
           Polynomial::monomial(corr.block.length());
}

Correlation corrupted(const Correlation& corr)
{
    Correlation bad = corr;
    const std::size_t p = bad.block.length();
    if (p >= 2) {
        bad.flags[p - 1] ^= 1u;
    } else {
        bad.flags.push_back(1); // p = 1 has no interior flag to flip
    }
    return bad;
}

} // namespace

Polynomial Correlation::polynomial() const
{
    std::vector<Rational> coeffs(flags.size(), Rational(0));
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (flags[i]) {
            coeffs[i] = 1;
        }
    }
    return Polynomial(std::move(coeffs));
}

std::vector<unsigned> Correlation::positive_periods() const
{
    std::vector<unsigned> periods;
    for (std::size_t i = 1; i < flags.size(); ++i) {
        if (flags[i]) {
            periods.push_back(static_cast<unsigned>(i));
        }
    }
    return periods;
}

Correlation autocorrelation(const Block& block)
{
    const auto& d = block.digits();
    const std::size_t p = d.size();
    std::vector<std::uint8_t> flags(p, 0);
    flags[0] = 1;
    for (std::size_t i = 1; i < p; ++i) {
        bool period = true;
        for (std::size_t j = 0; j + i < p; ++j) {
            if (d[j] != d[j + i]) {
                period = false;
                break;
            }
        }
        flags[i] = period ? 1 : 0;
    }
    return Correlation{block, std::move(flags)};
}

Polynomial gf_denominator(const Correlation& corr)
{
    return one_minus_bt(corr.block.base()) * corr.polynomial() +
           Polynomial::monomial(corr.block.length());
}

RationalFunction gf_zero(const Correlation& corr)
{
    return RationalFunction(corr.polynomial(), gf_denominator(corr));
}

RationalFunction gf_zero(const Block& block)
{
    return gf_zero(autocorrelation(block));
}

RationalFunction gf_v0(const Correlation& corr)
{
    return RationalFunction(Polynomial::monomial(corr.block.length() - 1),
                            gf_denominator(corr));
}

RationalFunction gf_v0(const Block& block)
{
    return gf_v0(autocorrelation(block));
}

RationalFunction gf_loop(const Correlation& corr)
{
    return RationalFunction(loop_numerator(corr), gf_denominator(corr));
}

RationalFunction gf_loop(const Block& block)
{
    return gf_loop(autocorrelation(block));
}

RationalFunction gf_v0u(const Correlation& corr)
{
    const int p = static_cast<int>(corr.block.length());
    return gf_loop(corr) * RationalFunction::monomial_power(p - 2);
}

RationalFunction gf_v0u(const Block& block)
{
    return gf_v0u(autocorrelation(block));
}

RationalFunction gf_k(const Correlation& corr, unsigned k, unsigned max_k)
{
    if (k > max_k) {
        throw CapExceeded("occurrence count " + std::to_string(k) + " exceeds cap " +
                          std::to_string(max_k));
    }
    if (k == 0) {
        return gf_zero(corr);
    }
    const std::size_t p = corr.block.length();
    Polynomial num = loop_numerator(corr).pow(k - 1).shifted(p);
    Polynomial den = gf_denominator(corr).pow(k + 1);
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction gf_k(const Block& block, unsigned k, unsigned max_k)
{
    return gf_k(autocorrelation(block), k, max_k);
}

Rational mass(const Block& block, unsigned k, unsigned max_k)
{
    const Rational inv_b = make_rational(Int(1), Int(block.base()));
    return gf_k(block, k, max_k).evaluate(inv_b);
}

bool BatteryReport::all_pass() const
{
    return std::all_of(items.begin(), items.end(),
                       [](const BatteryItem& item) { return item.pass; });
}

const BatteryItem* BatteryReport::first_failure() const
{
    for (const auto& item : items) {
        if (!item.pass) {
            return &item;
        }
    }
    return nullptr;
}

namespace {

// Per-length tallies filled by one sweep over all strings of that length.
struct SweepStats {
    std::vector<std::uint64_t> by_occurrences;   // N_w(k, l), index k
    std::uint64_t zero_ending_in_u = 0;
    std::uint64_t zero_starting_with_v = 0;
    std::vector<std::uint64_t> cluster_buckets;  // 0-admissible X by k_w(vX)
};

SweepStats sweep_length(const Block& block, std::size_t length)
{
    const auto& w = block.digits();
    const std::size_t p = w.size();
    const std::vector<std::uint32_t> u(w.begin(), w.end() - 1);
    const std::vector<std::uint32_t> v(w.begin() + 1, w.end());

    SweepStats stats;
    stats.by_occurrences.assign(length + 1, 0);
    stats.cluster_buckets.assign(p, 0);

    std::vector<std::uint32_t> vx(v.size() + length);
    std::copy(v.begin(), v.end(), vx.begin());

    auto scan = [&](const std::vector<std::uint32_t>& text) {
        std::uint64_t count = 0;
        for (std::size_t off = 0; off + p <= text.size(); ++off) {
            if (std::equal(w.begin(), w.end(), text.begin() + off)) {
                ++count;
            }
        }
        return count;
    };

    for_each_string(block.base(), length, [&](const std::vector<std::uint32_t>& x) {
        const std::uint64_t kx = scan(x);
        ++stats.by_occurrences[kx];
        if (kx != 0) {
            return;
        }
        if (length + 1 >= p) {
            if (std::equal(u.begin(), u.end(), x.end() - static_cast<std::ptrdiff_t>(u.size()))) {
                ++stats.zero_ending_in_u;
            }
            if (std::equal(v.begin(), v.end(), x.begin())) {
                ++stats.zero_starting_with_v;
            }
        }
        std::copy(x.begin(), x.end(), vx.begin() + static_cast<std::ptrdiff_t>(v.size()));
        ++stats.cluster_buckets[scan(vx)];
    });
    return stats;
}

std::string coeff_witness(std::size_t l, const std::string& expected, const std::string& got)
{
    std::ostringstream out;
    out << "l=" << l << " expected=" << expected << " got=" << got;
    return out.str();
}

} // namespace

BatteryReport identity_battery(const Block& block, const BatteryOptions& opts)
{
    const unsigned b = block.base();
    const std::size_t p = block.length();
    const Correlation corr = autocorrelation(block);
    const Correlation zero_corr = opts.corrupt_autocorrelation ? corrupted(corr) : corr;

    const RationalFunction z0 = gf_zero(zero_corr);
    const RationalFunction zv0 = gf_v0(corr);
    const RationalFunction loop = gf_loop(corr);
    const RationalFunction one = RationalFunction::constant(Rational(1));
    const RationalFunction one_minus_bt_rf =
        RationalFunction::from_polynomial(Polynomial({Rational(1), Rational(-static_cast<long>(b))}));
    const RationalFunction t = RationalFunction::monomial_power(1);

    BatteryReport report;

    {
        BatteryItem item{"lemma_c_v0", true, ""};
        const RationalFunction lhs = one_minus_bt_rf * z0;
        const RationalFunction rhs = one - t * zv0;
        if (!(lhs == rhs)) {
            item.pass = false;
            item.witness = "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
        }
        report.items.push_back(std::move(item));
    }
    {
        BatteryItem item{"lemma_c_v0u", true, ""};
        const RationalFunction lhs =
            one_minus_bt_rf * zv0 * RationalFunction::monomial_power(1 - static_cast<int>(p));
        const RationalFunction rhs = one - loop;
        if (!(lhs == rhs)) {
            item.pass = false;
            item.witness = "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
        }
        report.items.push_back(std::move(item));
    }
    {
        BatteryItem item{"cluster_identity", true, ""};
        const RationalFunction rhs =
            RationalFunction::from_polynomial(corr.polynomial()) *
            RationalFunction::monomial_power(1 - static_cast<int>(p)) * zv0;
        if (!(z0 == rhs)) {
            item.pass = false;
            item.witness = "lhs=" + z0.to_string() + " rhs=" + rhs.to_string();
        }
        report.items.push_back(std::move(item));
    }

    // One enumeration sweep per length feeds the three brute-force items.
    std::vector<SweepStats> stats;
    stats.reserve(opts.max_length + 1);
    checked_string_count(b, opts.max_length, opts.cap);
    for (std::size_t l = 0; l <= opts.max_length; ++l) {
        stats.push_back(sweep_length(block, l));
    }

    {
        BatteryItem item{"coefficients_vs_enumeration", true, ""};
        for (unsigned k = 0; k <= opts.max_k && item.pass; ++k) {
            const auto coeffs = gf_k(zero_corr, k).series_coefficients(opts.max_length);
            for (std::size_t l = 0; l <= opts.max_length; ++l) {
                const std::uint64_t expected =
                    k < stats[l].by_occurrences.size() ? stats[l].by_occurrences[k] : 0;
                if (coeffs[l] != Rational(static_cast<unsigned long>(expected))) {
                    item.pass = false;
                    item.witness = "k=" + std::to_string(k) + " " +
                                   coeff_witness(l, std::to_string(expected),
                                                 rational_str(coeffs[l]));
                    break;
                }
            }
        }
        report.items.push_back(std::move(item));
    }
    {
        BatteryItem item{"reversal_counts", true, ""};
        const auto v0_coeffs = zv0.series_coefficients(opts.max_length);
        for (std::size_t l = 0; l <= opts.max_length; ++l) {
            const std::uint64_t end_u = stats[l].zero_ending_in_u;
            const std::uint64_t start_v = stats[l].zero_starting_with_v;
            if (end_u != start_v ||
                v0_coeffs[l] != Rational(static_cast<unsigned long>(start_v))) {
                item.pass = false;
                item.witness = coeff_witness(l, std::to_string(end_u),
                                             std::to_string(start_v) + " (series " +
                                                 rational_str(v0_coeffs[l]) + ")");
                break;
            }
        }
        report.items.push_back(std::move(item));
    }
    {
        BatteryItem item{"cluster_partition", true, ""};
        const auto periods = corr.positive_periods();
        for (std::size_t l = 0; l <= opts.max_length && item.pass; ++l) {
            for (std::size_t j = 1; j < p; ++j) {
                std::uint64_t expected = 0;
                if (j <= periods.size()) {
                    const unsigned shift = periods[j - 1];
                    if (l >= shift) {
                        expected = stats[l - shift].cluster_buckets[0];
                    }
                }
                if (stats[l].cluster_buckets[j] != expected) {
                    item.pass = false;
                    item.witness = "j=" + std::to_string(j) + " " +
                                   coeff_witness(l, std::to_string(expected),
                                                 std::to_string(stats[l].cluster_buckets[j]));
                    break;
                }
            }
        }
        report.items.push_back(std::move(item));
    }
    {
        BatteryItem item{"mass_upper_bound", true, ""};
        const Rational bp(int_pow(Int(b), static_cast<unsigned long>(p)));
        Rational running(0);
        for (unsigned k = 0; k <= opts.max_k; ++k) {
            running += mass(block, k);
            const Rational bound = Rational(static_cast<unsigned long>(p)) *
                                   Rational(static_cast<unsigned long>(k + 1)) * bp;
            if (running > bound) {
                item.pass = false;
                item.witness = "k=" + std::to_string(k) + " sum=" + rational_str(running) +
                               " bound=" + rational_str(bound);
                break;
            }
        }
        report.items.push_back(std::move(item));
    }
    return report;
}

} // namespace blockmass
