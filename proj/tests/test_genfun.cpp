#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blockmass/errors.hpp"
#include "blockmass/genfun.hpp"
#include "blockmass/words.hpp"

#include <vector>

using namespace blockmass;

namespace {

Rational q(long num, long den = 1)
{
    return make_rational(Int(num), Int(den));
}

Rational inv_base(const Block& w)
{
    return make_rational(Int(1), Int(w.base()));
}

std::vector<Block> all_blocks(unsigned base, std::size_t max_len)
{
    std::vector<Block> out;
    for (std::size_t p = 1; p <= max_len; ++p) {
        for_each_string(base, p, [&](const std::vector<std::uint32_t>& digits) {
            out.emplace_back(base, digits);
        });
    }
    return out;
}

} // namespace

TEST_CASE("autocorrelation of the classic shapes")
{
    CHECK(autocorrelation(Block(2, {1, 1, 1})).polynomial() == Polynomial{1, 1, 1});
    CHECK(autocorrelation(Block(2, {0, 1, 0})).polynomial() == Polynomial{1, 0, 1});
    CHECK(autocorrelation(Block(2, {0, 1})).polynomial() == Polynomial{1});
    CHECK(autocorrelation(Block(10, {9, 4, 2})).polynomial() == Polynomial{1});
    CHECK(autocorrelation(Block(3, {2})).polynomial() == Polynomial{1});

    const auto corr = autocorrelation(Block(2, {1, 0, 1}));
    CHECK(corr.positive_periods() == std::vector<unsigned>{2});
}

TEST_CASE("correlation invariants across every small block")
{
    for (unsigned base : {2u, 3u}) {
        for (const auto& w : all_blocks(base, 4)) {
            const auto corr = autocorrelation(w);
            REQUIRE(corr.flags.size() == w.length());
            CHECK(corr.flags[0] == 1);
            if (w.length() >= 2 && corr.flags[1] == 1) {
                for (auto flag : corr.flags) {
                    CHECK(flag == 1);
                }
            }
            // The reversed block has the same correlation.
            CHECK(autocorrelation(reverse(w)).flags == corr.flags);
        }
    }
}

TEST_CASE("gf_zero closed forms")
{
    CHECK(gf_zero(Block(2, {1, 1})) ==
          RationalFunction(Polynomial{1, 1}, Polynomial{1, -1, -1}));
    CHECK(gf_zero(Block(10, {9})) ==
          RationalFunction(Polynomial::one(), Polynomial{1, -9}));

    for (unsigned base : {2u, 3u}) {
        for (const auto& w : all_blocks(base, 3)) {
            const auto corr = autocorrelation(w);
            const Rational at_inv_b = gf_denominator(corr).evaluate(inv_base(w));
            CHECK(at_inv_b == rational_pow(Rational(base), -static_cast<long>(w.length())));
        }
    }
}

TEST_CASE("spec anchor: Z_w(0) at 1/2 for w=11 in base 2")
{
    CHECK(gf_zero(Block(2, {1, 1})).evaluate(q(1, 2)) == q(6));
}

TEST_CASE("suffix-prefixed masses via gf_v0 and the loop factor")
{
    CHECK(gf_v0(Block(2, {1})) == RationalFunction(Polynomial::one(), Polynomial{1, -1}));
    for (unsigned base : {2u, 3u, 10u}) {
        for (const auto& w : all_blocks(base, base == 10 ? 2 : 3)) {
            const Rational x = inv_base(w);
            CHECK(gf_v0(w).evaluate(x) == Rational(base));
            CHECK(gf_loop(w).evaluate(x) == Rational(1));
            const long p = static_cast<long>(w.length());
            CHECK(gf_v0u(w).evaluate(x) == rational_pow(Rational(base), 2 - p));
        }
    }
}

TEST_CASE("gf_k closed forms and masses")
{
    CHECK(gf_k(Block(2, {1}), 1) ==
          RationalFunction(Polynomial::monomial(1), Polynomial{1, -2, 1}));
    CHECK(gf_k(Block(2, {1, 1}), 0) == gf_zero(Block(2, {1, 1})));

    for (unsigned base : {2u, 3u}) {
        for (const auto& w : all_blocks(base, 3)) {
            const Rational bp(int_pow(Int(base), static_cast<unsigned long>(w.length())));
            for (unsigned k = 1; k <= 4; ++k) {
                CHECK(mass(w, k) == bp);
            }
            CHECK(mass(w, 0) ==
                  bp * autocorrelation(w).polynomial().evaluate(inv_base(w)));
        }
    }
}

TEST_CASE("mass worked examples")
{
    CHECK(mass(Block(2, {1, 1, 1}), 0) == q(14));
    CHECK(mass(Block(2, {1, 0}), 0) == q(4)); // trivial correlation: b^p
    CHECK(mass(Block(10, {4, 2}), 1) == q(100));
    CHECK(mass(Block(2, {1}), 3) == q(2));
}

TEST_CASE("series coefficients equal brute-force counts")
{
    for (unsigned base : {2u, 3u}) {
        for (const auto& w : all_blocks(base, 3)) {
            const std::size_t maxlen = base == 2 ? 9 : 7;
            const auto census = occurrence_census(w, maxlen);
            for (unsigned k = 0; k <= 5; ++k) {
                const auto coeffs = gf_k(w, k).series_coefficients(maxlen);
                for (std::size_t l = 0; l <= maxlen; ++l) {
                    const std::uint64_t expected =
                        k < census[l].size() ? census[l][k] : 0;
                    CHECK(coeffs[l] == Rational(static_cast<unsigned long>(expected)));
                }
            }
        }
    }
}

TEST_CASE("denominator of gf_k keeps 1/b inside the convergence disk")
{
    for (const auto& w : all_blocks(2, 3)) {
        for (unsigned k = 0; k <= 5; ++k) {
            const auto rf = gf_k(w, k);
            const Rational expected = rational_pow(
                Rational(2), -static_cast<long>(w.length() * (k + 1)));
            CHECK(rf.den().evaluate(inv_base(w)) == expected);
        }
    }
}

TEST_CASE("reversal leaves gf_zero unchanged")
{
    for (unsigned base : {2u, 3u}) {
        for (const auto& w : all_blocks(base, 4)) {
            CHECK(gf_zero(w) == gf_zero(reverse(w)));
        }
    }
}

TEST_CASE("gf_k respects the configured k cap")
{
    CHECK_THROWS_AS(gf_k(Block(2, {1}), 65), CapExceeded);
    CHECK_NOTHROW(gf_k(Block(2, {1}), 65, 70));
}

TEST_CASE("identity battery passes on honest builds")
{
    BatteryOptions opts;
    opts.max_length = 12;
    opts.max_k = 4;
    const auto report = identity_battery(Block(2, {1, 1}), opts);
    for (const auto& item : report.items) {
        INFO(item.name, ": ", item.witness);
        CHECK(item.pass);
    }
    CHECK(report.all_pass());
    CHECK(report.first_failure() == nullptr);

    BatteryOptions zero_opts;
    zero_opts.max_length = 8;
    zero_opts.max_k = 3;
    CHECK(identity_battery(Block(3, {0}), zero_opts).all_pass());
    CHECK(identity_battery(Block(10, {0, 9}), {6, 2}).all_pass());
}

TEST_CASE("identity battery catches a corrupted correlation")
{
    BatteryOptions opts;
    opts.max_length = 8;
    opts.max_k = 2;
    opts.corrupt_autocorrelation = true;
    for (const Block& w : {Block(2, {1, 1}), Block(2, {1, 0, 1}), Block(3, {2})}) {
        const auto report = identity_battery(w, opts);
        CHECK_FALSE(report.all_pass());
        REQUIRE(report.first_failure() != nullptr);
        CHECK(report.first_failure()->name == "lemma_c_v0");
        CHECK_FALSE(report.first_failure()->witness.empty());
    }
}
