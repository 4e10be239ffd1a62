#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blockmass/automaton.hpp"
#include "blockmass/genfun.hpp"
#include "blockmass/words.hpp"

#include <random>

using namespace blockmass;

namespace {

Rational q(long num, long den = 1)
{
    return make_rational(Int(num), Int(den));
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

TEST_CASE("single-digit block automaton")
{
    const OccurrenceAutomaton a(Block(2, {1}));
    CHECK(a.state_count() == 1);
    CHECK(a.next(0, 0) == 0);
    CHECK(a.next(0, 1) == 0);
    CHECK_FALSE(a.emits(0, 0));
    CHECK(a.emits(0, 1));
}

TEST_CASE("overlap is retained after an emission")
{
    const OccurrenceAutomaton a(Block(2, {1, 1}));
    CHECK(a.state_count() == 2);
    CHECK(a.next(0, 1) == 1);
    CHECK(a.next(1, 1) == 1);
    CHECK(a.emits(1, 1));
    CHECK_FALSE(a.emits(0, 1));
    CHECK(a.run(parse_digit_string(2, "1111")).emissions == 3);
}

TEST_CASE("structural invariants over every small block")
{
    for (unsigned base : {2u, 3u}) {
        for (const auto& w : all_blocks(base, 4)) {
            const OccurrenceAutomaton a(w);
            const unsigned p = a.state_count();
            for (unsigned state = 0; state < p; ++state) {
                for (std::uint32_t d = 0; d < base; ++d) {
                    CHECK(a.next(state, d) <= std::min(state + 1, p - 1));
                    const bool should_emit =
                        state == p - 1 && d == w.digits().back();
                    CHECK(a.emits(state, d) == should_emit);
                }
            }
        }
    }
}

TEST_CASE("automaton emissions equal the scanning oracle")
{
    std::mt19937 rng(20240810);
    const std::vector<Block> blocks = {Block(2, {1, 1}), Block(2, {1, 0, 1}),
                                       Block(3, {0, 2, 0}), Block(10, {4, 2})};
    for (const auto& w : blocks) {
        const OccurrenceAutomaton a(w);
        std::uniform_int_distribution<std::size_t> len(0, 24);
        std::uniform_int_distribution<std::uint32_t> digit(0, w.base() - 1);
        for (int trial = 0; trial < 10000 / 4; ++trial) {
            std::vector<std::uint32_t> digits(len(rng));
            for (auto& d : digits) {
                d = digit(rng);
            }
            const DigitString x(w.base(), digits);
            CHECK(a.run(x).emissions == count_occurrences(x, w));
        }
    }
}

TEST_CASE("mass table solves the defining system")
{
    SUBCASE("base 2 single digit: every row is 2")
    {
        MassTable table{OccurrenceAutomaton(Block(2, {1}))};
        for (unsigned j = 0; j <= 5; ++j) {
            CHECK(table.value(j, 0) == q(2));
        }
    }
    SUBCASE("m_j at the suffix state is b^p for every j")
    {
        for (unsigned base : {2u, 3u}) {
            for (const auto& w : all_blocks(base, 3)) {
                const OccurrenceAutomaton a(w);
                MassTable table{a};
                const auto run = a.run(w.suffix());
                REQUIRE(run.emissions == 0);
                const Rational bp(int_pow(Int(base), static_cast<unsigned long>(w.length())));
                for (unsigned j = 0; j <= 4; ++j) {
                    CHECK(table.value(j, run.state) == bp);
                }
            }
        }
    }
    SUBCASE("m_j at the start state is the total mass M_w(j)")
    {
        for (unsigned base : {2u, 3u}) {
            for (const auto& w : all_blocks(base, 3)) {
                MassTable table{OccurrenceAutomaton(w)};
                for (unsigned j = 0; j <= 4; ++j) {
                    CHECK(table.value(j, 0) == mass(w, j));
                }
            }
        }
    }
    SUBCASE("defining recurrence holds entrywise")
    {
        const Block w(3, {1, 0});
        const OccurrenceAutomaton a(w);
        MassTable table{a};
        const Rational inv_b = q(1, 3);
        for (unsigned j = 0; j <= 3; ++j) {
            for (unsigned state = 0; state < a.state_count(); ++state) {
                Rational rhs(j == 0 ? 1 : 0);
                Rational delta(0);
                for (std::uint32_t d = 0; d < 3; ++d) {
                    const unsigned succ = a.next(state, d);
                    if (a.emits(state, d)) {
                        if (j > 0) {
                            delta += table.value(j - 1, succ);
                        }
                    } else {
                        delta += table.value(j, succ);
                    }
                }
                CHECK(table.value(j, state) == rhs + inv_b * delta);
            }
        }
    }
}

TEST_CASE("prefix masses realize the total-mass theorem")
{
    SUBCASE("empty prefix, k >= 1")
    {
        for (const auto& w : all_blocks(2, 3)) {
            MassTable table{OccurrenceAutomaton(w)};
            const Rational bp(int_pow(Int(2), static_cast<unsigned long>(w.length())));
            for (std::uint64_t k = 1; k <= 5; ++k) {
                CHECK(prefix_mass(table, DigitString(2, {}), k) == bp);
            }
        }
    }
    SUBCASE("impossible prefix has zero mass")
    {
        CHECK(prefix_mass(Block(2, {1, 1}), parse_digit_string(2, "1111"), 2) == q(0));
    }
    SUBCASE("stabilized value b^{p - |s|} for every k above 1 + k*")
    {
        const Block w(2, {1, 1});
        MassTable table{OccurrenceAutomaton(w)};
        for (std::size_t len = 0; len <= 4; ++len) {
            for_each_string(2, len, [&](const std::vector<std::uint32_t>& digits) {
                const DigitString s(2, digits);
                const std::uint64_t ks = k_star(s, w);
                const Rational expected =
                    rational_pow(Rational(2), 2 - static_cast<long>(len));
                for (std::uint64_t k = ks + 1; k <= 6; ++k) {
                    CHECK(prefix_mass(table, s, k) == expected);
                }
            });
        }
    }
    SUBCASE("per-digit masses and their sum")
    {
        for (unsigned base : {2u, 3u}) {
            for (const auto& w : all_blocks(base, 3)) {
                MassTable table{OccurrenceAutomaton(w)};
                const Rational per_digit =
                    rational_pow(Rational(base), static_cast<long>(w.length()) - 1);
                for (std::uint64_t k = 1; k <= 4; ++k) {
                    Rational total(0);
                    for (std::uint32_t d = 1; d < base; ++d) {
                        const Rational m = prefix_mass(table, DigitString(base, {d}), k);
                        CHECK(m == per_digit);
                        total += m;
                    }
                    CHECK(total == Rational(base - 1) * per_digit);
                }
            }
        }
    }
}

TEST_CASE("prefix mass partitions across all (p-1)-extensions")
{
    for (const Block& w : {Block(2, {1, 1}), Block(3, {1, 0}), Block(2, {1, 0, 1})}) {
        const unsigned base = w.base();
        const std::size_t overlap = w.length() - 1;
        const OccurrenceAutomaton a(w);
        MassTable table{a};
        const Rational weight =
            rational_pow(Rational(base), -static_cast<long>(overlap));
        for (std::size_t len = 0; len <= 3; ++len) {
            for_each_string(base, len, [&](const std::vector<std::uint32_t>& sd) {
                const DigitString s(base, sd);
                const std::uint64_t ks = k_star(s, w);
                for (std::uint64_t k = ks + 1; k <= 6; ++k) {
                    Rational total(0);
                    for_each_string(base, overlap, [&](const std::vector<std::uint32_t>& zd) {
                        std::vector<std::uint32_t> sz = sd;
                        sz.insert(sz.end(), zd.begin(), zd.end());
                        const std::uint64_t k_sz =
                            count_occurrences(DigitString(base, sz), w);
                        const auto run_z = a.run(zd);
                        REQUIRE(run_z.emissions == 0);
                        if (k >= k_sz) {
                            total += weight * table.value(
                                    static_cast<unsigned>(k - k_sz), run_z.state);
                        }
                    });
                    const Rational direct =
                        prefix_mass(table, s, k) *
                        rational_pow(Rational(base), static_cast<long>(s.length()));
                    CHECK(total == direct);
                }
            });
        }
    }
}

TEST_CASE("stratified generating functions reproduce the closed forms")
{
    CHECK(stratified_gf(Block(2, {1, 1}), 0) ==
          RationalFunction(Polynomial{1, 1}, Polynomial{1, -1, -1}));
    CHECK(stratified_gf(Block(2, {1}), 1) ==
          RationalFunction(Polynomial::monomial(1), Polynomial{1, -2, 1}));
    CHECK(stratified_gf(Block(3, {1, 0}), 2) == gf_k(Block(3, {1, 0}), 2));

    for (unsigned base : {2u, 3u}) {
        for (const auto& w : all_blocks(base, 2)) {
            for (unsigned k = 0; k <= 4; ++k) {
                CHECK(stratified_gf(w, k) == gf_k(w, k));
            }
        }
    }
}
