#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "blockmass/errors.hpp"
#include "blockmass/linear_solve.hpp"
#include "blockmass/polynomial.hpp"
#include "blockmass/rational.hpp"
#include "blockmass/rational_function.hpp"

#include <random>
#include <vector>

using namespace blockmass;

namespace {

Rational q(long num, long den = 1)
{
    return make_rational(Int(num), Int(den));
}

Polynomial random_poly(std::mt19937& rng, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) {
        x = q(coeff(rng), den(rng));
    }
    return Polynomial(std::move(c));
}

} // namespace

TEST_CASE("rational serialization is always num/den")
{
    CHECK(rational_str(q(100)) == "100/1");
    CHECK(rational_str(q(6, 8)) == "3/4");
    CHECK(rational_str(q(-6, 8)) == "-3/4");
    CHECK(parse_rational("42/1000") == q(42, 1000));
    CHECK(parse_rational("-7") == q(-7));
    CHECK_THROWS_AS(parse_rational("x/y"), std::invalid_argument);
    CHECK_THROWS_AS(make_rational(Int(1), Int(0)), std::invalid_argument);
}

TEST_CASE("directed scaling roundings")
{
    CHECK(floor_scaled(q(1, 3), 4) == 5);  // 16/3 = 5.33..
    CHECK(ceil_scaled(q(1, 3), 4) == 6);
    CHECK(floor_scaled(q(1, 2), 4) == 8);
    CHECK(ceil_scaled(q(1, 2), 4) == 8);
    CHECK(floor_scaled(q(-1, 3), 4) == -6);
    CHECK(ceil_scaled(q(-1, 3), 4) == -5);
}

TEST_CASE("polynomial ring arithmetic")
{
    const Polynomial one_plus_t{1, 1};
    const Polynomial one_minus_t{1, -1};
    CHECK(one_plus_t * one_minus_t == Polynomial{1, 0, -1});
    CHECK(Polynomial{1, 1, 1} * one_minus_t == Polynomial{1, 0, 0, -1});

    const Polynomial p{3, 0, 2};
    CHECK(p + Polynomial() == p);
    CHECK(p - p == Polynomial());
    CHECK((p - p).is_zero());
    CHECK(Polynomial().degree() == -1);
    CHECK(p.degree() == 2);
    CHECK(p.evaluate(q(1, 2)) == q(7, 2));
    CHECK(p.shifted(2) == Polynomial{0, 0, 3, 0, 2});
    CHECK(Polynomial{1, 1}.pow(2) == Polynomial{1, 2, 1});
}

TEST_CASE("polynomial gcd is primitive with positive leading coefficient")
{
    const Polynomial a = Polynomial{1, 1} * Polynomial{1, 0, -2};
    const Polynomial b = Polynomial{2, 2} * Polynomial{3, 1};
    CHECK(poly_gcd(a, b) == Polynomial{1, 1});
    CHECK(poly_gcd(Polynomial(), Polynomial{0, -4}) == Polynomial{0, 1});
    CHECK(poly_gcd(Polynomial(), Polynomial()).is_zero());
}

TEST_CASE("series expansion by the division recurrence")
{
    // (1+t)/(1-t-t^2): shifted Fibonacci numbers.
    const RationalFunction fib(Polynomial{1, 1}, Polynomial{1, -1, -1});
    const auto coeffs = fib.series_coefficients(6);
    const long expected[] = {1, 2, 3, 5, 8, 13, 21};
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(coeffs[i] == q(expected[i]));
    }

    const RationalFunction geo(Polynomial::one(), Polynomial{1, -9});
    const auto g = geo.series_coefficients(3);
    CHECK(g == std::vector<Rational>{q(1), q(9), q(81), q(729)});

    const auto c = RationalFunction::constant(q(1)).series_coefficients(2);
    CHECK(c == std::vector<Rational>{q(1), q(0), q(0)});

    CHECK_THROWS_AS(RationalFunction::monomial_power(-1).series_coefficients(1),
                    std::domain_error);
}

TEST_CASE("series of a product is the Cauchy convolution")
{
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial da = random_poly(rng, 3);
        Polynomial db = random_poly(rng, 3);
        // Force nonzero constant terms so both factors expand at 0.
        da += Polynomial::one();
        db += Polynomial{2};
        if (sgn(da.coeff(0)) == 0 || sgn(db.coeff(0)) == 0) {
            continue;
        }
        const RationalFunction ra(random_poly(rng, 3), da);
        const RationalFunction rb(random_poly(rng, 3), db);
        const auto sa = ra.series_coefficients(8);
        const auto sb = rb.series_coefficients(8);
        const auto sp = (ra * rb).series_coefficients(8);
        for (std::size_t n = 0; n <= 8; ++n) {
            Rational conv(0);
            for (std::size_t i = 0; i <= n; ++i) {
                conv += sa[i] * sb[n - i];
            }
            CHECK(conv == sp[n]);
        }
    }
}

TEST_CASE("evaluation agrees with truncated series inside the disk")
{
    const RationalFunction geo(Polynomial::one(), Polynomial{1, -9});
    const Rational x = q(1, 10);
    const Rational value = geo.evaluate(x); // 1/(1 - 9/10) = 10
    CHECK(value == q(10));
    const auto coeffs = geo.series_coefficients(40);
    Rational partial(0);
    Rational xp(1);
    for (const auto& c : coeffs) {
        partial += c * xp;
        xp *= x;
    }
    // Tail of the geometric series: 10 * (9/10)^41.
    CHECK(partial < value);
    CHECK(value - partial == q(10) * rational_pow(q(9, 10), 41));
}

TEST_CASE("rational function canonical form")
{
    // (3/2 + 3/2 t) / 3 -> (1 + t)/2.
    const RationalFunction r(Polynomial({q(3, 2), q(3, 2)}), Polynomial({q(3)}));
    CHECK(r.num() == Polynomial{1, 1});
    CHECK(r.den() == Polynomial{2});

    // Common factors cancel and the denominator constant term is positive:
    // (-2t - 2t^2) / (-2 + 2t^2) = t / (1 - t).
    const RationalFunction s(Polynomial{0, -2, -2}, Polynomial{-2, 0, 2});
    CHECK(s.num() == Polynomial{0, 1});
    CHECK(s.den() == Polynomial{1, -1});

    // t^{p-1}/t^{p-1} intermediates reduce away.
    const RationalFunction shift =
        RationalFunction(Polynomial{0, 0, 5}, Polynomial{1, 1}) *
        RationalFunction::monomial_power(-2);
    CHECK(shift.num() == Polynomial{5});
    CHECK(shift.den() == Polynomial{1, 1});

    CHECK(RationalFunction(Polynomial(), Polynomial{7}).den() == Polynomial{1});
}

TEST_CASE("normalization is idempotent")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial den = random_poly(rng, 4);
        if (den.is_zero()) {
            den = Polynomial::one();
        }
        const RationalFunction r(random_poly(rng, 4), den);
        const RationalFunction again(r.num(), r.den());
        CHECK(r == again);
    }
}

TEST_CASE("evaluate at a pole throws")
{
    const RationalFunction r(Polynomial::one(), Polynomial{1, -1});
    CHECK_THROWS_AS(r.evaluate(q(1)), std::domain_error);
    CHECK(r.evaluate(q(0)) == q(1));
}

TEST_CASE("linear solver on exact rationals")
{
    using Row = std::vector<Rational>;
    SUBCASE("identity")
    {
        std::vector<Row> a{{q(1), q(0)}, {q(0), q(1)}};
        std::vector<Rational> rhs{q(3), q(-5, 7)};
        CHECK(solve_linear_system(a, rhs) == rhs);
    }
    SUBCASE("mass system for the single-digit block in base 2")
    {
        std::vector<Row> a{{q(1, 2)}};
        std::vector<Rational> rhs{q(1)};
        CHECK(solve_linear_system(a, rhs) == std::vector<Rational>{q(2)});
    }
    SUBCASE("singular matrix throws")
    {
        std::vector<Row> a{{q(1), q(2)}, {q(2), q(4)}};
        std::vector<Rational> rhs{q(1), q(2)};
        CHECK_THROWS_AS(solve_linear_system(a, rhs), SingularMatrix);
    }
    SUBCASE("pivoting handles a zero leading entry")
    {
        std::vector<Row> a{{q(0), q(1)}, {q(1), q(0)}};
        std::vector<Rational> rhs{q(4), q(9)};
        const auto x = solve_linear_system(a, rhs);
        CHECK(x == std::vector<Rational>{q(9), q(4)});
    }
}

TEST_CASE("linear solver over the rational function field")
{
    const RationalFunction t = RationalFunction::monomial_power(1);
    const RationalFunction one = RationalFunction::constant(q(1));
    // [[1, -t], [-t, 1]] x = [1, 0]  =>  x0 = 1/(1-t^2).
    std::vector<std::vector<RationalFunction>> a{{one, -t}, {-t, one}};
    std::vector<RationalFunction> rhs{one, RationalFunction()};
    const auto x = solve_linear_system(a, rhs);
    CHECK(x[0] == RationalFunction(Polynomial::one(), Polynomial{1, 0, -1}));
    CHECK(x[1] == RationalFunction(Polynomial::monomial(1), Polynomial{1, 0, -1}));
}
