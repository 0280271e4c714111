#include <doctest.h>

#include <random>
#include <stdexcept>

#include "listsched/rational.hpp"
#include "listsched/time.hpp"
#include "oracles.hpp"

using namespace listsched;

TEST_CASE("rational normalizes sign and common factors") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic and ordering") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational overflow is reported, not wrapped") {
    Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
    CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
    Rational tiny(1, std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(tiny * Rational(1, 3), std::overflow_error);
}

TEST_CASE("rational text") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("+5/1") == Rational(5));
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("surd field operations") {
    const Surd one_plus_r2(1, 1);
    CHECK(one_plus_r2 + one_plus_r2 == Surd(2, 2));
    CHECK(one_plus_r2 * one_plus_r2 == Surd(3, 2)); // 1 + 2r2 + 2
    CHECK(Surd(1) / one_plus_r2 == Surd(-1, 1));    // r2 - 1
    CHECK(Surd(4, 3) / Surd(2, 2) == Surd(Rational(1), Rational(1, 2)));
    CHECK_THROWS_AS(Surd(1) / Surd(0), std::domain_error);
}

TEST_CASE("surd sign and order near cancellation") {
    // 99/70 and 140/99 are convergents of r2 on either side.
    CHECK(Surd(Rational(-99, 70), 1).sign() < 0);
    CHECK(Surd(Rational(-140, 99), 1).sign() > 0);
    CHECK(Surd(3, -2).sign() > 0); // 3 - 2.828
    CHECK(Surd(-3, 2).sign() < 0);
    CHECK(Surd(0, 0).sign() == 0);
    CHECK(Surd(2, 2) > Surd(Rational(5, 2), Rational(3, 2)));
    CHECK(Surd(4, 3) > Surd(8));
    CHECK(Surd(4, 3) < Surd(9));
}

TEST_CASE("surd floor and decimal rendering") {
    CHECK(Surd(0, 1).floor() == 1);
    CHECK(Surd(0, -1).floor() == -2);
    CHECK(Surd(Rational(7, 2)).floor() == 3);
    CHECK(to_decimal(Surd(Rational(4, 3))) == "1.3333");
    CHECK(to_decimal(Surd(Rational(5, 3))) == "1.6667");
    CHECK(to_decimal(Surd(Rational(2549, 2500))) == "1.0196");
    CHECK(to_decimal(Surd(Rational(10099, 10000))) == "1.0099");
    CHECK(to_decimal(Surd(1)) == "1.0000");
    CHECK(to_decimal(Surd(Rational(1), Rational(1, 2))) == "1.7071");
    // half-up at an exact tie
    CHECK(to_decimal(Surd(Rational(12345, 100000))) == "0.1235");
    CHECK(to_decimal(Surd(Rational(3, 2)), 0) == "2");
    CHECK(to_decimal(Surd(Rational(-1, 4)), 1) == "-0.2");
}

TEST_CASE("surd compact text") {
    CHECK(Surd(4, 3).to_string() == "4+3r2");
    CHECK(Surd(2, -1).to_string() == "2-1r2");
    CHECK(Surd(0, 3).to_string() == "3r2");
    CHECK(Surd(Rational(3, 2)).to_string() == "3/2");
    CHECK(Surd(Rational(1, 2), Rational(3, 4)).to_string() == "1/2+3/4r2");
}

TEST_CASE("time rejects negative values") {
    CHECK_THROWS_AS(Time(-1), std::invalid_argument);
    CHECK_THROWS_AS(Time(Surd(1, -1)), std::invalid_argument);
    CHECK_NOTHROW(Time(Surd(2, -1)));
    CHECK_THROWS_AS(Time(1) - Time(2), std::invalid_argument);
    CHECK(Time(3) - Time(2) == Time(1));
    CHECK(Time(Surd(1, 1)).scaled(2) == Time(Surd(2, 2)));
}

TEST_CASE("time instance-file syntax") {
    CHECK(Time(3).to_string() == "3");
    CHECK(Time(Rational(3, 2)).to_string() == "3/2");
    CHECK(Time(Surd(1, 1)).to_string() == "1 + 1 r2");
    CHECK(Time(Surd(Rational(1, 2), Rational(-1, 3))).to_string() == "1/2 + -1/3 r2");
    CHECK(Time::parse("7") == Time(7));
    CHECK(Time::parse("  2/4 ") == Time(Rational(1, 2)));
    CHECK(Time::parse("1/1 + 1/1 r2") == Time(Surd(1, 1)));
    CHECK(Time::parse("2 + 2 r2") == Time(Surd(2, 2)));
    CHECK_THROWS_AS(Time::parse("1 + 1"), std::invalid_argument);
    CHECK_THROWS_AS(Time::parse("1 - 1 r2"), std::invalid_argument);
    CHECK_THROWS_AS(Time::parse("-2"), std::invalid_argument);
    CHECK_THROWS_AS(Time::parse(""), std::invalid_argument);
}

TEST_CASE("property: sign of a + b r2 matches 200-digit evaluation") {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::int64_t> num(-1'000'000, 1'000'000);
    std::uniform_int_distribution<std::int64_t> den(1, 10'000);
    std::uniform_int_distribution<int> pick(0, 9);
    // Pell solutions p^2 - 2 q^2 = +-1 give the closest cancellations.
    const std::vector<std::pair<std::int64_t, std::int64_t>> pell{
        {1, 1}, {3, 2}, {7, 5}, {17, 12}, {41, 29}, {99, 70}, {239, 169}, {577, 408}, {1393, 985}, {3363, 2378}};

    for (int trial = 0; trial < 10'000; ++trial) {
        Rational a, b;
        if (pick(rng) == 0) {
            auto [p, q] = pell[static_cast<std::size_t>(pick(rng))];
            std::int64_t k = den(rng);
            bool flip = pick(rng) % 2;
            a = Rational(flip ? -p : p, k);
            b = Rational(flip ? q : -q, k);
        } else {
            a = Rational(num(rng), den(rng));
            b = Rational(num(rng), den(rng));
        }
        const Surd x(a, b);
        oracles::Decimal200 v = oracles::Decimal200(a.num()) / a.den() +
                                oracles::Decimal200(b.num()) / b.den() * oracles::sqrt2_200();
        const int expected = v > 0 ? 1 : (v < 0 ? -1 : 0);
        REQUIRE_MESSAGE(x.sign() == expected, "a=" << a << " b=" << b);
    }
}

TEST_CASE("property: instance-file time text round-trips byte for byte") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(0, 5000);
    std::uniform_int_distribution<std::int64_t> signed_num(-500, 500);
    std::uniform_int_distribution<std::int64_t> den(1, 60);
    for (int i = 0; i < 2000; ++i) {
        Surd s(Rational(num(rng) + 1000, den(rng)), i % 3 ? Rational(signed_num(rng), den(rng)) : Rational(0));
        if (s.sign() <= 0) continue;
        Time t(s);
        std::string text = t.to_string();
        Time back = Time::parse(text);
        REQUIRE(back == t);
        REQUIRE(back.to_string() == text);
    }
}
