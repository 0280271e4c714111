#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "listsched/rational.hpp"

namespace listsched {

// An element a + b*sqrt(2) of the field Q(sqrt 2), with a and b rational.
//
// All operations are exact. Ordering decides the sign of a + b*sqrt(2) by
// comparing a^2 with 2*b^2 when a and b have opposite signs.
class Surd {
public:
    constexpr Surd() = default;
    constexpr Surd(Rational rational) : rational_(rational) {} // NOLINT(implicit)
    constexpr Surd(std::int64_t value) : rational_(value) {}   // NOLINT(implicit)
    constexpr Surd(Rational rational, Rational root2) : rational_(rational), root2_(root2) {}

    // The rational part a.
    [[nodiscard]] constexpr const Rational& rational() const { return rational_; }
    // The coefficient b of sqrt(2).
    [[nodiscard]] constexpr const Rational& root2() const { return root2_; }
    [[nodiscard]] constexpr bool is_rational() const { return root2_.is_zero(); }

    [[nodiscard]] int sign() const;
    [[nodiscard]] std::int64_t floor() const;
    [[nodiscard]] double to_double() const;

    // Compact rendering used in reports: "3", "3/2", "4+3r2", "2-1r2", "1/2r2".
    [[nodiscard]] std::string to_string() const;

    Surd operator-() const { return {-rational_, -root2_}; }
    Surd& operator+=(const Surd& rhs);
    Surd& operator-=(const Surd& rhs);
    Surd& operator*=(const Surd& rhs);
    // Rationalizes the denominator: (x)/(c + d r2) = x (c - d r2) / (c^2 - 2 d^2).
    Surd& operator/=(const Surd& rhs);

    friend Surd operator+(Surd lhs, const Surd& rhs) { return lhs += rhs; }
    friend Surd operator-(Surd lhs, const Surd& rhs) { return lhs -= rhs; }
    friend Surd operator*(Surd lhs, const Surd& rhs) { return lhs *= rhs; }
    friend Surd operator/(Surd lhs, const Surd& rhs) { return lhs /= rhs; }

    friend constexpr bool operator==(const Surd&, const Surd&) = default;
    friend std::strong_ordering operator<=>(const Surd& lhs, const Surd& rhs);

private:
    Rational rational_;
    Rational root2_;
};

std::ostream& operator<<(std::ostream& os, const Surd& value);

// Half-up rounding of a non-negative or negative value to `places` decimals,
// e.g. 4/3 -> "1.3333", 1+r2/2 -> "1.7071".
std::string to_decimal(const Surd& value, int places = 4);

// A non-negative amount of work (processing time, load, makespan).
//
// Wraps a Surd and rejects negative values at construction, so every Time
// in the program is >= 0. Subtraction throws if the result would be negative.
class Time {
public:
    constexpr Time() = default;
    Time(std::int64_t value) : Time(Surd(value)) {} // NOLINT(implicit)
    Time(Rational value) : Time(Surd(value)) {}     // NOLINT(implicit)
    explicit Time(Surd value);

    [[nodiscard]] constexpr const Surd& value() const { return value_; }
    [[nodiscard]] bool is_zero() const { return value_.sign() == 0; }

    [[nodiscard]] Time scaled(const Rational& factor) const { return Time(value_ * Surd(factor)); }

    // Instance-file syntax: "<a>" or "<a> + <b> r2", where a and b are
    // integers or "p/q" fractions. Parsing accepts the same grammar.
    [[nodiscard]] std::string to_string() const;
    static Time parse(std::string_view text);

    Time& operator+=(const Time& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    Time& operator-=(const Time& rhs);
    friend Time operator+(Time lhs, const Time& rhs) { return lhs += rhs; }
    friend Time operator-(Time lhs, const Time& rhs) { return lhs -= rhs; }

    friend constexpr bool operator==(const Time&, const Time&) = default;
    friend std::strong_ordering operator<=>(const Time& lhs, const Time& rhs) { return lhs.value_ <=> rhs.value_; }

private:
    Surd value_;
};

std::ostream& operator<<(std::ostream& os, const Time& value);

} // namespace listsched
