#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace listsched {

// Exact rational number with 64-bit numerator and denominator.
//
// Always normalized: den > 0 and gcd(|num|, den) == 1. Intermediate
// products are formed in 128 bits; a result that does not fit back into
// 64 bits throws std::overflow_error rather than wrapping.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {} // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den);

    [[nodiscard]] constexpr std::int64_t num() const { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const { return den_; }
    [[nodiscard]] constexpr int sign() const { return (num_ > 0) - (num_ < 0); }
    [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }
    [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }

    // Largest integer <= *this.
    [[nodiscard]] std::int64_t floor() const;
    [[nodiscard]] double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "p" when the denominator is 1, otherwise "p/q".
    [[nodiscard]] std::string to_string() const;
    // Accepts "p", "p/q", with optional leading sign on p. Throws
    // std::invalid_argument on malformed text or a zero denominator.
    static Rational parse(std::string_view text);

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

} // namespace listsched
