#include "listsched/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace listsched {

namespace {

using wide = __int128;
using uwide = unsigned __int128;

uwide gcd(uwide a, uwide b) {
    while (b != 0) {
        uwide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

uwide magnitude(wide v) { return v < 0 ? uwide(0) - uwide(v) : uwide(v); }

bool fits(wide v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    return value;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    *this = from_wide(num, den);
}

Rational Rational::from_wide(wide num, wide den) {
    if (den == 0) throw std::domain_error("division by zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    uwide g = gcd(magnitude(num), uwide(den));
    if (g > 1) {
        num /= wide(g);
        den /= wide(g);
    }
    if (!fits(num) || !fits(den)) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    std::int64_t num = parse_int(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw std::invalid_argument("signed denominator in '" + std::string(text) + "'");
    std::int64_t den = parse_int(den_text);
    return Rational(num, den);
}

Rational Rational::operator-() const { return from_wide(-wide(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) return *this = from_wide(wide(num_) + rhs.num_, den_);
    return *this = from_wide(wide(num_) * rhs.den_ + wide(rhs.num_) * den_, wide(den_) * rhs.den_);
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (den_ == rhs.den_) return *this = from_wide(wide(num_) - rhs.num_, den_);
    return *this = from_wide(wide(num_) * rhs.den_ - wide(rhs.num_) * den_, wide(den_) * rhs.den_);
}

Rational& Rational::operator*=(const Rational& rhs) {
    return *this = from_wide(wide(num_) * rhs.num_, wide(den_) * rhs.den_);
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("division by zero");
    return *this = from_wide(wide(num_) * rhs.den_, wide(den_) * rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
    return wide(lhs.num_) * rhs.den_ <=> wide(rhs.num_) * lhs.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

} // namespace listsched
