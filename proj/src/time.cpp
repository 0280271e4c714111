#include "listsched/time.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace listsched {

namespace {

using boost::multiprecision::int256_t;

// Compares a^2 against 2*b^2 for a = p/q, b = r/s, i.e. (p*s)^2 against 2*(r*q)^2.
std::strong_ordering compare_square_with_twice_square(const Rational& a, const Rational& b) {
    int256_t x = int256_t(a.num()) * b.den();
    int256_t y = int256_t(b.num()) * a.den();
    int256_t lhs = x * x;
    int256_t rhs = 2 * y * y;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::vector<std::string_view> split_ws(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) out.push_back(text.substr(start, i - start));
    }
    return out;
}

} // namespace

int Surd::sign() const {
    const int sa = rational_.sign();
    const int sb = root2_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: the larger of |a| and |b| sqrt 2 wins. Equality is
    // impossible because sqrt 2 is irrational and b != 0.
    auto cmp = compare_square_with_twice_square(rational_, root2_);
    return cmp == std::strong_ordering::greater ? sa : sb;
}

double Surd::to_double() const { return rational_.to_double() + root2_.to_double() * std::sqrt(2.0); }

std::int64_t Surd::floor() const {
    if (is_rational()) return rational_.floor();
    auto k = static_cast<std::int64_t>(std::floor(to_double()));
    while (Surd(k) > *this) --k;
    while (Surd(k + 1) <= *this) ++k;
    return k;
}

std::string Surd::to_string() const {
    if (root2_.is_zero()) return rational_.to_string();
    std::string coef = root2_.to_string() + "r2";
    if (rational_.is_zero()) return coef;
    if (root2_.sign() > 0) return rational_.to_string() + "+" + coef;
    return rational_.to_string() + coef; // coef carries its '-'
}

Surd& Surd::operator+=(const Surd& rhs) {
    rational_ += rhs.rational_;
    root2_ += rhs.root2_;
    return *this;
}

Surd& Surd::operator-=(const Surd& rhs) {
    rational_ -= rhs.rational_;
    root2_ -= rhs.root2_;
    return *this;
}

Surd& Surd::operator*=(const Surd& rhs) {
    if (is_rational() && rhs.is_rational()) {
        rational_ *= rhs.rational_;
        return *this;
    }
    Rational a = rational_ * rhs.rational_ + Rational(2) * root2_ * rhs.root2_;
    Rational b = rational_ * rhs.root2_ + root2_ * rhs.rational_;
    rational_ = a;
    root2_ = b;
    return *this;
}

Surd& Surd::operator/=(const Surd& rhs) {
    if (rhs.sign() == 0) throw std::domain_error("division by zero");
    if (rhs.is_rational()) {
        rational_ /= rhs.rational_;
        root2_ /= rhs.rational_;
        return *this;
    }
    Rational norm = rhs.rational_ * rhs.rational_ - Rational(2) * rhs.root2_ * rhs.root2_;
    *this *= Surd(rhs.rational_, -rhs.root2_);
    rational_ /= norm;
    root2_ /= norm;
    return *this;
}

std::strong_ordering operator<=>(const Surd& lhs, const Surd& rhs) {
    if (lhs.is_rational() && rhs.is_rational()) return lhs.rational_ <=> rhs.rational_;
    int s = (lhs - rhs).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Surd& value) { return os << value.to_string(); }

std::string to_decimal(const Surd& value, int places) {
    if (places < 0 || places > 18) throw std::invalid_argument("decimal places out of range");
    std::int64_t scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    std::int64_t k = (value * Surd(scale) + Surd(Rational(1, 2))).floor();
    std::ostringstream os;
    if (k < 0) {
        os << '-';
        k = -k;
    }
    os << k / scale;
    if (places > 0) {
        std::string frac = std::to_string(k % scale);
        os << '.' << std::string(static_cast<std::size_t>(places) - frac.size(), '0') << frac;
    }
    return os.str();
}

Time::Time(Surd value) : value_(value) {
    if (value_.sign() < 0) throw std::invalid_argument("negative time " + value_.to_string());
}

Time& Time::operator-=(const Time& rhs) {
    Surd diff = value_ - rhs.value_;
    if (diff.sign() < 0) throw std::invalid_argument("time subtraction would go negative");
    value_ = diff;
    return *this;
}

std::string Time::to_string() const {
    std::string out = value_.rational().to_string();
    if (!value_.is_rational()) out += " + " + value_.root2().to_string() + " r2";
    return out;
}

Time Time::parse(std::string_view text) {
    auto tokens = split_ws(text);
    if (tokens.size() == 1) return Time(Surd(Rational::parse(tokens[0])));
    if (tokens.size() == 4 && tokens[1] == "+" && tokens[3] == "r2")
        return Time(Surd(Rational::parse(tokens[0]), Rational::parse(tokens[2])));
    throw std::invalid_argument("malformed time '" + std::string(text) + "', expected '<a>[/<b>] [+ <c>[/<d>] r2]'");
}

std::ostream& operator<<(std::ostream& os, const Time& value) { return os << value.to_string(); }

} // namespace listsched
