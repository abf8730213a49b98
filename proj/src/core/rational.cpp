#include "macopp/core/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace macopp {

namespace {

std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
}

Rational make(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Rational(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = num;
    den_ = den;
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational(parse_int(text, text));

    bool negative = text.front() == '-';
    std::string_view int_part = text.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.empty() || frac_part.size() > 15 || frac_part.front() == '-' || frac_part.front() == '+')
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
    std::int64_t frac = parse_int(frac_part, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    Rational r = Rational(whole) + Rational(frac, scale);
    return negative ? -r : r;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    std::int64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);

    int digits = std::max(twos, fives);
    __int128 scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    __int128 scaled = static_cast<__int128>(num_) * (scale / den_);
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    auto whole = static_cast<std::int64_t>(scaled / scale);
    auto frac = static_cast<std::int64_t>(scaled % scale);
    std::string frac_text = std::to_string(frac);
    frac_text.insert(0, static_cast<std::size_t>(digits) - frac_text.size(), '0');
    return (negative ? "-" : "") + std::to_string(whole) + "." + frac_text;
}

Rational& Rational::operator+=(const Rational& o) {
    *this = make(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                 static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    *this = make(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    *this = make(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace macopp
