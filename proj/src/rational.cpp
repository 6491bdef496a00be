#include "muig/rational.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace muig {

namespace {

__int128 wide_gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits_int64(__int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int64(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    if (s.empty()) throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
    return v;
}

} // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (!fits_int64(n) || !fits_int64(d)) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational Rational::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t p = parse_int64(text.substr(0, slash), text);
        std::string_view q_text = text.substr(slash + 1);
        if (!q_text.empty() && (q_text.front() == '-' || q_text.front() == '+'))
            throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        std::int64_t q = parse_int64(q_text, text);
        if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(p, q);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !int_part.empty() && int_part.front() == '-';
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
        if ((int_part.empty() && frac.empty()) || frac.size() > 18)
            throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        for (char c : frac)
            if (c < '0' || c > '9') throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        std::int64_t whole = int_part.empty() ? 0 : parse_int64(int_part, text);
        if (whole < 0) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        __int128 scale = 1;
        __int128 f = 0;
        for (char c : frac) {
            scale *= 10;
            f = f * 10 + (c - '0');
        }
        __int128 n = static_cast<__int128>(whole) * scale + f;
        return from_wide(negative ? -n : n, scale);
    }
    return Rational(parse_int64(text, text), 1);
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                               static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                               static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace muig
