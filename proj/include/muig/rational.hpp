#ifndef MUIG_RATIONAL_HPP
#define MUIG_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace muig {

// Exact rational number over 64-bit integers, always in lowest terms with a
// positive denominator. Arithmetic that would overflow throws
// std::overflow_error instead of wrapping.
class Rational {
public:
    constexpr Rational() noexcept = default;
    Rational(std::int64_t numerator, std::int64_t denominator = 1);

    // Accepts "7", "-3", "0.25", "-1.5", "3/4", "-5/10".
    static Rational parse(std::string_view text);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend bool operator==(const Rational&, const Rational&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

private:
    static Rational from_wide(__int128 numerator, __int128 denominator);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace muig

#endif // MUIG_RATIONAL_HPP
