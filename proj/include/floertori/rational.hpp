#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "floertori/errors.hpp"

namespace floertori {

// Exact rational number on int64 with 128-bit intermediates.
// Always normalized: denominator > 0, gcd(|num|, den) = 1.
// Every operation that could leave the 64-bit range throws OverflowError
// instead of wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(long long n, long long d);

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    // Largest integer <= this.
    long long floor() const;

    // "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

    // Accepts "p", "p/q", with optional leading '-' on p (and on q).
    // Throws DomainError on malformed input or zero denominator.
    static Rational parse(std::string_view text);

private:
    static Rational make(__int128 n, __int128 d);

    long long num_;
    long long den_;
};

inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

}  // namespace floertori
