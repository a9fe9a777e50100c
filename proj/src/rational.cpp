#include "floertori/rational.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace floertori {

namespace {

using int128 = __int128;
using uint128 = unsigned __int128;

uint128 abs128(int128 v) { return v < 0 ? uint128(-(v + 1)) + 1 : uint128(v); }

uint128 gcd128(uint128 a, uint128 b) {
    while (b != 0) {
        uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long narrow(int128 v, const char* what) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw OverflowError(std::string("rational ") + what + " leaves the 64-bit range");
    return static_cast<long long>(v);
}

}  // namespace

Rational Rational::make(int128 n, int128 d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        Rational r;
        return r;
    }
    uint128 g = gcd128(abs128(n), abs128(d));
    n /= int128(g);
    d /= int128(g);
    Rational r;
    r.num_ = narrow(n, "numerator");
    r.den_ = narrow(d, "denominator");
    return r;
}

Rational::Rational(long long n, long long d) { *this = make(n, d); }

Rational Rational::operator-() const { return make(-int128(num_), den_); }

Rational Rational::operator+(const Rational& o) const {
    return make(int128(num_) * o.den_ + int128(o.num_) * den_, int128(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return make(int128(num_) * o.den_ - int128(o.num_) * den_, int128(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return make(int128(num_) * o.num_, int128(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw DomainError("rational division by zero");
    return make(int128(num_) * o.den_, int128(den_) * o.num_);
}

bool Rational::operator<(const Rational& o) const {
    return int128(num_) * o.den_ < int128(o.num_) * den_;
}

long long Rational::floor() const {
    if (num_ >= 0) return num_ / den_;
    return -((-int128(num_) + den_ - 1) / den_);
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> long long {
        long long v = 0;
        auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
            throw DomainError("malformed rational: '" + std::string(s) + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    long long p = parse_int(text.substr(0, slash));
    long long q = parse_int(text.substr(slash + 1));
    return Rational(p, q);
}

}  // namespace floertori
