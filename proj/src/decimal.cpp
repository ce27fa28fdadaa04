#include "numlab/decimal.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace numlab {

namespace {

int128 iabs(int128 v) { return v < 0 ? -v : v; }

int128 gcd128(int128 a, int128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool mul_checked(int128 a, int128 b, int128* out) {
    return !__builtin_mul_overflow(a, b, out);
}

bool add_checked(int128 a, int128 b, int128* out) {
    return !__builtin_add_overflow(a, b, out);
}

}  // namespace

std::optional<int128> pow10_128(int p) {
    if (p < 0 || p > 37) return std::nullopt;
    int128 r = 1;
    for (int i = 0; i < p; ++i) r *= 10;
    return r;
}

std::string int128_str(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    std::string s;
    // careful with INT128_MIN: iabs would overflow, but parse() never builds it
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

std::optional<Decimal> Decimal::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    size_t i = 0;
    bool neg = false;
    if (s[i] == '-' || s[i] == '+') {
        neg = s[i] == '-';
        ++i;
    }
    int128 mant = 0;
    int digits = 0;
    int scale = 0;
    bool seen_dot = false;
    bool any_digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (seen_dot) return std::nullopt;
            seen_dot = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        any_digit = true;
        if (digits >= 37) return std::nullopt;
        mant = mant * 10 + (c - '0');
        if (mant != 0) ++digits;
        if (seen_dot) ++scale;
    }
    if (!any_digit) return std::nullopt;
    if (neg) mant = -mant;
    return Decimal{mant, scale};
}

std::string Decimal::str() const {
    int128 m = mantissa;
    bool neg = m < 0;
    std::string digits = int128_str(iabs(m));
    if (scale > 0) {
        if (static_cast<int>(digits.size()) <= scale)
            digits.insert(0, scale - digits.size() + 1, '0');
        digits.insert(digits.size() - scale, 1, '.');
    }
    return neg ? "-" + digits : digits;
}

bool Decimal::operator==(const Decimal& o) const {
    return Rational::from(*this) == Rational::from(o);
}

bool Decimal::operator<(const Decimal& o) const {
    return Rational::from(*this) < Rational::from(o);
}

Rational::Rational(int128 n, int128 d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

Rational Rational::from(const Decimal& d) {
    auto p = pow10_128(d.scale);
    return Rational(d.mantissa, *p);
}

bool Rational::operator==(const Rational& o) const {
    return num == o.num && den == o.den;  // both normalized
}

bool Rational::operator<(const Rational& o) const {
    // cross-multiply; desk-scale values keep this in range
    int128 l, r;
    if (mul_checked(num, o.den, &l) && mul_checked(o.num, den, &r)) return l < r;
    // overflow fallback: compare via long double (magnitudes this large are
    // far apart, so the approximation is safe)
    long double a = static_cast<long double>(num) / static_cast<long double>(den);
    long double b = static_cast<long double>(o.num) / static_cast<long double>(o.den);
    return a < b;
}

std::optional<Rational> Rational::add(const Rational& a, const Rational& b) {
    int128 n1, n2, n, d;
    if (!mul_checked(a.num, b.den, &n1)) return std::nullopt;
    if (!mul_checked(b.num, a.den, &n2)) return std::nullopt;
    if (!add_checked(n1, n2, &n)) return std::nullopt;
    if (!mul_checked(a.den, b.den, &d)) return std::nullopt;
    return Rational(n, d);
}

std::optional<Rational> Rational::sub(const Rational& a, const Rational& b) {
    return add(a, Rational(-b.num, b.den));
}

std::optional<Rational> Rational::mul(const Rational& a, const Rational& b) {
    // cross-reduce before multiplying to keep magnitudes small
    int128 g1 = gcd128(a.num, b.den);
    int128 g2 = gcd128(b.num, a.den);
    int128 an = g1 > 1 ? a.num / g1 : a.num;
    int128 bd = g1 > 1 ? b.den / g1 : b.den;
    int128 bn = g2 > 1 ? b.num / g2 : b.num;
    int128 ad = g2 > 1 ? a.den / g2 : a.den;
    int128 n, d;
    if (!mul_checked(an, bn, &n)) return std::nullopt;
    if (!mul_checked(ad, bd, &d)) return std::nullopt;
    return Rational(n, d);
}

std::optional<Rational> Rational::div(const Rational& a, const Rational& b) {
    if (b.num == 0) return std::nullopt;
    return mul(a, Rational(b.den, b.num));
}

std::string Rational::str() const {
    return int128_str(num) + "/" + int128_str(den);
}

std::optional<int128> round_half_even_scaled(const Rational& q, int places) {
    auto p = pow10_128(places);
    if (!p) return std::nullopt;
    int128 scaled;
    if (__builtin_mul_overflow(q.num, *p, &scaled)) return std::nullopt;
    bool neg = scaled < 0;
    int128 n = iabs(scaled);
    int128 d = q.den;  // > 0
    int128 quot = n / d;
    int128 rem = n % d;
    int128 twice;
    if (__builtin_mul_overflow(rem, (int128)2, &twice)) return std::nullopt;
    if (twice > d || (twice == d && (quot % 2) != 0)) ++quot;
    return neg ? -quot : quot;
}

}  // namespace numlab
