#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace numlab {

using int128 = __int128;

// Exact decimal value: mantissa / 10^scale. scale >= 0.
// Covers every surface form the number grammar accepts (up to 37 digits).
struct Decimal {
    int128 mantissa = 0;
    int scale = 0;

    static Decimal from_int(long long v) { return Decimal{static_cast<int128>(v), 0}; }

    // Parses "sign? digits (. digits)?" with grouping commas already removed.
    // Returns nullopt when the digit count exceeds int128 capacity.
    static std::optional<Decimal> parse(std::string_view s);

    // Canonical rendering at the stored scale, e.g. {-350, 2} -> "-3.50".
    std::string str() const;

    bool operator==(const Decimal& o) const;  // value equality (2.50 == 2.5)
    bool operator<(const Decimal& o) const;
};

// Exact rational, the carrier for oracle candidates (division results in
// particular). den > 0 always; normalized by gcd on construction.
struct Rational {
    int128 num = 0;
    int128 den = 1;

    Rational() = default;
    Rational(int128 n, int128 d);
    static Rational from(const Decimal& d);
    static Rational from_int(long long v) { return Rational(v, 1); }

    bool is_zero() const { return num == 0; }
    bool operator==(const Rational& o) const;
    bool operator<(const Rational& o) const;

    // Exact arithmetic; nullopt on int128 overflow (candidates that large
    // cannot match any desk-scale target anyway).
    static std::optional<Rational> add(const Rational& a, const Rational& b);
    static std::optional<Rational> sub(const Rational& a, const Rational& b);
    static std::optional<Rational> mul(const Rational& a, const Rational& b);
    static std::optional<Rational> div(const Rational& a, const Rational& b);  // nullopt on b == 0 too

    std::string str() const;  // "num/den", for diagnostics
};

// Round-half-even of q at `places` decimal digits, returned as the integer
// mantissa at that scale (i.e. round(q * 10^places)). nullopt on overflow.
std::optional<int128> round_half_even_scaled(const Rational& q, int places);

// Decimal exact power of ten; nullopt when 10^p exceeds int128.
std::optional<int128> pow10_128(int p);

std::string int128_str(int128 v);

}  // namespace numlab
