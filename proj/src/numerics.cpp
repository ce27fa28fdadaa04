#include "numlab/numerics.hpp"

#include <cctype>

namespace numlab {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// A sign character binds to the following digits only when it does not look
// like a binary operator or an intra-word hyphen ("3-5", "top-3").
bool sign_position_ok(std::string_view text, size_t sign_pos) {
    if (sign_pos == 0) return true;
    char prev = text[sign_pos - 1];
    return !std::isalnum(static_cast<unsigned char>(prev)) && prev != '.' && prev != ',';
}

size_t digit_run_end(std::string_view text, size_t i) {
    while (i < text.size() && is_digit(text[i])) ++i;
    return i;
}

}  // namespace

std::vector<NumberSpan> extract_numbers(std::string_view text) {
    std::vector<NumberSpan> out;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        if (!is_digit(text[i])) {
            ++i;
            continue;
        }
        size_t start = i;
        size_t int_end = digit_run_end(text, i);

        // comma grouping: first group of 1-3 digits, then (,ddd)+ where each
        // group has exactly three digits
        size_t end = int_end;
        if (int_end - start <= 3) {
            size_t j = int_end;
            while (j + 3 < n && text[j] == ',' && is_digit(text[j + 1]) &&
                   is_digit(text[j + 2]) && is_digit(text[j + 3]) &&
                   (j + 4 >= n || !is_digit(text[j + 4]))) {
                j += 4;
            }
            if (j > int_end) end = j;
        }

        // fractional part
        size_t frac_digits = 0;
        if (end < n && text[end] == '.' && end + 1 < n && is_digit(text[end + 1])) {
            size_t fe = digit_run_end(text, end + 1);
            frac_digits = fe - (end + 1);
            end = fe;
        }

        // optional sign just before `start`
        size_t span_start = start;
        bool negative = false;
        if (start > 0 && (text[start - 1] == '-' || text[start - 1] == '+') &&
            sign_position_ok(text, start - 1)) {
            span_start = start - 1;
            negative = text[start - 1] == '-';
        }

        std::string surface(text.substr(span_start, end - span_start));
        std::string digits;
        digits.reserve(surface.size());
        for (char c : surface)
            if (c != ',') digits.push_back(c);
        auto value = Decimal::parse(digits);
        if (value) {
            NumberSpan span;
            span.surface = std::move(surface);
            span.value = *value;
            span.start = span_start;
            span.end = end;
            span.precision = static_cast<int>(frac_digits);
            span.negative = negative && value->mantissa != 0;
            out.push_back(std::move(span));
        }
        i = end;
    }
    return out;
}

bool equal_with_precision(const Rational& candidate, const NumberSpan& target) {
    auto rounded = round_half_even_scaled(candidate, target.precision);
    if (!rounded) return false;
    auto p = pow10_128(target.precision);
    if (!p) return false;
    return Rational(*rounded, *p) == Rational::from(target.value);
}

bool equal_with_precision(const Decimal& candidate, const NumberSpan& target) {
    return equal_with_precision(Rational::from(candidate), target);
}

}  // namespace numlab
