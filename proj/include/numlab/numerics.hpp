#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "numlab/decimal.hpp"

namespace numlab {

// A number occurrence in text. `surface` is the exact slice text[start:end);
// `value` is the exact decimal behind it (grouping commas removed);
// `precision` counts the decimal places shown in the surface form.
struct NumberSpan {
    std::string surface;
    Decimal value;
    size_t start = 0;
    size_t end = 0;
    int precision = 0;
    bool negative = false;
};

// Finds all numbers in `text`: sign? digits (with optional comma groups)
// (. digits)?. Spans are non-overlapping and sorted by start. Percent signs,
// units, dates with slashes etc. are not part of a span. Digit runs beyond
// 37 digits exceed the exact-arithmetic range and are not reported.
std::vector<NumberSpan> extract_numbers(std::string_view text);

// True iff round-half-even(candidate, target.precision) == target.value.
// This is the match predicate behind every inferability decision.
bool equal_with_precision(const Rational& candidate, const NumberSpan& target);
bool equal_with_precision(const Decimal& candidate, const NumberSpan& target);

}  // namespace numlab
