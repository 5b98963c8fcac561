#pragma once

// Base-B digit strings and the rightmost-figure map x -> x mod B.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "radixgraph/errors.hpp"

namespace radixgraph {

inline void require_base(std::uint64_t base) {
    if (base < 2)
        throw invalid_input_error("base must be at least 2, got " + std::to_string(base));
}

/// Digits of a nonnegative integer in base `base`, most significant first.
struct digit_string {
    std::uint64_t base = 10;
    std::vector<std::uint64_t> digits;

    bool empty() const { return digits.empty(); }
    std::size_t size() const { return digits.size(); }

    friend bool operator==(digit_string const&, digit_string const&) = default;
};

/// The rightmost figure of x written in base `base`.
inline std::uint64_t rightmost_digit(std::uint64_t x, std::uint64_t base) {
    require_base(base);
    return x % base;
}

inline digit_string to_digit_string(std::uint64_t x, std::uint64_t base, std::size_t min_width = 0) {
    require_base(base);
    digit_string out{base, {}};
    while (x > 0) {
        out.digits.push_back(x % base);
        x /= base;
    }
    if (out.digits.empty() && min_width == 0)
        out.digits.push_back(0);
    if (out.digits.size() < min_width)
        out.digits.resize(min_width, 0);
    std::reverse(out.digits.begin(), out.digits.end());
    return out;
}

inline std::uint64_t from_digit_string(digit_string const& s) {
    require_base(s.base);
    std::uint64_t value = 0;
    for (auto d : s.digits) {
        if (d >= s.base)
            throw invalid_input_error("digit " + std::to_string(d) + " out of range for base " +
                                      std::to_string(s.base));
        value = detail::checked_add(detail::checked_mul(value, s.base), d);
    }
    return value;
}

/// Single-character glyph for a digit when the base is at most 36.
inline char digit_glyph(std::uint64_t d) {
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + (d - 10));
}

/// Canonical text form: 0-9 then a-z for bases up to 36, otherwise a
/// bracketed comma-separated list of decimal digit values ("[1,40,7]").
/// An empty digit string renders as "" (or "[]" above base 36).
inline std::string render(digit_string const& s) {
    std::string out;
    if (s.base <= 36) {
        for (auto d : s.digits)
            out.push_back(digit_glyph(d));
        return out;
    }
    out.push_back('[');
    for (std::size_t i = 0; i < s.digits.size(); ++i) {
        if (i > 0)
            out.push_back(',');
        out += std::to_string(s.digits[i]);
    }
    out.push_back(']');
    return out;
}

/// Label of a single integer in base `base` using the canonical rendering.
inline std::string label(std::uint64_t x, std::uint64_t base) {
    return render(to_digit_string(x, base));
}

}  // namespace radixgraph
