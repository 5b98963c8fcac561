#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace radixgraph {

/// Base class of every error thrown by the library.
class radix_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument outside the operation's domain (vertex out of range, gcd(0, 0), bad digit, ...).
class invalid_input_error : public radix_error {
public:
    using radix_error::radix_error;
};

/// The element is not invertible modulo the requested modulus.
class not_a_unit_error : public invalid_input_error {
public:
    using invalid_input_error::invalid_input_error;
};

class division_by_zero_error : public radix_error {
public:
    using radix_error::radix_error;
};

/// A value exceeded the fixed-width budget or a configured cap.
class capacity_error : public radix_error {
public:
    using radix_error::radix_error;
};

/// Malformed textual input (fraction literals, digit strings).
class parse_error : public radix_error {
public:
    using radix_error::radix_error;
};

/// Largest magnitude the factorization routines accept; keeps every
/// product of two residues inside 128-bit intermediates.
inline constexpr std::uint64_t default_magnitude_cap = std::uint64_t{1} << 62;

/// Largest graph `build_graph` materializes by default.
inline constexpr std::uint64_t default_vertex_cap = 1'000'000;

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw capacity_error("product " + std::to_string(a) + " * " + std::to_string(b) +
                             " overflows 64 bits");
    return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw capacity_error("sum " + std::to_string(a) + " + " + std::to_string(b) +
                             " overflows 64 bits");
    return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp-- > 0)
        r = checked_mul(r, base);
    return r;
}

}  // namespace detail
}  // namespace radixgraph
