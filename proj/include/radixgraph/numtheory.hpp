#pragma once

/**
 * @file numtheory.hpp
 * @brief Exact 64-bit number theory: gcd, trial-division factorization,
 *        divisors, Euler's totient, multiplicative order, modular inverse.
 *
 * Every routine works on std::uint64_t. Inputs above the magnitude cap
 * (2^62 by default) are rejected with capacity_error; products of two
 * residues are formed in unsigned __int128 so nothing wraps silently.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "radixgraph/errors.hpp"

namespace radixgraph {

struct prime_power {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(prime_power const&, prime_power const&) = default;
};

/// Ascending list of (prime, exponent) pairs; empty for 1.
using prime_factorization = std::vector<prime_power>;

/// gcd(a, 0) = a. Throws invalid_input_error for gcd(0, 0).
inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    if (a == 0 && b == 0)
        throw invalid_input_error("gcd(0, 0) is undefined");
    return std::gcd(a, b);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1)
        return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

inline prime_factorization factorize(std::uint64_t n, std::uint64_t cap = default_magnitude_cap) {
    if (n == 0)
        throw invalid_input_error("cannot factorize 0");
    if (n > cap)
        throw capacity_error(std::to_string(n) + " exceeds the factorization cap " +
                             std::to_string(cap));
    prime_factorization out;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0)
            out.push_back({p, e});
    };
    strip(2);
    strip(3);
    // 6k +/- 1 wheel
    for (std::uint64_t p = 5; p <= n / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

inline std::uint64_t reconstruct(prime_factorization const& f) {
    std::uint64_t n = 1;
    for (auto const& [p, e] : f)
        n = detail::checked_mul(n, detail::checked_pow(p, e));
    return n;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n,
                                           std::uint64_t cap = default_magnitude_cap) {
    std::vector<std::uint64_t> out{1};
    for (auto const& [p, e] : factorize(n, cap)) {
        std::size_t const count = out.size();
        std::uint64_t power = 1;
        for (unsigned i = 0; i < e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < count; ++j)
                out.push_back(out[j] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::uint64_t euler_phi(prime_factorization const& f) {
    std::uint64_t phi = 1;
    for (auto const& [p, e] : f) {
        phi *= p - 1;
        for (unsigned i = 1; i < e; ++i)
            phi *= p;
    }
    return phi;
}

inline std::uint64_t euler_phi(std::uint64_t n, std::uint64_t cap = default_magnitude_cap) {
    return euler_phi(factorize(n, cap));
}

namespace detail {

// Factorization of phi(n) assembled from the factorization of n.
inline prime_factorization totient_factorization(prime_factorization const& nf) {
    std::vector<std::uint64_t> primes;
    std::vector<unsigned> exps;
    auto add = [&](std::uint64_t p, unsigned e) {
        auto it = std::lower_bound(primes.begin(), primes.end(), p);
        auto idx = static_cast<std::size_t>(it - primes.begin());
        if (it != primes.end() && *it == p) {
            exps[idx] += e;
        } else {
            primes.insert(it, p);
            exps.insert(exps.begin() + static_cast<std::ptrdiff_t>(idx), e);
        }
    };
    for (auto const& [p, e] : nf) {
        if (e > 1)
            add(p, e - 1);
        for (auto const& q : factorize(p - 1))
            add(q.prime, q.exponent);
    }
    prime_factorization out;
    for (std::size_t i = 0; i < primes.size(); ++i)
        out.push_back({primes[i], exps[i]});
    return out;
}

inline constexpr std::uint64_t direct_order_threshold = 1000;

}  // namespace detail

/// Smallest t >= 1 with b^t = 1 (mod d); 1 when d = 1.
/// Throws not_a_unit_error when gcd(b, d) != 1.
inline std::uint64_t mult_order(std::uint64_t b, std::uint64_t d,
                                std::uint64_t cap = default_magnitude_cap) {
    if (d == 0)
        throw invalid_input_error("multiplicative order modulo 0 is undefined");
    if (d == 1)
        return 1;
    if (std::gcd(b, d) != 1)
        throw not_a_unit_error(std::to_string(b) + " is not a unit modulo " + std::to_string(d));

    if (d < detail::direct_order_threshold) {
        std::uint64_t const base = b % d;
        std::uint64_t x = base;
        std::uint64_t t = 1;
        while (x != 1) {
            x = x * base % d;
            ++t;
        }
        return t;
    }

    auto const df = factorize(d, cap);
    std::uint64_t t = euler_phi(df);
    for (auto const& [q, e] : detail::totient_factorization(df)) {
        for (unsigned i = 0; i < e && t % q == 0 && pow_mod(b, t / q, d) == 1; ++i)
            t /= q;
    }
    return t;
}

/// x in [0, d) with b * x = 1 (mod d). Throws not_a_unit_error when gcd(b, d) != 1.
inline std::uint64_t mod_inverse(std::uint64_t b, std::uint64_t d) {
    if (d == 0)
        throw invalid_input_error("modular inverse modulo 0 is undefined");
    if (std::gcd(b % d, d) != 1)
        throw not_a_unit_error(std::to_string(b) + " is not a unit modulo " + std::to_string(d));
    if (d == 1)
        return 0;
    __int128 old_r = static_cast<__int128>(b % d), r = d;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 const q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    __int128 x = old_s % static_cast<__int128>(d);
    if (x < 0)
        x += d;
    return static_cast<std::uint64_t>(x);
}

}  // namespace radixgraph
