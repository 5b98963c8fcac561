#pragma once

/**
 * @file expansion.hpp
 * @brief Radix expansion of k/m in base B read off the graph of x -> B*x mod (B*n - 1).
 *
 * Pipeline for a proper fraction k/m (lowest terms):
 *
 *   m = p_1^e_1 ... p_f^e_f * m'          p_i the primes of B = p_1^b_1 ... p_f^b_f
 *   e = min { e >= 0 : e*b_i >= e_i }
 *   K = k * prod p_i^(e*b_i - e_i),  k' = K div m',  k'' = K mod m'
 *   k/m = (k' + k''/m') / B^e
 *   c*m' = B*n - 1 with 1 <= c < B  (c = -(m')^-1 mod B)
 *
 * The period of k''/m' = c*k''/(B*n - 1) is the sequence of rightmost
 * figures of the vertices following c*k'' on its cycle; the preperiod is
 * k' written with exactly e figures.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "radixgraph/digits.hpp"
#include "radixgraph/errors.hpp"
#include "radixgraph/graph.hpp"
#include "radixgraph/numtheory.hpp"

namespace radixgraph {

/// Nonnegative k/m, stored exactly as given.
struct fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    fraction() = default;
    fraction(std::uint64_t k, std::uint64_t m) : num(k), den(m) {
        if (m == 0)
            throw division_by_zero_error("denominator must be positive");
    }

    fraction reduced() const {
        if (num == 0)
            return {0, 1};
        auto const g = std::gcd(num, den);
        return {num / g, den / g};
    }

    friend bool operator==(fraction const&, fraction const&) = default;
};

/// Audit record of the reduction k/m -> (1/B^e)(k' + c*k''/(B*n - 1)).
struct reduction_trace {
    std::uint64_t e = 0;
    std::uint64_t k_int = 0;
    std::uint64_t k_prime = 0;
    std::uint64_t k_dprime = 0;
    std::uint64_t m_prime = 1;
    std::optional<std::uint64_t> c;
    std::optional<std::uint64_t> n;

    friend bool operator==(reduction_trace const&, reduction_trace const&) = default;
};

/// integer_part . preperiod (period) in base B. An empty period means the
/// expansion terminates; then the preperiod carries no trailing zero.
struct radix_expansion {
    std::uint64_t base = 10;
    digit_string integer_part;
    digit_string preperiod;
    digit_string period;

    bool terminating() const { return period.empty(); }

    friend bool operator==(radix_expansion const&, radix_expansion const&) = default;
};

struct period_step {
    std::size_t index;
    vertex remainder;
    std::uint64_t digit;

    friend bool operator==(period_step const&, period_step const&) = default;
};

struct period_trace {
    std::uint64_t start = 0;
    bool reversed = false;
    std::vector<period_step> steps;

    digit_string digits(std::uint64_t base) const {
        digit_string out{base, {}};
        out.digits.reserve(steps.size());
        for (auto const& s : steps)
            out.digits.push_back(s.digit);
        return out;
    }
};

namespace detail {

inline void require_numerator(graph_params const& p, std::uint64_t k) {
    if (k < 1 || k >= p.modulus())
        throw invalid_input_error("numerator " + std::to_string(k) + " not in [1, " +
                                  std::to_string(p.modulus()) + ")");
}

}  // namespace detail

/// Period of k/(B*n - 1): step i reports r_i = B^i*k mod M and a_i = r_i mod B,
/// for i = 1..l, the walk ending back at k.
inline period_trace period_digits(std::uint64_t k, graph_params const& p) {
    detail::require_numerator(p, k);
    period_trace t{k, false, {}};
    vertex r = k;
    std::size_t i = 0;
    do {
        r = step(p, r);
        t.steps.push_back({++i, r, rightmost_digit(r, p.base())});
    } while (r != k);
    return t;
}

/// The same period read right to left by walking the reversed graph
/// (multiplication by n): remainders k, n*k, n^2*k, ... for indices 0..l-1.
inline period_trace period_digits_reversed(std::uint64_t k, graph_params const& p) {
    detail::require_numerator(p, k);
    period_trace t{k, true, {}};
    vertex r = k;
    std::size_t i = 0;
    do {
        t.steps.push_back({i++, r, rightmost_digit(r, p.base())});
        r = reverse_step(p, r);
    } while (r != k);
    return t;
}

struct coprime_reduction {
    std::uint64_t c;
    std::uint64_t n;
    std::uint64_t scaled_numerator;

    friend bool operator==(coprime_reduction const&, coprime_reduction const&) = default;
};

/// Rewrites k/m (gcd(m, B) = 1) as c*k / (B*n - 1) with c in [1, B-1].
inline coprime_reduction reduce_coprime(std::uint64_t k, std::uint64_t m, std::uint64_t base,
                                        std::uint64_t magnitude_cap = default_magnitude_cap) {
    require_base(base);
    if (k < 1 || k >= m)
        throw invalid_input_error("reduce_coprime needs 1 <= k < m");
    if (std::gcd(m, base) != 1)
        throw invalid_input_error("reduce_coprime needs gcd(m, B) = 1, got m = " + std::to_string(m) +
                                  ", B = " + std::to_string(base));
    std::uint64_t const c = base - mod_inverse(m % base, base);
    auto const cm = detail::checked_mul(c, m);
    if (cm > magnitude_cap)
        throw capacity_error("modulus " + std::to_string(cm) + " exceeds the cap " +
                             std::to_string(magnitude_cap));
    return {c, (cm + 1) / base, c * k};
}

/// Strips the primes of B from m and shifts them into B^e.
/// Fills e, k', k'', m' of the returned trace; k_int, c and n stay empty.
inline reduction_trace factor_out_base(std::uint64_t k, std::uint64_t m, std::uint64_t base,
                                       std::uint64_t magnitude_cap = default_magnitude_cap) {
    require_base(base);
    if (k < 1 || k >= m)
        throw invalid_input_error("factor_out_base needs 1 <= k < m");

    auto const base_primes = factorize(base, magnitude_cap);
    std::vector<unsigned> m_exps;
    std::uint64_t m_prime = m;
    std::uint64_t e = 0;
    for (auto const& [p, b] : base_primes) {
        unsigned ei = 0;
        while (m_prime % p == 0) {
            m_prime /= p;
            ++ei;
        }
        m_exps.push_back(ei);
        e = std::max<std::uint64_t>(e, (ei + b - 1) / b);
    }

    std::uint64_t big_k = k;
    for (std::size_t i = 0; i < base_primes.size(); ++i) {
        auto const& [p, b] = base_primes[i];
        big_k = detail::checked_mul(big_k, detail::checked_pow(p, e * b - m_exps[i]));
    }

    reduction_trace t;
    t.e = e;
    t.k_prime = big_k / m_prime;
    t.k_dprime = big_k % m_prime;
    t.m_prime = m_prime;
    return t;
}

/// Full expansion of f in base `base`, with the audit trail of how it was obtained.
inline std::pair<radix_expansion, reduction_trace> expand(fraction const& f, std::uint64_t base,
                                                          std::uint64_t magnitude_cap = default_magnitude_cap) {
    require_base(base);
    if (f.den == 0)
        throw division_by_zero_error("denominator must be positive");

    radix_expansion x;
    x.base = base;
    x.preperiod = {base, {}};
    x.period = {base, {}};

    reduction_trace t;
    t.k_int = f.num / f.den;
    x.integer_part = to_digit_string(t.k_int, base);

    auto const proper = fraction{f.num % f.den, f.den}.reduced();
    if (proper.num == 0)
        return {x, t};

    auto const k_int = t.k_int;
    t = factor_out_base(proper.num, proper.den, base, magnitude_cap);
    t.k_int = k_int;

    x.preperiod = to_digit_string(t.k_prime, base, t.e);
    if (t.e == 0)
        x.preperiod.digits.clear();

    if (t.k_dprime == 0 || t.m_prime == 1) {
        while (!x.preperiod.digits.empty() && x.preperiod.digits.back() == 0)
            x.preperiod.digits.pop_back();
        return {x, t};
    }

    auto const red = reduce_coprime(t.k_dprime, t.m_prime, base, magnitude_cap);
    t.c = red.c;
    t.n = red.n;
    graph_params const p{base, red.n, magnitude_cap};
    x.period = period_digits(red.scaled_numerator, p).digits(base);
    return {x, t};
}

/// Schoolbook long division with remainder tracking; shares no code with
/// `expand` beyond digit_string construction.
inline radix_expansion long_division_oracle(fraction const& f, std::uint64_t base) {
    require_base(base);
    if (f.den == 0)
        throw division_by_zero_error("denominator must be positive");
    auto const m = f.den;

    radix_expansion x;
    x.base = base;
    x.integer_part = to_digit_string(f.num / m, base);
    x.preperiod = {base, {}};
    x.period = {base, {}};

    std::vector<std::uint64_t> digits;
    std::unordered_map<std::uint64_t, std::size_t> seen;
    std::uint64_t r = f.num % m;
    while (r != 0) {
        auto [it, fresh] = seen.emplace(r, digits.size());
        if (!fresh) {
            auto const split = static_cast<std::ptrdiff_t>(it->second);
            x.preperiod.digits.assign(digits.begin(), digits.begin() + split);
            x.period.digits.assign(digits.begin() + split, digits.end());
            return x;
        }
        auto const scaled = static_cast<unsigned __int128>(r) * base;
        digits.push_back(static_cast<std::uint64_t>(scaled / m));
        r = static_cast<std::uint64_t>(scaled % m);
    }
    x.preperiod.digits = std::move(digits);
    return x;
}

using big_rational = boost::multiprecision::cpp_rational;
using big_int = boost::multiprecision::cpp_int;

/// Exact value of an expansion as an arbitrary-precision rational.
inline big_rational exact_value(radix_expansion const& x) {
    require_base(x.base);
    auto positional = [&](digit_string const& s) {
        big_int v = 0;
        for (auto d : s.digits) {
            if (d >= x.base)
                throw invalid_input_error("digit " + std::to_string(d) + " out of range for base " +
                                          std::to_string(x.base));
            v = v * x.base + d;
        }
        return v;
    };
    big_int const b = x.base;
    big_rational value{positional(x.integer_part)};
    big_rational frac{positional(x.preperiod)};
    if (!x.period.empty()) {
        big_int const repunit = boost::multiprecision::pow(b, static_cast<unsigned>(x.period.size())) - 1;
        frac += big_rational{positional(x.period), repunit};
    }
    frac /= big_rational{boost::multiprecision::pow(b, static_cast<unsigned>(x.preperiod.size()))};
    return value + frac;
}

/// Exact value as a fraction in lowest terms; capacity_error if it does
/// not fit 64-bit numerator and denominator.
inline fraction value_of(radix_expansion const& x) {
    auto const v = exact_value(x);
    auto const num = boost::multiprecision::numerator(v);
    auto const den = boost::multiprecision::denominator(v);
    auto const limit = big_int{std::numeric_limits<std::uint64_t>::max()};
    if (num > limit || den > limit)
        throw capacity_error("value does not fit a 64-bit fraction");
    return {num.convert_to<std::uint64_t>(), den.convert_to<std::uint64_t>()};
}

}  // namespace radixgraph
