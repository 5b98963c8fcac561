#include <gtest/gtest.h>

#include <algorithm>

#include "radixgraph/expansion.hpp"

using namespace radixgraph;

namespace {

using digits = std::vector<std::uint64_t>;

digits trace_digits(period_trace const& t) {
    digits out;
    for (auto const& s : t.steps)
        out.push_back(s.digit);
    return out;
}

std::vector<vertex> trace_remainders(period_trace const& t) {
    std::vector<vertex> out;
    for (auto const& s : t.steps)
        out.push_back(s.remainder);
    return out;
}

}  // namespace

TEST(Fraction, ZeroDenominator) {
    EXPECT_THROW(fraction(1, 0), division_by_zero_error);
    EXPECT_EQ(fraction(6, 4).reduced(), fraction(3, 2));
    EXPECT_EQ(fraction(0, 9).reduced(), fraction(0, 1));
}

TEST(PeriodDigits, Examples) {
    auto const t = period_digits(1, {10, 4});
    EXPECT_EQ(trace_digits(t), (digits{0, 2, 5, 6, 4, 1}));
    EXPECT_EQ(trace_remainders(t), (std::vector<vertex>{10, 22, 25, 16, 4, 1}));
    EXPECT_EQ(t.steps.front().index, 1u);
    EXPECT_EQ(trace_digits(period_digits(25, {10, 4})), (digits{6, 4, 1, 0, 2, 5}));
    EXPECT_EQ(trace_digits(period_digits(7, {12, 3})), (digits{2, 4, 9, 7}));
    EXPECT_EQ(trace_digits(period_digits(13, {10, 4})), (digits{3}));
}

TEST(PeriodDigits, RangeErrors) {
    EXPECT_THROW(period_digits(0, {10, 4}), invalid_input_error);
    EXPECT_THROW(period_digits(39, {10, 4}), invalid_input_error);
    EXPECT_THROW(period_digits_reversed(0, {10, 4}), invalid_input_error);
}

TEST(PeriodDigitsReversed, Examples) {
    auto const t = period_digits_reversed(1, {10, 4});
    EXPECT_EQ(trace_remainders(t), (std::vector<vertex>{1, 4, 16, 25, 22, 10}));
    EXPECT_EQ(trace_digits(t), (digits{1, 4, 6, 5, 2, 0}));
    EXPECT_EQ(trace_digits(period_digits_reversed(7, {12, 3})), (digits{7, 9, 4, 2}));

    graph_params const p{10, 4};
    auto fwd = trace_digits(period_digits(p.modulus() - 1, p));
    auto rev = trace_digits(period_digits_reversed(p.modulus() - 1, p));
    std::reverse(rev.begin(), rev.end());
    EXPECT_EQ(rev, fwd);
}

TEST(PeriodDigits, TraceInvariants) {
    for (std::uint64_t base : {2, 10, 12}) {
        for (std::uint64_t n : {1, 4, 30}) {
            graph_params const p{base, n};
            for (std::uint64_t k = 1; k < p.modulus(); ++k) {
                auto const t = period_digits(k, p);
                ASSERT_EQ(t.steps.size(), cycle_length_of(p, k));
                ASSERT_EQ(t.steps.back().remainder, k);
                auto rem = trace_remainders(t);
                for (auto const& s : t.steps) {
                    ASSERT_EQ(s.remainder, iterate(p, k, s.index));
                    ASSERT_EQ(s.digit, s.remainder % base);
                }
                std::sort(rem.begin(), rem.end());
                ASSERT_TRUE(std::adjacent_find(rem.begin(), rem.end()) == rem.end());
            }
        }
    }
}

TEST(ReduceCoprime, Examples) {
    EXPECT_EQ(reduce_coprime(1, 13, 10), (coprime_reduction{3, 4, 3}));
    EXPECT_EQ(reduce_coprime(1, 17, 10), (coprime_reduction{7, 12, 7}));
    EXPECT_EQ(reduce_coprime(1, 5, 12), (coprime_reduction{7, 3, 7}));
}

TEST(ReduceCoprime, BaseTenTable) {
    // last digit of m -> c: 1 -> 9, 3 -> 3, 7 -> 7, 9 -> 1
    EXPECT_EQ(reduce_coprime(1, 11, 10).c, 9u);
    EXPECT_EQ(reduce_coprime(1, 23, 10).c, 3u);
    EXPECT_EQ(reduce_coprime(1, 27, 10).c, 7u);
    EXPECT_EQ(reduce_coprime(1, 39, 10).c, 1u);
}

TEST(ReduceCoprime, Postconditions) {
    for (std::uint64_t base = 2; base <= 40; ++base)
        for (std::uint64_t m = 2; m <= 400; ++m) {
            if (std::gcd(m, base) != 1)
                continue;
            auto const r = reduce_coprime(m - 1, m, base);
            ASSERT_GE(r.c, 1u);
            ASSERT_LT(r.c, base);
            ASSERT_EQ(r.c * m, base * r.n - 1);
            ASSERT_LT(r.scaled_numerator, base * r.n - 1);
        }
}

TEST(ReduceCoprime, Errors) {
    EXPECT_THROW(reduce_coprime(1, 4, 10), invalid_input_error);
    EXPECT_THROW(reduce_coprime(0, 7, 10), invalid_input_error);
    EXPECT_THROW(reduce_coprime(7, 7, 10), invalid_input_error);
    EXPECT_THROW(reduce_coprime(1, (std::uint64_t{1} << 61) + 1, 10), capacity_error);
}

TEST(FactorOutBase, Examples) {
    auto const t = factor_out_base(7, 20, 12);
    EXPECT_EQ(t.e, 1u);
    EXPECT_EQ(t.k_prime, 4u);
    EXPECT_EQ(t.k_dprime, 1u);
    EXPECT_EQ(t.m_prime, 5u);
    EXPECT_FALSE(t.c.has_value());

    auto const coprime = factor_out_base(3, 7, 10);
    EXPECT_EQ(coprime.e, 0u);
    EXPECT_EQ(coprime.k_prime, 0u);
    EXPECT_EQ(coprime.k_dprime, 3u);
    EXPECT_EQ(coprime.m_prime, 7u);

    auto const sixth = factor_out_base(1, 6, 10);
    EXPECT_EQ(sixth.e, 1u);
    EXPECT_EQ(sixth.k_prime, 1u);
    EXPECT_EQ(sixth.k_dprime, 2u);
    EXPECT_EQ(sixth.m_prime, 3u);

    // base 10: e = max(a, b)
    auto const t2 = factor_out_base(1, 8 * 5 * 3, 10);
    EXPECT_EQ(t2.e, 3u);
    EXPECT_EQ(t2.m_prime, 3u);
    // base 4 = 2^2: m = 2^3 needs e = 2
    EXPECT_EQ(factor_out_base(1, 8, 4).e, 2u);
}

TEST(FactorOutBase, ExactIdentity) {
    for (std::uint64_t base : {2, 4, 6, 10, 12, 18, 30})
        for (std::uint64_t m = 2; m <= 200; ++m)
            for (std::uint64_t k = 1; k < m; ++k) {
                auto const t = factor_out_base(k, m, base);
                ASSERT_EQ(std::gcd(t.m_prime, base), 1u);
                ASSERT_LT(t.k_dprime, t.m_prime == 1 ? 1 : t.m_prime);
                // k/m = (k' + k''/m') / B^e  <=>  k * B^e * m' = (k' m' + k'') * m
                big_int const lhs = big_int(k) * boost::multiprecision::pow(big_int(base), t.e) * t.m_prime;
                big_int const rhs = (big_int(t.k_prime) * t.m_prime + t.k_dprime) * m;
                ASSERT_EQ(lhs, rhs) << k << "/" << m << " base " << base;
            }
}

TEST(Expand, Examples) {
    auto const [x, t] = expand({7, 20}, 12);
    EXPECT_EQ(x.integer_part.digits, (digits{0}));
    EXPECT_EQ(x.preperiod.digits, (digits{4}));
    EXPECT_EQ(x.period.digits, (digits{2, 4, 9, 7}));
    EXPECT_EQ(t.e, 1u);
    EXPECT_EQ(t.k_prime, 4u);
    EXPECT_EQ(t.k_dprime, 1u);
    EXPECT_EQ(t.m_prime, 5u);
    EXPECT_EQ(t.c, 7u);
    EXPECT_EQ(t.n, 3u);

    auto const thirteenth = expand({1, 13}, 10).first;
    EXPECT_TRUE(thirteenth.preperiod.empty());
    EXPECT_EQ(thirteenth.period.digits, (digits{0, 7, 6, 9, 2, 3}));

    auto const quarter = expand({1, 4}, 10).first;
    EXPECT_EQ(quarter.integer_part.digits, (digits{0}));
    EXPECT_EQ(quarter.preperiod.digits, (digits{2, 5}));
    EXPECT_TRUE(quarter.terminating());

    EXPECT_EQ(expand({1, 17}, 10).first.period.digits,
              (digits{0, 5, 8, 8, 2, 3, 5, 2, 9, 4, 1, 1, 7, 6, 4, 7}));
}

TEST(Expand, IntegerAndImproperFractions) {
    auto const five = expand({5, 1}, 10).first;
    EXPECT_EQ(five.integer_part.digits, (digits{5}));
    EXPECT_TRUE(five.preperiod.empty());
    EXPECT_TRUE(five.period.empty());

    auto const zero = expand({0, 7}, 3).first;
    EXPECT_EQ(zero.integer_part.digits, (digits{0}));
    EXPECT_TRUE(zero.preperiod.empty() && zero.period.empty());

    auto const [x, t] = expand({47, 20}, 12);  // 2 + 7/20
    EXPECT_EQ(x.integer_part.digits, (digits{2}));
    EXPECT_EQ(x.preperiod.digits, (digits{4}));
    EXPECT_EQ(x.period.digits, (digits{2, 4, 9, 7}));
    EXPECT_EQ(t.k_int, 2u);

    // unreduced input reaches the same canonical form
    EXPECT_EQ(expand({14, 40}, 12).first, expand({7, 20}, 12).first);
}

TEST(Expand, TerminatingHasNoTrailingZero) {
    auto const x = expand({1, 2}, 10).first;
    EXPECT_EQ(x.preperiod.digits, (digits{5}));
    auto const y = expand({3, 8}, 4).first;  // 3/8 = 0.12 in base 4
    EXPECT_EQ(y.preperiod.digits, (digits{1, 2}));
    auto const z = expand({1, 16}, 10).first;  // 0.0625
    EXPECT_EQ(z.preperiod.digits, (digits{0, 6, 2, 5}));
}

TEST(Expand, Errors) {
    fraction bad;
    bad.den = 0;
    EXPECT_THROW(expand(bad, 10), division_by_zero_error);
    EXPECT_THROW(expand({1, 3}, 1), invalid_input_error);
    // modulus c*m' above the cap
    EXPECT_THROW(expand({1, 1'000'003}, 10, 1'000'000), capacity_error);
}

TEST(LongDivisionOracle, Examples) {
    EXPECT_EQ(long_division_oracle({1, 39}, 10).period.digits, (digits{0, 2, 5, 6, 4, 1}));
    auto const five = long_division_oracle({5, 1}, 10);
    EXPECT_EQ(five.integer_part.digits, (digits{5}));
    EXPECT_TRUE(five.preperiod.empty() && five.period.empty());
    EXPECT_EQ(long_division_oracle({1, 7}, 10).period.digits, (digits{1, 4, 2, 8, 5, 7}));
    auto const sixth = long_division_oracle({1, 6}, 10);
    EXPECT_EQ(sixth.preperiod.digits, (digits{1}));
    EXPECT_EQ(sixth.period.digits, (digits{6}));
}

TEST(ValueOf, Examples) {
    radix_expansion fifth{12, {12, {0}}, {12, {}}, {12, {2, 4, 9, 7}}};
    EXPECT_EQ(value_of(fifth), fraction(1, 5));
    radix_expansion quarter{10, {10, {0}}, {10, {2, 5}}, {10, {}}};
    EXPECT_EQ(value_of(quarter), fraction(1, 4));
    radix_expansion seven_twentieths{12, {12, {0}}, {12, {4}}, {12, {2, 4, 9, 7}}};
    EXPECT_EQ(value_of(seven_twentieths), fraction(7, 20));
}

TEST(ValueOf, LongPeriodsRoundTrip) {
    // period lengths in the hundreds: exact big rational arithmetic
    for (std::uint64_t m : {293u, 577u, 983u}) {
        auto const x = expand({1, m}, 10).first;
        EXPECT_EQ(x.period.size(), mult_order(10, m));
        EXPECT_EQ(value_of(x), fraction(1, m));
    }
}

TEST(Expand, RotationAlongCycle) {
    for (std::uint64_t base : {2, 10, 12, 16}) {
        graph_params const p{base, 25};
        auto const g = build_graph(p);
        for (auto const& cyc : g.cycles()) {
            if (cyc.front() == 0)
                continue;
            auto const ref = trace_digits(period_digits(cyc.front(), p));
            for (std::size_t j = 0; j < cyc.size(); ++j) {
                auto rotated = ref;
                std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(j), rotated.end());
                ASSERT_EQ(trace_digits(period_digits(cyc[j], p)), rotated);
            }
        }
    }
}

TEST(Expand, MatchesOracleSmallSweep) {
    for (std::uint64_t base : {2, 3, 7, 10, 12, 36, 60})
        for (std::uint64_t m = 1; m <= 120; ++m)
            for (std::uint64_t k = 0; k <= 2 * m; ++k) {
                fraction const f{k, m};
                auto const x = expand(f, base).first;
                ASSERT_EQ(x, long_division_oracle(f, base)) << k << "/" << m << " base " << base;
                ASSERT_EQ(value_of(x), f.reduced());
            }
}

// Digits come from remainders alone, and they spell the period long division finds.
TEST(Expand, TraceDigitsAreRemaindersModBase) {
    for (std::uint64_t base : {2, 3, 8, 10, 12, 16})
        for (std::uint64_t m = 1; m <= 150; ++m)
            for (std::uint64_t k = 1; k < m; ++k) {
                auto const [x, t] = expand({k, m}, base);
                if (!t.n)
                    continue;
                graph_params const p{base, *t.n};
                auto const trace = period_digits(*t.c * t.k_dprime, p);
                for (auto const& s : trace.steps)
                    ASSERT_EQ(s.digit, s.remainder % base);
                ASSERT_EQ(trace_digits(trace), long_division_oracle({k, m}, base).period.digits)
                    << k << "/" << m << " base " << base;
                ASSERT_EQ(x.period.digits.size(), mult_order(base, t.m_prime / gcd(t.m_prime, t.k_dprime)));
            }
}
