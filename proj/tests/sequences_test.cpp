#include "phibase/sequences.hpp"

#include <stdexcept>

#include <gtest/gtest.h>

using namespace phibase;

TEST(Fibonacci, Examples)
{
    EXPECT_EQ(fib(0), 0);
    EXPECT_EQ(fib(1), 1);
    EXPECT_EQ(fib(10), 55);
    EXPECT_EQ(fib(-4), -3);
    EXPECT_EQ(fib(-5), 5);
}

TEST(Lucas, Examples)
{
    EXPECT_EQ(lucas(0), 2);
    EXPECT_EQ(lucas(1), 1);
    EXPECT_EQ(lucas(5), 11);
    EXPECT_EQ(lucas(-3), -4);
    EXPECT_EQ(lucas(-6), 18);
    EXPECT_EQ(lucas(7), 29);
}

TEST(Sequences, RecurrenceOnExtendedRange)
{
    for (int n = -500; n <= 500; ++n) {
        ASSERT_EQ(fib(n), fib(n - 1) + fib(n - 2)) << n;
        ASSERT_EQ(lucas(n), lucas(n - 1) + lucas(n - 2)) << n;
    }
}

TEST(Sequences, Reflection)
{
    for (int n = 0; n <= 500; ++n) {
        const BigInt f = fib(n);
        const BigInt l = lucas(n);
        ASSERT_EQ(fib(-n), n % 2 == 1 ? f : BigInt(-f)) << n;
        ASSERT_EQ(lucas(-n), n % 2 == 0 ? l : BigInt(-l)) << n;
    }
}

TEST(Sequences, LucasFromFibonacci)
{
    for (int n = -200; n <= 200; ++n)
        ASSERT_EQ(lucas(n), fib(n - 1) + fib(n + 1)) << n;
}

TEST(Sequences, BinetResidualVanishes)
{
    EXPECT_TRUE(binet_residual(0).is_zero());
    EXPECT_TRUE(binet_residual(7).is_zero());
    EXPECT_TRUE(binet_residual(-6).is_zero());
    for (int n = -256; n <= 256; ++n) {
        ASSERT_TRUE(binet_residual(n).is_zero()) << n;
        ASSERT_TRUE(binet_fib_residual(n).is_zero()) << n;
    }
    // phi^n - conj(phi)^n = -F_n + 2 F_n phi
    for (int n = -40; n <= 40; ++n) {
        const GoldenInt p = phi_pow(n);
        EXPECT_EQ(p - conj(p), GoldenInt(-fib(n), 2 * fib(n))) << n;
    }
}

TEST(Sequences, PhiPowerCoefficientsAreFibonacci)
{
    for (int n = -100; n <= 100; ++n)
        ASSERT_EQ(phi_pow(n), GoldenInt(fib(n - 1), fib(n))) << n;
}

TEST(Sequences, EvaluationPathsAgree)
{
    for (std::int64_t n : {0, 1, 2, 3, 17, 64, 65, 100, 1000, 9999, 10000, 10001, 20000}) {
        EXPECT_EQ(detail::fib_pair_iterative(n), detail::fib_pair_doubling(n)) << n;
    }
    EXPECT_EQ(fib(20000), detail::fib_pair_iterative(20000).first);
    for (std::int64_t n = 0; n >= -300; --n) {
        ASSERT_EQ(detail::fib_backward(n), fib(n)) << n;
        ASSERT_EQ(detail::lucas_backward(n), lucas(n)) << n;
    }
}

TEST(Sequences, LargeIndexUsesDoubling)
{
    // Cassini at a doubling-only index: F_{n-1} F_{n+1} - F_n^2 = (-1)^n.
    const std::int64_t n = 50001;
    EXPECT_EQ(fib(n - 1) * fib(n + 1) - fib(n) * fib(n), -1);
    EXPECT_EQ(lucas(n), fib(n - 1) + fib(n + 1));
    EXPECT_EQ(lucas(-n), -lucas(n));
}

TEST(Sequences, RangeGuards)
{
    EXPECT_THROW(fib(kMaxSequenceIndex + 1), std::out_of_range);
    EXPECT_THROW(lucas(-kMaxSequenceIndex - 1), std::out_of_range);
    EXPECT_THROW(binet_residual(kMaxBinetIndex + 1), std::out_of_range);
    EXPECT_NO_THROW(binet_residual(-kMaxBinetIndex));
}
