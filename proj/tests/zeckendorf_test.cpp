#include "phibase/zeckendorf.hpp"

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "phibase/errors.hpp"
#include "phibase/sequences.hpp"

using namespace phibase;

TEST(Zeckendorf, EncodeExamples)
{
    EXPECT_EQ(zeck_encode(BigInt(6)), (ZeckendorfRep{2, 5}));
    EXPECT_EQ(zeck_encode(BigInt(8)), (ZeckendorfRep{6}));
    EXPECT_EQ(zeck_encode(BigInt(7)), (ZeckendorfRep{3, 5}));
    EXPECT_EQ(zeck_encode(BigInt(1)), (ZeckendorfRep{2}));
    EXPECT_EQ(zeck_encode(BigInt(6)).to_string(), "F_2 + F_5");
    EXPECT_THROW(zeck_encode(BigInt(0)), NotPositive);
}

TEST(Zeckendorf, DecodeExamples)
{
    EXPECT_EQ(zeck_decode(ZeckendorfRep{2, 5}), 6);
    EXPECT_EQ(zeck_decode(ZeckendorfRep{6}), 8);
    EXPECT_EQ(zeck_decode(ZeckendorfRep{2, 6}), 9);
    EXPECT_EQ(zeck_decode(ZeckendorfRep{3, 6}), 10);
    // F_3 + F_6 is 10, so it cannot be the representation of 7.
    EXPECT_NE(zeck_decode(ZeckendorfRep{3, 6}), 7);
}

TEST(Zeckendorf, RejectsInvalidIndices)
{
    EXPECT_THROW((ZeckendorfRep{1, 4}), InvalidGaps);
    EXPECT_THROW((ZeckendorfRep{4, 5}), InvalidGaps);
}

TEST(Zeckendorf, RoundTrip)
{
    for (long n = 1; n <= 100000; ++n)
        ASSERT_EQ(zeck_decode(zeck_encode(BigInt(n))), n) << n;
}

TEST(Zeckendorf, UniqueSmallScale)
{
    const auto found = phibase::testing::enumerate_zeckendorf(14, 200);
    for (long n = 1; n <= 200; ++n) {
        const auto it = found.find(n);
        ASSERT_NE(it, found.end()) << n;
        ASSERT_EQ(it->second.size(), 1U) << n;
        ASSERT_EQ(ZeckendorfRep(it->second.front()), zeck_encode(BigInt(n))) << n;
    }
}

TEST(ShiftExpansion, Examples)
{
    EXPECT_EQ(shift_expansion(BigInt(2)), (IndexSet{-2, 1}));
    EXPECT_EQ(shift_expansion(BigInt(7)), (IndexSet{-4, 4}));
    EXPECT_EQ(shift_expansion(BigInt(12)), (IndexSet{-6, -3, -1, 5}));
}

TEST(ShiftExpansion, FibonacciIdentityExamples)
{
    EXPECT_EQ(nf_identity(BigInt(2), 10), (IdentitySides{110, 110}));
    EXPECT_EQ(nf_identity(BigInt(3), 2), (IdentitySides{3, 3}));
    EXPECT_EQ(nf_identity(BigInt(1), 5), (IdentitySides{5, 5}));
}

TEST(ShiftExpansion, LucasIdentityExamples)
{
    EXPECT_EQ(nl_identity(BigInt(7), 0), (IdentitySides{14, 14}));
    EXPECT_EQ(nl_identity(BigInt(2), 1), (IdentitySides{2, 2}));
    EXPECT_EQ(nl_identity(BigInt(1), -3), (IdentitySides{-4, -4}));
}

TEST(ShiftExpansion, PhiSumCheckExamples)
{
    EXPECT_TRUE(phi_sum_check(IndexSet{-2, 1}, BigInt(2)));
    EXPECT_TRUE(phi_sum_check(IndexSet{0}, BigInt(1)));
    EXPECT_FALSE(phi_sum_check(IndexSet{-4, 4}, BigInt(8)));
    EXPECT_TRUE(phi_sum_check(IndexSet{-4, 4}, BigInt(7)));
}

TEST(ShiftExpansion, MisprintedRowForTwelveIsFourteen)
{
    // Offsets {5, 1, 0, -3, -6} contain the adjacent pair 1, 0, so they are not an
    // IndexSet; evaluate term by term.
    const std::vector<int> printed{5, 1, 0, -3, -6};
    GoldenInt sum;
    for (int i : printed)
        sum += phi_pow(i);
    EXPECT_EQ(sum, GoldenInt(14));
    BigInt rhs = 0;
    for (int i : printed)
        rhs += fib(7 + i);
    EXPECT_EQ(rhs, 182);
    EXPECT_EQ(12 * fib(7), 156);
    EXPECT_EQ(nf_identity(BigInt(12), 7), (IdentitySides{156, 156}));
}

TEST(ShiftExpansionProperty, ThreeConditionsAgree)
{
    for (long n = 1; n <= 500; ++n) {
        const BigInt big(n);
        const IndexSet offsets = shift_expansion(big);
        ASSERT_TRUE(phi_sum_check(offsets, big)) << n;
        for (std::int64_t shift = -15; shift <= 15; ++shift) {
            ASSERT_TRUE(nf_identity(big, offsets, shift).holds()) << n << " " << shift;
            ASSERT_TRUE(nl_identity(big, offsets, shift).holds()) << n << " " << shift;
        }
    }
}

TEST(ShiftExpansionProperty, ShiftedOffsetsAreTheZeckendorfRepresentation)
{
    for (long n = 1; n <= 300; ++n) {
        const BigInt big(n);
        const IndexSet offsets = shift_expansion(big);
        const int first = 2 - offsets.min();
        for (int shift = first; shift < first + 6; ++shift) {
            const ZeckendorfRep rep = zeck_encode(big * fib(shift));
            ASSERT_EQ(rep.index_set(), offsets.shifted(shift)) << n << " " << shift;
        }
    }
}
