#include "phibase/tables.hpp"

#include <gtest/gtest.h>

#include "phibase/zeckendorf.hpp"
#include "published_text.hpp"

using namespace phibase;
using namespace phibase::testing;

TEST(Tables, RenderRows)
{
    EXPECT_EQ(render_row(TableKind::fib, BigInt(2), {1, -2}), "2F_n = F_{n+1} + F_{n-2}");
    EXPECT_EQ(render_row(TableKind::lucas, BigInt(7), {4, -4}), "7L_n = L_{n+4} + L_{n-4}");
    EXPECT_EQ(render_row(TableKind::phi, BigInt(4), {2, 0, -2}), "4 = phi^{2} + phi^{0} + phi^{-2}");
    EXPECT_EQ(render_row(TableKind::fib, BigInt(12), {5, -1, -3, -6}), "12F_n = F_{n+5} + F_{n-1} + F_{n-3} + F_{n-6}");
}

TEST(Tables, KindNames)
{
    EXPECT_EQ(parse_table_kind("lucas"), TableKind::lucas);
    EXPECT_THROW(parse_table_kind("tribonacci"), std::invalid_argument);
}

TEST(Tables, LibraryCopyOfPrintedRowsMatchesText)
{
    const auto fibs = parse_multiple_table(kFibonacciMultiplesText, 'F');
    const auto phis = parse_multiple_table(kPhiExpansionsText, 'p');
    const auto lucases = parse_multiple_table(kLucasMultiplesText, 'L');
    const auto zeck = parse_zeckendorf_examples(kZeckendorfExamplesText);
    ASSERT_EQ(fibs.size(), 11U);
    ASSERT_EQ(phis.size(), 11U);
    ASSERT_EQ(lucases.size(), 11U);
    ASSERT_EQ(zeck.size(), 5U);
    for (const PublishedRow& row : published_rows()) {
        const auto& source = row.table == "fibonacci_multiples" ? fibs
                             : row.table == "phi_expansions"    ? phis
                             : row.table == "lucas_multiples"   ? lucases
                                                                : zeck;
        const auto it = source.find(static_cast<long>(row.n));
        ASSERT_NE(it, source.end()) << row.table << " " << row.n;
        EXPECT_EQ(it->second.terms, row.terms) << row.table << " " << row.n;
    }
}

TEST(Tables, GeneratedRowsMatchPrintedRowsUpToEleven)
{
    const struct {
        TableKind kind;
        const char* text;
        char symbol;
    } tables[] = {
        {TableKind::fib, kFibonacciMultiplesText, 'F'},
        {TableKind::phi, kPhiExpansionsText, 'p'},
        {TableKind::lucas, kLucasMultiplesText, 'L'},
    };
    for (const auto& t : tables) {
        const auto printed = parse_multiple_table(t.text, t.symbol);
        const auto rows = build_table(t.kind, 12);
        ASSERT_EQ(rows.size(), 11U);
        for (const TableRow& row : rows) {
            const ParsedRow& p = printed.at(static_cast<long>(row.n));
            if (row.n <= 11) {
                EXPECT_EQ(row.offsets, p.terms) << to_string(t.kind) << " " << row.n;
                EXPECT_EQ(row.text, p.normalized) << to_string(t.kind) << " " << row.n;
            } else {
                EXPECT_NE(row.offsets, p.terms);
            }
        }
    }
}

TEST(Tables, AuditFlagsExactlyTheTwoMisprints)
{
    const auto found = audit_published(1, 1000);
    ASSERT_EQ(found.size(), 2U);
    EXPECT_EQ(found[0].location, "zeckendorf_examples[7]");
    EXPECT_EQ(found[0].paper_value, "7 = F_3 + F_6 = 10");
    EXPECT_EQ(found[0].computed_value, "7 = F_3 + F_5");
    EXPECT_EQ(found[1].location, "fibonacci_multiples[12]");
    EXPECT_NE(found[1].paper_value.find("= 14F_n; 182 at n = 7"), std::string::npos) << found[1].paper_value;
    EXPECT_NE(found[1].computed_value.find("156 at n = 7"), std::string::npos) << found[1].computed_value;

    EXPECT_TRUE(audit_published(13, 100).empty());
    EXPECT_EQ(audit_published(2, 11).size(), 1U);
    EXPECT_EQ(audit_published(8, 12).size(), 1U);
}

TEST(Tables, WitnessIndex)
{
    EXPECT_EQ(witness_index({5, 1, 0, -3, -6}), 7);
    EXPECT_EQ(witness_index({4}), 1);
}

TEST(Tables, Footnotes)
{
    const auto rows = build_table(TableKind::fib, 12);
    const auto notes = table_footnotes(TableKind::fib, rows);
    ASSERT_EQ(notes.size(), 2U);
    EXPECT_NE(notes[0].find("row 12"), std::string::npos);
    EXPECT_NE(notes[0].find("sum to 14"), std::string::npos);
    EXPECT_NE(notes[1].find("zeckendorf_examples[7]"), std::string::npos);

    EXPECT_EQ(table_footnotes(TableKind::lucas, build_table(TableKind::lucas, 11)).size(), 1U);
    EXPECT_TRUE(table_footnotes(TableKind::phi, build_table(TableKind::phi, 6)).empty());
}
