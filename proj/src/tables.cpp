#include "phibase/tables.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "phibase/golden_int.hpp"
#include "phibase/sequences.hpp"
#include "phibase/zeckendorf.hpp"

namespace phibase {

namespace {

std::string offset_term(char symbol, int offset)
{
    std::string s(1, symbol);
    if (offset == 0)
        return s + "_n";
    s += "_{n";
    s += offset > 0 ? "+" : "-";
    s += std::to_string(offset > 0 ? offset : -offset);
    return s + "}";
}

GoldenInt phi_sum(const std::vector<int>& offsets)
{
    GoldenInt sum;
    for (int i : offsets)
        sum += phi_pow(i);
    return sum;
}

std::vector<int> descending(const IndexSet& idx)
{
    std::vector<int> out(idx.begin(), idx.end());
    std::reverse(out.begin(), out.end());
    return out;
}

std::string zeck_terms(const std::vector<int>& indices)
{
    std::string s;
    for (int k : indices) {
        if (!s.empty())
            s += " + ";
        s += "F_" + std::to_string(k);
    }
    return s;
}

std::string fib_rhs(const std::vector<int>& offsets)
{
    std::string s;
    for (int i : offsets) {
        if (!s.empty())
            s += " + ";
        s += offset_term('F', i);
    }
    return s;
}

BigInt fib_row_at(const std::vector<int>& offsets, std::int64_t n)
{
    BigInt sum = 0;
    for (int i : offsets)
        sum += fib(n + i);
    return sum;
}

std::string multiple_text(const GoldenInt& value)
{
    if (value.is_integer())
        return value.unit_coeff().str() + "F_n";
    return "(" + value.to_string() + ")F_n";
}

std::optional<Discrepancy> audit_zeckendorf(const PublishedRow& row)
{
    BigInt printed = 0;
    for (int k : row.terms)
        printed += fib(k);
    const ZeckendorfRep computed = zeck_encode(BigInt(row.n));
    if (printed == row.n && std::vector<int>(computed.indices().begin(), computed.indices().end()) == row.terms)
        return std::nullopt;
    return Discrepancy{
        row.table + "[" + std::to_string(row.n) + "]",
        std::to_string(row.n) + " = " + zeck_terms(row.terms) + " = " + printed.str(),
        std::to_string(row.n) + " = " + computed.to_string(),
    };
}

std::optional<Discrepancy> audit_fibonacci_multiple(const PublishedRow& row)
{
    const BigInt n(row.n);
    const GoldenInt printed_multiple = phi_sum(row.terms);
    if (printed_multiple == GoldenInt(n))
        return std::nullopt;
    const std::int64_t w = witness_index(row.terms);
    const std::vector<int> correct = descending(shift_expansion(n));
    return Discrepancy{
        row.table + "[" + std::to_string(row.n) + "]",
        std::to_string(row.n) + "F_n = " + fib_rhs(row.terms) + " = " + multiple_text(printed_multiple) + "; " +
            fib_row_at(row.terms, w).str() + " at n = " + std::to_string(w),
        std::to_string(row.n) + "F_n = " + fib_rhs(correct) + "; " + BigInt(n * fib(w)).str() + " at n = " +
            std::to_string(w),
    };
}

}  // namespace

TableKind parse_table_kind(const std::string& name)
{
    if (name == "phi")
        return TableKind::phi;
    if (name == "fib")
        return TableKind::fib;
    if (name == "lucas")
        return TableKind::lucas;
    throw std::invalid_argument("unknown table kind '" + name + "' (expected phi, fib or lucas)");
}

std::string to_string(TableKind kind)
{
    switch (kind) {
    case TableKind::phi:
        return "phi";
    case TableKind::fib:
        return "fib";
    case TableKind::lucas:
        return "lucas";
    }
    return "?";
}

std::string render_row(TableKind kind, const BigInt& n, const std::vector<int>& offsets_descending)
{
    std::string s = n.str();
    switch (kind) {
    case TableKind::phi:
        s += " = ";
        for (std::size_t k = 0; k < offsets_descending.size(); ++k) {
            if (k != 0)
                s += " + ";
            s += "phi^{" + std::to_string(offsets_descending[k]) + "}";
        }
        return s;
    case TableKind::fib:
    case TableKind::lucas: {
        const char symbol = kind == TableKind::fib ? 'F' : 'L';
        s += std::string(1, symbol) + "_n = ";
        for (std::size_t k = 0; k < offsets_descending.size(); ++k) {
            if (k != 0)
                s += " + ";
            s += offset_term(symbol, offsets_descending[k]);
        }
        return s;
    }
    }
    return s;
}

const std::vector<PublishedRow>& published_rows()
{
    static const std::vector<PublishedRow> rows = [] {
        std::vector<PublishedRow> out{
            {"zeckendorf_examples", 6, {2, 5}},
            {"zeckendorf_examples", 7, {3, 6}},
            {"zeckendorf_examples", 8, {6}},
            {"zeckendorf_examples", 9, {2, 6}},
            {"zeckendorf_examples", 10, {3, 6}},
        };
        // The three multiple tables print the same offsets for each N.
        const std::vector<std::pair<std::uint64_t, std::vector<int>>> offsets{
            {2, {1, -2}},
            {3, {2, -2}},
            {4, {2, 0, -2}},
            {5, {3, -1, -4}},
            {6, {3, 1, -4}},
            {7, {4, -4}},
            {8, {4, 0, -4}},
            {9, {4, 1, -2, -4}},
            {10, {4, 2, -2, -4}},
            {11, {4, 2, 0, -2, -4}},
            {12, {5, 1, 0, -3, -6}},
        };
        for (const char* table : {"fibonacci_multiples", "phi_expansions", "lucas_multiples"}) {
            for (const auto& [n, offs] : offsets)
                out.push_back({table, n, offs});
        }
        return out;
    }();
    return rows;
}

std::int64_t witness_index(const std::vector<int>& offsets)
{
    const int lowest = offsets.empty() ? 0 : *std::min_element(offsets.begin(), offsets.end());
    return std::max<std::int64_t>(1, 1 - static_cast<std::int64_t>(lowest));
}

std::vector<Discrepancy> audit_published(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<Discrepancy> out;
    for (const PublishedRow& row : published_rows()) {
        if (row.n < lo || row.n > hi)
            continue;
        std::optional<Discrepancy> d;
        if (row.table == "zeckendorf_examples")
            d = audit_zeckendorf(row);
        else if (row.table == "fibonacci_multiples")
            d = audit_fibonacci_multiple(row);
        if (d)
            out.push_back(std::move(*d));
    }
    return out;
}

std::vector<TableRow> build_table(TableKind kind, std::uint64_t max_n)
{
    std::vector<TableRow> rows;
    for (std::uint64_t n = 2; n <= max_n; ++n) {
        const BigInt big(n);
        TableRow row;
        row.n = n;
        row.offsets = descending(shift_expansion(big));
        row.text = render_row(kind, big, row.offsets);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::string> table_footnotes(TableKind kind, const std::vector<TableRow>& rows)
{
    const std::string table = kind == TableKind::fib     ? "fibonacci_multiples"
                              : kind == TableKind::phi   ? "phi_expansions"
                                                         : "lucas_multiples";
    std::vector<std::string> notes;
    const std::uint64_t max_n = rows.empty() ? 0 : rows.back().n;
    for (const PublishedRow& printed : published_rows()) {
        if (printed.table != table || printed.n < 2 || printed.n > max_n)
            continue;
        const TableRow& row = rows[printed.n - 2];
        if (row.offsets == printed.terms)
            continue;
        const GoldenInt value = phi_sum(printed.terms);
        notes.push_back("row " + std::to_string(printed.n) + " is printed in " + table + " as \"" +
                        render_row(kind, BigInt(printed.n), printed.terms) + "\"; its offsets sum to " +
                        (value.is_integer() ? value.unit_coeff().str() : value.to_string()) +
                        ", not " + std::to_string(printed.n));
    }
    for (const Discrepancy& d : audit_published(2, max_n)) {
        if (d.location.rfind("zeckendorf_examples", 0) == 0)
            notes.push_back(d.location + ": printed " + d.paper_value + "; exact value " + d.computed_value);
    }
    return notes;
}

}  // namespace phibase
