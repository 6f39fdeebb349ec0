#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phibase/bigint.hpp"
#include "phibase/index_set.hpp"

namespace phibase {

enum class TableKind { phi, fib, lucas };

TableKind parse_table_kind(const std::string& name);  // throws std::invalid_argument
std::string to_string(TableKind kind);

/// One row of a shift-expansion table, offsets largest first.
struct TableRow {
    std::uint64_t n = 0;
    std::vector<int> offsets;
    std::string text;
};

/// Render a row the way the published tables print it:
///   phi:   "2 = phi^{1} + phi^{-2}"
///   fib:   "2F_n = F_{n+1} + F_{n-2}"
///   lucas: "2L_n = L_{n+1} + L_{n-2}"
std::string render_row(TableKind kind, const BigInt& n, const std::vector<int>& offsets_descending);

/// A row as printed in the reference tables, kept verbatim as offsets.
struct PublishedRow {
    std::string table;  // "zeckendorf_examples", "fibonacci_multiples", "phi_expansions", "lucas_multiples"
    std::uint64_t n = 0;
    std::vector<int> terms;  // Fibonacci indices for zeckendorf_examples, offsets (descending) otherwise
};

/// Every printed row of the four reference tables.
const std::vector<PublishedRow>& published_rows();

/// A printed row that exact arithmetic refutes.
struct Discrepancy {
    std::string location;
    std::string paper_value;
    std::string computed_value;

    friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

/// Exact audit of the primary printed rows (Zeckendorf examples and the
/// Fibonacci-multiples table) whose N lies in [lo, hi]. The phi-expansion and
/// Lucas-multiple lists restate the Fibonacci-multiples table row for row, so a
/// defect there is reported once, against the Fibonacci-multiples row.
std::vector<Discrepancy> audit_published(std::uint64_t lo, std::uint64_t hi);

/// Rows N = 2..max_n of the requested table, from shift_expansion.
std::vector<TableRow> build_table(TableKind kind, std::uint64_t max_n);

/// Footnotes for a generated table: printed rows of the same table that differ
/// from the generated ones, plus the Zeckendorf-example audit within range.
std::vector<std::string> table_footnotes(TableKind kind, const std::vector<TableRow>& rows);

/// Witness index used to show a printed Fibonacci-multiple row is wrong: the
/// smallest n >= 1 at which every F_{n+i} of the row has index >= 1.
std::int64_t witness_index(const std::vector<int>& offsets);

}  // namespace phibase
