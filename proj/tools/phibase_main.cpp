// phibase: base-phi conversions, table regeneration and verification sweeps.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 digit string that does not denote an integer.

#include <fstream>
#include <sstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "phibase/errors.hpp"
#include "phibase/phi_codec.hpp"
#include "phibase/tables.hpp"
#include "phibase/verify.hpp"
#include "phibase/zeckendorf.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotInteger = 3;

constexpr std::uint64_t kMaxTableRows = 1'000'000;

phibase::BigInt parse_positive(const std::string& text)
{
    phibase::BigInt n;
    try {
        n = phibase::BigInt(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("'" + text + "' is not an integer");
    }
    if (n < 1)
        throw std::invalid_argument("N must be a positive integer, got " + text);
    return n;
}

/// Write to --out when given, stdout otherwise.
void emit(const std::string& out_path, const std::string& payload)
{
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open '" + out_path + "' for writing");
    f << payload;
    if (!f)
        throw std::runtime_error("write to '" + out_path + "' failed");
}

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int cmd_encode(const std::string& value)
{
    std::cout << phibase::format(phibase::encode(parse_positive(value))) << '\n';
    return kExitOk;
}

int cmd_decode(const std::string& text)
{
    const phibase::PhiDigits digits = phibase::parse(text);
    const phibase::GoldenInt value = phibase::decode(digits);
    if (!value.is_integer()) {
        std::cout << value.to_string() << '\n';
        std::cerr << "warning: " << text << " is not an integer (NotAnInteger)\n";
        return kExitNotInteger;
    }
    std::cout << value.unit_coeff() << '\n';
    return kExitOk;
}

int cmd_zeckendorf(const std::string& value)
{
    const phibase::BigInt n = parse_positive(value);
    std::cout << n << " = " << phibase::zeck_encode(n).to_string() << '\n';
    return kExitOk;
}

std::string render_table(phibase::TableKind kind, const std::vector<phibase::TableRow>& rows,
                         const std::vector<std::string>& notes, const std::string& format)
{
    std::ostringstream os;
    if (format == "json") {
        nlohmann::json j;
        j["kind"] = phibase::to_string(kind);
        j["rows"] = nlohmann::json::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"n", r.n}, {"offsets", r.offsets}, {"row", r.text}});
        j["footnotes"] = notes;
        os << j.dump(2) << '\n';
    } else if (format == "csv") {
        os << "n,offsets,row\n";
        for (const auto& r : rows) {
            os << r.n << ",\"";
            for (std::size_t k = 0; k < r.offsets.size(); ++k)
                os << (k ? " " : "") << r.offsets[k];
            os << "\",\"" << r.text << "\"\n";
        }
        for (const auto& note : notes)
            os << "# " << note << '\n';
    } else {
        for (const auto& r : rows)
            os << r.text << '\n';
        if (!notes.empty()) {
            os << "\nfootnotes:\n";
            for (std::size_t k = 0; k < notes.size(); ++k)
                os << "  [" << k + 1 << "] " << notes[k] << '\n';
        }
    }
    return os.str();
}

int cmd_table(std::uint64_t max_n, const std::string& kind_name, const std::string& format, const std::string& out)
{
    if (max_n < 2 || max_n > kMaxTableRows)
        throw std::invalid_argument("--max must lie in [2, " + std::to_string(kMaxTableRows) + "]");
    const phibase::TableKind kind = phibase::parse_table_kind(kind_name);
    const auto rows = phibase::build_table(kind, max_n);
    const auto notes = phibase::table_footnotes(kind, rows);
    try {
        emit(out, render_table(kind, rows, notes, format));
    } catch (const std::runtime_error& e) {
        throw IoError(e.what());
    }
    return kExitOk;
}

int cmd_verify(std::uint64_t lo, std::uint64_t hi, const std::string& suites, unsigned workers,
               const std::string& format, const std::string& out)
{
    const auto report = phibase::run_verify(lo, hi, phibase::parse_suites(suites), workers);
    std::string payload;
    if (format == "json")
        payload = phibase::report_to_json(report);
    else if (format == "csv")
        payload = phibase::report_to_csv(report);
    else
        payload = phibase::report_to_text(report);
    try {
        emit(out, payload);
    } catch (const std::runtime_error& e) {
        throw IoError(e.what());
    }
    if (!out.empty())
        std::cerr << "checks: " << report.summary.total << " total, " << report.summary.failed << " failed\n";
    return report.summary.failed == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact base-phi numeration: conversions, tables and identity verification"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out;
    const auto formats = CLI::IsMember({"text", "csv", "json"});

    std::string encode_value;
    auto* encode = app.add_subcommand("encode", "Print the canonical base-phi digit string of N");
    encode->add_option("N", encode_value, "Positive integer")->required();

    std::string decode_text;
    auto* decode = app.add_subcommand("decode", "Print the value of a base-phi digit string");
    decode->add_option("DIGITS", decode_text, "Digit string such as 1010.0001")->required();

    std::string zeck_value;
    auto* zeck = app.add_subcommand("zeckendorf", "Print the Zeckendorf representation of N");
    zeck->add_option("N", zeck_value, "Positive integer")->required();

    std::uint64_t max_n = 12;
    std::string kind = "phi";
    auto* table = app.add_subcommand("table", "Regenerate the shift-expansion tables for N = 2..max");
    table->add_option("--max", max_n, "Largest N")->capture_default_str();
    table->add_option("--kind", kind, "phi, fib or lucas")->check(CLI::IsMember({"phi", "fib", "lucas"}))
        ->capture_default_str();
    table->add_option("--format", format, "text, csv or json")->check(formats)->capture_default_str();
    table->add_option("--out", out, "Output path (default stdout)");

    std::uint64_t lo = 1;
    std::uint64_t hi = 1;
    std::string suites = "roundtrip,thm1,thm2,corollary,prop1,lemmas";
    unsigned workers = 1;
    auto* verify = app.add_subcommand("verify", "Check the reconstruction identities over N in [LO, HI]");
    verify->add_option("LO", lo, "First N")->required();
    verify->add_option("HI", hi, "Last N")->required();
    verify->add_option("--suites", suites, "Comma-separated: roundtrip,thm1,thm2,corollary,prop1,lemmas")
        ->capture_default_str();
    verify->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--format", format, "text, csv or json")->check(formats)->capture_default_str();
    verify->add_option("--out", out, "Report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*encode)
            return cmd_encode(encode_value);
        if (*decode)
            return cmd_decode(decode_text);
        if (*zeck)
            return cmd_zeckendorf(zeck_value);
        if (*table)
            return cmd_table(max_n, kind, format, out);
        if (*verify)
            return cmd_verify(lo, hi, suites, workers, format, out);
    } catch (const phibase::MalformedDigitString& e) {
        std::cerr << "error: MalformedDigitString at position " << e.position() << ": " << e.reason() << '\n';
        return kExitUsage;
    } catch (const phibase::NonCanonical& e) {
        std::cerr << "error: NonCanonical at index " << e.index() << ": " << e.reason() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}
