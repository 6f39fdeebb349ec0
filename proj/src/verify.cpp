#include "phibase/verify.hpp"

#include <sstream>
#include <stdexcept>
#include <thread>

#include "phibase/phi_codec.hpp"
#include "phibase/reconstruct.hpp"
#include "phibase/sequences.hpp"
#include "phibase/zeckendorf.hpp"

namespace phibase {

namespace {

Check make_check(std::uint64_t n, std::string name, const BigInt& lhs, const BigInt& rhs)
{
    return {n, std::move(name), lhs.str(), rhs.str(), lhs == rhs};
}

Check make_sign_check(std::uint64_t n, std::string name, int sign, int expected)
{
    return {n, std::move(name), std::to_string(sign), std::to_string(expected), sign == expected};
}

std::string shift_label(const char* base, std::int64_t shift)
{
    return std::string(base) + "[n=" + std::to_string(shift) + "]";
}

/// "lo<x<hi" style bounds check, decided by exact sign.
Check make_interval_check(std::uint64_t n, std::string name, const GoldenInt& value, int lo, int hi)
{
    const bool ok = (value - GoldenInt(lo)).sign() > 0 && (GoldenInt(hi) - value).sign() > 0;
    return {n, std::move(name), value.to_string(), "(" + std::to_string(lo) + "," + std::to_string(hi) + ")", ok};
}

void csv_field(std::ostream& os, const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        os << s;
        return;
    }
    os << '"';
    for (char c : s) {
        if (c == '"')
            os << '"';
        os << c;
    }
    os << '"';
}

}  // namespace

std::string to_string(Suite suite)
{
    switch (suite) {
    case Suite::roundtrip:
        return "roundtrip";
    case Suite::thm1:
        return "thm1";
    case Suite::thm2:
        return "thm2";
    case Suite::corollary:
        return "corollary";
    case Suite::prop1:
        return "prop1";
    case Suite::lemmas:
        return "lemmas";
    }
    return "?";
}

const std::set<Suite>& all_suites()
{
    static const std::set<Suite> s{Suite::roundtrip, Suite::thm1,  Suite::thm2,
                                   Suite::corollary, Suite::prop1, Suite::lemmas};
    return s;
}

std::set<Suite> parse_suites(const std::string& list)
{
    std::set<Suite> out;
    std::stringstream ss(list);
    std::string name;
    while (std::getline(ss, name, ',')) {
        bool found = false;
        for (Suite s : all_suites()) {
            if (to_string(s) == name) {
                out.insert(s);
                found = true;
            }
        }
        if (!found)
            throw std::invalid_argument("unknown suite '" + name + "'");
    }
    if (out.empty())
        throw std::invalid_argument("no suites selected");
    return out;
}

std::vector<Check> checks_for(std::uint64_t n, const std::set<Suite>& suites)
{
    std::vector<Check> out;
    const BigInt big(n);
    const PhiDigits digits = encode(big);
    const BetaSplit parts = split(digits);
    const ParityHint hint = parity_hint(digits);

    if (suites.contains(Suite::roundtrip)) {
        out.push_back(make_check(n, "roundtrip", decode_integer(digits), big));
        const std::string text = format(digits);
        out.push_back({n, "format_parse", format(parse(text)), text, parse(text) == digits});
    }
    if (suites.contains(Suite::thm1))
        out.push_back(make_check(n, "thm1", from_positive(parts.beta_plus, parts.d0), big));
    if (suites.contains(Suite::thm2)) {
        out.push_back(make_check(n, "thm2", from_negative(parts.beta_minus, parts.d0, hint), big));
        if (hint != ParityHint::none) {
            const BigInt off = from_negative(parts.beta_minus, parts.d0, flipped(hint)) - big;
            out.push_back(make_check(n, "thm2_flipped_hint", abs(off), BigInt(1)));
        }
    }
    if (suites.contains(Suite::corollary)) {
        const BigInt doubled = double_from_lucas(digits);
        out.push_back(make_check(n, "corollary", doubled, 2 * big));
        const BigInt summed = from_positive(parts.beta_plus, parts.d0) + from_negative(parts.beta_minus, parts.d0, hint);
        out.push_back(make_check(n, "corollary_sum", summed, doubled));
    }
    if (suites.contains(Suite::prop1)) {
        const IndexSet offsets = digits.index_set();
        GoldenInt sum;
        for (int i : offsets)
            sum += phi_pow(i);
        out.push_back({n, "prop1_phi_sum", sum.to_string(), GoldenInt(big).to_string(), phi_sum_check(offsets, big)});
        for (std::int64_t shift = kProp1MinShift; shift <= kProp1MaxShift; ++shift) {
            const IdentitySides f = nf_identity(big, offsets, shift);
            out.push_back(make_check(n, shift_label("prop1_nf", shift), f.lhs, f.rhs));
            const IdentitySides l = nl_identity(big, offsets, shift);
            out.push_back(make_check(n, shift_label("prop1_nl", shift), l.lhs, l.rhs));
        }
    }
    if (suites.contains(Suite::lemmas)) {
        const IndexSet& idx = digits.index_set();
        out.push_back(make_sign_check(n, "lemma1", lemma1_gap(idx).sign(), 1));
        out.push_back(make_sign_check(n, "lemma2", lemma2_sign(idx), idx.max() % 2 == 0 ? 1 : -1));
        if (!parts.beta_minus.empty())
            out.push_back(make_interval_check(n, "fraction_bounds", fractional_value(digits), 0, 1));
        if (hint == ParityHint::odd)
            out.push_back(make_interval_check(n, "conjugate_tail_bounds", conjugate_tail(digits), 0, 1));
        else if (hint == ParityHint::even)
            out.push_back(make_interval_check(n, "conjugate_tail_bounds", conjugate_tail(digits), -1, 0));
    }
    return out;
}

VerifyReport run_verify(std::uint64_t lo, std::uint64_t hi, const std::set<Suite>& suites, unsigned workers)
{
    if (lo < 1 || lo > hi)
        throw std::invalid_argument("verify range must satisfy 1 <= lo <= hi");
    if (workers < 1)
        throw std::invalid_argument("worker count must be at least 1");

    const std::uint64_t count = hi - lo + 1;
    const std::uint64_t parts = std::min<std::uint64_t>(workers, count);
    std::vector<std::vector<Check>> chunks(parts);
    std::vector<std::exception_ptr> errors(parts);
    {
        std::vector<std::jthread> pool;
        for (std::uint64_t p = 0; p < parts; ++p) {
            const std::uint64_t begin = lo + count * p / parts;
            const std::uint64_t end = lo + count * (p + 1) / parts;
            pool.emplace_back([&, p, begin, end] {
                try {
                    for (std::uint64_t n = begin; n < end; ++n) {
                        auto c = checks_for(n, suites);
                        chunks[p].insert(chunks[p].end(), std::make_move_iterator(c.begin()),
                                         std::make_move_iterator(c.end()));
                    }
                } catch (...) {
                    errors[p] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e)
            std::rethrow_exception(e);
    }

    VerifyReport report;
    report.lo = lo;
    report.hi = hi;
    for (auto& chunk : chunks) {
        report.checks.insert(report.checks.end(), std::make_move_iterator(chunk.begin()),
                             std::make_move_iterator(chunk.end()));
    }
    report.summary.total = report.checks.size();
    for (const Check& c : report.checks)
        report.summary.failed += c.pass ? 0 : 1;
    report.paper_discrepancies = audit_published(lo, hi);
    return report;
}

void to_json(nlohmann::json& j, const Check& c)
{
    j = {{"n_value", c.n_value}, {"check_name", c.check_name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}};
}

void from_json(const nlohmann::json& j, Check& c)
{
    j.at("n_value").get_to(c.n_value);
    j.at("check_name").get_to(c.check_name);
    j.at("lhs").get_to(c.lhs);
    j.at("rhs").get_to(c.rhs);
    j.at("pass").get_to(c.pass);
}

void to_json(nlohmann::json& j, const Discrepancy& d)
{
    j = {{"location", d.location}, {"paper_value", d.paper_value}, {"computed_value", d.computed_value}};
}

void from_json(const nlohmann::json& j, Discrepancy& d)
{
    j.at("location").get_to(d.location);
    j.at("paper_value").get_to(d.paper_value);
    j.at("computed_value").get_to(d.computed_value);
}

void to_json(nlohmann::json& j, const VerifyReport& r)
{
    j = {
        {"range", {r.lo, r.hi}},
        {"checks", r.checks},
        {"summary", {{"total", r.summary.total}, {"failed", r.summary.failed}}},
        {"paper_discrepancies", r.paper_discrepancies},
    };
}

void from_json(const nlohmann::json& j, VerifyReport& r)
{
    const auto& range = j.at("range");
    range.at(0).get_to(r.lo);
    range.at(1).get_to(r.hi);
    j.at("checks").get_to(r.checks);
    j.at("summary").at("total").get_to(r.summary.total);
    j.at("summary").at("failed").get_to(r.summary.failed);
    j.at("paper_discrepancies").get_to(r.paper_discrepancies);
}

std::string report_to_json(const VerifyReport& r) { return nlohmann::json(r).dump(2) + "\n"; }

VerifyReport report_from_json(const std::string& text) { return nlohmann::json::parse(text).get<VerifyReport>(); }

std::string report_to_csv(const VerifyReport& r)
{
    std::ostringstream os;
    os << "n_value,check_name,lhs,rhs,pass\n";
    for (const Check& c : r.checks) {
        os << c.n_value << ',';
        csv_field(os, c.check_name);
        os << ',';
        csv_field(os, c.lhs);
        os << ',';
        csv_field(os, c.rhs);
        os << ',' << (c.pass ? "true" : "false") << '\n';
    }
    os << "# range," << r.lo << ',' << r.hi << '\n';
    os << "# summary,total=" << r.summary.total << ",failed=" << r.summary.failed << '\n';
    for (const Discrepancy& d : r.paper_discrepancies) {
        os << "# paper_discrepancy,";
        csv_field(os, d.location);
        os << ',';
        csv_field(os, d.paper_value);
        os << ',';
        csv_field(os, d.computed_value);
        os << '\n';
    }
    return os.str();
}

std::string report_to_text(const VerifyReport& r)
{
    std::ostringstream os;
    os << "range: " << r.lo << ".." << r.hi << '\n';
    os << "checks: " << r.summary.total << " total, " << r.summary.failed << " failed\n";
    if (r.summary.failed != 0) {
        os << "failures:\n";
        for (const Check& c : r.checks) {
            if (!c.pass)
                os << "  N=" << c.n_value << ' ' << c.check_name << ": " << c.lhs << " != " << c.rhs << '\n';
        }
    }
    if (!r.paper_discrepancies.empty()) {
        os << "printed-row discrepancies:\n";
        for (const Discrepancy& d : r.paper_discrepancies) {
            os << "  " << d.location << '\n';
            os << "    printed:  " << d.paper_value << '\n';
            os << "    computed: " << d.computed_value << '\n';
        }
    }
    os << (r.summary.failed == 0 ? "PASS" : "FAIL") << '\n';
    return os.str();
}

}  // namespace phibase
