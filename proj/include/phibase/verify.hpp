#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "phibase/tables.hpp"

namespace phibase {

enum class Suite { roundtrip, thm1, thm2, corollary, prop1, lemmas };

/// Comma-separated suite names; throws std::invalid_argument on an unknown one.
std::set<Suite> parse_suites(const std::string& list);
std::string to_string(Suite suite);
const std::set<Suite>& all_suites();

/// Shift range swept by the prop1 suite for every N.
inline constexpr std::int64_t kProp1MinShift = -15;
inline constexpr std::int64_t kProp1MaxShift = 15;

struct Check {
    std::uint64_t n_value = 0;
    std::string check_name;
    std::string lhs;
    std::string rhs;
    bool pass = false;

    friend bool operator==(const Check&, const Check&) = default;
};

struct Summary {
    std::uint64_t total = 0;
    std::uint64_t failed = 0;

    friend bool operator==(const Summary&, const Summary&) = default;
};

struct VerifyReport {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::vector<Check> checks;
    Summary summary;
    std::vector<Discrepancy> paper_discrepancies;

    friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// All checks of the selected suites for a single N, in a fixed order.
std::vector<Check> checks_for(std::uint64_t n, const std::set<Suite>& suites);

/// Run the suites over [lo, hi] on `workers` threads. Each worker takes a
/// contiguous subrange and results are concatenated in N order, so the report
/// does not depend on the worker count. Throws std::invalid_argument unless
/// 1 <= lo <= hi and workers >= 1.
VerifyReport run_verify(std::uint64_t lo, std::uint64_t hi, const std::set<Suite>& suites, unsigned workers = 1);

void to_json(nlohmann::json& j, const Check& c);
void from_json(const nlohmann::json& j, Check& c);
void to_json(nlohmann::json& j, const Discrepancy& d);
void from_json(const nlohmann::json& j, Discrepancy& d);
void to_json(nlohmann::json& j, const VerifyReport& r);
void from_json(const nlohmann::json& j, VerifyReport& r);

std::string report_to_json(const VerifyReport& r);
VerifyReport report_from_json(const std::string& text);
/// One check per row under the header "n_value,check_name,lhs,rhs,pass";
/// summary and discrepancies follow as '#' comment lines.
std::string report_to_csv(const VerifyReport& r);
/// Summary, failing checks and discrepancies for a terminal.
std::string report_to_text(const VerifyReport& r);

}  // namespace phibase
