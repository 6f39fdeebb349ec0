#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phibase/bigint.hpp"
#include "phibase/golden_int.hpp"
#include "phibase/index_set.hpp"

namespace phibase {

/// Binary digit, 0 or 1.
using Digit = std::uint8_t;

/// Canonical base-phi digit string d_L ... d_1 d_0 . d_-1 ... d_R.
///
/// The set digits are held as an IndexSet, so the no-adjacent-ones rule holds
/// by construction, across the radix point included. L = max(0, top exponent)
/// and R = min(0, bottom exponent), so there is never padding at either end.
/// The empty set is the string "0".
class PhiDigits {
public:
    PhiDigits() = default;
    explicit PhiDigits(IndexSet ones) : ones_(std::move(ones)) {}

    /// L: highest index, always >= 0.
    int high() const { return ones_.empty() ? 0 : std::max(0, ones_.max()); }
    /// R: lowest index, always <= 0.
    int low() const { return ones_.empty() ? 0 : std::min(0, ones_.min()); }

    Digit digit(int i) const { return ones_.contains(i) ? 1 : 0; }

    /// Exponents i with d_i = 1, ascending.
    const IndexSet& index_set() const noexcept { return ones_; }

    friend bool operator==(const PhiDigits&, const PhiDigits&) = default;

private:
    IndexSet ones_;
};

/// A digit string cut at the radix point, with d_0 kept apart.
///
/// `beta_plus` lists d_L ... d_1 (most significant first, empty when L = 0) and
/// `beta_minus` lists d_-1 ... d_R (empty when R = 0). Displayed with d_0 appended
/// to beta_plus, as in the usual "d_L...d_1 d_0" notation.
struct BetaSplit {
    std::vector<Digit> beta_plus;
    Digit d0 = 0;
    std::vector<Digit> beta_minus;

    /// Reassemble the digit string. Throws InvalidGaps if the parts do not form one.
    PhiDigits join() const;

    friend bool operator==(const BetaSplit&, const BetaSplit&) = default;
};

/// Render a digit list as text, e.g. {1,0,1} -> "101".
std::string digits_to_string(const std::vector<Digit>& digits);

/// Base-phi expansion of N >= 1 by greedy subtraction of the largest power
/// phi^k <= remainder, compared exactly. Throws NotPositive for N < 1 and
/// NonTerminating if the iteration guard trips.
PhiDigits encode(const BigInt& n);

/// Exact value sum d_i phi^i.
GoldenInt decode(const PhiDigits& d);

/// Integer value of the digit string; throws NotAnInteger when it is irrational.
BigInt decode_integer(const PhiDigits& d);

/// As decode_integer, and additionally throws NotPositive when the value is < 1.
BigInt decode_positive(const PhiDigits& d);

/// Parse `[01]+ ('.' [01]+)?` into a canonical digit string.
///
/// Throws MalformedDigitString for grammar violations (with character position)
/// and NonCanonical for adjacent ones, leading zeros on the integer part, or a
/// trailing zero in the fraction (with the offending index).
PhiDigits parse(std::string_view text);

/// Canonical rendering; the radix point appears iff R < 0.
std::string format(const PhiDigits& d);

BetaSplit split(const PhiDigits& d);

/// Smallest i > 0 with d_i = 1, if any.
std::optional<int> first_positive_index(const PhiDigits& d);

}  // namespace phibase
