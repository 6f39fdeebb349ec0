#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phibase/bigint.hpp"
#include "phibase/golden_int.hpp"
#include "phibase/index_set.hpp"
#include "phibase/phi_codec.hpp"

namespace phibase {

/// Parity of the smallest positive index i with d_i = 1. `none` when no such
/// index exists, which happens only for N = 1.
enum class ParityHint { odd, even, none };

ParityHint parity_hint(const PhiDigits& d);
ParityHint flipped(ParityHint hint);
std::string to_string(ParityHint hint);

/// N from the digits at positive indices and d_0:
///     N = sum_{k>=1} d_k L_k + d_0 (+1 when the smallest set positive index is odd).
/// An all-zero beta_plus takes the even branch and returns d0.
///
/// `beta_plus` is d_L ... d_1, most significant first. Throws InvalidDigits on a
/// non-binary digit or adjacent ones (d_1 against d_0 included).
BigInt from_positive(const std::vector<Digit>& beta_plus, Digit d0);

/// N from the fractional digits, d_0 and the parity hint:
///     N = sum_{j>=1} d_{-j} (-1)^j L_j + d_0 (-1 when hint is odd).
/// `none` takes the even branch.
///
/// `beta_minus` is d_-1 ... d_R. Throws InvalidDigits on a non-binary digit or
/// adjacent ones (d_0 against d_-1 included).
BigInt from_negative(const std::vector<Digit>& beta_minus, Digit d0, ParityHint hint);

/// 2N = sum_{k>=1} d_k L_k + 2 d_0 + sum_{j>=1} d_{-j} (-1)^j L_j. No parity correction needed.
BigInt double_from_lucas(const PhiDigits& d);

/// Exact truth value of sum_{k in idx} phi^k < phi^{max+1}.
/// Throws InvalidGaps on an empty set.
bool lemma1_check(const IndexSet& idx);

/// phi^{max+1} - sum_{k in idx} phi^k; positive for every valid set.
GoldenInt lemma1_gap(const IndexSet& idx);

/// Sign of sum_{k in idx} (-1)^k phi^k: +1 iff the largest index is even.
/// Throws InvalidGaps on an empty set.
int lemma2_sign(const IndexSet& idx);

/// sum phi^{-j} over the set fractional digits. Strictly inside (0, 1) when nonempty.
GoldenInt fractional_value(const PhiDigits& d);

/// -sum (-1)^i phi^{-i} over the set positive indices i, which equals
/// sum d_i phi^i - sum d_i L_i over those indices. Inside (0, 1) when the
/// smallest positive index is odd, inside (-1, 0) when it is even.
GoldenInt conjugate_tail(const PhiDigits& d);

/// Outcome of applying all three reconstruction formulas to one N.
struct ConsistencyReport {
    BigInt n;
    std::string digits;  // formatted base-phi expansion
    ParityHint hint = ParityHint::none;
    BigInt from_positive;
    BigInt from_negative;
    BigInt doubled;

    bool positive_ok() const { return from_positive == n; }
    bool negative_ok() const { return from_negative == n; }
    bool doubled_ok() const { return doubled == 2 * n; }
    bool all_ok() const { return positive_ok() && negative_ok() && doubled_ok(); }
};

/// Encode N, split it, and run from_positive, from_negative and double_from_lucas.
/// Mismatches are recorded in the report, never thrown.
ConsistencyReport theorem_consistency(const BigInt& n);

}  // namespace phibase
