#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "phibase/bigint.hpp"
#include "phibase/index_set.hpp"

namespace phibase {

/// Zeckendorf representation: Fibonacci indices, each >= 2, ascending with gaps >= 2.
class ZeckendorfRep {
public:
    ZeckendorfRep() = default;
    /// Throws InvalidGaps on an index below 2 or adjacent indices.
    explicit ZeckendorfRep(std::vector<int> indices);
    ZeckendorfRep(std::initializer_list<int> indices) : ZeckendorfRep(std::vector<int>(indices)) {}

    std::span<const int> indices() const noexcept { return indices_.exponents(); }
    const IndexSet& index_set() const noexcept { return indices_; }

    /// "F_2 + F_5", largest term last.
    std::string to_string() const;

    friend bool operator==(const ZeckendorfRep&, const ZeckendorfRep&) = default;

private:
    IndexSet indices_;
};

/// Both sides of an identity, kept so a failing check can report its witnesses.
struct IdentitySides {
    BigInt lhs;
    BigInt rhs;

    bool holds() const { return lhs == rhs; }
    friend bool operator==(const IdentitySides&, const IdentitySides&) = default;
};

/// Greedy Zeckendorf encoding of N >= 1. Throws NotPositive for N < 1.
ZeckendorfRep zeck_encode(const BigInt& n);

BigInt zeck_decode(const ZeckendorfRep& rep);

/// Offsets {i} with N*F_n = sum F_{n+i} for every integer n; the exponents of N's base-phi expansion.
IndexSet shift_expansion(const BigInt& n);

/// (N*F_n, sum F_{n+i}) over shift_expansion(N).
IdentitySides nf_identity(const BigInt& big_n, std::int64_t n);
/// Same identity against a caller-supplied offset set.
IdentitySides nf_identity(const BigInt& big_n, const IndexSet& offsets, std::int64_t n);

/// (N*L_n, sum L_{n+i}) over shift_expansion(N).
IdentitySides nl_identity(const BigInt& big_n, std::int64_t n);
IdentitySides nl_identity(const BigInt& big_n, const IndexSet& offsets, std::int64_t n);

/// True iff sum phi^i over `offsets` equals N exactly.
bool phi_sum_check(const IndexSet& offsets, const BigInt& n);

}  // namespace phibase
