#include "phibase/reconstruct.hpp"

#include "phibase/errors.hpp"
#include "phibase/sequences.hpp"

namespace phibase {

namespace {

void check_digits(const std::vector<Digit>& digits, Digit d0, const char* what)
{
    if (d0 > 1)
        throw InvalidDigits(std::string(what) + ": d0 must be 0 or 1");
    for (std::size_t k = 0; k < digits.size(); ++k) {
        if (digits[k] > 1)
            throw InvalidDigits(std::string(what) + ": digit " + std::to_string(k) + " is not binary");
        if (k > 0 && digits[k] == 1 && digits[k - 1] == 1)
            throw InvalidDigits(std::string(what) + ": adjacent ones at positions " + std::to_string(k - 1) +
                                " and " + std::to_string(k));
    }
}

GoldenInt alternating_sum(const IndexSet& idx)
{
    GoldenInt sum;
    for (int k : idx) {
        if (k % 2 == 0)
            sum += phi_pow(k);
        else
            sum -= phi_pow(k);
    }
    return sum;
}

void require_nonempty(const IndexSet& idx, const char* what)
{
    if (idx.empty())
        throw InvalidGaps(std::string(what) + " requires a nonempty exponent set");
}

}  // namespace

ParityHint parity_hint(const PhiDigits& d)
{
    const auto i = first_positive_index(d);
    if (!i)
        return ParityHint::none;
    return *i % 2 == 1 ? ParityHint::odd : ParityHint::even;
}

ParityHint flipped(ParityHint hint)
{
    switch (hint) {
    case ParityHint::odd:
        return ParityHint::even;
    case ParityHint::even:
        return ParityHint::odd;
    case ParityHint::none:
        break;
    }
    return ParityHint::none;
}

std::string to_string(ParityHint hint)
{
    switch (hint) {
    case ParityHint::odd:
        return "odd";
    case ParityHint::even:
        return "even";
    case ParityHint::none:
        break;
    }
    return "none";
}

BigInt from_positive(const std::vector<Digit>& beta_plus, Digit d0)
{
    check_digits(beta_plus, d0, "from_positive");
    if (!beta_plus.empty() && beta_plus.back() == 1 && d0 == 1)
        throw InvalidDigits("from_positive: adjacent ones at indices 1 and 0");

    const int top = static_cast<int>(beta_plus.size());
    BigInt n = d0;
    int smallest = 0;
    for (int pos = 0; pos < top; ++pos) {
        if (beta_plus[static_cast<std::size_t>(pos)] == 0)
            continue;
        const int k = top - pos;
        n += lucas(k);
        smallest = k;
    }
    if (smallest % 2 == 1)
        n += 1;
    return n;
}

BigInt from_negative(const std::vector<Digit>& beta_minus, Digit d0, ParityHint hint)
{
    check_digits(beta_minus, d0, "from_negative");
    if (!beta_minus.empty() && beta_minus.front() == 1 && d0 == 1)
        throw InvalidDigits("from_negative: adjacent ones at indices 0 and -1");

    BigInt n = d0;
    for (std::size_t pos = 0; pos < beta_minus.size(); ++pos) {
        if (beta_minus[pos] == 0)
            continue;
        const auto j = static_cast<std::int64_t>(pos) + 1;
        if (j % 2 == 0)
            n += lucas(j);
        else
            n -= lucas(j);
    }
    if (hint == ParityHint::odd)
        n -= 1;
    return n;
}

BigInt double_from_lucas(const PhiDigits& d)
{
    BigInt sum = 0;
    for (int e : d.index_set()) {
        if (e > 0)
            sum += lucas(e);
        else if (e == 0)
            sum += 2;
        else if ((-e) % 2 == 0)
            sum += lucas(-e);
        else
            sum -= lucas(-e);
    }
    return sum;
}

GoldenInt lemma1_gap(const IndexSet& idx)
{
    require_nonempty(idx, "lemma1_gap");
    GoldenInt gap = phi_pow(idx.max() + 1);
    for (int k : idx)
        gap -= phi_pow(k);
    return gap;
}

bool lemma1_check(const IndexSet& idx) { return lemma1_gap(idx).sign() > 0; }

int lemma2_sign(const IndexSet& idx)
{
    require_nonempty(idx, "lemma2_sign");
    return alternating_sum(idx).sign();
}

GoldenInt fractional_value(const PhiDigits& d)
{
    GoldenInt sum;
    for (int e : d.index_set()) {
        if (e < 0)
            sum += phi_pow(e);
    }
    return sum;
}

GoldenInt conjugate_tail(const PhiDigits& d)
{
    // conj(phi^i) = (-1)^i phi^{-i}
    GoldenInt sum;
    for (int e : d.index_set()) {
        if (e <= 0)
            continue;
        if (e % 2 == 0)
            sum -= phi_pow(-e);
        else
            sum += phi_pow(-e);
    }
    return sum;
}

ConsistencyReport theorem_consistency(const BigInt& n)
{
    ConsistencyReport report;
    report.n = n;
    const PhiDigits d = encode(n);
    const BetaSplit parts = split(d);
    report.digits = format(d);
    report.hint = parity_hint(d);
    report.from_positive = from_positive(parts.beta_plus, parts.d0);
    report.from_negative = from_negative(parts.beta_minus, parts.d0, report.hint);
    report.doubled = double_from_lucas(d);
    return report;
}

}  // namespace phibase
