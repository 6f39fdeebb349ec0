#include "phibase/phi_codec.hpp"

#include "phibase/errors.hpp"

namespace phibase {

namespace {

/// Largest k with phi^k <= n, for n >= 1. Exponent doubling, then bisection.
int largest_power_at_most(const GoldenInt& n)
{
    int lo = 0;  // phi^0 = 1 <= n
    int hi = 1;
    while (phi_pow(hi) <= n) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (phi_pow(mid) <= n)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

std::string digits_to_string(const std::vector<Digit>& digits)
{
    std::string s;
    s.reserve(digits.size());
    for (Digit d : digits)
        s.push_back(d != 0 ? '1' : '0');
    return s;
}

PhiDigits BetaSplit::join() const
{
    std::vector<int> ones;
    const int top = static_cast<int>(beta_plus.size());
    for (int k = 0; k < top; ++k) {
        if (beta_plus[static_cast<std::size_t>(k)] != 0)
            ones.push_back(top - k);
    }
    if (d0 != 0)
        ones.push_back(0);
    for (std::size_t k = 0; k < beta_minus.size(); ++k) {
        if (beta_minus[k] != 0)
            ones.push_back(-static_cast<int>(k) - 1);
    }
    return PhiDigits(IndexSet(std::move(ones)));
}

PhiDigits encode(const BigInt& n)
{
    if (n < 1)
        throw NotPositive("base-phi encoding requires N >= 1, got " + n.str());

    GoldenInt remainder(n);
    int k = largest_power_at_most(remainder);
    GoldenInt power = phi_pow(k);

    // The fractional part of an integer's expansion is no longer than about
    // twice its integer part, so |R| <= 2L + 2 bounds the walk.
    const long top = k;
    const long guard = 4 * (top + (2 * top + 2) + 16);
    long steps = 0;

    std::vector<int> ones;
    while (!remainder.is_zero()) {
        if (++steps > guard)
            throw NonTerminating("greedy encoding of " + n.str() + " exceeded " + std::to_string(guard) +
                                 " steps");
        if (power <= remainder) {
            ones.push_back(k);
            remainder -= power;
        }
        --k;
        power = power.div_phi();
    }
    return PhiDigits(IndexSet(std::move(ones)));
}

GoldenInt decode(const PhiDigits& d)
{
    GoldenInt sum;
    for (int e : d.index_set())
        sum += phi_pow(e);
    return sum;
}

BigInt decode_integer(const PhiDigits& d) { return decode(d).to_integer(); }

BigInt decode_positive(const PhiDigits& d)
{
    BigInt v = decode_integer(d);
    if (v < 1)
        throw NotPositive("digit string denotes " + v.str() + ", expected a positive integer");
    return v;
}

PhiDigits parse(std::string_view text)
{
    const std::size_t point = text.find('.');
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c == '.') {
            if (pos != point)
                throw MalformedDigitString(pos, "more than one radix point");
            continue;
        }
        if (c != '0' && c != '1')
            throw MalformedDigitString(pos, std::string("invalid character '") + c + "'");
    }
    const std::string_view whole = text.substr(0, point);
    if (whole.empty())
        throw MalformedDigitString(0, "empty integer part");
    std::string_view frac;
    if (point != std::string_view::npos) {
        frac = text.substr(point + 1);
        if (frac.empty())
            throw MalformedDigitString(point, "empty fractional part");
    }

    const int top = static_cast<int>(whole.size()) - 1;
    if (whole.size() > 1 && whole.front() == '0')
        throw NonCanonical(top, "leading zero in the integer part");
    if (!frac.empty() && frac.back() == '0')
        throw NonCanonical(-static_cast<long>(frac.size()), "trailing zero in the fractional part");

    std::vector<int> ones;
    auto take = [&ones](int index) {
        if (!ones.empty() && ones.back() == index + 1)
            throw NonCanonical(index + 1, "adjacent ones at indices " + std::to_string(index + 1) + " and " +
                                              std::to_string(index));
        ones.push_back(index);
    };
    for (std::size_t k = 0; k < whole.size(); ++k) {
        if (whole[k] == '1')
            take(top - static_cast<int>(k));
    }
    for (std::size_t k = 0; k < frac.size(); ++k) {
        if (frac[k] == '1')
            take(-static_cast<int>(k) - 1);
    }
    return PhiDigits(IndexSet(std::move(ones)));
}

std::string format(const PhiDigits& d)
{
    std::string s;
    for (int i = d.high(); i >= d.low(); --i) {
        if (i == -1)
            s.push_back('.');
        s.push_back(d.digit(i) != 0 ? '1' : '0');
    }
    return s;
}

BetaSplit split(const PhiDigits& d)
{
    BetaSplit out;
    for (int i = d.high(); i >= 1; --i)
        out.beta_plus.push_back(d.digit(i));
    out.d0 = d.digit(0);
    for (int i = -1; i >= d.low(); --i)
        out.beta_minus.push_back(d.digit(i));
    return out;
}

std::optional<int> first_positive_index(const PhiDigits& d)
{
    for (int e : d.index_set()) {
        if (e > 0)
            return e;
    }
    return std::nullopt;
}

}  // namespace phibase
