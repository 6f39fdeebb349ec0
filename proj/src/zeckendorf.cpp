#include "phibase/zeckendorf.hpp"

#include "phibase/errors.hpp"
#include "phibase/golden_int.hpp"
#include "phibase/phi_codec.hpp"
#include "phibase/sequences.hpp"

namespace phibase {

ZeckendorfRep::ZeckendorfRep(std::vector<int> indices) : indices_(std::move(indices))
{
    if (!indices_.empty() && indices_.min() < 2)
        throw InvalidGaps("Zeckendorf index " + std::to_string(indices_.min()) + " is below 2");
}

std::string ZeckendorfRep::to_string() const
{
    std::string s;
    for (int k : indices_) {
        if (!s.empty())
            s += " + ";
        s += "F_" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

ZeckendorfRep zeck_encode(const BigInt& n)
{
    if (n < 1)
        throw NotPositive("Zeckendorf encoding requires N >= 1, got " + n.str());

    // fibs[k] = F_k, grown until it exceeds n.
    std::vector<BigInt> fibs{0, 1};
    while (fibs.back() <= n)
        fibs.push_back(fibs[fibs.size() - 1] + fibs[fibs.size() - 2]);

    std::vector<int> indices;
    BigInt remainder = n;
    for (int k = static_cast<int>(fibs.size()) - 1; k >= 2 && remainder != 0; --k) {
        if (fibs[static_cast<std::size_t>(k)] <= remainder) {
            remainder -= fibs[static_cast<std::size_t>(k)];
            indices.push_back(k);
            --k;  // F_{k-1} > remainder now
        }
    }
    return ZeckendorfRep(std::move(indices));
}

BigInt zeck_decode(const ZeckendorfRep& rep)
{
    BigInt sum = 0;
    for (int k : rep.indices())
        sum += fib(k);
    return sum;
}

IndexSet shift_expansion(const BigInt& n) { return encode(n).index_set(); }

IdentitySides nf_identity(const BigInt& big_n, std::int64_t n)
{
    return nf_identity(big_n, shift_expansion(big_n), n);
}

IdentitySides nf_identity(const BigInt& big_n, const IndexSet& offsets, std::int64_t n)
{
    IdentitySides out{big_n * fib(n), 0};
    for (int i : offsets)
        out.rhs += fib(n + i);
    return out;
}

IdentitySides nl_identity(const BigInt& big_n, std::int64_t n)
{
    return nl_identity(big_n, shift_expansion(big_n), n);
}

IdentitySides nl_identity(const BigInt& big_n, const IndexSet& offsets, std::int64_t n)
{
    IdentitySides out{big_n * lucas(n), 0};
    for (int i : offsets)
        out.rhs += lucas(n + i);
    return out;
}

bool phi_sum_check(const IndexSet& offsets, const BigInt& n)
{
    GoldenInt sum;
    for (int i : offsets)
        sum += phi_pow(i);
    return sum == GoldenInt(n);
}

}  // namespace phibase
