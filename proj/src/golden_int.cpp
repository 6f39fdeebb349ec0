#include "phibase/golden_int.hpp"

#include <ostream>
#include <stdexcept>

#include "phibase/errors.hpp"

namespace phibase {

namespace {

int sign_of(const BigInt& v) { return v.sign(); }

}  // namespace

const BigInt& GoldenInt::to_integer() const
{
    if (!phi_.is_zero())
        throw NotAnInteger("value " + to_string() + " is not a rational integer");
    return unit_;
}

int GoldenInt::sign() const
{
    // a + b*phi = (p + q*sqrt5) / 2 with p = 2a + b, q = b.
    const BigInt p = 2 * unit_ + phi_;
    const BigInt& q = phi_;
    const int sp = sign_of(p);
    const int sq = sign_of(q);
    if (sp >= 0 && sq >= 0)
        return (sp == 0 && sq == 0) ? 0 : 1;
    if (sp <= 0 && sq <= 0)
        return -1;
    // Mixed signs: the term with the larger square dominates. Equality would
    // make sqrt5 rational, so it cannot happen with q != 0.
    return p * p > 5 * q * q ? sp : sq;
}

GoldenInt GoldenInt::from_sqrt5_halves(const Sqrt5Halves& v)
{
    const BigInt diff = v.rational - v.irrational;
    if (boost::multiprecision::bit_test(diff, 0))
        throw std::domain_error("(x + y*sqrt5)/2 with x, y of different parity is not in Z[phi]");
    return {diff / 2, v.irrational};
}

std::string GoldenInt::to_string() const
{
    std::string s = unit_.str();
    if (phi_.sign() < 0)
        s += "-" + BigInt(-phi_).str();
    else
        s += "+" + phi_.str();
    s += "*phi";
    return s;
}

long double GoldenInt::approx() const
{
    constexpr long double kPhi = 1.61803398874989484820458683436563811772L;
    return static_cast<long double>(unit_) + static_cast<long double>(phi_) * kPhi;
}

GoldenInt& GoldenInt::operator+=(const GoldenInt& o)
{
    unit_ += o.unit_;
    phi_ += o.phi_;
    return *this;
}

GoldenInt& GoldenInt::operator-=(const GoldenInt& o)
{
    unit_ -= o.unit_;
    phi_ -= o.phi_;
    return *this;
}

GoldenInt& GoldenInt::operator*=(const GoldenInt& o)
{
    // (a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi, using phi^2 = phi + 1.
    const BigInt bd = phi_ * o.phi_;
    BigInt unit = unit_ * o.unit_ + bd;
    BigInt phi = unit_ * o.phi_ + phi_ * o.unit_ + bd;
    unit_ = std::move(unit);
    phi_ = std::move(phi);
    return *this;
}

std::strong_ordering operator<=>(const GoldenInt& x, const GoldenInt& y)
{
    const int s = (x - y).sign();
    if (s < 0)
        return std::strong_ordering::less;
    if (s > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const GoldenInt& x) { return os << x.to_string(); }

GoldenInt phi_pow(std::int64_t n)
{
    GoldenInt base = n >= 0 ? GoldenInt::phi() : GoldenInt{-1, 1};
    std::uint64_t e = n >= 0 ? static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(-(n + 1)) + 1;
    GoldenInt result{1, 0};
    while (e != 0) {
        if (e & 1U)
            result *= base;
        e >>= 1U;
        if (e != 0)
            base *= base;
    }
    return result;
}

}  // namespace phibase
