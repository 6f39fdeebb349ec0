#include "phibase/sequences.hpp"

#include <stdexcept>
#include <string>

namespace phibase {

namespace {

constexpr std::int64_t kLinearLimit = 10'000;
constexpr std::int64_t kBackwardLimit = 64;

void check_range(std::int64_t n, std::int64_t limit, const char* what)
{
    if (n > limit || n < -limit)
        throw std::out_of_range(std::string(what) + ": index " + std::to_string(n) + " outside [-" +
                                std::to_string(limit) + ", " + std::to_string(limit) + "]");
}

std::pair<BigInt, BigInt> fib_pair_nonneg(std::int64_t n)
{
    return n <= kLinearLimit ? detail::fib_pair_iterative(n) : detail::fib_pair_doubling(n);
}

}  // namespace

namespace detail {

std::pair<BigInt, BigInt> fib_pair_iterative(std::int64_t n)
{
    BigInt a = 0;
    BigInt b = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return {std::move(a), std::move(b)};
}

std::pair<BigInt, BigInt> fib_pair_doubling(std::int64_t n)
{
    // F_2k = F_k (2 F_{k+1} - F_k), F_{2k+1} = F_k^2 + F_{k+1}^2
    BigInt a = 0;
    BigInt b = 1;
    for (int bit = 62; bit >= 0; --bit) {
        BigInt c = a * (2 * b - a);
        BigInt d = a * a + b * b;
        if ((n >> bit) & 1) {
            a = d;
            b = c + d;
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    }
    return {std::move(a), std::move(b)};
}

BigInt fib_backward(std::int64_t n)
{
    // hi = F_{k+1}, lo = F_k, starting at k = 0.
    BigInt hi = 1;
    BigInt lo = 0;
    for (std::int64_t k = 0; k > n; --k) {
        BigInt prev = hi - lo;
        hi = std::move(lo);
        lo = std::move(prev);
    }
    return lo;
}

BigInt lucas_backward(std::int64_t n)
{
    BigInt hi = 1;
    BigInt lo = 2;
    for (std::int64_t k = 0; k > n; --k) {
        BigInt prev = hi - lo;
        hi = std::move(lo);
        lo = std::move(prev);
    }
    return lo;
}

}  // namespace detail

BigInt fib(std::int64_t n)
{
    check_range(n, kMaxSequenceIndex, "fib");
    if (n >= 0)
        return fib_pair_nonneg(n).first;
    if (n >= -kBackwardLimit)
        return detail::fib_backward(n);
    BigInt f = fib_pair_nonneg(-n).first;
    return (-n) % 2 == 0 ? BigInt(-f) : f;
}

BigInt lucas(std::int64_t n)
{
    check_range(n, kMaxSequenceIndex, "lucas");
    if (n < 0 && n >= -kBackwardLimit)
        return detail::lucas_backward(n);
    const std::int64_t m = n < 0 ? -n : n;
    auto [f, f_next] = fib_pair_nonneg(m);
    BigInt l = 2 * f_next - f;  // L_m = F_{m-1} + F_{m+1}
    return (n < 0 && m % 2 == 1) ? BigInt(-l) : l;
}

GoldenInt binet_residual(std::int64_t n)
{
    check_range(n, kMaxBinetIndex, "binet_residual");
    const GoldenInt p = phi_pow(n);
    return p + p.conj() - GoldenInt(lucas(n));
}

GoldenInt binet_fib_residual(std::int64_t n)
{
    check_range(n, kMaxBinetIndex, "binet_fib_residual");
    const GoldenInt p = phi_pow(n);
    const GoldenInt sqrt5{-1, 2};
    return p - p.conj() - GoldenInt(fib(n)) * sqrt5;
}

}  // namespace phibase
