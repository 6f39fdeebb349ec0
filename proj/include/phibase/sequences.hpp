#pragma once

#include <cstdint>
#include <utility>

#include "phibase/bigint.hpp"
#include "phibase/golden_int.hpp"

namespace phibase {

/// Largest |n| accepted by fib and lucas.
inline constexpr std::int64_t kMaxSequenceIndex = 1'000'000;
/// Largest |n| accepted by binet_residual.
inline constexpr std::int64_t kMaxBinetIndex = 512;

/// Fibonacci number F_n for any integer n (F_0 = 0, F_1 = 1, F_{-n} = (-1)^{n+1} F_n).
/// Throws std::out_of_range when |n| > kMaxSequenceIndex.
BigInt fib(std::int64_t n);

/// Lucas number L_n for any integer n (L_0 = 2, L_1 = 1, L_{-n} = (-1)^n L_n).
/// Throws std::out_of_range when |n| > kMaxSequenceIndex.
BigInt lucas(std::int64_t n);

/// phi^n + conj(phi)^n - L_n, computed in Z[phi]. Always zero.
/// Throws std::out_of_range when |n| > kMaxBinetIndex.
GoldenInt binet_residual(std::int64_t n);

/// phi^n - conj(phi)^n - F_n * sqrt5, with sqrt5 = 2*phi - 1. Always zero.
GoldenInt binet_fib_residual(std::int64_t n);

namespace detail {

// Independent evaluation paths, exposed so they can be tested against each other.

/// (F_n, F_{n+1}) for n >= 0 by a linear pass.
std::pair<BigInt, BigInt> fib_pair_iterative(std::int64_t n);
/// (F_n, F_{n+1}) for n >= 0 by fast doubling.
std::pair<BigInt, BigInt> fib_pair_doubling(std::int64_t n);
/// F_n for n <= 0 by running the recurrence backward from F_1, F_0.
BigInt fib_backward(std::int64_t n);
/// L_n for n <= 0 by running the recurrence backward from L_1, L_0.
BigInt lucas_backward(std::int64_t n);

}  // namespace detail

}  // namespace phibase
