#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "phibase/bigint.hpp"

namespace phibase {

/// Value (x + y*sqrt5) / 2 stored as the doubled coefficients x and y.
/// Every element of Z[phi] has this shape with x and y of equal parity.
struct Sqrt5Halves {
    BigInt rational;    // x
    BigInt irrational;  // y

    friend bool operator==(const Sqrt5Halves&, const Sqrt5Halves&) = default;
};

/// Exact element a + b*phi of the ring Z[phi], phi = (1 + sqrt5) / 2.
///
/// The basis {1, phi} keeps both coefficients integral, so equality is
/// coefficient-wise and all arithmetic is exact. Ordering follows the real
/// embedding and is decided without floating point.
class GoldenInt {
public:
    GoldenInt() = default;
    GoldenInt(BigInt unit_coeff, BigInt phi_coeff)
        : unit_(std::move(unit_coeff)), phi_(std::move(phi_coeff)) {}
    GoldenInt(std::int64_t value) : unit_(value), phi_(0) {}  // NOLINT: integers embed implicitly
    GoldenInt(const BigInt& value) : unit_(value), phi_(0) {}  // NOLINT

    static GoldenInt phi() { return {0, 1}; }
    /// The conjugate of phi, 1 - phi = -1/phi.
    static GoldenInt phi_bar() { return {1, -1}; }

    const BigInt& unit_coeff() const noexcept { return unit_; }
    const BigInt& phi_coeff() const noexcept { return phi_; }

    bool is_zero() const { return unit_.is_zero() && phi_.is_zero(); }
    bool is_integer() const { return phi_.is_zero(); }

    /// Integer value; throws NotAnInteger when the phi coefficient is nonzero.
    const BigInt& to_integer() const;

    /// Sign of the real number a + b*phi: -1, 0 or +1.
    int sign() const;

    GoldenInt conj() const { return {unit_ + phi_, -phi_}; }

    /// Multiply by phi^-1 = phi - 1. Cheaper than a general product.
    GoldenInt div_phi() const { return {phi_ - unit_, unit_}; }

    Sqrt5Halves to_sqrt5_halves() const { return {2 * unit_ + phi_, phi_}; }
    /// Inverse of to_sqrt5_halves. Throws std::domain_error when the parities differ
    /// (the value is then outside Z[phi]).
    static GoldenInt from_sqrt5_halves(const Sqrt5Halves& v);

    /// "a+b*phi" with normalized signs, e.g. "-1+2*phi", "5-3*phi", "12+0*phi".
    std::string to_string() const;

    /// Diagnostic floating-point value. Never used for decisions.
    long double approx() const;

    GoldenInt operator-() const { return {-unit_, -phi_}; }
    GoldenInt& operator+=(const GoldenInt& o);
    GoldenInt& operator-=(const GoldenInt& o);
    GoldenInt& operator*=(const GoldenInt& o);

    friend GoldenInt operator+(GoldenInt x, const GoldenInt& y) { return x += y; }
    friend GoldenInt operator-(GoldenInt x, const GoldenInt& y) { return x -= y; }
    friend GoldenInt operator*(GoldenInt x, const GoldenInt& y) { return x *= y; }

    friend bool operator==(const GoldenInt&, const GoldenInt&) = default;
    friend std::strong_ordering operator<=>(const GoldenInt& x, const GoldenInt& y);

    friend std::ostream& operator<<(std::ostream& os, const GoldenInt& x);

private:
    BigInt unit_{0};
    BigInt phi_{0};
};

inline GoldenInt conj(const GoldenInt& x) { return x.conj(); }
inline int sign(const GoldenInt& x) { return x.sign(); }

/// Exact phi^n for any integer n, by repeated squaring of phi or phi^-1.
GoldenInt phi_pow(std::int64_t n);

}  // namespace phibase
