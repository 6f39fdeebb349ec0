#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phibase {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A golden integer with a nonzero phi coefficient was asked for its integer value.
class NotAnInteger : public Error {
public:
    using Error::Error;
};

/// An integer result was required to be at least one.
class NotPositive : public Error {
public:
    using Error::Error;
};

/// The digit string is not well formed: bad character, misplaced or repeated
/// point, or an empty part. `position` is the zero-based character offset.
class MalformedDigitString : public Error {
public:
    MalformedDigitString(std::size_t position, std::string reason)
        : Error("malformed digit string at position " + std::to_string(position) + ": " + reason),
          position_(position), reason_(std::move(reason)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t position_;
    std::string reason_;
};

/// The digit string is well formed but breaks a canonical-form rule.
/// `index` is the base-phi exponent where the violation was detected.
class NonCanonical : public Error {
public:
    NonCanonical(long index, std::string reason)
        : Error("non-canonical digit string at index " + std::to_string(index) + ": " + reason),
          index_(index), reason_(std::move(reason)) {}

    long index() const noexcept { return index_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    long index_;
    std::string reason_;
};

/// The greedy encoder exceeded its iteration guard.
class NonTerminating : public Error {
public:
    using Error::Error;
};

/// A digit list passed to a reconstruction routine is not a valid pattern.
class InvalidDigits : public Error {
public:
    using Error::Error;
};

/// An exponent list is empty, unsorted, or has two entries closer than 2.
class InvalidGaps : public Error {
public:
    using Error::Error;
};

}  // namespace phibase
