#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace phibase {

/// Strictly increasing integer exponents whose neighbours differ by at least 2.
///
/// Models the exponent list of a base-phi expansion and the offset list of a
/// shift expansion N*F_n = sum F_{n+i}. Construction validates the gap rule.
class IndexSet {
public:
    IndexSet() = default;
    /// Accepts exponents in any order; throws InvalidGaps on duplicates or adjacent entries.
    explicit IndexSet(std::vector<int> exponents);
    IndexSet(std::initializer_list<int> exponents) : IndexSet(std::vector<int>(exponents)) {}

    /// Ascending exponents.
    std::span<const int> exponents() const noexcept { return exponents_; }
    bool empty() const noexcept { return exponents_.empty(); }
    std::size_t size() const noexcept { return exponents_.size(); }
    int min() const { return exponents_.front(); }
    int max() const { return exponents_.back(); }
    bool contains(int k) const;

    /// Exponents shifted by `offset`.
    IndexSet shifted(int offset) const;

    /// "{-4, 1, 3}"
    std::string to_string() const;

    auto begin() const noexcept { return exponents_.begin(); }
    auto end() const noexcept { return exponents_.end(); }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    std::vector<int> exponents_;
};

}  // namespace phibase
