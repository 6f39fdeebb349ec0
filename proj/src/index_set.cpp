#include "phibase/index_set.hpp"

#include <algorithm>

#include "phibase/errors.hpp"

namespace phibase {

IndexSet::IndexSet(std::vector<int> exponents) : exponents_(std::move(exponents))
{
    std::sort(exponents_.begin(), exponents_.end());
    for (std::size_t i = 1; i < exponents_.size(); ++i) {
        if (exponents_[i] - exponents_[i - 1] < 2)
            throw InvalidGaps("exponents " + std::to_string(exponents_[i - 1]) + " and " +
                              std::to_string(exponents_[i]) + " are closer than 2");
    }
}

bool IndexSet::contains(int k) const
{
    return std::binary_search(exponents_.begin(), exponents_.end(), k);
}

IndexSet IndexSet::shifted(int offset) const
{
    IndexSet out;
    out.exponents_.reserve(exponents_.size());
    for (int e : exponents_)
        out.exponents_.push_back(e + offset);
    return out;
}

std::string IndexSet::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (i != 0)
            s += ", ";
        s += std::to_string(exponents_[i]);
    }
    return s + "}";
}

}  // namespace phibase
