#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace listsched {

using BigCount = boost::multiprecision::cpp_int;

// Distinct permutations of a multiset given by per-symbol multiplicities.
// Symbols are 0..counts.size()-1; ranks follow lexicographic order of the
// symbol sequence, starting from the sorted sequence at rank 0.
class MultisetPermutations {
public:
    explicit MultisetPermutations(std::vector<std::size_t> counts);

    [[nodiscard]] std::size_t length() const { return length_; }
    // n! / prod(k_i!)
    [[nodiscard]] const BigCount& count() const { return count_; }

    [[nodiscard]] std::vector<std::size_t> unrank(const BigCount& rank) const;
    [[nodiscard]] BigCount rank(const std::vector<std::size_t>& sequence) const;

private:
    std::vector<std::size_t> counts_;
    std::size_t length_ = 0;
    BigCount count_;
};

// Multinomial coefficient (sum counts)! / prod(counts_i!).
BigCount multinomial(const std::vector<std::size_t>& counts);

} // namespace listsched
