#include "listsched/multiset_permutations.hpp"

#include <numeric>
#include <stdexcept>

namespace listsched {

BigCount multinomial(const std::vector<std::size_t>& counts) {
    // Build up as a product of binomials: C(k1, k1) * C(k1+k2, k2) * ...
    BigCount result = 1;
    std::size_t total = 0;
    for (std::size_t k : counts) {
        for (std::size_t i = 1; i <= k; ++i) {
            result *= total + i;
            result /= i;
        }
        total += k;
    }
    return result;
}

MultisetPermutations::MultisetPermutations(std::vector<std::size_t> counts)
    : counts_(std::move(counts)), length_(std::accumulate(counts_.begin(), counts_.end(), std::size_t{0})),
      count_(multinomial(counts_)) {}

std::vector<std::size_t> MultisetPermutations::unrank(const BigCount& rank) const {
    if (rank < 0 || rank >= count_) throw std::out_of_range("permutation rank out of range");
    std::vector<std::size_t> remaining = counts_;
    std::vector<std::size_t> out;
    out.reserve(length_);
    BigCount r = rank;
    BigCount block = count_; // permutations of the remaining multiset
    for (std::size_t pos = 0; pos < length_; ++pos) {
        const std::size_t left = length_ - pos;
        for (std::size_t s = 0; s < remaining.size(); ++s) {
            if (remaining[s] == 0) continue;
            // Fraction of the block that starts with symbol s is remaining[s] / left.
            BigCount with_s = block * remaining[s] / left;
            if (r < with_s) {
                out.push_back(s);
                --remaining[s];
                block = with_s;
                break;
            }
            r -= with_s;
        }
    }
    return out;
}

BigCount MultisetPermutations::rank(const std::vector<std::size_t>& sequence) const {
    if (sequence.size() != length_) throw std::invalid_argument("sequence length mismatch");
    std::vector<std::size_t> remaining = counts_;
    BigCount r = 0;
    BigCount block = count_;
    for (std::size_t pos = 0; pos < length_; ++pos) {
        const std::size_t left = length_ - pos;
        const std::size_t sym = sequence[pos];
        if (sym >= remaining.size() || remaining[sym] == 0) throw std::invalid_argument("not a permutation of the multiset");
        for (std::size_t s = 0; s < sym; ++s)
            if (remaining[s] > 0) r += block * remaining[s] / left;
        block = block * remaining[sym] / left;
        --remaining[sym];
    }
    return r;
}

} // namespace listsched
