#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace domstab {

/// Calls visit(span of k indices) for every k-subset of {0..n-1}, in
/// lexicographic order of the sorted index lists. Stops early and returns
/// true as soon as visit returns true.
template <class Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
    if (k > n)
        return false;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        if (visit(std::span<const std::size_t>(idx)))
            return true;
        // advance: rightmost index that can still move
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace domstab
