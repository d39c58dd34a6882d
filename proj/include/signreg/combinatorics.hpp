#pragma once

#include "signreg/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace signreg {

/// Visits every r-subset of {1..n} in lexicographic order. The visitor returns
/// false to stop early; the function returns false iff it was stopped.
template <typename Visitor>
bool for_each_subset(std::size_t n, std::size_t r, Visitor&& visit) {
    if (r == 0 || r > n) return true;
    std::vector<std::size_t> idx(r);
    for (std::size_t k = 0; k < r; ++k) idx[k] = k + 1;
    while (true) {
        if (!visit(IndexSet(idx))) return false;
        std::size_t k = r;
        while (k > 0 && idx[k - 1] == n - r + k) --k;
        if (k == 0) return true;
        ++idx[k - 1];
        for (std::size_t t = k; t < r; ++t) idx[t] = idx[t - 1] + 1;
    }
}

/// All r-subsets of {1..n}, lexicographic.
inline std::vector<IndexSet> subsets(std::size_t n, std::size_t r) {
    std::vector<IndexSet> out;
    for_each_subset(n, r, [&](const IndexSet& s) { out.push_back(s); return true; });
    return out;
}

inline std::uint64_t binomial(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    std::uint64_t b = 1;
    for (std::size_t k = 1; k <= r; ++k) b = b * (n - r + k) / k;
    return b;
}

}  // namespace signreg
