#include "signreg/signvar.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace signreg {

namespace {

constexpr long kUnreachable = std::numeric_limits<long>::min() / 4;

bool allowed(int actual, int s) { return actual == 0 || actual == s; }

// Index 0 is sign -1, index 1 is sign +1.
constexpr std::array<int, 2> kSigns{-1, 1};

}  // namespace

std::size_t Partition::block_begin(std::size_t k) const {
    return k == 1 ? 1 : boundaries[k - 2] + 1;
}

std::size_t Partition::block_end(std::size_t k) const {
    return k == block_count() ? dim : boundaries[k - 1];
}

std::vector<int> signs_of(const RatVector& x) {
    std::vector<int> s(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) s[i] = x[i].sign();
    return s;
}

std::size_t s_minus(std::span<const int> signs) {
    std::size_t changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

std::size_t s_minus(const RatVector& x) { return s_minus(signs_of(x)); }

std::size_t s_plus(std::span<const int> signs) { return variation_profile(signs).s_plus; }

std::size_t s_plus(const RatVector& x) { return s_plus(signs_of(x)); }

VariationResult variation_profile(std::span<const int> signs) {
    VariationResult r;
    const std::size_t n = signs.size();
    r.s_minus = s_minus(signs);
    for (int s : signs)
        if (s != 0) { r.first_nonzero_sign = s; break; }
    for (auto it = signs.rbegin(); it != signs.rend(); ++it)
        if (*it != 0) { r.last_nonzero_sign = *it; break; }
    if (r.first_nonzero_sign == 0) {
        r.zero_vector = true;
        r.s_plus = n;
        return r;
    }

    // fwd[i][t]: best change count over positions 0..i with position i taking kSigns[t].
    // bwd[i][t]: best change count over positions i..n-1 with position i taking kSigns[t].
    std::vector<std::array<long, 2>> fwd(n), bwd(n);
    for (int t = 0; t < 2; ++t) fwd[0][t] = allowed(signs[0], kSigns[t]) ? 0 : kUnreachable;
    for (std::size_t i = 1; i < n; ++i)
        for (int t = 0; t < 2; ++t) {
            if (!allowed(signs[i], kSigns[t])) { fwd[i][t] = kUnreachable; continue; }
            fwd[i][t] = std::max(fwd[i - 1][t], fwd[i - 1][1 - t] + 1);
        }
    for (int t = 0; t < 2; ++t) bwd[n - 1][t] = allowed(signs[n - 1], kSigns[t]) ? 0 : kUnreachable;
    for (std::size_t i = n - 1; i-- > 0;)
        for (int t = 0; t < 2; ++t) {
            if (!allowed(signs[i], kSigns[t])) { bwd[i][t] = kUnreachable; continue; }
            bwd[i][t] = std::max(bwd[i + 1][t], bwd[i + 1][1 - t] + 1);
        }

    const long best = std::max(fwd[n - 1][0], fwd[n - 1][1]);
    r.s_plus = static_cast<std::size_t>(best);
    r.s_plus_first_signs = {bwd[0][0] == best, bwd[0][1] == best};
    r.s_plus_last_signs = {fwd[n - 1][0] == best, fwd[n - 1][1] == best};
    return r;
}

VariationResult variation_profile(const RatVector& x) { return variation_profile(signs_of(x)); }

Partition partition_by_sign(const RatVector& x) {
    auto signs = signs_of(x);
    Partition p;
    p.dim = x.dim();
    int first = 0;
    for (int s : signs)
        if (s != 0) { first = s; break; }
    if (first == 0) throw DomainError("partition_by_sign: zero vector");
    if (first < 0) {
        p.flipped = true;
        for (int& s : signs) s = -s;
    }
    int current = 1;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] != 0 && signs[i] != current) {
            p.boundaries.push_back(i);  // block ends at 1-based position i
            current = signs[i];
        }
    }
    return p;
}

}  // namespace signreg
