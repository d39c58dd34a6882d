#pragma once

// Sign-variation counts S- and S+ of real vectors.
//
// S-(x): sign changes after deleting zeros; S-(0) = 0.
// S+(x): the maximum number of sign changes over all ways of replacing each
//        zero by +1 or -1; S+(0) = n for the zero vector of length n.

#include "signreg/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace signreg {

/// Set of signs drawn from {-1, +1}.
struct SignSet {
    bool minus = false;
    bool plus = false;

    [[nodiscard]] bool empty() const { return !minus && !plus; }
    [[nodiscard]] bool unique() const { return minus != plus; }
    [[nodiscard]] int only() const { return plus ? 1 : -1; }  // meaningful when unique()
    [[nodiscard]] bool contains(int s) const { return s > 0 ? plus : (s < 0 && minus); }

    friend bool operator==(const SignSet&, const SignSet&) = default;
};

struct VariationResult {
    std::size_t s_minus = 0;
    std::size_t s_plus = 0;
    int first_nonzero_sign = 0;
    int last_nonzero_sign = 0;
    // Signs that position 1 (resp. n) takes across all S+-maximizing completions.
    // Both empty for the zero vector, where S+ = n holds by convention only.
    SignSet s_plus_first_signs;
    SignSet s_plus_last_signs;
    bool zero_vector = false;
};

/// Contiguous sign blocks of a nonzero vector whose first nonzero entry is
/// positive. Block k (1-based) covers positions boundaries[k-2]+1 .. boundaries[k-1]
/// with boundaries implicitly extended by 0 and n.
struct Partition {
    std::vector<std::size_t> boundaries;  // s_1 < ... < s_r, 1-based
    std::size_t dim = 0;
    bool flipped = false;  // input was negated to make its first nonzero positive

    [[nodiscard]] std::size_t block_count() const { return boundaries.size() + 1; }
    [[nodiscard]] std::size_t block_begin(std::size_t k) const;  // 1-based block, 1-based position
    [[nodiscard]] std::size_t block_end(std::size_t k) const;
};

std::vector<int> signs_of(const RatVector& x);

std::size_t s_minus(std::span<const int> signs);
std::size_t s_minus(const RatVector& x);

std::size_t s_plus(std::span<const int> signs);
std::size_t s_plus(const RatVector& x);

VariationResult variation_profile(std::span<const int> signs);
VariationResult variation_profile(const RatVector& x);

/// Throws DomainError on the zero vector. Zeros are attached to the block of
/// the preceding nonzero run; leading zeros belong to the first block.
Partition partition_by_sign(const RatVector& x);

}  // namespace signreg
