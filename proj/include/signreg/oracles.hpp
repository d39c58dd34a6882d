#pragma once

// Brute-force reference computations. These deliberately avoid the library's
// fast paths so they can be used to check them.

#include "signreg/matrix.hpp"
#include "signreg/signvar.hpp"

#include <span>

namespace signreg::oracle {

struct FillingMax {
    std::size_t s_plus = 0;
    SignSet first;  // sign at position 1 over all maximizing fillings
    SignSet last;
};

/// Maximum sign changes over all 2^z +-1 fillings of the zeros. Not defined
/// for the all-zero sequence (returns s_plus = n with empty sets).
FillingMax s_plus_by_filling(std::span<const int> signs);

/// Minor of F*A*G on (rows, cols) as the double Cauchy-Binet sum over
/// intermediate index sets K, L: sum det F[rows,K] det A[K,L] det G[L,cols].
Rational cauchy_binet_minor(const RatMatrix& f, const RatMatrix& a, const RatMatrix& g, const IndexSet& rows,
                            const IndexSet& cols);

}  // namespace signreg::oracle
