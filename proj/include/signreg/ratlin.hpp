#pragma once

// Exact dense linear algebra over the rationals.

#include "signreg/matrix.hpp"

namespace signreg {

/// Determinant by fraction-free (Bareiss) elimination on the integer matrix
/// obtained by clearing each row's denominators.
Rational det(const RatMatrix& m);

/// Reference determinant by Laplace expansion along the first row. Exponential;
/// kept for cross-checking det() on small matrices.
Rational det_cofactor(const RatMatrix& m);

RatMatrix submatrix(const RatMatrix& a, const IndexSet& rows, const IndexSet& cols);

Rational minor(const RatMatrix& a, const IndexSet& rows, const IndexSet& cols);

/// Classical adjugate (transposed cofactor matrix). The adjugate of any 1x1
/// matrix is (1), the determinant of the empty matrix.
RatMatrix adjugate(const RatMatrix& m);

/// Nonzero z with m*z = 0, scaled so its first nonzero entry is +1.
/// Throws DomainError if m is nonsingular.
RatVector kernel_vector(const RatMatrix& m);

RatVector mat_vec(const RatMatrix& a, const RatVector& x);

/// Block diagonal a (+) b.
RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b);

}  // namespace signreg
