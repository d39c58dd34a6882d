#include "signreg/ratlin.hpp"

#include <utility>
#include <vector>

namespace signreg {

namespace {

void require_square(const RatMatrix& m, const char* what) {
    if (!m.is_square()) throw ShapeError(std::string(what) + ": matrix must be square");
}

}  // namespace

Rational det(const RatMatrix& m) {
    require_square(m, "det");
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);

    // Lift each row to integers: row_i * L_i with L_i = lcm of its denominators.
    std::vector<mpz_class> a(n * n);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            const mpq_class& q = m(i, j).raw();
            a[i * n + j] = q.get_num() * (l / q.get_den());
        }
        scale *= l;
    }

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p * n + k] == 0) ++p;
            if (p == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            sign = -sign;
        }
        const mpz_class& piv = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = piv * a[i * n + j] - a[i * n + k] * a[k * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = piv;
    }
    mpz_class d = a[n * n - 1];
    if (sign < 0) d = -d;
    return Rational(d, scale);
}

Rational det_cofactor(const RatMatrix& m) {
    require_square(m, "det_cofactor");
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Rational acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        RatMatrix sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) sub(i - 1, cc++) = m(i, c);
        const Rational term = m(0, j) * det_cofactor(sub);
        if (j % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

RatMatrix submatrix(const RatMatrix& a, const IndexSet& rows, const IndexSet& cols) {
    if (rows.empty() || cols.empty()) throw ShapeError("submatrix: empty index set");
    if (rows.back() > a.rows() || cols.back() > a.cols()) throw ShapeError("submatrix: index out of range");
    RatMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = a(rows[i] - 1, cols[j] - 1);
    return s;
}

Rational minor(const RatMatrix& a, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size()) throw ShapeError("minor: row and column index sets differ in size");
    return det(submatrix(a, rows, cols));
}

RatMatrix adjugate(const RatMatrix& m) {
    require_square(m, "adjugate");
    const std::size_t n = m.rows();
    if (n == 1) return RatMatrix{{Rational(1)}};
    RatMatrix adj(n, n);
    RatMatrix sub(n - 1, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c)
                    if (c != j) sub(rr, cc++) = m(r, c);
                ++rr;
            }
            Rational cof = det(sub);
            if ((i + j) % 2 == 1) cof = -cof;
            adj(j, i) = std::move(cof);
        }
    }
    return adj;
}

RatVector kernel_vector(const RatMatrix& m) {
    require_square(m, "kernel_vector");
    const std::size_t n = m.rows();
    RatMatrix r = m;
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(n, false);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && r(p, col).is_zero()) ++p;
        if (p == n) continue;
        if (p != row)
            for (std::size_t j = 0; j < n; ++j) std::swap(r(p, j), r(row, j));
        const Rational inv = Rational(1) / r(row, col);
        for (std::size_t j = col; j < n; ++j) r(row, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || r(i, col).is_zero()) continue;
            const Rational f = r(i, col);
            for (std::size_t j = col; j < n; ++j) r(i, j) -= f * r(row, j);
        }
        pivot_col.push_back(col);
        is_pivot[col] = true;
        ++row;
    }
    std::size_t free_col = n;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) { free_col = c; break; }
    if (free_col == n) throw DomainError("kernel_vector: matrix is nonsingular, no kernel");

    RatVector z(n);
    z[free_col] = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) z[pivot_col[k]] = -r(k, free_col);
    for (std::size_t i = 0; i < n; ++i) {
        if (z[i].is_zero()) continue;
        const Rational lead = z[i];
        for (std::size_t j = 0; j < n; ++j) z[j] /= lead;
        break;
    }
    return z;
}

RatVector mat_vec(const RatMatrix& a, const RatVector& x) {
    if (a.cols() != x.dim()) throw ShapeError("mat_vec: dimension mismatch");
    RatVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!x[j].is_zero()) y[i] += a(i, j) * x[j];
    return y;
}

RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix s(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, a.cols() + j) = b(i, j);
    return s;
}

}  // namespace signreg
