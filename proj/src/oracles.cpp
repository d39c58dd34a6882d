#include "signreg/oracles.hpp"

#include "signreg/combinatorics.hpp"
#include "signreg/ratlin.hpp"

#include <vector>

namespace signreg::oracle {

FillingMax s_plus_by_filling(std::span<const int> signs) {
    FillingMax out;
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < signs.size(); ++i)
        if (signs[i] == 0) zeros.push_back(i);
    if (zeros.size() == signs.size()) {
        out.s_plus = signs.size();
        return out;
    }
    std::vector<int> filled(signs.begin(), signs.end());
    bool first_found = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << zeros.size()); ++mask) {
        for (std::size_t z = 0; z < zeros.size(); ++z) filled[zeros[z]] = (mask >> z) & 1U ? 1 : -1;
        std::size_t changes = 0;
        for (std::size_t i = 1; i < filled.size(); ++i)
            if (filled[i] != filled[i - 1]) ++changes;
        if (!first_found || changes > out.s_plus) {
            out = FillingMax{changes, {}, {}};
            first_found = true;
        }
        if (changes == out.s_plus) {
            (filled.front() > 0 ? out.first.plus : out.first.minus) = true;
            (filled.back() > 0 ? out.last.plus : out.last.minus) = true;
        }
    }
    return out;
}

Rational cauchy_binet_minor(const RatMatrix& f, const RatMatrix& a, const RatMatrix& g, const IndexSet& rows,
                            const IndexSet& cols) {
    const std::size_t r = rows.size();
    Rational total;
    const auto ks = subsets(f.cols(), r);
    const auto ls = subsets(a.cols(), r);
    for (const auto& k : ks) {
        const Rational fk = det_cofactor(submatrix(f, rows, k));
        if (fk.is_zero()) continue;
        for (const auto& l : ls) {
            const Rational akl = det_cofactor(submatrix(a, k, l));
            if (akl.is_zero()) continue;
            total += fk * akl * det_cofactor(submatrix(g, l, cols));
        }
    }
    return total;
}

}  // namespace signreg::oracle
