#include "signreg/classify.hpp"

#include "signreg/combinatorics.hpp"
#include "signreg/ratlin.hpp"

#include <sstream>

namespace signreg {

SignPattern::SignPattern(std::vector<int> signs) : signs_(std::move(signs)) {
    for (int s : signs_)
        if (s < -1 || s > 1) throw DomainError("sign pattern entries must be -1, 0 or +1");
}

SignPattern SignPattern::parse(std::string_view text) {
    std::vector<int> signs;
    for (char c : text) {
        switch (c) {
            case '+': signs.push_back(1); break;
            case '-': signs.push_back(-1); break;
            case '?': signs.push_back(0); break;
            case ',':
            case ' ': break;
            default:
                throw DomainError(std::string("bad sign pattern character '") + c + "' in \"" +
                                  std::string(text) + "\"");
        }
    }
    if (signs.empty()) throw DomainError("empty sign pattern");
    return SignPattern(std::move(signs));
}

std::vector<SignPattern> SignPattern::all_strict(std::size_t k) {
    std::vector<SignPattern> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<int> s(k);
        for (std::size_t r = 0; r < k; ++r) s[r] = (mask >> (k - 1 - r)) & 1U ? -1 : 1;
        out.emplace_back(std::move(s));
    }
    return out;
}

int SignPattern::eps(std::size_t r) const {
    if (r == 0) return 1;
    if (r > signs_.size()) throw DomainError("sign pattern order out of range");
    return signs_[r - 1];
}

bool SignPattern::fully_constrained() const {
    for (int s : signs_)
        if (s == 0) return false;
    return true;
}

SignPattern SignPattern::prefix(std::size_t k) const {
    if (k > signs_.size()) throw DomainError("sign pattern prefix too long");
    return SignPattern(std::vector<int>(signs_.begin(), signs_.begin() + static_cast<long>(k)));
}

std::string SignPattern::str() const {
    std::string s;
    for (std::size_t r = 0; r < signs_.size(); ++r) {
        if (r) s += ',';
        s += signs_[r] > 0 ? '+' : (signs_[r] < 0 ? '-' : '?');
    }
    return s;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::SSR: return "SSR";
        case Verdict::SR: return "SR";
        case Verdict::NotSSR: return "not SSR";
        case Verdict::Neither: return "neither";
    }
    return "?";
}

std::string to_string(ViolationReason r) {
    return r == ViolationReason::ZeroMinor ? "zero-minor" : "sign-conflict";
}

namespace {

void check_order(const RatMatrix& a, std::size_t k, const ClassifyOptions& opts) {
    if (k < 1 || k > a.min_dim()) throw DomainError("order k must satisfy 1 <= k <= min(m,n)");
    if (!opts.force && a.min_dim() > kMaxClassifyDim)
        throw SizeGuardError("min(m,n) exceeds " + std::to_string(kMaxClassifyDim) +
                             "; minor enumeration refused without force");
}

// Visits candidate (rows, cols) pairs of order r: all of them, or only contiguous ones.
template <typename Visitor>
bool for_each_minor(const RatMatrix& a, std::size_t r, bool contiguous_only, Visitor&& visit) {
    if (contiguous_only) {
        for (std::size_t i = 1; i + r - 1 <= a.rows(); ++i)
            for (std::size_t j = 1; j + r - 1 <= a.cols(); ++j)
                if (!visit(IndexSet::contiguous(i, r), IndexSet::contiguous(j, r))) return false;
        return true;
    }
    const auto col_sets = subsets(a.cols(), r);
    return for_each_subset(a.rows(), r, [&](const IndexSet& rows) {
        for (const auto& cols : col_sets)
            if (!visit(rows, cols)) return false;
        return true;
    });
}

Classification strict_scan(const RatMatrix& a, std::size_t k, bool contiguous_only) {
    Classification c;
    c.order = k;
    std::vector<int> eps;
    for (std::size_t r = 1; r <= k; ++r) {
        int want = 0;
        std::uint64_t count = 0;
        const bool ok = for_each_minor(a, r, contiguous_only, [&](const IndexSet& rows, const IndexSet& cols) {
            ++count;
            const int s = minor(a, rows, cols).sign();
            if (s == 0) {
                c.violation = MinorViolation{r, rows, cols, ViolationReason::ZeroMinor};
                return false;
            }
            if (want == 0) want = s;
            else if (s != want) {
                c.violation = MinorViolation{r, rows, cols, ViolationReason::SignConflict};
                return false;
            }
            return true;
        });
        c.minors_inspected.push_back(count);
        if (!ok) {
            c.verdict = Verdict::NotSSR;
            c.pattern = SignPattern(eps);
            return c;
        }
        eps.push_back(want);
    }
    c.verdict = Verdict::SSR;
    c.pattern = SignPattern(std::move(eps));
    return c;
}

}  // namespace

Classification classify_ssr(const RatMatrix& a, std::size_t k, ClassifyOptions opts) {
    check_order(a, k, opts);
    return strict_scan(a, k, false);
}

Classification karlin_ssr_check(const RatMatrix& a, std::size_t k, ClassifyOptions opts) {
    check_order(a, k, opts);
    return strict_scan(a, k, true);
}

Classification classify_sr(const RatMatrix& a, std::size_t k, ClassifyOptions opts) {
    check_order(a, k, opts);
    Classification c;
    c.order = k;
    std::vector<int> eps;
    bool strict = true;
    for (std::size_t r = 1; r <= k; ++r) {
        int seen = 0;
        std::uint64_t count = 0;
        const bool ok = for_each_minor(a, r, false, [&](const IndexSet& rows, const IndexSet& cols) {
            ++count;
            const int s = minor(a, rows, cols).sign();
            if (s == 0) {
                strict = false;
                return true;
            }
            if (seen == 0) seen = s;
            else if (s != seen) {
                c.violation = MinorViolation{r, rows, cols, ViolationReason::SignConflict};
                return false;
            }
            return true;
        });
        c.minors_inspected.push_back(count);
        if (!ok) {
            c.verdict = Verdict::Neither;
            c.pattern = SignPattern(eps);
            return c;
        }
        eps.push_back(seen);
    }
    c.verdict = strict ? Verdict::SSR : Verdict::SR;
    c.pattern = SignPattern(std::move(eps));
    return c;
}

Classification classify_auto(const RatMatrix& a, std::size_t k, ClassifyOptions opts) {
    Classification strict = classify_ssr(a, k, opts);
    if (strict.verdict == Verdict::SSR) return strict;
    Classification loose = classify_sr(a, k, opts);
    if (loose.verdict == Verdict::Neither) return loose;
    // SR but not SSR: report the first strict failure (a zero minor).
    loose.verdict = Verdict::SR;
    loose.violation = strict.violation;
    return loose;
}

bool pattern_compatible(const Classification& c, const SignPattern& eps) {
    if (eps.size() != c.order) throw DomainError("pattern_compatible: length mismatch");
    if (c.verdict == Verdict::Neither || c.verdict == Verdict::NotSSR) return false;
    for (std::size_t r = 1; r <= eps.size(); ++r) {
        const int have = c.pattern.eps(r);
        if (have != 0 && have != eps.eps(r)) return false;
    }
    return true;
}

bool is_ssr_with(const RatMatrix& a, const SignPattern& eps) {
    const auto c = classify_ssr(a, a.min_dim(), {.force = true});
    return c.verdict == Verdict::SSR && c.pattern == eps;
}

}  // namespace signreg
