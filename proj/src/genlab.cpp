#include "signreg/genlab.hpp"

#include "signreg/combinatorics.hpp"
#include "signreg/random.hpp"
#include "signreg/ratlin.hpp"
#include "signreg/signvar.hpp"
#include "signreg/vdcert.hpp"

#include <algorithm>

namespace signreg {

KernelParam::KernelParam(Rational q) : q_(std::move(q)) {
    if (q_.sign() <= 0 || q_ >= Rational(1)) throw DomainError("kernel parameter q must lie strictly between 0 and 1");
}

RatMatrix gauss_kernel(const KernelParam& p, std::size_t m, std::size_t n) {
    RatMatrix f(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t d = i > j ? i - j : j - i;
            f(i, j) = pow(p.q(), static_cast<unsigned>(d * d));
        }
    return f;
}

RatMatrix gauss_kernel(const KernelParam& p, std::size_t n) { return gauss_kernel(p, n, n); }

RatMatrix cauchy_tp(const RatVector& xnodes, const RatVector& ynodes) {
    auto check = [](const RatVector& v, const char* name) {
        if (v.dim() == 0) throw DomainError(std::string(name) + " nodes must be nonempty");
        for (std::size_t i = 0; i < v.dim(); ++i) {
            if (v[i].sign() <= 0) throw DomainError(std::string(name) + " nodes must be positive");
            if (i > 0 && v[i] <= v[i - 1]) throw DomainError(std::string(name) + " nodes must be strictly increasing");
        }
    };
    check(xnodes, "x");
    check(ynodes, "y");
    RatMatrix c(xnodes.dim(), ynodes.dim());
    for (std::size_t i = 0; i < xnodes.dim(); ++i)
        for (std::size_t j = 0; j < ynodes.dim(); ++j) c(i, j) = Rational(1) / (xnodes[i] + ynodes[j]);
    return c;
}

namespace {

RatMatrix pascal_rect(std::size_t m, std::size_t n) {
    RatMatrix p(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p(i, j) = (i == 0 || j == 0) ? Rational(1) : p(i - 1, j) + p(i, j - 1);
    return p;
}

int parity_sign(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

RatMatrix pascal_tp(std::size_t n) {
    if (n < 1) throw DomainError("pascal_tp: n must be at least 1");
    return pascal_rect(n, n);
}

std::string to_string(Transform t) {
    switch (t) {
        case Transform::Negate: return "negate";
        case Transform::ReverseRows: return "reverse_rows";
        case Transform::ReverseCols: return "reverse_cols";
        case Transform::Transpose: return "transpose";
    }
    return "?";
}

SignPattern map_pattern(const SignPattern& eps, Transform op) {
    std::vector<int> out(eps.size());
    for (std::size_t k = 1; k <= eps.size(); ++k) {
        int f = 1;
        if (op == Transform::Negate) f = parity_sign(k);
        else if (op == Transform::ReverseRows || op == Transform::ReverseCols) f = parity_sign(k * (k - 1) / 2);
        out[k - 1] = f * eps.eps(k);
    }
    return SignPattern(std::move(out));
}

Transformed transform(const RatMatrix& a, Transform op) {
    Transformed t;
    switch (op) {
        case Transform::Negate: t.matrix = -a; break;
        case Transform::Transpose: t.matrix = a.transposed(); break;
        case Transform::ReverseRows:
            t.matrix = RatMatrix(a.rows(), a.cols());
            for (std::size_t i = 0; i < a.rows(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j) t.matrix(i, j) = a(a.rows() - 1 - i, j);
            break;
        case Transform::ReverseCols:
            t.matrix = RatMatrix(a.rows(), a.cols());
            for (std::size_t i = 0; i < a.rows(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j) t.matrix(i, j) = a(i, a.cols() - 1 - j);
            break;
    }
    t.pattern_factor = map_pattern(SignPattern::all_plus(a.min_dim()), op).signs();
    return t;
}

RatMatrix singular_ssr(std::size_t n, const RatMatrix& base, const KernelParam& p) {
    if (n < 2) throw DomainError("singular_ssr: n must be at least 2");
    if (base.rows() != n - 1 || base.cols() != n - 1) throw ShapeError("singular_ssr: base must be (n-1)x(n-1)");
    const auto cb = classify_ssr(base, n - 1, {.force = true});
    if (cb.verdict != Verdict::SSR) throw DomainError("singular_ssr: base matrix is not SSR");

    const RatMatrix f = gauss_kernel(p, n);
    RatMatrix a = f * direct_sum(base, RatMatrix{{Rational(0)}}) * f;

    const auto ca = classify_ssr(a, n - 1, {.force = true});
    if (ca.verdict != Verdict::SSR || ca.pattern != cb.pattern)
        throw GenerationError("singular_ssr: product is not SSR_{n-1} with the base signature");
    if (!det(a).is_zero()) throw GenerationError("singular_ssr: product is not singular");
    return a;
}

Rational max_entry_distance(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("max_entry_distance: shape mismatch");
    Rational best;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) best = std::max(best, (a(i, j) - b(i, j)).abs());
    return best;
}

std::vector<RatMatrix> density_approximate(const RatMatrix& a, const SignPattern& eps,
                                           const std::vector<KernelParam>& schedule) {
    const std::size_t k = eps.size();
    if (k < 1 || k > a.min_dim()) throw DomainError("density_approximate: pattern length out of range");
    if (!eps.fully_constrained()) throw DomainError("density_approximate: target pattern must be fully constrained");
    const auto c = classify_sr(a, k, {.force = true});
    if (c.verdict == Verdict::Neither)
        throw DomainError("density_approximate: matrix is not sign regular (order " +
                          std::to_string(c.violation->order) + ")");
    for (std::size_t r = 1; r <= k; ++r) {
        if (c.pattern.eps(r) == 0)
            throw DomainError("density_approximate: every minor of order " + std::to_string(r) + " vanishes");
        if (c.pattern.eps(r) != eps.eps(r))
            throw DomainError("density_approximate: matrix signature differs from target at order " +
                              std::to_string(r));
    }

    std::vector<RatMatrix> out;
    out.reserve(schedule.size());
    for (std::size_t s = 0; s < schedule.size(); ++s) {
        RatMatrix aq = gauss_kernel(schedule[s], a.rows()) * a * gauss_kernel(schedule[s], a.cols());
        const auto cq = classify_ssr(aq, k, {.force = true});
        if (cq.verdict != Verdict::SSR || cq.pattern != eps)
            throw GenerationError("density_approximate: smoothed matrix is not SSR with the target signature");
        if (s > 0 && schedule[s].q() < schedule[s - 1].q() &&
            !(max_entry_distance(aq, a) < max_entry_distance(out.back(), a)))
            throw GenerationError("density_approximate: distance to A did not decrease");
        out.push_back(std::move(aq));
    }
    return out;
}

RatMatrix construct_ssr(const SignPattern& eps, std::uint64_t seed) {
    if (eps.size() < 1 || !eps.fully_constrained()) throw DomainError("construct_ssr: need a fully constrained pattern");
    Rng rng = Rng::derived(seed, {0xC0517});
    RatMatrix a{{Rational(eps.eps(1) * rng.uniform_int(1, 5))}};
    for (std::size_t s = 2; s <= eps.size(); ++s) {
        const KernelParam q(Rational(1, rng.uniform_int(2, 3)));
        a = singular_ssr(s, a, q);

        // Raising a_11 by t changes each minor through (1,1) by t times its
        // complementary minor. Stay inside every lower-order sign constraint.
        Rational bound;
        bool have_bound = false;
        for (std::size_t r = 1; r < s; ++r) {
            for_each_subset(s, r, [&](const IndexSet& rows) {
                if (rows[0] != 1) return false;  // lexicographic: no later set contains row 1
                for_each_subset(s, r, [&](const IndexSet& cols) {
                    if (cols[0] != 1) return false;
                    const Rational m0 = minor(a, rows, cols);
                    const Rational c = r == 1 ? Rational(1) : minor(a, rows.without(0), cols.without(0));
                    if (c.is_zero()) return true;
                    const Rational b = m0.abs() / c.abs();
                    if (!have_bound || b < bound) bound = b;
                    have_bound = true;
                    return true;
                });
                return true;
            });
        }
        Rational t(1);
        while (!(t < bound / Rational(2))) t /= Rational(2);
        const IndexSet tail = IndexSet::contiguous(2, s - 1);
        const int comp = minor(a, tail, tail).sign();
        if (comp * eps.eps(s) < 0) t = -t;
        a(0, 0) += t;
    }
    if (!is_ssr_with(a, eps)) throw GenerationError("construct_ssr: result failed verification");
    return a;
}

namespace {

std::optional<RatMatrix> from_transform_family(std::size_t m, std::size_t n, const SignPattern& eps, Rng& rng) {
    const std::size_t k = eps.size();
    const SignPattern tp = SignPattern::all_plus(k);
    const SignPattern neg = map_pattern(tp, Transform::Negate);
    const SignPattern rev = map_pattern(tp, Transform::ReverseRows);
    const SignPattern negrev = map_pattern(rev, Transform::Negate);
    if (eps != tp && eps != neg && eps != rev && eps != negrev) return std::nullopt;

    RatMatrix src;
    switch (rng.uniform_int(0, 2)) {
        case 0: src = gauss_kernel(KernelParam(Rational(1, rng.uniform_int(2, 4))), m, n); break;
        case 1: src = pascal_rect(m, n); break;
        default: {
            RatVector x(m), y(n);
            long acc = 0;
            for (std::size_t i = 0; i < m; ++i) x[i] = acc += rng.uniform_int(1, 3);
            acc = 0;
            for (std::size_t j = 0; j < n; ++j) y[j] = acc += rng.uniform_int(1, 3);
            src = cauchy_tp(x, y);
        }
    }
    if (eps == rev || eps == negrev)
        src = transform(src, rng.bernoulli(0.5) ? Transform::ReverseRows : Transform::ReverseCols).matrix;
    if (eps == neg || eps == negrev) src = -src;
    return src;
}

}  // namespace

RandomSsr random_ssr(std::size_t m, std::size_t n, const SignPattern& eps, const RandomSsrOptions& opts) {
    const std::size_t k = std::min(m, n);
    if (k < 1 || k > 5) throw DomainError("random_ssr: min(m,n) must be between 1 and 5");
    if (eps.size() != k || !eps.fully_constrained())
        throw DomainError("random_ssr: pattern must be fully constrained with length min(m,n)");
    Rng rng = Rng::derived(opts.seed, {m, n});

    if (auto fam = from_transform_family(m, n, eps, rng); fam && is_ssr_with(*fam, eps))
        return {*fam, SsrSource::TransformFamily};

    for (std::size_t attempt = 0; attempt < opts.max_attempts; ++attempt) {
        RatMatrix a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = eps.eps(1) * rng.uniform_int(1, 9);
        if (is_ssr_with(a, eps)) return {a, SsrSource::RejectionSampling};
    }

    if (!opts.constructive_fallback)
        throw GenerationError("random_ssr: no SSR(" + eps.str() + ") matrix found within the attempt budget");
    RatMatrix core = construct_ssr(eps, rng.next());
    if (m != k || n != k) {
        // Totally positive kernels on either side preserve every minor sign (Cauchy-Binet).
        const KernelParam q(Rational(1, 2));
        core = gauss_kernel(q, m, k) * core * gauss_kernel(q, k, n);
    }
    if (!is_ssr_with(core, eps)) throw GenerationError("random_ssr: constructed matrix failed verification");
    return {core, SsrSource::Constructed};
}

BiorthantPattern::BiorthantPattern(std::vector<int> signs) : signs_(std::move(signs)) {
    if (signs_.empty()) throw DomainError("bi-orthant pattern must be nonempty");
    for (int s : signs_)
        if (s != 1 && s != -1) throw DomainError("bi-orthant signs must be +1 or -1");
}

bool BiorthantPattern::alternating() const {
    for (std::size_t i = 1; i < signs_.size(); ++i)
        if (signs_[i] == signs_[i - 1]) return false;
    return true;
}

std::vector<BiorthantPattern> BiorthantPattern::non_alternating(std::size_t n) {
    std::vector<BiorthantPattern> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<int> s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> (n - 1 - i)) & 1U ? -1 : 1;
        BiorthantPattern p(std::move(s));
        if (!p.alternating()) out.push_back(std::move(p));
    }
    return out;
}

RatVector sample_biorthant(const BiorthantPattern& pattern, std::uint64_t seed, long magnitude_bound) {
    if (magnitude_bound < 1) throw DomainError("sample_biorthant: magnitude bound must be at least 1");
    Rng rng(seed);
    RatVector x(pattern.size());
    for (std::size_t i = 0; i < x.dim(); ++i) x[i] = pattern.signs()[i] * rng.positive_rational(magnitude_bound);
    return x;
}

BiorthantDemoReport nonalternating_demo(std::size_t n, const SignPattern& eps, std::size_t trials,
                                        std::uint64_t seed, const KernelParam& q) {
    if (n < 2) throw DomainError("nonalternating_demo: n must be at least 2");
    if (eps.size() != n - 1 || !eps.fully_constrained())
        throw DomainError("nonalternating_demo: pattern must be fully constrained of length n-1");

    BiorthantDemoReport rep;
    rep.n = n;
    rep.pattern = eps;
    rep.trials = trials;
    rep.thin_coverage = n == 2;

    const RatMatrix base = random_ssr(n - 1, n - 1, eps, {.seed = seed}).matrix;
    rep.matrix = singular_ssr(n, base, q);
    rep.matrix_singular = det(rep.matrix).is_zero();

    const auto patterns = BiorthantPattern::non_alternating(n);
    Rng rng = Rng::derived(seed, {n, 0xB1});
    for (std::size_t t = 0; t < trials; ++t) {
        const auto& pat = patterns[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(patterns.size()) - 1))];
        const RatVector x = sample_biorthant(pat, rng.next());
        const VariationResult xp = variation_profile(x);
        const VariationResult axp = variation_profile(mat_vec(rep.matrix, x));
        bool bad = false;
        if (axp.s_plus > xp.s_minus) {
            ++rep.vd_failures;
            bad = true;
        } else {
            const Agreement ag = sign_agreement(xp, axp, eps, VdMode::Strict, n - 2);
            if (ag != Agreement::NotApplicable) ++rep.sign_checks;
            if (ag == Agreement::Fail || ag == Agreement::Ambiguous) {
                ++rep.sign_failures;
                bad = true;
            }
        }
        if (bad && !rep.first_counterexample) rep.first_counterexample = x;
    }

    // Single alternating test vector on the full matrix: must fail whatever eps_n is.
    const IndexSet all = IndexSet::range(n);
    VdProbe probe;
    probe.test = make_test_vector(rep.matrix, all, all, alternating_vector(n), VdMode::Strict);
    probe.product = mat_vec(rep.matrix, probe.test.vector);
    probe.x_profile = variation_profile(probe.test.vector);
    probe.product_profile = variation_profile(probe.product);
    rep.alternating_test_detects = true;
    for (int last : {1, -1}) {
        std::vector<int> full = eps.signs();
        full.push_back(last);
        if (judge({probe}, VdMode::Strict, SignPattern(full)).certified) rep.alternating_test_detects = false;
    }
    return rep;
}

}  // namespace signreg
