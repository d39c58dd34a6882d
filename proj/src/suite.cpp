#include "signreg/suite.hpp"

#include "signreg/classify.hpp"
#include "signreg/combinatorics.hpp"
#include "signreg/genlab.hpp"
#include "signreg/oracles.hpp"
#include "signreg/ratlin.hpp"
#include "signreg/signvar.hpp"
#include "signreg/vdcert.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace signreg {

namespace {

struct Outcome {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> examples;
    std::map<std::string, std::size_t> counters;

    void fail(std::string what, std::size_t cap) {
        ++failures;
        if (examples.size() < cap) examples.push_back(std::move(what));
    }
};

// Evaluates f(0..n-1), optionally on worker threads. Results keep index order.
template <typename F>
std::vector<Outcome> map_outcomes(std::size_t n, bool parallel, const SuiteConfig& cfg, F&& f) {
    std::vector<Outcome> out(n);
    auto run = [&](std::size_t i) {
        try {
            out[i] = f(i);
        } catch (const std::exception& e) {
            out[i].cases += 1;
            out[i].fail(std::string("exception: ") + e.what(), cfg.max_examples);
        }
    };
    const unsigned threads = std::max(1U, std::thread::hardware_concurrency());
    if (!parallel || n < 2 || threads == 1) {
        for (std::size_t i = 0; i < n; ++i) run(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) run(i);
        });
    for (auto& th : pool) th.join();
    return out;
}

class Stopwatch {
public:
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

SectionResult collect(std::string id, std::string title, const std::vector<Outcome>& outs, const SuiteConfig& cfg,
                      const Stopwatch& sw) {
    SectionResult s;
    s.id = std::move(id);
    s.title = std::move(title);
    std::map<std::string, std::size_t> counters;
    for (const auto& o : outs) {
        s.cases += o.cases;
        s.failures += o.failures;
        for (const auto& e : o.examples)
            if (s.examples.size() < cfg.max_examples) s.examples.push_back(e);
        for (const auto& [k, v] : o.counters) counters[k] += v;
    }
    for (const auto& [k, v] : counters) s.details[k] = v;
    s.runtime_s = sw.seconds();
    return s;
}

SignPattern maybe_corrupt(const SignPattern& eps, const SuiteConfig& cfg) {
    if (!cfg.corrupt_certifier || eps.size() < 2) return eps;
    auto s = eps.signs();
    s[1] = -s[1];
    return SignPattern(std::move(s));
}

SignPattern random_pattern(std::size_t k, Rng& rng) {
    std::vector<int> s(k);
    for (auto& e : s) e = rng.bernoulli(0.5) ? 1 : -1;
    return SignPattern(std::move(s));
}

RatMatrix random_matrix(std::size_t m, std::size_t n, Rng& rng) {
    RatMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.rational(-3, 3, 3);
    return a;
}

std::string describe(const RatMatrix& a) { return "A=" + a.str(); }

enum Salt : std::uint64_t {
    kCorpus = 1,
    kEnriched,
    kForward,
    kWitness,
    kBiorthant,
    kSingular,
    kDensity,
    kSemicontinuity,
    kGroup,
    kSeeds,
};

}  // namespace

RatVector random_test_vector(std::size_t n, double zero_rate, Rng& rng) {
    RatVector x(n);
    do {
        for (std::size_t i = 0; i < n; ++i)
            x[i] = rng.bernoulli(zero_rate) ? Rational(0) : Rational(rng.uniform_int(-5, 5) | 1, rng.uniform_int(1, 3));
    } while (x.is_zero());
    return x;
}

std::vector<RatMatrix> Corpus::all() const {
    std::vector<RatMatrix> v = exhaustive;
    v.insert(v.end(), random.begin(), random.end());
    v.insert(v.end(), enriched.begin(), enriched.end());
    return v;
}

Corpus build_corpus(const SuiteConfig& cfg) {
    Corpus c;
    std::ostringstream desc;
    const bool has2 = std::find(cfg.sizes.begin(), cfg.sizes.end(), 2) != cfg.sizes.end();
    if (has2) {
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b)
                for (long d = -2; d <= 2; ++d)
                    for (long e = -2; e <= 2; ++e) c.exhaustive.push_back(RatMatrix{{a, b}, {d, e}});
        desc << "exhaustive 2x2 over {-2..2} (" << c.exhaustive.size() << "); ";
    }

    Rng rng = Rng::derived(cfg.seed, {kCorpus});
    std::size_t max_size = 0;
    for (std::size_t s : cfg.sizes) {
        max_size = std::max(max_size, s);
        if (s < 3) continue;
        const auto it = cfg.random_counts.find(s);
        const std::size_t count = it == cfg.random_counts.end() ? 0 : it->second;
        for (std::size_t t = 0; t < count; ++t) c.random.push_back(random_matrix(s, s, rng));
        desc << "random " << s << "x" << s << " (" << count << ", numerators -3..3, denominators 1..3); ";
    }
    if (max_size >= 2) {
        std::size_t shapes = 0;
        for (std::size_t m = 1; m <= max_size; ++m)
            for (std::size_t n = 1; n <= max_size; ++n) {
                if (m == n || std::min(m, n) < 1 || std::max(m, n) < 2) continue;
                ++shapes;
                for (std::size_t t = 0; t < cfg.rectangular_count; ++t) c.random.push_back(random_matrix(m, n, rng));
            }
        desc << "random rectangular (" << shapes << " shapes x " << cfg.rectangular_count << "); ";
    }

    // Generated SSR matrices for every square pattern and a sample of
    // rectangular shapes, plus singular SSR_{n-1} (SR, not SSR) matrices.
    Rng gen = Rng::derived(cfg.seed, {kEnriched});
    for (std::size_t s : cfg.sizes) {
        if (s > 5) continue;
        for (const auto& eps : SignPattern::all_strict(s))
            for (std::size_t t = 0; t < cfg.enriched_per_pattern; ++t) {
                const RatMatrix a = random_ssr(s, s, eps, {.seed = gen.next()}).matrix;
                c.enriched.push_back(a);
            }
        if (s >= 2)
            for (const auto& eps : SignPattern::all_strict(s - 1)) {
                const RatMatrix base = random_ssr(s - 1, s - 1, eps, {.seed = gen.next()}).matrix;
                c.enriched.push_back(singular_ssr(s, base, KernelParam(Rational(1, 2))));
            }
    }
    for (std::size_t m = 2; m <= std::min<std::size_t>(max_size, 5); ++m)
        for (std::size_t n = 1; n <= std::min<std::size_t>(max_size, 5); ++n) {
            if (m == n) continue;
            for (std::size_t t = 0; t < cfg.enriched_per_pattern; ++t) {
                const std::size_t k = std::min(m, n);
                c.enriched.push_back(random_ssr(m, n, random_pattern(k, gen), {.seed = gen.next()}).matrix);
            }
        }
    desc << "generated SSR/singular (" << c.enriched.size() << ")";
    c.description = desc.str();
    return c;
}

SectionResult check_strict_certification(const std::vector<RatMatrix>& matrices, const SuiteConfig& cfg, std::string id) {
    Stopwatch sw;
    auto outs = map_outcomes(matrices.size(), cfg.parallel, cfg, [&](std::size_t i) {
        Outcome o;
        const RatMatrix& a = matrices[i];
        const std::size_t k = a.min_dim();
        const auto brute = classify_ssr(a, k);
        const auto probes = collect_probes(a, VdMode::Strict);
        for (const auto& eps : SignPattern::all_strict(k)) {
            ++o.cases;
            const bool certified = judge(probes, VdMode::Strict, maybe_corrupt(eps, cfg)).certified;
            const bool expected = brute.verdict == Verdict::SSR && brute.pattern == eps;
            if (certified) ++o.counters["certified"];
            if (certified != expected)
                o.fail(describe(a) + " eps=" + eps.str() + " certified=" + (certified ? "yes" : "no") +
                           " brute-force SSR(eps)=" + (expected ? "yes" : "no"),
                       cfg.max_examples);
        }
        return o;
    });
    return collect(std::move(id), "strict single-vector certification matches brute-force SSR(eps)", outs, cfg, sw);
}

SectionResult check_nonstrict_certification(const std::vector<RatMatrix>& matrices, const SuiteConfig& cfg) {
    Stopwatch sw;
    auto outs = map_outcomes(matrices.size(), cfg.parallel, cfg, [&](std::size_t i) {
        Outcome o;
        const RatMatrix& a = matrices[i];
        const std::size_t k = a.min_dim();
        const auto brute = classify_sr(a, k);
        const auto probes = collect_probes(a, VdMode::Nonstrict);
        for (const auto& eps : SignPattern::all_strict(k)) {
            ++o.cases;
            const bool certified = judge(probes, VdMode::Nonstrict, maybe_corrupt(eps, cfg)).certified;
            const bool expected = pattern_compatible(brute, eps);
            if (certified) ++o.counters["certified"];
            if (certified != expected)
                o.fail(describe(a) + " eps=" + eps.str() + " certified=" + (certified ? "yes" : "no") +
                           " brute-force SR(eps)=" + (expected ? "yes" : "no"),
                       cfg.max_examples);
        }
        return o;
    });
    return collect("nonstrict", "nonstrict single-vector certification matches brute-force SR(eps)", outs, cfg, sw);
}

SectionResult check_forward_vd(const std::vector<RatMatrix>& matrices, const SuiteConfig& cfg) {
    Stopwatch sw;
    auto outs = map_outcomes(matrices.size(), cfg.parallel, cfg, [&](std::size_t i) {
        Outcome o;
        const RatMatrix& a = matrices[i];
        const auto c = classify_ssr(a, a.min_dim());
        if (c.verdict != Verdict::SSR) return o;
        ++o.counters["ssr_matrices"];
        Rng rng = Rng::derived(cfg.seed, {kForward, i});
        for (std::size_t t = 0; t < cfg.vectors_per_matrix; ++t) {
            ++o.cases;
            const RatVector x = random_test_vector(a.cols(), cfg.zero_rate, rng);
            const RatVector ax = mat_vec(a, x);
            const std::size_t sp = s_plus(ax);
            const std::size_t sm = s_minus(x);
            if (sp > sm) {
                o.fail(describe(a) + " x=" + x.str() + " S+(Ax)=" + std::to_string(sp) + " > S-(x)=" +
                           std::to_string(sm),
                       cfg.max_examples);
                continue;
            }
            const Agreement ag = sign_agreement(a, x, c.pattern, VdMode::Strict);
            if (ag == Agreement::NotApplicable) continue;
            ++o.counters["sign_checks"];
            if (ag != Agreement::Pass)
                o.fail(describe(a) + " x=" + x.str() + " boundary sign " + to_string(ag), cfg.max_examples);
        }
        return o;
    });
    return collect("forward-vd", "SSR matrices diminish variation with the boundary-sign rule", outs, cfg, sw);
}

SectionResult check_witnesses(const std::vector<RatMatrix>& matrices, const SuiteConfig& cfg) {
    Stopwatch sw;
    auto outs = map_outcomes(matrices.size(), cfg.parallel, cfg, [&](std::size_t i) {
        Outcome o;
        const RatMatrix& a = matrices[i];
        ++o.cases;
        const bool ssr = classify_ssr(a, a.min_dim()).verdict == Verdict::SSR;
        const auto w = find_vd_violation(a, {.seed = cfg.seed});
        if (ssr) {
            if (w) o.fail(describe(a) + " is SSR but a witness was returned", cfg.max_examples);
            return o;
        }
        if (!w) {
            o.fail(describe(a) + " is not SSR but no witness was returned", cfg.max_examples);
            return o;
        }
        ++o.counters[to_string(w->construction)];
        // Recompute from scratch rather than trusting the witness fields.
        const std::size_t sp = s_plus(mat_vec(a, w->x));
        const std::size_t sm = s_minus(w->x);
        if (w->x.is_zero() || sp <= sm)
            o.fail(describe(a) + " witness x=" + w->x.str() + " does not violate VD", cfg.max_examples);
        if (w->construction == WitnessConstruction::SearchFallback)
            o.fail(describe(a) + " witness needed the search fallback", cfg.max_examples);
        return o;
    });
    return collect("witnesses", "non-SSR matrices yield verified VD-violation witnesses", outs, cfg, sw);
}

SectionResult check_karlin(const std::vector<RatMatrix>& matrices, const SuiteConfig& cfg) {
    Stopwatch sw;
    auto outs = map_outcomes(matrices.size(), cfg.parallel, cfg, [&](std::size_t i) {
        Outcome o;
        const RatMatrix& a = matrices[i];
        for (std::size_t k = 1; k <= a.min_dim(); ++k) {
            ++o.cases;
            const auto full = classify_ssr(a, k);
            const auto contiguous = karlin_ssr_check(a, k);
            const bool same = full.verdict == contiguous.verdict &&
                              (full.verdict != Verdict::SSR || full.pattern == contiguous.pattern);
            if (!same)
                o.fail(describe(a) + " k=" + std::to_string(k) + " all-minor verdict " + to_string(full.verdict) +
                           " vs contiguous " + to_string(contiguous.verdict),
                       cfg.max_examples);
        }
        return o;
    });
    return collect("contiguous", "contiguous-minor check agrees with all-minor check", outs, cfg, sw);
}

SectionResult check_biorthant(const SuiteConfig& cfg) {
    Stopwatch sw;
    std::vector<std::pair<std::size_t, SignPattern>> jobs;
    Rng rng = Rng::derived(cfg.seed, {kBiorthant});
    for (std::size_t n : cfg.demo_sizes)
        for (std::size_t p = 0; p < cfg.demo_patterns; ++p) jobs.emplace_back(n, random_pattern(n - 1, rng));
    auto outs = map_outcomes(jobs.size(), cfg.parallel, cfg, [&](std::size_t i) {
        Outcome o;
        const auto& [n, eps] = jobs[i];
        const auto rep = nonalternating_demo(n, eps, cfg.demo_trials, cfg.seed + i);
        o.cases = rep.trials + 2;
        o.counters["sign_checks"] = rep.sign_checks;
        const std::string where = "n=" + std::to_string(n) + " eps=" + eps.str() + " A=" + rep.matrix.str();
        if (!rep.matrix_singular) o.fail(where + " is not singular", cfg.max_examples);
        if (!rep.alternating_test_detects)
            o.fail(where + " alternating single-vector test failed to detect", cfg.max_examples);
        for (std::size_t f = 0; f < rep.vd_failures + rep.sign_failures; ++f)
            o.fail(where + " non-alternating vector " +
                       (rep.first_counterexample ? rep.first_counterexample->str() : std::string("?")) +
                       " exposed the matrix",
                   cfg.max_examples);
        return o;
    });
    return collect("biorthant", "non-alternating bi-orthants cannot detect singular SSR_{n-1} matrices", outs, cfg,
                   sw);
}

SectionResult check_singular(const SuiteConfig& cfg) {
    Stopwatch sw;
    std::vector<std::pair<std::size_t, Rational>> jobs;
    for (std::size_t n = 2; n <= 5; ++n)
        for (long qd : {2L, 3L}) jobs.emplace_back(n, Rational(1, qd));
    auto outs = map_outcomes(jobs.size(), cfg.parallel, cfg, [&](std::size_t i) {
        Outcome o;
        ++o.cases;
        const auto& [n, q] = jobs[i];
        Rng rng = Rng::derived(cfg.seed, {kSingular, i});
        const SignPattern eps = random_pattern(n - 1, rng);
        const RatMatrix base = random_ssr(n - 1, n - 1, eps, {.seed = rng.next()}).matrix;
        const RatMatrix a = singular_ssr(n, base, KernelParam(q));
        const auto c = classify_ssr(a, n - 1);
        if (!det_cofactor(a).is_zero()) o.fail(describe(a) + " has nonzero determinant", cfg.max_examples);
        if (c.verdict != Verdict::SSR || c.pattern != eps)
            o.fail(describe(a) + " is not SSR_{n-1}(" + eps.str() + ")", cfg.max_examples);
        return o;
    });
    return collect("singular", "F (B + 0) F is singular and SSR_{n-1} with B's signature", outs, cfg, sw);
}

namespace {

// 3x3 SR matrix with a nonzero minor of every order, not strictly SR when
// possible, carried to one of four signatures by negation / reversal.
RatMatrix random_full_support_sr(Rng& rng) {
    while (true) {
        RatMatrix a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(i, j) = rng.bernoulli(0.35) ? 0 : rng.uniform_int(1, 3);
        const auto c = classify_sr(a, 3);
        if (c.verdict == Verdict::Neither || !c.pattern.fully_constrained()) continue;
        if (c.verdict == Verdict::SSR && rng.bernoulli(0.8)) continue;
        if (rng.bernoulli(0.5)) a = -a;
        if (rng.bernoulli(0.5)) a = transform(a, Transform::ReverseRows).matrix;
        return a;
    }
}

}  // namespace

SectionResult check_density(const SuiteConfig& cfg) {
    Stopwatch sw;
    std::vector<KernelParam> schedule;
    for (long d = 2; d <= 64; d *= 2) schedule.emplace_back(Rational(1, d));
    auto outs = map_outcomes(cfg.density_matrices, cfg.parallel, cfg, [&](std::size_t i) {
        Outcome o;
        Rng rng = Rng::derived(cfg.seed, {kDensity, i});
        const RatMatrix a = random_full_support_sr(rng);
        const SignPattern eps = classify_sr(a, 3).pattern;
        if (classify_ssr(a, 3).verdict != Verdict::SSR) ++o.counters["sr_not_ssr_inputs"];
        const auto approx = density_approximate(a, eps, schedule);
        Rational previous;
        for (std::size_t s = 0; s < approx.size(); ++s) {
            ++o.cases;
            const auto c = classify_ssr(approx[s], 3);
            if (c.verdict != Verdict::SSR || c.pattern != eps)
                o.fail(describe(a) + " q=" + schedule[s].q().str() + " smoothed matrix not SSR(" + eps.str() + ")",
                       cfg.max_examples);
            const Rational dist = max_entry_distance(approx[s], a);
            if (s > 0 && !(dist < previous))
                o.fail(describe(a) + " distance did not decrease at q=" + schedule[s].q().str(), cfg.max_examples);
            previous = dist;
        }
        // Cauchy-Binet cross-check of every minor at the first schedule point.
        const RatMatrix f = gauss_kernel(schedule.front(), 3);
        for (std::size_t r = 1; r <= 3; ++r)
            for (const auto& rows : subsets(3, r))
                for (const auto& cols : subsets(3, r)) {
                    ++o.counters["cauchy_binet_checks"];
                    if (minor(approx.front(), rows, cols) != oracle::cauchy_binet_minor(f, a, f, rows, cols))
                        o.fail(describe(a) + " Cauchy-Binet mismatch on " + rows.str() + "x" + cols.str(),
                               cfg.max_examples);
                }
        return o;
    });
    return collect("density", "Gaussian smoothing maps SR(eps) into SSR(eps), converging to A", outs, cfg, sw);
}

SectionResult check_splus_oracle(const SuiteConfig& cfg) {
    Stopwatch sw;
    auto outs = map_outcomes(cfg.splus_max_length, cfg.parallel, cfg, [&](std::size_t li) {
        Outcome o;
        const std::size_t len = li + 1;
        std::size_t total = 1;
        for (std::size_t t = 0; t < len; ++t) total *= 3;
        std::vector<int> v(len);
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t c = code;
            for (std::size_t t = 0; t < len; ++t, c /= 3) v[t] = static_cast<int>(c % 3) - 1;
            ++o.cases;
            const VariationResult dp = variation_profile(v);
            const auto brute = oracle::s_plus_by_filling(v);
            bool zero = std::all_of(v.begin(), v.end(), [](int s) { return s == 0; });
            bool ok = dp.s_plus == brute.s_plus;
            if (zero) ok = ok && dp.s_minus == 0 && dp.s_plus == len && dp.zero_vector;
            else ok = ok && dp.s_plus_first_signs == brute.first && dp.s_plus_last_signs == brute.last;
            if (!ok) {
                std::string s;
                for (int e : v) s += e > 0 ? '+' : (e < 0 ? '-' : '0');
                o.fail("vector " + s + " DP S+=" + std::to_string(dp.s_plus) + " brute S+=" +
                           std::to_string(brute.s_plus),
                       cfg.max_examples);
            }
        }
        return o;
    });
    return collect("splus-oracle", "dynamic-programming S+ equals exhaustive zero filling", outs, cfg, sw);
}

SectionResult check_semicontinuity(const SuiteConfig& cfg) {
    Stopwatch sw;
    auto outs = map_outcomes(cfg.semicontinuity_pairs, cfg.parallel, cfg, [&](std::size_t i) {
        Outcome o;
        ++o.cases;
        Rng rng = Rng::derived(cfg.seed, {kSemicontinuity, i});
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 8));
        const RatVector x = random_test_vector(n, cfg.zero_rate, rng);
        Rational smallest;
        bool have = false;
        for (const auto& e : x)
            if (!e.is_zero() && (!have || e.abs() < smallest)) {
                smallest = e.abs();
                have = true;
            }
        const Rational half = smallest / Rational(2);
        RatVector xu(n);
        for (std::size_t k = 0; k < n; ++k) {
            const long den = rng.uniform_int(2, 9);
            const long num = rng.uniform_int(-(den - 1), den - 1);  // |num/den| < 1
            xu[k] = x[k] + half * Rational(num, den);
        }
        if (s_minus(xu) < s_minus(x) || s_plus(xu) > s_plus(x))
            o.fail("x=" + x.str() + " x+u=" + xu.str(), cfg.max_examples);
        return o;
    });
    return collect("semicontinuity", "small perturbations never lower S- nor raise S+", outs, cfg, sw);
}

SectionResult check_group_columns(const std::vector<RatMatrix>& matrices, const SuiteConfig& cfg) {
    Stopwatch sw;
    std::vector<std::size_t> ssr_idx;
    for (std::size_t i = 0; i < matrices.size(); ++i)
        if (classify_ssr(matrices[i], matrices[i].min_dim()).verdict == Verdict::SSR) ssr_idx.push_back(i);
    auto outs = map_outcomes(cfg.group_cases, cfg.parallel, cfg, [&](std::size_t t) {
        Outcome o;
        ++o.cases;
        Rng rng = Rng::derived(cfg.seed, {kGroup, t});
        const bool want_ssr = !ssr_idx.empty() && t % 2 == 0;
        const std::size_t pick = want_ssr ? ssr_idx[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(ssr_idx.size()) - 1))]
                                          : static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(matrices.size()) - 1));
        const RatMatrix& a = matrices[pick];
        const RatVector x = random_test_vector(a.cols(), cfg.zero_rate, rng);
        const auto g = group_columns(a, x);
        const RatVector lhs = mat_vec(g.y, alternating_vector(g.r + 1));
        const RatVector rhs = mat_vec(a, g.flipped ? x.negated() : x);
        if (lhs != rhs) o.fail(describe(a) + " x=" + x.str() + " Y d != A x", cfg.max_examples);
        if (want_ssr && g.r + 1 <= a.min_dim()) {
            ++o.counters["ssr_inheritance_checks"];
            const auto ca = classify_ssr(a, a.min_dim());
            const auto cy = classify_ssr(g.y, g.r + 1);
            if (cy.verdict != Verdict::SSR || cy.pattern != ca.pattern.prefix(g.r + 1))
                o.fail(describe(a) + " x=" + x.str() + " grouped matrix not SSR with the prefix signature",
                       cfg.max_examples);
        }
        return o;
    });
    return collect("group-columns", "grouped-columns matrix reproduces Ax and inherits SSR", outs, cfg, sw);
}

SectionResult check_seed_independence(const std::vector<RatMatrix>& matrices, const SuiteConfig& cfg) {
    Stopwatch sw;
    const std::size_t count = std::min(cfg.seed_check_matrices, matrices.size());
    auto outs = map_outcomes(count, cfg.parallel, cfg, [&](std::size_t i) {
        Outcome o;
        // Spread the sample over the whole list.
        const RatMatrix& a = matrices[i * matrices.size() / count];
        const auto patterns = SignPattern::all_strict(a.min_dim());
        for (VdMode mode : {VdMode::Strict, VdMode::Nonstrict}) {
            const auto base = collect_probes(a, mode);
            std::vector<bool> verdicts;
            for (const auto& eps : patterns) verdicts.push_back(judge(base, mode, eps).certified);
            for (std::size_t s = 0; s < cfg.seed_variants; ++s) {
                const auto probes = collect_probes(a, mode, SeedRule::random(cfg.seed * 1000 + kSeeds * 100 + s));
                for (std::size_t p = 0; p < patterns.size(); ++p) {
                    ++o.cases;
                    if (judge(probes, mode, patterns[p]).certified != verdicts[p])
                        o.fail(describe(a) + " " + to_string(mode) + " eps=" + patterns[p].str() +
                                   " verdict depends on the seed",
                               cfg.max_examples);
                }
            }
        }
        return o;
    });
    return collect("seed-independence", "certification verdicts do not depend on the alternating seed", outs, cfg,
                   sw);
}

bool SuiteReport::ok() const {
    return std::all_of(sections.begin(), sections.end(), [](const SectionResult& s) { return s.passed(); });
}

Json SuiteReport::to_json(bool include_timing) const {
    Json out;
    out["seed"] = seed;
    out["corpus"] = corpus;
    Json secs = Json::array();
    for (const auto& s : sections) {
        Json j;
        j["id"] = s.id;
        j["title"] = s.title;
        j["cases"] = s.cases;
        j["failures"] = s.failures;
        j["examples"] = s.examples;
        j["details"] = s.details;
        if (include_timing) j["runtime_s"] = s.runtime_s;
        secs.push_back(std::move(j));
    }
    out["sections"] = std::move(secs);
    out["ok"] = ok();
    return out;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
    SuiteReport rep;
    rep.seed = cfg.seed;
    const Corpus corpus = build_corpus(cfg);
    rep.corpus = corpus.description;
    const auto all = corpus.all();
    std::vector<RatMatrix> rest = corpus.random;
    rest.insert(rest.end(), corpus.enriched.begin(), corpus.enriched.end());

    if (!corpus.exhaustive.empty()) rep.sections.push_back(check_strict_certification(corpus.exhaustive, cfg, "strict-exhaustive"));
    rep.sections.push_back(check_strict_certification(rest, cfg, "strict-random"));
    rep.sections.push_back(check_nonstrict_certification(all, cfg));
    rep.sections.push_back(check_forward_vd(all, cfg));
    rep.sections.push_back(check_witnesses(all, cfg));
    rep.sections.push_back(check_karlin(all, cfg));
    rep.sections.push_back(check_biorthant(cfg));
    rep.sections.push_back(check_singular(cfg));
    rep.sections.push_back(check_density(cfg));
    rep.sections.push_back(check_splus_oracle(cfg));
    rep.sections.push_back(check_semicontinuity(cfg));
    rep.sections.push_back(check_group_columns(all, cfg));
    rep.sections.push_back(check_seed_independence(all, cfg));
    return rep;
}

}  // namespace signreg
