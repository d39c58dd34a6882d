// signreg: sign-regularity classification, single-vector certification and
// the verification suite, over exact rationals.
//
// Exit codes: 0 success / certified / SSR, 1 not certified / violation found,
// 2 usage or input error.

#include "signreg/classify.hpp"
#include "signreg/genlab.hpp"
#include "signreg/io.hpp"
#include "signreg/report.hpp"
#include "signreg/signvar.hpp"
#include "signreg/suite.hpp"
#include "signreg/vdcert.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

using namespace signreg;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Globals {
    bool json = false;
    std::uint64_t seed = 7;
    bool parallel = false;
};

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string violation_text(const MinorViolation& v) {
    return "order " + std::to_string(v.order) + " rows " + v.rows.str() + " cols " + v.cols.str() + " " +
           to_string(v.reason);
}

int run_classify(const Globals& g, const std::string& file, std::size_t order, const std::string& mode, bool force) {
    const RatMatrix a = read_matrix_file(file);
    const std::size_t k = order == 0 ? a.min_dim() : order;
    const ClassifyOptions opts{.force = force};
    Classification c;
    if (mode == "ssr") c = classify_ssr(a, k, opts);
    else if (mode == "sr") c = classify_sr(a, k, opts);
    else c = classify_auto(a, k, opts);

    if (g.json) {
        Json j;
        j["mode"] = mode;
        j["matrix"] = to_json(a);
        j["classification"] = to_json(c);
        print_json(j);
    } else {
        std::cout << to_string(c.verdict) << ", pattern " << c.pattern.str() << '\n';
        if (c.violation) std::cout << "first violation: " << violation_text(*c.violation) << '\n';
    }
    return c.violation ? kNegative : kOk;
}

int run_certify(const Globals& g, const std::string& file, const std::string& pattern, const std::string& mode,
                const std::string& seed_rule) {
    const RatMatrix a = read_matrix_file(file);
    const SignPattern eps = SignPattern::parse(pattern);
    const SeedRule rule = seed_rule == "random" ? SeedRule::random(g.seed) : SeedRule::alternating();
    const VdReport r = mode == "strict" ? certify_ssr_via_vd(a, eps, rule) : certify_sr_via_vd(a, eps, rule);

    if (g.json) {
        print_json(to_json(r));
    } else if (r.certified) {
        std::cout << "certified " << (mode == "strict" ? "SSR" : "SR") << "(" << eps.str() << ") from "
                  << r.records.size() << " test vectors\n";
    } else {
        const auto& f = *r.failure;
        std::cout << "failed, " << to_string(f.reason) << " at " << f.rows.size() << "x" << f.cols.size()
                  << " rows " << f.rows.str() << " cols " << f.cols.str() << '\n';
    }
    return r.certified ? kOk : kNegative;
}

int run_violate(const Globals& g, const std::string& file, bool force) {
    const RatMatrix a = read_matrix_file(file);
    const auto w = find_vd_violation(a, {.seed = g.seed, .force = force});
    if (g.json) {
        Json j;
        j["ssr"] = !w.has_value();
        j["witness"] = w ? to_json(*w) : Json(nullptr);
        print_json(j);
    } else if (!w) {
        std::cout << "is SSR\n";
    } else {
        std::cout << "witness " << w->x.str() << " S-=" << w->s_minus_x << " S+(Ax)=" << w->s_plus_ax
                  << " Ax=" << w->ax.str() << " via " << to_string(w->construction) << '\n';
    }
    return w ? kNegative : kOk;
}

int run_svar(const Globals& g, const std::vector<std::string>& tokens) {
    const RatVector x = parse_vector(tokens);
    const VariationResult v = variation_profile(x);
    if (g.json) print_json(to_json(v));
    else std::cout << "S-=" << v.s_minus << " S+=" << v.s_plus << '\n';
    return kOk;
}

struct GenerateArgs {
    std::string family;
    std::vector<std::size_t> dims;
    std::string q = "1/2";
    std::string pattern;
};

int run_generate(const Globals& g, const GenerateArgs& args) {
    if (args.dims.empty() || args.dims.size() > 2) throw std::invalid_argument("generate takes N or M N");
    const std::size_t m = args.dims.front();
    const std::size_t n = args.dims.back();
    if (m == 0 || n == 0) throw std::invalid_argument("dimensions must be positive");
    const KernelParam q(Rational::parse(args.q));
    RatMatrix a(1, 1);
    if (args.family == "pascal") {
        if (m != n) throw std::invalid_argument("pascal is square");
        a = pascal_tp(n);
    } else if (args.family == "cauchy") {
        RatVector xs(m), ys(n);
        for (std::size_t i = 0; i < m; ++i) xs[i] = Rational(static_cast<long>(i + 1));
        for (std::size_t j = 0; j < n; ++j) ys[j] = Rational(static_cast<long>(j + 1));
        a = cauchy_tp(xs, ys);
    } else if (args.family == "gauss") {
        a = gauss_kernel(q, m, n);
    } else if (args.family == "singular") {
        if (m != n || n < 2) throw std::invalid_argument("singular needs a square order >= 2");
        const SignPattern eps = args.pattern.empty() ? SignPattern::all_plus(n - 1) : SignPattern::parse(args.pattern);
        if (eps.size() != n - 1 || !eps.fully_constrained())
            throw std::invalid_argument("singular needs a fully constrained pattern of length n-1");
        a = singular_ssr(n, random_ssr(n - 1, n - 1, eps, {.seed = g.seed}).matrix, q);
    } else if (args.family == "random-ssr") {
        const std::size_t k = std::min(m, n);
        const SignPattern eps = args.pattern.empty() ? SignPattern::all_plus(k) : SignPattern::parse(args.pattern);
        if (eps.size() != k || !eps.fully_constrained())
            throw std::invalid_argument("random-ssr needs a fully constrained pattern of length min(m,n)");
        a = random_ssr(m, n, eps, {.seed = g.seed}).matrix;
    } else {
        throw std::invalid_argument("unknown family '" + args.family + "'");
    }
    std::cout << emit_matrix(a);
    return kOk;
}

struct VerifyArgs {
    std::vector<std::size_t> sizes{2, 3, 4};
    std::size_t trials = 1000;
    bool inject_fault = false;
    bool timing = false;
};

int run_verify(const Globals& g, const VerifyArgs& args) {
    SuiteConfig cfg;
    cfg.seed = g.seed;
    cfg.parallel = g.parallel;
    cfg.sizes = args.sizes;
    cfg.random_counts.clear();
    for (std::size_t s : args.sizes)
        if (s >= 3) cfg.random_counts[s] = args.trials;
    cfg.vectors_per_matrix = args.trials;
    cfg.demo_trials = args.trials;
    cfg.semicontinuity_pairs = args.trials;
    cfg.group_cases = args.trials;
    cfg.corrupt_certifier = args.inject_fault;
    std::erase_if(cfg.demo_sizes, [&](std::size_t n) {
        return std::find(args.sizes.begin(), args.sizes.end(), n) == args.sizes.end() && n > 3;
    });

    const SuiteReport rep = run_suite(cfg);
    if (g.json) {
        print_json(rep.to_json(args.timing));
    } else {
        std::cout << "seed " << rep.seed << "\ncorpus: " << rep.corpus << '\n';
        for (const auto& s : rep.sections) {
            std::cout << (s.passed() ? "PASS " : "FAIL ") << std::left << std::setw(18) << s.id << " cases "
                      << std::setw(9) << s.cases << " failures " << std::setw(6) << s.failures << std::fixed
                      << std::setprecision(2) << s.runtime_s << "s  " << s.title << '\n';
            for (const auto& e : s.examples) std::cout << "    " << e << '\n';
        }
        std::cout << (rep.ok() ? "all sections passed" : "FAILURES") << '\n';
    }
    return rep.ok() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sign regularity and variation diminution over exact rationals"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_option("--seed", g.seed, "Seed for every randomized step")->capture_default_str();
    app.add_flag("--parallel", g.parallel, "Fan out independent work on threads; output is unchanged");

    std::string file;
    bool force = false;

    auto* classify = app.add_subcommand("classify", "Brute-force minor-sign classification");
    std::size_t order = 0;
    std::string classify_mode = "auto";
    classify->add_option("file", file, "Matrix file")->required();
    classify->add_option("--order", order, "Order k (default min(m,n))");
    classify->add_option("--mode", classify_mode)->check(CLI::IsMember({"ssr", "sr", "auto"}))->capture_default_str();
    classify->add_flag("--force", force, "Allow min(m,n) > 8");

    auto* certify = app.add_subcommand("certify", "Single-test-vector certification");
    std::string pattern;
    std::string certify_mode = "strict";
    std::string seed_rule = "alternating";
    certify->add_option("file", file, "Matrix file")->required();
    certify->add_option("--pattern", pattern, "Signature such as +,-,+")->required();
    certify->add_option("--mode", certify_mode)->check(CLI::IsMember({"strict", "nonstrict"}))->capture_default_str();
    certify->add_option("--seed-rule", seed_rule, "alternating or random (uses --seed)")
        ->check(CLI::IsMember({"alternating", "random"}))
        ->capture_default_str();

    auto* violate = app.add_subcommand("violate", "Find x with S+(Ax) > S-(x), or report SSR");
    violate->add_option("file", file, "Matrix file")->required();
    violate->add_flag("--force", force, "Allow min(m,n) > 8");

    auto* svar = app.add_subcommand("svar", "Sign variations S- and S+ of a vector");
    std::vector<std::string> tokens;
    svar->add_option("entries", tokens, "Rational entries (use -- before a leading negative)")->required();

    auto* generate = app.add_subcommand("generate", "Emit a structured matrix file");
    GenerateArgs gen;
    generate->add_option("family", gen.family)
        ->required()
        ->check(CLI::IsMember({"pascal", "cauchy", "gauss", "singular", "random-ssr"}));
    generate->add_option("dims", gen.dims, "N or M N")->required()->expected(1, 2);
    generate->add_option("--q", gen.q, "Gaussian kernel parameter in (0,1)")->capture_default_str();
    generate->add_option("--pattern", gen.pattern, "Signature for singular / random-ssr (default all +)");

    auto* verify = app.add_subcommand("verify-theorems", "Run the cross-check suite");
    VerifyArgs ver;
    verify->add_option("--sizes", ver.sizes, "Square corpus sizes; 2 is exhaustive")->delimiter(',');
    verify->add_option("--trials", ver.trials, "Random matrices per size and vectors per check")
        ->capture_default_str();
    verify->add_flag("--inject-fault", ver.inject_fault, "Negate eps_2 inside the certifier (harness self-test)");
    verify->add_flag("--timing", ver.timing, "Include runtimes in JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*classify) return run_classify(g, file, order, classify_mode, force);
        if (*certify) return run_certify(g, file, pattern, certify_mode, seed_rule);
        if (*violate) return run_violate(g, file, force);
        if (*svar) return run_svar(g, tokens);
        if (*generate) return run_generate(g, gen);
        if (*verify) return run_verify(g, ver);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
