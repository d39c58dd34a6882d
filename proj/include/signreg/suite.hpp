#pragma once

// Cross-check harness. Each section cross-checks one equivalence or
// construction against an independent brute-force computation over a seeded
// corpus. Used by `signreg verify-theorems` and by the acceptance tests.

#include "signreg/matrix.hpp"
#include "signreg/random.hpp"
#include "signreg/report.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace signreg {

struct SuiteConfig {
    std::uint64_t seed = 7;
    std::vector<std::size_t> sizes{2, 3, 4};  // square corpus sizes; 2 is exhaustive over {-2..2}
    std::map<std::size_t, std::size_t> random_counts{{3, 1000}, {4, 1000}};  // random matrices per size >= 3
    std::size_t rectangular_count = 100;    // random matrices per rectangular shape
    std::size_t enriched_per_pattern = 2;   // generated SSR(eps) matrices per size and pattern
    std::size_t vectors_per_matrix = 1000;  // forward-VD vectors per SSR matrix
    double zero_rate = 0.3;
    std::vector<std::size_t> demo_sizes{3, 4, 5};
    std::size_t demo_patterns = 2;          // sampled patterns per demo size
    std::size_t demo_trials = 10000;
    std::size_t density_matrices = 100;
    std::size_t splus_max_length = 10;
    std::size_t semicontinuity_pairs = 1000;
    std::size_t group_cases = 1000;
    std::size_t seed_variants = 10;
    std::size_t seed_check_matrices = 400;
    bool parallel = false;
    bool corrupt_certifier = false;  // fault injection: negate eps_2 before certifying
    std::size_t max_examples = 10;   // failures serialized per section
};

struct SectionResult {
    std::string id;
    std::string title;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> examples;
    Json details = Json::object();
    double runtime_s = 0;

    [[nodiscard]] bool passed() const { return failures == 0; }
};

struct Corpus {
    std::vector<RatMatrix> exhaustive;  // all 2x2 over {-2..2}
    std::vector<RatMatrix> random;      // seeded random square and rectangular
    std::vector<RatMatrix> enriched;    // generated SSR / singular SSR_{n-1}
    std::string description;

    [[nodiscard]] std::vector<RatMatrix> all() const;
};

Corpus build_corpus(const SuiteConfig& cfg);

// One function per section. Each is self-contained and deterministic in cfg.seed.
SectionResult check_strict_certification(const std::vector<RatMatrix>& matrices, const SuiteConfig& cfg, std::string id);
SectionResult check_nonstrict_certification(const std::vector<RatMatrix>& matrices, const SuiteConfig& cfg);
SectionResult check_forward_vd(const std::vector<RatMatrix>& matrices, const SuiteConfig& cfg);
SectionResult check_witnesses(const std::vector<RatMatrix>& matrices, const SuiteConfig& cfg);
SectionResult check_karlin(const std::vector<RatMatrix>& matrices, const SuiteConfig& cfg);
SectionResult check_biorthant(const SuiteConfig& cfg);
SectionResult check_singular(const SuiteConfig& cfg);
SectionResult check_density(const SuiteConfig& cfg);
SectionResult check_splus_oracle(const SuiteConfig& cfg);
SectionResult check_semicontinuity(const SuiteConfig& cfg);
SectionResult check_group_columns(const std::vector<RatMatrix>& matrices, const SuiteConfig& cfg);
SectionResult check_seed_independence(const std::vector<RatMatrix>& matrices, const SuiteConfig& cfg);

struct SuiteReport {
    std::uint64_t seed = 0;
    std::string corpus;
    std::vector<SectionResult> sections;

    [[nodiscard]] bool ok() const;
    [[nodiscard]] Json to_json(bool include_timing) const;
};

SuiteReport run_suite(const SuiteConfig& cfg);

/// Random nonzero vector; each entry is zero with probability zero_rate.
RatVector random_test_vector(std::size_t n, double zero_rate, Rng& rng);

}  // namespace signreg
