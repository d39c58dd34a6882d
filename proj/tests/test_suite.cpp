#include "signreg/suite.hpp"

#include <gtest/gtest.h>

using namespace signreg;

namespace {

SuiteConfig small_config() {
    SuiteConfig cfg;
    cfg.seed = 3;
    cfg.sizes = {2, 3};
    cfg.random_counts = {{3, 60}};
    cfg.rectangular_count = 10;
    cfg.enriched_per_pattern = 1;
    cfg.vectors_per_matrix = 50;
    cfg.demo_sizes = {3};
    cfg.demo_patterns = 1;
    cfg.demo_trials = 300;
    cfg.density_matrices = 5;
    cfg.splus_max_length = 6;
    cfg.semicontinuity_pairs = 100;
    cfg.group_cases = 100;
    cfg.seed_variants = 2;
    cfg.seed_check_matrices = 30;
    return cfg;
}

const SectionResult& section(const SuiteReport& r, const std::string& id) {
    for (const auto& s : r.sections)
        if (s.id == id) return s;
    throw std::out_of_range(id);
}

}  // namespace

TEST(Suite, CorpusShape) {
    const Corpus c = build_corpus(small_config());
    EXPECT_EQ(c.exhaustive.size(), 625U);
    std::size_t square3 = 0;
    for (const auto& a : c.random)
        if (a.rows() == 3 && a.cols() == 3) ++square3;
    EXPECT_EQ(square3, 60U);
    EXPECT_FALSE(c.enriched.empty());
    EXPECT_EQ(c.all().size(), c.exhaustive.size() + c.random.size() + c.enriched.size());
}

TEST(Suite, SmallRunPasses) {
    const SuiteReport r = run_suite(small_config());
    for (const auto& s : r.sections) {
        EXPECT_TRUE(s.passed()) << s.id << ": " << (s.examples.empty() ? "" : s.examples.front());
        EXPECT_GT(s.cases, 0U) << s.id;
    }
    EXPECT_TRUE(r.ok());
}

TEST(Suite, FaultInjectionIsDetected) {
    SuiteConfig cfg = small_config();
    cfg.corrupt_certifier = true;
    const SuiteReport r = run_suite(cfg);
    EXPECT_FALSE(r.ok());
    EXPECT_GT(section(r, "strict-exhaustive").failures, 0U);
    EXPECT_GT(section(r, "strict-random").failures, 0U);
    EXPECT_FALSE(section(r, "strict-exhaustive").examples.empty());
    EXPECT_TRUE(section(r, "contiguous").passed());
}

TEST(Suite, ReportsAreByteIdenticalAndParallelInvariant) {
    SuiteConfig cfg = small_config();
    const std::string a = run_suite(cfg).to_json(false).dump();
    const std::string b = run_suite(cfg).to_json(false).dump();
    cfg.parallel = true;
    const std::string c = run_suite(cfg).to_json(false).dump();
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    EXPECT_EQ(a.find("runtime_s"), std::string::npos);
    EXPECT_NE(run_suite(small_config()).to_json(true).dump().find("runtime_s"), std::string::npos);
}

TEST(Suite, RandomTestVectorsAreNonzero) {
    Rng rng(1);
    for (int t = 0; t < 200; ++t) EXPECT_FALSE(random_test_vector(3, 0.9, rng).is_zero());
}
