#pragma once

// Structured generators: totally positive families, the rational Gaussian
// kernel, signature-changing transforms, singular SSR_{n-1} matrices, random
// SSR(eps) matrices, bi-orthant samplers and the density experiment.
//
// Every generator checks its output with the brute-force classifier before
// returning it.

#include "signreg/classify.hpp"
#include "signreg/matrix.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace signreg {

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// q in (0, 1), standing for exp(-sigma) with sigma = -ln q.
class KernelParam {
public:
    explicit KernelParam(Rational q);
    [[nodiscard]] const Rational& q() const { return q_; }

private:
    Rational q_;
};

/// n x n matrix with entries q^((i-j)^2): the Gaussian kernel, totally positive.
RatMatrix gauss_kernel(const KernelParam& p, std::size_t n);

/// Rectangular m x n section of the same kernel (also totally positive).
RatMatrix gauss_kernel(const KernelParam& p, std::size_t m, std::size_t n);

/// Entries 1/(x_i + y_j); TP for 0 < x_1 < ... < x_m and 0 < y_1 < ... < y_n.
RatMatrix cauchy_tp(const RatVector& xnodes, const RatVector& ynodes);

/// Entries C(i+j-2, i-1).
RatMatrix pascal_tp(std::size_t n);

enum class Transform { Negate, ReverseRows, ReverseCols, Transpose };

std::string to_string(Transform t);

struct Transformed {
    RatMatrix matrix;
    std::vector<int> pattern_factor;  // eps_k maps to pattern_factor[k-1] * eps_k
};

Transformed transform(const RatMatrix& a, Transform op);

/// Applies a transform's signature map to eps (length may be shorter than the
/// matrix order).
SignPattern map_pattern(const SignPattern& eps, Transform op);

/// A = F (B (+) 0) F with F = gauss_kernel(p, n). Requires B (n-1)x(n-1) SSR;
/// returns a matrix that is SSR_{n-1} with B's signature and has det A = 0.
RatMatrix singular_ssr(std::size_t n, const RatMatrix& base, const KernelParam& p);

/// F_q^(m) A F_q^(n) for each q in the schedule. A must be SR compatible with
/// eps (fully constrained) and have a nonzero minor of every order.
std::vector<RatMatrix> density_approximate(const RatMatrix& a, const SignPattern& eps,
                                           const std::vector<KernelParam>& schedule);

/// Largest |a_ij - b_ij|.
Rational max_entry_distance(const RatMatrix& a, const RatMatrix& b);

struct RandomSsrOptions {
    std::uint64_t seed = 0;
    std::size_t max_attempts = 2000;
    bool constructive_fallback = true;
};

enum class SsrSource { TransformFamily, RejectionSampling, Constructed };

struct RandomSsr {
    RatMatrix matrix;
    SsrSource source = SsrSource::TransformFamily;
};

/// m x n SSR(eps) with min(m,n) <= 5. Tries the transform families of TP
/// sources, then rejection sampling over small integers, then (unless
/// disabled) an inductive construction that works for every eps.
RandomSsr random_ssr(std::size_t m, std::size_t n, const SignPattern& eps, const RandomSsrOptions& opts = {});

/// Square SSR(eps) built order by order: singular_ssr of the previous stage,
/// then a corner perturbation that sets the sign of the top-order minor.
RatMatrix construct_ssr(const SignPattern& eps, std::uint64_t seed = 0);

/// Nonzero signs, one per coordinate.
class BiorthantPattern {
public:
    explicit BiorthantPattern(std::vector<int> signs);
    [[nodiscard]] const std::vector<int>& signs() const { return signs_; }
    [[nodiscard]] std::size_t size() const { return signs_.size(); }
    /// True iff successive coordinates always differ in sign.
    [[nodiscard]] bool alternating() const;
    /// Every non-alternating pattern of length n (both members of each bi-orthant).
    static std::vector<BiorthantPattern> non_alternating(std::size_t n);

private:
    std::vector<int> signs_;
};

/// Vector with sign(x_i) = signs_i and nonzero |x_i| <= magnitude_bound.
RatVector sample_biorthant(const BiorthantPattern& pattern, std::uint64_t seed, long magnitude_bound = 9);

struct BiorthantDemoReport {
    std::size_t n = 0;
    SignPattern pattern;
    RatMatrix matrix;
    bool matrix_singular = false;        // det A = 0, so A is not SSR
    std::size_t trials = 0;
    std::size_t vd_failures = 0;         // S+(Ax) > S-(x) on a non-alternating vector
    std::size_t sign_checks = 0;         // trials where the boundary-sign test applied
    std::size_t sign_failures = 0;       // including ambiguous outcomes
    bool alternating_test_detects = false;  // full-size alternating-seed test fails
    bool thin_coverage = false;          // n = 2: only the (+,+) bi-orthant exists
    std::optional<RatVector> first_counterexample;

    [[nodiscard]] bool ok() const {
        return matrix_singular && vd_failures == 0 && sign_failures == 0 && alternating_test_detects;
    }
};

/// Builds a singular SSR_{n-1}(eps) matrix and checks that vectors from
/// non-alternating open bi-orthants never expose it while the alternating
/// single-vector test does.
BiorthantDemoReport nonalternating_demo(std::size_t n, const SignPattern& eps, std::size_t trials,
                                        std::uint64_t seed, const KernelParam& q = KernelParam(Rational(1, 2)));

}  // namespace signreg
