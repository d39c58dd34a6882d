#pragma once

// Variation diminution (VD) checks and single-test-vector certification.
//
// Strict mode certifies SSR(eps): one test vector x = adj(A_k) v per
// contiguous square submatrix A_k, v alternating with nonnegative magnitudes.
// Nonstrict mode certifies SR(eps): one vector y = adj(A_k) alpha per square
// submatrix (contiguous or not), alpha alternating with positive magnitudes.

#include "signreg/classify.hpp"
#include "signreg/matrix.hpp"
#include "signreg/signvar.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace signreg {

enum class VdMode { Strict, Nonstrict };

enum class Agreement { Pass, Fail, NotApplicable, Ambiguous };

enum class VdFailureReason { VariationExcess, SignDisagreement, AmbiguousBoundarySign };

enum class WitnessConstruction { KernelEmbedding, RowCofactor, ColumnCofactor, ColumnPair, SearchFallback };

std::string to_string(VdMode m);
std::string to_string(Agreement a);
std::string to_string(VdFailureReason r);
std::string to_string(WitnessConstruction c);

/// How alternating seeds (alpha_1, -alpha_2, ...) are chosen per submatrix.
struct SeedRule {
    enum class Kind { Alternating, Random };
    Kind kind = Kind::Alternating;
    std::uint64_t seed = 0;

    static SeedRule alternating() { return {}; }
    static SeedRule random(std::uint64_t seed) { return {Kind::Random, seed}; }

    /// Alternating d_k when kind == Alternating. Random seeds are a pure
    /// function of (seed, rows, cols); strict mode may zero some magnitudes.
    [[nodiscard]] RatVector make(std::size_t k, VdMode mode, const IndexSet& rows, const IndexSet& cols) const;
};

/// (1, -1, ..., (-1)^(k-1))
RatVector alternating_vector(std::size_t k);

struct TestVector {
    IndexSet rows;
    IndexSet cols;
    RatVector seed;
    RatVector vector;  // adjugate(A[rows, cols]) * seed
};

struct VdRecord {
    IndexSet rows;
    IndexSet cols;
    RatVector x;        // test vector
    RatVector product;  // A_k * x
    std::size_t s_x = 0;        // S-(x)
    std::size_t s_product = 0;  // S+(A_k x) strict, S-(A_k x) nonstrict
    Agreement agreement = Agreement::NotApplicable;
    bool passed = true;
    std::optional<VdFailureReason> reason;
};

struct VdFailure {
    IndexSet rows;
    IndexSet cols;
    VdFailureReason reason;
};

struct VdReport {
    VdMode mode = VdMode::Strict;
    bool certified = false;
    SignPattern pattern;
    std::vector<VdRecord> records;
    std::optional<VdFailure> failure;
};

/// Pattern-independent part of a certification run: test vectors and products
/// for every submatrix, in report order. Judge against many patterns cheaply.
struct VdProbe {
    TestVector test;
    RatVector product;
    VariationResult x_profile;
    VariationResult product_profile;
};

struct Witness {
    RatVector x;
    RatVector ax;
    std::size_t s_minus_x = 0;
    std::size_t s_plus_ax = 0;
    WitnessConstruction construction = WitnessConstruction::KernelEmbedding;
};

/// S+(Ax) <= S-(x). x must be nonzero.
bool vd_holds_strict(const RatMatrix& a, const RatVector& x);

/// S-(Ax) <= S-(x).
bool vd_holds_nonstrict(const RatMatrix& a, const RatVector& x);

/// Boundary-sign condition accompanying VD. Applicable when Ax != 0 and the
/// two variation counts agree at some r <= eps.size() - 1. Throws DomainError
/// if eps is unconstrained at an order it needs.
Agreement sign_agreement(const RatMatrix& a, const RatVector& x, const SignPattern& eps, VdMode mode);

/// Same test from precomputed variation profiles of x and Ax.
Agreement sign_agreement(const VariationResult& x_profile, const VariationResult& ax_profile,
                         const SignPattern& eps, VdMode mode, std::size_t max_r);

TestVector make_test_vector(const RatMatrix& a, const IndexSet& rows, const IndexSet& cols,
                            const RatVector& seed, VdMode mode);

std::vector<VdProbe> collect_probes(const RatMatrix& a, VdMode mode, const SeedRule& rule = {});
VdReport judge(const std::vector<VdProbe>& probes, VdMode mode, const SignPattern& eps);

VdReport certify_ssr_via_vd(const RatMatrix& a, const SignPattern& eps, const SeedRule& rule = {});
VdReport certify_sr_via_vd(const RatMatrix& a, const SignPattern& eps, const SeedRule& rule = {});

struct ViolationSearchOptions {
    std::uint64_t seed = 0;
    std::size_t fallback_trials = 20000;
    bool force = false;  // lift the classification size guard
};

/// nullopt when A is SSR; otherwise a witness with S+(Ax) > S-(x), built from
/// a zero minor (kernel embedding) or a pair of same-order minors of opposite
/// sign (cofactor embeddings), and re-verified before return.
std::optional<Witness> find_vd_violation(const RatMatrix& a, const ViolationSearchOptions& opts = {});

struct GroupedColumns {
    RatMatrix y;           // m x (r+1)
    std::size_t r = 0;     // S-(x)
    bool flipped = false;  // x was negated so that its first nonzero is positive
    Partition partition;
};

/// Y with column j = sum of |x_k| a^k over sign block j of x; Y d_{r+1} = A x
/// for the normalized x.
GroupedColumns group_columns(const RatMatrix& a, const RatVector& x);

}  // namespace signreg
