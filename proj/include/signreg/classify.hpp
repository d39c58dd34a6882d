#pragma once

// Minor-sign classification: strict sign regularity SSR_k(eps), sign
// regularity SR_k(eps), and the contiguous-minor shortcut for SSR_k.

#include "signreg/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace signreg {

/// Per-order minor signs (eps_1, ..., eps_k). An entry of 0 means the order is
/// unconstrained (every minor of that order vanishes). eps_0 = +1 always.
class SignPattern {
public:
    SignPattern() = default;
    explicit SignPattern(std::vector<int> signs);
    SignPattern(std::initializer_list<int> signs) : SignPattern(std::vector<int>(signs)) {}

    /// "+,-,?" (commas optional).
    static SignPattern parse(std::string_view text);
    static SignPattern all_plus(std::size_t k) { return SignPattern(std::vector<int>(k, 1)); }
    /// Every fully constrained pattern of length k, in binary order with '+' < '-'.
    static std::vector<SignPattern> all_strict(std::size_t k);

    [[nodiscard]] std::size_t size() const { return signs_.size(); }
    /// eps_r for 0 <= r <= size().
    [[nodiscard]] int eps(std::size_t r) const;
    [[nodiscard]] bool fully_constrained() const;
    [[nodiscard]] const std::vector<int>& signs() const { return signs_; }
    [[nodiscard]] SignPattern prefix(std::size_t k) const;
    [[nodiscard]] std::string str() const;  // "+,-,?"

    friend bool operator==(const SignPattern&, const SignPattern&) = default;

private:
    std::vector<int> signs_;
};

enum class Verdict {
    SSR,      // strictly sign regular of the requested order
    SR,       // sign regular but not strictly
    NotSSR,   // classify_ssr / karlin_ssr_check failure; SR status not evaluated
    Neither,  // not sign regular
};

enum class ViolationReason { ZeroMinor, SignConflict };

struct MinorViolation {
    std::size_t order = 0;
    IndexSet rows;
    IndexSet cols;
    ViolationReason reason = ViolationReason::ZeroMinor;
};

struct Classification {
    Verdict verdict = Verdict::Neither;
    std::size_t order = 0;  // k
    SignPattern pattern;    // length k on success; partial up to the failing order otherwise
    std::optional<MinorViolation> violation;
    std::vector<std::uint64_t> minors_inspected;  // index r-1 holds the count for order r
};

struct ClassifyOptions {
    bool force = false;  // lift the min(m,n) <= kMaxClassifyDim guard
};

inline constexpr std::size_t kMaxClassifyDim = 8;

class SizeGuardError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Classification classify_ssr(const RatMatrix& a, std::size_t k, ClassifyOptions opts = {});
Classification classify_sr(const RatMatrix& a, std::size_t k, ClassifyOptions opts = {});
Classification karlin_ssr_check(const RatMatrix& a, std::size_t k, ClassifyOptions opts = {});

/// SSR if strictly sign regular, else SR if sign regular, else Neither.
Classification classify_auto(const RatMatrix& a, std::size_t k, ClassifyOptions opts = {});

/// True iff c is a successful classification and each constrained order of its
/// pattern equals eps at that order.
bool pattern_compatible(const Classification& c, const SignPattern& eps);

/// Convenience: A is SSR(eps) with eps of length min(m,n).
bool is_ssr_with(const RatMatrix& a, const SignPattern& eps);

std::string to_string(Verdict v);
std::string to_string(ViolationReason r);

}  // namespace signreg
