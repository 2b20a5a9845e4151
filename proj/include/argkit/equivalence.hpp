#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "argkit/af.hpp"
#include "argkit/kernels.hpp"
#include "argkit/neighborhood.hpp"
#include "argkit/semantics.hpp"
#include "argkit/verification.hpp"

namespace argkit {

struct EquivalenceVerdict {
    bool equivalent = false;
    /// H with sigma(F u H) != sigma(G u H), when one was searched for and found.
    std::optional<AF> witness;
    /// Empty on the kernel path; otherwise the search bound used.
    std::string bound_note;
};

/// sigma(F) = sigma(G), compared by argument name.
[[nodiscard]] bool standard_equivalent(const AF& f, const AF& g, Semantics kind);

/// Kernel decision: equivalent iff the kernels of kernel_for(kind) coincide.
/// Throws UnsupportedError for kinds without a kernel.
[[nodiscard]] EquivalenceVerdict expansion_equivalent(const AF& f, const AF& g, Semantics kind);

inline constexpr std::size_t kMaxFresh = 2;

struct OracleOptions {
    std::size_t fresh = 1;
    /// Largest universe |A(F) u A(G)| + fresh the oracle accepts.
    std::size_t bound = kDefaultExhaustiveBound;
};

/// The fresh argument names the oracle adds for F and G: "x1", "x2", ...,
/// skipping names already in use.
[[nodiscard]] std::vector<std::string> fresh_names(const AF& f, const AF& g, std::size_t count);

/// Least H whose arguments are drawn from A(F) u A(G) plus `fresh` new
/// arguments with sigma(F u H) != sigma(G u H). H is enumerated by argument
/// subset (ascending bitmask over the sorted shared names, fresh names in
/// the high bits), then by attack bitmask; the empty H comes first.
/// Throws InputError for fresh > kMaxFresh and ResourceError above `bound`.
[[nodiscard]] std::optional<AF> find_expansion_counterexample(const AF& f, const AF& g, Semantics kind,
                                                              std::size_t fresh, std::size_t bound);
[[nodiscard]] std::optional<AF> find_expansion_counterexample(const AF& f, const AF& g, Semantics kind,
                                                              std::size_t fresh = 1);

/// Bounded brute-force verdict for any kind, including those with no kernel.
[[nodiscard]] EquivalenceVerdict expansion_equivalent_oracle(const AF& f, const AF& g, Semantics kind,
                                                             const OracleOptions& opts = {});

/// Comparison of a kernel with the bounded expansion oracle over every pair
/// of AFs on n fixed arguments.
struct KernelOracleComparison {
    Semantics kind{};
    Kernel kernel{};
    std::size_t n = 0;
    std::size_t fresh = 0;
    std::uint64_t pairs = 0;
    /// Kernels equal, but some H separates the pair.
    std::uint64_t unsound = 0;
    /// Kernels differ, but no H within the bound separates the pair.
    std::uint64_t incomplete = 0;
    /// Least offending pair (by G's mask, then F's).
    std::optional<AfPair> first_violation;
    std::optional<AF> first_witness;

    [[nodiscard]] bool agrees() const noexcept { return unsound == 0 && incomplete == 0; }
};

/// Groups all 2^(n^2) AFs by kernel and by their sigma-extensions under every
/// expansion within the fresh budget, and compares the two partitions.
[[nodiscard]] KernelOracleComparison compare_kernel_with_oracle(Semantics kind, Kernel kernel, std::size_t n,
                                                                const OracleOptions& opts = {},
                                                                unsigned threads = 1);

/// The theorem instance the intermediate check applies to a semantics.
struct IntermediateInstance {
    NeighborhoodFn verifiable_by;
    Semantics lower;
    Semantics upper;
    Kernel kernel;
    /// Fresh arguments the bounded oracle needs to separate every pair of
    /// AFs on three arguments with different kernels: one for k_stb and k_ad,
    /// two for k_gr.
    std::size_t fresh;
};

/// stb, stg, sta: (+, stb..stg, k_stb); pr, ss, co: (+mp, ss..ad, k_ad);
/// id: (+mp, id..ad, k_ad); eg: (+mp, eg..ad, k_ad); gr, sad: (-pm, gr..sad,
/// k_gr). Empty for the rest.
[[nodiscard]] std::optional<IntermediateInstance> intermediate_instance(Semantics kind) noexcept;

struct IntermediateReport {
    Semantics kind{};
    IntermediateInstance instance{};
    std::size_t n = 0;
    /// Premises at the bound: no verifiability counterexample for the class,
    /// and lower(F) within kind(F) within upper(F) for every AF.
    bool verifiable = false;
    bool bracketed = false;
    KernelOracleComparison comparison;

    /// Kernel equality and bounded expansion equivalence coincide.
    [[nodiscard]] bool holds() const noexcept { return comparison.agrees(); }
};

/// Checks at bound n that kernel equality matches the bounded oracle for
/// `kind`, with the instance's fresh budget unless `fresh` is given. A
/// failing premise does not stop the check; the report shows it. Throws
/// UnsupportedError for kinds with no instance.
[[nodiscard]] IntermediateReport check_intermediate_theorem(Semantics kind, std::size_t n, unsigned threads = 1,
                                                            std::optional<std::size_t> fresh = std::nullopt);

}  // namespace argkit
