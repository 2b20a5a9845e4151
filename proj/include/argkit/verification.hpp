#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "argkit/af.hpp"
#include "argkit/neighborhood.hpp"
#include "argkit/semantics.hpp"

namespace argkit {

/// One entry (S, r^x(S+, S-)) of a verification class.
struct ClassTuple {
    ArgSet set;
    boost::container::small_vector<ArgSet, 2> images;

    friend bool operator==(const ClassTuple&, const ClassTuple&) = default;
};

/// {(S, r^x(S+, S-)) : S conflict-free}, ordered canonically by S. Ranges
/// include S itself.
class VerificationClass {
public:
    VerificationClass(NeighborhoodFn fn, std::vector<ClassTuple> tuples);

    [[nodiscard]] NeighborhoodFn fn() const noexcept { return fn_; }
    [[nodiscard]] const std::vector<ClassTuple>& tuples() const noexcept { return tuples_; }
    [[nodiscard]] std::size_t size() const noexcept { return tuples_.size(); }

    friend bool operator==(const VerificationClass&, const VerificationClass&) = default;

private:
    NeighborhoodFn fn_;
    std::vector<ClassTuple> tuples_;
};

[[nodiscard]] VerificationClass verification_class(const AF& af, NeighborhoodFn x);

/// The class each semantics is computed from by `gamma` (na: eps; stb, stg: +;
/// ad, pr, id: mp; ss, eg: +mp; gr, sad: -pm; co: +-). Empty for cf and sta.
[[nodiscard]] std::optional<NeighborhoodFn> exact_class(Semantics kind) noexcept;

/// Semantics with a criterion, in the order used in reports.
inline constexpr std::array<Semantics, 11> kCriterionSemantics = {
    Semantics::na, Semantics::stb, Semantics::stg, Semantics::ad, Semantics::pr, Semantics::id,
    Semantics::ss, Semantics::eg, Semantics::gr, Semantics::sad, Semantics::co,
};

/// Computes sigma-extensions from the verification class and the argument
/// set alone. `cls` must be built with exact_class(kind); anything else is a
/// ContractError. Throws UnsupportedError for cf and sta.
[[nodiscard]] ExtensionSet gamma(Semantics kind, const VerificationClass& cls, const ArgSet& arguments);

struct SearchOptions {
    std::size_t bound = kDefaultExhaustiveBound;
    unsigned threads = 1;
};

struct AfPair {
    AF first;
    AF second;
};

/// Least pair (F, G) over `n` arguments (ordered by G's mask, then F's)
/// with equal x-classes but different sigma-extensions.
[[nodiscard]] std::optional<AfPair> find_verifiability_counterexample(Semantics kind, NeighborhoodFn x,
                                                                      std::size_t n, const SearchOptions& opts = {});

struct ExactnessReport {
    Semantics kind{};
    std::size_t n = 0;
    /// Subset-minimal (w.r.t. informativeness) nodes with no counterexample.
    std::vector<NeighborhoodFn> minimal;
    /// Per node (indexed by Node): the least counterexample, if any.
    std::array<std::optional<AfPair>, kNumNodes> counterexamples;

    [[nodiscard]] bool verifiable_by(NeighborhoodFn x) const {
        return !counterexamples[static_cast<std::size_t>(x.node())].has_value();
    }
};

/// Searches all fifteen representatives at bound n. Absence of a
/// counterexample is evidence up to n, not a proof.
[[nodiscard]] ExactnessReport minimal_classes(Semantics kind, std::size_t n, const SearchOptions& opts = {});

}  // namespace argkit
