#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "argkit/af.hpp"

namespace argkit {

enum class Semantics : std::uint8_t {
    cf,   // conflict-free
    na,   // naive
    stb,  // stable
    ad,   // admissible
    pr,   // preferred
    co,   // complete
    gr,   // grounded
    ss,   // semi-stable
    stg,  // stage
    id,   // ideal
    eg,   // eager
    sad,  // strongly admissible
    sta,  // stagle: range-maximal cf sets whose range and anti-range cover A
};

inline constexpr std::array<Semantics, 13> kAllSemantics = {
    Semantics::cf, Semantics::na, Semantics::stb, Semantics::ad, Semantics::pr, Semantics::co, Semantics::gr,
    Semantics::ss, Semantics::stg, Semantics::id, Semantics::eg, Semantics::sad, Semantics::sta,
};

[[nodiscard]] std::string_view to_string(Semantics s) noexcept;
[[nodiscard]] std::optional<Semantics> parse_semantics(std::string_view text) noexcept;

/// All sigma-extensions of `af`, canonical order.
[[nodiscard]] ExtensionSet extensions(const AF& af, Semantics kind);

/// Least fixed point of the characteristic function, iterated from the
/// empty set.
[[nodiscard]] ArgSet grounded_fixpoint(const AF& af);

/// Strongly admissible sets by layered construction: start from {} and
/// extend every known set B by any nonempty B' drawn from Gamma(B) \ B until
/// nothing new appears.
[[nodiscard]] ExtensionSet strongly_admissible_sets(const AF& af);

/// Direct recursive test: every a in S is defended by some strongly
/// admissible subset of S \ {a}. Memoized; exponential in |S|.
[[nodiscard]] bool is_strongly_admissible_recursive(const AF& af, const ArgSet& s);

inline constexpr std::size_t kDefaultExhaustiveBound = 4;

struct RationalityResult {
    bool rational = true;
    std::size_t checked = 0;
    /// First framework (in enumeration order) with sigma(F) != sigma(F^l).
    std::optional<AF> counterexample;
};

/// Exhaustive rationality check over every AF on `n` arguments.
/// Throws ResourceError when n exceeds `bound`.
[[nodiscard]] RationalityResult check_rational(Semantics kind, std::size_t n,
                                               std::size_t bound = kDefaultExhaustiveBound);

/// Same check on `samples` uniformly random AFs over `n` arguments.
[[nodiscard]] RationalityResult check_rational_sampled(Semantics kind, std::size_t n, std::size_t samples,
                                                       std::uint64_t seed);

}  // namespace argkit
