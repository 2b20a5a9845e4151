#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argkit/arg_set.hpp"

namespace argkit {

/// The eight set-theoretically distinct unary neighborhood functions r(P, M)
/// over a range P and anti-range M.
enum class BasicFn : std::uint8_t {
    eps,         // {}
    plus,        // P
    minus,       // M
    minus_plus,  // M \ P
    plus_minus,  // P \ M
    cap,         // P & M
    cup,         // P | M
    delta,       // (P | M) \ (P & M)
};

inline constexpr std::array<BasicFn, 8> kAllBasics = {
    BasicFn::eps, BasicFn::plus, BasicFn::minus, BasicFn::minus_plus,
    BasicFn::plus_minus, BasicFn::cap, BasicFn::cup, BasicFn::delta,
};

[[nodiscard]] ArgSet eval_basic(BasicFn b, const ArgSet& plus, const ArgSet& minus);

/// CLI token: eps, p, m, mp, pm, cap, cup, delta.
[[nodiscard]] std::string_view token(BasicFn b) noexcept;
[[nodiscard]] std::optional<BasicFn> parse_basic(std::string_view text) noexcept;

/// The fifteen representatives of neighborhood functions up to mutual
/// derivability, in lattice order: bottom, the seven unary functions, the
/// six binary combinations, top.
enum class Node : std::uint8_t {
    eps, p, pm, cap, delta, cup, mp, m,
    p_pm, p_mp, pm_mp, cap_cup, m_pm, m_mp,
    p_m,
};

inline constexpr std::size_t kNumNodes = 15;

inline constexpr std::array<Node, kNumNodes> kAllNodes = {
    Node::eps, Node::p, Node::pm, Node::cap, Node::delta, Node::cup, Node::mp, Node::m,
    Node::p_pm, Node::p_mp, Node::pm_mp, Node::cap_cup, Node::m_pm, Node::m_mp, Node::p_m,
};

/// A neighborhood function reduced to its representative node. The
/// representative's basic tuple fixes the arity and order of the images in a
/// verification class (eps has arity 1 with the constant empty image).
class NeighborhoodFn {
public:
    constexpr NeighborhoodFn() = default;
    constexpr explicit NeighborhoodFn(Node node) : node_(node) {}

    [[nodiscard]] constexpr Node node() const noexcept { return node_; }
    [[nodiscard]] std::span<const BasicFn> basics() const noexcept;
    [[nodiscard]] std::size_t arity() const noexcept { return basics().size(); }
    /// ASCII display name, e.g. "+", "pm", "+mp", "+-".
    [[nodiscard]] std::string_view name() const noexcept;
    /// 0 for eps, 1 for unary, 2 for the binary nodes, 3 for the top.
    [[nodiscard]] int level() const noexcept;

    friend constexpr bool operator==(NeighborhoodFn, NeighborhoodFn) = default;

private:
    Node node_ = Node::eps;
};

/// Drops eps and duplicates, then folds the remaining basics pairwise: two
/// unary basics merge through the fixed 21-entry pair table, any other pair
/// merges to its least upper bound in the lattice.
[[nodiscard]] NeighborhoodFn canonicalize(std::span<const BasicFn> basics);

/// Same as canonicalize but merges in the order given by `order`
/// (a permutation of the deduplicated non-eps basics). Exposed for the
/// confluence check.
[[nodiscard]] NeighborhoodFn canonicalize_in_order(const std::vector<BasicFn>& order);

/// The pair table entry for two distinct non-eps basics.
[[nodiscard]] Node merge_pair(BasicFn a, BasicFn b);

/// x is at least as informative as y, read off the hardcoded lattice.
[[nodiscard]] bool more_informative(NeighborhoodFn x, NeighborhoodFn y) noexcept;

/// Covering edges (lower, upper) of the lattice as drawn.
[[nodiscard]] const std::vector<std::pair<Node, Node>>& lattice_edges();

/// Parses "p,mp", "eps", or a representative display name such as "+-".
[[nodiscard]] std::optional<NeighborhoodFn> parse_neighborhood(std::string_view text);
[[nodiscard]] std::optional<std::vector<BasicFn>> parse_basic_list(std::string_view text);

/// Brute-force derivability check: over a 4-element universe, r^y is a
/// function of r^x. Independent of the hardcoded lattice.
[[nodiscard]] bool informativeness_oracle(std::span<const BasicFn> x, std::span<const BasicFn> y);
[[nodiscard]] bool informativeness_oracle(NeighborhoodFn x, NeighborhoodFn y);

}  // namespace argkit
