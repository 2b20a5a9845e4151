#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "argkit/af.hpp"
#include "argkit/semantics.hpp"

namespace argkit {

enum class Kernel : std::uint8_t { stb, ad, gr, co, na };

inline constexpr std::array<Kernel, 5> kAllKernels = {Kernel::stb, Kernel::ad, Kernel::gr, Kernel::co, Kernel::na};

[[nodiscard]] std::string_view to_string(Kernel k) noexcept;
/// Accepts "stb" or "k_stb" style names.
[[nodiscard]] std::optional<Kernel> parse_kernel(std::string_view text) noexcept;

/// Rewrites the attack relation; the argument set is unchanged.
///
///   stb: drop (a,b), a != b, if a attacks itself
///   ad:  drop (a,b), a != b, if a attacks itself and b attacks a or itself
///   gr:  drop (a,b), a != b, if b attacks itself and a attacks itself or b attacks a
///   co:  drop (a,b), a != b, if both a and b attack themselves
///   na:  add  (a,b), a != b, if a attacks itself, b attacks a, or b attacks itself
[[nodiscard]] AF apply_kernel(const AF& af, Kernel kind);

/// Kernel whose equality characterizes expansion equivalence for `kind`.
/// Throws UnsupportedError for cf and sta.
[[nodiscard]] Kernel kernel_for(Semantics kind);

/// Whether kernel_for(kind) is defined.
[[nodiscard]] bool has_kernel(Semantics kind) noexcept;

/// Name-level equality of the two kernels.
[[nodiscard]] bool kernels_equal(const AF& f, const AF& g, Kernel kind);

}  // namespace argkit
