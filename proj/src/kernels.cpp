#include "argkit/kernels.hpp"

#include <stdexcept>
#include <string>

#include "argkit/errors.hpp"

namespace argkit {

std::string_view to_string(Kernel k) noexcept {
    switch (k) {
        case Kernel::stb: return "stb";
        case Kernel::ad: return "ad";
        case Kernel::gr: return "gr";
        case Kernel::co: return "co";
        case Kernel::na: return "na";
    }
    return "?";
}

std::optional<Kernel> parse_kernel(std::string_view text) noexcept {
    if (text.starts_with("k_")) text.remove_prefix(2);
    for (Kernel k : kAllKernels) {
        if (to_string(k) == text) return k;
    }
    return std::nullopt;
}

AF apply_kernel(const AF& af, Kernel kind) {
    const std::size_t n = af.size();
    const ArgSet loops = self_loops(af);
    std::vector<AttackPair> out;
    if (kind == Kernel::na) {
        for (ArgId a = 0; a < n; ++a) {
            for (ArgId b = 0; b < n; ++b) {
                const bool present = af.targets(a).contains(b);
                const bool added = a != b && (loops.contains(a) || af.targets(b).contains(a) || loops.contains(b));
                if (present || added) out.emplace_back(a, b);
            }
        }
        return AF(af.shared_table(), out);
    }
    for (const auto& [a, b] : af.attack_pairs()) {
        bool drop = false;
        if (a != b) {
            const bool back = af.targets(b).contains(a);
            switch (kind) {
                case Kernel::stb: drop = loops.contains(a); break;
                case Kernel::ad: drop = loops.contains(a) && (back || loops.contains(b)); break;
                case Kernel::gr: drop = loops.contains(b) && (loops.contains(a) || back); break;
                case Kernel::co: drop = loops.contains(a) && loops.contains(b); break;
                case Kernel::na: break;
            }
        }
        if (!drop) out.emplace_back(a, b);
    }
    return AF(af.shared_table(), out);
}

bool has_kernel(Semantics kind) noexcept { return kind != Semantics::cf && kind != Semantics::sta; }

Kernel kernel_for(Semantics kind) {
    switch (kind) {
        case Semantics::stb:
        case Semantics::stg:
            return Kernel::stb;
        case Semantics::ad:
        case Semantics::pr:
        case Semantics::id:
        case Semantics::ss:
        case Semantics::eg:
            return Kernel::ad;
        case Semantics::co:
            return Kernel::co;
        case Semantics::gr:
        case Semantics::sad:
            return Kernel::gr;
        case Semantics::na:
            return Kernel::na;
        case Semantics::cf:
        case Semantics::sta:
            break;
    }
    throw UnsupportedError("no kernel characterizes expansion equivalence for " + std::string(to_string(kind)));
}

bool kernels_equal(const AF& f, const AF& g, Kernel kind) { return apply_kernel(f, kind) == apply_kernel(g, kind); }

}  // namespace argkit
