#include "argkit/equivalence.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "argkit/enumerate.hpp"
#include "argkit/errors.hpp"
#include "argkit/parallel.hpp"

namespace argkit {

bool standard_equivalent(const AF& f, const AF& g, Semantics kind) {
    return named_extensions(f, extensions(f, kind)) == named_extensions(g, extensions(g, kind));
}

EquivalenceVerdict expansion_equivalent(const AF& f, const AF& g, Semantics kind) {
    return {kernels_equal(f, g, kernel_for(kind)), std::nullopt, {}};
}

std::vector<std::string> fresh_names(const AF& f, const AF& g, std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 1; out.size() < count; ++i) {
        std::string name = "x" + std::to_string(i);
        if (!f.table().find(name) && !g.table().find(name)) out.push_back(std::move(name));
    }
    return out;
}

std::optional<AF> find_expansion_counterexample(const AF& f, const AF& g, Semantics kind, std::size_t fresh,
                                                std::size_t bound) {
    if (fresh > kMaxFresh) throw InputError("at most " + std::to_string(kMaxFresh) + " fresh arguments");
    std::set<std::string> shared(f.table().names().begin(), f.table().names().end());
    shared.insert(g.table().names().begin(), g.table().names().end());
    std::vector<std::string> universe(shared.begin(), shared.end());
    for (auto& name : fresh_names(f, g, fresh)) universe.push_back(std::move(name));
    if (universe.size() > bound) {
        throw ResourceError("expansion search needs " + std::to_string(universe.size()) + " arguments, bound is " +
                            std::to_string(bound));
    }

    const std::uint64_t subsets = std::uint64_t{1} << universe.size();
    for (std::uint64_t subset = 0; subset < subsets; ++subset) {
        std::vector<std::string> members;
        for (std::size_t i = 0; i < universe.size(); ++i) {
            if ((subset >> i) & 1U) members.push_back(universe[i]);
        }
        const auto table = std::make_shared<const ArgumentTable>(members);
        const std::uint64_t relations = std::uint64_t{1} << (members.size() * members.size());
        for (std::uint64_t mask = 0; mask < relations; ++mask) {
            AF h = AF::from_mask(table, mask);
            if (!standard_equivalent(union_af(f, h), union_af(g, h), kind)) return h;
        }
    }
    return std::nullopt;
}

std::optional<AF> find_expansion_counterexample(const AF& f, const AF& g, Semantics kind, std::size_t fresh) {
    return find_expansion_counterexample(f, g, kind, fresh, kDefaultExhaustiveBound);
}

EquivalenceVerdict expansion_equivalent_oracle(const AF& f, const AF& g, Semantics kind, const OracleOptions& opts) {
    EquivalenceVerdict v;
    v.witness = find_expansion_counterexample(f, g, kind, opts.fresh, opts.bound);
    v.equivalent = !v.witness;
    v.bound_note = "bounded search: H over the shared arguments plus " + std::to_string(opts.fresh) +
                   " fresh argument(s)";
    return v;
}

// --- partition comparison ----------------------------------------------------

namespace {

constexpr std::uint64_t kChunk = std::uint64_t{1} << 16;

/// sigma-extensions, as interned ids, of every F u H for F on the first n
/// arguments and H within the fresh budget. Layer e holds every AF on
/// n + e arguments; F u H is the bitwise or of the embedded masks.
class ExpansionTable {
public:
    ExpansionTable(Semantics kind, std::size_t n, std::size_t fresh, unsigned threads) : n_(n) {
        std::unordered_map<ExtensionSet, std::uint32_t, decltype([](const ExtensionSet& e) { return e.hash(); })>
            ids;
        std::vector<ExtensionSet> chunk;
        for (std::size_t e = 0; e <= fresh; ++e) {
            const AfSpace space(n + e);
            std::vector<std::uint32_t> layer(space.size());
            for (std::uint64_t base = 0; base < space.size(); base += kChunk) {
                const std::uint64_t len = std::min(kChunk, space.size() - base);
                chunk.assign(len, ExtensionSet{});
                parallel_for(len, threads, [&](std::uint64_t b, std::uint64_t end) {
                    for (std::uint64_t i = b; i < end; ++i) chunk[i] = extensions(space.at(base + i), kind);
                });
                for (std::uint64_t i = 0; i < len; ++i) {
                    layer[base + i] =
                        ids.emplace(std::move(chunk[i]), static_cast<std::uint32_t>(ids.size())).first->second;
                }
            }
            layers_.push_back(std::move(layer));
        }
    }

    /// sigma(F u H) = sigma(G u H) for every H in the budget. Small layers
    /// first, so most separable pairs exit early.
    [[nodiscard]] bool same(std::uint64_t f, std::uint64_t g) const {
        for (std::size_t e = 0; e < layers_.size(); ++e) {
            const std::uint64_t fb = embed(f, e);
            const std::uint64_t gb = embed(g, e);
            const std::uint32_t* layer = layers_[e].data();
            const std::uint64_t size = layers_[e].size();
            for (std::uint64_t h = 0; h < size; ++h) {
                if (layer[fb | h] != layer[gb | h]) return false;
            }
        }
        return true;
    }

private:
    /// Re-indexes the attack mask of an AF on n arguments for n + e arguments.
    [[nodiscard]] std::uint64_t embed(std::uint64_t f, std::size_t e) const {
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                if ((f >> (i * n_ + j)) & 1U) out |= std::uint64_t{1} << (i * (n_ + e) + j);
            }
        }
        return out;
    }

    std::size_t n_;
    std::vector<std::vector<std::uint32_t>> layers_;
};

/// Class ids of the oracle partition. Each AF is first compared with the
/// least AF of its kernel class, then with every class representative
/// found so far.
std::vector<std::uint32_t> oracle_classes(const ExpansionTable& table, const std::vector<std::uint64_t>& ker,
                                          unsigned threads) {
    const std::uint64_t count = ker.size();
    std::unordered_map<std::uint64_t, std::uint64_t> kernel_rep;
    for (std::uint64_t f = 0; f < count; ++f) kernel_rep.emplace(ker[f], f);

    // Non-representatives checked against their kernel representative in
    // parallel; those agreeing inherit its class below.
    std::vector<char> with_rep(count, 0);
    parallel_for(count, threads, [&](std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t f = b; f < e; ++f) {
            const std::uint64_t rep = kernel_rep.at(ker[f]);
            with_rep[f] = rep != f && table.same(rep, f);
        }
    });

    std::vector<std::uint32_t> cls(count);
    std::vector<std::uint64_t> reps;
    for (std::uint64_t f = 0; f < count; ++f) {
        if (with_rep[f]) {
            cls[f] = cls[kernel_rep.at(ker[f])];
            continue;
        }
        std::optional<std::uint32_t> found;
        for (std::uint32_t c = 0; c < reps.size() && !found; ++c) {
            if (table.same(reps[c], f)) found = c;
        }
        if (!found) {
            found = static_cast<std::uint32_t>(reps.size());
            reps.push_back(f);
        }
        cls[f] = *found;
    }
    return cls;
}

template <typename Key>
std::uint64_t pairs_within(const std::map<Key, std::uint64_t>& groups) {
    std::uint64_t total = 0;
    for (const auto& [key, size] : groups) total += size * (size - 1) / 2;
    return total;
}

}  // namespace

KernelOracleComparison compare_kernel_with_oracle(Semantics kind, Kernel kernel, std::size_t n,
                                                  const OracleOptions& opts, unsigned threads) {
    if (opts.fresh > kMaxFresh) throw InputError("at most " + std::to_string(kMaxFresh) + " fresh arguments");
    if (n + opts.fresh > opts.bound || n + opts.fresh > kMaxEnumerationArgs) {
        throw ResourceError("kernel/oracle comparison needs " + std::to_string(n + opts.fresh) +
                            " arguments, bound is " + std::to_string(opts.bound));
    }
    const AfSpace space(n);
    const std::uint64_t count = space.size();
    std::vector<std::uint64_t> ker(count);
    parallel_for(count, threads, [&](std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t f = b; f < e; ++f) ker[f] = apply_kernel(space.at(f), kernel).attack_mask();
    });
    const ExpansionTable table(kind, n, opts.fresh, threads);
    const std::vector<std::uint32_t> sig = oracle_classes(table, ker, threads);

    std::map<std::uint64_t, std::uint64_t> by_kernel, by_sig;
    std::map<std::pair<std::uint64_t, std::uint32_t>, std::uint64_t> by_both;
    for (std::uint64_t f = 0; f < count; ++f) {
        ++by_kernel[ker[f]];
        ++by_sig[sig[f]];
        ++by_both[{ker[f], sig[f]}];
    }
    KernelOracleComparison out;
    out.kind = kind;
    out.kernel = kernel;
    out.n = n;
    out.fresh = opts.fresh;
    out.pairs = count * (count - 1) / 2;
    const std::uint64_t both = pairs_within(by_both);
    out.unsound = pairs_within(by_kernel) - both;
    out.incomplete = pairs_within(by_sig) - both;
    if (out.agrees()) return out;

    for (std::uint64_t g = 1; g < count && !out.first_violation; ++g) {
        for (std::uint64_t f = 0; f < g; ++f) {
            if ((ker[f] == ker[g]) == (sig[f] == sig[g])) continue;
            out.first_violation = AfPair{space.at(f), space.at(g)};
            if (sig[f] != sig[g]) {
                out.first_witness = find_expansion_counterexample(out.first_violation->first,
                                                                  out.first_violation->second, kind, opts.fresh,
                                                                  opts.bound);
            }
            break;
        }
    }
    return out;
}

std::optional<IntermediateInstance> intermediate_instance(Semantics kind) noexcept {
    const NeighborhoodFn plus(Node::p), plus_mp(Node::p_mp), minus_pm(Node::m_pm);
    switch (kind) {
        case Semantics::stb:
        case Semantics::stg:
        case Semantics::sta: return IntermediateInstance{plus, Semantics::stb, Semantics::stg, Kernel::stb, 1};
        case Semantics::pr:
        case Semantics::ss:
        case Semantics::co: return IntermediateInstance{plus_mp, Semantics::ss, Semantics::ad, Kernel::ad, 1};
        case Semantics::id: return IntermediateInstance{plus_mp, Semantics::id, Semantics::ad, Kernel::ad, 1};
        case Semantics::eg: return IntermediateInstance{plus_mp, Semantics::eg, Semantics::ad, Kernel::ad, 1};
        case Semantics::gr:
        case Semantics::sad: return IntermediateInstance{minus_pm, Semantics::gr, Semantics::sad, Kernel::gr, 2};
        default: break;
    }
    return std::nullopt;
}

IntermediateReport check_intermediate_theorem(Semantics kind, std::size_t n, unsigned threads,
                                              std::optional<std::size_t> fresh) {
    const auto instance = intermediate_instance(kind);
    if (!instance) throw UnsupportedError("no intermediate theorem instance for " + std::string(to_string(kind)));
    IntermediateReport report;
    report.kind = kind;
    report.instance = *instance;
    report.n = n;

    OracleOptions opts;
    opts.fresh = fresh.value_or(instance->fresh);
    opts.bound = n + opts.fresh;
    SearchOptions search;
    search.bound = n;
    search.threads = threads;
    report.verifiable = !find_verifiability_counterexample(kind, instance->verifiable_by, n, search);

    const AfSpace space(n);
    std::vector<char> inside(space.size(), 0);
    parallel_for(space.size(), threads, [&](std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t m = b; m < e; ++m) {
            const AF af = space.at(m);
            const ExtensionSet mid = extensions(af, kind);
            inside[m] = extensions(af, instance->lower).subset_of(mid) &&
                        mid.subset_of(extensions(af, instance->upper));
        }
    });
    report.bracketed = std::all_of(inside.begin(), inside.end(), [](char c) { return c != 0; });

    report.comparison = compare_kernel_with_oracle(kind, instance->kernel, n, opts, threads);
    return report;
}

}  // namespace argkit
