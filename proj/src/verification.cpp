#include "argkit/verification.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "argkit/enumerate.hpp"
#include "argkit/errors.hpp"
#include "argkit/parallel.hpp"

namespace argkit {

VerificationClass::VerificationClass(NeighborhoodFn fn, std::vector<ClassTuple> tuples)
    : fn_(fn), tuples_(std::move(tuples)) {
    std::sort(tuples_.begin(), tuples_.end(),
              [](const ClassTuple& l, const ClassTuple& r) { return canonical_compare(l.set, r.set) < 0; });
}

VerificationClass verification_class(const AF& af, NeighborhoodFn x) {
    const std::span<const BasicFn> basics = x.basics();
    std::vector<ClassTuple> tuples;
    for (const ArgSet& s : conflict_free_sets(af)) {
        const ArgSet plus = s | af.attacked_by(s);
        const ArgSet minus = s | af.attackers_of(s);
        ClassTuple t{s, {}};
        for (BasicFn b : basics) t.images.push_back(eval_basic(b, plus, minus));
        tuples.push_back(std::move(t));
    }
    return VerificationClass(x, std::move(tuples));
}

std::optional<NeighborhoodFn> exact_class(Semantics kind) noexcept {
    switch (kind) {
        case Semantics::na: return NeighborhoodFn(Node::eps);
        case Semantics::stb:
        case Semantics::stg: return NeighborhoodFn(Node::p);
        case Semantics::ad:
        case Semantics::pr:
        case Semantics::id: return NeighborhoodFn(Node::mp);
        case Semantics::ss:
        case Semantics::eg: return NeighborhoodFn(Node::p_mp);
        case Semantics::gr:
        case Semantics::sad: return NeighborhoodFn(Node::m_pm);
        case Semantics::co: return NeighborhoodFn(Node::p_m);
        case Semantics::cf:
        case Semantics::sta: break;
    }
    return std::nullopt;
}

// --- criteria ----------------------------------------------------------------

namespace {

using Tuples = std::vector<ClassTuple>;

/// Indices i whose key(i) is not strictly below key(j) for any j in `pool`.
template <typename Key>
std::vector<std::size_t> maximal_by(const Tuples& t, const std::vector<std::size_t>& pool, Key key) {
    std::vector<std::size_t> out;
    for (std::size_t i : pool) {
        const bool dominated =
            std::any_of(pool.begin(), pool.end(), [&](std::size_t j) { return key(t[i]).proper_subset_of(key(t[j])); });
        if (!dominated) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> all_indices(const Tuples& t) {
    std::vector<std::size_t> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = i;
    return out;
}

ExtensionSet to_extensions(const Tuples& t, const std::vector<std::size_t>& chosen) {
    std::vector<ArgSet> out;
    out.reserve(chosen.size());
    for (std::size_t i : chosen) out.push_back(t[i].set);
    return ExtensionSet(std::move(out));
}

/// Admissible: no attacker outside the range, i.e. the (M \ P) image is empty.
std::vector<std::size_t> admissible_indices(const Tuples& t, std::size_t mp_slot) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i].images[mp_slot].empty()) out.push_back(i);
    }
    return out;
}

const ArgSet& set_of(const ClassTuple& c) { return c.set; }

/// The unique subset-maximal admissible set contained in every member of
/// `family`.
std::size_t maximal_admissible_below(const Tuples& t, const std::vector<std::size_t>& admissible,
                                     const std::vector<std::size_t>& family, const ArgSet& arguments,
                                     const char* what) {
    ArgSet meet = arguments;
    for (std::size_t i : family) meet &= t[i].set;
    std::vector<std::size_t> below;
    for (std::size_t i : admissible) {
        if (t[i].set.subset_of(meet)) below.push_back(i);
    }
    const auto top = maximal_by(t, below, set_of);
    if (top.size() != 1) {
        throw std::logic_error(std::string(what) + " criterion: expected one maximal admissible set");
    }
    return top.front();
}

/// Reachable tuples of the layered construction on a (M, P \ M) class: T is
/// reachable from a reachable S strictly inside it when every attacker of T
/// is attacked by S. For admissible S the range is M | (P \ M), so the test
/// is M(T) within T | M(S) | (P\M)(S). Tuples are in cardinality order, so a
/// single pass sees every proper subset before its supersets.
std::vector<bool> strongly_admissible_mask(const Tuples& t) {
    std::vector<bool> reach(t.size(), false);
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (t[j].set.empty()) {
            reach[j] = true;
            continue;
        }
        for (std::size_t i = 0; i < j && !reach[j]; ++i) {
            if (!reach[i] || !t[i].set.proper_subset_of(t[j].set)) continue;
            const ArgSet covered = t[j].set | t[i].images[0] | t[i].images[1];
            if (t[j].images[0].subset_of(covered)) reach[j] = true;
        }
    }
    return reach;
}

}  // namespace

ExtensionSet gamma(Semantics kind, const VerificationClass& cls, const ArgSet& arguments) {
    const auto expected = exact_class(kind);
    if (!expected) throw UnsupportedError("no criterion for " + std::string(to_string(kind)));
    if (cls.fn() != *expected) {
        throw ContractError(std::string(to_string(kind)) + " criterion expects the " +
                            std::string(expected->name()) + " class, got " + std::string(cls.fn().name()));
    }
    const Tuples& t = cls.tuples();
    for (const auto& tuple : t) {
        if (tuple.images.size() != expected->arity()) throw ContractError("class tuple arity mismatch");
    }

    switch (kind) {
        case Semantics::na:
            return to_extensions(t, maximal_by(t, all_indices(t), set_of));

        case Semantics::stb: {
            std::vector<std::size_t> out;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i].images[0] == arguments) out.push_back(i);
            }
            return to_extensions(t, out);
        }
        case Semantics::stg:
            return to_extensions(t, maximal_by(t, all_indices(t), [](const ClassTuple& c) -> const ArgSet& {
                                     return c.images[0];
                                 }));

        case Semantics::ad:
            return to_extensions(t, admissible_indices(t, 0));
        case Semantics::pr:
            return to_extensions(t, maximal_by(t, admissible_indices(t, 0), set_of));
        case Semantics::id: {
            const auto ad = admissible_indices(t, 0);
            const auto pr = maximal_by(t, ad, set_of);
            return to_extensions(t, {maximal_admissible_below(t, ad, pr, arguments, "ideal")});
        }

        case Semantics::ss:
        case Semantics::eg: {
            const auto ad = admissible_indices(t, 1);
            const auto ss = maximal_by(t, ad, [](const ClassTuple& c) -> const ArgSet& { return c.images[0]; });
            if (kind == Semantics::ss) return to_extensions(t, ss);
            return to_extensions(t, {maximal_admissible_below(t, ad, ss, arguments, "eager")});
        }

        case Semantics::sad:
        case Semantics::gr: {
            const std::vector<bool> reach = strongly_admissible_mask(t);
            std::vector<std::size_t> out;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (!reach[i]) continue;
                if (kind == Semantics::sad) {
                    out.push_back(i);
                    continue;
                }
                // Grounded: no conflict-free strict superset is defended.
                const ArgSet range = t[i].images[0] | t[i].images[1];
                const bool extendable = std::any_of(t.begin(), t.end(), [&](const ClassTuple& bar) {
                    return t[i].set.proper_subset_of(bar.set) && bar.images[0].subset_of(bar.set | range);
                });
                if (!extendable) out.push_back(i);
            }
            return to_extensions(t, out);
        }

        case Semantics::co: {
            std::vector<std::size_t> out;
            for (std::size_t i = 0; i < t.size(); ++i) {
                const ArgSet& plus = t[i].images[0];
                const ArgSet& minus = t[i].images[1];
                if (!minus.subset_of(plus)) continue;
                const bool extendable = std::any_of(t.begin(), t.end(), [&](const ClassTuple& bar) {
                    return t[i].set.proper_subset_of(bar.set) && bar.images[1].subset_of(bar.set | plus);
                });
                if (!extendable) out.push_back(i);
            }
            return to_extensions(t, out);
        }

        case Semantics::cf:
        case Semantics::sta:
            break;
    }
    throw UnsupportedError("no criterion for " + std::string(to_string(kind)));
}

// --- bounded verifiability search -------------------------------------------

namespace {

constexpr std::uint64_t kChunk = std::uint64_t{1} << 14;

/// Extension family of every AF in the space, interned to small ids.
struct ExtensionTable {
    AfSpace space;
    std::vector<std::uint32_t> ext_id;
};

ExtensionTable build_extension_table(Semantics kind, std::size_t n, const SearchOptions& opts) {
    if (n > opts.bound) {
        throw ResourceError("verifiability search bound exceeded: n=" + std::to_string(n) + " > " +
                            std::to_string(opts.bound));
    }
    ExtensionTable table{AfSpace(n), {}};
    const std::uint64_t total = table.space.size();
    table.ext_id.resize(total);
    std::unordered_map<ExtensionSet, std::uint32_t, decltype([](const ExtensionSet& e) { return e.hash(); })> ids;
    std::vector<ExtensionSet> chunk;
    for (std::uint64_t base = 0; base < total; base += kChunk) {
        const std::uint64_t len = std::min(kChunk, total - base);
        chunk.assign(len, ExtensionSet{});
        parallel_for(len, opts.threads, [&](std::uint64_t b, std::uint64_t e) {
            for (std::uint64_t i = b; i < e; ++i) chunk[i] = extensions(table.space.at(base + i), kind);
        });
        for (std::uint64_t i = 0; i < len; ++i) {
            auto [it, fresh] = ids.emplace(std::move(chunk[i]), static_cast<std::uint32_t>(ids.size()));
            table.ext_id[base + i] = it->second;
        }
    }
    return table;
}

/// Packs a class over at most 5 arguments into 15 bits per tuple.
std::u16string class_key(const VerificationClass& cls) {
    std::u16string key;
    key.reserve(cls.size());
    for (const auto& t : cls.tuples()) {
        std::uint32_t packed = static_cast<std::uint32_t>(t.set.low_word());
        for (std::size_t i = 0; i < t.images.size(); ++i) {
            packed |= static_cast<std::uint32_t>(t.images[i].low_word()) << (5 * (i + 1));
        }
        key.push_back(static_cast<char16_t>(packed));
    }
    return key;
}

std::optional<AfPair> search_counterexample(const ExtensionTable& table, NeighborhoodFn x, const SearchOptions& opts) {
    struct Seen {
        std::uint32_t ext;
        std::uint64_t first_mask;
    };
    std::unordered_map<std::u16string, boost::container::small_vector<Seen, 2>> groups;
    const std::uint64_t total = table.space.size();
    std::vector<std::u16string> keys;
    for (std::uint64_t base = 0; base < total; base += kChunk) {
        const std::uint64_t len = std::min(kChunk, total - base);
        keys.assign(len, std::u16string{});
        parallel_for(len, opts.threads, [&](std::uint64_t b, std::uint64_t e) {
            for (std::uint64_t i = b; i < e; ++i) keys[i] = class_key(verification_class(table.space.at(base + i), x));
        });
        for (std::uint64_t i = 0; i < len; ++i) {
            const std::uint64_t mask = base + i;
            const std::uint32_t ext = table.ext_id[mask];
            auto& seen = groups[std::move(keys[i])];
            std::optional<std::uint64_t> partner;
            bool have_ext = false;
            for (const Seen& s : seen) {
                if (s.ext == ext) {
                    have_ext = true;
                } else if (!partner || s.first_mask < *partner) {
                    partner = s.first_mask;
                }
            }
            if (partner) return AfPair{table.space.at(*partner), table.space.at(mask)};
            if (!have_ext) seen.push_back({ext, mask});
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<AfPair> find_verifiability_counterexample(Semantics kind, NeighborhoodFn x, std::size_t n,
                                                        const SearchOptions& opts) {
    const ExtensionTable table = build_extension_table(kind, n, opts);
    return search_counterexample(table, x, opts);
}

ExactnessReport minimal_classes(Semantics kind, std::size_t n, const SearchOptions& opts) {
    const ExtensionTable table = build_extension_table(kind, n, opts);
    ExactnessReport report;
    report.kind = kind;
    report.n = n;
    for (Node node : kAllNodes) {
        report.counterexamples[static_cast<std::size_t>(node)] =
            search_counterexample(table, NeighborhoodFn(node), opts);
    }
    for (Node node : kAllNodes) {
        const NeighborhoodFn x(node);
        if (!report.verifiable_by(x)) continue;
        const bool has_weaker = std::any_of(kAllNodes.begin(), kAllNodes.end(), [&](Node other) {
            const NeighborhoodFn y(other);
            return other != node && more_informative(x, y) && report.verifiable_by(y);
        });
        if (!has_weaker) report.minimal.push_back(x);
    }
    return report;
}

}  // namespace argkit
