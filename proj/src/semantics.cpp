#include "argkit/semantics.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "argkit/enumerate.hpp"
#include "argkit/errors.hpp"

namespace argkit {

namespace {

struct NamedKind {
    Semantics kind;
    std::string_view name;
};

constexpr std::array<NamedKind, 13> kNames = {{
    {Semantics::cf, "cf"}, {Semantics::na, "na"}, {Semantics::stb, "stb"}, {Semantics::ad, "ad"},
    {Semantics::pr, "pr"}, {Semantics::co, "co"}, {Semantics::gr, "gr"}, {Semantics::ss, "ss"},
    {Semantics::stg, "stg"}, {Semantics::id, "id"}, {Semantics::eg, "eg"}, {Semantics::sad, "sad"},
    {Semantics::sta, "sta"},
}};

std::vector<ArgSet> subset_maximal(const std::vector<ArgSet>& sets) {
    std::vector<ArgSet> out;
    for (const auto& s : sets) {
        const bool dominated =
            std::any_of(sets.begin(), sets.end(), [&](const ArgSet& t) { return s.proper_subset_of(t); });
        if (!dominated) out.push_back(s);
    }
    return out;
}

/// Members of `sets` whose range is not strictly contained in the range of
/// another member.
std::vector<ArgSet> range_maximal(const AF& af, const std::vector<ArgSet>& sets) {
    std::vector<ArgSet> ranges;
    ranges.reserve(sets.size());
    for (const auto& s : sets) ranges.push_back(s | af.attacked_by(s));
    std::vector<ArgSet> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const bool dominated = std::any_of(ranges.begin(), ranges.end(),
                                           [&](const ArgSet& r) { return ranges[i].proper_subset_of(r); });
        if (!dominated) out.push_back(sets[i]);
    }
    return out;
}

std::vector<ArgSet> cf_list(const AF& af) { return conflict_free_sets(af).sets(); }

bool admissible(const AF& af, const ArgSet& s) { return af.attackers_of(s).subset_of(af.attacked_by(s)); }

std::vector<ArgSet> ad_list(const AF& af) {
    std::vector<ArgSet> out;
    for (const auto& s : cf_list(af)) {
        if (admissible(af, s)) out.push_back(s);
    }
    return out;
}

/// The unique subset-maximal admissible set below the intersection of
/// `family`.
ArgSet maximal_admissible_below_intersection(const AF& af, const std::vector<ArgSet>& family,
                                              std::string_view what) {
    ArgSet meet = af.arguments();
    for (const auto& s : family) meet &= s;
    std::vector<ArgSet> below;
    for (const auto& s : ad_list(af)) {
        if (s.subset_of(meet)) below.push_back(s);
    }
    const std::vector<ArgSet> top = subset_maximal(below);
    if (top.size() != 1) {
        throw std::logic_error(std::string(what) + ": expected a unique maximal admissible set, found " +
                               std::to_string(top.size()));
    }
    return top.front();
}

}  // namespace

std::string_view to_string(Semantics s) noexcept {
    for (const auto& [kind, name] : kNames) {
        if (kind == s) return name;
    }
    return "?";
}

std::optional<Semantics> parse_semantics(std::string_view text) noexcept {
    for (const auto& [kind, name] : kNames) {
        if (name == text) return kind;
    }
    return std::nullopt;
}

ArgSet grounded_fixpoint(const AF& af) {
    ArgSet current;
    while (true) {
        ArgSet next = characteristic(af, current);
        if (next == current) return current;
        current = std::move(next);
    }
}

ExtensionSet strongly_admissible_sets(const AF& af) {
    std::unordered_set<ArgSet> known{ArgSet{}};
    std::vector<ArgSet> frontier{ArgSet{}};
    while (!frontier.empty()) {
        const ArgSet base = std::move(frontier.back());
        frontier.pop_back();
        const ArgSet addable = characteristic(af, base) - base;
        for_each_subset(addable, [&](const ArgSet& extra) {
            if (extra.empty()) return;
            ArgSet grown = base | extra;
            if (known.insert(grown).second) frontier.push_back(std::move(grown));
        });
    }
    return ExtensionSet(std::vector<ArgSet>(known.begin(), known.end()));
}

bool is_strongly_admissible_recursive(const AF& af, const ArgSet& s) {
    af.require_members(s);
    if (s.size() > 20) throw ResourceError("recursive strong admissibility test limited to 20 arguments");
    std::unordered_map<ArgSet, bool> memo;
    std::function<bool(const ArgSet&)> sad = [&](const ArgSet& set) -> bool {
        if (auto it = memo.find(set); it != memo.end()) return it->second;
        bool ok = true;
        set.for_each([&](ArgId a) {
            if (!ok) return;
            ArgSet rest = set;
            rest.erase(a);
            bool defended = false;
            for_each_subset(rest, [&](const ArgSet& candidate) {
                if (!defended && defends(af, candidate, a) && sad(candidate)) defended = true;
            });
            ok = defended;
        });
        memo[set] = ok;
        return ok;
    };
    return sad(s);
}

ExtensionSet extensions(const AF& af, Semantics kind) {
    switch (kind) {
        case Semantics::cf:
            return conflict_free_sets(af);
        case Semantics::na:
            return ExtensionSet(subset_maximal(cf_list(af)));
        case Semantics::stb: {
            const ArgSet all = af.arguments();
            std::vector<ArgSet> out;
            for (const auto& s : cf_list(af)) {
                if ((s | af.attacked_by(s)) == all) out.push_back(s);
            }
            return ExtensionSet(std::move(out));
        }
        case Semantics::ad:
            return ExtensionSet(ad_list(af));
        case Semantics::pr:
            return ExtensionSet(subset_maximal(ad_list(af)));
        case Semantics::co: {
            std::vector<ArgSet> out;
            for (const auto& s : ad_list(af)) {
                if (characteristic(af, s) == s) out.push_back(s);
            }
            return ExtensionSet(std::move(out));
        }
        case Semantics::gr:
            return ExtensionSet{grounded_fixpoint(af)};
        case Semantics::ss:
            return ExtensionSet(range_maximal(af, ad_list(af)));
        case Semantics::stg:
            return ExtensionSet(range_maximal(af, cf_list(af)));
        case Semantics::id:
            return ExtensionSet{
                maximal_admissible_below_intersection(af, subset_maximal(ad_list(af)), "ideal")};
        case Semantics::eg:
            return ExtensionSet{
                maximal_admissible_below_intersection(af, range_maximal(af, ad_list(af)), "eager")};
        case Semantics::sad:
            return strongly_admissible_sets(af);
        case Semantics::sta: {
            const ArgSet all = af.arguments();
            std::vector<ArgSet> out;
            for (const auto& s : range_maximal(af, cf_list(af))) {
                if ((s | af.attacked_by(s) | af.attackers_of(s)) == all) out.push_back(s);
            }
            return ExtensionSet(std::move(out));
        }
    }
    throw std::logic_error("unknown semantics");
}

RationalityResult check_rational(Semantics kind, std::size_t n, std::size_t bound) {
    if (n > bound) {
        throw ResourceError("rationality check bound exceeded: n=" + std::to_string(n) +
                            " > " + std::to_string(bound));
    }
    const AfSpace space(n);
    RationalityResult result;
    for (std::uint64_t mask = 0; mask < space.size(); ++mask) {
        const AF af = space.at(mask);
        ++result.checked;
        if (extensions(af, kind) != extensions(loop_reduct(af), kind)) {
            result.rational = false;
            result.counterexample = af;
            return result;
        }
    }
    return result;
}

RationalityResult check_rational_sampled(Semantics kind, std::size_t n, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto table = std::make_shared<const ArgumentTable>(default_names(n));
    RationalityResult result;
    for (std::size_t i = 0; i < samples; ++i) {
        const AF af = random_af(table, rng);
        ++result.checked;
        if (extensions(af, kind) != extensions(loop_reduct(af), kind)) {
            result.rational = false;
            result.counterexample = af;
            return result;
        }
    }
    return result;
}

}  // namespace argkit
