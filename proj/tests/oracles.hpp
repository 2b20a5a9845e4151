#pragma once

// Brute-force reference implementations over plain bitmasks. They read only
// the attack relation of an AF and share no code with the library's
// semantics, so agreement between the two is meaningful.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "argkit/af.hpp"
#include "argkit/semantics.hpp"

namespace oracle {

using Mask = std::uint32_t;
using Family = std::set<Mask>;

struct Graph {
    std::size_t n = 0;
    std::vector<Mask> out;  // out[i]: arguments attacked by i
    std::vector<Mask> in;   // in[i]: attackers of i

    explicit Graph(const argkit::AF& af) : n(af.size()), out(n, 0), in(n, 0) {
        for (const auto& [a, b] : af.attack_pairs()) {
            out[a] |= Mask{1} << b;
            in[b] |= Mask{1} << a;
        }
    }

    [[nodiscard]] Mask all() const { return n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1); }

    [[nodiscard]] bool cf(Mask s) const {
        for (std::size_t i = 0; i < n; ++i) {
            if (((s >> i) & 1U) && (out[i] & s)) return false;
        }
        return true;
    }
    [[nodiscard]] Mask attacked(Mask s) const {
        Mask r = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((s >> i) & 1U) r |= out[i];
        }
        return r;
    }
    [[nodiscard]] Mask plus(Mask s) const { return s | attacked(s); }
    [[nodiscard]] Mask minus(Mask s) const {
        Mask r = s;
        for (std::size_t i = 0; i < n; ++i) {
            if (out[i] & s) r |= Mask{1} << i;
        }
        return r;
    }
    [[nodiscard]] bool defends(Mask s, std::size_t a) const { return (in[a] & ~attacked(s)) == 0; }
    [[nodiscard]] Mask gamma(Mask s) const {
        Mask r = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (defends(s, i)) r |= Mask{1} << i;
        }
        return r;
    }
    [[nodiscard]] bool admissible(Mask s) const { return cf(s) && (s & ~gamma(s)) == 0; }
    [[nodiscard]] bool complete(Mask s) const { return admissible(s) && gamma(s) == s; }
};

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool proper_subset(Mask a, Mask b) { return a != b && subset(a, b); }

template <typename Pred>
Family filter(const Graph& g, Pred p) {
    Family out;
    for (Mask s = 0; s <= g.all(); ++s) {
        if (p(s)) out.insert(s);
        if (s == g.all()) break;
    }
    return out;
}

template <typename Key>
Family maximal(const Family& f, Key key) {
    Family out;
    for (Mask s : f) {
        if (std::none_of(f.begin(), f.end(), [&](Mask t) { return proper_subset(key(s), key(t)); })) out.insert(s);
    }
    return out;
}

inline Mask identity(Mask s) { return s; }

/// The greatest member of `f` below every member of `bound`.
inline Family greatest_below_meet(const Graph& g, const Family& ad, const Family& bound) {
    Mask meet = g.all();
    for (Mask s : bound) meet &= s;
    Family below;
    for (Mask s : ad) {
        if (subset(s, meet)) below.insert(s);
    }
    return maximal(below, identity);
}

/// The recursive reading: every a in S is defended by a strongly admissible
/// subset of S \ {a}. Memoized over all masks in cardinality order.
inline Family strongly_admissible(const Graph& g) {
    std::vector<char> sad(std::size_t{1} << g.n, 0);
    std::vector<Mask> order;
    for (Mask s = 0; s <= g.all(); ++s) {
        order.push_back(s);
        if (s == g.all()) break;
    }
    std::stable_sort(order.begin(), order.end(),
                     [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
    Family out;
    for (Mask s : order) {
        bool ok = true;
        for (std::size_t a = 0; a < g.n && ok; ++a) {
            if (!((s >> a) & 1U)) continue;
            const Mask rest = s & ~(Mask{1} << a);
            bool found = false;
            for (Mask t = rest;; t = (t - 1) & rest) {
                if (sad[t] && g.defends(t, a)) {
                    found = true;
                    break;
                }
                if (t == 0) break;
            }
            ok = found;
        }
        if (ok) {
            sad[s] = 1;
            out.insert(s);
        }
    }
    return out;
}

inline Family extensions(const argkit::AF& af, argkit::Semantics kind) {
    using argkit::Semantics;
    const Graph g(af);
    const Family cf = filter(g, [&](Mask s) { return g.cf(s); });
    const Family ad = filter(g, [&](Mask s) { return g.admissible(s); });
    auto range = [&](Mask s) { return g.plus(s); };
    switch (kind) {
        case Semantics::cf: return cf;
        case Semantics::na: return maximal(cf, identity);
        case Semantics::stb: return filter(g, [&](Mask s) { return g.cf(s) && g.plus(s) == g.all(); });
        case Semantics::ad: return ad;
        case Semantics::pr: return maximal(ad, identity);
        case Semantics::co: return filter(g, [&](Mask s) { return g.complete(s); });
        case Semantics::gr: {
            // The complete extension contained in every complete extension.
            const Family co = filter(g, [&](Mask s) { return g.complete(s); });
            Family out;
            for (Mask s : co) {
                if (std::all_of(co.begin(), co.end(), [&](Mask t) { return subset(s, t); })) out.insert(s);
            }
            return out;
        }
        case Semantics::ss: return maximal(ad, range);
        case Semantics::stg: return maximal(cf, range);
        case Semantics::id: return greatest_below_meet(g, ad, maximal(ad, identity));
        case Semantics::eg: return greatest_below_meet(g, ad, maximal(ad, range));
        case Semantics::sad: return strongly_admissible(g);
        case Semantics::sta: {
            Family out;
            for (Mask s : cf) {
                if ((g.plus(s) | g.minus(s)) != g.all()) continue;
                if (std::none_of(cf.begin(), cf.end(), [&](Mask t) { return proper_subset(g.plus(s), g.plus(t)); })) {
                    out.insert(s);
                }
            }
            return out;
        }
    }
    return {};
}

inline Family to_family(const argkit::ExtensionSet& ext) {
    Family out;
    for (const auto& s : ext) out.insert(static_cast<Mask>(s.low_word()));
    return out;
}

}  // namespace oracle
