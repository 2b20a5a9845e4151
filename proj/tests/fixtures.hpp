#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "argkit/af.hpp"
#include "argkit/semantics.hpp"

namespace fixtures {

using argkit::AF;
using argkit::build_af;
using Names = std::vector<std::vector<std::string>>;

/// Sorts a hand-written family into the NamedExtensions order.
inline Names family(Names f) {
    for (auto& s : f) std::sort(s.begin(), s.end());
    std::sort(f.begin(), f.end(), [](const auto& l, const auto& r) {
        return l.size() != r.size() ? l.size() < r.size() : l < r;
    });
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

inline Names named(const AF& af, argkit::Semantics kind) {
    return argkit::named_extensions(af, argkit::extensions(af, kind));
}

inline argkit::ArgSet set_of(const AF& af, const std::vector<std::string>& names) {
    std::vector<argkit::ArgId> ids;
    for (const auto& n : names) ids.push_back(*af.table().find(n));
    return argkit::ArgSet::from_ids(ids);
}

// a <-> b, b -> b, c -> b
inline AF example2() { return build_af({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"b", "b"}, {"c", "b"}}); }

// Strong admissibility example.
inline AF sad_example() {
    return build_af({"a", "b", "c", "d", "e", "f"},
                    {{"a", "b"}, {"b", "c"}, {"c", "e"}, {"e", "e"}, {"e", "f"}, {"f", "e"}, {"d", "e"}});
}

inline AF stagle() { return build_af({"a", "b", "c"}, {{"a", "a"}, {"a", "b"}, {"b", "c"}, {"c", "b"}}); }
inline AF stagle_kernel() { return build_af({"a", "b", "c"}, {{"a", "a"}, {"b", "c"}, {"c", "b"}}); }

inline AF naive_f() { return build_af({"a", "b", "c", "d"}, {{"b", "b"}, {"d", "c"}}); }
inline AF naive_g() { return build_af({"a", "b", "c", "d"}, {{"b", "b"}, {"c", "d"}, {"a", "b"}, {"b", "c"}}); }
/// The common naive kernel as drawn.
inline AF naive_h_drawn() {
    return build_af({"a", "b", "c", "d"},
                    {{"b", "b"}, {"d", "c"}, {"c", "d"}, {"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}});
}

// Pairs used to show exactness of verification classes.
inline AF f1() { return build_af({"a", "b"}, {{"b", "b"}, {"b", "a"}}); }
inline AF f1p() { return build_af({"a", "b"}, {{"b", "b"}}); }
inline AF f2() { return build_af({"a", "b", "c"}, {{"b", "b"}, {"b", "c"}, {"c", "b"}}); }
inline AF f2p() { return build_af({"a", "b", "c"}, {{"b", "b"}, {"a", "b"}, {"c", "b"}, {"b", "c"}}); }
inline AF f3() { return build_af({"a", "b"}, {{"a", "b"}, {"b", "a"}, {"b", "b"}}); }
inline AF f3p() { return build_af({"a", "b"}, {{"b", "b"}}); }
inline AF f4() { return f3(); }
inline AF f4p() { return build_af({"a", "b"}, {{"b", "a"}, {"b", "b"}}); }
inline AF f5() { return f3(); }
inline AF f5p() { return build_af({"a", "b"}, {{"a", "b"}, {"b", "b"}}); }
inline AF f6() { return build_af({"a", "b"}, {{"a", "b"}, {"b", "b"}}); }
inline AF f6p() { return build_af({"a", "b"}, {{"b", "a"}, {"b", "b"}}); }
inline AF f7() { return build_af({"a", "b", "c"}, {{"c", "c"}, {"a", "b"}, {"b", "a"}, {"b", "c"}}); }
inline AF f7p() { return build_af({"a", "b", "c"}, {{"c", "c"}, {"a", "b"}, {"b", "a"}}); }

}  // namespace fixtures
