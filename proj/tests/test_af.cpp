#include <doctest.h>

#include <random>

#include "argkit/enumerate.hpp"
#include "argkit/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace argkit;
using fixtures::set_of;

TEST_CASE("build_af interns endpoints and collapses duplicates") {
    const AF af = build_af({"a"}, {{"a", "b"}, {"a", "b"}, {"b", "b"}});
    CHECK(af.size() == 2);
    CHECK(af.num_attacks() == 2);
    CHECK(af.attacks(*af.table().find("a"), *af.table().find("b")));
    CHECK_THROWS_AS((void)build_af({"a"}, {{"a", "b"}}, true), InputError);
}

TEST_CASE("equality is by name, not by id") {
    const AF f = build_af({"a", "b"}, {{"a", "b"}});
    const AF g = build_af({"b", "a"}, {{"a", "b"}});
    const AF h = build_af({"a", "b"}, {{"b", "a"}});
    CHECK(f == g);
    CHECK_FALSE(f == h);
}

TEST_CASE("conflict-freeness, ranges and defense on the strong admissibility example") {
    const AF af = fixtures::sad_example();
    CHECK(is_conflict_free(af, set_of(af, {"a", "c", "d"})));
    CHECK_FALSE(is_conflict_free(af, set_of(af, {"a", "b"})));
    CHECK_FALSE(is_conflict_free(af, set_of(af, {"e"})));
    CHECK(range(af, set_of(af, {"a"})) == set_of(af, {"a", "b"}));
    CHECK(anti_range(af, set_of(af, {"e"})) == set_of(af, {"c", "d", "e", "f"}));
    CHECK(characteristic(af, {}) == set_of(af, {"a", "d"}));
    CHECK(defends(af, set_of(af, {"a"}), *af.table().find("c")));
    CHECK_FALSE(defends(af, {}, *af.table().find("f")));
    CHECK(self_loops(af) == set_of(af, {"e"}));
}

TEST_CASE("members outside the framework are rejected") {
    const AF af = fixtures::f1();
    CHECK_THROWS_AS((void)characteristic(af, ArgSet{5}), InputError);
    CHECK_THROWS_AS((void)defends(af, {}, 7), InputError);
}

TEST_CASE("union merges by name") {
    const AF f = build_af({"a", "b"}, {{"a", "b"}});
    const AF g = build_af({"b", "c"}, {{"c", "b"}, {"b", "b"}});
    const AF u = union_af(f, g);
    CHECK(u == build_af({"a", "b", "c"}, {{"a", "b"}, {"c", "b"}, {"b", "b"}}));
}

TEST_CASE("union is commutative, associative and idempotent on random triples") {
    std::mt19937_64 rng(7);
    const AfSpace space(3);
    const auto pick = [&] { return space.at(rng() % space.size()); };
    for (int i = 0; i < 200; ++i) {
        const AF f = pick(), g = pick(), h = pick();
        CHECK(union_af(f, g) == union_af(g, f));
        CHECK(union_af(union_af(f, g), h) == union_af(f, union_af(g, h)));
        CHECK(union_af(f, f) == f);
    }
}

TEST_CASE("loop reduct drops attacks between distinct self-attackers only") {
    const AF af = build_af({"a", "b", "c"}, {{"a", "a"}, {"b", "b"}, {"a", "b"}, {"b", "c"}, {"c", "a"}});
    CHECK(loop_reduct(af) == build_af({"a", "b", "c"}, {{"a", "a"}, {"b", "b"}, {"b", "c"}, {"c", "a"}}));
}

TEST_CASE("loop reduct keeps arguments, loops and conflict-free sets for n <= 4") {
    for (std::size_t n = 0; n <= 4; ++n) {
        AfSpace(n).for_each([&](std::uint64_t, const AF& af) {
            const AF l = loop_reduct(af);
            REQUIRE(self_loops(l) == self_loops(af));
            REQUIRE(conflict_free_sets(l) == conflict_free_sets(af));
            REQUIRE(loop_reduct(l) == l);
        });
    }
}

TEST_CASE("characteristic function is monotone") {
    AfSpace(3).for_each([](std::uint64_t, const AF& af) {
        for_each_subset(af.arguments(), [&](const ArgSet& s) {
            for_each_subset(s, [&](const ArgSet& t) {
                REQUIRE(characteristic(af, t).subset_of(characteristic(af, s)));
            });
        });
    });
}

TEST_CASE("conflict-free sets match the reference") {
    AfSpace(3).for_each([](std::uint64_t, const AF& af) {
        REQUIRE(oracle::to_family(conflict_free_sets(af)) == oracle::extensions(af, Semantics::cf));
    });
}

TEST_CASE("ArgSet spans several words") {
    ArgSet s{1, 70, 130};
    CHECK(s.size() == 3);
    CHECK(s.bound() == 131);
    CHECK(s.contains(70));
    s.erase(130);
    s.erase(70);
    CHECK(s == ArgSet{1});
    CHECK(s.bound() == 2);
    CHECK((ArgSet{3, 100} & ArgSet{100}) == ArgSet{100});
    CHECK((ArgSet{3, 100} - ArgSet{100}) == ArgSet{3});
    CHECK(ArgSet{100}.proper_subset_of(ArgSet{3, 100}));
    CHECK_FALSE(ArgSet{100}.intersects(ArgSet{3}));
    CHECK(ArgSet::prefix(65).size() == 65);
}

TEST_CASE("ExtensionSet orders by cardinality, then ids, and deduplicates") {
    const ExtensionSet e{ArgSet{0, 1}, ArgSet{2}, ArgSet{}, ArgSet{0}, ArgSet{2}};
    CHECK(e.size() == 4);
    std::vector<ArgSet> got(e.begin(), e.end());
    CHECK(got == std::vector<ArgSet>{ArgSet{}, ArgSet{0}, ArgSet{2}, ArgSet{0, 1}});
    CHECK(ExtensionSet{ArgSet{0}}.subset_of(e));
    CHECK(e.contains(ArgSet{0, 1}));
}
