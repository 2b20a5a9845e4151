#include <doctest.h>

#include <algorithm>

#include "argkit/neighborhood.hpp"

using namespace argkit;

TEST_CASE("lattice order matches derivability for all 225 pairs") {
    for (Node x : kAllNodes) {
        for (Node y : kAllNodes) {
            INFO(NeighborhoodFn(x).name(), " vs ", NeighborhoodFn(y).name());
            CHECK(more_informative(NeighborhoodFn(x), NeighborhoodFn(y)) ==
                  informativeness_oracle(NeighborhoodFn(x), NeighborhoodFn(y)));
        }
    }
}

TEST_CASE("lattice order is a partial order with eps at the bottom and +- on top") {
    for (Node x : kAllNodes) {
        const NeighborhoodFn fx(x);
        CHECK(more_informative(fx, fx));
        CHECK(more_informative(fx, NeighborhoodFn(Node::eps)));
        CHECK(more_informative(NeighborhoodFn(Node::p_m), fx));
        for (Node y : kAllNodes) {
            const NeighborhoodFn fy(y);
            if (x != y) CHECK_FALSE((more_informative(fx, fy) && more_informative(fy, fx)));
            for (Node z : kAllNodes) {
                const NeighborhoodFn fz(z);
                if (more_informative(fx, fy) && more_informative(fy, fz)) CHECK(more_informative(fx, fz));
            }
        }
    }
}

TEST_CASE("covering edges point upwards") {
    for (const auto& [lo, hi] : lattice_edges()) {
        CHECK(more_informative(NeighborhoodFn(hi), NeighborhoodFn(lo)));
        CHECK_FALSE(more_informative(NeighborhoodFn(lo), NeighborhoodFn(hi)));
    }
}

TEST_CASE("canonicalization is confluent over all 127 subsets of unary basics") {
    const std::vector<BasicFn> seven(kAllBasics.begin() + 1, kAllBasics.end());
    std::vector<Node> reps;
    for (unsigned mask = 1; mask < 128; ++mask) {
        std::vector<BasicFn> basics;
        for (std::size_t i = 0; i < 7; ++i) {
            if ((mask >> i) & 1U) basics.push_back(seven[i]);
        }
        const NeighborhoodFn rep = canonicalize(basics);
        reps.push_back(rep.node());
        std::vector<BasicFn> order = basics;
        do {
            REQUIRE(canonicalize_in_order(order) == rep);
        } while (std::next_permutation(order.begin(), order.end()));
        CHECK(informativeness_oracle(basics, rep.basics()));
        CHECK(informativeness_oracle(rep.basics(), basics));
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    CHECK(reps.size() == kNumNodes - 1);
}

TEST_CASE("pair table examples") {
    CHECK(merge_pair(BasicFn::plus, BasicFn::minus) == Node::p_m);
    CHECK(merge_pair(BasicFn::cap, BasicFn::cup) == Node::cap_cup);
    CHECK(merge_pair(BasicFn::cup, BasicFn::cap) == Node::cap_cup);
    CHECK(canonicalize(std::vector<BasicFn>{BasicFn::eps}).node() == Node::eps);
    CHECK(canonicalize(std::vector<BasicFn>{BasicFn::plus, BasicFn::eps, BasicFn::plus}).node() == Node::p);
}

TEST_CASE("parsing basics and representatives") {
    for (Node x : kAllNodes) CHECK(parse_neighborhood(NeighborhoodFn(x).name()) == NeighborhoodFn(x));
    for (BasicFn b : kAllBasics) CHECK(parse_basic(token(b)) == b);
    CHECK(parse_neighborhood("p,mp") == NeighborhoodFn(Node::p_mp));
    CHECK(parse_neighborhood("mp,p") == NeighborhoodFn(Node::p_mp));
    CHECK(parse_neighborhood("p,m,mp") == NeighborhoodFn(Node::p_m));
    CHECK_FALSE(parse_neighborhood("q").has_value());
    CHECK_FALSE(parse_neighborhood("").has_value());
}

TEST_CASE("representative arity") {
    CHECK(NeighborhoodFn(Node::eps).arity() == 1);
    CHECK(NeighborhoodFn(Node::mp).arity() == 1);
    CHECK(NeighborhoodFn(Node::m_pm).arity() == 2);
    CHECK(NeighborhoodFn(Node::p_m).arity() == 2);
}
