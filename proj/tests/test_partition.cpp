#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fpoly/errors.hpp"
#include "fpoly/graph.hpp"
#include "fpoly/partition.hpp"
#include "fpoly/rng.hpp"

using namespace fpoly;

TEST_CASE("canonicalization") {
    CHECK(canonicalize(Partition({2, 2, 1, kDash})) == Partition({1, 1, 2, kDash}));
    CHECK(canonicalize(Partition({1, 2, 3, 4})) == Partition({1, 2, 3, 4}));
    CHECK(canonicalize(Partition({3, 3, 3})) == Partition({1, 1, 1}));
    CHECK_THROWS_AS(canonicalize(Partition({1, 5, 2})), InvalidEntry);
    CHECK_THROWS_AS(canonicalize(Partition({-3, 1})), InvalidEntry);
}

TEST_CASE("canonicalize is idempotent and relabel-invariant") {
    Rng rng(7);
    for (int t = 0; t < 300; ++t) {
        int m = static_cast<int>(rng.int_in(1, 6));
        Partition p;
        for (int i = 0; i < m; ++i) {
            int e = static_cast<int>(rng.int_in(0, m));  // 0 = dash
            p.entries.push_back(e);
        }
        Partition c1 = canonicalize(p);
        CHECK(canonicalize(c1) == c1);
        CHECK(c1.is_canonical());
        // any relabeling of part names canonicalizes to the same thing
        int shift = static_cast<int>(rng.int_in(1, m));
        Partition q = p;
        for (int& e : q.entries) {
            if (e != kDash) e = (e + shift - 1) % m + 1;
        }
        CHECK(canonicalize(q) == c1);
    }
}

TEST_CASE("A enumeration matches the m=4 table") {
    std::vector<Partition> a4 = enumerate_A(4);
    REQUIRE(a4.size() == 6);
    CHECK(a4[0] == Partition({1, 1, 2, 3}));
    CHECK(a4[1] == Partition({1, 2, 1, 3}));
    CHECK(a4[2] == Partition({1, 2, 2, 3}));
    CHECK(a4[3] == Partition({1, 2, 3, 1}));
    CHECK(a4[4] == Partition({1, 2, 3, 2}));
    CHECK(a4[5] == Partition({1, 2, 3, 3}));
}

TEST_CASE("A enumeration for m=3") {
    std::vector<Partition> a3 = enumerate_A(3);
    std::set<Partition> expected{Partition({1, 1, 2}), Partition({1, 2, 1}), Partition({1, 2, 2})};
    CHECK(std::set<Partition>(a3.begin(), a3.end()) == expected);
}

TEST_CASE("enumeration counts are the Stirling numbers") {
    for (int m = 3; m <= 7; ++m) {
        CHECK(static_cast<int>(enumerate_A(m).size()) == m * (m - 1) / 2);
        CHECK(static_cast<int>(enumerate_B(m).size()) == (1 << (m - 1)) - 1);
    }
}

TEST_CASE("B enumeration covers the m=4 table") {
    std::vector<Partition> b4 = enumerate_B(4);
    std::set<Partition> got(b4.begin(), b4.end());
    std::set<Partition> expected{Partition({1, 1, 1, 2}), Partition({1, 1, 2, 1}),
                                 Partition({1, 2, 1, 1}), Partition({1, 2, 2, 2}),
                                 Partition({1, 1, 2, 2}), Partition({1, 2, 1, 2}),
                                 Partition({1, 2, 2, 1})};
    CHECK(got == expected);
    CHECK(std::is_sorted(b4.begin(), b4.end()));
}

TEST_CASE("forbidden pairs") {
    // A_5 B_2 from the worked example
    CHECK(is_forbidden({Partition({1, 2, 3, 2}), Partition({1, 1, 2, 1})}));
    CHECK_FALSE(is_forbidden({Partition({1, 1, 2, 3}), Partition({1, 2, 2, 2})}));
}

TEST_CASE("non-forbidden pair counts") {
    int count = 0;
    for (const Partition& a : enumerate_A(4)) {
        for (const Partition& b : enumerate_B(4)) {
            if (!is_forbidden({a, b})) ++count;
        }
    }
    CHECK(count == 24);

    // each A forbids exactly the 2^(m-2)-1 B's that merge its pair
    for (int m = 3; m <= 6; ++m) {
        for (const Partition& a : enumerate_A(m)) {
            int forbidden = 0;
            for (const Partition& b : enumerate_B(m)) {
                if (is_forbidden({a, b})) ++forbidden;
            }
            CHECK(forbidden == (1 << (m - 2)) - 1);
        }
    }
}

TEST_CASE("partition text round trip") {
    CHECK(Partition::parse("(1,1,2,-)") == Partition({1, 1, 2, kDash}));
    CHECK(Partition({1, 2, kDash}).str() == "(1,2,-)");
    CHECK(Partition::parse(Partition({1, 2, 2}).str()) == Partition({1, 2, 2}));
    CHECK_THROWS_AS(Partition::parse("(1,x)"), InvalidEntry);
}

TEST_CASE("complete graphs") {
    CHECK(MarkedGraph::complete(3, {1, 2, 3}).edge_count() == 3);
    CHECK(MarkedGraph::complete(4, {1, 2, 3, 4}).edge_count() == 6);
    CHECK(MarkedGraph::complete(5, {1, 2, 3}).edge_count() == 10);
}

TEST_CASE("graph schema validation") {
    MarkedGraph g;
    g.n = 2;
    g.marked = {1};
    g.edges = {{1, 1, 0, "loop"}};
    CHECK_THROWS_AS(g.validate(), SchemaError);
    g.edges = {{1, 2, 0, "a"}, {1, 2, 1, "a"}};
    CHECK_THROWS_AS(g.validate(), SchemaError);  // duplicate name
    g.edges = {{1, 2, 0, "a"}, {1, 2, 1, "b"}};
    CHECK_NOTHROW(g.validate());  // parallel edges are fine
    g.marked = {1, 1};
    CHECK_THROWS_AS(g.validate(), SchemaError);
}

TEST_CASE("graph JSON round trip") {
    MarkedGraph g = MarkedGraph::from_json(
        R"({"n": 4, "marked": [1,2,3,4], "edges": [[1,2,"a"],[1,3,"b"],[2,3,"c"]]})");
    CHECK(g.n == 4);
    CHECK(g.m() == 4);
    CHECK(g.edges[2].name == "c");
    MarkedGraph h = MarkedGraph::from_json(g.to_json());
    CHECK(h.to_json() == g.to_json());
    CHECK_THROWS_AS(MarkedGraph::from_json("{"), SchemaError);
    CHECK_THROWS_AS(MarkedGraph::from_json(R"({"n": 2, "marked": [1]})"), SchemaError);
}

TEST_CASE("normalization moves marked vertices to the front") {
    MarkedGraph g = MarkedGraph::from_json(
        R"({"n": 4, "marked": [3,1], "edges": [[1,2,"a"],[3,4,"b"],[2,3,"c"]]})");
    MarkedGraph h = g.normalized();
    CHECK(h.marked == std::vector<int>{1, 2});
    // vertex 3 -> 1, vertex 1 -> 2, rest ascending: 2 -> 3, 4 -> 4
    CHECK(h.edges[0].u == 2);
    CHECK(h.edges[0].v == 3);
    CHECK(h.edges[1].u == 1);
    CHECK(h.edges[1].v == 4);
    CHECK(h.edges[2].u == 3);
    CHECK(h.edges[2].v == 1);
}

TEST_CASE("paired vertices of an A partition") {
    auto [l, k] = paired_vertices(Partition({1, 2, 3, 2}));
    CHECK(l == 2);
    CHECK(k == 4);
}
