#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fpoly/errors.hpp"
#include "fpoly/forests.hpp"
#include "fpoly/rng.hpp"
#include "fpoly/unionfind.hpp"

using namespace fpoly;

namespace {

// edge labels follow the worked example: a joins 2-3, b joins 1-3, c joins 1-2
MarkedGraph paper_triangle() {
    MarkedGraph g;
    g.n = 3;
    g.marked = {1, 2, 3};
    g.edges = {{2, 3, 0, "a"}, {1, 3, 1, "b"}, {1, 2, 2, "c"}};
    return g;
}

Poly mono(std::initializer_list<EdgeVar> vars) {
    Monomial m;
    for (EdgeVar v : vars) m = m.times(Monomial::var(v));
    return Poly::monomial(m, 1);
}

}  // namespace

TEST_CASE("triangle forests") {
    MarkedGraph tri = paper_triangle();
    // only edge a can realize {1},{2,3}
    std::vector<EdgeMask> f = spanning_forests(tri, Partition({1, 2, 2}));
    REQUIRE(f.size() == 1);
    CHECK(f[0] == 0b001);
    // all marked vertices apart: only the empty forest
    f = spanning_forests(tri, Partition({1, 2, 3}));
    REQUIRE(f.size() == 1);
    CHECK(f[0] == 0);
}

TEST_CASE("K_4 has 16 spanning trees") {
    MarkedGraph k4 = MarkedGraph::complete(4, {1, 2, 3, 4});
    CHECK(spanning_forests(k4, Partition({1, 1, 1, 1})).size() == 16);
    // evaluation at all-ones counts the forests
    std::vector<BigInt> ones(6, BigInt(1));
    CHECK(forest_poly(k4, Partition({1, 1, 1, 1})).eval(ones) == 16);
}

TEST_CASE("triangle forest polynomials") {
    MarkedGraph tri = paper_triangle();
    const EdgeVar a = 0, b = 1, c = 2;
    CHECK(forest_poly(tri, Partition({1, 2, 2})) == mono({b, c}));
    CHECK(forest_poly(tri, Partition({kDash, 1, 2})) == mono({a, b}) + mono({a, c}));
    CHECK(forest_poly(tri, Partition({1, 1, 1})) == mono({a}) + mono({b}) + mono({c}));
    CHECK(forest_poly(tri, Partition({1, 2, 3})) == mono({a, b, c}));
}

TEST_CASE("dash expansion") {
    auto got = expand_dash(Partition({1, 1, 2, kDash}));
    REQUIRE(got.size() == 2);
    CHECK(got[0] == Partition({1, 1, 2, 1}));
    CHECK(got[1] == Partition({1, 1, 2, 2}));

    got = expand_dash(Partition({kDash, 1, 2}));
    REQUIRE(got.size() == 2);
    CHECK(std::find(got.begin(), got.end(), Partition({1, 1, 2})) != got.end());
    CHECK(std::find(got.begin(), got.end(), Partition({1, 2, 1})) != got.end());

    // a dash vertex joins one of the existing trees, so it never opens a new
    // part: (1,-,-) collapses to the spanning-tree partition
    got = expand_dash(Partition({1, kDash, kDash}));
    REQUIRE(got.size() == 1);
    CHECK(got[0] == Partition({1, 1, 1}));

    CHECK_THROWS_AS(expand_dash(Partition({1, 2, 2})), NoDash);
}

TEST_CASE("dash expansion preserves the polynomial") {
    Rng rng(11);
    for (int t = 0; t < 10; ++t) {
        int n = static_cast<int>(rng.int_in(3, 5));
        MarkedGraph g = random_connected_graph(rng, n, n, static_cast<int>(rng.int_in(0, 3)));
        Partition p;
        for (int i = 0; i < n; ++i) p.entries.push_back(static_cast<int>(rng.int_in(0, 2)));
        if (!p.has_dash() || p.part_count() == 0) continue;
        Partition canon = canonicalize(p);
        Poly expanded;
        for (const Partition& q : expand_dash(canon)) expanded += forest_poly(g, q);
        CHECK(forest_poly(g, canon) == expanded);
    }
}

TEST_CASE("forest polynomials are multilinear") {
    Rng rng(12);
    for (int t = 0; t < 10; ++t) {
        int n = static_cast<int>(rng.int_in(3, 5));
        MarkedGraph g = random_connected_graph(rng, n, n, static_cast<int>(rng.int_in(0, 4)));
        for (const Partition& p : {Partition({1, 1, 1}), Partition({1, 2, 2}), Partition({1, 2, 3})}) {
            if (p.m() != g.m()) continue;
            CHECK(forest_poly(g, p).multilinear());
        }
        Partition all_ones;
        all_ones.entries.assign(static_cast<std::size_t>(n), 1);
        CHECK(forest_poly(g, all_ones).multilinear());
    }
}

TEST_CASE("sum over all partitions equals sum over marked-covering acyclic subgraphs") {
    Rng rng(13);
    for (int t = 0; t < 6; ++t) {
        int n = static_cast<int>(rng.int_in(3, 4));
        int extra = static_cast<int>(rng.int_in(0, 9 - n));
        MarkedGraph g = random_connected_graph(rng, n, n, extra);
        if (g.edge_count() > 8) continue;

        // all set partitions of the marked set, via restricted growth strings
        std::vector<Partition> parts;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int pos, int mx) -> void {
            if (pos == n) {
                parts.push_back(Partition(cur));
                return;
            }
            for (int label = 1; label <= mx + 1; ++label) {
                cur.push_back(label);
                self(self, pos + 1, std::max(mx, label));
                cur.pop_back();
            }
        };
        rec(rec, 0, 0);

        Poly from_partitions;
        for (const Partition& p : parts) from_partitions += forest_poly(g, p);

        // brute force over every edge subset: acyclic spanning subgraphs,
        // complement monomials (every component holds a marked vertex since
        // all vertices are marked here)
        Poly brute;
        UnionFind uf;
        const EdgeMask all = (EdgeMask(1) << g.edge_count()) - 1;
        for (EdgeMask s = 0; s <= all; ++s) {
            uf.reset(g.n);
            bool acyclic = true;
            for (int ei = 0; ei < g.edge_count() && acyclic; ++ei) {
                if (s & (EdgeMask(1) << ei)) acyclic = uf.join(g.edges[ei].u - 1, g.edges[ei].v - 1);
            }
            if (!acyclic) continue;
            Monomial m;
            for (int ei = 0; ei < g.edge_count(); ++ei) {
                if (!(s & (EdgeMask(1) << ei))) m = m.times(Monomial::var(ei));
            }
            brute.add_term(m, 1);
        }
        CHECK(from_partitions == brute);
    }
}

TEST_CASE("deleting an edge splits the polynomial") {
    Rng rng(14);
    for (int t = 0; t < 8; ++t) {
        int n = static_cast<int>(rng.int_in(3, 4));
        MarkedGraph g = random_connected_graph(rng, n, n, static_cast<int>(rng.int_in(1, 3)));
        if (g.edge_count() > 7) continue;
        Partition p({1, 2, 2});
        if (n == 4) p = Partition({1, 2, 2, 1});
        Poly full = forest_poly(g, p);

        const int last = g.edge_count() - 1;
        MarkedGraph del = g;
        del.edges.pop_back();
        Poly without = forest_poly(del, p);

        // terms of `full` not containing a_last
        Poly contracted_part;
        for (const auto& [m, c] : full.terms()) {
            if (m.exponent(last) == 0) contracted_part.add_term(m, c);
        }
        CHECK(full == Poly::var(last) * without + contracted_part);
    }
}

TEST_CASE("disconnected demands give the zero polynomial") {
    MarkedGraph g;
    g.n = 4;
    g.marked = {1, 2, 3};
    g.edges = {{1, 2, 0, "a"}, {3, 4, 1, "b"}};
    // vertices 1 and 3 can never share a tree
    CHECK(forest_poly(g, Partition({1, 2, 1})).is_zero());
    // but separating them works
    CHECK_FALSE(forest_poly(g, Partition({1, 1, 2})).is_zero());
}

TEST_CASE("empty forest convention") {
    MarkedGraph tri = paper_triangle();
    // m = n all-singleton partition: unique empty forest, product of all vars
    Poly p = forest_poly(tri, Partition({1, 2, 3}));
    CHECK(p.term_count() == 1);
    CHECK(p.terms().begin()->first.degree() == 3);
}

TEST_CASE("parallel edges contribute separate variables") {
    MarkedGraph g;
    g.n = 2;
    g.marked = {1, 2};
    g.edges = {{1, 2, 0, "a"}, {1, 2, 1, "b"}};
    // spanning trees: either parallel edge
    CHECK(forest_poly(g, Partition({1, 1})) == Poly::var(0) + Poly::var(1));
    // the 2-forest is the empty edge set; its complement is ab
    CHECK(forest_poly(g, Partition({1, 2})) == Poly::var(0) * Poly::var(1));
}

TEST_CASE("serial and parallel enumeration agree") {
    Rng rng(15);
    for (int t = 0; t < 6; ++t) {
        int n = static_cast<int>(rng.int_in(3, 6));
        MarkedGraph g = random_connected_graph(rng, n, std::min(n, 4), static_cast<int>(rng.int_in(0, 5)));
        Partition p;
        if (g.m() == 3) p = Partition({1, 2, 2});
        else p = Partition({1, 2, 2, 1});
        CHECK(spanning_forests(g, p) == spanning_forests_serial(g, p));
        CHECK(forest_poly(g, p) == forest_poly_serial(g, p));
    }
}

TEST_CASE("forest count for the CLI") {
    MarkedGraph tri = paper_triangle();
    CHECK(forest_count(tri, Partition({1, 2, 2})) == 1);
    CHECK(forest_count(tri, Partition({kDash, 1, 2})) == 2);
    CHECK(forest_count(tri, Partition({1, 1, 1})) == 3);
}
