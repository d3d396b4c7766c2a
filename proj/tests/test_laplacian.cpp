#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fpoly/errors.hpp"
#include "fpoly/forests.hpp"
#include "fpoly/laplacian.hpp"
#include "fpoly/rng.hpp"

using namespace fpoly;

namespace {

MarkedGraph paper_triangle() {
    MarkedGraph g;
    g.n = 3;
    g.marked = {1, 2, 3};
    g.edges = {{2, 3, 0, "a"}, {1, 3, 1, "b"}, {1, 2, 2, "c"}};
    return g;
}

IntMatrix random_matrix(Rng& rng, int d, int lo = -9, int hi = 9) {
    IntMatrix mat(static_cast<std::size_t>(d), std::vector<BigInt>(static_cast<std::size_t>(d)));
    for (auto& row : mat) {
        for (auto& x : row) x = rng.big_in(lo, hi);
    }
    return mat;
}

}  // namespace

TEST_CASE("triangle Laplacian entries") {
    MarkedGraph tri = paper_triangle();
    SymMatrix lap = laplacian(tri);
    const Poly a = Poly::var(0), b = Poly::var(1), c = Poly::var(2);
    CHECK(lap.at(1, 1) == b + c);
    CHECK(lap.at(2, 2) == a + c);
    CHECK(lap.at(3, 3) == a + b);
    CHECK(lap.at(1, 2) == -c);
    CHECK(lap.at(1, 3) == -b);
    CHECK(lap.at(2, 3) == -a);
    CHECK(lap.at(2, 1) == lap.at(1, 2));
    // row sums vanish
    for (int i = 1; i <= 3; ++i) {
        CHECK((lap.at(i, 1) + lap.at(i, 2) + lap.at(i, 3)).is_zero());
    }
}

TEST_CASE("single edge and empty Laplacians") {
    MarkedGraph g;
    g.n = 2;
    g.marked = {1, 2};
    g.edges = {{1, 2, 0, "a"}};
    SymMatrix lap = laplacian(g);
    Poly a = Poly::var(0);
    CHECK(lap.at(1, 1) == a);
    CHECK(lap.at(1, 2) == -a);
    CHECK(lap.at(2, 2) == a);

    MarkedGraph empty;
    empty.n = 2;
    empty.marked = {1, 2};
    SymMatrix zero = laplacian(empty);
    CHECK(zero.at(1, 1).is_zero());
    CHECK(zero.at(1, 2).is_zero());
}

TEST_CASE("principal minor of the triangle is the spanning tree polynomial") {
    MarkedGraph tri = paper_triangle();
    SymMatrix lap = laplacian(tri);
    Poly trees = forest_poly(tri, Partition({1, 1, 1}));
    for (int v = 1; v <= 3; ++v) {
        CHECK(minor_det(lap, {{v}, {v}}) == trees);
    }
    // tree form: spanning trees by their own edges
    Poly raw = minor_det_raw(lap, {{3}, {3}});
    Poly ab = Poly::var(0) * Poly::var(1), ac = Poly::var(0) * Poly::var(2),
         bc = Poly::var(1) * Poly::var(2);
    CHECK(raw == ab + ac + bc);
}

TEST_CASE("removing everything leaves the all-edges monomial") {
    // raw determinant of the empty submatrix is 1; in the forest convention
    // that is the empty forest's complement, the product of all edges
    MarkedGraph tri = paper_triangle();
    SymMatrix lap = laplacian(tri);
    Poly p = minor_det(lap, {{1, 2, 3}, {1, 2, 3}});
    CHECK(p == forest_poly(tri, Partition({1, 2, 3})));
    CHECK(minor_det_raw(lap, {{1, 2, 3}, {1, 2, 3}}) == Poly::constant(1));
}

TEST_CASE("minor spec validation") {
    SymMatrix lap = laplacian(paper_triangle());
    CHECK_THROWS_AS(minor_det(lap, {{1, 2}, {1}}), DimensionMismatch);
    CHECK_THROWS_AS(minor_det(lap, {{4}, {1}}), BadIndex);
    CHECK_THROWS_AS(minor_det(lap, {{1, 1}, {1, 2}}), BadIndex);
}

TEST_CASE("the K_4 worked example") {
    MarkedGraph k4 = MarkedGraph::complete(4, {1, 2, 3, 4});
    SymMatrix lap = laplacian(k4);
    Poly det = minor_det(lap, {{2, 4}, {1, 4}});
    Poly forests = forest_poly(k4, Partition({1, 1, kDash, 2}));
    CHECK(det == -forests);
    CHECK(det == signed_forest_sum(k4, {{2, 4}, {1, 4}}));
}

TEST_CASE("negative sign example on the triangle") {
    MarkedGraph tri = paper_triangle();
    Poly s = signed_forest_sum(tri, {{1, 3}, {1, 2}});
    CHECK(s == -forest_poly(tri, Partition({1, 2, 2})));
    CHECK(s == minor_det(laplacian(tri), {{1, 3}, {1, 2}}));
}

TEST_CASE("matching row and column sets give all-positive signs") {
    MarkedGraph k4 = MarkedGraph::complete(4, {1, 2, 3, 4});
    Poly s = signed_forest_sum(k4, {{1, 3}, {1, 3}});
    for (const auto& [m, c] : s.terms()) CHECK(c == 1);
    CHECK(s == minor_det(laplacian(k4), {{1, 3}, {1, 3}}));
}

TEST_CASE("mixed-sign minor") {
    // det(L_{12,34}) pairs rows {3,4} with columns {1,2} two ways with
    // opposite orientations, so both signs appear
    MarkedGraph k4 = MarkedGraph::complete(4, {1, 2, 3, 4});
    Poly s = signed_forest_sum(k4, {{1, 2}, {3, 4}});
    bool has_pos = false, has_neg = false;
    for (const auto& [m, c] : s.terms()) {
        if (c > 0) has_pos = true;
        if (c < 0) has_neg = true;
    }
    CHECK(has_pos);
    CHECK(has_neg);
    CHECK(s == minor_det(laplacian(k4), {{1, 2}, {3, 4}}));
}

TEST_CASE("all-minors agreement on random graphs") {
    Rng rng(21);
    for (int t = 0; t < 6; ++t) {
        int n = static_cast<int>(rng.int_in(3, 5));
        MarkedGraph g = random_connected_graph(rng, n, n, static_cast<int>(rng.int_in(0, 3)));
        SymMatrix lap = laplacian(g);
        for (int k = 1; k <= std::min(3, n); ++k) {
            std::vector<EdgeMask> subsets = edge_subsets_of_size(n, k);
            for (EdgeMask rmask : subsets) {
                for (EdgeMask cmask : subsets) {
                    MinorSpec spec;
                    for (int v = 0; v < n; ++v) {
                        if (rmask & (EdgeMask(1) << v)) spec.rows.push_back(v + 1);
                        if (cmask & (EdgeMask(1) << v)) spec.cols.push_back(v + 1);
                    }
                    REQUIRE(minor_det(lap, spec) == signed_forest_sum(g, spec));
                }
            }
        }
    }
}

TEST_CASE("integer determinant routes agree") {
    Rng rng(22);
    for (int t = 0; t < 50; ++t) {
        int d = static_cast<int>(rng.int_in(1, 6));
        IntMatrix mat = random_matrix(rng, d);
        CHECK(int_det(mat) == int_det_expansion(mat));
    }
    CHECK(int_det(IntMatrix{}) == 1);
    IntMatrix singular{{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}};
    CHECK(int_det(singular) == 0);
}

TEST_CASE("column expansion residuals vanish") {
    Rng rng(23);
    for (int t = 0; t < 20; ++t) {
        IntMatrix mat = random_matrix(rng, 4);
        CHECK(column_expansion_residual(mat, 2, 1) == 0);  // Dodgson
        CHECK(column_expansion_residual(mat, 2, 2) == 0);
        CHECK(column_expansion_residual(mat, 3, 2) == 0);
    }
    IntMatrix eye(5, std::vector<BigInt>(5, BigInt(0)));
    for (int i = 0; i < 5; ++i) eye[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (int k = 2; k <= 4; ++k) {
        for (int j = 1; j <= k; ++j) CHECK(column_expansion_residual(eye, k, j) == 0);
    }
    CHECK_THROWS_AS(column_expansion_residual(eye, 3, 4), BadIndex);
    CHECK_THROWS_AS(column_expansion_residual(eye, 5, 1), BadIndex);
}

TEST_CASE("Dodgson-Muir residuals vanish") {
    Rng rng(24);
    for (int t = 0; t < 10; ++t) {
        IntMatrix m4 = random_matrix(rng, 4);
        CHECK(dodgson_muir_residual(m4, 2) == 0);
        // k=2 is the Dodgson identity
        BigInt direct = int_det(m4) * int_det(remove_rows_cols(m4, {1, 2}, {1, 2})) -
                        (int_det(remove_rows_cols(m4, {2}, {2})) * int_det(remove_rows_cols(m4, {1}, {1})) -
                         int_det(remove_rows_cols(m4, {2}, {1})) * int_det(remove_rows_cols(m4, {1}, {2})));
        CHECK(direct == 0);
        IntMatrix m5 = random_matrix(rng, 5);
        CHECK(dodgson_muir_residual(m5, 3) == 0);
    }
    for (int t = 0; t < 5; ++t) {
        IntMatrix m6 = random_matrix(rng, 6);
        CHECK(dodgson_muir_residual(m6, 4) == 0);
    }
}

TEST_CASE("inversion counts") {
    CHECK(inversion_count({1, 2, 3}) == 0);
    CHECK(inversion_count({2, 1}) == 1);
    CHECK(inversion_count({3, 2, 1}) == 3);
}

TEST_CASE("extension sign lemma for small k") {
    for (int k = 2; k <= 4; ++k) {
        for (int i = 1; i <= k; ++i) {
            for (int j = 1; j <= k; ++j) {
                std::vector<int> images;
                for (int v = 1; v <= k; ++v) {
                    if (v != j) images.push_back(v);
                }
                std::sort(images.begin(), images.end());
                do {
                    CHECK(extension_sign_check(images, k, i, j));
                } while (std::next_permutation(images.begin(), images.end()));
            }
        }
    }
}
