#include "fpoly/acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "fpoly/cli.hpp"
#include "fpoly/errors.hpp"
#include "fpoly/forests.hpp"
#include "fpoly/graph.hpp"
#include "fpoly/identities.hpp"
#include "fpoly/idspace.hpp"
#include "fpoly/laplacian.hpp"
#include "fpoly/rng.hpp"

namespace fpoly {

namespace {

constexpr std::uint64_t kSeed = 20250807;

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

struct Check {
    bool ok = true;
    std::ostringstream why;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why << what;
        }
    }
};

// ---- criterion 1: the triangle ground truth ----
Check triangle_ground_truth() {
    Check c;
    MarkedGraph tri = paper_triangle();
    const EdgeVar a = 0, b = 1, cc = 2;
    c.require(forest_poly(tri, Partition({1, 2, 2})) == mono({b, cc}), "(1,2,2) != bc");
    c.require(forest_poly(tri, Partition({kDash, 1, 2})) == mono({a, b}) + mono({a, cc}),
              "(-,1,2) != ab+ac");
    c.require(forest_poly(tri, Partition({1, 1, 1})) == mono({a}) + mono({b}) + mono({cc}),
              "(1,1,1) != a+b+c");
    c.require(forest_poly(tri, Partition({1, 2, 3})) == mono({a, b, cc}), "(1,2,3) != abc");
    std::vector<std::string> names = tri.var_names();
    c.require(forest_poly(tri, Partition({1, 2, 2})).str(&names) == "b*c", "text form != b*c");
    return c;
}

// ---- criterion 2: column expansion and Dodgson-Muir residuals ----
Check column_expansion_dodgson_muir() {
    Check c;
    Rng rng(kSeed);
    long long checked = 0;
    for (int d = 4; d <= 7; ++d) {
        for (int k = 2; k <= 5 && k < d; ++k) {
            for (int trial = 0; trial < 100; ++trial) {
                IntMatrix mat(static_cast<std::size_t>(d),
                              std::vector<BigInt>(static_cast<std::size_t>(d)));
                for (auto& row : mat) {
                    for (auto& x : row) x = rng.big_in(-9, 9);
                }
                for (int j = 1; j <= k; ++j) {
                    if (column_expansion_residual(mat, k, j) != 0) {
                        c.require(false, "column expansion residual nonzero at d=" +
                                             std::to_string(d) + " k=" + std::to_string(k));
                        return c;
                    }
                    ++checked;
                }
                if (k <= 4) {
                    if (dodgson_muir_residual(mat, k) != 0) {
                        c.require(false, "Dodgson-Muir residual nonzero at d=" + std::to_string(d) +
                                             " k=" + std::to_string(k));
                        return c;
                    }
                    ++checked;
                }
            }
        }
    }
    c.why << checked << " residuals";
    return c;
}

// ---- criterion 3: all-minors matrix-tree agreement ----
Check matrix_tree_agreement() {
    Check c;
    std::vector<MarkedGraph> corpus;
    corpus.push_back(paper_triangle());
    corpus.push_back(MarkedGraph::complete(4, {1, 2, 3, 4}));
    Rng rng(kSeed ^ 0x6d7474ULL);
    while (corpus.size() < 32) {
        int n = static_cast<int>(rng.int_in(3, 5));
        int max_extra = std::min(8, n * (n - 1) / 2 + 2) - (n - 1);
        int extra = static_cast<int>(rng.int_in(0, max_extra));
        corpus.push_back(random_connected_graph(rng, n, n, extra));
    }

    long long specs = 0;
    for (const MarkedGraph& g : corpus) {
        SymMatrix lap = laplacian(g);
        const int n = g.n;
        for (int k = 1; k <= 3 && k <= n; ++k) {
            std::vector<EdgeMask> subsets = edge_subsets_of_size(n, k);
            for (EdgeMask rmask : subsets) {
                for (EdgeMask cmask : subsets) {
                    MinorSpec spec;
                    for (int v = 0; v < n; ++v) {
                        if (rmask & (EdgeMask(1) << v)) spec.rows.push_back(v + 1);
                        if (cmask & (EdgeMask(1) << v)) spec.cols.push_back(v + 1);
                    }
                    if (!(minor_det(lap, spec) == signed_forest_sum(g, spec))) {
                        c.require(false, "minor_det != signed_forest_sum on a corpus graph");
                        return c;
                    }
                    ++specs;
                }
            }
        }
    }

    // the worked examples: det(L_{24,14}) on K_4 and det(L_{13,12}) on the triangle
    MarkedGraph k4 = MarkedGraph::complete(4, {1, 2, 3, 4});
    Poly lhs = minor_det(laplacian(k4), {{2, 4}, {1, 4}});
    c.require(lhs == -forest_poly(k4, Partition({1, 1, kDash, 2})),
              "det(L_24,14) != -(1,1,-,2) on K_4");
    MarkedGraph tri = paper_triangle();
    Poly neg = minor_det(laplacian(tri), {{1, 3}, {1, 2}});
    c.require(neg == -forest_poly(tri, Partition({1, 2, 2})), "det(L_13,12) != -(1,2,2)");
    c.why << corpus.size() << " graphs, " << specs << " minors";
    return c;
}

// ---- criterion 4: the twelve m=4 identities ----
Check m4_identity_suite() {
    Check c;
    MarkedGraph k4 = MarkedGraph::complete(4, {1, 2, 3, 4});
    MarkedGraph k5 = MarkedGraph::complete(5, {1, 2, 3, 4});
    for (const MarkedGraph* g : {&k4, &k5}) {
        Poly lhs = forest_poly(*g, Partition({1, 1, 1, 1})) * forest_poly(*g, Partition({1, 2, 3, 4}));
        for (int col = 1; col <= 4; ++col) {
            for (int jp = 1; jp <= 3; ++jp) {
                int jv = vertex_of_expansion_index(col, jp);
                IdentityRecord rec = gen_identity(4, col, jv);
                c.require(rec.sum.terms.size() == 8, "identity does not have 8 terms");
                for (const auto& [pair, coeff] : rec.sum.terms) {
                    c.require(coeff == 1, "non-unit coefficient");
                }
                c.require(rec.sum == m4_display(col, jp), "identity differs from its display");
                c.require(verify_identity(rec.sum, *g), "identity fails to verify");
                // the displayed determinant expansion, for every row choice
                Poly from_sum;
                for (const auto& [pair, coeff] : rec.sum.terms) {
                    from_sum.add_scaled_product(forest_poly(*g, pair.A), forest_poly(*g, pair.B),
                                                BigInt(coeff.get_num()));
                }
                c.require(from_sum == lhs, "sum of AB products != (1,1,1,1)(1,2,3,4)");
                for (int r = 1; r <= 4; ++r) {
                    c.require(rhs_via_determinants(*g, r, col, jp) == from_sum,
                              "determinant expansion differs at r=" + std::to_string(r));
                }
                if (!c.ok) return c;
            }
        }
    }
    c.why << "12 identities on K_4 and K_5, rows 1..4";
    return c;
}

// ---- criterion 5: block sums ----
Check block_sums() {
    Check c;
    for (int m = 3; m <= 6; ++m) {
        FormalSum expected = all_nonforbidden_sum(m);
        for (int col = 1; col <= m; ++col) {
            if (!(block_sum(m, col) == expected)) {
                c.require(false, "block sum differs at m=" + std::to_string(m) +
                                     " c=" + std::to_string(col));
                return c;
            }
        }
        if (m == 4) c.require(expected.terms.size() == 24, "m=4 block sum is not 24 terms");
    }
    c.why << "m=3..6";
    return c;
}

// ---- criterion 6: the 8-parameter identity ----
Check vy_identity_family() {
    Check c;
    MarkedGraph k4 = MarkedGraph::complete(4, {1, 2, 3, 4});
    MarkedGraph k5 = MarkedGraph::complete(5, {1, 2, 3, 4});
    Rng rng(kSeed ^ 0x7679ULL);
    for (int t = 0; t < 20; ++t) {
        VYParams x;
        for (int i = 0; i < 8; ++i) x[i] = rng.rational(9, 9);
        FormalSum s = vy_identity(x);
        c.require(verify_identity(s, k4), "random x fails on K_4");
        c.require(verify_identity(s, k5), "random x fails on K_5");
        if (!c.ok) return c;
    }
    for (int col = 1; col <= 4; ++col) {
        for (int jp = 1; jp <= 3; ++jp) {
            FormalSum from_x = vy_identity(m4_specialization(col, jp));
            FormalSum gen = gen_identity(4, col, vertex_of_expansion_index(col, jp)).sum;
            c.require(from_x == gen, "specialization mismatch at c=" + std::to_string(col) +
                                         " j'=" + std::to_string(jp));
        }
    }
    for (int t = 0; t < 20; ++t) {
        VYParams y;
        for (int i = 0; i < 8; ++i) y[i] = rng.rational(9, 9);
        c.require(vy_from_column_identities(y) == vy_identity(vy_x_from_y(y)),
                  "y-form differs from x-form");
        if (!c.ok) return c;
    }
    c.why << "20 x-trials, 12 specializations, 20 y-trials";
    return c;
}

// ---- criterion 7: the dimension theorem ----
Check dimension_theorem() {
    Check c;
    for (int m : {3, 4, 5}) {
        DimensionReport r = dimension_report(m, kSeed);
        std::ostringstream os;
        os << "m=" << m << " expected " << r.expected << ", got lower=" << r.lower
           << " upper=" << r.upper;
        c.require(r.pass && r.lower == m * (m - 2) && r.upper == m * (m - 2), os.str());
        if (!c.ok) return c;
    }
    // the displayed 8x8 change-of-variables matrix is non-singular
    static const int paper_matrix[8][8] = {
        {1, 0, 0, 0, -1, 0, 0, 0}, {1, 0, -1, 0, 0, 0, 0, 0}, {0, 1, 0, -1, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, -1, 0, 0}, {0, 1, 0, 0, 0, 0, -1, 0}, {0, 0, -1, -1, 1, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, -1}, {0, 0, -1, -1, 0, 0, 1, 1}};
    QMatrix q;
    for (int i = 0; i < 8; ++i) {
        QVector row;
        for (int j = 0; j < 8; ++j) row.push_back(Rational(paper_matrix[i][j]));
        q.rows.push_back(row);
    }
    c.require(exact_rank(q) == 8, "8x8 change-of-variables matrix rank != 8");
    c.why << "dims (3,3) (8,8) (15,15); matrix rank 8";
    return c;
}

// ---- criterion 8: property suites ----
void all_partitions_rec(int m, int pos, int max_label, std::vector<int>& cur,
                        std::vector<Partition>& out) {
    if (pos == m) {
        out.push_back(Partition(cur));
        return;
    }
    for (int label = 1; label <= max_label + 1; ++label) {
        cur.push_back(label);
        all_partitions_rec(m, pos + 1, std::max(max_label, label), cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> all_set_partitions(int m) {
    std::vector<Partition> out;
    std::vector<int> cur;
    all_partitions_rec(m, 0, 0, cur, out);
    return out;
}

Check property_suites() {
    Check c;
    Rng rng(kSeed ^ 0x70726f70ULL);

    // multilinearity of forest polynomials, over all partitions of small graphs
    std::vector<MarkedGraph> corpus{paper_triangle(), MarkedGraph::complete(4, {1, 2, 3, 4}),
                                    MarkedGraph::complete(5, {1, 2, 3, 4})};
    for (int t = 0; t < 5; ++t) {
        int n = static_cast<int>(rng.int_in(3, 5));
        corpus.push_back(random_connected_graph(rng, n, n, static_cast<int>(rng.int_in(0, 4))));
    }
    for (const MarkedGraph& g : corpus) {
        for (const Partition& p : all_set_partitions(g.m())) {
            Poly fp = forest_poly(g, p);
            if (!fp.multilinear()) {
                c.require(false, "forest polynomial with a square: " + p.str());
                return c;
            }
        }
    }

    // dash expansion identity on random dash patterns
    for (const MarkedGraph& g : corpus) {
        for (int t = 0; t < 6; ++t) {
            std::vector<Partition> parts = all_set_partitions(g.m());
            Partition p = parts[static_cast<std::size_t>(rng.below(parts.size()))];
            int dashes = static_cast<int>(rng.int_in(1, g.m() - 1));
            for (int i = 0; i < dashes; ++i) {
                p.entries[static_cast<std::size_t>(rng.below(p.entries.size()))] = kDash;
            }
            if (!p.has_dash() || p.part_count() == 0) continue;
            Partition canon = canonicalize(p);
            Poly direct = forest_poly(g, canon);
            Poly expanded;
            for (const Partition& q : expand_dash(canon)) expanded += forest_poly(g, q);
            if (!(direct == expanded)) {
                c.require(false, "dash expansion mismatch for " + canon.str());
                return c;
            }
        }
    }

    // permissibility and unit coefficients of every generated identity
    for (int m = 3; m <= 6; ++m) {
        for (int col = 1; col <= m; ++col) {
            for (int jv = 1; jv <= m; ++jv) {
                if (jv == col) continue;
                IdentityRecord rec = gen_identity(m, col, jv);
                std::size_t expected_terms =
                    (1u << (m - 2)) + static_cast<std::size_t>(m - 2) * (1u << (m - 3));
                c.require(rec.sum.terms.size() == expected_terms, "identity term count");
                for (const auto& [pair, coeff] : rec.sum.terms) {
                    c.require(coeff == 1, "coefficient != 1");
                    c.require(!is_forbidden(pair), "forbidden pair generated");
                    auto [l, k] = paired_vertices(pair.A);
                    c.require(l == jv || k == jv, "expansion vertex not in the A pair");
                    c.require(pair.B.entries[static_cast<std::size_t>(jv - 1)] !=
                                  pair.B.entries[static_cast<std::size_t>(col - 1)],
                              "B does not separate j from c");
                }
                if (!c.ok) return c;
            }
        }
    }

    // the sign lemma, exhaustively for k <= 5
    for (int k = 2; k <= 5; ++k) {
        for (int i = 1; i <= k; ++i) {
            std::vector<int> codomain;
            for (int j = 1; j <= k; ++j) {
                for (int v = 1; v <= k; ++v) {
                    if (v != j) codomain.push_back(v);
                }
                std::vector<int> images(codomain.begin(), codomain.end());
                std::sort(images.begin(), images.end());
                do {
                    if (!extension_sign_check(images, k, i, j)) {
                        c.require(false, "sign lemma fails at k=" + std::to_string(k));
                        return c;
                    }
                } while (std::next_permutation(images.begin(), images.end()));
                codomain.clear();
            }
        }
    }

    // byte-identical CLI output under fixed seeds
    auto run_twice = [&](const std::vector<std::string>& args) {
        std::ostringstream out1, out2, err1, err2;
        run_cli(args, out1, err1);
        run_cli(args, out2, err2);
        return out1.str() == out2.str() && !out1.str().empty();
    };
    c.require(run_twice({"gen-identity", "--m", "4", "--c", "4", "--j", "1"}),
              "gen-identity output not reproducible");
    c.require(run_twice({"colexp-check", "--k", "2", "--trials", "3", "--seed", "11",
                         "--dmin", "4", "--dmax", "5"}),
              "colexp-check output not reproducible");
    c.require(run_twice({"dim", "--m", "3", "--seed", "7"}), "dim output not reproducible");
    c.why << "multilinearity, dash expansion, permissibility, sign lemma, CLI determinism";
    return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& only) {
    struct Entry {
        const char* name;
        std::function<Check()> fn;
    };
    const std::vector<Entry> entries = {
        {"triangle-ground-truth", triangle_ground_truth},
        {"column-expansion-dodgson-muir", column_expansion_dodgson_muir},
        {"matrix-tree-agreement", matrix_tree_agreement},
        {"m4-identity-suite", m4_identity_suite},
        {"block-sums", block_sums},
        {"vy-identity-family", vy_identity_family},
        {"dimension-theorem", dimension_theorem},
        {"property-suites", property_suites},
    };
    std::vector<CriterionResult> results;
    for (const Entry& e : entries) {
        if (!only.empty() && std::string(e.name).find(only) == std::string::npos) continue;
        CriterionResult r;
        r.name = e.name;
        auto start = std::chrono::steady_clock::now();
        try {
            Check c = e.fn();
            r.pass = c.ok;
            r.detail = c.why.str();
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace fpoly
