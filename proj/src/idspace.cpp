#include "fpoly/idspace.hpp"

#include <algorithm>

#include "fpoly/errors.hpp"
#include "fpoly/forests.hpp"
#include "fpoly/rng.hpp"

namespace fpoly {

int ABIndex::index_of(const ABPair& p) const {
    auto it = position.find(p);
    if (it == position.end()) throw BadIndex("AB pair not in index: " + p.A.str() + p.B.str());
    return it->second;
}

ABIndex ab_index(int m) {
    ABIndex idx;
    idx.m = m;
    for (const Partition& a : enumerate_A(m)) {
        for (const Partition& b : enumerate_B(m)) {
            idx.position.emplace(ABPair{a, b}, static_cast<int>(idx.pairs.size()));
            idx.pairs.push_back({a, b});
        }
    }
    return idx;
}

QVector as_vector(const FormalSum& s, const ABIndex& index) {
    if (s.m != index.m) throw BadIndex("formal sum arity does not match the index");
    QVector v(static_cast<std::size_t>(index.size()), Rational(0));
    for (const auto& [p, c] : s.terms) v[static_cast<std::size_t>(index.index_of(p))] = c;
    return v;
}

namespace {

std::vector<BigInt> clear_denominators(const QVector& row) {
    BigInt l = 1;
    for (const Rational& q : row) l = lcm(l, BigInt(q.get_den()));
    std::vector<BigInt> out;
    out.reserve(row.size());
    for (const Rational& q : row) {
        Rational scaled = q * l;
        out.push_back(BigInt(scaled.get_num()));
    }
    return out;
}

}  // namespace

bool IncrementalEchelon::reduce(std::vector<BigInt>& row) const {
    BigInt prev = 1;
    for (std::size_t t = 0; t < rows_.size(); ++t) {
        const int pc = pivots_[t];
        const BigInt& lead = rows_[t][static_cast<std::size_t>(pc)];
        const BigInt factor = row[static_cast<std::size_t>(pc)];
        const std::int64_t n = static_cast<std::int64_t>(cols_);
        const std::vector<BigInt>& pivot_row = rows_[t];
#pragma omp parallel for schedule(static) if (n >= 64)
        for (std::int64_t c = 0; c < n; ++c) {
            BigInt num = row[static_cast<std::size_t>(c)] * lead -
                         factor * pivot_row[static_cast<std::size_t>(c)];
            mpz_divexact(row[static_cast<std::size_t>(c)].get_mpz_t(), num.get_mpz_t(),
                         prev.get_mpz_t());
        }
        prev = lead;
    }
    for (const BigInt& x : row) {
        if (x != 0) return false;
    }
    return true;
}

bool IncrementalEchelon::add_row(std::vector<BigInt> row) {
    if (static_cast<int>(row.size()) != cols_) throw DimensionMismatch("row width mismatch");
    if (reduce(row)) return false;
    int pivot = 0;
    while (row[static_cast<std::size_t>(pivot)] == 0) ++pivot;
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
}

bool IncrementalEchelon::in_row_span(std::vector<BigInt> row) const {
    if (static_cast<int>(row.size()) != cols_) throw DimensionMismatch("row width mismatch");
    return reduce(row);
}

int exact_rank(const QMatrix& mat) {
    if (mat.row_count() == 0) return 0;
    IncrementalEchelon ech(mat.col_count());
    for (const QVector& row : mat.rows) ech.add_row(clear_denominators(row));
    return ech.rank();
}

std::vector<QVector> kernel_basis(const QMatrix& mat) {
    const int cols = mat.col_count();
    std::vector<QVector> rref;
    std::vector<int> pivot_cols;
    for (const QVector& input : mat.rows) {
        QVector row = input;
        for (std::size_t t = 0; t < rref.size(); ++t) {
            const Rational& f = row[static_cast<std::size_t>(pivot_cols[t])];
            if (f == 0) continue;
            Rational factor = f;
            for (int c = 0; c < cols; ++c) {
                row[static_cast<std::size_t>(c)] -= factor * rref[t][static_cast<std::size_t>(c)];
            }
        }
        int pivot = -1;
        for (int c = 0; c < cols; ++c) {
            if (row[static_cast<std::size_t>(c)] != 0) {
                pivot = c;
                break;
            }
        }
        if (pivot < 0) continue;
        Rational inv = 1 / row[static_cast<std::size_t>(pivot)];
        for (int c = 0; c < cols; ++c) row[static_cast<std::size_t>(c)] *= inv;
        // back-substitute into earlier rows to reach reduced form
        for (std::size_t t = 0; t < rref.size(); ++t) {
            Rational f = rref[t][static_cast<std::size_t>(pivot)];
            if (f == 0) continue;
            for (int c = 0; c < cols; ++c) {
                rref[t][static_cast<std::size_t>(c)] -= f * row[static_cast<std::size_t>(c)];
            }
        }
        rref.push_back(std::move(row));
        pivot_cols.push_back(pivot);
    }
    std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
    for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = 1;
    std::vector<QVector> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        QVector v(static_cast<std::size_t>(cols), Rational(0));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t t = 0; t < rref.size(); ++t) {
            v[static_cast<std::size_t>(pivot_cols[t])] = -rref[t][static_cast<std::size_t>(free)];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<FormalSum> candidate_basis(int m) {
    if (m < 3) throw BadIndex("need m >= 3");
    const FormalSum reference = gen_identity(m, m, m - 1).sum;
    std::vector<FormalSum> out;
    for (int block = 1; block <= m; ++block) {
        for (int jp = 1; jp <= m - 2; ++jp) {
            int vertex = vertex_of_expansion_index(block, jp);
            out.push_back(gen_identity(m, block, vertex).sum - reference);
        }
    }
    return out;
}

namespace {

struct GraphPolys {
    std::vector<Poly> a_polys;
    std::vector<Poly> b_polys;
};

GraphPolys partition_polys(int m, const MarkedGraph& g) {
    GraphPolys out;
    for (const Partition& a : enumerate_A(m)) out.a_polys.push_back(forest_poly(g, a));
    for (const Partition& b : enumerate_B(m)) out.b_polys.push_back(forest_poly(g, b));
    return out;
}

template <bool Parallel>
std::vector<std::vector<BigInt>> eval_rows_impl(int m, const std::vector<MarkedGraph>& corpus,
                                                int points_per_graph, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<BigInt>> rows;
    for (const MarkedGraph& g : corpus) {
        if (g.m() != m) throw BadIndex("corpus graph has wrong marked count");
        GraphPolys polys = partition_polys(m, g);
        // draw all weights first so the stream is identical for any schedule
        std::vector<std::vector<BigInt>> weights(static_cast<std::size_t>(points_per_graph));
        for (auto& w : weights) {
            w.reserve(static_cast<std::size_t>(g.edge_count()));
            for (int e = 0; e < g.edge_count(); ++e) w.push_back(rng.big_in(1, 1LL << 31));
        }
        const std::size_t base = rows.size();
        rows.resize(base + static_cast<std::size_t>(points_per_graph));
        const std::int64_t pts = points_per_graph;
#pragma omp parallel for schedule(dynamic) if (Parallel)
        for (std::int64_t p = 0; p < pts; ++p) {
            std::vector<BigInt> a_vals, b_vals;
            for (const Poly& ap : polys.a_polys) a_vals.push_back(ap.eval(weights[static_cast<std::size_t>(p)]));
            for (const Poly& bp : polys.b_polys) b_vals.push_back(bp.eval(weights[static_cast<std::size_t>(p)]));
            std::vector<BigInt> row;
            row.reserve(a_vals.size() * b_vals.size());
            for (const BigInt& av : a_vals) {
                for (const BigInt& bv : b_vals) row.push_back(av * bv);
            }
            rows[base + static_cast<std::size_t>(p)] = std::move(row);
        }
    }
    return rows;
}

}  // namespace

std::vector<std::vector<BigInt>> eval_rows(int m, const std::vector<MarkedGraph>& corpus,
                                           int points_per_graph, std::uint64_t seed) {
    return eval_rows_impl<true>(m, corpus, points_per_graph, seed);
}

std::vector<std::vector<BigInt>> eval_rows_serial(int m, const std::vector<MarkedGraph>& corpus,
                                                  int points_per_graph, std::uint64_t seed) {
    return eval_rows_impl<false>(m, corpus, points_per_graph, seed);
}

int sampled_kernel_dim(int m, const std::vector<MarkedGraph>& corpus, int points_per_graph,
                       std::uint64_t seed) {
    const ABIndex idx = ab_index(m);
    const long long total_rows = static_cast<long long>(corpus.size()) * points_per_graph;
    if (total_rows < idx.size()) {
        throw InsufficientSamples("need at least " + std::to_string(idx.size()) + " rows, have " +
                                  std::to_string(total_rows));
    }
    IncrementalEchelon ech(idx.size());
    for (std::vector<BigInt>& row : eval_rows(m, corpus, points_per_graph, seed)) {
        ech.add_row(std::move(row));
    }
    return idx.size() - ech.rank();
}

std::vector<MarkedGraph> verification_corpus(int m, std::uint64_t seed) {
    std::vector<int> marked;
    for (int v = 1; v <= m; ++v) marked.push_back(v);
    std::vector<MarkedGraph> corpus;
    corpus.push_back(MarkedGraph::complete(m, marked));
    corpus.push_back(MarkedGraph::complete(m + 1, marked));
    Rng rng(seed ^ 0x76657269667943ULL);
    corpus.push_back(random_connected_graph(rng, m + 1, m, 4));
    if (m <= 4) corpus.push_back(random_connected_graph(rng, m + 2, m, 3));
    return corpus;
}

DimensionReport dimension_report(int m, std::uint64_t seed) {
    DimensionReport report;
    report.m = m;
    report.expected = m * (m - 2);

    // lower bound: the candidate differences, checked to lie in X_m
    // symbolically, then ranked exactly
    std::vector<FormalSum> candidates = candidate_basis(m);
    std::vector<MarkedGraph> verify_on = verification_corpus(m, seed);
    for (const FormalSum& s : candidates) {
        for (const MarkedGraph& g : verify_on) {
            if (!evaluates_to_zero(s, g)) {
                report.lower = -1;
                return report;
            }
        }
    }
    const ABIndex idx = ab_index(m);
    QMatrix cand_matrix;
    for (const FormalSum& s : candidates) cand_matrix.rows.push_back(as_vector(s, idx));
    report.lower = exact_rank(cand_matrix);

    // upper bound: sampled kernel over a growing corpus, reported once two
    // consecutive extensions leave it unchanged
    std::vector<int> marked;
    for (int v = 1; v <= m; ++v) marked.push_back(v);
    std::vector<MarkedGraph> corpus{MarkedGraph::complete(m, marked),
                                    MarkedGraph::complete(m + 1, marked)};
    const int base_points = (idx.size() + 10 + static_cast<int>(corpus.size()) - 1) /
                            static_cast<int>(corpus.size());

    IncrementalEchelon ech(idx.size());
    std::uint64_t row_seed = seed;
    for (std::vector<BigInt>& row : eval_rows(m, corpus, base_points, row_seed)) {
        ech.add_row(std::move(row));
    }
    int dim = idx.size() - ech.rank();
    Rng graph_rng(seed ^ 0x657874656e64ULL);
    int stable = 0;
    const int extension_points = std::max(10, idx.size() / 10);
    for (int ext = 0; ext < 8 && stable < 2; ++ext) {
        int n = m + static_cast<int>(graph_rng.int_in(0, 1));
        int extra = static_cast<int>(graph_rng.int_in(2, 5));
        std::vector<MarkedGraph> extension{random_connected_graph(graph_rng, n, m, extra)};
        for (std::vector<BigInt>& row :
             eval_rows(m, extension, extension_points, graph_rng.next_u64())) {
            ech.add_row(std::move(row));
        }
        int next_dim = idx.size() - ech.rank();
        if (next_dim == dim) {
            ++stable;
        } else {
            stable = 0;
            dim = next_dim;
        }
    }
    report.upper = dim;
    report.pass = report.lower == report.expected && report.upper == report.expected;
    return report;
}

}  // namespace fpoly
