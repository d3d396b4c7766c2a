#include "fpoly/laplacian.hpp"

#include <algorithm>
#include <unordered_map>

#include "fpoly/errors.hpp"
#include "fpoly/forests.hpp"
#include "fpoly/unionfind.hpp"

namespace fpoly {

SymMatrix laplacian(const MarkedGraph& g) {
    SymMatrix mat;
    mat.dim = g.n;
    mat.entries.assign(static_cast<std::size_t>(g.n) * g.n, Poly::zero());
    for (const Edge& e : g.edges) {
        Poly v = Poly::var(e.var);
        mat.at(e.u, e.v) -= v;
        mat.at(e.v, e.u) -= v;
        mat.at(e.u, e.u) += v;
        mat.at(e.v, e.v) += v;
        mat.edge_universe.push_back(e.var);
    }
    return mat;
}

namespace {

void check_spec(int dim, const MinorSpec& spec) {
    if (spec.rows.size() != spec.cols.size()) {
        throw DimensionMismatch("minor needs |rows| == |cols|, got " + std::to_string(spec.rows.size()) +
                                " and " + std::to_string(spec.cols.size()));
    }
    auto check = [dim](const std::vector<int>& v) {
        for (int x : v) {
            if (x < 1 || x > dim) throw BadIndex("minor index " + std::to_string(x) + " out of range");
        }
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                if (v[i] == v[j]) throw BadIndex("repeated minor index " + std::to_string(v[i]));
            }
        }
    };
    check(spec.rows);
    check(spec.cols);
}

std::vector<int> surviving(int dim, const std::vector<int>& removed) {
    std::vector<int> out;
    for (int i = 1; i <= dim; ++i) {
        if (std::find(removed.begin(), removed.end(), i) == removed.end()) out.push_back(i);
    }
    return out;
}

// determinant by expansion along rows, memoized on the set of available
// columns (the row index is the popcount)
template <typename T, typename Fetch>
T det_expansion(int d, Fetch entry, const T& zero, const T& one) {
    if (d == 0) return one;
    std::unordered_map<std::uint32_t, T> memo;
    const std::uint32_t full = (d >= 32) ? 0 : ((1u << d) - 1);
    auto rec = [&](auto&& self, std::uint32_t colmask) -> T {
        if (colmask == 0) return one;
        auto it = memo.find(colmask);
        if (it != memo.end()) return it->second;
        const int row = d - __builtin_popcount(colmask);
        T acc = zero;
        int sign = 1;
        for (int j = 0; j < d; ++j) {
            if (!(colmask & (1u << j))) continue;
            const T& a = entry(row, j);
            if (!(a == zero)) {
                T sub = self(self, colmask & ~(1u << j));
                if (sign > 0) {
                    acc += a * sub;
                } else {
                    acc -= a * sub;
                }
            }
            sign = -sign;
        }
        return memo.emplace(colmask, std::move(acc)).first->second;
    };
    return rec(rec, full);
}

}  // namespace

Poly minor_det_raw(const SymMatrix& mat, const MinorSpec& spec) {
    check_spec(mat.dim, spec);
    std::vector<int> rows = surviving(mat.dim, spec.rows);
    std::vector<int> cols = surviving(mat.dim, spec.cols);
    const int d = static_cast<int>(rows.size());
    return det_expansion<Poly>(
        d, [&](int i, int j) -> const Poly& { return mat.at(rows[i], cols[j]); }, Poly::zero(),
        Poly::constant(1));
}

Poly minor_det(const SymMatrix& mat, const MinorSpec& spec) {
    Poly raw = minor_det_raw(mat, spec);
    Poly out;
    for (const auto& [mono, coeff] : raw.terms()) {
        if (!mono.squarefree()) {
            throw std::logic_error("minor determinant monomial is not squarefree");
        }
        Monomial complement;
        for (EdgeVar v : mat.edge_universe) {
            if (mono.exponent(v) == 0) complement = complement.times(Monomial::var(v));
        }
        out.add_term(complement, coeff);
    }
    return out;
}

Poly signed_forest_sum(const MarkedGraph& g, const MinorSpec& spec) {
    check_spec(g.n, spec);
    const int k = static_cast<int>(spec.rows.size());
    const int n = g.n;
    std::vector<int> row_set(static_cast<std::size_t>(n) + 1, 0), col_set(static_cast<std::size_t>(n) + 1, 0);
    for (int r : spec.rows) row_set[r] = 1;
    for (int c : spec.cols) col_set[c] = 1;
    std::vector<int> rows_present = surviving(n, spec.rows);
    std::vector<int> cols_present = surviving(n, spec.cols);
    std::vector<int> col_pos(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t i = 0; i < cols_present.size(); ++i) col_pos[cols_present[i]] = static_cast<int>(i);

    const EdgeMask all = g.edge_count() == 0 ? 0 : (EdgeMask(1) << g.edge_count()) - 1;
    Poly out;
    UnionFind uf;
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::vector<int> order(static_cast<std::size_t>(n) + 1);

    for (EdgeMask mask : edge_subsets_of_size(g.edge_count(), n - k)) {
        uf.reset(n);
        bool acyclic = true;
        for (int ei = 0; ei < g.edge_count() && acyclic; ++ei) {
            if (mask & (EdgeMask(1) << ei)) {
                acyclic = uf.join(g.edges[ei].u - 1, g.edges[ei].v - 1);
            }
        }
        if (!acyclic) continue;

        // each tree needs exactly one removed-row vertex and one removed-column vertex
        std::vector<int> tree_row(static_cast<std::size_t>(n) + 1, 0), tree_col(static_cast<std::size_t>(n) + 1, 0);
        bool ok = true;
        for (int v = 1; v <= n && ok; ++v) {
            int root = uf.find(v - 1);
            if (row_set[v]) {
                if (tree_row[root + 1]) ok = false;
                tree_row[root + 1] = v;
            }
            if (col_set[v]) {
                if (tree_col[root + 1]) ok = false;
                tree_col[root + 1] = v;
            }
        }
        if (!ok) continue;
        for (int v = 1; v <= n && ok; ++v) {
            int root = uf.find(v - 1);
            if (!tree_row[root + 1] || !tree_col[root + 1]) ok = false;
        }
        if (!ok) continue;

        // orient every tree toward its row vertex by BFS
        std::fill(parent.begin(), parent.end(), 0);
        int head = 0, tail = 0;
        for (int v = 1; v <= n; ++v) {
            if (row_set[v]) {
                parent[v] = v;
                order[tail++] = v;
            }
        }
        while (head < tail) {
            int u = order[head++];
            for (int ei = 0; ei < g.edge_count(); ++ei) {
                if (!(mask & (EdgeMask(1) << ei))) continue;
                const Edge& e = g.edges[ei];
                int w = (e.u == u) ? e.v : (e.v == u ? e.u : 0);
                if (w && !parent[w]) {
                    parent[w] = u;
                    order[tail++] = w;
                }
            }
        }

        // phi: surviving rows -> surviving columns; off-diagonal picks lie on
        // the column-vertex -> row-vertex path of each tree
        std::vector<int> phi(static_cast<std::size_t>(n) + 1, 0);
        for (int v : rows_present) phi[v] = v;
        int path_edges = 0;
        for (int v = 1; v <= n; ++v) {
            int root = uf.find(v - 1);
            if (tree_row[root + 1] == v) {  // v is this tree's row vertex
                int c = tree_col[root + 1];
                int u = c;
                while (u != v) {
                    phi[u] = parent[u];
                    u = parent[u];
                    ++path_edges;
                }
            }
        }
        std::vector<int> perm;
        perm.reserve(rows_present.size());
        for (int v : rows_present) perm.push_back(col_pos[phi[v]]);
        int sign = (inversion_count(perm) + path_edges) % 2 == 0 ? 1 : -1;

        Monomial mono;
        EdgeMask complement = all & ~mask;
        for (int ei = 0; ei < g.edge_count(); ++ei) {
            if (complement & (EdgeMask(1) << ei)) mono = mono.times(Monomial::var(ei));
        }
        out.add_term(mono, sign);
    }
    return out;
}

BigInt int_det(const IntMatrix& mat) {
    const int n = static_cast<int>(mat.size());
    if (n == 0) return 1;
    IntMatrix a = mat;
    BigInt den = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (a[r][k] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            }
            a[i][k] = 0;
        }
        den = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

BigInt int_det_expansion(const IntMatrix& mat) {
    const int d = static_cast<int>(mat.size());
    return det_expansion<BigInt>(
        d, [&](int i, int j) -> const BigInt& { return mat[i][j]; }, BigInt(0), BigInt(1));
}

IntMatrix remove_rows_cols(const IntMatrix& mat, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
    const int n = static_cast<int>(mat.size());
    std::vector<int> rs = surviving(n, rows), cs = surviving(n, cols);
    IntMatrix out(rs.size(), std::vector<BigInt>(cs.size()));
    for (std::size_t i = 0; i < rs.size(); ++i) {
        for (std::size_t j = 0; j < cs.size(); ++j) {
            out[i][j] = mat[rs[i] - 1][cs[j] - 1];
        }
    }
    return out;
}

namespace {

std::vector<int> range_without(int k, int skip) {
    std::vector<int> out;
    for (int i = 1; i <= k; ++i) {
        if (i != skip) out.push_back(i);
    }
    return out;
}

}  // namespace

BigInt column_expansion_residual(const IntMatrix& mat, int k, int j) {
    const int d = static_cast<int>(mat.size());
    if (j < 1 || j > k) throw BadIndex("column index j=" + std::to_string(j) + " outside 1..k");
    if (k < 2 || k >= d) throw BadIndex("need d > k >= 2");
    std::vector<int> full_k;
    for (int i = 1; i <= k; ++i) full_k.push_back(i);
    BigInt lhs = int_det(mat) * int_det(remove_rows_cols(mat, full_k, full_k));
    BigInt rhs = 0;
    for (int i = 1; i <= k; ++i) {
        BigInt term = int_det(remove_rows_cols(mat, {i}, {j})) *
                      int_det(remove_rows_cols(mat, range_without(k, i), range_without(k, j)));
        if ((i + j) % 2 == 0) {
            rhs += term;
        } else {
            rhs -= term;
        }
    }
    return lhs - rhs;
}

BigInt dodgson_muir_residual(const IntMatrix& mat, int k) {
    const int d = static_cast<int>(mat.size());
    if (k < 2 || k >= d) throw BadIndex("need d > k >= 2");
    std::vector<int> full_k;
    for (int i = 1; i <= k; ++i) full_k.push_back(i);
    BigInt inner = int_det(remove_rows_cols(mat, full_k, full_k));
    BigInt lhs = int_det(mat);
    for (int i = 0; i < k - 1; ++i) lhs *= inner;

    // all k*k complementary minors up front
    std::vector<std::vector<BigInt>> dets(static_cast<std::size_t>(k) + 1,
                                          std::vector<BigInt>(static_cast<std::size_t>(k) + 1));
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            dets[i][j] = int_det(remove_rows_cols(mat, range_without(k, i), range_without(k, j)));
        }
    }
    std::vector<int> sigma(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) sigma[i] = i + 1;
    BigInt rhs = 0;
    do {
        BigInt prod = (inversion_count(sigma) % 2 == 0) ? 1 : -1;
        for (int i = 1; i <= k; ++i) prod *= dets[i][sigma[i - 1]];
        rhs += prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return lhs - rhs;
}

int inversion_count(const std::vector<int>& one_line) {
    int inv = 0;
    for (std::size_t p = 0; p < one_line.size(); ++p) {
        for (std::size_t q = p + 1; q < one_line.size(); ++q) {
            if (one_line[p] > one_line[q]) ++inv;
        }
    }
    return inv;
}

bool extension_sign_check(const std::vector<int>& sigma_prime, int k, int i, int j) {
    if (static_cast<int>(sigma_prime.size()) != k - 1) {
        throw BadIndex("sigma' must list k-1 images");
    }
    std::vector<int> sigma;
    sigma.reserve(static_cast<std::size_t>(k));
    std::size_t next = 0;
    for (int pos = 1; pos <= k; ++pos) {
        if (pos == i) {
            sigma.push_back(j);
        } else {
            sigma.push_back(sigma_prime[next++]);
        }
    }
    int lhs = (inversion_count(sigma) - (i + j)) % 2;
    int rhs = inversion_count(sigma_prime) % 2;
    return ((lhs % 2) + 2) % 2 == ((rhs % 2) + 2) % 2;
}

}  // namespace fpoly
