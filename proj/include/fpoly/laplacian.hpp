#pragma once

#include <vector>

#include "fpoly/graph.hpp"
#include "fpoly/poly.hpp"

namespace fpoly {

// Symmetric symbolic matrix. Laplacian instances keep the generating graph's
// variable ids in edge_universe so minor determinants can be rendered in the
// forest-polynomial (complement) convention.
struct SymMatrix {
    int dim = 0;
    std::vector<Poly> entries;        // row-major, dim*dim
    std::vector<EdgeVar> edge_universe;

    const Poly& at(int i, int j) const { return entries[static_cast<std::size_t>(i - 1) * dim + (j - 1)]; }
    Poly& at(int i, int j) { return entries[static_cast<std::size_t>(i - 1) * dim + (j - 1)]; }
};

// Rows/columns to delete, 1-based indices. |rows| must equal |cols|.
struct MinorSpec {
    std::vector<int> rows;
    std::vector<int> cols;
};

// Graph Laplacian: off-diagonal (i,j) is minus the sum of the variables of
// the edges joining i and j (parallel edges summed), diagonal is the sum of
// the incident edge variables. Row sums are zero.
SymMatrix laplacian(const MarkedGraph& g);

// Exact symbolic determinant of the submatrix, by minor expansion memoized
// over column subsets. Cycle terms cancel, so the result is squarefree and
// each monomial is a forest's edge set.
Poly minor_det_raw(const SymMatrix& mat, const MinorSpec& spec);

// The determinant in the forest-polynomial convention: each tree-form
// monomial of minor_det_raw complemented against the graph's edge set. This
// is the quantity the partition notation denotes.
Poly minor_det(const SymMatrix& mat, const MinorSpec& spec);

// All-minors matrix-tree sum computed combinatorially: spanning forests with
// |rows| trees, one removed-row vertex and one removed-column vertex per
// tree. Each forest is weighted by the sign its term carries in the
// determinant: the parity of the rows->columns permutation array times
// (-1)^(path length from the tree's column vertex to its row vertex),
// summed over trees. Equals minor_det exactly.
Poly signed_forest_sum(const MarkedGraph& g, const MinorSpec& spec);

// --- exact integer determinants and the determinant identities ---

using IntMatrix = std::vector<std::vector<BigInt>>;

// Bareiss fraction-free elimination.
BigInt int_det(const IntMatrix& mat);

// Independent oracle: expansion by minors memoized over column subsets.
BigInt int_det_expansion(const IntMatrix& mat);

// Submatrix with the given 1-based rows and columns removed.
IntMatrix remove_rows_cols(const IntMatrix& mat, const std::vector<int>& rows,
                           const std::vector<int>& cols);

// det(M)*det(M_[k],[k]) - sum_i (-1)^(i+j) det(M_i,j)*det(M_[k]\i,[k]\j).
// Zero for every matrix when the column expansion identity holds.
BigInt column_expansion_residual(const IntMatrix& mat, int k, int j);

// det(M)*det(M_[k],[k])^(k-1) - sum over permutations of [k] of the signed
// product of the k complementary minors. Zero when Dodgson-Muir holds.
BigInt dodgson_muir_residual(const IntMatrix& mat, int k);

// Inversions of a sequence of distinct values (for position p, the number of
// larger values to its left).
int inversion_count(const std::vector<int>& one_line);

// sigma' is a bijection [k]\{i} -> [k]\{j}, given as images for the domain
// in ascending order; sigma extends it by sigma(i) = j. Checks
// (-1)^(inv(sigma) - (i+j)) == (-1)^(inv(sigma')).
bool extension_sign_check(const std::vector<int>& sigma_prime, int k, int i, int j);

}  // namespace fpoly
