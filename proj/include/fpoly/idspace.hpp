#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fpoly/graph.hpp"
#include "fpoly/identities.hpp"
#include "fpoly/partition.hpp"
#include "fpoly/poly.hpp"

namespace fpoly {

// Fixed coordinate order on V_m: all AB pairs, A-major over the enumeration
// order of the graphs module. Stable across runs.
struct ABIndex {
    int m = 0;
    std::vector<ABPair> pairs;
    std::map<ABPair, int> position;

    int size() const { return static_cast<int>(pairs.size()); }
    int index_of(const ABPair& p) const;
};

ABIndex ab_index(int m);

using QVector = std::vector<Rational>;

// Dense exact rational matrix.
struct QMatrix {
    std::vector<QVector> rows;

    int row_count() const { return static_cast<int>(rows.size()); }
    int col_count() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
};

QVector as_vector(const FormalSum& s, const ABIndex& index);

// Rank over the rationals by fraction-free elimination.
int exact_rank(const QMatrix& mat);

// Exact kernel basis via reduced row echelon form (one basis vector per free
// column).
std::vector<QVector> kernel_basis(const QMatrix& mat);

// Fraction-free row echelon that accepts one integer row at a time: each new
// row is reduced against the stored pivot rows Bareiss-style (multiply by
// the pivot, subtract, divide by the previous pivot; all divisions exact).
class IncrementalEchelon {
public:
    explicit IncrementalEchelon(int cols) : cols_(cols) {}

    // true if the row was independent of the rows seen so far
    bool add_row(std::vector<BigInt> row);

    // true iff the row reduces to zero against the stored pivots, i.e. lies
    // in the span of the rows added so far
    bool in_row_span(std::vector<BigInt> row) const;

    int rank() const { return static_cast<int>(pivots_.size()); }
    int cols() const { return cols_; }

private:
    bool reduce(std::vector<BigInt>& row) const;  // true if reduced to zero

    int cols_;
    std::vector<std::vector<BigInt>> rows_;
    std::vector<int> pivots_;  // pivot column of each stored row
};

// The m(m-2) differences gen_identity(m,i,.) - gen_identity(m,m,m-1), blocks
// i = 1..m with expansion indices 1..m-2 (vertex labels translated per
// block). Every element evaluates to the zero polynomial on every graph.
std::vector<FormalSum> candidate_basis(int m);

// Dimension of the null space of the evaluation matrix whose rows evaluate
// every AB product at seeded random integer edge weights, over the given
// corpus. An upper bound for dim X_m. Throws InsufficientSamples when the
// row count is below dim V_m.
int sampled_kernel_dim(int m, const std::vector<MarkedGraph>& corpus, int points_per_graph,
                       std::uint64_t seed);

// Evaluation rows for the sampled kernel (exposed for tests and the
// benchmark; the parallel build equals the serial one row for row).
std::vector<std::vector<BigInt>> eval_rows(int m, const std::vector<MarkedGraph>& corpus,
                                           int points_per_graph, std::uint64_t seed);
std::vector<std::vector<BigInt>> eval_rows_serial(int m, const std::vector<MarkedGraph>& corpus,
                                                  int points_per_graph, std::uint64_t seed);

struct DimensionReport {
    int m = 0;
    int expected = 0;
    int lower = 0;   // exact rank of the candidate basis (members verified symbolically)
    int upper = 0;   // stabilized sampled kernel dimension
    bool pass = false;
};

// lower = rank of candidate_basis (each member first checked to vanish
// symbolically on the verification corpus), upper = sampled kernel dimension
// stabilized under corpus extensions; pass iff lower == upper == m(m-2).
DimensionReport dimension_report(int m, std::uint64_t seed);

// The verification corpus used for symbolic membership checks.
std::vector<MarkedGraph> verification_corpus(int m, std::uint64_t seed);

}  // namespace fpoly
