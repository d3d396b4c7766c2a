#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fpoly/graph.hpp"
#include "fpoly/partition.hpp"
#include "fpoly/poly.hpp"

namespace fpoly {

// Rational-coefficient formal combination of AB pairs over a fixed m.
// For m = 3 the A and B partition classes coincide; pairs stay ordered.
struct FormalSum {
    int m = 0;
    std::map<ABPair, Rational> terms;

    void add(const ABPair& pair, const Rational& coeff);
    FormalSum& operator+=(const FormalSum& other);
    FormalSum& operator-=(const FormalSum& other);
    FormalSum operator+(const FormalSum& other) const;
    FormalSum operator-(const FormalSum& other) const;
    FormalSum scaled(const Rational& q) const;
    bool operator==(const FormalSum& other) const { return m == other.m && terms == other.terms; }

    std::string to_json() const;
    static FormalSum from_json(const std::string& text);
};

// A quadratic spanning forest identity
//   (1,1,...,1)(1,2,...,m) = sum
// labeled by the removed column c and the expansion vertex j (both marked
// vertices, j != c). All generated coefficients are 1.
struct IdentityRecord {
    int m = 0;
    int c = 0;
    int j = 0;
    FormalSum sum;

    std::string to_json() const;
    static IdentityRecord from_json(const std::string& text);
};

// vertex label <-> raw column-expansion index within the block of column c
int expansion_index_of_vertex(int c, int j);
int vertex_of_expansion_index(int c, int jp);

// All AB pairs where A pairs vertex j with some partner l, and B separates j
// from both c and l (remaining vertices free). Order: partner c first, then
// the other partners ascending; B in enumerate_B order within each partner.
std::vector<ABPair> permissible_pairs(int m, int c, int j);

// Coefficient 1 on each permissible pair.
IdentityRecord gen_identity(int m, int c, int j);

// The column expansion identity's right-hand side evaluated symbolically on
// the Laplacian of g with row r and column c removed, expanding along column
// jp (a raw index, 1..m-1). Independent of r.
Poly rhs_via_determinants(const MarkedGraph& g, int r, int c, int jp);

// True iff sum coeff * A(g) * B(g) equals (1,...,1)(1,2,...,m) on g, as
// exact polynomials.
bool verify_identity(const FormalSum& s, const MarkedGraph& g);

// True iff sum coeff * A(g) * B(g) is the zero polynomial on g.
bool evaluates_to_zero(const FormalSum& s, const MarkedGraph& g);

// Sum of the m-1 identities sharing removed column c.
FormalSum block_sum(int m, int c);

// Coefficient 1 on every non-forbidden AB pair.
FormalSum all_nonforbidden_sum(int m);

// Eight rational parameters (x_1..x_8 or y_1..y_8).
struct VYParams {
    std::array<Rational, 8> v{};
    Rational& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
    const Rational& operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
};

// The 24-term 8-parameter identity for m = 4.
FormalSum vy_identity(const VYParams& x);

// The same identity assembled from column-expansion identities:
// L_{4,3}(1) + L_{4,3}(2) - L_{4,3}(3) plus y-weighted differences.
FormalSum vy_from_column_identities(const VYParams& y);

// Change of variables between the two parameterizations.
VYParams vy_x_from_y(const VYParams& y);
VYParams vy_y_from_x(const VYParams& x);

// m = 4 label tables (the historical A_1..A_6 / B_1..B_7 indexing), used by
// the display table and the 8-parameter coefficients. 1-based accessors.
const Partition& m4_A(int idx);
const Partition& m4_B(int idx);

// The twelve m = 4 identities as displayed, keyed by (c, expansion index).
FormalSum m4_display(int c, int jp);

// x-parameter settings that specialize vy_identity to each of the twelve
// m = 4 identities, keyed the same way.
VYParams m4_specialization(int c, int jp);

}  // namespace fpoly
