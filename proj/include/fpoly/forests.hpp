#pragma once

#include <cstdint>
#include <vector>

#include "fpoly/graph.hpp"
#include "fpoly/partition.hpp"
#include "fpoly/poly.hpp"

namespace fpoly {

// Edge subset as a bitmask over variable ids. Edge counts stay at desk
// scale (<= 31).
using EdgeMask = std::uint32_t;

// Spanning forest: acyclic edge subset; every vertex lies in exactly one
// tree, isolated vertices counting as single-vertex trees.
struct ForestSelection {
    EdgeMask edges = 0;
};

// All forests whose trees biject with the parts of P (dash-free, canonical)
// such that each marked vertex sits in its part's tree. Deterministic order:
// ascending bitmask value. The parallel version filters candidate subsets
// with OpenMP and merges chunks in order, so its output is identical to the
// serial reference.
std::vector<EdgeMask> spanning_forests(const MarkedGraph& g, const Partition& p);
std::vector<EdgeMask> spanning_forests_serial(const MarkedGraph& g, const Partition& p);

// Complement-convention forest polynomial: sum over compatible forests F of
// the product of edge variables NOT in F. Dash entries are expanded first.
Poly forest_poly(const MarkedGraph& g, const Partition& p);
Poly forest_poly_serial(const MarkedGraph& g, const Partition& p);

// Number of compatible forests (summed over the dash expansion when P has
// dash entries).
long long forest_count(const MarkedGraph& g, const Partition& p);

// All bitmasks with `size` bits set among `universe` bits, ascending.
std::vector<EdgeMask> edge_subsets_of_size(int universe, int size);

// Replaces dash entries by existing part labels: one dash per recursion
// level, summed over the distinct labels of the other entries. Throws NoDash
// if P has no dash entry.
std::vector<Partition> expand_dash(const Partition& p);

}  // namespace fpoly
