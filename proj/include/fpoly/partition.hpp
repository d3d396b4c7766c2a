#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fpoly {

// Entry value for a vertex left out of the partitioned subset.
inline constexpr int kDash = 0;

// Set partition of (a subset of) the m marked vertices, written
// (p_1,...,p_m) with p_i in {1..m} or '-' (kDash). Canonical form is the
// restricted-growth string over the non-dash entries: the first non-dash
// entry is 1 and every later non-dash entry is at most 1 + max of the
// earlier ones. Parts are unordered, so (2,2,1,-) and (1,1,2,-) name the
// same partition.
struct Partition {
    std::vector<int> entries;

    Partition() = default;
    explicit Partition(std::vector<int> e) : entries(std::move(e)) {}

    int m() const { return static_cast<int>(entries.size()); }
    bool has_dash() const;
    int part_count() const;          // number of distinct non-dash labels
    bool is_canonical() const;

    // "(1,1,2,-)" with '-' for dash
    std::string str() const;
    static Partition parse(const std::string& text);

    bool operator==(const Partition& other) const { return entries == other.entries; }
    bool operator<(const Partition& other) const { return entries < other.entries; }
};

// Relabels parts in order of first appearance; throws InvalidEntry for
// labels outside 1..m. Idempotent.
Partition canonicalize(const Partition& p);

// All partitions of {1..m} into m-1 parts (one pair, the rest singletons),
// canonical, in lexicographic order. Count m(m-1)/2.
std::vector<Partition> enumerate_A(int m);

// All partitions of {1..m} into exactly 2 parts, canonical, lexicographic.
// Count 2^(m-1) - 1.
std::vector<Partition> enumerate_B(int m);

// The two vertices sharing a part in an A-partition (1-based), smaller first.
std::pair<int, int> paired_vertices(const Partition& a);

// Ordered pair (A with m-1 parts, B with 2 parts); order is significant:
// for m = 3 the two partition classes coincide and (A,B) != (B,A).
struct ABPair {
    Partition A;
    Partition B;

    bool operator==(const ABPair& other) const { return A == other.A && B == other.B; }
    bool operator<(const ABPair& other) const {
        if (!(A == other.A)) return A < other.A;
        return B < other.B;
    }
};

// True iff A's paired vertices land in the same part of B.
bool is_forbidden(const ABPair& pair);

}  // namespace fpoly
