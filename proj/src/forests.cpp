#include "fpoly/forests.hpp"

#include <algorithm>

#include "fpoly/errors.hpp"
#include "fpoly/unionfind.hpp"

namespace fpoly {

std::vector<EdgeMask> edge_subsets_of_size(int universe, int size) {
    std::vector<EdgeMask> out;
    if (size < 0 || size > universe) return out;
    if (size == 0) {
        out.push_back(0);
        return out;
    }
    EdgeMask mask = (EdgeMask(1) << size) - 1;
    const EdgeMask limit = EdgeMask(1) << universe;
    while (mask < limit) {
        out.push_back(mask);
        // Gosper's hack
        EdgeMask c = mask & -mask;
        EdgeMask r = mask + c;
        if (r >= limit || r == 0) break;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return out;
}

namespace {

bool compatible(const MarkedGraph& g, const Partition& p, EdgeMask mask, UnionFind& uf) {
    uf.reset(g.n);
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        if (mask & (EdgeMask(1) << ei)) {
            if (!uf.join(g.edges[ei].u - 1, g.edges[ei].v - 1)) return false;
        }
    }
    // acyclic with n - #parts edges, so the component count is #parts;
    // the marked vertices must realize exactly the partition
    const int m = p.m();
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            bool same_part = p.entries[i] == p.entries[j];
            bool same_tree = uf.find(g.marked[i] - 1) == uf.find(g.marked[j] - 1);
            if (same_part != same_tree) return false;
        }
    }
    return true;
}

void check_enumeration_pre(const MarkedGraph& g, const Partition& p) {
    if (p.m() != g.m()) {
        throw InvalidEntry("partition arity " + std::to_string(p.m()) + " != marked count " +
                           std::to_string(g.m()));
    }
    if (p.has_dash()) throw InvalidEntry("spanning_forests needs a dash-free partition");
    if (!p.is_canonical()) throw InvalidEntry("partition " + p.str() + " is not canonical");
    if (g.edge_count() > 31) throw InvalidEntry("too many edges for bitmask enumeration");
}

}  // namespace

std::vector<EdgeMask> spanning_forests_serial(const MarkedGraph& g, const Partition& p) {
    check_enumeration_pre(g, p);
    const int forest_size = g.n - p.part_count();
    std::vector<EdgeMask> out;
    UnionFind uf;
    for (EdgeMask mask : edge_subsets_of_size(g.edge_count(), forest_size)) {
        if (compatible(g, p, mask, uf)) out.push_back(mask);
    }
    return out;
}

std::vector<EdgeMask> spanning_forests(const MarkedGraph& g, const Partition& p) {
    check_enumeration_pre(g, p);
    const int forest_size = g.n - p.part_count();
    std::vector<EdgeMask> candidates = edge_subsets_of_size(g.edge_count(), forest_size);
    std::vector<char> keep(candidates.size(), 0);
    const std::int64_t count = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel
    {
        UnionFind uf;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < count; ++i) {
            keep[i] = compatible(g, p, candidates[i], uf) ? 1 : 0;
        }
    }
    std::vector<EdgeMask> out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (keep[i]) out.push_back(candidates[i]);
    }
    return out;
}

std::vector<Partition> expand_dash(const Partition& p) {
    if (!p.has_dash()) throw NoDash("partition " + p.str() + " has no dash entry");
    std::size_t pos = 0;
    while (p.entries[pos] != kDash) ++pos;
    std::vector<int> labels;
    for (int e : p.entries) {
        if (e != kDash && std::find(labels.begin(), labels.end(), e) == labels.end()) {
            labels.push_back(e);
        }
    }
    if (labels.empty()) {
        throw InvalidEntry("cannot expand " + p.str() + ": no non-dash entries");
    }
    std::sort(labels.begin(), labels.end());
    std::vector<Partition> out;
    for (int label : labels) {
        Partition q = p;
        q.entries[pos] = label;
        if (q.has_dash()) {
            for (Partition& r : expand_dash(q)) out.push_back(std::move(r));
        } else {
            out.push_back(canonicalize(q));
        }
    }
    return out;
}

namespace {

template <typename Enumerate>
Poly forest_poly_impl(const MarkedGraph& g, const Partition& p, Enumerate enumerate) {
    Partition canon = canonicalize(p);
    std::vector<Partition> parts;
    if (canon.has_dash()) {
        parts = expand_dash(canon);
    } else {
        parts.push_back(canon);
    }
    const EdgeMask all = g.edge_count() == 0 ? 0 : (EdgeMask(1) << g.edge_count()) - 1;
    Poly out;
    for (const Partition& q : parts) {
        for (EdgeMask f : enumerate(g, q)) {
            Monomial mono;
            EdgeMask complement = all & ~f;
            for (int ei = 0; ei < g.edge_count(); ++ei) {
                if (complement & (EdgeMask(1) << ei)) mono = mono.times(Monomial::var(ei));
            }
            out.add_term(mono, 1);
        }
    }
    return out;
}

}  // namespace

Poly forest_poly(const MarkedGraph& g, const Partition& p) {
    return forest_poly_impl(g, p, [](const MarkedGraph& gg, const Partition& q) {
        return spanning_forests(gg, q);
    });
}

Poly forest_poly_serial(const MarkedGraph& g, const Partition& p) {
    return forest_poly_impl(g, p, [](const MarkedGraph& gg, const Partition& q) {
        return spanning_forests_serial(gg, q);
    });
}

long long forest_count(const MarkedGraph& g, const Partition& p) {
    Partition canon = canonicalize(p);
    std::vector<Partition> parts;
    if (canon.has_dash()) {
        parts = expand_dash(canon);
    } else {
        parts.push_back(canon);
    }
    long long total = 0;
    for (const Partition& q : parts) total += static_cast<long long>(spanning_forests(g, q).size());
    return total;
}

}  // namespace fpoly
