#pragma once

namespace fpoly {

// Flat union-find with path halving, sized for desk-scale graphs.
struct UnionFind {
    int parent[64];

    void reset(int n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // false if x and y were already joined (the edge would close a cycle)
    bool join(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent[rx] = ry;
        return true;
    }
};

}  // namespace fpoly
