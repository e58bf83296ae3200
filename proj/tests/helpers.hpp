#pragma once

#include <utility>
#include <vector>

#include "tmc/tree.hpp"

namespace th {

inline tmc::Tree mk(int n, std::vector<std::pair<int, int>> edges) {
    tmc::Tree t;
    t.n = n;
    t.edges = std::move(edges);
    return t;
}

inline tmc::Tree path_n(int n) {
    tmc::Tree t;
    t.n = n;
    for (int i = 0; i + 1 < n; ++i) t.edges.emplace_back(i, i + 1);
    return t;
}

inline tmc::Tree star_n(int leaves) {
    tmc::Tree t;
    t.n = leaves + 1;
    for (int i = 1; i <= leaves; ++i) t.edges.emplace_back(0, i);
    return t;
}

/// `legs` paths of `len` edges each, hanging off vertex 0.
inline tmc::Tree spider(int legs, int len) {
    tmc::Tree t;
    t.n = 1 + legs * len;
    int id = 1;
    for (int l = 0; l < legs; ++l) {
        int prev = 0;
        for (int s = 0; s < len; ++s) {
            t.edges.emplace_back(prev, id);
            prev = id++;
        }
    }
    return t;
}

/// Appends a fresh leaf under `parent` and returns its id.
inline int grow(tmc::Tree& t, int parent) {
    t.edges.emplace_back(parent, t.n);
    return t.n++;
}

}  // namespace th
