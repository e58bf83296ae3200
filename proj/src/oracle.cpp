#include "tmc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>

#include "tmc/enumerate.hpp"

namespace tmc {

namespace {

// children lists for `t` rooted at `root`, plus vertices in BFS order
struct Rooting {
    std::vector<std::vector<int>> children;
    std::vector<int> order;  // root first
    std::vector<int> parent;
};

Rooting root_at(const Tree& t, int root) {
    auto adj = adjacency(t);
    Rooting r;
    r.children.resize(t.n);
    r.parent.assign(t.n, -1);
    r.order.reserve(t.n);
    std::vector<char> seen(t.n, 0);
    seen[root] = 1;
    r.order.push_back(root);
    for (size_t i = 0; i < r.order.size(); ++i) {
        int v = r.order[i];
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                r.parent[w] = v;
                r.children[v].push_back(w);
                r.order.push_back(w);
            }
    }
    return r;
}

// Kuhn's augmenting-path matching: can every left vertex be matched?
bool saturates_left(const std::vector<std::vector<int>>& edges, int right_n) {
    int left_n = (int)edges.size();
    std::vector<int> owner(right_n, -1);
    std::vector<char> used;
    std::function<bool(int)> augment = [&](int l) {
        for (int r : edges[l]) {
            if (used[r]) continue;
            used[r] = 1;
            if (owner[r] < 0 || augment(owner[r])) {
                owner[r] = l;
                return true;
            }
        }
        return false;
    };
    for (int l = 0; l < left_n; ++l) {
        used.assign(right_n, 0);
        if (!augment(l)) return false;
    }
    return true;
}

}  // namespace

bool subtree_subgraph(const Tree& host, const Tree& pattern) {
    int nt = host.n, np = pattern.n;
    if (np > nt) return false;
    if (np == 1) return true;
    Rooting h = root_at(host, 0);
    auto adj_p = adjacency(pattern);

    // M[v][u]: pattern subtree at u maps into host subtree at v with u -> v
    std::vector<std::vector<char>> M(nt, std::vector<char>(np, 0));
    std::vector<std::vector<int>> children_p(np);
    for (int rp = 0; rp < np; ++rp) {
        Rooting p = root_at(pattern, rp);
        for (int i = nt - 1; i >= 0; --i) {  // reverse BFS order = children first
            int v = h.order[i];
            const auto& hc = h.children[v];
            for (int u = 0; u < np; ++u) {
                const auto& pc = p.children[u];
                if ((int)pc.size() > (int)hc.size()) {
                    M[v][u] = 0;
                    continue;
                }
                if (pc.empty()) {
                    M[v][u] = 1;
                    continue;
                }
                std::vector<std::vector<int>> edges(pc.size());
                bool any_stuck = false;
                for (size_t a = 0; a < pc.size(); ++a) {
                    for (size_t b = 0; b < hc.size(); ++b)
                        if (M[hc[b]][pc[a]]) edges[a].push_back((int)b);
                    if (edges[a].empty()) {
                        any_stuck = true;
                        break;
                    }
                }
                M[v][u] = !any_stuck && saturates_left(edges, (int)hc.size());
            }
        }
        for (int v = 0; v < nt; ++v)
            if (M[v][rp]) return true;
    }
    return false;
}

namespace {

// quotient of `t` by contracting the edges whose indices are in `picked`
Tree quotient_by_edges(const Tree& t, const std::vector<int>& picked) {
    std::vector<int> parent(t.n);
    for (int i = 0; i < t.n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int idx : picked) {
        auto [u, v] = t.edges[idx];
        parent[find(u)] = find(v);
    }
    std::vector<int> label(t.n, -1);
    int next = 0;
    for (int v = 0; v < t.n; ++v) {
        int r = find(v);
        if (label[r] < 0) label[r] = next++;
    }
    Tree q;
    q.n = next;
    for (int i = 0; i < (int)t.edges.size(); ++i) {
        auto [u, v] = t.edges[i];
        int a = label[find(u)], b = label[find(v)];
        if (a != b) q.edges.emplace_back(a, b);
    }
    return q;
}

// sorted-degree dominance: necessary for subgraph containment
bool degrees_dominated(const Tree& pattern, const Tree& host) {
    auto dp = degrees(pattern);
    auto dh = degrees(host);
    std::sort(dp.rbegin(), dp.rend());
    std::sort(dh.rbegin(), dh.rend());
    for (size_t i = 0; i < dp.size(); ++i)
        if (dp[i] > dh[i]) return false;
    return true;
}

}  // namespace

bool exact_minor(const Tree& host, const Tree& pattern, int max_host_vertices) {
    if (host.n > max_host_vertices)
        throw ValidationError("exact oracle limited to hosts with at most " +
                              std::to_string(max_host_vertices) + " vertices");
    if (pattern.n > host.n) return false;
    int diam_p = diameter(pattern);
    int max_merges = host.n - pattern.n;
    int m = (int)host.edges.size();

    // quotients repeat up to isomorphism; remember verdicts by canonical code
    std::unordered_map<std::string, bool> memo;
    auto check = [&](const Tree& q) {
        if (diameter(q) < diam_p) return false;
        if (!degrees_dominated(pattern, q)) return false;
        std::string code = canonical_code(q);
        auto it = memo.find(code);
        if (it != memo.end()) return it->second;
        bool ok = subtree_subgraph(q, pattern);
        memo.emplace(std::move(code), ok);
        return ok;
    };

    std::vector<int> picked;
    for (int d = 0; d <= max_merges; ++d) {
        if (d > m) break;
        // iterate d-element subsets of edge indices
        picked.resize(d);
        for (int i = 0; i < d; ++i) picked[i] = i;
        while (true) {
            if (check(quotient_by_edges(host, picked))) return true;
            if (d == 0) break;
            int i = d - 1;
            while (i >= 0 && picked[i] == m - d + i) --i;
            if (i < 0) break;
            ++picked[i];
            for (int j = i + 1; j < d; ++j) picked[j] = picked[j - 1] + 1;
        }
    }
    return false;
}

namespace {

struct RootedSearch {
    const Rooting& h;
    const Rooting& p;
    int nt, np;
    std::vector<int> assign;   // host vertex -> pattern class
    std::vector<char> opened;  // pattern class already has a topmost vertex
    bool found = false;

    RootedSearch(const Rooting& h_, const Rooting& p_, int nt_, int np_)
        : h(h_), p(p_), nt(nt_), np(np_), assign(nt_, -1), opened(np_, 0) {}

    void rec(int i, int opened_count) {
        if (found) return;
        if (nt - i < np - opened_count) return;  // not enough vertices left
        if (i == nt) {
            if (opened_count == np) found = true;
            return;
        }
        int v = h.order[i];
        int pc = assign[h.parent[v]];
        // absorb into the parent's class
        assign[v] = pc;
        rec(i + 1, opened_count);
        if (found) return;
        // or open a fresh child class of the parent's class
        for (int q : p.children[pc]) {
            if (opened[q]) continue;
            opened[q] = 1;
            assign[v] = q;
            rec(i + 1, opened_count + 1);
            opened[q] = 0;
            if (found) return;
        }
        assign[v] = -1;
    }
};

std::optional<Embedding> rooted_search(const RootedTree& host, const RootedTree& pattern,
                                       int max_host_vertices) {
    const Tree& T = host.tree;
    const Tree& P = pattern.tree;
    if (T.n > max_host_vertices)
        throw ValidationError("exact oracle limited to hosts with at most " +
                              std::to_string(max_host_vertices) + " vertices");
    if (host.root < 0 || host.root >= T.n || pattern.root < 0 || pattern.root >= P.n)
        throw ValidationError("root out of range");
    if (P.n > T.n) return std::nullopt;
    Rooting h = root_at(T, host.root);
    Rooting p = root_at(P, pattern.root);
    RootedSearch s(h, p, T.n, P.n);
    s.assign[host.root] = pattern.root;
    s.opened[pattern.root] = 1;
    s.rec(1, 1);
    if (!s.found) return std::nullopt;
    Embedding f;
    f.map = s.assign;
    return f;
}

}  // namespace

bool exact_minor_rooted(const RootedTree& host, const RootedTree& pattern,
                        int max_host_vertices) {
    return rooted_search(host, pattern, max_host_vertices).has_value();
}

std::optional<Embedding> exact_minor_rooted_witness(const RootedTree& host,
                                                    const RootedTree& pattern,
                                                    int max_host_vertices) {
    return rooted_search(host, pattern, max_host_vertices);
}

}  // namespace tmc
