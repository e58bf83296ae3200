#include "tmc/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <random>
#include <set>
#include <unordered_set>

namespace tmc {

namespace {

// Vertices of the (at most two element) tree center.
std::vector<int> centers(const Tree& t) {
    if (t.n == 1) return {0};
    auto adj = adjacency(t);
    std::vector<int> deg = degrees(t);
    std::vector<int> order;
    for (int v = 0; v < t.n; ++v)
        if (deg[v] <= 1) order.push_back(v);
    std::vector<char> removed(t.n, 0);
    int alive = t.n;
    std::vector<int> frontier = order;
    while (alive > 2) {
        std::vector<int> next;
        for (int v : frontier) {
            removed[v] = 1;
            --alive;
            for (int w : adj[v])
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        frontier = std::move(next);
    }
    std::vector<int> c;
    for (int v = 0; v < t.n; ++v)
        if (!removed[v]) c.push_back(v);
    return c;
}

std::string rooted_code(const std::vector<std::vector<int>>& adj, int root) {
    // iterative post-order to dodge recursion limits on long paths
    std::string out;
    std::function<std::string(int, int)> go = [&](int v, int parent) {
        std::vector<std::string> kids;
        for (int w : adj[v])
            if (w != parent) kids.push_back(go(w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) s += k;
        s += ")";
        return s;
    };
    return go(root, -1);
}

}  // namespace

std::string canonical_code(const Tree& t) {
    auto adj = adjacency(t);
    std::string best;
    for (int c : centers(t)) {
        std::string code = rooted_code(adj, c);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

std::string canonical_code_rooted(const Tree& t, int root) {
    if (root < 0 || root >= t.n) throw ValidationError("root out of range");
    auto adj = adjacency(t);
    return rooted_code(adj, root);
}

Tree tree_from_pruefer(const std::vector<int>& seq) {
    int n = (int)seq.size() + 2;
    Tree t;
    t.n = n;
    std::vector<int> deg(n, 1);
    for (int v : seq) {
        if (v < 0 || v >= n) throw ValidationError("pruefer entry out of range");
        ++deg[v];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push(v);
    for (int v : seq) {
        int leaf = leaves.top();
        leaves.pop();
        t.edges.emplace_back(leaf, v);
        if (--deg[v] == 1) leaves.push(v);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    t.edges.emplace_back(a, b);
    return t;
}

std::vector<Tree> enumerate_trees(int n, int exhaustive_limit) {
    if (n < 1) throw ValidationError("tree size must be positive");
    if (n > exhaustive_limit)
        throw ValidationError("exhaustive enumeration limited to n <= " +
                              std::to_string(exhaustive_limit));
    if (n == 1) return {Tree{1, {}}};
    if (n == 2) return {Tree{2, {{0, 1}}}};
    std::vector<Tree> out;
    std::unordered_set<std::string> seen;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        Tree t = tree_from_pruefer(seq);
        std::string code = canonical_code(t);
        if (seen.insert(code).second) out.push_back(std::move(t));
        int i = (int)seq.size() - 1;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return out;
}

Tree random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw ValidationError("tree size must be positive");
    if (n == 1) return Tree{1, {}};
    if (n == 2) return Tree{2, {{0, 1}}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = pick(rng);
    return tree_from_pruefer(seq);
}

std::vector<Tree> sample_trees(int n, int count, std::uint64_t seed) {
    std::vector<Tree> out;
    std::unordered_set<std::string> seen;
    std::mt19937_64 rng(seed);
    int tries = 0, max_tries = count * 64 + 64;
    while ((int)out.size() < count && tries++ < max_tries) {
        Tree t = random_tree(n, rng());
        std::string code = canonical_code(t);
        if (seen.insert(code).second) out.push_back(std::move(t));
    }
    return out;
}

}  // namespace tmc
