#include "tmc/tree.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace tmc {

std::vector<std::vector<int>> adjacency(const Tree& t) {
    std::vector<std::vector<int>> adj(t.n);
    for (auto [u, v] : t.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<int> degrees(const Tree& t) {
    std::vector<int> deg(t.n, 0);
    for (auto [u, v] : t.edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

void validate_tree(const Tree& t) {
    if (t.n < 1) throw ValidationError("tree must have at least one vertex");
    if ((int)t.edges.size() != t.n - 1)
        throw ValidationError("tree on " + std::to_string(t.n) + " vertices must have " +
                              std::to_string(t.n - 1) + " edges, got " +
                              std::to_string(t.edges.size()));
    std::vector<std::pair<int, int>> norm;
    norm.reserve(t.edges.size());
    for (auto [u, v] : t.edges) {
        if (u < 0 || u >= t.n || v < 0 || v >= t.n)
            throw ValidationError("edge endpoint out of range");
        if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    if (std::adjacent_find(norm.begin(), norm.end()) != norm.end())
        throw ValidationError("duplicate edge");
    // n-1 distinct edges + connectivity == tree
    std::vector<int> dist = bfs_distances(t, 0);
    for (int v = 0; v < t.n; ++v)
        if (dist[v] < 0) throw ValidationError("edge set is not connected");
}

// ---- .tree format -----------------------------------------------------------

TreeFile parse_tree(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    TreeFile out;
    std::optional<int> root;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        auto bad = [&](const std::string& why) {
            return ParseError("line " + std::to_string(lineno) + ": " + why + ": '" + line + "'");
        };
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw bad("duplicate header");
            std::string kind;
            int n = 0;
            if (!(ls >> kind >> n) || kind != "tree") throw bad("malformed header");
            if (n < 1) throw ValidationError("vertex count must be positive");
            out.tree.n = n;
            out.tree.edges.clear();
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) throw bad("edge before header");
            int u = 0, v = 0;
            if (!(ls >> u >> v)) throw bad("malformed edge line");
            if (u < 0 || u >= out.tree.n || v < 0 || v >= out.tree.n)
                throw ValidationError("line " + std::to_string(lineno) +
                                      ": vertex id out of range");
            out.tree.edges.emplace_back(u, v);
        } else if (tag == "r") {
            if (!have_header) throw bad("root before header");
            if (root) throw bad("duplicate root line");
            int r = 0;
            if (!(ls >> r)) throw bad("malformed root line");
            if (r < 0 || r >= out.tree.n)
                throw ValidationError("line " + std::to_string(lineno) + ": root out of range");
            root = r;
        } else {
            throw bad("unknown line tag");
        }
    }
    if (!have_header) throw ParseError("missing 'p tree <n>' header");
    validate_tree(out.tree);
    out.root = root;
    return out;
}

std::string serialize_tree(const Tree& t, std::optional<int> root) {
    std::ostringstream out;
    out << "p tree " << t.n << "\n";
    for (auto [u, v] : t.edges) out << "e " << u << " " << v << "\n";
    if (root) {
        if (*root < 0 || *root >= t.n) throw ValidationError("root out of range");
        out << "r " << *root << "\n";
    }
    return out.str();
}

Embedding parse_witness(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("witness is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("map") || !j["map"].is_array())
        throw ParseError("witness must be an object with a 'map' array");
    Embedding f;
    for (const auto& x : j["map"]) {
        if (!x.is_number_integer()) throw ParseError("witness map entries must be integers");
        f.map.push_back(x.get<int>());
    }
    return f;
}

std::string serialize_witness(const Embedding& f) {
    nlohmann::json j;
    j["map"] = f.map;
    return j.dump() + "\n";
}

// ---- structural parameters ---------------------------------------------------

std::vector<int> bfs_distances(const Tree& t, int src) {
    auto adj = adjacency(t);
    std::vector<int> dist(t.n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

int distance(const Tree& t, int u, int v) {
    if (u < 0 || u >= t.n || v < 0 || v >= t.n) throw ValidationError("vertex out of range");
    return bfs_distances(t, u)[v];
}

static int farthest(const std::vector<int>& dist) {
    int best = 0;
    for (int v = 0; v < (int)dist.size(); ++v)
        if (dist[v] > dist[best]) best = v;
    return best;
}

int diameter(const Tree& t) {
    int u = farthest(bfs_distances(t, 0));
    auto d = bfs_distances(t, u);
    return d[farthest(d)];
}

StripResult strip_leaves(const Tree& t) {
    auto deg = degrees(t);
    StripResult res;
    res.old_to_new.assign(t.n, -1);
    int next = 0;
    for (int v = 0; v < t.n; ++v)
        if (deg[v] >= 2) res.old_to_new[v] = next++;
    if (next == 0) return res;  // everything was a leaf
    Tree s;
    s.n = next;
    for (auto [u, v] : t.edges)
        if (res.old_to_new[u] >= 0 && res.old_to_new[v] >= 0)
            s.edges.emplace_back(res.old_to_new[u], res.old_to_new[v]);
    res.tree = std::move(s);
    return res;
}

bool is_path(const Tree& t) {
    for (int d : degrees(t))
        if (d > 2) return false;
    return true;
}

int path_eccentricity(const Tree& t) {
    Tree cur = t;
    int rounds = 0;
    while (!is_path(cur)) {
        StripResult s = strip_leaves(cur);
        ++rounds;
        if (!s.tree) break;  // unreachable for non-paths, kept as a guard
        cur = std::move(*s.tree);
    }
    return rounds;
}

bool is_caterpillar(const Tree& t) { return path_eccentricity(t) <= 1; }

bool is_lobster(const Tree& t) { return path_eccentricity(t) <= 2; }

TreePath path_between(const Tree& t, int u, int v) {
    if (u < 0 || u >= t.n || v < 0 || v >= t.n) throw ValidationError("vertex out of range");
    auto adj = adjacency(t);
    std::vector<int> parent(t.n, -2);
    std::queue<int> q;
    parent[u] = -1;
    q.push(u);
    while (!q.empty() && parent[v] == -2) {
        int w = q.front();
        q.pop();
        for (int x : adj[w])
            if (parent[x] == -2) {
                parent[x] = w;
                q.push(x);
            }
    }
    TreePath path;
    for (int w = v; w != -1; w = parent[w]) path.push_back(w);
    std::reverse(path.begin(), path.end());
    return path;
}

static void check_is_path_in_tree(const Tree& t, const TreePath& path) {
    if (path.empty()) throw ValidationError("path must be nonempty");
    std::vector<char> seen(t.n, 0);
    for (int v : path) {
        if (v < 0 || v >= t.n) throw ValidationError("path vertex out of range");
        if (seen[v]) throw ValidationError("path repeats a vertex");
        seen[v] = 1;
    }
    auto adj = adjacency(t);
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        const auto& nb = adj[path[i]];
        if (std::find(nb.begin(), nb.end(), path[i + 1]) == nb.end())
            throw ValidationError("consecutive path vertices are not adjacent");
    }
}

bool is_backbone(const Tree& t, const TreePath& path, int k) {
    check_is_path_in_tree(t, path);
    // multi-source BFS from the path
    auto adj = adjacency(t);
    std::vector<int> dist(t.n, -1);
    std::queue<int> q;
    for (int v : path) {
        dist[v] = 0;
        q.push(v);
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    for (int v = 0; v < t.n; ++v)
        if (dist[v] > k) return false;
    return true;
}

TreePath backbone_of(const Tree& t) {
    int u = farthest(bfs_distances(t, 0));
    int v = farthest(bfs_distances(t, u));
    TreePath path = path_between(t, u, v);
    // A longest path is expected to be a valid backbone at the tree's own
    // eccentricity; fail loudly if that ever breaks instead of degrading.
    if (!is_backbone(t, path, path_eccentricity(t)))
        throw ValidationError("internal: longest path is not a backbone");
    return path;
}

// ---- decomposition ------------------------------------------------------------

std::vector<Component> components_minus_edges(const Tree& t,
                                              const std::vector<std::pair<int, int>>& removed) {
    std::vector<std::pair<int, int>> norm;
    norm.reserve(t.edges.size());
    for (auto [u, v] : t.edges) norm.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(norm.begin(), norm.end());
    std::vector<std::pair<int, int>> gone;
    for (auto [u, v] : removed) {
        auto e = std::make_pair(std::min(u, v), std::max(u, v));
        if (!std::binary_search(norm.begin(), norm.end(), e))
            throw ValidationError("removed edge is not an edge of the tree");
        gone.push_back(e);
    }
    std::sort(gone.begin(), gone.end());
    auto is_gone = [&](int u, int v) {
        auto e = std::make_pair(std::min(u, v), std::max(u, v));
        return std::binary_search(gone.begin(), gone.end(), e);
    };

    auto adj = adjacency(t);
    std::vector<int> comp(t.n, -1);
    std::vector<Component> out;
    for (int s = 0; s < t.n; ++s) {
        if (comp[s] >= 0) continue;
        int id = (int)out.size();
        std::vector<int> verts;
        std::queue<int> q;
        comp[s] = id;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            verts.push_back(u);
            for (int w : adj[u])
                if (comp[w] < 0 && !is_gone(u, w)) {
                    comp[w] = id;
                    q.push(w);
                }
        }
        std::sort(verts.begin(), verts.end());
        Component c;
        c.orig = verts;
        c.tree.n = (int)verts.size();
        std::vector<int> local(t.n, -1);
        for (int i = 0; i < (int)verts.size(); ++i) local[verts[i]] = i;
        for (auto [u, v] : t.edges)
            if (comp[u] == id && comp[v] == id && !is_gone(u, v))
                c.tree.edges.emplace_back(local[u], local[v]);
        out.push_back(std::move(c));
    }
    return out;
}

Contraction contract(const Tree& t, const std::vector<int>& group) {
    if (group.empty()) throw ValidationError("contraction group must be nonempty");
    std::vector<char> in(t.n, 0);
    for (int v : group) {
        if (v < 0 || v >= t.n) throw ValidationError("contraction vertex out of range");
        if (in[v]) throw ValidationError("contraction group repeats a vertex");
        in[v] = 1;
    }
    // the group must induce a connected subgraph
    auto adj = adjacency(t);
    std::vector<char> seen(t.n, 0);
    std::queue<int> q;
    q.push(group[0]);
    seen[group[0]] = 1;
    int reached = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        ++reached;
        for (int w : adj[u])
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
    }
    if (reached != (int)group.size())
        throw ValidationError("contraction group is not connected");

    Contraction res;
    res.old_to_new.assign(t.n, -1);
    int lead = *std::min_element(group.begin(), group.end());
    int next = 0;
    res.merged = -1;
    for (int v = 0; v < t.n; ++v) {
        if (in[v] && v != lead) continue;
        res.old_to_new[v] = next;
        if (v == lead) res.merged = next;
        ++next;
    }
    for (int v : group) res.old_to_new[v] = res.merged;
    res.tree.n = next;
    for (auto [u, v] : t.edges) {
        int a = res.old_to_new[u], b = res.old_to_new[v];
        if (a != b) res.tree.edges.emplace_back(a, b);
    }
    return res;
}

// ---- minor embeddings ----------------------------------------------------------

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool verify_embedding(const Tree& host, const Tree& pattern, const Embedding& f) {
    if ((int)f.map.size() != host.n)
        throw ValidationError("witness length " + std::to_string(f.map.size()) +
                              " does not match host size " + std::to_string(host.n));
    for (int x : f.map)
        if (x < 0 || x >= pattern.n) throw ValidationError("witness entry out of range");

    // surjectivity
    std::vector<char> hit(pattern.n, 0);
    for (int x : f.map) hit[x] = 1;
    for (int p = 0; p < pattern.n; ++p)
        if (!hit[p]) return false;

    // connected preimages: vertices of equal image must form one block each
    Dsu dsu(host.n);
    for (auto [u, v] : host.edges)
        if (f.map[u] == f.map[v]) dsu.unite(u, v);
    std::vector<int> block(pattern.n, -1);
    for (int v = 0; v < host.n; ++v) {
        int r = dsu.find(v);
        int img = f.map[v];
        if (block[img] < 0)
            block[img] = r;
        else if (block[img] != r)
            return false;
    }

    // every pattern edge realized by some host edge
    std::vector<long long> realized;
    realized.reserve(host.edges.size());
    for (auto [u, v] : host.edges) {
        int a = f.map[u], b = f.map[v];
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        realized.push_back((long long)a * pattern.n + b);
    }
    std::sort(realized.begin(), realized.end());
    for (auto [u, v] : pattern.edges) {
        int a = std::min(u, v), b = std::max(u, v);
        if (!std::binary_search(realized.begin(), realized.end(),
                                (long long)a * pattern.n + b))
            return false;
    }
    return true;
}

}  // namespace tmc
