#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tmc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Undirected tree on vertex ids 0..n-1, stored as an edge list.
/// A valid tree has exactly n-1 edges, no self-loops, no duplicates,
/// and is connected; validate_tree checks all of that.
struct Tree {
    int n = 1;
    std::vector<std::pair<int, int>> edges;
};

struct RootedTree {
    Tree tree;
    int root = 0;
};

/// Sequence of distinct vertices in which consecutive entries are edges.
using TreePath = std::vector<int>;

/// Total map V(host) -> V(pattern). Whether it actually witnesses the
/// minor relation is decided by verify_embedding, not by construction.
struct Embedding {
    std::vector<int> map;
};

std::vector<std::vector<int>> adjacency(const Tree& t);
std::vector<int> degrees(const Tree& t);
void validate_tree(const Tree& t);

// ---- .tree file format ----------------------------------------------------
//
//   c <comment>          any number of comment lines
//   p tree <n>           exactly one header
//   e <u> <v>            n-1 edge lines, 0 <= u,v < n
//   r <root>             optional, at most once

struct TreeFile {
    Tree tree;
    std::optional<int> root;
};

TreeFile parse_tree(const std::string& text);
std::string serialize_tree(const Tree& t, std::optional<int> root = std::nullopt);

/// Witness file: JSON object {"map": [int, ...]} of length |V(host)|.
Embedding parse_witness(const std::string& json_text);
std::string serialize_witness(const Embedding& f);

// ---- structural parameters -------------------------------------------------

/// BFS distances from src; -1 is never produced for valid trees.
std::vector<int> bfs_distances(const Tree& t, int src);

int distance(const Tree& t, int u, int v);

/// Maximum pairwise distance, found by the usual double traversal.
int diameter(const Tree& t);

/// Result of one simultaneous removal of all degree-<=1 vertices.
/// old_to_new maps surviving vertices to their new ids, removed ones to -1.
struct StripResult {
    std::optional<Tree> tree;
    std::vector<int> old_to_new;
};

StripResult strip_leaves(const Tree& t);

/// Minimum number of leaf-stripping rounds after which a path remains.
/// A single vertex and the empty graph both count as paths, which makes
/// the value total (stars terminate at a single vertex).
int path_eccentricity(const Tree& t);

bool is_path(const Tree& t);
bool is_caterpillar(const Tree& t);  // path_eccentricity <= 1
bool is_lobster(const Tree& t);      // path_eccentricity <= 2

/// The unique u-v path.
TreePath path_between(const Tree& t, int u, int v);

/// True iff every vertex of t is within distance k of some path vertex.
/// Throws if the given vertex sequence is not a path in t.
bool is_backbone(const Tree& t, const TreePath& path, int k);

/// A longest path of t (double traversal). Checked to be a valid backbone
/// for k = path_eccentricity(t); a counterexample throws instead of
/// silently returning a wrong answer.
TreePath backbone_of(const Tree& t);

// ---- decomposition ----------------------------------------------------------

/// Connected component of an edge-deleted tree, with its vertex ids
/// translated back to the parent tree (orig[new_id] = old id).
struct Component {
    Tree tree;
    std::vector<int> orig;
};

/// Components of t minus the given edges, ordered by smallest original
/// vertex id. Throws if some edge is not present in t.
std::vector<Component> components_minus_edges(const Tree& t,
                                              const std::vector<std::pair<int, int>>& removed);

struct Contraction {
    Tree tree;
    std::vector<int> old_to_new;
    int merged;  // new id of the vertex the group collapsed into
};

/// Contract a nonempty connected vertex set into a single vertex.
Contraction contract(const Tree& t, const std::vector<int>& group);

// ---- minor embeddings --------------------------------------------------------

/// Checks the three validity conditions of a minor embedding: the map is
/// surjective onto the pattern, every pattern vertex has a connected
/// preimage, and every pattern edge is realized by some host edge.
/// Length or range mismatches in the map throw.
bool verify_embedding(const Tree& host, const Tree& pattern, const Embedding& f);

}  // namespace tmc
