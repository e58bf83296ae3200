#pragma once

#include <optional>

#include "tmc/tree.hpp"

namespace tmc {

/// True iff pattern is isomorphic to a subgraph of host (both trees).
/// Rooted dynamic program with bipartite matching of child subtrees,
/// evaluated for every pattern root.
bool subtree_subgraph(const Tree& host, const Tree& pattern);

/// Definition-level minor test: enumerate contraction edge subsets of the
/// host (smallest first, capped at |V(host)| - |V(pattern)| merges) and run
/// the subgraph check on each quotient. Exponential on purpose; hosts over
/// max_host_vertices are rejected so nobody mistakes it for a solver.
bool exact_minor(const Tree& host, const Tree& pattern, int max_host_vertices = 16);

/// Minor test with a pinned root pair: is there an embedding f with
/// f(host.root) = pattern.root? Recursive branch-set assignment over a
/// host traversal.
bool exact_minor_rooted(const RootedTree& host, const RootedTree& pattern,
                        int max_host_vertices = 16);

/// Same search, but materializes the embedding it finds.
std::optional<Embedding> exact_minor_rooted_witness(const RootedTree& host,
                                                    const RootedTree& pattern,
                                                    int max_host_vertices = 16);

}  // namespace tmc
