#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tmc/tree.hpp"

namespace tmc {

/// Isomorphism-invariant code: the classic rooted subtree encoding applied
/// at the tree center (minimum over both centers when there are two).
/// Two trees get equal codes iff they are isomorphic.
std::string canonical_code(const Tree& t);

/// Rooted variant: equal codes iff there is an isomorphism mapping root to
/// root. Useful as a cache key for rooted computations.
std::string canonical_code_rooted(const Tree& t, int root);

/// Decode a Pruefer sequence over 0..n-1 (n = seq.size() + 2).
Tree tree_from_pruefer(const std::vector<int>& seq);

/// One representative per isomorphism class, by exhausting all Pruefer
/// sequences. Deliberately refuses n beyond the limit; use sample_trees
/// for larger sizes.
std::vector<Tree> enumerate_trees(int n, int exhaustive_limit = 7);

/// Up to `count` pairwise non-isomorphic random trees on n vertices.
std::vector<Tree> sample_trees(int n, int count, std::uint64_t seed);

/// Uniform random labeled tree on n vertices (random Pruefer sequence).
Tree random_tree(int n, std::uint64_t seed);

}  // namespace tmc
