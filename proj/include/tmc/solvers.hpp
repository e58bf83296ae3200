#pragma once

#include <optional>
#include <string>

#include "tmc/tree.hpp"

namespace tmc {

// ---- greedy leaf-budget matcher ---------------------------------------------
//
// demands:  ascending positive leaf requirements of the pattern's branch stars
// supplies: ascending nonnegative leaf counts offered by the host's branches
// pattern_leaf_count / host_leaf_count: loose leaves on either side (a, a')

struct MatchInput {
    std::vector<int> demands;
    std::vector<int> supplies;
    int pattern_leaf_count = 0;
    int host_leaf_count = 0;
};

struct MatchResult {
    bool injectable = false;  // every demand found a supply
    long long leftover = 0;   // unclaimed supply after the greedy walk
    bool yes = false;         // injectable && demands' leaves also fit
};

/// Walk demands in ascending order, each taking the first unused supply that
/// fits; accept iff pattern_leaf_count <= leftover + host_leaf_count.
/// The leftover of the greedy walk is maximal over all order-respecting
/// assignments, which is what makes the early-commit strategy safe.
MatchResult match_greedy_detail(const MatchInput& in);
bool match_greedy(const MatchInput& in);

// ---- rooted embeddings for depth-2 patterns -----------------------------------

/// Host root lies on the given backbone; pattern has depth <= 2 from its
/// root. Slides a window of backbone vertices over the root and reduces
/// each window to a greedy matching instance.
bool embed_partial(const RootedTree& host, const TreePath& backbone,
                   const RootedTree& pattern);

/// First path through v (by endpoint order) that is a k-backbone, if any.
std::optional<TreePath> exists_backbone_through(const Tree& t, int v, int k);

/// Full rooted test for depth-2 patterns in lobster-shaped hosts: find a
/// backbone through the root (or a neighbor), otherwise peel the root
/// inward by contraction. Throws if the host's shape breaks the case
/// analysis (deep root with degree > 1), which cannot happen for lobsters.
bool embed_full(const RootedTree& host, const RootedTree& pattern);

// ---- whole-tree containment -----------------------------------------------------

/// Caterpillar pattern inside an arbitrary tree: for every ordered host
/// vertex pair, run the greedy star-by-star scan along the connecting path.
bool cat_in_tree(const Tree& host, const Tree& pattern);

/// Lobster pattern inside a lobster host: same sweep, but each backbone
/// star is tested with embed_full against a contracted window of host
/// branches instead of a leaf count.
bool lob_in_lob(const Tree& host, const Tree& pattern);

// ---- dichotomy dispatcher ---------------------------------------------------------

enum class Regime {
    TrivialNo,
    PolyCaterpillarPattern,
    PolyLobsterPair,
    HardFallback,
};

enum class Answer { Yes, No, Unknown };

std::string to_string(Regime r);
std::string to_string(Answer a);

struct DichotomyReport {
    int diam_T = 0;
    int diam_P = 0;
    int pe_T = 0;
    int pe_P = 0;
    bool cat_P = false;
    bool lob_T = false;
    bool lob_P = false;
    Regime regime = Regime::HardFallback;
    std::string algorithm = "none";
    Answer answer = Answer::Unknown;
};

/// Compute parameters and place the pair in its regime. Does not run any
/// containment algorithm; answer is only filled for the size/diameter
/// rejection, everything else stays Unknown.
DichotomyReport classify(const Tree& host, const Tree& pattern);

struct SolveResult {
    Answer answer = Answer::Unknown;
    DichotomyReport report;
};

/// Dispatch on the regime: trivial rejection, one of the two polynomial
/// algorithms, or (opt-in, size-capped) the exact oracle.
SolveResult solve(const Tree& host, const Tree& pattern, bool allow_exact = false,
                  int max_exact_n = 16);

}  // namespace tmc
