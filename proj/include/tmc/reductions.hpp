#pragma once
// Executable forms of the two hardness pipelines:
//   CNF-SAT -> inclusive set cover -> diameter-(6,4) tree pairs
//   restricted CNF-SAT -> inclusive poset pair cover -> pathwidth-2 tree pairs
// together with brute-force solvers for the intermediate problems and
// witness-embedding builders for yes-instances.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tmc/tree.hpp"

namespace tmc {

// ---- CNF ------------------------------------------------------------------

struct CnfFormula {
    int num_vars = 0;
    // DIMACS-style literals: +v for the variable v, -v for its negation,
    // 1-based; clauses must be nonempty
    std::vector<std::vector<int>> clauses;
};

void validate_cnf(const CnfFormula& f);
CnfFormula parse_dimacs(const std::string& text);
std::string serialize_dimacs(const CnfFormula& f);

/// Truth-table satisfiability check; limited to <= 25 variables.
bool sat_brute(const CnfFormula& f);

/// Checks the occurrence pattern required by the poset-pair-cover reduction:
/// every variable occurs exactly twice positively (in two distinct clauses)
/// and exactly once negatively, and clauses have at most 3 literals.
void validate_sat_restricted(const CnfFormula& f);

// ---- inclusive set cover ----------------------------------------------------

// Choose at most `budget` sets whose disjoint union surjects onto 1..universe
// with every element mapped to a value not exceeding it.
struct IscInstance {
    int universe = 0;                    // elements are 1..universe
    std::vector<std::vector<int>> sets;  // each ascending and duplicate-free
    int budget = 0;
};

void validate_isc(const IscInstance& inst);
IscInstance parse_isc(const std::string& text);
std::string serialize_isc(const IscInstance& inst);

struct IscSolution {
    std::vector<int> selection;  // ascending distinct set indices, size <= budget
    // allocation[u-1] = {set index, value} covering element u, value >= u;
    // the (set, value) pairs are pairwise distinct and the set is selected
    std::vector<std::array<int, 2>> allocation;
};

IscSolution parse_isc_solution(const std::string& text);
std::string serialize_isc_solution(const IscSolution& sol);
/// Throws ValidationError when the solution does not certify the instance.
void verify_isc_solution(const IscInstance& inst, const IscSolution& sol);

/// Clause j consumes universe slots {3j-2, 3j-1, 3j}; variable i consumes
/// {a-i+1, a+i} where a = |vars| + 3|clauses|. The positive-selection set of
/// variable i gains 3j per positive occurrence and 3j-1 per negative one;
/// the negative-selection set swaps the two. Budget = |vars|. Requires
/// clauses with at most 3 literals.
IscInstance sat3_to_isc(const CnfFormula& f);

/// Subset enumeration (<= 20 sets) with the dominance criterion per subset:
/// feasible iff for every u, #{values >= u in the disjoint union} >= n-u+1.
bool isc_brute(const IscInstance& inst);
std::optional<IscSolution> isc_brute_witness(const IscInstance& inst);

// ---- set cover -> tree pair ---------------------------------------------------

struct IscTrees {
    Tree host, pattern;
    // construction-role -> vertex id; host roles: "t", "t.<i>" (root of the
    // i-th set gadget), "t.<i>.s.<j>" (center of its j-th element star),
    // "t.<i>.y" (center of its medium star); pattern roles: "p", "r.<u>"
    // (u = 1..universe), "x.<j>", "y.<j>"
    std::map<std::string, int> host_labels, pattern_labels;
};

/// Builds the diameter-(6,4) pair. The certified mode is scale = 1.0, where
/// the star sizes are exactly n^3, n^2 and 3n^4; any other scale rescales
/// those three constants (minimum 1) for exploration only and voids the
/// equivalence guarantee. Requires universe >= 1 and |sets| >= budget.
IscTrees isc_to_trees(const IscInstance& inst, double scale = 1.0);

/// The embedding of the construction's host onto its pattern induced by a
/// valid solution: selected set gadgets join the pattern-center class and
/// their stars cover the element stars and one medium star each; unselected
/// gadgets collapse onto the big stars. Selections smaller than the budget
/// are padded with unused set indices. Throws on invalid solutions.
Embedding isc_witness_embedding(const IscInstance& inst, const IscSolution& sol,
                                double scale = 1.0);

// ---- inclusive poset pair cover ------------------------------------------------

// Find injections f: Y -> X and g: Z -> X x {1,2} such that no X member is
// used by both, f respects pairwise dominance up to swapping the pair, and
// g respects elementwise dominance. X, Y, Z are index lists into `elements`
// and may repeat entries; each list position is its own member.
struct IppcInstance {
    std::vector<std::string> elements;
    std::vector<std::vector<char>> leq;    // leq[i][j] != 0 iff element i <= element j
    std::vector<std::pair<int, int>> X, Y;
    std::vector<int> Z;
};

void validate_ippc(const IppcInstance& inst);
IppcInstance parse_ippc(const std::string& text);
std::string serialize_ippc(const IppcInstance& inst);

struct IppcSolution {
    std::vector<int> f;                    // per Y position: an X position
    std::vector<std::pair<int, int>> g;    // per Z position: {X position, side 1 or 2}
};

IppcSolution parse_ippc_solution(const std::string& text);
std::string serialize_ippc_solution(const IppcSolution& sol);
void verify_ippc_solution(const IppcInstance& inst, const IppcSolution& sol);

/// Variable i with positive occurrences in clauses p1 < p2 and negative
/// occurrence in clause q becomes the X pairs
///   x_i  = ((i, p1, -p1), (-i, p2, -p2))      x'_i = ((i, q, -q), (-i, -inf, -inf))
/// with y_i = ((i,-inf,-inf), (-i,-inf,-inf)) in Y and z_j = (-inf, j, -j)
/// per clause in Z; elements are the distinct occurring triples under
/// componentwise order. X lists x_i, x'_i in variable order, interleaved.
IppcInstance satx_to_ippc(const CnfFormula& f);

/// Backtracking over all injections; limited to |X| <= 6.
bool ippc_brute(const IppcInstance& inst);
std::optional<IppcSolution> ippc_brute_witness(const IppcInstance& inst);

struct IppcPadResult {
    IppcInstance instance;
    int added = 0;        // number of fresh minima appended to Z
    bool balanced = true; // false when 2|X| < 2|Y| + |Z| (instance returned as-is)
};

/// Appends fresh chain-minimum elements to the poset and to Z until
/// 2|X| = 2|Y| + |Z|; answer-preserving. Instances with 2|X| < 2|Y| + |Z|
/// cannot be balanced this way and come back unchanged with a flag.
IppcPadResult ippc_pad(const IppcInstance& inst);

// ---- poset pair cover -> tree pair ------------------------------------------------

struct OrderCaterpillar {
    Tree tree;               // spine vertex v_i has id i; leaves follow ascending
    int root = 0;            // id of v_0
    std::vector<int> spine;  // ids of v_0 .. v_{n+1}
    std::vector<int> leaf;   // per element i: id of l_i, or -1 when u_i is not below a
};

/// The caterpillar encoding the down-set of element a: a spine of n+2
/// vertices with a leaf at position i exactly when element i <= a.
OrderCaterpillar order_caterpillar(const IppcInstance& inst, int a);

/// The spine-preserving embedding of OCat(b) onto OCat(a): v_i -> v_i and
/// l_i -> l_i when element i <= a, l_i -> v_i otherwise. Exists iff every
/// leaf of OCat(a) also exists in OCat(b), which holds iff a <= b.
std::optional<Embedding> natural_embedding(const IppcInstance& inst, int a, int b);

struct IppcTrees {
    Tree host, pattern;
    // host roles: "r", "x.<i>.r", "x.<i>.L.v.<j>", "x.<i>.L.l.<j>", same with R;
    // pattern roles: "r", "y.<i>.r", "y.<i>.{L,R}.{v,l}.<j>", "z.<i>.v.<j>",
    // "z.<i>.l.<j>"
    std::map<std::string, int> host_labels, pattern_labels;
};

/// Builds the pathwidth-2 pair: the host joins a root to one two-armed
/// caterpillar gadget per X pair; the pattern joins a root to one gadget per
/// Y pair and one bare order caterpillar per Z entry. Requires a balanced
/// instance (2|X| = 2|Y| + |Z|) with X, Y, Z all nonempty.
IppcTrees ippc_to_trees(const IppcInstance& inst);

/// The embedding induced by a valid solution: f-matched gadgets map onto
/// their Y gadgets half-by-half via natural embeddings (swapping arms when
/// only the swapped dominance holds), g-assigned halves map onto Z
/// caterpillars, and everything else collapses onto the pattern root.
Embedding ippc_witness_embedding(const IppcInstance& inst, const IppcSolution& sol);

}  // namespace tmc
