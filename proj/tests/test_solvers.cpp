#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "tmc/enumerate.hpp"
#include "tmc/oracle.hpp"
#include "tmc/solvers.hpp"
#include "tmc/tree.hpp"

using namespace tmc;
using th::grow;
using th::mk;
using th::path_n;
using th::spider;
using th::star_n;

namespace {

// Exhaustive matcher: maximize the unused supply total over all injective
// demand->supply assignments with supply >= demand; -1 when impossible.
long long best_leftover_brute(const std::vector<int>& demands,
                              const std::vector<int>& supplies) {
    long long total = 0;
    for (int s : supplies) total += s;
    std::vector<char> used(supplies.size(), 0);
    // minimal supply total spent serving demands k.., or -1 when impossible
    std::function<long long(size_t)> go = [&](size_t k) -> long long {
        if (k == demands.size()) return 0;
        long long best = -1;
        for (size_t i = 0; i < supplies.size(); ++i) {
            if (used[i] || supplies[i] < demands[k]) continue;
            used[i] = 1;
            long long rest = go(k + 1);
            used[i] = 0;
            if (rest >= 0 && (best < 0 || rest + supplies[i] < best))
                best = rest + supplies[i];
        }
        return best;
    };
    long long spent = go(0);
    return spent < 0 ? -1 : total - spent;
}

}  // namespace

TEST_CASE("match_greedy frozen examples") {
    SUBCASE("two demands fit with one unit left over") {
        MatchResult r = match_greedy_detail({{2, 3}, {1, 2, 3}, 1, 0});
        CHECK(r.injectable);
        CHECK(r.leftover == 1);
        CHECK(r.yes);
    }
    SUBCASE("a demand above every supply is not injectable") {
        MatchResult r = match_greedy_detail({{3}, {2, 2}, 0, 0});
        CHECK(!r.injectable);
        CHECK(!r.yes);
    }
    SUBCASE("leftover too small for the loose leaves") {
        MatchResult r = match_greedy_detail({{1}, {1, 2}, 3, 0});
        CHECK(r.injectable);
        CHECK(r.leftover == 2);
        CHECK(!r.yes);
    }
    SUBCASE("host-side loose leaves rescue the same instance") {
        CHECK(match_greedy({{1}, {1, 2}, 3, 1}));
    }
    SUBCASE("no demands at all") {
        MatchResult r = match_greedy_detail({{}, {4}, 4, 0});
        CHECK(r.injectable);
        CHECK(r.leftover == 4);
        CHECK(r.yes);
    }
    SUBCASE("equal demands take distinct supplies") {
        MatchResult r = match_greedy_detail({{2, 2}, {1, 2, 2}, 0, 0});
        CHECK(r.injectable);
        CHECK(r.leftover == 1);
    }
}

TEST_CASE("match_greedy validates its input") {
    CHECK_THROWS_AS(match_greedy({{3, 2}, {1}, 0, 0}), ValidationError);
    CHECK_THROWS_AS(match_greedy({{1}, {2, 1}, 0, 0}), ValidationError);
    CHECK_THROWS_AS(match_greedy({{0}, {1}, 0, 0}), ValidationError);
    CHECK_THROWS_AS(match_greedy({{1}, {-1, 3}, 0, 0}), ValidationError);
    CHECK_THROWS_AS(match_greedy({{1}, {1}, -1, 0}), ValidationError);
}

TEST_CASE("match_greedy agrees with the exhaustive matcher on a dense grid") {
    // all ascending demand/supply vectors over values 1..3 resp. 0..3
    std::vector<std::vector<int>> demand_sets{{}};
    for (int a = 1; a <= 3; ++a)
        for (int b = a; b <= 3; ++b) {
            demand_sets.push_back({a});
            demand_sets.push_back({a, b});
        }
    std::vector<std::vector<int>> supply_sets{{}};
    for (int a = 0; a <= 3; ++a)
        for (int b = a; b <= 3; ++b)
            for (int c = b; c <= 3; ++c) {
                supply_sets.push_back({a});
                supply_sets.push_back({a, b});
                supply_sets.push_back({a, b, c});
            }
    for (const auto& d : demand_sets)
        for (const auto& s : supply_sets) {
            long long best = best_leftover_brute(d, s);
            MatchResult r = match_greedy_detail({d, s, 0, 0});
            CHECK(r.injectable == (best >= 0));
            if (r.injectable) {
                CHECK(r.leftover == best);
                for (int a = 0; a <= 3; ++a)
                    for (int ap = 0; ap <= 2; ++ap)
                        CHECK(match_greedy({d, s, a, ap}) == (a <= best + ap));
            }
        }
}

TEST_CASE("embed_partial window scan") {
    // star host rooted at its hub, hub-centered backbone, two loose leaves
    // wanted: shrinking the window to the hub frees both remaining leaves
    CHECK(embed_partial({star_n(3), 0}, {1, 0, 2}, {path_n(3), 1}));
    // a path host has no spare leaves anywhere for a three-leaf star
    CHECK(!embed_partial({path_n(3), 1}, {0, 1, 2}, {star_n(3), 0}));
    CHECK(embed_partial({path_n(3), 1}, {0, 1, 2}, {path_n(3), 1}));
}

TEST_CASE("embed_partial validates its input") {
    CHECK_THROWS_AS(embed_partial({path_n(3), 0}, {1, 2}, {path_n(2), 0}),
                    ValidationError);  // root not on the backbone
    Tree deep = spider(1, 3);
    CHECK_THROWS_AS(embed_partial({deep, 0}, {0, 1, 2, 3}, {deep, 0}),
                    ValidationError);  // pattern deeper than 2
    CHECK_THROWS_AS(embed_partial({spider(3, 3), 0},
                                  {3, 2, 1, 0, 4, 5, 6}, {path_n(3), 1}),
                    ValidationError);  // path is not a 2-backbone
}

TEST_CASE("exists_backbone_through") {
    Tree p5 = path_n(5);
    auto bb = exists_backbone_through(p5, 2, 0);
    REQUIRE(bb.has_value());
    CHECK(is_backbone(p5, *bb, 0));
    CHECK(std::find(bb->begin(), bb->end(), 2) != bb->end());

    // a three-legged spider with legs of three has no 2-backbone at all
    CHECK(!exists_backbone_through(spider(3, 3), 0, 2).has_value());
    CHECK(exists_backbone_through(spider(3, 3), 0, 3).has_value());
    CHECK(exists_backbone_through(spider(3, 2), 0, 2).has_value());
    CHECK_THROWS_AS(exists_backbone_through(p5, 9, 2), ValidationError);
}

namespace {

// host with hair at both spine ends and a pendant root off the middle:
// no 2-backbone passes through vertex 11, but one passes through vertex 3
Tree pendant_root_host() {
    Tree t = path_n(7);
    int a = grow(t, 0);
    grow(t, a);  // chain 0-7-8
    int b = grow(t, 6);
    grow(t, b);      // chain 6-9-10
    grow(t, 3);      // pendant 11
    return t;
}

}  // namespace

TEST_CASE("embed_full covers its three shapes") {
    SUBCASE("backbone through the root") {
        CHECK(embed_full({spider(3, 2), 0}, {star_n(3), 0}));
        CHECK(!embed_full({path_n(5), 2}, {star_n(3), 0}));
    }
    SUBCASE("backbone only through a neighbor of the root") {
        Tree h = pendant_root_host();
        REQUIRE(!exists_backbone_through(h, 11, 2).has_value());
        REQUIRE(exists_backbone_through(h, 3, 2).has_value());
        CHECK(embed_full({h, 11}, {path_n(3), 1}));
        CHECK(embed_full({h, 11}, {path_n(5), 2}));
        CHECK(!embed_full({h, 11}, {star_n(4), 0}));
    }
    SUBCASE("pendant root far from every backbone") {
        // pinned to a leg tip, the hub of a three-star is out of reach
        CHECK(!embed_full({spider(3, 3), 3}, {star_n(3), 0}));
        CHECK(embed_full({spider(3, 3), 3}, {path_n(3), 0}));
    }
    SUBCASE("deep non-pendant root throws, as documented") {
        CHECK_THROWS_AS(embed_full({spider(3, 3), 0}, {star_n(3), 0}),
                        ValidationError);
    }
    SUBCASE("deep pattern throws") {
        CHECK_THROWS_AS(embed_full({path_n(5), 0}, {path_n(5), 0}), ValidationError);
    }
}

TEST_CASE("embed_full matches the rooted oracle on small lobster hosts") {
    std::vector<RootedTree> patterns{{star_n(3), 0}, {path_n(3), 0}, {path_n(3), 1},
                                     {mk(4, {{0, 1}, {1, 2}, {1, 3}}), 1},
                                     {star_n(4), 0}, {path_n(5), 2}};
    for (int nt = 1; nt <= 6; ++nt)
        for (const Tree& host : enumerate_trees(nt))
            for (int r = 0; r < nt; ++r)
                for (const auto& pat : patterns)
                    CHECK(embed_full({host, r}, pat) ==
                          exact_minor_rooted({host, r}, pat));
}

TEST_CASE("cat_in_tree frozen examples") {
    CHECK(!cat_in_tree(path_n(5), star_n(3)));
    CHECK(cat_in_tree(spider(3, 2), star_n(3)));
    CHECK(!cat_in_tree(spider(3, 2), star_n(5)));
    CHECK(!cat_in_tree(star_n(6), path_n(4)));  // diameter shortfall
    // fork pattern: hub with two leaves and a tail
    Tree fork = mk(4, {{0, 1}, {1, 2}, {1, 3}});
    Tree legs211 = mk(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
    CHECK(cat_in_tree(legs211, fork));
    CHECK(cat_in_tree(path_n(2), path_n(2)));
    CHECK(cat_in_tree(path_n(1), path_n(1)));
    CHECK(cat_in_tree(spider(3, 3), path_n(1)));
    CHECK_THROWS_AS(cat_in_tree(spider(3, 3), spider(3, 2)), ValidationError);
}

TEST_CASE("cat_in_tree matches the exact oracle for small caterpillar patterns") {
    for (int nt = 1; nt <= 6; ++nt)
        for (const Tree& host : enumerate_trees(nt))
            for (int np = 1; np <= 5; ++np)
                for (const Tree& pat : enumerate_trees(np))
                    if (is_caterpillar(pat))
                        CHECK(cat_in_tree(host, pat) == exact_minor(host, pat));
}

TEST_CASE("lob_in_lob frozen examples") {
    CHECK(!lob_in_lob(path_n(6), star_n(5)));
    CHECK(lob_in_lob(spider(4, 2), spider(3, 2)));
    CHECK(lob_in_lob(spider(3, 2), spider(3, 2)));
    CHECK(!lob_in_lob(star_n(4), spider(3, 2)));
    CHECK(lob_in_lob(path_n(1), path_n(1)));
    CHECK_THROWS_AS(lob_in_lob(spider(3, 3), path_n(3)), ValidationError);
    CHECK_THROWS_AS(lob_in_lob(path_n(3), spider(3, 3)), ValidationError);
}

TEST_CASE("lob_in_lob matches the exact oracle on small lobster pairs") {
    for (int nt = 1; nt <= 6; ++nt)
        for (const Tree& host : enumerate_trees(nt))
            for (int np = 1; np <= 5; ++np)
                for (const Tree& pat : enumerate_trees(np))
                    CHECK(lob_in_lob(host, pat) == exact_minor(host, pat));
}

TEST_CASE("classify places pairs in their regimes") {
    SUBCASE("size rejection") {
        DichotomyReport r = classify(path_n(3), path_n(5));
        CHECK(r.regime == Regime::TrivialNo);
        CHECK(r.answer == Answer::No);
        CHECK(r.algorithm == "none");
    }
    SUBCASE("diameter rejection") {
        DichotomyReport r = classify(star_n(7), path_n(4));
        CHECK(r.regime == Regime::TrivialNo);
        CHECK(r.diam_T == 2);
        CHECK(r.diam_P == 3);
    }
    SUBCASE("caterpillar pattern") {
        DichotomyReport r = classify(spider(3, 3), star_n(3));
        CHECK(r.regime == Regime::PolyCaterpillarPattern);
        CHECK(r.algorithm == "cat-in-tree");
        CHECK(r.answer == Answer::Unknown);  // classify never runs the algorithm
        CHECK(r.cat_P);
        CHECK(!r.lob_T);
    }
    SUBCASE("lobster pair") {
        DichotomyReport r = classify(spider(4, 2), spider(3, 2));
        CHECK(r.regime == Regime::PolyLobsterPair);
        CHECK(r.algorithm == "lob-in-lob");
        CHECK(r.lob_T);
        CHECK(r.lob_P);
        CHECK(!r.cat_P);
    }
    SUBCASE("hard fallback") {
        DichotomyReport r = classify(spider(3, 3), spider(3, 2));
        CHECK(r.regime == Regime::HardFallback);
        CHECK(r.algorithm == "none");
        DichotomyReport r2 = classify(spider(4, 3), spider(3, 3));
        CHECK(r2.regime == Regime::HardFallback);
    }
}

TEST_CASE("solve dispatches and answers") {
    SUBCASE("trivial regimes") {
        CHECK(solve(path_n(3), path_n(5)).answer == Answer::No);
        CHECK(solve(star_n(7), path_n(4)).answer == Answer::No);
        SolveResult one = solve(spider(3, 3), path_n(1));
        CHECK(one.answer == Answer::Yes);
        CHECK(one.report.algorithm == "trivial");
    }
    SUBCASE("polynomial regimes") {
        CHECK(solve(path_n(5), star_n(3)).answer == Answer::No);
        CHECK(solve(spider(3, 2), star_n(3)).answer == Answer::Yes);
        SolveResult lob = solve(spider(4, 2), spider(3, 2));
        CHECK(lob.answer == Answer::Yes);
        CHECK(lob.report.algorithm == "lob-in-lob");
    }
    SUBCASE("hard fallback stays unknown without permission") {
        SolveResult r = solve(spider(3, 3), spider(3, 2));
        CHECK(r.answer == Answer::Unknown);
        CHECK(r.report.algorithm == "none");
    }
    SUBCASE("hard fallback resolves with the exact oracle") {
        SolveResult r = solve(spider(3, 3), spider(3, 2), true);
        CHECK(r.answer == Answer::Yes);
        CHECK(r.report.algorithm == "exact-minor");
        // a hub leaf pushes the pattern hub to degree 4, one more than any
        // connected piece of a three-legged host can border
        Tree deep_pattern = spider(3, 3);
        grow(deep_pattern, 0);
        SolveResult no = solve(spider(3, 4), deep_pattern, true);
        CHECK(no.answer == Answer::No);
        CHECK(no.report.algorithm == "exact-minor");
    }
    SUBCASE("the exact fallback respects its size cap") {
        SolveResult r = solve(spider(3, 3), spider(3, 2), true, 9);
        CHECK(r.answer == Answer::Unknown);
    }
}

TEST_CASE("to_string spellings") {
    CHECK(to_string(Regime::TrivialNo) == "trivial-no");
    CHECK(to_string(Regime::PolyCaterpillarPattern) == "poly-caterpillar-pattern");
    CHECK(to_string(Regime::PolyLobsterPair) == "poly-lobster-pair");
    CHECK(to_string(Regime::HardFallback) == "hard-fallback");
    CHECK(to_string(Answer::Yes) == "yes");
    CHECK(to_string(Answer::No) == "no");
    CHECK(to_string(Answer::Unknown) == "unknown");
}
