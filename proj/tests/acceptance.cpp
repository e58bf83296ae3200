// Acceptance sweep: each criterion prints a single PASS/FAIL line; the
// process exits nonzero when any criterion fails.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "tmc/enumerate.hpp"
#include "tmc/oracle.hpp"
#include "tmc/reductions.hpp"
#include "tmc/solvers.hpp"
#include "tmc/tree.hpp"

using namespace tmc;

namespace {

int failures = 0;

void report(int index, const std::string& what, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << index << ": " << what << " ("
              << detail << ")" << std::endl;
    if (!ok) ++failures;
}

std::string pair_id(const Tree& h, const Tree& p) {
    return "host " + canonical_code(h) + " pattern " + canonical_code(p);
}

// ---- 1: caterpillar-pattern solver vs the exact oracle ------------------------

void criterion_1() {
    bool ok = true;
    std::string detail;
    long long pairs = 0;
    auto check = [&](const Tree& h, const Tree& p) {
        ++pairs;
        if (cat_in_tree(h, p) != exact_minor(h, p, 16) && ok) {
            ok = false;
            detail = "mismatch on " + pair_id(h, p);
        }
    };
    for (int nt = 1; nt <= 7; ++nt) {
        std::vector<Tree> hosts = enumerate_trees(nt);
        for (int np = 1; np <= nt; ++np)
            for (const Tree& p : enumerate_trees(np)) {
                if (!is_caterpillar(p)) continue;
                for (const Tree& h : hosts) check(h, p);
            }
    }
    std::vector<Tree> big = sample_trees(8, 20, 101);
    for (Tree& t : sample_trees(9, 25, 102)) big.push_back(std::move(t));
    std::mt19937_64 rng(103);
    for (const Tree& h : big)
        for (int np = 2; np <= h.n; ++np)
            for (const Tree& p : sample_trees(np, 2, rng()))
                if (is_caterpillar(p)) check(h, p);
    if (ok) detail = std::to_string(pairs) + " pairs";
    report(1, "caterpillar-pattern solver agrees with the exact oracle", ok, detail);
}

// ---- 2: lobster-pair solver vs the exact oracle ----------------------------------

void criterion_2() {
    bool ok = true;
    std::string detail;
    long long pairs = 0;
    auto check = [&](const Tree& h, const Tree& p) {
        if (!is_lobster(h) || !is_lobster(p)) return;
        ++pairs;
        if (lob_in_lob(h, p) != exact_minor(h, p, 16) && ok) {
            ok = false;
            detail = "mismatch on " + pair_id(h, p);
        }
    };
    for (int nt = 1; nt <= 7; ++nt) {
        std::vector<Tree> hosts = enumerate_trees(nt);
        for (int np = 1; np <= nt; ++np)
            for (const Tree& p : enumerate_trees(np))
                for (const Tree& h : hosts) check(h, p);
    }
    std::vector<Tree> big = sample_trees(8, 20, 201);
    for (Tree& t : sample_trees(9, 25, 202)) big.push_back(std::move(t));
    std::mt19937_64 rng(203);
    for (const Tree& h : big)
        for (int np = 2; np <= h.n; ++np)
            for (const Tree& p : sample_trees(np, 2, rng())) check(h, p);
    if (ok) detail = std::to_string(pairs) + " pairs";
    report(2, "lobster-pair solver agrees with the exact oracle", ok, detail);
}

// ---- 3: rooted depth-2 embedding vs the rooted exact oracle ---------------------

void criterion_3() {
    bool ok = true;
    std::string detail;
    long long combos = 0;
    for (int nt = 1; nt <= 6 && ok; ++nt)
        for (const Tree& h : enumerate_trees(nt)) {
            if (!ok) break;
            for (int rh = 0; rh < h.n && ok; ++rh)
                for (int np = 1; np <= nt && ok; ++np)
                    for (const Tree& p : enumerate_trees(np)) {
                        if (!ok) break;
                        for (int rp = 0; rp < p.n && ok; ++rp) {
                            std::vector<int> dist = bfs_distances(p, rp);
                            if (*std::max_element(dist.begin(), dist.end()) > 2)
                                continue;
                            ++combos;
                            bool got;
                            try {
                                got = embed_full({h, rh}, {p, rp});
                            } catch (const std::exception& e) {
                                ok = false;
                                detail = std::string("threw on a lobster host: ") +
                                         e.what();
                                break;
                            }
                            if (got != exact_minor_rooted({h, rh}, {p, rp}, 16)) {
                                ok = false;
                                detail = "mismatch on " + pair_id(h, p) + " roots " +
                                         std::to_string(rh) + "/" + std::to_string(rp);
                            }
                        }
                    }
        }
    if (ok) detail = std::to_string(combos) + " rooted combinations";
    report(3, "rooted depth-2 embedding agrees with the rooted exact oracle", ok,
           detail);
}

// ---- 4: greedy leaf matcher vs exhaustive assignment ----------------------------

long long brute_best_leftover(const std::vector<int>& demands,
                              const std::vector<int>& supplies) {
    long long total = std::accumulate(supplies.begin(), supplies.end(), 0ll);
    long long best = -1;
    std::vector<char> used(supplies.size(), 0);
    std::function<void(size_t, long long)> go = [&](size_t i, long long spent) {
        if (i == demands.size()) {
            best = std::max(best, total - spent);
            return;
        }
        for (size_t j = 0; j < supplies.size(); ++j)
            if (!used[j] && supplies[j] >= demands[i]) {
                used[j] = 1;
                go(i + 1, spent + supplies[j]);
                used[j] = 0;
            }
    };
    go(0, 0);
    return best;
}

void ascending_tuples(int lo, int hi, int max_len, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void()> go = [&] {
        out.push_back(cur);
        if ((int)cur.size() == max_len) return;
        for (int v = cur.empty() ? lo : cur.back(); v <= hi; ++v) {
            cur.push_back(v);
            go();
            cur.pop_back();
        }
    };
    go();
}

void criterion_4() {
    bool ok = true;
    std::string detail;
    long long cases = 0;
    std::vector<std::vector<int>> dems, sups;
    ascending_tuples(1, 4, 3, dems);
    ascending_tuples(0, 4, 4, sups);
    for (const auto& d : dems)
        for (const auto& s : sups) {
            long long best = brute_best_leftover(d, s);
            for (int a = 0; a <= 4 && ok; ++a)
                for (int ap = 0; ap <= 3 && ok; ++ap) {
                    ++cases;
                    MatchResult r = match_greedy_detail({d, s, a, ap});
                    bool fine = r.injectable == (best >= 0) &&
                                (!r.injectable || r.leftover == best) &&
                                r.yes == (best >= 0 && a <= best + ap);
                    if (!fine) {
                        ok = false;
                        detail = "mismatch at demands/supplies case " +
                                 std::to_string(cases);
                    }
                }
            if (!ok) break;
        }
    if (ok) detail = std::to_string(cases) + " matcher cases";
    report(4, "greedy leaf matcher agrees with exhaustive assignment", ok, detail);
}

// ---- 5: satisfiability -> set cover -> bounded-diameter trees -------------------

bool isc_structure_ok(const IscInstance& inst, std::string& why) {
    IscTrees tr = isc_to_trees(inst);
    long long n = inst.universe;
    long long big = n * n * n, mid = n * n, huge = 3 * n * n * n * n;
    long long host_expect = 1 + huge, pat_expect = 1 + huge;
    for (const auto& s : inst.sets) {
        host_expect += 2 + big + mid;
        for (int v : s) host_expect += 1 + v;
    }
    for (int u = 1; u <= inst.universe; ++u) pat_expect += 1 + u;
    int m = (int)inst.sets.size();
    pat_expect += (long long)(m - inst.budget) * (1 + big) +
                  (long long)inst.budget * (1 + mid);
    validate_tree(tr.host);
    validate_tree(tr.pattern);
    if (tr.host.n != host_expect || tr.pattern.n != pat_expect) {
        why = "size formula broken";
        return false;
    }
    if (diameter(tr.host) != 6 || diameter(tr.pattern) != 4) {
        why = "diameters are not 6 and 4";
        return false;
    }
    if (path_eccentricity(tr.host) != (m >= 3 ? 3 : 2) ||
        path_eccentricity(tr.pattern) != 2) {
        why = "path eccentricities off";
        return false;
    }
    return true;
}

void criterion_5() {
    bool ok = true;
    std::string detail;
    long long formulas = 0, witnesses = 0;
    std::vector<std::vector<int>> signs;
    for (int m = 0; m < 8; ++m)
        signs.push_back({m & 1 ? 1 : -1, m & 2 ? 2 : -2, m & 4 ? 3 : -3});

    auto check_formula = [&](const CnfFormula& f) {
        ++formulas;
        IscInstance inst = sat3_to_isc(f);
        bool sat = sat_brute(f), cover = isc_brute(inst);
        if (sat != cover && ok) {
            ok = false;
            detail = "formula/cover disagreement at formula " + std::to_string(formulas);
        }
        return std::make_pair(std::move(inst), cover);
    };

    // every formula over exactly the variables {1,2,3} with 1..3 clauses
    for (int k = 1; k <= 3 && ok; ++k) {
        long long count = 1;
        for (int i = 0; i < k; ++i) count *= 8;
        for (long long code = 0; code < count && ok; ++code) {
            CnfFormula f{3, {}};
            long long c = code;
            for (int i = 0; i < k; ++i) {
                f.clauses.push_back(signs[c % 8]);
                c /= 8;
            }
            check_formula(f);
        }
    }

    // random formulas whose clauses use three distinct variables
    std::mt19937_64 rng(501);
    for (int t = 0; t < 100 && ok; ++t) {
        int nv = 3 + (int)(rng() % 3), nc = 1 + (int)(rng() % 4);
        CnfFormula f{nv, {}};
        std::vector<int> vars(nv);
        std::iota(vars.begin(), vars.end(), 1);
        for (int c = 0; c < nc; ++c) {
            std::shuffle(vars.begin(), vars.end(), rng);
            std::vector<int> clause(vars.begin(), vars.begin() + 3);
            for (int& lit : clause)
                if (rng() & 1) lit = -lit;
            f.clauses.push_back(clause);
        }
        auto [inst, cover] = check_formula(f);
        if (!ok) break;
        // witness chain on the coverable ones
        if (cover && witnesses < 25) {
            double scale = inst.universe <= 12 ? 1.0 : 0.1;
            IscSolution sol = *isc_brute_witness(inst);
            Embedding e = isc_witness_embedding(inst, sol, scale);
            IscTrees tr = isc_to_trees(inst, scale);
            if (!verify_embedding(tr.host, tr.pattern, e)) {
                ok = false;
                detail = "witness chain failed at formula " + std::to_string(formulas);
            }
            ++witnesses;
        }
    }

    // structural certificates at the certified scale
    if (ok) {
        std::string why;
        for (CnfFormula f : {CnfFormula{3, {{1, 2, 3}}},
                             CnfFormula{3, {{1, 2, 3}, {-1, -2, -3}}},
                             CnfFormula{3, {{1, -2, 3}, {-1, 2, -3}}}})
            if (!isc_structure_ok(sat3_to_isc(f), why)) {
                ok = false;
                detail = "tree structure: " + why;
                break;
            }
    }
    if (ok)
        detail = std::to_string(formulas) + " formulas, " + std::to_string(witnesses) +
                 " witness chains";
    report(5, "set-cover chain preserves answers down to bounded-diameter trees", ok,
           detail);
}

// ---- 6: restricted satisfiability -> pair cover -> bounded-pathwidth trees ------

void criterion_6() {
    bool ok = true;
    std::string detail;
    long long formulas = 0, posets = 0, instances = 0, witnesses = 0;

    // (a) every restricted formula on one or two variables, up to 3 clauses
    for (int nv = 1; nv <= 2 && ok; ++nv) {
        std::vector<int> lits;
        for (int v = 1; v <= nv; ++v) {
            lits.push_back(v);
            lits.push_back(-v);
        }
        std::vector<std::vector<int>> clauses;
        for (int mask = 1; mask < (1 << (int)lits.size()); ++mask) {
            if (std::popcount((unsigned)mask) > 3) continue;
            std::vector<int> c;
            for (size_t i = 0; i < lits.size(); ++i)
                if (mask >> i & 1) c.push_back(lits[i]);
            clauses.push_back(c);
        }
        for (int nc = 1; nc <= 3 && ok; ++nc) {
            std::vector<size_t> od(nc, 0);
            while (ok) {
                CnfFormula f{nv, {}};
                for (size_t i : od) f.clauses.push_back(clauses[i]);
                bool restricted = true;
                try {
                    validate_sat_restricted(f);
                } catch (const ValidationError&) {
                    restricted = false;
                }
                if (restricted) {
                    ++formulas;
                    if (sat_brute(f) != ippc_brute(satx_to_ippc(f))) {
                        ok = false;
                        detail = "formula/pair-cover disagreement (exhaustive sweep)";
                    }
                }
                int pos = nc - 1;
                while (pos >= 0 && ++od[pos] == clauses.size()) od[pos--] = 0;
                if (pos < 0) break;
            }
        }
    }

    // (a') random three-variable restricted formulas (X at the brute limit)
    std::mt19937_64 rng(611);
    int sampled = 0, guard = 0;
    while (ok && sampled < 50 && ++guard < 20000) {
        constexpr int nc = 5;
        std::vector<std::vector<int>> cls(nc);
        for (int v = 1; v <= 3; ++v) {
            int p1 = (int)(rng() % nc), p2 = (int)(rng() % nc);
            while (p2 == p1) p2 = (int)(rng() % nc);
            int q = (int)(rng() % nc);
            cls[p1].push_back(v);
            cls[p2].push_back(v);
            cls[q].push_back(-v);
        }
        bool shaped = true;
        for (const auto& c : cls)
            if (c.empty() || c.size() > 3) shaped = false;
        if (!shaped) continue;
        CnfFormula f{3, cls};
        ++sampled;
        ++formulas;
        if (sat_brute(f) != ippc_brute(satx_to_ippc(f))) {
            ok = false;
            detail = "formula/pair-cover disagreement (random sweep)";
        }
    }
    if (ok && sampled < 50) {
        ok = false;
        detail = "random formula generator starved";
    }

    // (b) order caterpillars embed exactly along the order, all posets on <= 3
    for (int n = 1; n <= 3 && ok; ++n) {
        std::vector<std::pair<int, int>> cells;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) cells.push_back({i, j});
        for (int mask = 0; mask < (1 << (int)cells.size()) && ok; ++mask) {
            IppcInstance inst;
            for (int i = 0; i < n; ++i) inst.elements.push_back("e" + std::to_string(i));
            inst.leq.assign(n, std::vector<char>(n, 0));
            for (int i = 0; i < n; ++i) inst.leq[i][i] = 1;
            for (size_t c = 0; c < cells.size(); ++c)
                if (mask >> c & 1) inst.leq[cells[c].first][cells[c].second] = 1;
            bool poset = true;
            for (int i = 0; i < n && poset; ++i)
                for (int j = 0; j < n && poset; ++j) {
                    if (i != j && inst.leq[i][j] && inst.leq[j][i]) poset = false;
                    for (int k = 0; k < n && poset; ++k)
                        if (inst.leq[i][j] && inst.leq[j][k] && !inst.leq[i][k])
                            poset = false;
                }
            if (!poset) continue;
            ++posets;
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n && ok; ++b) {
                    auto e = natural_embedding(inst, a, b);
                    if (e.has_value() != (inst.leq[a][b] != 0)) {
                        ok = false;
                        detail = "natural embedding exists off the order";
                    } else if (e) {
                        Tree host = order_caterpillar(inst, b).tree;
                        Tree pat = order_caterpillar(inst, a).tree;
                        if (!verify_embedding(host, pat, *e)) {
                            ok = false;
                            detail = "natural embedding does not verify";
                        }
                    }
                }
        }
    }
    if (ok && posets != 1 + 3 + 19) {
        ok = false;
        detail = "poset enumeration miscounted: " + std::to_string(posets);
    }

    // (c) + (d): every balanced two-element instance maps to a tree pair the
    // exact oracle decides identically; feasible ones carry a witness
    std::set<std::string> seen;
    std::vector<IppcInstance> bases;
    {
        IppcInstance single;
        single.elements = {"a"};
        single.leq = {{1}};
        bases.push_back(single);
        for (auto rel : {std::vector<std::pair<int, int>>{},
                         std::vector<std::pair<int, int>>{{0, 1}},
                         std::vector<std::pair<int, int>>{{1, 0}}}) {
            IppcInstance two;
            two.elements = {"a", "b"};
            two.leq = {{1, 0}, {0, 1}};
            for (auto [x, y] : rel) two.leq[x][y] = 1;
            bases.push_back(two);
        }
    }
    for (const IppcInstance& base : bases) {
        if (!ok) break;
        int n = (int)base.elements.size();
        std::vector<std::pair<int, int>> arm_pairs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) arm_pairs.push_back({i, j});
        for (const auto& x0 : arm_pairs)
            for (const auto& x1 : arm_pairs)
                for (const auto& y : arm_pairs)
                    for (int z0 = 0; z0 < n; ++z0)
                        for (int z1 = 0; z1 < n && ok; ++z1) {
                            IppcInstance inst = base;
                            inst.X = {x0, x1};
                            inst.Y = {y};
                            inst.Z = {z0, z1};
                            try {
                                validate_ippc(inst);
                            } catch (const ValidationError&) {
                                continue;  // some element is unused
                            }
                            bool feasible = ippc_brute(inst);
                            IppcTrees tr = ippc_to_trees(inst);
                            std::string key = canonical_code(tr.host) + "|" +
                                              canonical_code(tr.pattern) +
                                              (feasible ? "y" : "n");
                            if (!seen.insert(key).second) continue;
                            ++instances;
                            // shape and size certificates
                            long long host_expect = 1, pat_expect = 1;
                            auto ocn = [&](int e) {
                                return (long long)order_caterpillar(inst, e).tree.n;
                            };
                            host_expect += 2 + ocn(x0.first) + ocn(x0.second) +
                                           ocn(x1.first) + ocn(x1.second);
                            pat_expect +=
                                1 + ocn(y.first) + ocn(y.second) + ocn(z0) + ocn(z1);
                            if (tr.host.n != host_expect ||
                                tr.pattern.n != pat_expect ||
                                tr.host.n > 1 + 2 * (4 * n + 5) ||
                                tr.pattern.n > 1 + (4 * n + 5) + 2 * (2 * n + 2)) {
                                ok = false;
                                detail = "tree sizes off the closed form";
                                break;
                            }
                            for (const Tree* t : {&tr.host, &tr.pattern}) {
                                std::vector<std::pair<int, int>> cut;
                                for (auto [u, v] : t->edges)
                                    if (u == 0 || v == 0) cut.push_back({u, v});
                                for (const Component& c :
                                     components_minus_edges(*t, cut))
                                    if (!is_caterpillar(c.tree)) {
                                        ok = false;
                                        detail = "gadget component not a caterpillar";
                                    }
                            }
                            if (!ok) break;
                            if (exact_minor(tr.host, tr.pattern, 32) != feasible) {
                                ok = false;
                                detail = "oracle disagrees with pair-cover feasibility";
                                break;
                            }
                            if (feasible) {
                                IppcSolution sol = *ippc_brute_witness(inst);
                                if (!verify_embedding(
                                        tr.host, tr.pattern,
                                        ippc_witness_embedding(inst, sol))) {
                                    ok = false;
                                    detail = "pair-cover witness does not verify";
                                    break;
                                }
                                ++witnesses;
                            }
                        }
    }

    if (ok)
        detail = std::to_string(formulas) + " formulas, " + std::to_string(posets) +
                 " posets, " + std::to_string(instances) + " tree pairs, " +
                 std::to_string(witnesses) + " witness chains";
    report(6, "pair-cover chain preserves answers down to bounded-pathwidth trees", ok,
           detail);
}

// ---- 7: the dispatcher never contradicts the exact oracle ------------------------

void criterion_7() {
    bool ok = true;
    std::string detail;
    long long pairs = 0, hard = 0;
    auto check = [&](const Tree& h, const Tree& p) {
        ++pairs;
        bool want = exact_minor(h, p, 16);
        SolveResult lazy = solve(h, p, false);
        SolveResult eager = solve(h, p, true, 16);
        if (lazy.report.regime == Regime::HardFallback) ++hard;
        bool lazy_fine = lazy.answer == Answer::Unknown
                             ? lazy.report.regime == Regime::HardFallback
                             : (lazy.answer == Answer::Yes) == want;
        bool eager_fine = eager.answer != Answer::Unknown &&
                          (eager.answer == Answer::Yes) == want;
        if (!(lazy_fine && eager_fine) && ok) {
            ok = false;
            detail = "dispatcher contradiction on " + pair_id(h, p);
        }
    };
    std::mt19937_64 rng(701);
    for (int t = 0; t < 1000; ++t) {
        int nt = 2 + (int)(rng() % 11);
        int np = 1 + (int)(rng() % nt);
        check(random_tree(nt, rng()), random_tree(np, rng()));
    }
    // seeded pairs that land in the hard regime
    std::vector<Tree> hard_hosts, hard_pats;
    hard_hosts.push_back(th::spider(3, 3));
    {
        Tree t = th::spider(3, 3);
        th::grow(t, 0);
        hard_hosts.push_back(t);
    }
    {
        Tree t = th::spider(3, 3);
        th::grow(t, 3);
        hard_hosts.push_back(t);
    }
    hard_hosts.push_back(th::spider(3, 4));
    hard_pats.push_back(th::spider(3, 2));
    {
        Tree t = th::spider(3, 2);
        th::grow(t, 0);
        hard_pats.push_back(t);
    }
    {
        Tree t = th::spider(3, 2);
        th::grow(t, 2);
        hard_pats.push_back(t);
    }
    long long hard_before = hard;
    for (const Tree& h : hard_hosts)
        for (const Tree& p : hard_pats) check(h, p);
    if (ok && hard - hard_before != 12) {
        ok = false;
        detail = "seeded pairs missed the hard regime";
    }
    if (ok)
        detail = std::to_string(pairs) + " pairs, " + std::to_string(hard) +
                 " in the hard regime";
    report(7, "dispatcher verdicts are consistent with the exact oracle", ok, detail);
}

// ---- 8: unrooted oracle == rooted sweep, witnesses verify -----------------------

void criterion_8() {
    bool ok = true;
    std::string detail;
    long long pairs = 0, witnesses = 0;
    for (int nt = 1; nt <= 6 && ok; ++nt)
        for (const Tree& h : enumerate_trees(nt)) {
            if (!ok) break;
            for (int np = 1; np <= nt && ok; ++np)
                for (const Tree& p : enumerate_trees(np)) {
                    ++pairs;
                    bool want = exact_minor(h, p, 16);
                    bool found = false;
                    for (int r = 0; r < h.n && !found; ++r) {
                        auto w = exact_minor_rooted_witness({h, r}, {p, 0}, 16);
                        if (!w) continue;
                        found = true;
                        ++witnesses;
                        if (!verify_embedding(h, p, *w) || w->map[r] != 0) {
                            ok = false;
                            detail = "witness invalid on " + pair_id(h, p);
                        }
                    }
                    if (found != want && ok) {
                        ok = false;
                        detail = "rooted sweep disagrees on " + pair_id(h, p);
                    }
                    if (!ok) break;
                }
        }
    if (ok)
        detail = std::to_string(pairs) + " pairs, " + std::to_string(witnesses) +
                 " verified witnesses";
    report(8, "rooted sweeps reproduce the unrooted oracle with valid witnesses", ok,
           detail);
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(clock::now() - t0);
    std::cerr << "acceptance sweep took " << secs.count() << "s\n";
    if (failures > 0) {
        std::cout << failures << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
