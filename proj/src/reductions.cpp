#include "tmc/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace tmc {

namespace {

std::string num(int v) { return std::to_string(v); }

}  // namespace

// ---- CNF ------------------------------------------------------------------

void validate_cnf(const CnfFormula& f) {
    if (f.num_vars < 0) throw ValidationError("negative variable count");
    for (const auto& clause : f.clauses) {
        if (clause.empty()) throw ValidationError("empty clause");
        for (int lit : clause)
            if (lit == 0 || std::abs(lit) > f.num_vars)
                throw ValidationError("literal out of range: " + num(lit));
    }
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CnfFormula f;
    bool have_header = false;
    int declared = 0, line_no = 0;
    std::vector<int> current;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string fmt;
            if (have_header || !(ls >> fmt >> f.num_vars >> declared) || fmt != "cnf")
                throw ParseError("line " + num(line_no) + ": bad problem line");
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError("line " + num(line_no) + ": clause before the problem line");
        ls.clear();
        ls.str(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                f.clauses.push_back(current);
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
        if (!ls.eof())
            throw ParseError("line " + num(line_no) + ": expected a literal");
    }
    if (!have_header) throw ParseError("missing 'p cnf' problem line");
    if (!current.empty()) throw ParseError("unterminated clause at end of input");
    if ((int)f.clauses.size() != declared)
        throw ParseError("clause count mismatch: declared " + num(declared) + ", found " +
                         num((int)f.clauses.size()));
    validate_cnf(f);
    return f;
}

std::string serialize_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << " ";
        out << "0\n";
    }
    return out.str();
}

bool sat_brute(const CnfFormula& f) {
    validate_cnf(f);
    if (f.num_vars > 25)
        throw ValidationError("truth-table search limited to 25 variables");
    std::uint32_t limit = 1u << f.num_vars;
    for (std::uint32_t m = 0; m < limit; ++m) {
        bool all = true;
        for (const auto& clause : f.clauses) {
            bool sat = false;
            for (int lit : clause) {
                bool val = (m >> (std::abs(lit) - 1)) & 1;
                if ((lit > 0) == val) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

void validate_sat_restricted(const CnfFormula& f) {
    validate_cnf(f);
    std::vector<std::vector<int>> pos(f.num_vars), neg(f.num_vars);
    for (int j = 0; j < (int)f.clauses.size(); ++j) {
        if ((int)f.clauses[j].size() > 3)
            throw ValidationError("clause " + num(j + 1) + " wider than 3 literals");
        for (int lit : f.clauses[j]) {
            if (lit > 0)
                pos[lit - 1].push_back(j + 1);
            else
                neg[-lit - 1].push_back(j + 1);
        }
    }
    for (int i = 0; i < f.num_vars; ++i) {
        if (pos[i].size() != 2)
            throw ValidationError("variable " + num(i + 1) +
                                  " must occur exactly twice positively");
        if (pos[i][0] == pos[i][1])
            throw ValidationError("variable " + num(i + 1) +
                                  "'s positive occurrences must be in distinct clauses");
        if (neg[i].size() != 1)
            throw ValidationError("variable " + num(i + 1) +
                                  " must occur exactly once negatively");
    }
}

// ---- inclusive set cover ----------------------------------------------------

void validate_isc(const IscInstance& inst) {
    if (inst.universe < 1) throw ValidationError("universe must be positive");
    if (inst.budget < 0) throw ValidationError("negative budget");
    for (const auto& s : inst.sets)
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 1 || s[i] > inst.universe)
                throw ValidationError("set element out of range: " + num(s[i]));
            if (i > 0 && s[i] <= s[i - 1])
                throw ValidationError("set elements must be ascending and distinct");
        }
}

IscInstance parse_isc(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("set-cover instance is not valid JSON: ") + e.what());
    }
    IscInstance inst;
    try {
        inst.universe = j.at("universe").get<int>();
        inst.sets = j.at("sets").get<std::vector<std::vector<int>>>();
        inst.budget = j.at("k").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad set-cover instance fields: ") + e.what());
    }
    validate_isc(inst);
    return inst;
}

std::string serialize_isc(const IscInstance& inst) {
    nlohmann::json j;
    j["universe"] = inst.universe;
    j["sets"] = inst.sets;
    j["k"] = inst.budget;
    return j.dump() + "\n";
}

IscSolution parse_isc_solution(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("solution is not valid JSON: ") + e.what());
    }
    IscSolution sol;
    try {
        sol.selection = j.at("selection").get<std::vector<int>>();
        for (const auto& pair : j.at("allocation")) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("allocation entries must be [set, value] pairs");
            sol.allocation.push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad solution fields: ") + e.what());
    }
    return sol;
}

std::string serialize_isc_solution(const IscSolution& sol) {
    nlohmann::json j;
    j["selection"] = sol.selection;
    auto alloc = nlohmann::json::array();
    for (const auto& a : sol.allocation) alloc.push_back({a[0], a[1]});
    j["allocation"] = alloc;
    return j.dump() + "\n";
}

void verify_isc_solution(const IscInstance& inst, const IscSolution& sol) {
    validate_isc(inst);
    int m = (int)inst.sets.size();
    if ((int)sol.selection.size() > inst.budget)
        throw ValidationError("selection exceeds the budget");
    std::vector<char> selected(m, 0);
    for (size_t i = 0; i < sol.selection.size(); ++i) {
        int s = sol.selection[i];
        if (s < 0 || s >= m) throw ValidationError("selected set out of range");
        if (i > 0 && s <= sol.selection[i - 1])
            throw ValidationError("selection must be ascending and distinct");
        selected[s] = 1;
    }
    if ((int)sol.allocation.size() != inst.universe)
        throw ValidationError("allocation must cover every element once");
    std::set<std::array<int, 2>> used;
    for (int u = 1; u <= inst.universe; ++u) {
        auto [si, v] = sol.allocation[u - 1];
        if (si < 0 || si >= m || !selected[si])
            throw ValidationError("element " + num(u) + " allocated to an unselected set");
        if (!std::binary_search(inst.sets[si].begin(), inst.sets[si].end(), v))
            throw ValidationError("allocated value " + num(v) + " is not in set " + num(si));
        if (v < u)
            throw ValidationError("element " + num(u) + " allocated a value below it");
        if (!used.insert({si, v}).second)
            throw ValidationError("allocation reuses a set member");
    }
}

IscInstance sat3_to_isc(const CnfFormula& f) {
    validate_cnf(f);
    if (f.num_vars < 1) throw ValidationError("formula needs at least one variable");
    for (const auto& c : f.clauses)
        if ((int)c.size() > 3) throw ValidationError("clause wider than 3 literals");
    int nv = f.num_vars, nc = (int)f.clauses.size();
    int alpha = nv + 3 * nc;
    IscInstance inst;
    inst.universe = 2 * nv + 3 * nc;
    inst.budget = nv;
    // true-set of variable i: {a-i+1, a+i} plus 3j per positive occurrence and
    // 3j-1 per negative one; the false-set swaps the clause slots
    std::vector<std::set<int>> T(nv), F(nv);
    for (int i = 0; i < nv; ++i) {
        T[i] = {alpha - i, alpha + i + 1};
        F[i] = T[i];
    }
    for (int j = 0; j < nc; ++j)
        for (int lit : f.clauses[j]) {
            int vi = std::abs(lit) - 1;
            if (lit > 0) {
                T[vi].insert(3 * (j + 1));
                F[vi].insert(3 * (j + 1) - 1);
            } else {
                T[vi].insert(3 * (j + 1) - 1);
                F[vi].insert(3 * (j + 1));
            }
        }
    for (const auto& s : T) inst.sets.emplace_back(s.begin(), s.end());
    for (const auto& s : F) inst.sets.emplace_back(s.begin(), s.end());
    validate_isc(inst);
    return inst;
}

std::optional<IscSolution> isc_brute_witness(const IscInstance& inst) {
    validate_isc(inst);
    int m = (int)inst.sets.size();
    if (m > 20) throw ValidationError("subset enumeration limited to 20 sets");
    int n = inst.universe;
    // choosing more sets never hurts, so only subsets of the largest allowed
    // size need checking
    int kk = std::min(inst.budget, m);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) != kk) continue;
        std::vector<int> sel;
        std::vector<std::pair<int, int>> avail;  // (value, set index)
        for (int s = 0; s < m; ++s)
            if (mask >> s & 1) {
                sel.push_back(s);
                for (int v : inst.sets[s]) avail.emplace_back(v, s);
            }
        if ((int)avail.size() < n) continue;
        std::sort(avail.begin(), avail.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        // the j-th largest value covers element n-j; feasible iff every rank
        // clears its element (the dominance criterion)
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
            if (avail[j].first < n - j) ok = false;
        if (!ok) continue;
        IscSolution sol;
        sol.selection = std::move(sel);
        sol.allocation.resize(n);
        for (int j = 0; j < n; ++j)
            sol.allocation[n - j - 1] = {avail[j].second, avail[j].first};
        verify_isc_solution(inst, sol);
        return sol;
    }
    return std::nullopt;
}

bool isc_brute(const IscInstance& inst) { return isc_brute_witness(inst).has_value(); }

// ---- set cover -> tree pair ---------------------------------------------------

namespace {

struct IscSizes {
    long long big, mid, huge_;
    double scale;
    // leaf count of a value-v star (elements and their target stars scale
    // together so dominance is preserved at any scale)
    long long value(int v) const {
        return std::max(1ll, (long long)std::llround((double)v * scale));
    }
};

IscSizes isc_sizes(const IscInstance& inst, double scale) {
    double n = inst.universe;
    auto scaled = [&](double c) {
        return std::max(1ll, (long long)std::llround(c * scale));
    };
    return {scaled(n * n * n), scaled(n * n), scaled(3.0 * n * n * n * n), scale};
}

int grow_star(Tree& t, int parent, long long leaves) {
    int center = t.n++;
    if (parent >= 0) t.edges.emplace_back(parent, center);
    for (long long i = 0; i < leaves; ++i) {
        t.edges.emplace_back(center, t.n);
        ++t.n;
    }
    return center;
}

}  // namespace

IscTrees isc_to_trees(const IscInstance& inst, double scale) {
    validate_isc(inst);
    int m = (int)inst.sets.size();
    if (inst.budget > m) throw ValidationError("budget exceeds the number of sets");
    IscSizes sz = isc_sizes(inst, scale);

    long long host_total = 1 + sz.huge_;
    for (const auto& s : inst.sets) {
        host_total += 1 + sz.big + 1 + sz.mid;
        for (int v : s) host_total += 1 + sz.value(v);
    }
    long long pattern_total = 1 + sz.huge_ + (long long)(m - inst.budget) * (1 + sz.big) +
                              (long long)inst.budget * (1 + sz.mid);
    for (int u = 1; u <= inst.universe; ++u) pattern_total += 1 + sz.value(u);
    if (host_total > 50'000'000 || pattern_total > 50'000'000)
        throw ValidationError("construction exceeds 50M vertices");

    IscTrees out;
    out.host.edges.reserve(host_total - 1);
    out.host_labels["t"] = 0;
    for (long long i = 0; i < sz.huge_; ++i) {
        out.host.edges.emplace_back(0, out.host.n);
        ++out.host.n;
    }
    for (int i = 0; i < m; ++i) {
        int ti = grow_star(out.host, 0, sz.big);
        out.host_labels["t." + num(i)] = ti;
        for (size_t j = 0; j < inst.sets[i].size(); ++j)
            out.host_labels["t." + num(i) + ".s." + num((int)j)] =
                grow_star(out.host, ti, sz.value(inst.sets[i][j]));
        out.host_labels["t." + num(i) + ".y"] = grow_star(out.host, ti, sz.mid);
    }

    out.pattern.edges.reserve(pattern_total - 1);
    out.pattern_labels["p"] = 0;
    for (long long i = 0; i < sz.huge_; ++i) {
        out.pattern.edges.emplace_back(0, out.pattern.n);
        ++out.pattern.n;
    }
    for (int u = 1; u <= inst.universe; ++u)
        out.pattern_labels["r." + num(u)] = grow_star(out.pattern, 0, sz.value(u));
    for (int j = 0; j < m - inst.budget; ++j)
        out.pattern_labels["x." + num(j)] = grow_star(out.pattern, 0, sz.big);
    for (int j = 0; j < inst.budget; ++j)
        out.pattern_labels["y." + num(j)] = grow_star(out.pattern, 0, sz.mid);
    return out;
}

Embedding isc_witness_embedding(const IscInstance& inst, const IscSolution& sol,
                                double scale) {
    verify_isc_solution(inst, sol);
    int m = (int)inst.sets.size();
    if (inst.budget > m) throw ValidationError("budget exceeds the number of sets");
    IscTrees tr = isc_to_trees(inst, scale);
    IscSizes sz = isc_sizes(inst, scale);

    std::vector<char> selected(m, 0);
    for (int s : sol.selection) selected[s] = 1;
    // pad the selection to exactly the budget with unused sets so that every
    // medium pattern star gains a gadget to come from
    int extra_needed = inst.budget - (int)sol.selection.size();
    for (int s = 0; s < m && extra_needed > 0; ++s)
        if (!selected[s]) {
            selected[s] = 1;
            --extra_needed;
        }

    // designated covering slot per universe element
    std::map<std::array<int, 2>, int> designated;
    for (int u = 1; u <= inst.universe; ++u)
        designated[{sol.allocation[u - 1][0], sol.allocation[u - 1][1]}] = u;

    const auto& H = tr.host_labels;
    const auto& P = tr.pattern_labels;
    Embedding e;
    e.map.assign(tr.host.n, -1);
    e.map[0] = 0;
    for (long long i = 0; i < sz.huge_; ++i) e.map[1 + i] = (int)(1 + i);

    // stars are laid out with their leaves directly after the center
    int next_x = 0, next_y = 0;
    for (int i = 0; i < m; ++i) {
        int ti = H.at("t." + num(i));
        if (!selected[i]) {
            int xc = P.at("x." + num(next_x++));
            e.map[ti] = xc;
            for (long long l = 1; l <= sz.big; ++l) e.map[ti + l] = (int)(xc + l);
            for (size_t j = 0; j < inst.sets[i].size(); ++j) {
                int c = H.at("t." + num(i) + ".s." + num((int)j));
                long long cnt = sz.value(inst.sets[i][j]);
                for (long long l = 0; l <= cnt; ++l) e.map[c + l] = xc;
            }
            int yc = H.at("t." + num(i) + ".y");
            for (long long l = 0; l <= sz.mid; ++l) e.map[yc + l] = xc;
        } else {
            e.map[ti] = 0;
            for (long long l = 1; l <= sz.big; ++l) e.map[ti + l] = 0;
            for (size_t j = 0; j < inst.sets[i].size(); ++j) {
                int c = H.at("t." + num(i) + ".s." + num((int)j));
                int v = inst.sets[i][j];
                long long cnt = sz.value(v);
                auto it = designated.find({i, v});
                if (it == designated.end()) {
                    // spare star: sink the whole subtree into the center class
                    for (long long l = 0; l <= cnt; ++l) e.map[c + l] = 0;
                } else {
                    int rc = P.at("r." + num(it->second));
                    long long want = sz.value(it->second);
                    e.map[c] = rc;
                    for (long long l = 1; l <= cnt; ++l)
                        e.map[c + l] = l <= want ? (int)(rc + l) : rc;
                }
            }
            int yc = H.at("t." + num(i) + ".y");
            int pc = P.at("y." + num(next_y++));
            e.map[yc] = pc;
            for (long long l = 1; l <= sz.mid; ++l) e.map[yc + l] = (int)(pc + l);
        }
    }
    return e;
}

// ---- inclusive poset pair cover ------------------------------------------------

namespace {

void validate_poset(const std::vector<std::string>& elements,
                    const std::vector<std::vector<char>>& leq) {
    int n = (int)elements.size();
    if ((int)leq.size() != n) throw ValidationError("order matrix size mismatch");
    for (const auto& row : leq)
        if ((int)row.size() != n) throw ValidationError("order matrix row size mismatch");
    std::set<std::string> names(elements.begin(), elements.end());
    if ((int)names.size() != n) throw ValidationError("duplicate element labels");
    for (int i = 0; i < n; ++i)
        if (!leq[i][i]) throw ValidationError("order is not reflexive");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!leq[i][j]) continue;
            if (i != j && leq[j][i]) throw ValidationError("order is not antisymmetric");
            for (int k = 0; k < n; ++k)
                if (leq[j][k] && !leq[i][k]) throw ValidationError("order is not transitive");
        }
}

}  // namespace

void validate_ippc(const IppcInstance& inst) {
    validate_poset(inst.elements, inst.leq);
    int n = (int)inst.elements.size();
    std::vector<char> used(n, 0);
    auto touch = [&](int i, const char* part) {
        if (i < 0 || i >= n)
            throw ValidationError(std::string(part) + " index out of range: " + num(i));
        used[i] = 1;
    };
    for (const auto& [a, b] : inst.X) {
        touch(a, "X");
        touch(b, "X");
    }
    for (const auto& [a, b] : inst.Y) {
        touch(a, "Y");
        touch(b, "Y");
    }
    for (int z : inst.Z) touch(z, "Z");
    for (int i = 0; i < n; ++i)
        if (!used[i])
            throw ValidationError("element " + num(i) + " does not occur in X, Y or Z");
}

IppcInstance parse_ippc(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("pair-cover instance is not valid JSON: ") + e.what());
    }
    IppcInstance inst;
    try {
        inst.elements = j.at("elements").get<std::vector<std::string>>();
        int n = (int)inst.elements.size();
        inst.leq.assign(n, std::vector<char>(n, 0));
        for (const auto& pair : j.at("leq")) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("leq entries must be [i, j] pairs");
            int a = pair[0].get<int>(), b = pair[1].get<int>();
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw ParseError("leq index out of range");
            inst.leq[a][b] = 1;
        }
        for (const auto& pair : j.at("X")) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("X entries must be [i, j] pairs");
            inst.X.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
        for (const auto& pair : j.at("Y")) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("Y entries must be [i, j] pairs");
            inst.Y.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
        inst.Z = j.at("Z").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad pair-cover instance fields: ") + e.what());
    }
    validate_ippc(inst);
    return inst;
}

std::string serialize_ippc(const IppcInstance& inst) {
    nlohmann::json j;
    j["elements"] = inst.elements;
    auto leq = nlohmann::json::array();
    int n = (int)inst.elements.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (inst.leq[a][b]) leq.push_back({a, b});
    j["leq"] = leq;
    auto pairs = [](const std::vector<std::pair<int, int>>& v) {
        auto arr = nlohmann::json::array();
        for (const auto& [a, b] : v) arr.push_back({a, b});
        return arr;
    };
    j["X"] = pairs(inst.X);
    j["Y"] = pairs(inst.Y);
    j["Z"] = inst.Z;
    return j.dump() + "\n";
}

IppcSolution parse_ippc_solution(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("solution is not valid JSON: ") + e.what());
    }
    IppcSolution sol;
    try {
        sol.f = j.at("f").get<std::vector<int>>();
        for (const auto& pair : j.at("g")) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("g entries must be [x, side] pairs");
            sol.g.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad solution fields: ") + e.what());
    }
    return sol;
}

std::string serialize_ippc_solution(const IppcSolution& sol) {
    nlohmann::json j;
    j["f"] = sol.f;
    auto g = nlohmann::json::array();
    for (const auto& [x, side] : sol.g) g.push_back({x, side});
    j["g"] = g;
    return j.dump() + "\n";
}

void verify_ippc_solution(const IppcInstance& inst, const IppcSolution& sol) {
    validate_ippc(inst);
    auto le = [&](int a, int b) { return inst.leq[a][b] != 0; };
    if (sol.f.size() != inst.Y.size())
        throw ValidationError("f must assign every Y member");
    if (sol.g.size() != inst.Z.size())
        throw ValidationError("g must assign every Z member");
    int nx = (int)inst.X.size();
    std::vector<char> f_used(nx, 0);
    for (size_t iy = 0; iy < inst.Y.size(); ++iy) {
        int ix = sol.f[iy];
        if (ix < 0 || ix >= nx) throw ValidationError("f target out of range");
        if (f_used[ix]) throw ValidationError("f is not injective");
        f_used[ix] = 1;
        auto [y1, y2] = inst.Y[iy];
        auto [x1, x2] = inst.X[ix];
        if (!((le(y1, x1) && le(y2, x2)) || (le(y2, x1) && le(y1, x2))))
            throw ValidationError("f violates pair dominance at Y position " + num((int)iy));
    }
    std::vector<std::array<char, 2>> slot(nx, {0, 0});
    for (size_t iz = 0; iz < inst.Z.size(); ++iz) {
        auto [ix, side] = sol.g[iz];
        if (ix < 0 || ix >= nx || (side != 1 && side != 2))
            throw ValidationError("g target out of range");
        if (f_used[ix]) throw ValidationError("f and g share an X member");
        if (slot[ix][side - 1]) throw ValidationError("g is not injective");
        slot[ix][side - 1] = 1;
        int x = side == 1 ? inst.X[ix].first : inst.X[ix].second;
        if (!le(inst.Z[iz], x))
            throw ValidationError("g violates dominance at Z position " + num((int)iz));
    }
}

namespace {

constexpr long long kNegInf = std::numeric_limits<long long>::min();
using Triple = std::array<long long, 3>;

std::string triple_label(const Triple& t) {
    auto one = [](long long v) {
        return v == kNegInf ? std::string("-inf") : std::to_string(v);
    };
    return "(" + one(t[0]) + "," + one(t[1]) + "," + one(t[2]) + ")";
}

}  // namespace

IppcInstance satx_to_ippc(const CnfFormula& f) {
    validate_sat_restricted(f);
    int nv = f.num_vars, nc = (int)f.clauses.size();
    std::vector<std::vector<int>> pos(nv);
    std::vector<int> neg(nv, 0);
    for (int j = 0; j < nc; ++j)
        for (int lit : f.clauses[j]) {
            if (lit > 0)
                pos[lit - 1].push_back(j + 1);
            else
                neg[-lit - 1] = j + 1;
        }

    std::vector<Triple> tuples;
    std::map<Triple, int> index;
    auto idx = [&](const Triple& t) {
        auto it = index.find(t);
        if (it != index.end()) return it->second;
        int id = (int)tuples.size();
        tuples.push_back(t);
        index.emplace(t, id);
        return id;
    };

    IppcInstance inst;
    // intern left member before right so element ids follow appearance order
    // (nested calls in one emplace_back would leave the order unspecified)
    for (int i = 1; i <= nv; ++i) {
        long long p1 = pos[i - 1][0], p2 = pos[i - 1][1], q = neg[i - 1];
        int a = idx({i, p1, -p1});
        int b = idx({-i, p2, -p2});
        inst.X.emplace_back(a, b);
        a = idx({i, q, -q});
        b = idx({-i, kNegInf, kNegInf});
        inst.X.emplace_back(a, b);
    }
    for (int i = 1; i <= nv; ++i) {
        int a = idx({i, kNegInf, kNegInf});
        int b = idx({-i, kNegInf, kNegInf});
        inst.Y.emplace_back(a, b);
    }
    for (long long j = 1; j <= nc; ++j) inst.Z.push_back(idx({kNegInf, j, -j}));

    int n = (int)tuples.size();
    for (const auto& t : tuples) inst.elements.push_back(triple_label(t));
    inst.leq.assign(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            inst.leq[a][b] = tuples[a][0] <= tuples[b][0] && tuples[a][1] <= tuples[b][1] &&
                             tuples[a][2] <= tuples[b][2];
    validate_ippc(inst);
    return inst;
}

std::optional<IppcSolution> ippc_brute_witness(const IppcInstance& inst) {
    validate_ippc(inst);
    int nx = (int)inst.X.size();
    if (nx > 6) throw ValidationError("enumeration limited to 6 X members");
    int ny = (int)inst.Y.size(), nz = (int)inst.Z.size();
    // f consumes whole X members, g consumes sides of the untouched ones
    if (ny > nx || nz > 2 * (nx - ny)) return std::nullopt;
    auto le = [&](int a, int b) { return inst.leq[a][b] != 0; };

    IppcSolution sol;
    sol.f.assign(ny, -1);
    sol.g.assign(nz, {-1, -1});
    std::vector<char> f_used(nx, 0);
    std::vector<std::array<char, 2>> slot(nx, {0, 0});

    std::function<bool(int)> go_g = [&](int iz) {
        if (iz == nz) return true;
        for (int ix = 0; ix < nx; ++ix) {
            if (f_used[ix]) continue;
            for (int side = 1; side <= 2; ++side) {
                if (slot[ix][side - 1]) continue;
                int x = side == 1 ? inst.X[ix].first : inst.X[ix].second;
                if (!le(inst.Z[iz], x)) continue;
                slot[ix][side - 1] = 1;
                sol.g[iz] = {ix, side};
                if (go_g(iz + 1)) return true;
                slot[ix][side - 1] = 0;
            }
        }
        return false;
    };
    std::function<bool(int)> go_f = [&](int iy) {
        if (iy == ny) return go_g(0);
        auto [y1, y2] = inst.Y[iy];
        for (int ix = 0; ix < nx; ++ix) {
            if (f_used[ix]) continue;
            auto [x1, x2] = inst.X[ix];
            if (!((le(y1, x1) && le(y2, x2)) || (le(y2, x1) && le(y1, x2)))) continue;
            f_used[ix] = 1;
            sol.f[iy] = ix;
            if (go_f(iy + 1)) return true;
            f_used[ix] = 0;
        }
        return false;
    };
    if (!go_f(0)) return std::nullopt;
    verify_ippc_solution(inst, sol);
    return sol;
}

bool ippc_brute(const IppcInstance& inst) { return ippc_brute_witness(inst).has_value(); }

IppcPadResult ippc_pad(const IppcInstance& inst) {
    validate_ippc(inst);
    IppcPadResult out;
    out.instance = inst;
    long long gap = 2ll * (long long)inst.X.size() - 2ll * (long long)inst.Y.size() -
                    (long long)inst.Z.size();
    if (gap < 0) {
        out.balanced = false;
        return out;
    }
    for (long long t = 0; t < gap; ++t) {
        int id = (int)out.instance.elements.size();
        std::string label = "pad." + num((int)t);
        while (std::find(out.instance.elements.begin(), out.instance.elements.end(),
                         label) != out.instance.elements.end())
            label += "'";
        out.instance.elements.push_back(label);
        // each fresh minimum sits below everything added so far, keeping the
        // order a chain extension
        for (auto& row : out.instance.leq) row.push_back(0);
        out.instance.leq.emplace_back(id + 1, 1);
        out.instance.Z.push_back(id);
        ++out.added;
    }
    validate_ippc(out.instance);
    return out;
}

// ---- poset pair cover -> tree pair ------------------------------------------------

OrderCaterpillar order_caterpillar(const IppcInstance& inst, int a) {
    validate_poset(inst.elements, inst.leq);
    int n = (int)inst.elements.size();
    if (a < 0 || a >= n) throw ValidationError("element index out of range");
    OrderCaterpillar oc;
    oc.tree.n = n + 2;
    for (int i = 0; i <= n; ++i) oc.tree.edges.emplace_back(i, i + 1);
    oc.root = 0;
    oc.spine.resize(n + 2);
    for (int i = 0; i < n + 2; ++i) oc.spine[i] = i;
    oc.leaf.assign(n, -1);
    for (int i = 0; i < n; ++i)
        if (inst.leq[i][a]) {
            oc.leaf[i] = oc.tree.n;
            oc.tree.edges.emplace_back(i, oc.tree.n);
            ++oc.tree.n;
        }
    return oc;
}

std::optional<Embedding> natural_embedding(const IppcInstance& inst, int a, int b) {
    OrderCaterpillar pat = order_caterpillar(inst, a);
    OrderCaterpillar host = order_caterpillar(inst, b);
    int n = (int)inst.elements.size();
    for (int i = 0; i < n; ++i)
        if (pat.leaf[i] >= 0 && host.leaf[i] < 0) return std::nullopt;
    Embedding e;
    e.map.assign(host.tree.n, -1);
    for (int i = 0; i < n + 2; ++i) e.map[host.spine[i]] = pat.spine[i];
    for (int i = 0; i < n; ++i)
        if (host.leaf[i] >= 0)
            e.map[host.leaf[i]] = pat.leaf[i] >= 0 ? pat.leaf[i] : pat.spine[i];
    return e;
}

namespace {

// Appends a copy of the caterpillar to `t`, hangs its spine start off
// `attach`, and returns the id offset of the copy.
int append_ocat(Tree& t, const OrderCaterpillar& oc, int attach) {
    int base = t.n;
    t.n += oc.tree.n;
    for (auto [a, b] : oc.tree.edges) t.edges.emplace_back(base + a, base + b);
    t.edges.emplace_back(attach, base + oc.root);
    return base;
}

void label_ocat(std::map<std::string, int>& labels, const std::string& prefix,
                const OrderCaterpillar& oc, int base) {
    for (size_t j = 0; j < oc.spine.size(); ++j)
        labels[prefix + ".v." + num((int)j)] = base + oc.spine[j];
    for (size_t j = 0; j < oc.leaf.size(); ++j)
        if (oc.leaf[j] >= 0) labels[prefix + ".l." + num((int)j)] = base + oc.leaf[j];
}

}  // namespace

IppcTrees ippc_to_trees(const IppcInstance& inst) {
    validate_ippc(inst);
    if (inst.X.empty() || inst.Y.empty() || inst.Z.empty())
        throw ValidationError("X, Y and Z must all be nonempty");
    if (2ll * (long long)inst.X.size() !=
        2ll * (long long)inst.Y.size() + (long long)inst.Z.size())
        throw ValidationError("instance is not balanced: 2|X| must equal 2|Y| + |Z|");
    int n = (int)inst.elements.size();
    std::vector<OrderCaterpillar> ocat;
    ocat.reserve(n);
    for (int i = 0; i < n; ++i) ocat.push_back(order_caterpillar(inst, i));

    IppcTrees out;
    out.host_labels["r"] = 0;
    for (size_t i = 0; i < inst.X.size(); ++i) {
        auto [a, b] = inst.X[i];
        int rx = out.host.n++;
        out.host.edges.emplace_back(0, rx);
        out.host_labels["x." + num((int)i) + ".r"] = rx;
        int bl = append_ocat(out.host, ocat[a], rx);
        label_ocat(out.host_labels, "x." + num((int)i) + ".L", ocat[a], bl);
        int br = append_ocat(out.host, ocat[b], rx);
        label_ocat(out.host_labels, "x." + num((int)i) + ".R", ocat[b], br);
    }

    out.pattern_labels["r"] = 0;
    for (size_t i = 0; i < inst.Y.size(); ++i) {
        auto [a, b] = inst.Y[i];
        int ry = out.pattern.n++;
        out.pattern.edges.emplace_back(0, ry);
        out.pattern_labels["y." + num((int)i) + ".r"] = ry;
        int bl = append_ocat(out.pattern, ocat[a], ry);
        label_ocat(out.pattern_labels, "y." + num((int)i) + ".L", ocat[a], bl);
        int br = append_ocat(out.pattern, ocat[b], ry);
        label_ocat(out.pattern_labels, "y." + num((int)i) + ".R", ocat[b], br);
    }
    for (size_t i = 0; i < inst.Z.size(); ++i) {
        int bz = append_ocat(out.pattern, ocat[inst.Z[i]], 0);
        label_ocat(out.pattern_labels, "z." + num((int)i), ocat[inst.Z[i]], bz);
    }
    return out;
}

Embedding ippc_witness_embedding(const IppcInstance& inst, const IppcSolution& sol) {
    verify_ippc_solution(inst, sol);
    IppcTrees tr = ippc_to_trees(inst);
    auto le = [&](int a, int b) { return inst.leq[a][b] != 0; };
    int n = (int)inst.elements.size();

    Embedding e;
    // everything not claimed below collapses onto the pattern root
    e.map.assign(tr.host.n, 0);

    // spine-preserving copy of one gadget arm onto one pattern caterpillar;
    // requires pat_elem <= host_elem so every pattern leaf has a source
    auto map_arm = [&](const std::string& host_prefix, int host_elem,
                       const std::string& pat_prefix, int pat_elem) {
        for (int j = 0; j < n + 2; ++j)
            e.map[tr.host_labels.at(host_prefix + ".v." + num(j))] =
                tr.pattern_labels.at(pat_prefix + ".v." + num(j));
        for (int j = 0; j < n; ++j) {
            if (!le(j, host_elem)) continue;
            int hl = tr.host_labels.at(host_prefix + ".l." + num(j));
            e.map[hl] = le(j, pat_elem)
                            ? tr.pattern_labels.at(pat_prefix + ".l." + num(j))
                            : tr.pattern_labels.at(pat_prefix + ".v." + num(j));
        }
    };

    for (size_t iy = 0; iy < inst.Y.size(); ++iy) {
        int ix = sol.f[iy];
        auto [x1, x2] = inst.X[ix];
        auto [y1, y2] = inst.Y[iy];
        e.map[tr.host_labels.at("x." + num(ix) + ".r")] =
            tr.pattern_labels.at("y." + num((int)iy) + ".r");
        if (le(y1, x1) && le(y2, x2)) {
            map_arm("x." + num(ix) + ".L", x1, "y." + num((int)iy) + ".L", y1);
            map_arm("x." + num(ix) + ".R", x2, "y." + num((int)iy) + ".R", y2);
        } else {
            map_arm("x." + num(ix) + ".L", x1, "y." + num((int)iy) + ".R", y2);
            map_arm("x." + num(ix) + ".R", x2, "y." + num((int)iy) + ".L", y1);
        }
    }
    for (size_t iz = 0; iz < inst.Z.size(); ++iz) {
        auto [ix, side] = sol.g[iz];
        int host_elem = side == 1 ? inst.X[ix].first : inst.X[ix].second;
        map_arm("x." + num(ix) + (side == 1 ? ".L" : ".R"), host_elem,
                "z." + num((int)iz), inst.Z[iz]);
    }
    return e;
}

}  // namespace tmc
