#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tmc/enumerate.hpp"
#include "tmc/oracle.hpp"
#include "tmc/reductions.hpp"
#include "tmc/solvers.hpp"
#include "tmc/tree.hpp"

namespace {

constexpr int kErrorExit = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

nlohmann::json report_json(const tmc::Tree& host, const tmc::Tree& pattern,
                           const tmc::DichotomyReport& r, tmc::Answer answer) {
    return {
        {"answer", tmc::to_string(answer)},
        {"regime", tmc::to_string(r.regime)},
        {"algorithm", r.algorithm},
        {"host",
         {{"n", host.n},
          {"diameter", r.diam_T},
          {"path_eccentricity", r.pe_T},
          {"lobster", r.lob_T}}},
        {"pattern",
         {{"n", pattern.n},
          {"diameter", r.diam_P},
          {"path_eccentricity", r.pe_P},
          {"caterpillar", r.cat_P},
          {"lobster", r.lob_P}}},
    };
}

void print_report(std::ostream& out, const tmc::Tree& host, const tmc::Tree& pattern,
                  const tmc::DichotomyReport& r, tmc::Answer answer) {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "host: n=" << host.n << " diameter=" << r.diam_T
        << " path-eccentricity=" << r.pe_T << " lobster=" << yn(r.lob_T) << "\n";
    out << "pattern: n=" << pattern.n << " diameter=" << r.diam_P
        << " path-eccentricity=" << r.pe_P << " caterpillar=" << yn(r.cat_P)
        << " lobster=" << yn(r.lob_P) << "\n";
    out << "regime: " << tmc::to_string(r.regime) << "\n";
    out << "algorithm: " << r.algorithm << "\n";
    out << "answer: " << tmc::to_string(answer) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree minor containment toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- classify ----
    struct {
        std::string host, pattern;
        bool json = false;
    } cl;
    auto* classify = app.add_subcommand(
        "classify", "compute structural parameters and pick the regime");
    classify->add_option("host", cl.host, "host tree file")->required();
    classify->add_option("pattern", cl.pattern, "pattern tree file")->required();
    classify->add_flag("--json", cl.json, "emit the report as JSON");
    classify->callback([&] {
        tmc::Tree host = tmc::parse_tree(slurp(cl.host)).tree;
        tmc::Tree pattern = tmc::parse_tree(slurp(cl.pattern)).tree;
        tmc::DichotomyReport r = tmc::classify(host, pattern);
        if (cl.json)
            std::cout << report_json(host, pattern, r, r.answer).dump() << "\n";
        else
            print_report(std::cout, host, pattern, r, r.answer);
    });

    // ---- solve ----
    struct {
        std::string host, pattern;
        bool allow_exact = false, exit_status = false, json = false;
        int max_exact_n = 16;
    } so;
    auto* solve = app.add_subcommand("solve", "decide containment via the dispatcher");
    solve->add_option("host", so.host, "host tree file")->required();
    solve->add_option("pattern", so.pattern, "pattern tree file")->required();
    solve->add_flag("--allow-exact", so.allow_exact,
                    "fall back to the exponential oracle on hard instances");
    solve->add_option("--max-exact-n", so.max_exact_n,
                      "largest host size the exact fallback accepts")
        ->check(CLI::Range(1, 64));
    solve->add_flag("--exit-status", so.exit_status,
                    "exit 0 for yes, 1 for no, 2 for unknown");
    solve->add_flag("--json", so.json, "emit the verdict and report as JSON");
    solve->callback([&] {
        tmc::Tree host = tmc::parse_tree(slurp(so.host)).tree;
        tmc::Tree pattern = tmc::parse_tree(slurp(so.pattern)).tree;
        tmc::SolveResult r = tmc::solve(host, pattern, so.allow_exact, so.max_exact_n);
        if (so.json) {
            std::cout << report_json(host, pattern, r.report, r.answer).dump() << "\n";
        } else {
            std::cerr << "regime: " << tmc::to_string(r.report.regime)
                      << " algorithm: " << r.report.algorithm << "\n";
            std::cout << tmc::to_string(r.answer) << "\n";
        }
        if (so.exit_status)
            exit_code = r.answer == tmc::Answer::Yes  ? 0
                        : r.answer == tmc::Answer::No ? 1
                                                      : 2;
    });

    // ---- oracle ----
    struct {
        std::string host, pattern, witness;
        int root_host = -1, root_pattern = -1, max_n = 16;
    } orc;
    auto* oracle =
        app.add_subcommand("oracle", "exact (exponential) minor test, optionally rooted");
    oracle->add_option("host", orc.host, "host tree file")->required();
    oracle->add_option("pattern", orc.pattern, "pattern tree file")->required();
    auto* orh = oracle->add_option("--root-host", orc.root_host,
                                   "pin this host vertex onto the pattern root");
    auto* orp = oracle->add_option("--root-pattern", orc.root_pattern,
                                   "pattern vertex the pinned host vertex must map to");
    orh->needs(orp);
    orp->needs(orh);
    oracle->add_option("--max-n", orc.max_n, "largest host size accepted")
        ->check(CLI::Range(1, 64));
    oracle->add_option("--witness", orc.witness,
                       "write an embedding witness here when the answer is yes");
    oracle->callback([&] {
        tmc::TreeFile host = tmc::parse_tree(slurp(orc.host));
        tmc::TreeFile pattern = tmc::parse_tree(slurp(orc.pattern));
        // a root pinned on the command line beats one recorded in the file
        std::optional<int> rh = orc.root_host >= 0 ? std::optional<int>(orc.root_host)
                                                   : host.root;
        std::optional<int> rp = orc.root_pattern >= 0
                                    ? std::optional<int>(orc.root_pattern)
                                    : pattern.root;
        if (rh.has_value() != rp.has_value())
            throw tmc::ValidationError("rooted mode needs a root on both trees");
        bool yes = false;
        std::optional<tmc::Embedding> wit;
        if (rh) {
            tmc::RootedTree h{host.tree, *rh}, p{pattern.tree, *rp};
            if (orc.witness.empty()) {
                yes = tmc::exact_minor_rooted(h, p, orc.max_n);
            } else {
                wit = tmc::exact_minor_rooted_witness(h, p, orc.max_n);
                yes = wit.has_value();
            }
        } else if (orc.witness.empty()) {
            yes = tmc::exact_minor(host.tree, pattern.tree, orc.max_n);
        } else {
            // unrooted witness: some host vertex maps onto pattern vertex 0
            // in any embedding, so pinning every candidate in turn is complete
            for (int r = 0; r < host.tree.n && !wit; ++r)
                wit = tmc::exact_minor_rooted_witness({host.tree, r},
                                                      {pattern.tree, 0}, orc.max_n);
            yes = wit.has_value();
        }
        if (yes && !orc.witness.empty()) {
            spit(orc.witness, tmc::serialize_witness(*wit));
            std::cerr << "witness written to " << orc.witness << "\n";
        }
        std::cout << (yes ? "yes" : "no") << "\n";
    });

    // ---- verify ----
    struct {
        std::string host, pattern, witness;
    } ve;
    auto* verify = app.add_subcommand("verify", "check an embedding witness");
    verify->add_option("host", ve.host, "host tree file")->required();
    verify->add_option("pattern", ve.pattern, "pattern tree file")->required();
    verify->add_option("--witness", ve.witness, "witness file to check")->required();
    verify->callback([&] {
        tmc::Tree host = tmc::parse_tree(slurp(ve.host)).tree;
        tmc::Tree pattern = tmc::parse_tree(slurp(ve.pattern)).tree;
        tmc::Embedding f = tmc::parse_witness(slurp(ve.witness));
        if (tmc::verify_embedding(host, pattern, f)) {
            std::cout << "valid\n";
        } else {
            std::cout << "invalid\n";
            exit_code = 1;
        }
    });

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "instance and tree-pair generators");
    gen->require_subcommand(1);

    struct {
        std::string cnf, out;
    } gi;
    auto* gen_isc =
        gen->add_subcommand("isc", "3-CNF formula to inclusive set cover instance");
    gen_isc->add_option("--cnf", gi.cnf, "DIMACS CNF input")->required();
    gen_isc->add_option("-o,--out", gi.out, "output instance (JSON)")->required();
    gen_isc->callback([&] {
        tmc::CnfFormula f = tmc::parse_dimacs(slurp(gi.cnf));
        spit(gi.out, tmc::serialize_isc(tmc::sat3_to_isc(f)));
    });

    struct {
        std::string isc, stem, witness;
        double scale = 1.0;
    } gtd;
    auto* gen_td = gen->add_subcommand(
        "trees-diam", "set cover instance to a bounded-diameter tree pair");
    gen_td->add_option("--isc", gtd.isc, "set cover instance (JSON)")->required();
    gen_td->add_option("-o,--out", gtd.stem, "output stem (writes STEM.T.tree, "
                                             "STEM.P.tree, STEM.labels.json)")
        ->required();
    gen_td->add_option("--scale", gtd.scale,
                       "shrink factor for the star sizes (1.0 = certified sizes)")
        ->check(CLI::PositiveNumber);
    gen_td->add_option("--witness", gtd.witness,
                       "set cover solution to convert into STEM.witness.json");
    gen_td->callback([&] {
        tmc::IscInstance inst = tmc::parse_isc(slurp(gtd.isc));
        tmc::IscTrees tr = tmc::isc_to_trees(inst, gtd.scale);
        spit(gtd.stem + ".T.tree", tmc::serialize_tree(tr.host));
        spit(gtd.stem + ".P.tree", tmc::serialize_tree(tr.pattern));
        nlohmann::json labels;
        labels["host"] = tr.host_labels;
        labels["pattern"] = tr.pattern_labels;
        spit(gtd.stem + ".labels.json", labels.dump() + "\n");
        if (!gtd.witness.empty()) {
            tmc::IscSolution sol = tmc::parse_isc_solution(slurp(gtd.witness));
            tmc::Embedding e = tmc::isc_witness_embedding(inst, sol, gtd.scale);
            spit(gtd.stem + ".witness.json", tmc::serialize_witness(e));
        }
        std::cerr << "host " << tr.host.n << " vertices, pattern " << tr.pattern.n
                  << " vertices\n";
    });

    struct {
        std::string cnf, out;
    } gp;
    auto* gen_ippc = gen->add_subcommand(
        "ippc", "restricted CNF formula to inclusive poset pair cover instance");
    gen_ippc->add_option("--cnf", gp.cnf, "DIMACS CNF input (each variable twice "
                                          "positive, once negative)")
        ->required();
    gen_ippc->add_option("-o,--out", gp.out, "output instance (JSON)")->required();
    gen_ippc->callback([&] {
        tmc::CnfFormula f = tmc::parse_dimacs(slurp(gp.cnf));
        spit(gp.out, tmc::serialize_ippc(tmc::satx_to_ippc(f)));
    });

    struct {
        std::string ippc, stem, witness;
    } gtp;
    auto* gen_tp = gen->add_subcommand(
        "trees-pw", "poset pair cover instance to a bounded-pathwidth tree pair");
    gen_tp->add_option("--ippc", gtp.ippc, "pair cover instance (JSON)")->required();
    gen_tp->add_option("-o,--out", gtp.stem,
                       "output stem (writes STEM.ippc.json, STEM.T.tree, "
                       "STEM.P.tree, STEM.labels.json)")
        ->required();
    gen_tp->add_option("--witness", gtp.witness,
                       "solution of the padded instance to convert into "
                       "STEM.witness.json");
    gen_tp->callback([&] {
        tmc::IppcInstance inst = tmc::parse_ippc(slurp(gtp.ippc));
        tmc::IppcPadResult pad = tmc::ippc_pad(inst);
        if (!pad.balanced)
            throw tmc::ValidationError(
                "instance cannot be balanced: 2|X| < 2|Y| + |Z|");
        spit(gtp.stem + ".ippc.json", tmc::serialize_ippc(pad.instance));
        tmc::IppcTrees tr = tmc::ippc_to_trees(pad.instance);
        spit(gtp.stem + ".T.tree", tmc::serialize_tree(tr.host));
        spit(gtp.stem + ".P.tree", tmc::serialize_tree(tr.pattern));
        nlohmann::json labels;
        labels["host"] = tr.host_labels;
        labels["pattern"] = tr.pattern_labels;
        labels["padding"] = {{"added", pad.added}};
        spit(gtp.stem + ".labels.json", labels.dump() + "\n");
        if (!gtp.witness.empty()) {
            tmc::IppcSolution sol = tmc::parse_ippc_solution(slurp(gtp.witness));
            tmc::Embedding e = tmc::ippc_witness_embedding(pad.instance, sol);
            spit(gtp.stem + ".witness.json", tmc::serialize_witness(e));
        }
        std::cerr << "padded with " << pad.added << " fresh minima; host " << tr.host.n
                  << " vertices, pattern " << tr.pattern.n << " vertices\n";
    });

    // ---- selftest ----
    struct {
        int max_n = 7;
    } st;
    auto* selftest = app.add_subcommand(
        "selftest", "cross-check the dispatcher against the exact oracle");
    selftest->add_option("--max-n", st.max_n, "largest host size to sweep")
        ->check(CLI::Range(1, 9));
    selftest->callback([&] {
        long long pairs = 0, yes = 0;
        for (int nt = 1; nt <= st.max_n; ++nt) {
            std::vector<tmc::Tree> hosts = tmc::enumerate_trees(nt, st.max_n);
            for (int np = 1; np <= nt; ++np) {
                std::vector<tmc::Tree> pats = tmc::enumerate_trees(np, st.max_n);
                for (const auto& host : hosts)
                    for (const auto& pattern : pats) {
                        tmc::SolveResult r = tmc::solve(host, pattern, true, 16);
                        bool exact = tmc::exact_minor(host, pattern, 16);
                        ++pairs;
                        yes += exact;
                        if (r.answer == tmc::Answer::Unknown) {
                            std::cout << "fail: unknown verdict on a pair with the "
                                         "exact fallback enabled\n";
                            exit_code = 1;
                            return;
                        }
                        if ((r.answer == tmc::Answer::Yes) != exact) {
                            std::cout << "fail: dispatcher disagrees with the exact "
                                         "oracle on host "
                                      << tmc::canonical_code(host) << " pattern "
                                      << tmc::canonical_code(pattern) << "\n";
                            exit_code = 1;
                            return;
                        }
                    }
            }
            std::cerr << "checked all host sizes up to " << nt << " (" << pairs
                      << " pairs so far)\n";
        }
        std::cout << "ok: " << pairs << " pairs checked, " << yes << " containments\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kErrorExit;
    }
    return exit_code;
}
