// Command-line front end: domination numbers, claw detection, products,
// single-pair verification, and corpus runs.
//
// Exit codes: 0 all checks clean, 1 critical findings, 2 usage/config/IO.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clawbound/clawbound.hpp"

namespace {

using namespace clawbound;

// Accept either a file (.g6 / .el, first graph wins) or a graph6 literal.
Graph load_one(const std::string& spec) {
    if (std::filesystem::exists(spec)) {
        std::vector<Graph> gs = read_graph_file(spec);
        if (gs.empty()) throw input_error(spec + ": no graphs");
        return gs.front();
    }
    return parse_graph6(spec);
}

int cmd_gamma(const std::string& file, bool independent) {
    for (const Graph& g : read_graph_file(file)) {
        const DominationResult r = domination_number(g);
        std::cout << emit_graph6(g) << " gamma=" << r.value << " witness="
                  << r.witness.to_string();
        if (independent) {
            const DominationResult ir = min_independent_dominating_set(g);
            std::cout << " i=" << ir.value << " i_witness=" << ir.witness.to_string();
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_clawfree(const std::string& file) {
    bool all_free = true;
    for (const Graph& g : read_graph_file(file)) {
        if (auto claw = find_claw(g)) {
            std::cout << emit_graph6(g) << " claw " << claw->to_string() << "\n";
            all_free = false;
        } else {
            std::cout << emit_graph6(g) << " claw-free\n";
        }
    }
    return all_free ? 0 : 1;
}

int cmd_product(const std::string& gspec, const std::string& hspec, const std::string& format,
                const std::string& out) {
    const Graph g = load_one(gspec), h = load_one(hspec);
    auto [prod, pm] = cartesian_product(g, h);
    std::string text;
    if (format == "g6")
        text = emit_graph6(prod) + "\n";
    else
        text = emit_edge_list(prod);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) throw io_error("cannot write " + out);
        f << text;
    }
    return 0;
}

int cmd_verify(const std::string& gspec, const std::string& hspec, bool all_min_d,
               std::optional<std::uint64_t> seed, const std::string& trace_path) {
    const Graph g = load_one(gspec), h = load_one(hspec);
    RunConfig cfg;
    cfg.all_min_d = all_min_d;
    cfg.shuffle_seed = seed;
    std::vector<ProofTrace> traces;
    const CorpusRecord r = verify_pair(g, h, cfg, &traces);

    std::cout << "G " << r.g6_g << " (n=" << r.n_g << ", gamma=" << r.gamma_g << ")\n"
              << "H " << r.g6_h << " (n=" << r.n_h << ", gamma=" << r.gamma_h << ")\n"
              << "gamma(GxH) = " << r.gamma_gh << ", ratio = " << rational_to_string(r.ratio)
              << "\n"
              << "two-thirds bound: " << (r.two_thirds_ok ? "holds" : "VIOLATED")
              << ", vizing: " << (r.vizing_ok ? "holds" : "open")
              << ", suen-tarr: " << (r.suen_tarr_ok ? "holds" : "fails")
              << ", survey: " << (r.survey_ok ? "holds" : "fails") << "\n"
              << "minimum dominating sets checked: " << r.d_sets
              << ", fibers with surviving pairs: " << r.pair_fibers
              << ", max overcount: " << rational_to_string(r.overcount) << "\n";
    for (const ProofTrace& t : traces)
        for (const Violation& v : t.violations)
            std::cout << (v.critical ? "CRITICAL " : "observation ") << v.check << ": " << v.detail
                      << "\n";
    std::cout << "critical findings: " << r.critical_count
              << ", observations: " << r.observation_count << "\n";

    if (!trace_path.empty()) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const ProofTrace& t : traces) arr.push_back(proof_trace_to_json(t));
        std::ofstream f(trace_path);
        if (!f) throw io_error("cannot write " + trace_path);
        f << arr.dump(2) << "\n";
        std::cout << "trace written to " << trace_path << "\n";
    }
    return (r.critical_count > 0 || !r.two_thirds_ok) ? 1 : 0;
}

int cmd_corpus(const RunConfig& cfg, const std::string& out_dir, bool search_mode,
               std::size_t top) {
    const CorpusResult res = run_corpus(cfg, &std::cout);
    const CorpusSummary& s = res.summary;
    std::cout << "instances=" << s.instances << " d_sets=" << s.d_sets_total
              << " critical=" << s.critical_total << " observations=" << s.observation_total
              << " pair_fibers=" << s.pair_fiber_total << "\n"
              << "two_thirds=" << (s.all_two_thirds ? "all hold" : "VIOLATED")
              << " vizing=" << (s.all_vizing ? "all hold" : "open")
              << " min_ratio=" << rational_to_string(s.min_ratio) << " at (" << s.min_ratio_g
              << ", " << s.min_ratio_h << ")"
              << " max_overcount=" << rational_to_string(s.max_overcount) << "\n";
    for (const auto& [tag, c] : s.tag_counts) std::cout << "  " << tag << ": " << c << "\n";
    std::cout << "solver nodes: " << s.solver_nodes_total << ", wall: " << s.wall_ms_total
              << " ms\n";
    if (search_mode) {
        std::cout << "tightest instances:\n";
        for (const CorpusRecord& r : search_extremal(res.records, top))
            std::cout << "  " << rational_to_string(r.ratio) << "  G=" << r.g6_g
                      << " H=" << r.g6_h << "  gammas " << r.gamma_g << "," << r.gamma_h << ","
                      << r.gamma_gh << "\n";
    }
    if (!out_dir.empty()) {
        write_report_files(res, out_dir);
        std::cout << "reports written to " << out_dir << "\n";
    }
    return (s.critical_total > 0 || !s.all_two_thirds) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification workbench for domination bounds on Cartesian products"};
    app.require_subcommand(1);

    std::string file, gspec, hspec, format = "g6", out, trace_path, g6_file, seed_str;
    bool independent = false, all_min_d = false, unsafe_caps = false;
    RunConfig cfg;
    std::size_t top = 10;

    CLI::App* sc_gamma = app.add_subcommand("gamma", "domination numbers of graphs in a file");
    sc_gamma->add_option("file", file)->required();
    sc_gamma->add_flag("--independent", independent, "also report i(G)");

    CLI::App* sc_claw = app.add_subcommand("clawfree", "claw test for graphs in a file");
    sc_claw->add_option("file", file)->required();

    CLI::App* sc_prod = app.add_subcommand("product", "Cartesian product of two graphs");
    sc_prod->add_option("G", gspec)->required();
    sc_prod->add_option("H", hspec)->required();
    sc_prod->add_option("--format", format)->check(CLI::IsMember({"g6", "el"}));
    sc_prod->add_option("--out", out);

    CLI::App* sc_verify = app.add_subcommand("verify", "run every check on one (G, H) pair");
    sc_verify->add_option("G", gspec, "claw-free connected G (file or graph6)")->required();
    sc_verify->add_option("H", hspec, "connected H (file or graph6)")->required();
    sc_verify->add_flag("--all-min-d", all_min_d, "check every minimum dominating set");
    sc_verify->add_option("--shuffle-seed", seed_str, "randomize the arbitrary choices");
    sc_verify->add_option("--trace", trace_path, "write the proof traces as JSON");

    auto add_corpus_opts = [&](CLI::App* sc) {
        sc->add_option("--max-ng", cfg.max_ng, "largest G order (default 6)");
        sc->add_option("--max-nh", cfg.max_nh, "largest H order (default 4)");
        sc->add_option("--g6", g6_file, "file of G graphs instead of enumeration");
        sc->add_option("--jobs", cfg.jobs, "worker threads (env CLAWBOUND_JOBS overrides)");
        sc->add_flag("--unsafe-caps", unsafe_caps, "lift the size guards");
        sc->add_flag("--all-min-d", all_min_d, "check every minimum dominating set");
        sc->add_option("--shuffle-seed", seed_str, "randomize the arbitrary choices");
    };
    CLI::App* sc_corpus = app.add_subcommand("corpus", "verify an exhaustive corpus");
    add_corpus_opts(sc_corpus);
    sc_corpus->add_option("--out", out, "directory for report.csv/.json and summary.json");

    CLI::App* sc_search = app.add_subcommand("search", "rank instances by bound tightness");
    add_corpus_opts(sc_search);
    sc_search->add_option("--top", top, "how many instances to list");
    sc_search->add_option("--out", out, "directory for report files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cfg.unsafe_caps = unsafe_caps;
    cfg.all_min_d = all_min_d;
    if (!g6_file.empty()) cfg.g6_file = g6_file;
    std::optional<std::uint64_t> seed;
    if (!seed_str.empty()) {
        try {
            std::size_t pos = 0;
            seed = std::stoull(seed_str, &pos);
            if (pos != seed_str.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            std::cerr << "config error: --shuffle-seed expects an unsigned integer\n";
            return 2;
        }
    }
    cfg.shuffle_seed = seed;

    try {
        if (app.got_subcommand(sc_gamma)) return cmd_gamma(file, independent);
        if (app.got_subcommand(sc_claw)) return cmd_clawfree(file);
        if (app.got_subcommand(sc_prod)) return cmd_product(gspec, hspec, format, out);
        if (app.got_subcommand(sc_verify))
            return cmd_verify(gspec, hspec, all_min_d, seed, trace_path);
        if (app.got_subcommand(sc_corpus)) return cmd_corpus(cfg, out, false, top);
        if (app.got_subcommand(sc_search)) return cmd_corpus(cfg, out, true, top);
    } catch (const critical_finding& e) {
        std::cerr << "critical: " << e.what() << "\n";
        return 1;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
