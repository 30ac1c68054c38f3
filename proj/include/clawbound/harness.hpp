#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "clawbound/decomposition.hpp"
#include "clawbound/domination.hpp"
#include "clawbound/enumerate.hpp"
#include "clawbound/errors.hpp"
#include "clawbound/graph.hpp"
#include "clawbound/graph_io.hpp"
#include "clawbound/labeling.hpp"
#include "clawbound/vertex_set.hpp"

namespace clawbound {

using Rational = boost::rational<long long>;

inline std::string rational_to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

struct RunConfig {
    int max_ng = 6;
    int max_nh = 4;
    std::optional<std::string> g6_file;  // replace the enumerated G side
    int jobs = 1;
    bool unsafe_caps = false;
    bool all_min_d = false;  // check every minimum dominating set of the product
    std::optional<std::uint64_t> shuffle_seed;
};

// Hard ceilings keep a corpus run on desk-scale hardware; --unsafe-caps lifts
// them to the representational limits instead.
inline void validate_config(RunConfig& cfg) {
    if (const char* env = std::getenv("CLAWBOUND_JOBS")) {
        try {
            std::size_t pos = 0;
            const int j = std::stoi(env, &pos);
            if (pos != std::string_view(env).size() || j < 1)
                throw config_error("CLAWBOUND_JOBS must be a positive integer");
            cfg.jobs = j;
        } catch (const config_error&) {
            throw;
        } catch (const std::exception&) {
            throw config_error("CLAWBOUND_JOBS must be a positive integer");
        }
    }
    const int enum_cap = cfg.unsafe_caps ? 10 : 8;
    const int product_cap = cfg.unsafe_caps ? 100 : 24;
    if (cfg.max_ng < 1 || cfg.max_nh < 1)
        throw config_error("graph order bounds must be at least 1");
    if (cfg.max_ng > enum_cap || cfg.max_nh > enum_cap)
        throw config_error("graph order bound exceeds the enumeration cap of " +
                           std::to_string(enum_cap));
    if (cfg.max_ng * cfg.max_nh > product_cap)
        throw config_error("product order bound " + std::to_string(cfg.max_ng * cfg.max_nh) +
                           " exceeds the cap of " + std::to_string(product_cap));
    if (cfg.jobs < 1 || cfg.jobs > 64) throw config_error("jobs must be between 1 and 64");
}

namespace detail {
inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 1469598103934665603ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}
}  // namespace detail

// One verified (G, H) instance.  Every serialized field is a pure function of
// the two graphs and the configuration, so reports are byte-stable.
struct CorpusRecord {
    long long index = 0;
    std::string g6_g, g6_h;
    int n_g = 0, n_h = 0;
    int gamma_g = 0, gamma_h = 0, gamma_gh = 0;
    Rational ratio{0, 1};  // gamma(G□H) / (gamma(G)·gamma(H))
    bool two_thirds_ok = false;
    bool vizing_ok = false;
    bool suen_tarr_ok = false;  // gamma(G□H) >= (gamma(G)gamma(H) + min)/2, report-only
    bool survey_ok = false;     // gamma(G□H) >= gamma(G)(gamma(H)+1)/2, report-only
    long long d_sets = 0;
    long long pair_fibers = 0;      // fibers with surviving pairs, summed over D sets
    Rational overcount{0, 1};       // max over D of Σ|D_i| / |D|
    long long critical_count = 0;
    long long observation_count = 0;
    std::map<std::string, long long> tag_counts;
    long long solver_nodes = 0;  // not serialized to reports
    double wall_ms = 0.0;        // not serialized to reports

    bool operator==(const CorpusRecord& o) const {
        return index == o.index && g6_g == o.g6_g && g6_h == o.g6_h && n_g == o.n_g &&
               n_h == o.n_h && gamma_g == o.gamma_g && gamma_h == o.gamma_h &&
               gamma_gh == o.gamma_gh && ratio == o.ratio && two_thirds_ok == o.two_thirds_ok &&
               vizing_ok == o.vizing_ok && suen_tarr_ok == o.suen_tarr_ok &&
               survey_ok == o.survey_ok && d_sets == o.d_sets && pair_fibers == o.pair_fibers &&
               overcount == o.overcount && critical_count == o.critical_count &&
               observation_count == o.observation_count && tag_counts == o.tag_counts;
    }
};

// Verify one pair end to end: Theorem 1, the decomposition and structural
// observations on G, the labeling pipeline over each chosen minimum D, and
// the product bounds.  Refuses unusable inputs instead of recording them.
inline CorpusRecord verify_pair(const Graph& g, const Graph& h, const RunConfig& cfg,
                                std::vector<ProofTrace>* traces_out = nullptr) {
    if (!is_connected(g)) throw input_error("verify_pair: G must be connected");
    if (!is_connected(h)) throw input_error("verify_pair: H must be connected");
    if (auto claw = find_claw(g))
        throw input_error("verify_pair: G is not claw-free, witness " + claw->to_string());

    const auto t0 = std::chrono::steady_clock::now();
    CorpusRecord r;
    r.g6_g = emit_graph6(g);
    r.g6_h = emit_graph6(h);
    r.n_g = g.vertex_count();
    r.n_h = h.vertex_count();

    auto note = [&r](const Violation& v) {
        ++r.tag_counts[v.check];
        if (v.critical)
            ++r.critical_count;
        else
            ++r.observation_count;
    };

    const AllanLaskarRecord al = verify_allan_laskar(g);
    r.solver_nodes += al.node_count;
    r.gamma_g = al.gamma;
    if (!al.pass)
        note({"theorem1_i_eq_gamma", true,
              "i(G)=" + std::to_string(al.independent) + " gamma(G)=" + std::to_string(al.gamma)});
    const std::vector<int> gam = al.independent_witness.to_vector();

    const CellDecomposition dec = decompose(g, gam);
    const StructuralReport srep = verify_structural_observations(g, dec);
    if (!srep.applicable) throw internal_error("verify_pair: claw slipped past the entry check");
    if (!srep.shared_pairs_only) note({"obs_shared_pairs_only", true, ""});
    if (!srep.no_disjoint_shared_edges) note({"obs_disjoint_shared_edges", true, ""});
    if (!srep.no_private_shared_edges) note({"obs_private_shared_edges", true, ""});

    const DominationResult dh = domination_number(h);
    r.gamma_h = dh.value;
    r.solver_nodes += dh.node_count;

    auto [prod, pm] = cartesian_product(g, h);
    const DominationResult dp = domination_number(prod);
    r.gamma_gh = dp.value;
    r.solver_nodes += dp.node_count;

    const long long gg = r.gamma_g, gh = r.gamma_h, gp = r.gamma_gh;
    r.ratio = Rational(gp, gg * gh);
    r.two_thirds_ok = 3 * gp >= 2 * gg * gh;
    r.vizing_ok = gp >= gg * gh;
    r.suen_tarr_ok = 2 * gp >= gg * gh + std::min(gg, gh);
    r.survey_ok = 2 * gp >= gg * (gh + 1);
    if (!r.two_thirds_ok) note({"two_thirds_bound", true, ""});
    if (!r.vizing_ok) note({"vizing_bound", true, ""});

    std::vector<VertexSet> dsets;
    if (cfg.all_min_d && prod.vertex_count() <= kAllMinimumMaxVertices)
        dsets = all_minimum_dominating_sets(prod);
    else
        dsets.push_back(dp.witness);
    r.d_sets = static_cast<long long>(dsets.size());

    for (std::size_t di = 0; di < dsets.size(); ++di) {
        PipelineOptions po;
        if (cfg.shuffle_seed)
            po.shuffle_seed = *cfg.shuffle_seed ^
                              detail::fnv1a64(r.g6_g + "|" + r.g6_h) ^
                              (0x9e3779b97f4a7c15ULL * (di + 1));
        try {
            ProofTrace tr = run_pipeline(g, gam, h, dsets[di], po);
            for (const Violation& v : tr.violations) note(v);
            for (const FiberTrace& f : tr.fibers)
                if (!f.s1.empty()) ++r.pair_fibers;
            if (tr.d_size > 0) r.overcount = std::max(r.overcount, Rational(tr.sum_label_classes, tr.d_size));
            if (traces_out) traces_out->push_back(std::move(tr));
        } catch (const std::exception& e) {
            note({"pipeline_exception", true, e.what()});
        }
    }

    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    return r;
}

struct CorpusSummary {
    long long g_count = 0, h_count = 0, instances = 0;
    long long d_sets_total = 0;
    long long critical_total = 0;
    long long observation_total = 0;
    std::map<std::string, long long> tag_counts;
    long long pair_fiber_total = 0;  // non-vacuity: fibers where stage 3 left pairs
    bool all_two_thirds = true;
    bool all_vizing = true;
    bool all_suen_tarr = true;
    bool all_survey = true;
    Rational min_ratio{0, 1};
    std::string min_ratio_g, min_ratio_h;
    Rational max_overcount{0, 1};
    std::string max_overcount_g, max_overcount_h;
    std::vector<std::string> skipped_g;  // rejected --g6 entries, with reasons
    long long solver_nodes_total = 0;    // not serialized
    double wall_ms_total = 0.0;          // not serialized
};

struct CorpusResult {
    std::vector<CorpusRecord> records;
    CorpusSummary summary;
};

inline CorpusSummary summarize(const std::vector<CorpusRecord>& records, long long g_count,
                               long long h_count, std::vector<std::string> skipped) {
    CorpusSummary s;
    s.g_count = g_count;
    s.h_count = h_count;
    s.instances = static_cast<long long>(records.size());
    s.skipped_g = std::move(skipped);
    bool first = true;
    for (const CorpusRecord& r : records) {
        s.d_sets_total += r.d_sets;
        s.critical_total += r.critical_count;
        s.observation_total += r.observation_count;
        for (const auto& [tag, c] : r.tag_counts) s.tag_counts[tag] += c;
        s.pair_fiber_total += r.pair_fibers;
        s.all_two_thirds = s.all_two_thirds && r.two_thirds_ok;
        s.all_vizing = s.all_vizing && r.vizing_ok;
        s.all_suen_tarr = s.all_suen_tarr && r.suen_tarr_ok;
        s.all_survey = s.all_survey && r.survey_ok;
        if (first || r.ratio < s.min_ratio ||
            (r.ratio == s.min_ratio && std::tie(r.g6_g, r.g6_h) <
                                           std::tie(s.min_ratio_g, s.min_ratio_h))) {
            s.min_ratio = r.ratio;
            s.min_ratio_g = r.g6_g;
            s.min_ratio_h = r.g6_h;
        }
        if (first || r.overcount > s.max_overcount ||
            (r.overcount == s.max_overcount && std::tie(r.g6_g, r.g6_h) <
                                                   std::tie(s.max_overcount_g, s.max_overcount_h))) {
            s.max_overcount = r.overcount;
            s.max_overcount_g = r.g6_g;
            s.max_overcount_h = r.g6_h;
        }
        s.solver_nodes_total += r.solver_nodes;
        s.wall_ms_total += r.wall_ms;
        first = false;
    }
    return s;
}

// Build the corpus and verify every instance.  Work is sharded by record
// index, so the result is independent of the job count.
inline CorpusResult run_corpus(const RunConfig& config, std::ostream* log = nullptr) {
    RunConfig cfg = config;
    validate_config(cfg);
    const int enum_cap = cfg.unsafe_caps ? 10 : 8;

    std::vector<Graph> gs;
    std::vector<std::string> skipped;
    if (cfg.g6_file) {
        for (const Graph& g : read_graph_file(*cfg.g6_file)) {
            if (g.vertex_count() > kGraph6MaxVertices) {
                skipped.push_back(emit_graph6(g) + ": too large");
            } else if (!is_connected(g)) {
                skipped.push_back(emit_graph6(g) + ": not connected");
            } else if (auto claw = find_claw(g)) {
                skipped.push_back(emit_graph6(g) + ": claw at " + claw->to_string());
            } else {
                gs.push_back(g);
            }
        }
        if (gs.empty()) throw input_error("run_corpus: no usable graphs in " + *cfg.g6_file);
    } else {
        for (int n = 1; n <= cfg.max_ng; ++n)
            for (const Graph& g : enumerate_connected_graphs(n, enum_cap))
                if (is_claw_free(g)) gs.push_back(g);
    }
    std::vector<Graph> hs;
    for (int n = 1; n <= cfg.max_nh; ++n)
        for (const Graph& h : enumerate_connected_graphs(n, enum_cap)) hs.push_back(h);

    if (log) {
        *log << "corpus: " << gs.size() << " claw-free G, " << hs.size() << " H, "
             << gs.size() * hs.size() << " instances, jobs=" << cfg.jobs << "\n";
        for (const std::string& s : skipped) *log << "skipped G: " << s << "\n";
    }

    const std::size_t total = gs.size() * hs.size();
    std::vector<CorpusRecord> records(total);
    const int jobs = static_cast<int>(std::min<std::size_t>(
        static_cast<std::size_t>(cfg.jobs), std::max<std::size_t>(total, 1)));
    auto worker = [&](int shard) {
        for (std::size_t idx = static_cast<std::size_t>(shard); idx < total;
             idx += static_cast<std::size_t>(jobs)) {
            const Graph& g = gs[idx / hs.size()];
            const Graph& h = hs[idx % hs.size()];
            CorpusRecord r = verify_pair(g, h, cfg);
            r.index = static_cast<long long>(idx);
            records[idx] = std::move(r);
        }
    };
    if (jobs <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
        for (std::thread& t : pool) t.join();
    }

    CorpusResult res;
    res.summary = summarize(records, static_cast<long long>(gs.size()),
                            static_cast<long long>(hs.size()), std::move(skipped));
    res.records = std::move(records);
    return res;
}

inline std::string tags_to_string(const std::map<std::string, long long>& tags) {
    std::string out;
    for (const auto& [tag, c] : tags) {
        if (!out.empty()) out += ';';
        out += tag + "=" + std::to_string(c);
    }
    return out;
}

inline const char* kCsvHeader =
    "index,g6_g,g6_h,n_g,n_h,gamma_g,gamma_h,gamma_gh,ratio_num,ratio_den,"
    "two_thirds_ok,vizing_ok,suen_tarr_ok,survey_ok,d_sets,pair_fibers,"
    "overcount_num,overcount_den,critical,observations,tags";

// graph6 text never contains ',' or ';' (its bytes are 63..126), so the CSV
// needs no quoting.
inline void emit_csv(const std::vector<CorpusRecord>& records, std::ostream& os) {
    os << kCsvHeader << "\n";
    for (const CorpusRecord& r : records) {
        os << r.index << ',' << r.g6_g << ',' << r.g6_h << ',' << r.n_g << ',' << r.n_h << ','
           << r.gamma_g << ',' << r.gamma_h << ',' << r.gamma_gh << ',' << r.ratio.numerator()
           << ',' << r.ratio.denominator() << ',' << int(r.two_thirds_ok) << ','
           << int(r.vizing_ok) << ',' << int(r.suen_tarr_ok) << ',' << int(r.survey_ok) << ','
           << r.d_sets << ',' << r.pair_fibers << ',' << r.overcount.numerator() << ','
           << r.overcount.denominator() << ',' << r.critical_count << ',' << r.observation_count
           << ',' << tags_to_string(r.tag_counts) << "\n";
    }
}

inline nlohmann::ordered_json record_to_json(const CorpusRecord& r) {
    nlohmann::ordered_json j;
    j["index"] = r.index;
    j["g6_g"] = r.g6_g;
    j["g6_h"] = r.g6_h;
    j["n_g"] = r.n_g;
    j["n_h"] = r.n_h;
    j["gamma_g"] = r.gamma_g;
    j["gamma_h"] = r.gamma_h;
    j["gamma_gh"] = r.gamma_gh;
    j["ratio"] = {r.ratio.numerator(), r.ratio.denominator()};
    j["two_thirds_ok"] = r.two_thirds_ok;
    j["vizing_ok"] = r.vizing_ok;
    j["suen_tarr_ok"] = r.suen_tarr_ok;
    j["survey_ok"] = r.survey_ok;
    j["d_sets"] = r.d_sets;
    j["pair_fibers"] = r.pair_fibers;
    j["overcount"] = {r.overcount.numerator(), r.overcount.denominator()};
    j["critical"] = r.critical_count;
    j["observations"] = r.observation_count;
    j["tags"] = r.tag_counts;
    return j;
}

inline nlohmann::ordered_json records_to_json(const std::vector<CorpusRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CorpusRecord& r : records) arr.push_back(record_to_json(r));
    return arr;
}

inline std::vector<CorpusRecord> load_report_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("load_report_json: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw io_error("load_report_json: " + path + ": " + std::string(e.what()));
    }
    std::vector<CorpusRecord> out;
    for (const auto& rj : j) {
        CorpusRecord r;
        r.index = rj.at("index").get<long long>();
        r.g6_g = rj.at("g6_g").get<std::string>();
        r.g6_h = rj.at("g6_h").get<std::string>();
        r.n_g = rj.at("n_g").get<int>();
        r.n_h = rj.at("n_h").get<int>();
        r.gamma_g = rj.at("gamma_g").get<int>();
        r.gamma_h = rj.at("gamma_h").get<int>();
        r.gamma_gh = rj.at("gamma_gh").get<int>();
        r.ratio = Rational(rj.at("ratio").at(0).get<long long>(),
                           rj.at("ratio").at(1).get<long long>());
        r.two_thirds_ok = rj.at("two_thirds_ok").get<bool>();
        r.vizing_ok = rj.at("vizing_ok").get<bool>();
        r.suen_tarr_ok = rj.at("suen_tarr_ok").get<bool>();
        r.survey_ok = rj.at("survey_ok").get<bool>();
        r.d_sets = rj.at("d_sets").get<long long>();
        r.pair_fibers = rj.at("pair_fibers").get<long long>();
        r.overcount = Rational(rj.at("overcount").at(0).get<long long>(),
                               rj.at("overcount").at(1).get<long long>());
        r.critical_count = rj.at("critical").get<long long>();
        r.observation_count = rj.at("observations").get<long long>();
        r.tag_counts = rj.at("tags").get<std::map<std::string, long long>>();
        out.push_back(std::move(r));
    }
    return out;
}

inline nlohmann::ordered_json summary_to_json(const CorpusSummary& s) {
    nlohmann::ordered_json j;
    j["g_count"] = s.g_count;
    j["h_count"] = s.h_count;
    j["instances"] = s.instances;
    j["d_sets_total"] = s.d_sets_total;
    j["critical_total"] = s.critical_total;
    j["observation_total"] = s.observation_total;
    j["tag_counts"] = s.tag_counts;
    j["pair_fiber_total"] = s.pair_fiber_total;
    j["all_two_thirds"] = s.all_two_thirds;
    j["all_vizing"] = s.all_vizing;
    j["all_suen_tarr"] = s.all_suen_tarr;
    j["all_survey"] = s.all_survey;
    j["min_ratio"] = rational_to_string(s.min_ratio);
    j["min_ratio_pair"] = {s.min_ratio_g, s.min_ratio_h};
    j["max_overcount"] = rational_to_string(s.max_overcount);
    j["max_overcount_pair"] = {s.max_overcount_g, s.max_overcount_h};
    j["skipped_g"] = s.skipped_g;
    return j;
}

// Worst instances first: smallest ratio, graph6 strings as tie-break.
inline std::vector<CorpusRecord> search_extremal(std::vector<CorpusRecord> records,
                                                 std::size_t top = 10) {
    std::sort(records.begin(), records.end(), [](const CorpusRecord& a, const CorpusRecord& b) {
        return std::tie(a.ratio, a.g6_g, a.g6_h) < std::tie(b.ratio, b.g6_g, b.g6_h);
    });
    if (records.size() > top) records.resize(top);
    return records;
}

// report.csv, report.json, summary.json under out_dir; contents depend only
// on the corpus and the configuration bounds, never on jobs or timing.
inline void write_report_files(const CorpusResult& res, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw io_error("write_report_files: cannot create " + out_dir + ": " + ec.message());
    auto open = [](const fs::path& p) {
        std::ofstream f(p);
        if (!f) throw io_error("write_report_files: cannot write " + p.string());
        return f;
    };
    {
        std::ofstream f = open(fs::path(out_dir) / "report.csv");
        emit_csv(res.records, f);
    }
    {
        std::ofstream f = open(fs::path(out_dir) / "report.json");
        f << records_to_json(res.records).dump(2) << "\n";
    }
    {
        std::ofstream f = open(fs::path(out_dir) / "summary.json");
        f << summary_to_json(res.summary).dump(2) << "\n";
    }
}

}  // namespace clawbound
