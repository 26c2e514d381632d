#include "tckit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>

#include "tckit/carving.hpp"
#include "tckit/census.hpp"
#include "tckit/immersion.hpp"
#include "tckit/smoothing.hpp"
#include "tckit/surgery.hpp"
#include "tckit/tangles.hpp"

namespace tckit::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitCapacity = 3;

struct Options {
    std::string format = "human";
    int theta = 2;
    int xi = 3;
    int max_vertices = 4;
    int max_edges = 6;
    int loop_cap = 3;
    int parallel_cap = 3;
    std::uint64_t seed = 20240817;
    std::string graph_file;
    std::string second_file;
    std::string output_file;
    bool machine() const { return format == "machine"; }
};

int cmd_width(const Options& opt, std::ostream& out) {
    MultiGraph g = load_graph_file(opt.graph_file);
    DualityReport r = verify_duality(g);
    int tcw = tree_cut_width_of_graph(g);
    if (opt.machine()) {
        out << duality_report_line(g, r) << " tcw=" << tcw << '\n';
    } else {
        out << "tctw=" << r.tctw << " cw=" << r.cw << " tcw=" << tcw << " mu=" << r.mu
            << " duality=" << (r.pass() ? "PASS" : "FAIL") << '\n';
    }
    return r.pass() ? kExitOk : kExitPropertyFailure;
}

int cmd_smooth(const Options& opt, std::ostream& out, std::ostream& err) {
    MultiGraph g = load_graph_file(opt.graph_file);
    RefineResult r = smooth_refine(TreeCutDecomposition::single_bag(g), opt.theta);
    if (is_theta_smooth(r.decomposition, opt.theta)) {
        err << "internal error: refined decomposition is not smooth\n";
        return kExitPropertyFailure;
    }
    std::string text = format_decomposition(r.decomposition);
    if (!opt.output_file.empty()) {
        std::ofstream f(opt.output_file);
        f << text;
    } else {
        out << text;
    }
    out << "iterations=" << r.iterations << " signature=" << r.final_signature.to_string() << '\n';
    return kExitOk;
}

int cmd_immerse(const Options& opt, std::ostream& out) {
    MultiGraph g = load_graph_file(opt.graph_file);
    MultiGraph h = load_graph_file(opt.second_file);
    auto witness = find_immersion(g, h);
    if (witness) {
        out << "IMMERSION FOUND\n" << format_witness(*witness);
        return kExitOk;
    }
    out << "NO IMMERSION\n";
    if (auto k = degree_condition_violation(g, h))
        out << "degree condition fails at k=" << *k << '\n';
    return kExitOk;
}

int cmd_verify_all(const Options& opt, std::ostream& out, const ImmersionOracle& oracle) {
    VerifyOptions vo;
    vo.max_vertices = opt.max_vertices;
    vo.max_edges = opt.max_edges;
    vo.loop_cap = opt.loop_cap;
    vo.parallel_cap = opt.parallel_cap;
    vo.xi = opt.xi;
    vo.seed = opt.seed;
    // Oracle-agreement bounds scale with the census flags.
    vo.host_max_vertices = std::min(opt.max_vertices + 1, 5);
    vo.host_max_edges = std::min(opt.max_edges + 1, 7);
    vo.pattern_max_vertices = std::min(opt.max_vertices, 3);
    vo.pattern_max_edges = std::min(opt.max_edges, 4);
    auto results = run_verification(vo, oracle);
    bool all = true;
    for (size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        all = all && r.pass;
        if (opt.machine()) {
            out << (i + 1) << ' ' << (r.pass ? "PASS" : "FAIL") << ' ' << r.checks << '\n';
        } else {
            out << "criterion " << (i + 1) << " [" << r.name << "]: " << (r.pass ? "PASS" : "FAIL")
                << " (" << r.checks << " checks)";
            if (!r.detail.empty()) out << ' ' << r.detail;
            out << '\n';
        }
    }
    return all ? kExitOk : kExitPropertyFailure;
}

int cmd_census_count(const Options& opt, std::ostream& out) {
    // Pattern defaults to the triangle.
    MultiGraph h(3, {{0, 1}, {1, 2}, {0, 2}});
    if (!opt.graph_file.empty()) h = load_graph_file(opt.graph_file);
    int d = h.max_degree();
    std::vector<long long> counts(opt.max_edges + 1, 0);
    for (const auto& g : census_up_to(opt.max_vertices, opt.max_edges, false, opt.loop_cap,
                                      opt.parallel_cap)) {
        bool isolated = false;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 0) isolated = true;
        if (isolated || g.edge_count() == 0) continue;
        bool blocks_ok = true;
        for (VertexSet comp : bridges_and_2ec_components(g).components) {
            MultiGraph sub = g.induced(comp);
            for (VertexId u = 0; u < sub.vertex_count() && blocks_ok; ++u)
                for (VertexId v = u + 1; v < sub.vertex_count() && blocks_ok; ++v)
                    if (edge_disjoint_path_count(sub, u, v) < d) blocks_ok = false;
        }
        if (!blocks_ok) continue;
        if (find_immersion(g, h)) continue;
        ++counts[g.edge_count()];
    }
    for (int m = 1; m <= opt.max_edges; ++m) out << "m=" << m << " count=" << counts[m] << '\n';
    return kExitOk;
}

int cmd_duality_report(const Options& opt, std::ostream& out) {
    bool all = true;
    for (const auto& g : census_up_to(opt.max_vertices, opt.max_edges, true, opt.loop_cap,
                                      opt.parallel_cap)) {
        DualityReport r = verify_duality(g);
        out << duality_report_line(g, r) << '\n';
        all = all && r.pass();
    }
    return all ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const ImmersionOracle& oracle) {
    CLI::App app{"tree-cut decompositions, edge-tangles and immersion tools"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "human|machine")
            ->envname("TCKIT_FORMAT")
            ->check(CLI::IsMember({"human", "machine"}));
        cmd->add_option("--theta", opt.theta, "tangle / smoothing order")->envname("TCKIT_THETA");
        cmd->add_option("--xi", opt.xi, "niceness bound")->envname("TCKIT_XI");
        cmd->add_option("--max-vertices", opt.max_vertices)->envname("TCKIT_MAX_VERTICES");
        cmd->add_option("--max-edges", opt.max_edges)->envname("TCKIT_MAX_EDGES");
        cmd->add_option("--loops", opt.loop_cap, "loop cap per vertex (0 = loopless)")
            ->envname("TCKIT_LOOPS");
        cmd->add_option("--parallel-cap", opt.parallel_cap)->envname("TCKIT_PARALLEL_CAP");
        cmd->add_option("--seed", opt.seed)->envname("TCKIT_SEED");
    };

    CLI::App* width = app.add_subcommand("width", "width parameters and duality verdicts");
    width->add_option("graph", opt.graph_file)->required();
    add_common(width);

    CLI::App* smooth = app.add_subcommand("smooth", "write a theta-smooth decomposition");
    smooth->add_option("graph", opt.graph_file)->required();
    smooth->add_option("-o,--output", opt.output_file, "decomposition file");
    add_common(smooth);

    CLI::App* immerse = app.add_subcommand("immerse", "immersion search");
    immerse->add_option("host", opt.graph_file)->required();
    immerse->add_option("pattern", opt.second_file)->required();
    add_common(immerse);

    CLI::App* verify = app.add_subcommand("verify-all", "census-wide property battery");
    add_common(verify);

    CLI::App* countc = app.add_subcommand("census-count", "immersion-free census counts per edge count");
    countc->add_option("pattern", opt.graph_file, "pattern graph file (default: triangle)");
    add_common(countc);

    CLI::App* report = app.add_subcommand("duality-report", "machine-readable duality lines");
    add_common(report);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << e.what() << '\n';
        return kExitParseError;
    }

    try {
        if (width->parsed()) return cmd_width(opt, out);
        if (smooth->parsed()) return cmd_smooth(opt, out, err);
        if (immerse->parsed()) return cmd_immerse(opt, out);
        if (verify->parsed()) return cmd_verify_all(opt, out, oracle);
        if (countc->parsed()) return cmd_census_count(opt, out);
        if (report->parsed()) return cmd_duality_report(opt, out);
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParseError;
    } catch (const capacity_error& e) {
        err << "capacity error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kExitParseError;
    }
    return kExitParseError;
}

}  // namespace tckit::cli
