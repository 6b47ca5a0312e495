// recimap: analyze reciprocal interval maps and render their diagrams.
//
// Subcommands:
//   analyze <config.json>   run the full pipeline, emit a JSON report
//   render  <config.json>   emit an SVG figure
//   fixtures                list or emit the built-in example configs
//
// Exit codes: 0 success, 1 usage or input error, 2 unknown verdicts under
// --strict, 3 internal invariant violation.

#include "recimap/analysis.hpp"
#include "recimap/fixtures.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace recimap;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write to " + path);
    out << content;
}

std::vector<std::string> branch_labels(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('A' + i)));
    return labels;
}

int cmd_analyze(const std::string& config_path, AnalysisOptions opts, const std::string& out_path,
                bool strict) {
    if (const char* cap = std::getenv("RECIMAP_BRANCH_CAP")) opts.branch_cap = std::stoull(cap);
    const SystemConfig cfg = load_config(config_path);
    const AnalysisResult result = run_analysis(cfg, opts);
    write_output(out_path, report_to_json(cfg, result).dump(2) + "\n");
    return (strict && result.has_unknown) ? 2 : 0;
}

int cmd_render(const std::string& config_path, const std::string& figure, const std::string& out_path,
               int budget) {
    const SystemConfig cfg = load_config(config_path);
    std::string svg;
    if (figure == "map") {
        const ReciprocalSystem sys = build_system(cfg);
        svg = render_two_row(sys.T, branch_labels(sys.T.branches().size()));
    } else if (figure == "composition") {
        const ReciprocalSystem sys = build_system(cfg);
        svg = render_two_row(sys.F, branch_labels(sys.F.branches().size()));
    } else if (figure == "first-return") {
        const ReciprocalSystem sys = build_system(cfg);
        const ReturnMapResult r = first_return(sys, budget);
        svg = render_two_row(return_map_as_pamap(r), branch_labels(r.branches.size()));
    } else if (figure == "suspension") {
        svg = render_suspension(build_suspension(cfg));
    } else if (figure == "maharam") {
        const ReciprocalSystem sys = build_system(cfg);
        svg = render_maharam(extend(sys), -1, 1);
    } else {
        std::cerr << "unknown figure type: " << figure << "\n";
        return 1;
    }
    write_output(out_path, svg);
    return 0;
}

int cmd_fixtures(bool list, const std::string& emit_dir) {
    if (list) {
        for (const auto& cfg : builtin_fixtures()) std::cout << cfg.name << "\n";
        return 0;
    }
    if (emit_dir.empty()) {
        std::cerr << "fixtures: pass --list or --emit DIR\n";
        return 1;
    }
    std::filesystem::create_directories(emit_dir);
    for (const auto& cfg : builtin_fixtures()) {
        const auto path = std::filesystem::path(emit_dir) / (cfg.name + ".json");
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write to " + path.string());
        out << config_to_json(cfg).dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of reciprocal interval transformations"};
    app.require_subcommand(1);

    std::string config_path, out_path, figure = "map", emit_dir;
    bool strict = false, list = false;
    AnalysisOptions opts;

    auto* analyze = app.add_subcommand("analyze", "run the analysis pipeline on a system config");
    analyze->add_option("config", config_path, "system config JSON")->required();
    analyze->add_option("--budget", opts.budget, "max applications of F per refinement piece");
    analyze->add_option("--orbit-steps", opts.orbit_steps, "orbit length for level and ratio sampling");
    analyze->add_option("--probes", opts.probe_count, "number of ratio-set probe intervals (0: all branches)");
    analyze->add_option("--out", out_path, "report path (default stdout)");
    analyze->add_flag("--strict", strict, "exit 2 when any verdict is unknown");

    auto* render = app.add_subcommand("render", "render a figure for a system config");
    render->add_option("config", config_path, "system config JSON")->required();
    render->add_option("--figure", figure, "map|composition|first-return|suspension|maharam")
        ->required();
    render->add_option("--out", out_path, "SVG path (default stdout)");
    render->add_option("--budget", opts.budget, "first-return budget (first-return figure only)");

    auto* fixtures = app.add_subcommand("fixtures", "built-in example configs");
    fixtures->add_flag("--list", list, "list fixture names");
    fixtures->add_option("--emit", emit_dir, "write fixture configs into DIR");

    // The permutation convention, documented on the worked example: with
    // lengths (3/10, 1/2, 1/5) and permutation [2, 1, 0] the first interval
    // moves to the rightmost slot of the image row: permutation[i] is the
    // rank of interval i after the exchange.
    app.footer("Config schema: {name, field_d, lengths: [scalar], permutation: [rank],\n"
               "involution_s: scalar, zeta?: [[re, im]]} with scalars written as, e.g.,\n"
               "\"1/3\" or \"-1/4+1/4*sqrt(2)\". permutation[i] is the rank of interval i\n"
               "in the image row (0 = leftmost).");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("analyze")) return cmd_analyze(config_path, opts, out_path, strict);
        if (app.got_subcommand("render")) return cmd_render(config_path, figure, out_path, opts.budget);
        if (app.got_subcommand("fixtures")) return cmd_fixtures(list, emit_dir);
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
