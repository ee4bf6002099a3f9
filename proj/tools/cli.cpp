#include "cli.hpp"

#include "result.hpp"

#include <dc3col.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace dc::cli {

namespace {

struct GraphDeleter {
    void operator()(dc_graph* g) const { dc_graph_free(g); }
};
using GraphHandle = std::unique_ptr<dc_graph, GraphDeleter>;

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

int input_error(std::ostream& err, const std::string& what, dc_status status) {
    err << "error: " << what << ": " << dc_status_name(status) << " (" << dc_last_error() << ")\n";
    return 2;
}

GraphHandle load_graph(const std::string& path, std::ostream& err, int& rc) {
    dc_graph* g = nullptr;
    dc_status st = dc_graph_read_dimacs(path.c_str(), &g);
    if (st != DC_OK) {
        rc = input_error(err, "cannot load '" + path + "'", st);
        return nullptr;
    }
    rc = 0;
    return GraphHandle(g);
}

int emit(std::ostream& out, const RunResult& r) {
    out << write_result(r) << '\n';
    return exit_code_for_verdict(r.verdict);
}

std::vector<std::vector<int32_t>> components_of(const dc_graph* g) {
    int32_t n = dc_graph_vertex_count(g);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<std::vector<int32_t>> comps;
    std::vector<int32_t> nbuf(static_cast<size_t>(n));
    for (int32_t s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int32_t> comp, stack{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int32_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            int32_t len = 0;
            dc_graph_neighbors(g, v, nbuf.data(), n, &len);
            for (int32_t i = 0; i < len; ++i)
                if (!seen[static_cast<size_t>(nbuf[i])]) {
                    seen[static_cast<size_t>(nbuf[i])] = 1;
                    stack.push_back(nbuf[i]);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

int cmd_recognize(const std::string& file, std::ostream& out, std::ostream& err) {
    int rc = 0;
    GraphHandle g = load_graph(file, err, rc);
    if (!g) return rc;
    int32_t n = dc_graph_vertex_count(g.get());
    std::vector<int32_t> order(static_cast<size_t>(n)), witness(static_cast<size_t>(n));
    int found = 0;
    auto start = std::chrono::steady_clock::now();
    dc_status st = dc_find_mno(g.get(), &found, order.data(), witness.data());
    double elapsed = ms_since(start);
    if (st != DC_OK) return input_error(err, "recognize failed", st);

    RunResult r;
    r.command = "recognize";
    r.input = file;
    r.timing_ms = elapsed;
    if (found) {
        r.verdict = "dually_chordal";
        r.order = std::vector<int>(order.begin(), order.end());
        r.witness = std::vector<int>(witness.begin(), witness.end());
    } else {
        r.verdict = "not_dually_chordal";
        r.detail = "no maximum neighbourhood ordering";
    }
    return emit(out, r);
}

int color_one(const dc_graph* g, bool checked, dc_color_verdict& verdict, std::vector<int32_t>& colors,
              double& elapsed_ms, std::ostream& err, int& rc) {
    colors.assign(static_cast<size_t>(dc_graph_vertex_count(g)), 0);
    auto start = std::chrono::steady_clock::now();
    dc_status st = dc_three_color(g, checked ? 1 : 0, &verdict, colors.data());
    elapsed_ms = ms_since(start);
    if (st != DC_OK) {
        rc = input_error(err, "color failed", st);
        return rc;
    }
    rc = 0;
    return 0;
}

int cmd_color(const std::string& file, bool unchecked, bool per_component, std::ostream& out,
              std::ostream& err) {
    int rc = 0;
    GraphHandle g = load_graph(file, err, rc);
    if (!g) return rc;

    RunResult r;
    r.command = "color";
    r.input = file;

    if (!per_component) {
        dc_color_verdict verdict;
        std::vector<int32_t> colors;
        double elapsed = 0;
        if (color_one(g.get(), !unchecked, verdict, colors, elapsed, err, rc) != 0) return rc;
        r.timing_ms = elapsed;
        if (verdict == DC_COLORED) {
            r.verdict = "colorable";
            r.colors = std::vector<int>(colors.begin(), colors.end());
        } else {
            r.verdict = verdict == DC_NOT_APPLICABLE ? "not_applicable" : "not_3_colorable";
        }
        return emit(out, r);
    }

    // Colour every connected component independently and merge.
    int32_t n = dc_graph_vertex_count(g.get());
    std::vector<int> merged(static_cast<size_t>(n), 0);
    double total_ms = 0;
    std::string verdict = "colorable";
    std::vector<int32_t> nbuf(static_cast<size_t>(n));
    for (const auto& comp : components_of(g.get())) {
        std::vector<int32_t> index(static_cast<size_t>(n), -1);
        for (size_t i = 0; i < comp.size(); ++i) index[static_cast<size_t>(comp[i])] = static_cast<int32_t>(i);
        std::vector<int32_t> endpoints;
        for (int32_t v : comp) {
            int32_t len = 0;
            dc_graph_neighbors(g.get(), v, nbuf.data(), n, &len);
            for (int32_t i = 0; i < len; ++i)
                if (v < nbuf[i]) {
                    endpoints.push_back(index[static_cast<size_t>(v)]);
                    endpoints.push_back(index[static_cast<size_t>(nbuf[i])]);
                }
        }
        dc_graph* sub = nullptr;
        dc_status st = dc_graph_from_edges(static_cast<int32_t>(comp.size()), endpoints.data(),
                                           static_cast<int64_t>(endpoints.size() / 2), &sub);
        if (st != DC_OK) return input_error(err, "component extraction failed", st);
        GraphHandle sub_handle(sub);
        dc_color_verdict cv;
        std::vector<int32_t> colors;
        double elapsed = 0;
        if (color_one(sub, !unchecked, cv, colors, elapsed, err, rc) != 0) return rc;
        total_ms += elapsed;
        if (cv == DC_NOT_APPLICABLE) {
            verdict = "not_applicable";
            break;
        }
        if (cv == DC_NOT_THREE_COLORABLE) {
            verdict = "not_3_colorable";
            break;
        }
        for (size_t i = 0; i < comp.size(); ++i) merged[static_cast<size_t>(comp[i])] = colors[i];
    }
    r.timing_ms = total_ms;
    r.verdict = verdict;
    if (verdict == "colorable") r.colors = merged;
    return emit(out, r);
}

int cmd_check(const std::string& file, const std::string& property, std::ostream& out,
              std::ostream& err) {
    int rc = 0;
    GraphHandle g = load_graph(file, err, rc);
    if (!g) return rc;
    int holds = 0;
    char* report = nullptr;
    auto start = std::chrono::steady_clock::now();
    dc_status st = dc_check_property(g.get(), property.c_str(), &holds, &report);
    double elapsed = ms_since(start);
    if (st != DC_OK) return input_error(err, "check failed", st);

    RunResult r;
    r.command = "check";
    r.input = file;
    r.verdict = holds ? "holds" : "violated";
    r.extra.emplace_back("property", property);
    r.report = nlohmann::ordered_json::parse(report);
    dc_text_free(report);
    r.timing_ms = elapsed;
    return emit(out, r);
}

int cmd_gen(const std::string& family, int n, double density, std::uint64_t seed,
            const std::string& output, std::ostream& out, std::ostream& err) {
    dc_graph* g = nullptr;
    auto start = std::chrono::steady_clock::now();
    dc_status st = dc_generate(family.c_str(), n, density, seed, &g);
    double elapsed = ms_since(start);
    if (st != DC_OK) return input_error(err, "generation failed", st);
    GraphHandle handle(g);
    st = dc_graph_write_dimacs(g, output.c_str());
    if (st != DC_OK) return input_error(err, "cannot write '" + output + "'", st);

    RunResult r;
    r.command = "gen";
    r.verdict = "generated";
    r.extra.emplace_back("family", family);
    r.extra.emplace_back("n", dc_graph_vertex_count(g));
    r.extra.emplace_back("m", dc_graph_edge_count(g));
    r.extra.emplace_back("density", density);
    r.extra.emplace_back("output", output);
    r.timing_ms = elapsed;
    r.seed = seed;
    return emit(out, r);
}

int cmd_reduce(const std::string& file, const std::string& output, std::ostream& out,
               std::ostream& err) {
    int rc = 0;
    GraphHandle g = load_graph(file, err, rc);
    if (!g) return rc;
    dc_graph* reduced = nullptr;
    auto start = std::chrono::steady_clock::now();
    dc_status st = dc_add_universal_vertex(g.get(), &reduced);
    double elapsed = ms_since(start);
    if (st != DC_OK) return input_error(err, "reduce failed", st);
    GraphHandle handle(reduced);
    st = dc_graph_write_dimacs(reduced, output.c_str());
    if (st != DC_OK) return input_error(err, "cannot write '" + output + "'", st);

    RunResult r;
    r.command = "reduce";
    r.input = file;
    r.verdict = "reduced";
    r.extra.emplace_back("n", dc_graph_vertex_count(reduced));
    r.extra.emplace_back("m", dc_graph_edge_count(reduced));
    r.extra.emplace_back("output", output);
    r.timing_ms = elapsed;
    return emit(out, r);
}

int cmd_bench(const std::string& family, const std::vector<int>& sizes, double density,
              std::uint64_t seed, int repeats, std::ostream& out, std::ostream& err) {
    out << "n,m,time_ms\n";
    for (size_t i = 0; i < sizes.size(); ++i) {
        dc_graph* g = nullptr;
        dc_status st = dc_generate(family.c_str(), sizes[i], density, seed + i, &g);
        if (st != DC_OK) return input_error(err, "generation failed", st);
        GraphHandle handle(g);
        int32_t n = dc_graph_vertex_count(g);
        std::vector<int32_t> colors(static_cast<size_t>(n));
        std::vector<double> times;
        dc_color_verdict verdict;
        for (int rep = 0; rep < repeats; ++rep) {
            auto start = std::chrono::steady_clock::now();
            st = dc_three_color(g, 0, &verdict, colors.data());
            times.push_back(ms_since(start));
            if (st != DC_OK) return input_error(err, "coloring failed", st);
        }
        std::sort(times.begin(), times.end());
        double median = times[times.size() / 2];
        out << n << ',' << dc_graph_edge_count(g) << ',' << median << '\n';
    }
    return 0;
}

std::vector<int> parse_sizes(const std::string& arg) {
    std::vector<int> sizes;
    size_t pos = 0;
    while (pos <= arg.size()) {
        size_t comma = arg.find(',', pos);
        std::string item =
            comma == std::string::npos ? arg.substr(pos) : arg.substr(pos, comma - pos);
        if (!item.empty()) sizes.push_back(std::stoi(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return sizes;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"3-colouring, recognition and verification for dually chordal graphs"};
    app.require_subcommand(1);

    std::string file, output, property, family = "connectedRandom", sizes_arg;
    bool unchecked = false, per_component = false;
    int n = 0, repeats = 5;
    double density = 0.3;
    std::uint64_t seed = 1;

    auto* recognize = app.add_subcommand("recognize", "decide dual chordality, print a witness");
    recognize->add_option("file", file, "DIMACS input")->required();

    auto* color = app.add_subcommand("color", "3-colour the graph");
    color->add_option("file", file, "DIMACS input")->required();
    color->add_flag("--unchecked", unchecked, "skip the blocks-locally-connected pre-check");
    color->add_flag("--per-component", per_component, "colour each connected component separately");

    auto* check = app.add_subcommand("check", "run an oracle verification");
    check->add_option("file", file, "DIMACS input")->required();
    check->add_option("--property", property, "tree|theorem3|lemma3|lemma4|construction")
        ->required()
        ->check(CLI::IsMember({"tree", "theorem3", "lemma3", "lemma4", "construction"}));

    auto* gen = app.add_subcommand("gen", "generate a corpus graph");
    gen->add_option("--family", family,
                    "duallyChordal|k4FreeDuallyChordal|locallyConnectedBlocks|connectedRandom")
        ->required()
        ->check(CLI::IsMember({"duallyChordal", "k4FreeDuallyChordal", "locallyConnectedBlocks",
                               "connectedRandom"}));
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--density", density, "edge-probability parameter in [0,1]");
    gen->add_option("--seed", seed, "64-bit seed");
    gen->add_option("-o,--output", output, "output file")->required();

    auto* reduce = app.add_subcommand("reduce", "append a universal vertex");
    reduce->add_option("file", file, "DIMACS input")->required();
    reduce->add_option("-o,--output", output, "output file")->required();

    auto* bench = app.add_subcommand("bench", "time the colouring at increasing sizes (CSV)");
    bench->add_option("--family", family, "generator family")
        ->check(CLI::IsMember({"duallyChordal", "k4FreeDuallyChordal", "locallyConnectedBlocks",
                               "connectedRandom"}));
    bench->add_option("--sizes", sizes_arg, "comma-separated instance sizes")->required();
    bench->add_option("--density", density, "edge-probability parameter in [0,1]");
    bench->add_option("--seed", seed, "64-bit seed");
    bench->add_option("--repeats", repeats, "runs per size; the median is reported");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (recognize->parsed()) return cmd_recognize(file, out, err);
        if (color->parsed()) return cmd_color(file, unchecked, per_component, out, err);
        if (check->parsed()) return cmd_check(file, property, out, err);
        if (gen->parsed()) return cmd_gen(family, n, density, seed, output, out, err);
        if (reduce->parsed()) return cmd_reduce(file, output, out, err);
        if (bench->parsed()) {
            if (bench->count("--family") == 0) family = "locallyConnectedBlocks";
            return cmd_bench(family, parse_sizes(sizes_arg), density, seed, repeats, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "no subcommand given\n";
    return 2;
}

} // namespace dc::cli
