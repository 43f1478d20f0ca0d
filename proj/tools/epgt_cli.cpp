// Command-line driver. Exit codes: 0 success, 1 negative verdict, 2/3
// search exhausted/timed out, 64 usage, 65 malformed input, 66 unreadable
// or unwritable file.

#include "epgt/classify.hpp"
#include "epgt/coloring.hpp"
#include "epgt/constructions.hpp"
#include "epgt/helly.hpp"
#include "epgt/remarks.hpp"
#include "epgt/render.hpp"
#include "epgt/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace epgt;

namespace {

constexpr int kUsage = 64;
constexpr int kDataError = 65;
constexpr int kFileError = 66;

struct Exit {
    int code;
    std::string message;
};

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Exit{kFileError, "cannot read " + path};
    return in;
}

// Writes to `path`, or stdout when it is empty or "-".
void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out || !(out << text)) throw Exit{kFileError, "cannot write " + path};
}

Representation load_paths(const std::string& path) {
    auto in = open_in(path);
    return read_representation(in);
}

SimpleGraph load_graph(const std::string& path) {
    auto in = open_in(path);
    return read_graph(in);
}

SearchBounds parse_window(const std::string& text) {
    int w = 0, h = 0;
    char x = 0;
    std::istringstream is(text);
    if (!(is >> w >> x >> h) || x != 'x' || !is.eof() || w < 1 || h < 1) throw Exit{kUsage, "window must look like WxH, got '" + text + "'"};
    return SearchBounds{w, h};
}

std::string paths_text(const Representation& rep) {
    std::ostringstream os;
    write_representation(os, rep);
    return os.str();
}

// Index of the path with file id `id`.
int index_of(const Representation& rep, int id) {
    for (std::size_t i = 0; i < rep.size(); ++i)
        if ((rep.labels ? (*rep.labels)[i] : static_cast<int>(i)) == id) return static_cast<int>(i);
    throw Exit{kUsage, "no path with id " + std::to_string(id)};
}

int id_of(const Representation& rep, int index) { return rep.labels ? (*rep.labels)[static_cast<std::size_t>(index)] : index; }

struct Options {
    int threads = 1;
    std::string paths, graph, out, window, name;
    std::string graph_out;
    std::vector<int> ids;
    int k = 4, n = 1, count = 10, width = 8, height = 8, max_bends = 1, max_seg = 2;
    std::uint64_t seed = 1;
    double timeout = 0;
    bool labeled = false, explain = false, strong = false, no_grid = false;
    double scale = 40;
};

int construct(const Options& o, const std::string& kind) {
    Representation rep;
    std::optional<SimpleGraph> target;
    if (kind == "sun") {
        rep = sun_representation(o.k);
        target = sun_graph(o.k);
    } else if (kind == "k2n") {
        rep = k2n_representation(o.n);
        target = complete_bipartite(2, o.n);
    } else if (kind == "claw") {
        rep = claw_witness();
    } else if (kind == "gallery") {
        rep = gallery(o.name);
    } else if (kind == "random") {
        rep = random_b1_family(o.count, o.width, o.height, o.seed);
    } else {
        throw Exit{kUsage, "unknown construction '" + kind + "'; use sun, k2n, claw, gallery or random"};
    }
    if (!target) {
        // Without a named target, the intersection graph is the target.
        target = intersection_graph(rep);
        if (rep.labels) target = target->relabeled(*rep.labels);
    }
    emit(o.out, paths_text(rep));
    if (!o.graph_out.empty()) {
        std::ostringstream os;
        write_graph(os, *target);
        emit(o.graph_out, os.str());
    }
    const auto box = rep.bounding_box();
    std::cerr << rep.size() << " paths, bounding box " << box.rows() << " rows x " << box.columns() << " columns\n";
    return 0;
}

int validate_cmd(const Options& o) {
    const auto rep = load_paths(o.paths);
    const auto g = load_graph(o.graph);
    const auto r = validate(rep, g, o.max_bends, o.labeled ? LabelMode::Labeled : LabelMode::Unlabeled);
    std::cout << r.text() << r.key_values();
    return r.passed() ? 0 : 1;
}

std::vector<int> selected(const Representation& rep, const std::vector<int>& ids) {
    std::vector<int> out;
    if (ids.empty())
        for (std::size_t i = 0; i < rep.size(); ++i) out.push_back(static_cast<int>(i));
    for (int id : ids) out.push_back(index_of(rep, id));
    return out;
}

int classify_clique_cmd(const Options& o) {
    const auto rep = load_paths(o.paths);
    const auto c = classify_maximal_clique(rep, selected(rep, o.ids));
    std::cout << c.describe() << "\n";
    return 0;
}

int classify_c4_cmd(const Options& o) {
    const auto rep = load_paths(o.paths);
    std::vector<std::array<int, 4>> cycles;
    if (o.ids.empty()) {
        for (const auto& q : chordless_4cycles(intersection_graph(rep))) cycles.push_back(q);
        if (cycles.empty()) std::cout << "no chordless 4-cycle\n";
    } else {
        if (o.ids.size() != 4) throw Exit{kUsage, "--ids needs exactly four ids in cycle order"};
        cycles.push_back({index_of(rep, o.ids[0]), index_of(rep, o.ids[1]), index_of(rep, o.ids[2]), index_of(rep, o.ids[3])});
    }
    for (const auto& q : cycles) {
        const auto& P = rep.paths;
        const auto c = classify_c4(P[q[0]], P[q[1]], P[q[2]], P[q[3]]);
        std::cout << "P" << id_of(rep, q[0]) << "-P" << id_of(rep, q[1]) << "-P" << id_of(rep, q[2]) << "-P" << id_of(rep, q[3]) << ": "
                  << c.describe() << "\n";
    }
    return 0;
}

int color_cmd(const Options& o) {
    const auto rep = load_paths(o.paths);
    const auto c = clique_color(rep);
    if (o.explain) {
        std::cout << "# phase 1\n";
        for (const auto& lc : line_colorings(rep)) {
            std::cout << to_string(lc.line) << ":";
            for (std::size_t j = 0; j < lc.paths.size(); ++j)
                std::cout << " P" << id_of(rep, lc.paths[j]) << "[" << lc.segments[j].lo() << "," << lc.segments[j].hi() << "]=" << letter(lc.colors[j]);
            std::cout << "\n";
        }
        std::cout << "# recoloring\n";
        if (c.events.empty()) std::cout << "none\n";
        // Replay the events to show the claws each one breaks.
        const CliqueIndex index(rep);
        auto state = c.initial;
        auto claws_text = [&](const std::vector<std::vector<int>>& claws) {
            std::string s;
            for (const auto& claw : claws) {
                s += " {";
                for (std::size_t j = 0; j < claw.size(); ++j) s += (j ? "," : "") + std::string("P") + std::to_string(id_of(rep, claw[j]));
                s += "}";
            }
            return s.empty() ? std::string(" none") : s;
        };
        for (const auto& ev : c.events) {
            std::cout << "at " << to_string(ev.x) << ": monochromatic regular claws" << claws_text(monocolored_regular_claws_at(rep, index, state, ev.x))
                      << "\n  flip";
            for (std::size_t k = 0; k < ev.paths.size(); ++k) {
                std::cout << " P" << id_of(rep, ev.paths[k]) << " " << direction_letter(ev.flipped[k]) << " " << to_string(ev.before[k]) << "->"
                          << to_string(ev.after[k]);
                state[static_cast<std::size_t>(ev.paths[k])] = ev.after[k];
            }
            std::cout << "\n  afterwards" << claws_text(monocolored_regular_claws_at(rep, index, state, ev.x)) << "\n";
        }
        std::cout << "# colors\n";
    }
    for (std::size_t i = 0; i < rep.size(); ++i)
        std::cout << "P" << id_of(rep, static_cast<int>(i)) << " " << c.index[i] << " " << to_string(c.triples[i]) << "\n";
    const bool ok = verify_clique_coloring(rep, c.index);
    std::cout << "colors=" << c.distinct_colors() << "\nrecolorings=" << c.events.size() << "\nverified=" << (ok ? 1 : 0) << "\n";
    return ok ? 0 : 1;
}

int helly_cmd(const Options& o) {
    auto b = parse_window(o.window);
    b.max_bends = o.max_bends;
    b.max_seg_len = o.max_seg;
    const auto r = helly_violation_search(b, o.threads);
    std::cout << r.report().text();
    std::cout << "seconds=" << r.seconds << "\n";
    auto dump = [](const char* what, const PathFamily& f) {
        std::cout << "# " << what << "\n" << paths_text(Representation{f.members, std::nullopt});
    };
    if (r.helly_witness) dump("3-intersecting, empty core", *r.helly_witness);
    if (o.strong && r.strong_witness) dump("no 3 members reach the core", *r.strong_witness);
    return r.helly_witness || (o.strong && r.strong_witness) ? 1 : 0;
}

int search_cmd(const Options& o) {
    auto b = parse_window(o.window);
    b.max_bends = o.max_bends;
    const auto g = load_graph(o.graph);
    SearchOptions opts;
    opts.threads = o.threads;
    if (o.timeout > 0) opts.timeout_seconds = o.timeout;
    const auto r = find_representation(g, b, opts);
    std::cerr << "status=" << to_string(r.status) << " nodes=" << r.nodes << " seconds=" << r.seconds << " bounds=" << r.bounds << "\n";
    if (r.status == SearchStatus::Found) {
        emit(o.out, paths_text(*r.representation));
        return 0;
    }
    std::cout << to_string(r.status) << " within " << r.bounds << "\n";
    return r.status == SearchStatus::Exhausted ? 2 : 3;
}

int report_cmd(const PropertyReport& r) {
    std::cout << r.text();
    return r.passed ? 0 : 1;
}

int render_cmd(const Options& o) {
    RenderOptions ro;
    ro.grid = !o.no_grid;
    ro.scale = o.scale;
    emit(o.out, render_svg(load_paths(o.paths), ro));
    return 0;
}

int exit_code(ErrorCode c) {
    switch (c) {
    case ErrorCode::ParseError: return kDataError;
    case ErrorCode::BadParameter:
    case ErrorCode::BoundsTooLarge:
    case ErrorCode::WindowTooLarge:
    case ErrorCode::SizeLimitExceeded:
    case ErrorCode::UnknownSubtype: return kUsage;
    default: return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-bend path representations on the triangular grid"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--threads", o.threads, "Worker threads for searches")->check(CLI::Range(1, 256));

    std::string kind;
    auto* construct_c = app.add_subcommand("construct", "Write a built-in representation in path file format");
    construct_c->add_option("kind", kind, "sun | k2n | claw | gallery | random")->required();
    construct_c->add_option("--k", o.k, "Sun size");
    construct_c->add_option("--n", o.n, "Leaves of K_{2,n}");
    construct_c->add_option("--name", o.name, "Gallery instance");
    construct_c->add_option("--count", o.count, "Random family size");
    construct_c->add_option("--width", o.width, "Random window width");
    construct_c->add_option("--height", o.height, "Random window height");
    construct_c->add_option("--seed", o.seed, "Random seed");
    construct_c->add_option("-o,--out", o.out, "Output path file (default stdout)");
    construct_c->add_option("--graph", o.graph_out, "Also write the target graph here");

    auto* validate_c = app.add_subcommand("validate", "Check a representation against a graph");
    validate_c->add_option("--paths", o.paths)->required();
    validate_c->add_option("--graph", o.graph)->required();
    validate_c->add_option("--max-bends", o.max_bends)->check(CLI::NonNegativeNumber);
    validate_c->add_flag("--labeled", o.labeled, "Match path ids to graph vertices");

    auto* clique_c = app.add_subcommand("classify-clique", "Classify the selected paths as a clique");
    clique_c->add_option("--paths", o.paths)->required();
    clique_c->add_option("--ids", o.ids, "Path ids (default: all)")->delimiter(',');

    auto* c4_c = app.add_subcommand("classify-c4", "Classify chordless 4-cycles");
    c4_c->add_option("--paths", o.paths)->required();
    c4_c->add_option("--ids", o.ids, "Four path ids in cycle order (default: every chordless 4-cycle)")->delimiter(',');

    auto* color_c = app.add_subcommand("color", "Clique-color a single-bend representation");
    color_c->add_option("--paths", o.paths)->required();
    color_c->add_flag("--explain", o.explain, "Show line colorings and recoloring events");

    auto* helly_c = app.add_subcommand("helly-check", "Search four-member families for Helly violations");
    helly_c->add_option("--window", o.window, "WxH")->required();
    helly_c->add_option("--max-seg", o.max_seg, "Segment length limit")->required();
    helly_c->add_option("--max-bends", o.max_bends);
    helly_c->add_flag("--strong", o.strong, "Also fail on strong Helly violations");

    auto* search_c = app.add_subcommand("search", "Look for a representation of a graph in a window");
    search_c->add_option("--graph", o.graph)->required();
    search_c->add_option("--window", o.window, "WxH")->required();
    search_c->add_option("--max-bends", o.max_bends);
    search_c->add_option("--timeout", o.timeout, "Seconds")->check(CLI::NonNegativeNumber);
    search_c->add_option("-o,--out", o.out, "Output path file (default stdout)");

    auto* remarks_c = app.add_subcommand("remarks", "Exhaustive pairwise checks in a window");
    remarks_c->add_option("--window", o.window, "WxH")->required();

    auto* lemmas_c = app.add_subcommand("lemmas", "Gap checks behind the Helly argument");
    lemmas_c->add_option("--window", o.window, "WxH")->required();

    auto* k27_c = app.add_subcommand("k27-count", "Largest edge-disjoint common neighbourhood of two paths");
    k27_c->add_option("--window", o.window, "WxH")->required();

    auto* render_c = app.add_subcommand("render", "Draw a representation as SVG");
    render_c->add_option("--paths", o.paths)->required();
    render_c->add_option("-o,--out", o.out, "Output SVG (default stdout)");
    render_c->add_flag("--no-grid", o.no_grid);
    render_c->add_option("--scale", o.scale, "Pixels per unit")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (*construct_c) return construct(o, kind);
        if (*validate_c) return validate_cmd(o);
        if (*clique_c) return classify_clique_cmd(o);
        if (*c4_c) return classify_c4_cmd(o);
        if (*color_c) return color_cmd(o);
        if (*helly_c) return helly_cmd(o);
        if (*search_c) return search_cmd(o);
        if (*remarks_c) return report_cmd(remark_suite(parse_window(o.window)));
        if (*lemmas_c) return report_cmd(lemma_checks(parse_window(o.window)));
        if (*k27_c) return report_cmd(k27_counting_check(parse_window(o.window)));
        if (*render_c) return render_cmd(o);
    } catch (const Exit& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    }
    return kUsage;
}
