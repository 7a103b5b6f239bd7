// icol: build, verify and search interval edge colorings of K_{2n} and Q_n.
//
// Exit codes: 0 success/feasible, 1 verification failure,
// 2 infeasible or missing prerequisite, 3 unknown (budget), 4 bad input.

#include "icol/bounds.hpp"
#include "icol/certificate.hpp"
#include "icol/constructions.hpp"
#include "icol/report.hpp"
#include "icol/search.hpp"
#include "icol/serialization.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace fs = std::filesystem;
using namespace icol;

namespace {

enum Exit : int {
    kOk = 0,
    kVerifyFailed = 1,
    kInfeasible = 2,
    kUnknown = 3,
    kBadInput = 4,
};

/// Raised for anything the user got wrong; maps to exit 4.
struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr double kDefaultBudgetSecs = 30.0;
constexpr std::uint64_t kDefaultBudgetNodes = 100'000'000;

struct BudgetFlags {
    std::optional<double> seconds;
    std::optional<std::uint64_t> nodes;
    bool unlimited = false;

    void attach(CLI::App *cmd)
    {
        cmd->add_option("--budget-secs", seconds, "Wall-clock limit (default 30, or $IC_BUDGET_SECS)");
        cmd->add_option("--budget-nodes", nodes, "Search node limit (default 1e8)");
        cmd->add_flag("--no-budget", unlimited, "Search without limits (small graphs only)");
    }

    SearchBudget resolve() const
    {
        if (unlimited)
            return {};
        SearchBudget b;
        b.seconds = kDefaultBudgetSecs;
        if (const char *env = std::getenv("IC_BUDGET_SECS")) {
            try {
                b.seconds = std::stod(env);
            }
            catch (const std::exception &) {
                throw BadInput("IC_BUDGET_SECS is not a number: " + std::string(env));
            }
        }
        if (seconds)
            b.seconds = *seconds;
        b.nodes = nodes ? *nodes : kDefaultBudgetNodes;
        return b;
    }
};

std::string default_store()
{
    if (const char *env = std::getenv("IC_CERT_STORE"))
        return env;
    return "ic-certs";
}

FamilyKind parse_family(const std::string &name)
{
    if (name == "complete")
        return FamilyKind::complete;
    if (name == "hypercube")
        return FamilyKind::hypercube;
    throw BadInput("family must be 'complete' or 'hypercube', got '" + name + "'");
}

Graph load_graph(const std::string &path)
{
    return read_graph_json(read_text_file(path));
}

// Self-check, then write in the requested format ("-" or empty means stdout).
void emit_coloring(const Graph &g, const EdgeColoring &c, const std::string &out, const std::string &format)
{
    auto verdict = verify_interval(g, c);
    if (!verdict.ok())
        throw std::logic_error("refusing to write an invalid coloring: " + verdict.describe(g));
    std::string text;
    if (format == "json")
        text = write_coloring_json(g, c);
    else if (format == "dot")
        text = write_dot(g, &c);
    else if (format == "csv")
        text = write_csv(g, c);
    else
        throw BadInput("unknown format '" + format + "'");
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_text_file(out, text);
}

std::string graph_name(const Graph &g)
{
    switch (g.family().kind) {
    case FamilyKind::complete:
        return "K_" + std::to_string(g.family().param);
    case FamilyKind::hypercube:
        return "Q_" + std::to_string(g.family().param);
    case FamilyKind::generic:
        break;
    }
    return "graph(" + std::to_string(g.vertex_count()) + "v," + std::to_string(g.edge_count()) + "e)";
}

// ---------------------------------------------------------------------------

struct GenArgs {
    std::string family;
    long long param = 0;
    std::string out;
    std::string format = "json";
};

int cmd_gen(const GenArgs &a)
{
    auto kind = parse_family(a.family);
    if (a.param < 1)
        throw BadInput("parameter must be at least 1");
    Graph g = kind == FamilyKind::complete ? complete_graph(static_cast<std::size_t>(a.param))
                                           : hypercube_graph(static_cast<unsigned>(a.param));
    std::string text;
    if (a.format == "json")
        text = write_graph_json(g);
    else if (a.format == "dot")
        text = write_dot(g);
    else
        throw BadInput("gen supports --format json|dot");
    if (a.out.empty() || a.out == "-")
        std::cout << text;
    else {
        write_text_file(a.out, text);
        std::cout << graph_name(g) << ": " << g.vertex_count() << " vertices, " << g.edge_count()
                  << " edges -> " << a.out << "\n";
    }
    return kOk;
}

struct ColorArgs {
    std::string family;
    long long param = 0;
    std::string method;
    std::string base;
    std::string store = default_store();
    std::string out;
    std::string graph_out;
    std::string format = "json";
};

int cmd_color(const ColorArgs &a)
{
    auto kind = parse_family(a.family);
    if (a.param < 1)
        throw BadInput("parameter must be at least 1");
    const auto n = static_cast<std::uint64_t>(a.param);

    std::optional<ColoredGraph> result;
    std::optional<Color> formula;
    std::string formula_name;

    if (kind == FamilyKind::complete && a.method == "canonical") {
        result = canonical_complete_coloring(n);
        formula = static_cast<Color>(2 * n - 1);
        formula_name = "w(K_2n) = 2n-1";
    }
    else if (kind == FamilyKind::hypercube && a.method == "dimension") {
        if (n > kMaxHypercubeDimension)
            throw BadInput("hypercube dimension above " + std::to_string(kMaxHypercubeDimension));
        result = dimension_coloring(static_cast<unsigned>(n));
        formula = static_cast<Color>(n);
        formula_name = "w(Q_n) = n";
    }
    else if (kind == FamilyKind::hypercube && a.method == "tower") {
        if (n > kMaxHypercubeDimension)
            throw BadInput("hypercube dimension above " + std::to_string(kMaxHypercubeDimension));
        result = build_hypercube_tower(static_cast<unsigned>(n)).result;
        formula = hypercube_tower_formula(n);
        formula_name = "W(Q_n) >= n(n+1)/2";
    }
    else if (kind == FamilyKind::complete && a.method == "tower") {
        const auto f = factorize(n);
        ColoredGraph base = canonical_complete_coloring(f.odd_part);
        if (!a.base.empty()) {
            auto cert = read_certificate_json(read_text_file(a.base));
            if (cert.graph != base.graph)
                throw BadInput("base certificate is for " + graph_name(cert.graph) + ", tower needs K_" +
                               std::to_string(2 * f.odd_part));
            base = ColoredGraph{cert.graph, cert.coloring};
        }
        else if (f.odd_part > 1) {
            CertificateStore store(a.store);
            auto cert = store.best_for(base.graph);
            if (!cert) {
                std::cerr << "no base certificate for K_" << 2 * f.odd_part << " in " << a.store
                          << "; create one with: icol cert make complete " << f.odd_part << " --t "
                          << 3 * f.odd_part - 2 << " (make_certificate), or pass --base\n";
                return kInfeasible;
            }
            base = ColoredGraph{cert->graph, cert->coloring};
        }
        std::cerr << "base: K_" << 2 * f.odd_part << " with t=" << base.coloring.palette_size() << "\n";
        result = build_complete_tower(n, base).result;
        formula = complete_tower_formula(n);
        formula_name = "W(K_2n) >= 4n-2-p-q";
    }
    else
        throw BadInput("method '" + a.method + "' is not available for family '" + a.family + "'");

    const auto &g = result->graph;
    const auto &c = result->coloring;
    emit_coloring(g, c, a.out, a.format);
    if (!a.graph_out.empty())
        write_text_file(a.graph_out, write_graph_json(g));

    auto &summary = (a.out.empty() || a.out == "-") ? std::cerr : std::cout;
    summary << graph_name(g) << " " << a.method << ": t = " << c.palette_size() << "; " << formula_name << " gives "
            << *formula << " (" << (c.palette_size() == *formula ? "match" : "mismatch") << "); verified\n";
    return kOk;
}

struct VerifyArgs {
    std::string graph;
    std::string coloring;
};

int cmd_verify(const VerifyArgs &a)
{
    Graph g = load_graph(a.graph);
    EdgeColoring c = read_coloring_json(read_text_file(a.coloring), g);
    auto verdict = verify_interval(g, c);
    if (verdict.ok()) {
        std::cout << "ok: interval " << c.palette_size() << "-coloring of " << graph_name(g) << "\n";
        return kOk;
    }
    std::cout << "FAIL: " << verdict.describe(g) << "\n";
    return kVerifyFailed;
}

struct BoundsArgs {
    std::string graph;
    bool json = false;
};

int cmd_bounds(const BoundsArgs &a)
{
    Graph g = load_graph(a.graph);
    auto profile = structural_profile(g);
    auto report = upper_bound_W(profile, g.vertex_count());
    if (a.json) {
        nlohmann::ordered_json doc;
        doc["graph_hash"] = graph_hash(g);
        doc["profile"] = {{"vertices", profile.vertex_count},
                          {"edges", profile.edge_count},
                          {"max_degree", profile.max_degree},
                          {"regular", profile.is_regular},
                          {"bipartite", profile.is_bipartite},
                          {"triangle_free", profile.is_triangle_free},
                          {"diameter", profile.diameter ? nlohmann::ordered_json(*profile.diameter)
                                                        : nlohmann::ordered_json()}};
        doc["lower_w"] = report.lower_w;
        doc["upper_W"] = report.upper_W ? nlohmann::ordered_json(*report.upper_W) : nlohmann::ordered_json();
        doc["tightest"] = report.tightest ? to_string(*report.tightest) : "";
        auto terms = nlohmann::ordered_json::array();
        for (const auto &t : report.terms)
            terms.push_back({{"bound", to_string(t.source)},
                             {"applicable", t.applicable},
                             {"value", t.applicable ? nlohmann::ordered_json(t.value) : nlohmann::ordered_json()}});
        doc["terms"] = std::move(terms);
        doc["conditional_on_membership"] = report.conditional_on_membership;
        std::cout << doc.dump(2) << "\n";
        return kOk;
    }

    std::cout << graph_name(g) << ": |V|=" << profile.vertex_count << " |E|=" << profile.edge_count
              << " Delta=" << profile.max_degree << (profile.is_regular ? " regular" : "")
              << (profile.is_bipartite ? " bipartite" : "") << (profile.is_triangle_free ? " triangle-free" : "")
              << " diameter=" << (profile.diameter ? std::to_string(*profile.diameter) : "undefined") << "\n";
    std::cout << "bound                 applicable  value\n";
    for (const auto &t : report.terms) {
        std::string name = to_string(t.source);
        name.resize(22, ' ');
        std::cout << name << (t.applicable ? "yes         " : "no          ")
                  << (t.applicable ? std::to_string(t.value) : "-") << "\n";
    }
    std::cout << "lower w >= " << report.lower_w << "\n";
    if (report.upper_W)
        std::cout << "upper W <= " << *report.upper_W << " via " << to_string(*report.tightest) << "\n";
    else
        std::cout << "upper W: none (no edges)\n";
    std::cout << "(bounds hold only if the graph is interval colorable)\n";
    return kOk;
}

struct SearchArgs {
    std::string graph;
    std::optional<long long> t;
    bool exact_w = false;
    bool exact_W = false;
    std::string direction = "down";
    std::optional<long long> start;
    bool no_symmetry = false;
    bool stats = false;
    std::string out;
    BudgetFlags budget;
};

int cmd_search(const SearchArgs &a)
{
    Graph g = load_graph(a.graph);
    if (g.edge_count() == 0)
        throw BadInput("graph has no edges");
    const int modes = (a.t ? 1 : 0) + (a.exact_w ? 1 : 0) + (a.exact_W ? 1 : 0);
    if (modes != 1)
        throw BadInput("give exactly one of --t, --exact-w, --exact-W");
    auto budget = a.budget.resolve();
    if (!budget.bounded() && g.edge_count() > kUnboundedSearchEdgeLimit)
        throw BadInput("--no-budget is only allowed for graphs with at most 16 edges");
    SearchOptions options{!a.no_symmetry};

    if (a.t) {
        if (*a.t < 1)
            throw BadInput("--t must be positive");
        auto outcome = find_interval_coloring(g, *a.t, budget, options);
        std::cout << graph_name(g) << " t=" << *a.t << ": " << to_string(outcome.status) << " (" << outcome.nodes
                  << " nodes, " << outcome.elapsed_ms << " ms)\n";
        if (a.stats)
            std::cout << search_stats_json(outcome) << "\n";
        if (outcome.status == SearchStatus::feasible) {
            if (!a.out.empty())
                emit_coloring(g, *outcome.witness, a.out, "json");
            return kOk;
        }
        return outcome.status == SearchStatus::infeasible ? kInfeasible : kUnknown;
    }

    ExtremeResult r;
    const char *what = a.exact_w ? "w" : "W";
    if (a.exact_w)
        r = exact_w(g, budget, options);
    else {
        if (a.direction != "down" && a.direction != "up")
            throw BadInput("--direction must be 'down' or 'up'");
        auto dir = a.direction == "up" ? ScanDirection::upward : ScanDirection::downward;
        std::optional<Color> start;
        if (a.start)
            start = *a.start;
        r = exact_W(g, budget, dir, start, options);
    }
    for (const auto &[t, status] : r.queries)
        std::cerr << "  t=" << t << ": " << to_string(status) << "\n";
    if (a.stats) {
        nlohmann::ordered_json doc;
        doc["nodes"] = r.nodes;
        doc["elapsed_ms"] = r.elapsed_ms;
        doc["status"] = r.status == ExtremeStatus::exact           ? "exact"
                        : r.status == ExtremeStatus::not_colorable ? "not_colorable"
                                                                   : "bracket";
        std::cout << doc.dump() << "\n";
    }
    switch (r.status) {
    case ExtremeStatus::exact:
        std::cout << *r.value << "\n";
        if (!a.out.empty() && r.witness)
            emit_coloring(g, *r.witness, a.out, "json");
        return kOk;
    case ExtremeStatus::not_colorable:
        std::cout << graph_name(g) << " has no interval coloring for any t up to the bound ceiling\n";
        return kInfeasible;
    case ExtremeStatus::bracket:
        break;
    }
    std::cout << what << " in [" << (r.best_feasible ? std::to_string(*r.best_feasible) : "?") << ", "
              << (r.unresolved ? std::to_string(*r.unresolved) : "?") << "] (budget exhausted)\n";
    return kUnknown;
}

struct SpectrumArgs {
    std::string graph;
    std::string coloring;
    std::string out_dir;
};

int cmd_spectrum(const SpectrumArgs &a)
{
    Graph g = load_graph(a.graph);
    EdgeColoring top = read_coloring_json(read_text_file(a.coloring), g);
    if (g.max_degree() != g.min_degree())
        throw BadInput("spectrum needs a regular graph (degrees range over " + std::to_string(g.min_degree()) +
                       ".." + std::to_string(g.max_degree()) + ")");
    auto verdict = verify_interval(g, top);
    if (!verdict.ok()) {
        std::cout << "FAIL: input is not an interval coloring: " << verdict.describe(g) << "\n";
        return kVerifyFailed;
    }
    fs::create_directories(a.out_dir);
    for (const auto &c : spectrum_colorings(g, top)) {
        auto path = fs::path(a.out_dir) / ("coloring-t" + std::to_string(c.palette_size()) + ".json");
        emit_coloring(g, c, path.string(), "json");
        std::cout << path.string() << "\n";
    }
    return kOk;
}

struct CertArgs {
    std::string store = default_store();
    // add
    std::string graph;
    std::string coloring;
    // make
    std::string family;
    long long param = 0;
    long long t = 0;
    bool no_symmetry = false;
    BudgetFlags budget;
};

int cmd_cert_add(const CertArgs &a)
{
    Graph g = load_graph(a.graph);
    EdgeColoring c = read_coloring_json(read_text_file(a.coloring), g);
    auto verdict = verify_interval(g, c);
    if (!verdict.ok()) {
        std::cout << "FAIL: " << verdict.describe(g) << "\n";
        return kVerifyFailed;
    }
    CertificateStore store(a.store);
    auto added = store.add(seal_certificate({g, c}, Provenance{ProvenanceKind::imported}));
    std::cout << (added.created ? "stored " : "already stored ") << added.path.string() << "\n";
    return kOk;
}

int cmd_cert_list(const CertArgs &a)
{
    CertificateStore store(a.store);
    for (const auto &entry : store.list())
        std::cout << entry.path.filename().string() << "  " << graph_name(entry.certificate.graph)
                  << "  t=" << entry.certificate.palette_size() << "  "
                  << to_string(entry.certificate.provenance.kind) << "  " << entry.certificate.created_at << "\n";
    for (const auto &path : store.quarantined())
        std::cout << "quarantined: " << path.string() << "\n";
    return kOk;
}

int cmd_cert_make(const CertArgs &a)
{
    auto kind = parse_family(a.family);
    if (a.param < 1)
        throw BadInput("parameter must be at least 1");
    if (a.t < 1)
        throw BadInput("--t must be positive");
    auto budget = a.budget.resolve();
    auto attempt = make_certificate(kind, static_cast<std::uint64_t>(a.param), a.t, budget,
                                    SearchOptions{!a.no_symmetry});
    std::cout << "search t=" << a.t << ": " << to_string(attempt.outcome.status) << " (" << attempt.outcome.nodes
              << " nodes, " << attempt.outcome.elapsed_ms << " ms)\n";
    if (!attempt.certificate)
        return attempt.outcome.status == SearchStatus::infeasible ? kInfeasible : kUnknown;
    CertificateStore store(a.store);
    auto added = store.add(*attempt.certificate);
    std::cout << (added.created ? "stored " : "already stored ") << added.path.string() << "\n";
    return kOk;
}

struct ReportArgs {
    std::string family;
    std::string range;
    std::string format = "markdown";
    std::string store = default_store();
    bool oracle = false;
    BudgetFlags budget;
};

int cmd_report(const ReportArgs &a)
{
    auto kind = parse_family(a.family);
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    try {
        auto dots = a.range.find("..");
        if (dots == std::string::npos)
            from = to = std::stoull(a.range);
        else {
            from = std::stoull(a.range.substr(0, dots));
            to = std::stoull(a.range.substr(dots + 2));
        }
    }
    catch (const std::exception &) {
        throw BadInput("range must look like 3 or 1..8");
    }
    if (from < 1 || from > to)
        throw BadInput("range must satisfy 1 <= from <= to");
    if (kind == FamilyKind::hypercube && to > kMaxHypercubeDimension)
        throw BadInput("hypercube dimension above " + std::to_string(kMaxHypercubeDimension));

    CertificateStore store(a.store);
    ReportOptions options;
    options.run_oracle = a.oracle;
    options.budget = a.budget.resolve();
    options.store = &store;
    auto rows = build_report(kind, from, to, options);
    if (a.format == "csv")
        std::cout << render_csv(rows);
    else if (a.format == "json")
        std::cout << render_json(rows);
    else if (a.format == "markdown")
        std::cout << render_markdown(rows);
    else
        throw BadInput("report supports --format csv|json|markdown");
    return kOk;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"icol: interval edge colorings of complete graphs and hypercubes"};
    app.require_subcommand(1);
    std::function<int()> run;

    GenArgs gen;
    auto *gen_cmd = app.add_subcommand("gen", "Write a graph file (complete: vertex count; hypercube: dimension)");
    gen_cmd->add_option("family", gen.family, "complete | hypercube")->required();
    gen_cmd->add_option("param", gen.param, "Vertex count for complete, dimension for hypercube")->required();
    gen_cmd->add_option("-o,--out", gen.out, "Output path (default stdout)");
    gen_cmd->add_option("--format", gen.format, "json | dot");
    gen_cmd->callback([&] { run = [&] { return cmd_gen(gen); }; });

    ColorArgs color;
    auto *color_cmd = app.add_subcommand("color", "Construct an interval coloring of K_2n or Q_n");
    color_cmd->add_option("family", color.family, "complete | hypercube")->required();
    color_cmd->add_option("param", color.param, "n for K_2n, dimension for Q_n")->required();
    color_cmd->add_option("method", color.method, "canonical | dimension | tower")->required();
    color_cmd->add_option("--base", color.base, "Base certificate for the complete tower");
    color_cmd->add_option("--store", color.store, "Certificate store directory");
    color_cmd->add_option("-o,--out", color.out, "Output path (default stdout)");
    color_cmd->add_option("--graph-out", color.graph_out, "Also write the graph file here");
    color_cmd->add_option("--format", color.format, "json | dot | csv");
    color_cmd->callback([&] { run = [&] { return cmd_color(color); }; });

    VerifyArgs verify;
    auto *verify_cmd = app.add_subcommand("verify", "Check that a coloring is an interval coloring");
    verify_cmd->add_option("graph", verify.graph)->required();
    verify_cmd->add_option("coloring", verify.coloring)->required();
    verify_cmd->callback([&] { run = [&] { return cmd_verify(verify); }; });

    BoundsArgs bounds;
    auto *bounds_cmd = app.add_subcommand("bounds", "Structural profile and upper bounds on W");
    bounds_cmd->add_option("graph", bounds.graph)->required();
    bounds_cmd->add_flag("--json", bounds.json);
    bounds_cmd->callback([&] { run = [&] { return cmd_bounds(bounds); }; });

    SearchArgs search;
    auto *search_cmd = app.add_subcommand("search", "Exhaustive search for interval colorings");
    search_cmd->add_option("graph", search.graph)->required();
    search_cmd->add_option("--t", search.t, "Decide interval t-colorability");
    search_cmd->add_flag("--exact-w", search.exact_w, "Compute w");
    search_cmd->add_flag("--exact-W", search.exact_W, "Compute W");
    search_cmd->add_option("--direction", search.direction, "down | up (for --exact-W)");
    search_cmd->add_option("--start", search.start, "Known feasible t for --direction up");
    search_cmd->add_flag("--no-symmetry", search.no_symmetry, "Disable first-edge symmetry breaking");
    search_cmd->add_flag("--stats", search.stats, "Print solver statistics as JSON");
    search_cmd->add_option("-o,--out", search.out, "Write the witness coloring here");
    search.budget.attach(search_cmd);
    search_cmd->callback([&] { run = [&] { return cmd_search(search); }; });

    SpectrumArgs spectrum;
    auto *spectrum_cmd = app.add_subcommand("spectrum", "Write interval colorings for every t down to Delta");
    spectrum_cmd->add_option("graph", spectrum.graph)->required();
    spectrum_cmd->add_option("coloring", spectrum.coloring)->required();
    spectrum_cmd->add_option("out-dir", spectrum.out_dir)->required();
    spectrum_cmd->callback([&] { run = [&] { return cmd_spectrum(spectrum); }; });

    CertArgs cert;
    auto *cert_cmd = app.add_subcommand("cert", "Certificate store");
    cert_cmd->require_subcommand(1);
    cert_cmd->add_option("--store", cert.store, "Certificate store directory");
    auto *cert_add = cert_cmd->add_subcommand("add", "Import a verified (graph, coloring) pair");
    cert_add->add_option("graph", cert.graph)->required();
    cert_add->add_option("coloring", cert.coloring)->required();
    cert_add->callback([&] { run = [&] { return cmd_cert_add(cert); }; });
    auto *cert_list = cert_cmd->add_subcommand("list", "List verified certificates");
    cert_list->callback([&] { run = [&] { return cmd_cert_list(cert); }; });
    auto *cert_make = cert_cmd->add_subcommand("make", "Search for a coloring and store it");
    cert_make->add_option("family", cert.family, "complete | hypercube")->required();
    cert_make->add_option("param", cert.param, "n for K_2n, dimension for Q_n")->required();
    cert_make->add_option("--t", cert.t, "Target palette size")->required();
    cert_make->add_flag("--no-symmetry", cert.no_symmetry);
    cert.budget.attach(cert_make);
    cert_make->callback([&] { run = [&] { return cmd_cert_make(cert); }; });

    ReportArgs report;
    auto *report_cmd = app.add_subcommand("report", "Tabulate constructions against the closed-form bounds");
    report_cmd->add_option("family", report.family, "complete | hypercube")->required();
    report_cmd->add_option("range", report.range, "Parameter range, e.g. 1..8")->required();
    report_cmd->add_option("--format", report.format, "csv | json | markdown");
    report_cmd->add_option("--store", report.store, "Certificate store directory");
    report_cmd->add_flag("--oracle", report.oracle, "Also prove W with the search oracle");
    report.budget.attach(report_cmd);
    report_cmd->callback([&] { run = [&] { return cmd_report(report); }; });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        return run();
    }
    catch (const BadInput &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    catch (const HashMismatch &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    catch (const FormatError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    catch (const std::invalid_argument &e) { // GraphError, ColoringError
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    catch (const CertificateError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    catch (const ConstructionError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
}
