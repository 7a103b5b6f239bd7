#include "icol/report.hpp"

#include "icol/constructions.hpp"

#include <json.hpp>

#include <sstream>

namespace icol {

Color complete_tower_formula(std::uint64_t n)
{
    const auto f = factorize(n);
    return static_cast<Color>(4 * n - 2 - f.odd_part - f.two_adic);
}

Color hypercube_tower_formula(std::uint64_t n)
{
    return static_cast<Color>(n * (n + 1) / 2);
}

Color complete_tower_colors(std::uint64_t n, Color base_t)
{
    // each doubling K_{2m} -> K_{4m} adds 4m - 1
    const auto f = factorize(n);
    return base_t + static_cast<Color>(4 * f.odd_part * ((std::uint64_t{1} << f.two_adic) - 1)) -
           static_cast<Color>(f.two_adic);
}

namespace {

std::string oracle_summary(const ExtremeResult &r)
{
    switch (r.status) {
    case ExtremeStatus::exact:
        return "W=" + std::to_string(*r.value) + " proved";
    case ExtremeStatus::not_colorable:
        return "not interval colorable";
    case ExtremeStatus::bracket:
        break;
    }
    std::string lo = r.best_feasible ? std::to_string(*r.best_feasible) : "?";
    std::string hi = r.unresolved ? std::to_string(*r.unresolved) : "?";
    return "W in [" + lo + "," + hi + "]";
}

ReportRow complete_row(std::uint64_t n, const ReportOptions &options)
{
    const auto f = factorize(n);
    ReportRow row;
    row.family = FamilyKind::complete;
    row.param = n;

    ColoredGraph base = canonical_complete_coloring(f.odd_part);
    row.base = f.odd_part == 1 ? "K_2 single edge" : "round-robin K_" + std::to_string(2 * f.odd_part);
    if (f.odd_part > 1 && options.store)
        if (auto cert = options.store->best_for(base.graph); cert && cert->palette_size() > base.coloring.palette_size()) {
            row.base = "certificate K_" + std::to_string(2 * f.odd_part) + " t=" +
                       std::to_string(cert->palette_size());
            base = ColoredGraph{cert->graph, cert->coloring};
        }

    auto tower = build_complete_tower(n, base);
    const auto &g = tower.result.graph;
    row.vertices = g.vertex_count();
    row.delta = static_cast<Color>(g.max_degree());
    row.construction_t = tower.result.coloring.palette_size();
    row.formula_lower = complete_tower_formula(n);
    row.construction_meets_formula = row.construction_t >= row.formula_lower;

    auto membership = family_membership(g.family());
    row.w = membership.w;
    row.w_source = "family";

    auto bounds = upper_bound_W(g);
    row.upper_W = bounds.upper_W;
    row.upper_source = bounds.tightest;

    row.oracle = "skipped";
    if (options.run_oracle)
        row.oracle = oracle_summary(exact_W(g, options.budget, ScanDirection::upward, row.construction_t));
    return row;
}

ReportRow hypercube_row(std::uint64_t n, const ReportOptions &options)
{
    ReportRow row;
    row.family = FamilyKind::hypercube;
    row.param = n;
    row.base = "Q_1 single edge";

    auto tower = build_hypercube_tower(static_cast<unsigned>(n));
    const auto &g = tower.result.graph;
    row.vertices = g.vertex_count();
    row.delta = static_cast<Color>(g.max_degree());
    row.construction_t = tower.result.coloring.palette_size();
    row.formula_lower = hypercube_tower_formula(n);
    row.construction_meets_formula = row.construction_t >= row.formula_lower;

    auto membership = family_membership(g.family());
    row.w = membership.w;
    row.w_source = "family";

    auto bounds = upper_bound_W(g);
    row.upper_W = bounds.upper_W;
    row.upper_source = bounds.tightest;

    row.oracle = "skipped";
    if (options.run_oracle)
        row.oracle = oracle_summary(exact_W(g, options.budget, ScanDirection::upward, row.construction_t));
    return row;
}

std::string opt(const std::optional<Color> &v)
{
    return v ? std::to_string(*v) : "";
}

std::string source(const std::optional<BoundSource> &s)
{
    return s ? to_string(*s) : "";
}

} // namespace

std::vector<ReportRow> build_report(FamilyKind family, std::uint64_t from, std::uint64_t to,
                                    const ReportOptions &options)
{
    if (from == 0 || from > to)
        throw std::invalid_argument("report range must satisfy 1 <= from <= to");
    if (family == FamilyKind::generic)
        throw std::invalid_argument("reports cover the complete and hypercube families only");
    std::vector<ReportRow> rows;
    for (auto n = from; n <= to; ++n)
        rows.push_back(family == FamilyKind::complete ? complete_row(n, options) : hypercube_row(n, options));
    return rows;
}

std::string render_csv(const std::vector<ReportRow> &rows)
{
    std::ostringstream out;
    out << "family,param,vertices,delta,w,w_source,construction_t,base,formula_lower,meets_formula,upper_W,"
           "upper_source,oracle\n";
    for (const auto &r : rows)
        out << to_string(r.family) << "," << r.param << "," << r.vertices << "," << r.delta << "," << opt(r.w)
            << "," << r.w_source << "," << r.construction_t << ",\"" << r.base << "\"," << r.formula_lower
            << "," << (r.construction_meets_formula ? "yes" : "no") << "," << opt(r.upper_W) << ","
            << source(r.upper_source) << ",\"" << r.oracle << "\"\n";
    return out.str();
}

std::string render_json(const std::vector<ReportRow> &rows)
{
    auto doc = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
        nlohmann::ordered_json j;
        j["family"] = to_string(r.family);
        j["param"] = r.param;
        j["vertices"] = r.vertices;
        j["delta"] = r.delta;
        j["w"] = r.w ? nlohmann::ordered_json(*r.w) : nlohmann::ordered_json();
        j["w_source"] = r.w_source;
        j["construction_t"] = r.construction_t;
        j["base"] = r.base;
        j["formula_lower"] = r.formula_lower;
        j["meets_formula"] = r.construction_meets_formula;
        j["upper_W"] = r.upper_W ? nlohmann::ordered_json(*r.upper_W) : nlohmann::ordered_json();
        j["upper_source"] = source(r.upper_source);
        j["oracle"] = r.oracle;
        doc.push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

std::string render_markdown(const std::vector<ReportRow> &rows)
{
    std::ostringstream out;
    out << "| graph | Δ | w | construction t | formula | upper W | base | oracle |\n"
        << "|---|---|---|---|---|---|---|---|\n";
    for (const auto &r : rows) {
        std::string name = r.family == FamilyKind::complete ? "K_" + std::to_string(2 * r.param)
                                                            : "Q_" + std::to_string(r.param);
        out << "| " << name << " | " << r.delta << " | " << opt(r.w) << " | " << r.construction_t
            << (r.construction_t == r.formula_lower ? "" : r.construction_meets_formula ? " (>)" : " (<)")
            << " | " << r.formula_lower << " | " << opt(r.upper_W) << " (" << source(r.upper_source)
            << ") | " << r.base << " | " << r.oracle << " |\n";
    }
    return out.str();
}

} // namespace icol
