#include "icol/constructions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace icol {

namespace {

void require_interval(const ColoredGraph &cg, const char *what)
{
    auto verdict = verify_interval(cg.graph, cg.coloring);
    if (!verdict.ok())
        throw ConstructionError(std::string(what) + ": base is not an interval coloring (" +
                                verdict.describe(cg.graph) + ")");
}

// Smallest color at every vertex.
std::vector<Color> spectrum_minima(const ColoredGraph &cg)
{
    std::vector<Color> minima(cg.graph.vertex_count(), 0);
    for (Vertex v = 0; v < cg.graph.vertex_count(); ++v) {
        auto incident = cg.graph.incident(v);
        if (incident.empty())
            continue;
        Color lo = cg.coloring[incident.front()];
        for (auto e : incident)
            lo = std::min(lo, cg.coloring[e]);
        minima[v] = lo;
    }
    return minima;
}

// A freshly built coloring that fails the verifier is a bug here, not bad input.
ColoredGraph sealed(Graph g, EdgeColoring c, const char *what)
{
    auto verdict = verify_interval(g, c);
    if (!verdict.ok())
        throw std::logic_error(std::string(what) + " produced an invalid coloring: " + verdict.describe(g));
    return ColoredGraph{std::move(g), std::move(c)};
}

} // namespace

FactorizationParams factorize(std::uint64_t n)
{
    if (n == 0)
        throw ConstructionError("cannot factorize 0");
    FactorizationParams f{n, n, 0};
    while (f.odd_part % 2 == 0) {
        f.odd_part /= 2;
        ++f.two_adic;
    }
    return f;
}

ColoredGraph canonical_complete_coloring(std::uint64_t n)
{
    if (n == 0)
        throw ConstructionError("K_{2n} needs n >= 1");
    const auto order = static_cast<Vertex>(2 * n);
    const Vertex pivot = order - 1;
    const auto rounds = static_cast<std::int64_t>(order - 1);

    Graph g = complete_graph(order);
    std::vector<Color> colors(g.edge_count(), 0);
    for (std::int64_t r = 0; r < rounds; ++r) {
        const Color color = r + 1;
        colors[g.edge_index(static_cast<Vertex>(r), pivot)] = color;
        for (std::int64_t k = 1; k < static_cast<std::int64_t>(n); ++k) {
            auto a = static_cast<Vertex>(((r - k) % rounds + rounds) % rounds);
            auto b = static_cast<Vertex>((r + k) % rounds);
            colors[g.edge_index(a, b)] = color;
        }
    }
    EdgeColoring c(rounds, std::move(colors));
    return sealed(std::move(g), std::move(c), "canonical_complete_coloring");
}

ColoredGraph double_complete(const ColoredGraph &base)
{
    const auto half = base.graph.vertex_count();
    if (half % 2 != 0 || base.graph != complete_graph(half))
        throw ConstructionError("double_complete: base must be a complete graph of even order");
    require_interval(base, "double_complete");

    const auto m2 = static_cast<Color>(half); // 2m
    const auto minima = spectrum_minima(base);
    const auto &alpha = base.coloring;
    auto base_color = [&](Vertex a, Vertex b) { return alpha[base.graph.edge_index(a, b)]; };

    Graph g = complete_graph(2 * half);
    std::vector<Color> colors;
    colors.reserve(g.edge_count());
    const auto h = static_cast<Vertex>(half);
    for (const auto &[i, j] : g.edges()) {
        if (j < h)
            colors.push_back(base_color(i, j));
        else if (i < h && j == i + h)
            colors.push_back(minima[i] + m2 - 1);
        else if (i < h)
            colors.push_back(base_color(i, j - h) + m2);
        else
            colors.push_back(base_color(i - h, j - h) + 2 * m2 - 1);
    }
    EdgeColoring c(alpha.palette_size() + 2 * m2 - 1, std::move(colors));
    return sealed(std::move(g), std::move(c), "double_complete");
}

TowerResult build_complete_tower(std::uint64_t n, const ColoredGraph &base)
{
    const auto f = factorize(n);
    if (base.graph.vertex_count() != 2 * f.odd_part)
        throw ConstructionError("complete tower for n=" + std::to_string(n) + " needs a base on K_" +
                                std::to_string(2 * f.odd_part) + ", got " +
                                std::to_string(base.graph.vertex_count()) + " vertices");
    require_interval(base, "build_complete_tower");

    TowerResult tower{base, {}};
    for (unsigned step = 1; step <= f.two_adic; ++step) {
        const auto m2 = static_cast<Color>(tower.result.graph.vertex_count());
        DoublingTrace trace{DoublingKind::complete, step, tower.result.graph.vertex_count(),
                            {m2 - 1, m2, 2 * m2 - 1}, tower.result.coloring.palette_size(), 0};
        tower.result = double_complete(tower.result);
        trace.result_t = tower.result.coloring.palette_size();
        tower.trace.push_back(std::move(trace));
    }
    return tower;
}

ColoredGraph dimension_coloring(unsigned dimension)
{
    Graph g = hypercube_graph(dimension);
    std::vector<Color> colors;
    colors.reserve(g.edge_count());
    for (const auto &[u, v] : g.edges())
        colors.push_back(std::countr_zero(u ^ v) + 1);
    EdgeColoring c(dimension, std::move(colors));
    return sealed(std::move(g), std::move(c), "dimension_coloring");
}

ColoredGraph double_hypercube(const ColoredGraph &base)
{
    const auto family = base.graph.family();
    unsigned base_dim = 0;
    if (family.kind == FamilyKind::hypercube)
        base_dim = family.param;
    else
        base_dim = static_cast<unsigned>(std::countr_zero(base.graph.vertex_count()));
    if (base_dim == 0 || base_dim >= kMaxHypercubeDimension || base.graph != hypercube_graph(base_dim))
        throw ConstructionError("double_hypercube: base must be a hypercube graph");
    require_interval(base, "double_hypercube");

    const unsigned dim = base_dim + 1;
    const auto shift = static_cast<Color>(dim);
    const auto minima = spectrum_minima(base);
    const auto &alpha = base.coloring;
    const Vertex half = Vertex{1} << base_dim;

    Graph g = hypercube_graph(dim);
    std::vector<Color> colors;
    colors.reserve(g.edge_count());
    for (const auto &[x, y] : g.edges()) {
        if (y < half)
            colors.push_back(alpha[base.graph.edge_index(x, y)]);
        else if (x < half) // y == x + half, the matching between the copies
            colors.push_back(minima[x] + shift - 1);
        else
            colors.push_back(alpha[base.graph.edge_index(x - half, y - half)] + shift);
    }
    EdgeColoring c(alpha.palette_size() + shift, std::move(colors));
    return sealed(std::move(g), std::move(c), "double_hypercube");
}

TowerResult build_hypercube_tower(unsigned dimension)
{
    if (dimension == 0)
        throw ConstructionError("hypercube tower needs dimension >= 1");
    TowerResult tower{dimension_coloring(1), {}};
    for (unsigned dim = 2; dim <= dimension; ++dim) {
        const auto n = static_cast<Color>(dim);
        DoublingTrace trace{DoublingKind::hypercube, dim - 1, tower.result.graph.vertex_count(),
                            {n - 1, n}, tower.result.coloring.palette_size(), 0};
        tower.result = double_hypercube(tower.result);
        trace.result_t = tower.result.coloring.palette_size();
        tower.trace.push_back(std::move(trace));
    }
    return tower;
}

EdgeColoring downshift_regular(const Graph &g, const EdgeColoring &c)
{
    if (g.max_degree() != g.min_degree())
        throw ConstructionError("downshift needs a regular graph");
    auto verdict = verify_interval(g, c);
    if (!verdict.ok())
        throw ConstructionError("downshift needs an interval coloring: " + verdict.describe(g));
    const auto delta = static_cast<Color>(g.max_degree());
    const Color t = c.palette_size();
    if (t <= delta)
        throw ConstructionError("already at minimum: t = " + std::to_string(t) + " equals the degree");

    // A vertex that sees t has spectrum [t-delta+1, t], so t-delta is free there.
    std::vector<Color> colors = c.colors();
    for (auto &color : colors)
        if (color == t)
            color = t - delta;
    EdgeColoring shifted(t - 1, std::move(colors));
    auto after = verify_interval(g, shifted);
    if (!after.ok())
        throw std::logic_error("downshift produced an invalid coloring: " + after.describe(g));
    return shifted;
}

std::vector<EdgeColoring> spectrum_colorings(const Graph &g, const EdgeColoring &top)
{
    if (g.max_degree() != g.min_degree())
        throw ConstructionError("spectrum enumeration needs a regular graph");
    auto verdict = verify_interval(g, top);
    if (!verdict.ok())
        throw ConstructionError("spectrum enumeration needs an interval coloring: " + verdict.describe(g));

    const auto delta = static_cast<Color>(g.max_degree());
    std::vector<EdgeColoring> out{top};
    while (out.back().palette_size() > delta)
        out.push_back(downshift_regular(g, out.back()));
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace icol
