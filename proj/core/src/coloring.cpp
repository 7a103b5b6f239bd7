#include "icol/coloring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace icol {

EdgeColoring::EdgeColoring(Color t, std::vector<Color> colors) : t_(t), colors_(std::move(colors))
{
    if (t_ < 1)
        throw ColoringError("palette size must be positive, got " + std::to_string(t_));
    for (std::size_t e = 0; e < colors_.size(); ++e)
        if (colors_[e] < 1 || colors_[e] > t_)
            throw ColoringError("edge " + std::to_string(e) + " has color " + std::to_string(colors_[e]) +
                                " outside 1.." + std::to_string(t_));
}

void require_bound(const Graph &g, const EdgeColoring &c)
{
    if (c.size() != g.edge_count())
        throw ColoringMismatch("coloring has " + std::to_string(c.size()) + " colors but the graph has " +
                               std::to_string(g.edge_count()) + " edges");
}

VertexSpectrum vertex_spectrum(const Graph &g, const EdgeColoring &c, Vertex v)
{
    require_bound(g, c);
    VertexSpectrum s{v, {}};
    for (auto e : g.incident(v))
        s.colors.push_back(c[e]);
    std::sort(s.colors.begin(), s.colors.end());
    s.colors.erase(std::unique(s.colors.begin(), s.colors.end()), s.colors.end());
    return s;
}

namespace {

std::optional<ProperViolation> first_conflict(const Graph &g, const EdgeColoring &c)
{
    std::unordered_map<Color, EdgeIndex> seen;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        seen.clear();
        for (auto e : g.incident(v)) {
            auto [it, fresh] = seen.emplace(c[e], e);
            if (!fresh)
                return ProperViolation{v, it->second, e};
        }
    }
    return std::nullopt;
}

std::string edge_text(const Graph &g, EdgeIndex e)
{
    const auto &edge = g.edge(e);
    return "(" + std::to_string(edge.u) + "," + std::to_string(edge.v) + ")";
}

} // namespace

ProperVerdict verify_proper(const Graph &g, const EdgeColoring &c)
{
    require_bound(g, c);
    return ProperVerdict{first_conflict(g, c)};
}

IntervalVerdict verify_interval(const Graph &g, const EdgeColoring &c)
{
    require_bound(g, c);
    IntervalVerdict verdict;

    if (auto conflict = first_conflict(g, c)) {
        verdict.failure = IntervalFailure::improper;
        verdict.vertex = conflict->vertex;
        verdict.first = conflict->first;
        verdict.second = conflict->second;
        verdict.color = c[conflict->first];
        return verdict;
    }

    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto incident = g.incident(v);
        if (incident.empty())
            continue;
        Color lo = c[incident.front()];
        Color hi = lo;
        for (auto e : incident) {
            lo = std::min(lo, c[e]);
            hi = std::max(hi, c[e]);
        }
        // proper, so the colors are distinct: consecutive iff the span equals the degree
        if (hi - lo + 1 != static_cast<Color>(incident.size())) {
            verdict.failure = IntervalFailure::not_consecutive;
            verdict.vertex = v;
            verdict.spectrum = vertex_spectrum(g, c, v).colors;
            return verdict;
        }
    }

    std::vector<Color> used(c.colors());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    Color expected = 1;
    for (auto color : used) {
        if (color != expected)
            break;
        ++expected;
    }
    if (expected <= c.palette_size()) {
        verdict.failure = IntervalFailure::unused_color;
        verdict.color = expected;
    }
    return verdict;
}

std::string IntervalVerdict::describe(const Graph &g) const
{
    std::ostringstream out;
    switch (failure) {
    case IntervalFailure::none:
        out << "ok";
        break;
    case IntervalFailure::improper:
        out << "not proper: edges " << edge_text(g, first) << " and " << edge_text(g, second)
            << " share color " << color << " at vertex " << vertex;
        break;
    case IntervalFailure::not_consecutive: {
        out << "not interval: vertex " << vertex << " of degree " << g.degree(vertex) << " has colors {";
        for (std::size_t i = 0; i < spectrum.size(); ++i)
            out << (i ? "," : "") << spectrum[i];
        out << "}";
        break;
    }
    case IntervalFailure::unused_color:
        out << "palette not covered: color " << color << " is used by no edge";
        break;
    }
    return out.str();
}

} // namespace icol
