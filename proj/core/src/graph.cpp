#include "icol/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace icol {

std::string to_string(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::complete:
        return "complete";
    case FamilyKind::hypercube:
        return "hypercube";
    case FamilyKind::generic:
        return "generic";
    }
    return "generic";
}

FamilyKind family_kind_from_string(const std::string &name)
{
    if (name == "complete")
        return FamilyKind::complete;
    if (name == "hypercube")
        return FamilyKind::hypercube;
    if (name == "generic")
        return FamilyKind::generic;
    throw GraphError("unknown graph family '" + name + "'");
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, Family family)
    : vertex_count_(vertex_count), edges_(std::move(edges)), family_(family)
{
    if (vertex_count_ == 0)
        throw GraphError("graph must have at least one vertex");
    if (vertex_count_ > std::numeric_limits<Vertex>::max())
        throw GraphError("vertex count exceeds the vertex id width");

    for (auto &e : edges_) {
        if (e.u == e.v)
            throw GraphError("self-loop at vertex " + std::to_string(e.u));
        if (e.u >= vertex_count_ || e.v >= vertex_count_)
            throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") has an endpoint outside 0.." + std::to_string(vertex_count_ - 1));
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");

    offsets_.assign(vertex_count_ + 1, 0);
    for (const auto &e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (std::size_t v = 0; v < vertex_count_; ++v)
        offsets_[v + 1] += offsets_[v];
    incidence_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // edges are visited in index order, so every incidence list comes out sorted
    for (EdgeIndex i = 0; i < edges_.size(); ++i) {
        incidence_[fill[edges_[i].u]++] = i;
        incidence_[fill[edges_[i].v]++] = i;
    }

    min_degree_ = std::numeric_limits<std::size_t>::max();
    for (std::size_t v = 0; v < vertex_count_; ++v) {
        auto d = offsets_[v + 1] - offsets_[v];
        max_degree_ = std::max(max_degree_, d);
        min_degree_ = std::min(min_degree_, d);
    }
}

std::size_t Graph::degree(Vertex v) const
{
    if (v >= vertex_count_)
        throw GraphError("vertex " + std::to_string(v) + " out of range");
    return offsets_[v + 1] - offsets_[v];
}

std::span<const EdgeIndex> Graph::incident(Vertex v) const
{
    if (v >= vertex_count_)
        throw GraphError("vertex " + std::to_string(v) + " out of range");
    return std::span<const EdgeIndex>(incidence_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

Vertex Graph::other_end(EdgeIndex e, Vertex v) const
{
    const auto &edge = edges_.at(e);
    return edge.u == v ? edge.v : edge.u;
}

std::optional<EdgeIndex> Graph::find_edge(Vertex a, Vertex b) const noexcept
{
    Edge key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        return std::nullopt;
    return static_cast<EdgeIndex>(it - edges_.begin());
}

EdgeIndex Graph::edge_index(Vertex a, Vertex b) const
{
    if (auto e = find_edge(a, b))
        return *e;
    throw GraphError("(" + std::to_string(a) + "," + std::to_string(b) + ") is not an edge");
}

Graph complete_graph(std::size_t num_vertices)
{
    if (num_vertices == 0)
        throw GraphError("complete graph needs at least one vertex");
    std::vector<Edge> edges;
    edges.reserve(num_vertices * (num_vertices - 1) / 2);
    for (Vertex i = 0; i < num_vertices; ++i)
        for (Vertex j = i + 1; j < num_vertices; ++j)
            edges.push_back({i, j});
    return Graph(num_vertices, std::move(edges),
                 Family{FamilyKind::complete, static_cast<std::uint32_t>(num_vertices)});
}

Graph hypercube_graph(unsigned dimension)
{
    if (dimension == 0)
        throw GraphError("hypercube dimension must be at least 1");
    if (dimension > kMaxHypercubeDimension)
        throw GraphError("hypercube dimension " + std::to_string(dimension) + " exceeds the limit of " +
                         std::to_string(kMaxHypercubeDimension));
    const Vertex n = Vertex{1} << dimension;
    std::vector<Edge> edges;
    edges.reserve(std::size_t{dimension} << (dimension - 1));
    for (Vertex x = 0; x < n; ++x)
        for (unsigned bit = 0; bit < dimension; ++bit) {
            Vertex y = x ^ (Vertex{1} << bit);
            if (x < y)
                edges.push_back({x, y});
        }
    return Graph(n, std::move(edges), Family{FamilyKind::hypercube, dimension});
}

namespace {

std::vector<std::size_t> bfs_distances(const Graph &g, Vertex source)
{
    constexpr auto unreached = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(g.vertex_count(), unreached);
    std::queue<Vertex> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        Vertex x = frontier.front();
        frontier.pop();
        for (auto e : g.incident(x)) {
            Vertex y = g.other_end(e, x);
            if (dist[y] == unreached) {
                dist[y] = dist[x] + 1;
                frontier.push(y);
            }
        }
    }
    return dist;
}

bool two_colorable(const Graph &g)
{
    std::vector<int> side(g.vertex_count(), -1);
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        if (side[start] != -1)
            continue;
        side[start] = 0;
        std::queue<Vertex> frontier;
        frontier.push(start);
        while (!frontier.empty()) {
            Vertex x = frontier.front();
            frontier.pop();
            for (auto e : g.incident(x)) {
                Vertex y = g.other_end(e, x);
                if (side[y] == -1) {
                    side[y] = 1 - side[x];
                    frontier.push(y);
                }
                else if (side[y] == side[x])
                    return false;
            }
        }
    }
    return true;
}

bool has_triangle(const Graph &g)
{
    // for every edge (u,v), intersect the sorted neighbour lists of u and v
    std::vector<std::vector<Vertex>> nbrs(g.vertex_count());
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        for (auto e : g.incident(x))
            nbrs[x].push_back(g.other_end(e, x));
        std::sort(nbrs[x].begin(), nbrs[x].end());
    }
    for (const auto &e : g.edges()) {
        const auto &a = nbrs[e.u];
        const auto &b = nbrs[e.v];
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i == *j)
                return true;
            if (*i < *j)
                ++i;
            else
                ++j;
        }
    }
    return false;
}

} // namespace

StructuralProfile structural_profile(const Graph &g)
{
    StructuralProfile p;
    p.vertex_count = g.vertex_count();
    p.edge_count = g.edge_count();
    p.max_degree = g.max_degree();
    p.is_regular = g.max_degree() == g.min_degree();
    p.is_bipartite = two_colorable(g);
    p.is_triangle_free = p.is_bipartite || !has_triangle(g);

    std::size_t diameter = 0;
    bool connected = true;
    for (Vertex s = 0; s < g.vertex_count() && connected; ++s) {
        for (auto d : bfs_distances(g, s)) {
            if (d == std::numeric_limits<std::size_t>::max()) {
                connected = false;
                break;
            }
            diameter = std::max(diameter, d);
        }
    }
    if (connected)
        p.diameter = diameter;
    return p;
}

} // namespace icol
