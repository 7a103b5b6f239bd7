#pragma once

// Test-only reference implementations. Nothing here calls into the solver or
// the verifiers, so they can serve as independent ground truth.

#include "icol/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace icol::testing {

/// Interval t-coloring check straight from the definition.
inline bool naive_is_interval(const Graph &g, const std::vector<std::int64_t> &colors, std::int64_t t)
{
    if (colors.size() != g.edge_count())
        return false;
    std::vector<std::set<std::int64_t>> at(g.vertex_count());
    std::vector<std::size_t> deg(g.vertex_count(), 0);
    std::set<std::int64_t> used;
    for (std::size_t e = 0; e < colors.size(); ++e) {
        auto c = colors[e];
        if (c < 1 || c > t)
            return false;
        auto [u, v] = g.edges()[e];
        at[u].insert(c);
        at[v].insert(c);
        ++deg[u];
        ++deg[v];
        used.insert(c);
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (deg[v] == 0)
            continue;
        if (at[v].size() != deg[v])
            return false; // repeated color
        if (*at[v].rbegin() - *at[v].begin() + 1 != static_cast<std::int64_t>(deg[v]))
            return false;
    }
    return static_cast<std::int64_t>(used.size()) == t;
}

/// Enumerates every assignment of colors 1..t to the edges in canonical order,
/// cutting only branches that already repeat a color at a vertex or whose
/// colors at a fully colored vertex are not consecutive. Returns true iff some
/// complete assignment passes naive_is_interval.
inline bool naive_interval_colorable(const Graph &g, std::int64_t t)
{
    const auto m = g.edge_count();
    std::vector<std::int64_t> colors(m, 0);
    std::vector<std::size_t> remaining(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        ++remaining[u];
        ++remaining[v];
    }
    std::vector<std::vector<std::int64_t>> at(g.vertex_count());

    auto vertex_done_ok = [&](Vertex v) {
        auto s = at[v];
        std::sort(s.begin(), s.end());
        return s.back() - s.front() + 1 == static_cast<std::int64_t>(s.size());
    };

    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == m)
            return naive_is_interval(g, colors, t);
        auto [u, v] = g.edges()[i];
        for (std::int64_t c = 1; c <= t; ++c) {
            if (std::find(at[u].begin(), at[u].end(), c) != at[u].end() ||
                std::find(at[v].begin(), at[v].end(), c) != at[v].end())
                continue;
            colors[i] = c;
            at[u].push_back(c);
            at[v].push_back(c);
            --remaining[u];
            --remaining[v];
            bool ok = (remaining[u] > 0 || vertex_done_ok(u)) && (remaining[v] > 0 || vertex_done_ok(v));
            if (ok && go(i + 1))
                return true;
            ++remaining[u];
            ++remaining[v];
            at[u].pop_back();
            at[v].pop_back();
        }
        colors[i] = 0;
        return false;
    };
    return go(0);
}

/// All-pairs distances by Floyd-Warshall on the adjacency matrix; returns -1
/// for a disconnected graph.
inline long floyd_diameter(const Graph &g)
{
    const auto n = g.vertex_count();
    constexpr long inf = 1L << 40;
    std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
    for (std::size_t i = 0; i < n; ++i)
        d[i][i] = 0;
    for (auto [u, v] : g.edges())
        d[u][v] = d[v][u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    long diam = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (d[i][j] >= inf)
                return -1;
            diam = std::max(diam, d[i][j]);
        }
    return diam;
}

namespace detail {

using EdgeSet = std::vector<std::pair<int, int>>;

inline EdgeSet relabel(const EdgeSet &edges, const std::vector<int> &perm)
{
    EdgeSet out;
    for (auto [a, b] : edges) {
        int x = perm[static_cast<std::size_t>(a)];
        int y = perm[static_cast<std::size_t>(b)];
        out.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Lexicographically smallest relabelling, permuting only within groups of
// equal degree (a relabelling that sorts vertices by degree first).
inline EdgeSet canonical(int n, const EdgeSet &edges)
{
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : edges) {
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)]; });

    // group boundaries in `order`
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && deg[static_cast<std::size_t>(order[j])] == deg[static_cast<std::size_t>(order[i])])
            ++j;
        groups.emplace_back(i, j);
        i = j;
    }

    EdgeSet best;
    bool have = false;
    std::function<void(std::size_t)> rec = [&](std::size_t gi) {
        if (gi == groups.size()) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (std::size_t pos = 0; pos < order.size(); ++pos)
                perm[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
            auto candidate = relabel(edges, perm);
            if (!have || candidate < best) {
                best = std::move(candidate);
                have = true;
            }
            return;
        }
        auto [lo, hi] = groups[gi];
        std::sort(order.begin() + static_cast<long>(lo), order.begin() + static_cast<long>(hi));
        do {
            rec(gi + 1);
        } while (std::next_permutation(order.begin() + static_cast<long>(lo), order.begin() + static_cast<long>(hi)));
    };
    rec(0);
    return best;
}

} // namespace detail

/// Every connected simple graph with 1..max_edges edges, one per isomorphism
/// class. Built by growing connected graphs one edge at a time (either a
/// chord or a pendant edge to a new vertex) and deduplicating by canonical form.
inline std::vector<Graph> connected_graphs_up_to(std::size_t max_edges)
{
    using detail::EdgeSet;
    std::map<std::pair<int, EdgeSet>, bool> seen;
    std::vector<std::pair<int, EdgeSet>> level{{2, {{0, 1}}}};
    seen[{2, level.front().second}] = true;
    std::vector<Graph> out;

    for (std::size_t m = 1; m <= max_edges; ++m) {
        std::vector<std::pair<int, EdgeSet>> next;
        for (const auto &[n, edges] : level) {
            std::vector<Edge> list;
            for (auto [a, b] : edges)
                list.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
            out.emplace_back(static_cast<std::size_t>(n), std::move(list));
            if (m == max_edges)
                continue;

            std::set<std::pair<int, int>> present(edges.begin(), edges.end());
            auto push = [&](int vertices, EdgeSet grown) {
                auto key = std::make_pair(vertices, detail::canonical(vertices, grown));
                if (seen.emplace(key, true).second)
                    next.push_back(std::move(key));
            };
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (!present.count({a, b})) {
                        auto grown = edges;
                        grown.emplace_back(a, b);
                        push(n, grown);
                    }
            for (int a = 0; a < n; ++a) {
                auto grown = edges;
                grown.emplace_back(a, n);
                push(n + 1, grown);
            }
        }
        level = std::move(next);
    }
    return out;
}

/// Erdos-Renyi style random simple graph, seeded.
inline Graph random_graph(std::mt19937 &rng, std::size_t n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (coin(rng))
                edges.push_back({a, b});
    return Graph(n, std::move(edges));
}

} // namespace icol::testing
