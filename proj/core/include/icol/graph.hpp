#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace icol {

using Vertex = std::uint32_t;
using EdgeIndex = std::size_t;

/// Largest hypercube dimension the generators accept (2^24 vertices).
inline constexpr unsigned kMaxHypercubeDimension = 24;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

enum class FamilyKind { complete, hypercube, generic };

/// Which generator produced a graph. `param` is the vertex count for
/// complete graphs and the dimension for hypercubes; unused for generic.
struct Family {
    FamilyKind kind = FamilyKind::generic;
    std::uint32_t param = 0;

    friend bool operator==(const Family &, const Family &) = default;
};

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string &name);

/// Immutable simple undirected graph in canonical form.
///
/// Edges are stored with u < v and sorted lexicographically, so two graphs
/// with the same edge set compare equal and serialize identically. The edge
/// index (position in the sorted list) is what colorings are keyed on.
class Graph {
public:
    /// Validates and canonicalizes. Pairs may be given in either orientation;
    /// loops, duplicates and out-of-range endpoints throw GraphError.
    Graph(std::size_t vertex_count, std::vector<Edge> edges, Family family = {});

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge &edge(EdgeIndex e) const { return edges_.at(e); }
    const Family &family() const noexcept { return family_; }

    std::size_t degree(Vertex v) const;
    std::size_t max_degree() const noexcept { return max_degree_; }
    std::size_t min_degree() const noexcept { return min_degree_; }

    /// Incident edge indices of v, ascending.
    std::span<const EdgeIndex> incident(Vertex v) const;

    /// Endpoint of edge e that is not v.
    Vertex other_end(EdgeIndex e, Vertex v) const;

    std::optional<EdgeIndex> find_edge(Vertex a, Vertex b) const noexcept;
    /// Like find_edge but throws GraphError when the pair is not an edge.
    EdgeIndex edge_index(Vertex a, Vertex b) const;

    friend bool operator==(const Graph &a, const Graph &b) noexcept
    {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    std::size_t vertex_count_;
    std::vector<Edge> edges_;
    Family family_;
    // CSR incidence: incident edges of v are incidence_[offsets_[v] .. offsets_[v+1])
    std::vector<std::size_t> offsets_;
    std::vector<EdgeIndex> incidence_;
    std::size_t max_degree_ = 0;
    std::size_t min_degree_ = 0;
};

/// K_p on vertices 0..p-1.
Graph complete_graph(std::size_t num_vertices);

/// Q_n: vertex ids are n-bit masks, edges join masks at Hamming distance one.
/// Vertices with the top bit clear form the first Q_{n-1} copy.
Graph hypercube_graph(unsigned dimension);

struct StructuralProfile {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::size_t max_degree = 0;
    bool is_regular = false;
    bool is_bipartite = false;
    bool is_triangle_free = false;
    /// Empty when the graph is disconnected.
    std::optional<std::size_t> diameter;
};

StructuralProfile structural_profile(const Graph &g);

} // namespace icol
