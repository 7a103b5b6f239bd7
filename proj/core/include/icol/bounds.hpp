#pragma once

#include "icol/coloring.hpp"
#include "icol/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace icol {

/// The known ceilings on the largest interval palette W(G).
enum class BoundSource {
    bipartite_diameter, // bipartite:           W <= diam * (Delta - 1) + 1
    nonempty_edges,     // at least one edge:   W <= 2|V| - 3
    three_vertices,     // |V| >= 3:            W <= 2|V| - 4
    triangle_free,      // no triangle:         W <= |V| - 1
};

std::string to_string(BoundSource source);

struct BoundTerm {
    BoundSource source;
    bool applicable = false;
    /// Formula value; meaningful only when applicable.
    Color value = 0;
};

/// Bounds on w(G) and W(G). Every ceiling presupposes that G is interval
/// colorable at all, hence `conditional_on_membership`.
struct BoundReport {
    Color lower_w = 0; // max degree
    std::optional<Color> upper_W;
    std::optional<BoundSource> tightest;
    std::vector<BoundTerm> terms; // one per BoundSource, in enum order
    bool conditional_on_membership = true;
};

BoundReport upper_bound_W(const StructuralProfile &profile, std::size_t num_vertices);

inline BoundReport upper_bound_W(const Graph &g)
{
    return upper_bound_W(structural_profile(g), g.vertex_count());
}

enum class Membership { in_N, not_in_N, unknown };

struct MembershipVerdict {
    Membership status = Membership::unknown;
    std::optional<Color> w;
};

/// Closed-form facts for the two families: K_{2n} and Q_n are interval
/// colorable with w equal to their degree, odd complete graphs are not.
MembershipVerdict family_membership(const Family &family);

} // namespace icol
