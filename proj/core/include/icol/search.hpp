#pragma once

#include "icol/coloring.hpp"
#include "icol/graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace icol {

/// Limits for one search call. Graphs with more than
/// kUnboundedSearchEdgeLimit edges must set at least one of them.
struct SearchBudget {
    std::optional<double> seconds;
    std::optional<std::uint64_t> nodes;

    bool bounded() const noexcept { return seconds.has_value() || nodes.has_value(); }
};

inline constexpr std::size_t kUnboundedSearchEdgeLimit = 16;

/// The wall clock is sampled once every this many nodes.
inline constexpr std::uint64_t kClockCheckInterval = std::uint64_t{1} << 12;

struct SearchOptions {
    /// Restrict the first edge to the lower half of the palette. Sound because
    /// c -> t + 1 - c maps interval t-colorings onto interval t-colorings.
    bool symmetry_breaking = true;
};

enum class SearchStatus { feasible, infeasible, unknown };

std::string to_string(SearchStatus status);

struct SearchOutcome {
    SearchStatus status = SearchStatus::unknown;
    /// Set iff feasible; always passes verify_interval.
    std::optional<EdgeColoring> witness;
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
};

/// Exhaustive backtracking for an interval t-coloring of g.
///
/// Edges are assigned in a fixed order (larger endpoint degrees first, then
/// canonical index) and colors ascending. A partial assignment is extended
/// only while every vertex's colors stay distinct and fit in a window of
/// d(v) consecutive colors inside [1, t], and while the palette colors not
/// yet used can still be covered by the edges left. infeasible is reported
/// only after the tree is exhausted; running out of budget gives unknown.
SearchOutcome find_interval_coloring(const Graph &g, Color t, const SearchBudget &budget,
                                     const SearchOptions &options = {});

/// Edge visiting order used by find_interval_coloring.
std::vector<EdgeIndex> search_edge_order(const Graph &g);

enum class ExtremeStatus {
    exact,         // value holds the proved optimum
    bracket,       // some query ran out of budget; see best_feasible / unresolved
    not_colorable, // every t up to the ceiling is infeasible
};

struct ExtremeResult {
    ExtremeStatus status = ExtremeStatus::bracket;
    std::optional<Color> value;
    /// Bracket ends: the best t proved feasible and the nearest t left unknown.
    std::optional<Color> best_feasible;
    std::optional<Color> unresolved;
    std::optional<EdgeColoring> witness;
    std::vector<std::pair<Color, SearchStatus>> queries;
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
};

enum class ScanDirection {
    downward, // from the bound ceiling down to the first feasible t
    upward,   // from a known feasible t up to the first infeasible one (regular graphs)
};

/// Largest interval palette W(g). The budget covers the whole scan. Upward
/// scans rely on the spectrum of a regular graph being contiguous; for
/// non-regular graphs the scan is always downward.
ExtremeResult exact_W(const Graph &g, const SearchBudget &budget,
                      ScanDirection direction = ScanDirection::downward,
                      std::optional<Color> start = std::nullopt, const SearchOptions &options = {});

/// Smallest interval palette w(g), scanning upward from the max degree.
ExtremeResult exact_w(const Graph &g, const SearchBudget &budget, const SearchOptions &options = {});

} // namespace icol
