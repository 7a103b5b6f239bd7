#pragma once

#include "icol/graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace icol {

/// Colors are 1-based; 0 never appears in a stored coloring.
using Color = std::int64_t;

class ColoringError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a coloring is applied to a graph it was not built for.
class ColoringMismatch : public ColoringError {
public:
    using ColoringError::ColoringError;
};

/// A color per edge (indexed like Graph::edges()) plus a declared palette 1..t.
///
/// Every stored color lies in [1, t]. Whether every palette color is actually
/// used is left to verify_interval, so partially built colorings are legal.
class EdgeColoring {
public:
    EdgeColoring(Color t, std::vector<Color> colors);

    Color palette_size() const noexcept { return t_; }
    std::size_t size() const noexcept { return colors_.size(); }
    Color operator[](EdgeIndex e) const { return colors_.at(e); }
    const std::vector<Color> &colors() const noexcept { return colors_; }

    friend bool operator==(const EdgeColoring &, const EdgeColoring &) = default;

private:
    Color t_;
    std::vector<Color> colors_;
};

/// A graph together with a coloring of it.
struct ColoredGraph {
    Graph graph;
    EdgeColoring coloring;
};

/// Throws ColoringMismatch unless c has exactly one color per edge of g.
void require_bound(const Graph &g, const EdgeColoring &c);

struct VertexSpectrum {
    Vertex vertex = 0;
    std::vector<Color> colors; // ascending, distinct
};

VertexSpectrum vertex_spectrum(const Graph &g, const EdgeColoring &c, Vertex v);

struct ProperViolation {
    Vertex vertex = 0;
    EdgeIndex first = 0;
    EdgeIndex second = 0;
};

/// ok() when no two edges at a vertex share a color. Otherwise the first
/// witness scanning vertices ascending, then incident edges ascending.
struct ProperVerdict {
    std::optional<ProperViolation> violation;

    bool ok() const noexcept { return !violation; }
};

ProperVerdict verify_proper(const Graph &g, const EdgeColoring &c);

enum class IntervalFailure {
    none,
    improper,        // two edges at `vertex` share a color
    not_consecutive, // spectrum at `vertex` has a gap
    unused_color,    // `color` appears on no edge
};

struct IntervalVerdict {
    IntervalFailure failure = IntervalFailure::none;
    Vertex vertex = 0;
    EdgeIndex first = 0;
    EdgeIndex second = 0;
    Color color = 0;
    std::vector<Color> spectrum; // filled for not_consecutive

    bool ok() const noexcept { return failure == IntervalFailure::none; }
    std::string describe(const Graph &g) const;
};

/// Checks properness, consecutive spectra at every vertex, then that every
/// color 1..t is used, reporting the first failure in that order.
IntervalVerdict verify_interval(const Graph &g, const EdgeColoring &c);

} // namespace icol
