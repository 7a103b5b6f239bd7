#pragma once

#include "icol/coloring.hpp"
#include "icol/graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace icol {

class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// n = odd_part * 2^two_adic
struct FactorizationParams {
    std::uint64_t n = 0;
    std::uint64_t odd_part = 0;
    unsigned two_adic = 0;
};

FactorizationParams factorize(std::uint64_t n);

enum class DoublingKind { complete, hypercube };

/// One application of a doubling step.
struct DoublingTrace {
    DoublingKind kind = DoublingKind::complete;
    unsigned step = 0;
    std::size_t source_vertices = 0;
    /// complete: {2m-1, 2m, 4m-1}; hypercube: {n-1, n}
    std::vector<Color> offsets;
    Color source_t = 0;
    Color result_t = 0;

    friend bool operator==(const DoublingTrace &, const DoublingTrace &) = default;
};

struct TowerResult {
    ColoredGraph result;
    std::vector<DoublingTrace> trace;
};

/// Round-robin 1-factorization of K_{2n}: a proper (2n-1)-coloring in which
/// every vertex sees every color.
ColoredGraph canonical_complete_coloring(std::uint64_t n);

/// Builds an interval coloring of K_{4m} from an interval coloring of K_{2m}
/// with t + 4m - 1 colors. The first 2m vertices keep the base coloring, the
/// last 2m carry it shifted by 4m - 1, and the cross edges are filled from
/// the base spectra.
ColoredGraph double_complete(const ColoredGraph &base);

/// Doubles a K_{2p} base coloring q times, where n = p * 2^q.
TowerResult build_complete_tower(std::uint64_t n, const ColoredGraph &base);

/// Edge along bit i gets color i + 1.
ColoredGraph dimension_coloring(unsigned dimension);

/// Builds an interval coloring of Q_n from one of Q_{n-1} with t + n colors.
/// The copies are split by the top bit; the second copy is the image of the
/// first under x -> x + 2^{n-1}.
ColoredGraph double_hypercube(const ColoredGraph &base);

/// Starts from Q_1 with one color and doubles up to `dimension`.
TowerResult build_hypercube_tower(unsigned dimension);

/// Regular graphs only: recolors the top color class t to t - Delta, giving an
/// interval (t-1)-coloring. Throws ConstructionError when t == Delta.
EdgeColoring downshift_regular(const Graph &g, const EdgeColoring &c);

/// Interval colorings for every t in [Delta, top.t], ascending by t.
std::vector<EdgeColoring> spectrum_colorings(const Graph &g, const EdgeColoring &top);

} // namespace icol
