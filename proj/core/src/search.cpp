#include "icol/search.hpp"

#include "icol/bounds.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace icol {

std::string to_string(SearchStatus status)
{
    switch (status) {
    case SearchStatus::feasible:
        return "feasible";
    case SearchStatus::infeasible:
        return "infeasible";
    case SearchStatus::unknown:
        return "unknown";
    }
    return "unknown";
}

std::vector<EdgeIndex> search_edge_order(const Graph &g)
{
    std::vector<EdgeIndex> order(g.edge_count());
    std::iota(order.begin(), order.end(), EdgeIndex{0});
    auto key = [&](EdgeIndex e) {
        const auto &edge = g.edge(e);
        auto a = g.degree(edge.u);
        auto b = g.degree(edge.v);
        return std::pair{std::max(a, b), std::min(a, b)};
    };
    std::stable_sort(order.begin(), order.end(), [&](EdgeIndex x, EdgeIndex y) { return key(x) > key(y); });
    return order;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

class Solver {
public:
    Solver(const Graph &g, Color t, const SearchBudget &budget, const SearchOptions &options)
        : g_(g), t_(t), budget_(budget), options_(options), start_(Clock::now())
    {
        const auto order = search_edge_order(g);
        for (auto e : order) {
            slots_.push_back({e, g.edge(e).u, g.edge(e).v});
        }
        const auto n = g.vertex_count();
        degree_.resize(n);
        for (Vertex v = 0; v < n; ++v)
            degree_[v] = static_cast<Color>(g.degree(v));
        lo_.assign(n, 0);
        hi_.assign(n, 0);
        words_ = static_cast<std::size_t>(t / 64 + 1);
        seen_.assign(n * words_, 0);
        color_uses_.assign(static_cast<std::size_t>(t) + 1, 0);
        unused_ = t;
        assignment_.assign(g.edge_count(), 0);
    }

    SearchOutcome run()
    {
        SearchOutcome out;
        bool found = descend(0);
        out.nodes = nodes_;
        out.elapsed_ms = ms_since(start_);
        if (found) {
            EdgeColoring witness(t_, assignment_);
            auto verdict = verify_interval(g_, witness);
            if (!verdict.ok())
                throw std::logic_error("search produced an invalid witness: " + verdict.describe(g_));
            out.status = SearchStatus::feasible;
            out.witness = std::move(witness);
        }
        else
            out.status = aborted_ ? SearchStatus::unknown : SearchStatus::infeasible;
        return out;
    }

private:
    struct Slot {
        EdgeIndex edge;
        Vertex u;
        Vertex v;
    };

    bool seen(Vertex v, Color c) const
    {
        auto bit = static_cast<std::size_t>(c);
        return (seen_[v * words_ + bit / 64] >> (bit % 64)) & 1U;
    }

    void flip(Vertex v, Color c)
    {
        auto bit = static_cast<std::size_t>(c);
        seen_[v * words_ + bit / 64] ^= std::uint64_t{1} << (bit % 64);
    }

    bool out_of_budget()
    {
        if (budget_.nodes && nodes_ > *budget_.nodes)
            return true;
        if (budget_.seconds && nodes_ % kClockCheckInterval == 0 && ms_since(start_) > *budget_.seconds * 1000.0)
            return true;
        return false;
    }

    // Colors c keeping v's colors inside some window of d(v) consecutive
    // colors within [1, t]. Since t >= d(v) the window always fits in the
    // palette, so this reduces to max(colors) - min(colors) < d(v).
    void narrow(Vertex v, Color &from, Color &to) const
    {
        if (lo_[v] == 0)
            return;
        from = std::max(from, hi_[v] - degree_[v] + 1);
        to = std::min(to, lo_[v] + degree_[v] - 1);
    }

    bool descend(std::size_t depth)
    {
        if (depth == slots_.size())
            return unused_ == 0;
        ++nodes_;
        if (out_of_budget()) {
            aborted_ = true;
            return false;
        }

        const auto [edge, u, v] = slots_[depth];
        Color from = 1;
        Color to = t_;
        narrow(u, from, to);
        narrow(v, from, to);
        if (depth == 0 && options_.symmetry_breaking)
            to = std::min(to, (t_ + 1) / 2);

        const auto edges_left = static_cast<Color>(slots_.size() - depth - 1);
        for (Color c = from; c <= to; ++c) {
            if (seen(u, c) || seen(v, c))
                continue;
            const bool fresh = color_uses_[static_cast<std::size_t>(c)] == 0;
            if (unused_ - (fresh ? 1 : 0) > edges_left)
                continue;

            const Color lo_u = lo_[u], hi_u = hi_[u], lo_v = lo_[v], hi_v = hi_[v];
            lo_[u] = lo_u == 0 ? c : std::min(lo_u, c);
            hi_[u] = std::max(hi_u, c);
            lo_[v] = lo_v == 0 ? c : std::min(lo_v, c);
            hi_[v] = std::max(hi_v, c);
            flip(u, c);
            flip(v, c);
            ++color_uses_[static_cast<std::size_t>(c)];
            if (fresh)
                --unused_;
            assignment_[edge] = c;

            if (descend(depth + 1))
                return true;

            if (fresh)
                ++unused_;
            --color_uses_[static_cast<std::size_t>(c)];
            flip(u, c);
            flip(v, c);
            lo_[u] = lo_u;
            hi_[u] = hi_u;
            lo_[v] = lo_v;
            hi_[v] = hi_v;
            if (aborted_)
                return false;
        }
        return false;
    }

    const Graph &g_;
    Color t_;
    SearchBudget budget_;
    SearchOptions options_;
    Clock::time_point start_;

    std::vector<Slot> slots_;
    std::vector<Color> degree_;
    std::vector<Color> lo_; // 0 while v has no colored edge
    std::vector<Color> hi_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> seen_;
    std::vector<std::uint32_t> color_uses_;
    Color unused_ = 0;
    std::vector<Color> assignment_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

// Remaining budget after `spent` has been used by earlier queries.
SearchBudget remaining(const SearchBudget &budget, std::uint64_t nodes_spent, double ms_spent)
{
    SearchBudget rest;
    if (budget.nodes)
        rest.nodes = *budget.nodes > nodes_spent ? *budget.nodes - nodes_spent : 0;
    if (budget.seconds)
        rest.seconds = std::max(0.0, *budget.seconds - ms_spent / 1000.0);
    return rest;
}

void require_edges(const Graph &g)
{
    if (g.edge_count() == 0)
        throw std::invalid_argument("graph has no edges");
}

} // namespace

SearchOutcome find_interval_coloring(const Graph &g, Color t, const SearchBudget &budget,
                                     const SearchOptions &options)
{
    if (t < 1)
        throw std::invalid_argument("palette size must be positive");
    if (!budget.bounded() && g.edge_count() > kUnboundedSearchEdgeLimit)
        throw std::invalid_argument("graphs with more than " + std::to_string(kUnboundedSearchEdgeLimit) +
                                    " edges need a time or node budget");

    // Trivial refutations: a max-degree vertex needs Delta distinct colors,
    // and t colors need at least t edges.
    if (t < static_cast<Color>(g.max_degree()) || t > static_cast<Color>(g.edge_count()))
        return SearchOutcome{SearchStatus::infeasible, std::nullopt, 0, 0.0};

    return Solver(g, t, budget, options).run();
}

ExtremeResult exact_W(const Graph &g, const SearchBudget &budget, ScanDirection direction,
                      std::optional<Color> start, const SearchOptions &options)
{
    require_edges(g);
    const auto bounds = upper_bound_W(g);
    const Color ceiling = *bounds.upper_W;
    const Color floor = bounds.lower_w;
    const bool regular = g.max_degree() == g.min_degree();

    ExtremeResult result;
    auto ask = [&](Color t) {
        auto outcome =
            find_interval_coloring(g, t, remaining(budget, result.nodes, result.elapsed_ms), options);
        result.nodes += outcome.nodes;
        result.elapsed_ms += outcome.elapsed_ms;
        result.queries.emplace_back(t, outcome.status);
        return outcome;
    };

    if (direction == ScanDirection::upward && regular && start && *start >= floor && *start <= ceiling) {
        auto first = ask(*start);
        if (first.status == SearchStatus::feasible) {
            result.best_feasible = *start;
            result.witness = std::move(first.witness);
            for (Color t = *start + 1; t <= ceiling; ++t) {
                auto outcome = ask(t);
                if (outcome.status == SearchStatus::feasible) {
                    result.best_feasible = t;
                    result.witness = std::move(outcome.witness);
                    continue;
                }
                if (outcome.status == SearchStatus::unknown) {
                    result.status = ExtremeStatus::bracket;
                    result.unresolved = ceiling;
                    return result;
                }
                break;
            }
            result.status = ExtremeStatus::exact;
            result.value = result.best_feasible;
            return result;
        }
        // start was not a feasible anchor; fall through to the downward scan
    }

    std::optional<Color> highest_unknown;
    for (Color t = ceiling; t >= floor && t >= 1; --t) {
        auto outcome = ask(t);
        if (outcome.status == SearchStatus::infeasible)
            continue;
        if (outcome.status == SearchStatus::unknown) {
            if (!highest_unknown)
                highest_unknown = t;
            continue;
        }
        result.best_feasible = t;
        result.witness = std::move(outcome.witness);
        if (highest_unknown) {
            result.status = ExtremeStatus::bracket;
            result.unresolved = highest_unknown;
        }
        else {
            result.status = ExtremeStatus::exact;
            result.value = t;
        }
        return result;
    }
    if (highest_unknown) {
        result.status = ExtremeStatus::bracket;
        result.unresolved = highest_unknown;
    }
    else
        result.status = ExtremeStatus::not_colorable;
    return result;
}

ExtremeResult exact_w(const Graph &g, const SearchBudget &budget, const SearchOptions &options)
{
    require_edges(g);
    const auto bounds = upper_bound_W(g);
    const Color ceiling = *bounds.upper_W;

    ExtremeResult result;
    std::optional<Color> lowest_unknown;
    for (Color t = bounds.lower_w; t <= ceiling; ++t) {
        auto outcome =
            find_interval_coloring(g, t, remaining(budget, result.nodes, result.elapsed_ms), options);
        result.nodes += outcome.nodes;
        result.elapsed_ms += outcome.elapsed_ms;
        result.queries.emplace_back(t, outcome.status);
        if (outcome.status == SearchStatus::infeasible)
            continue;
        if (outcome.status == SearchStatus::unknown) {
            if (!lowest_unknown)
                lowest_unknown = t;
            continue;
        }
        result.best_feasible = t;
        result.witness = std::move(outcome.witness);
        if (lowest_unknown) {
            result.status = ExtremeStatus::bracket;
            result.unresolved = lowest_unknown;
        }
        else {
            result.status = ExtremeStatus::exact;
            result.value = t;
        }
        return result;
    }
    if (lowest_unknown) {
        result.status = ExtremeStatus::bracket;
        result.unresolved = lowest_unknown;
    }
    else
        result.status = ExtremeStatus::not_colorable;
    return result;
}

} // namespace icol
