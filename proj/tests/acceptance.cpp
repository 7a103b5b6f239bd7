// One line per acceptance criterion. Exit status is the number of failures.

#include "icol/bounds.hpp"
#include "icol/certificate.hpp"
#include "icol/constructions.hpp"
#include "icol/report.hpp"
#include "icol/search.hpp"

#include "support/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace icol;

namespace {

// wall-clock limits in seconds
constexpr double kLimitGenerators = 5.0;
constexpr double kLimitCompleteTowers = 10.0;
constexpr double kLimitK6Oracle = 120.0;
constexpr double kLimitHypercubeTowers = 5.0;
constexpr double kLimitSolverCorpus = 60.0;
constexpr double kLimitSmall = 60.0;

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const char *title, double limit, const std::function<void(Check &)> &body)
{
    auto start = std::chrono::steady_clock::now();
    Check check;
    try {
        body(check);
    }
    catch (const std::exception &e) {
        check.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.require(secs <= limit, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s");
    if (!check.ok)
        ++failures;
    std::printf("[%s] %d %s (%.2f s)%s%s\n", check.ok ? "PASS" : "FAIL", id, title, secs,
                check.ok ? "" : ": ", check.detail.c_str());
    std::fflush(stdout);
}

bool interval(const ColoredGraph &cg)
{
    return verify_interval(cg.graph, cg.coloring).ok() &&
           testing::naive_is_interval(cg.graph, cg.coloring.colors(), cg.coloring.palette_size());
}

std::string name(const Graph &g)
{
    return "graph on " + std::to_string(g.vertex_count()) + " vertices";
}

} // namespace

int main()
{
    criterion(1, "round-robin K_2n (n<=16) and dimension Q_n (n<=12) colorings verify", kLimitGenerators,
              [](Check &c) {
                  for (std::uint64_t n = 1; n <= 16; ++n) {
                      auto cg = canonical_complete_coloring(n);
                      c.require(cg.coloring.palette_size() == static_cast<Color>(2 * n - 1) && interval(cg),
                                "K_" + std::to_string(2 * n));
                  }
                  for (unsigned n = 1; n <= 12; ++n) {
                      auto cg = dimension_coloring(n);
                      c.require(cg.coloring.palette_size() == static_cast<Color>(n) && interval(cg),
                                "Q_" + std::to_string(n));
                  }
              });

    criterion(2, "complete towers K_4, K_8, K_16, K_32 reach t = 4, 11, 26, 57", kLimitCompleteTowers,
              [](Check &c) {
                  ColoredGraph k2{complete_graph(2), EdgeColoring(1, {1})};
                  const std::pair<std::uint64_t, Color> expected[] = {{2, 4}, {4, 11}, {8, 26}, {16, 57}};
                  for (auto [n, t] : expected) {
                      auto tower = build_complete_tower(n, k2);
                      c.require(tower.result.coloring.palette_size() == t && interval(tower.result),
                                "K_" + std::to_string(2 * n));
                      c.require(t == complete_tower_colors(n, 1), "closed form for K_" + std::to_string(2 * n));
                  }
              });

    criterion(3, "oracle finds K_6 at t=7; tower from it gives K_12 at t=18", kLimitK6Oracle, [](Check &c) {
        auto attempt = make_certificate(FamilyKind::complete, 3, 7, SearchBudget{kLimitK6Oracle, std::nullopt});
        c.require(attempt.certificate.has_value(), "K_6 t=7 search: " + to_string(attempt.outcome.status));
        if (!attempt.certificate)
            return;
        ColoredGraph base{attempt.certificate->graph, attempt.certificate->coloring};
        c.require(interval(base), "K_6 witness");
        auto tower = build_complete_tower(6, base);
        c.require(tower.result.coloring.palette_size() == 18 && interval(tower.result), "K_12");
    });

    criterion(4, "hypercube towers Q_2..Q_6 reach t = 3, 6, 10, 15, 21", kLimitHypercubeTowers, [](Check &c) {
        for (unsigned n = 2; n <= 6; ++n) {
            auto tower = build_hypercube_tower(n);
            c.require(tower.result.coloring.palette_size() == static_cast<Color>(n * (n + 1) / 2) &&
                          interval(tower.result),
                      "Q_" + std::to_string(n));
        }
    });

    criterion(5, "downshift chains cover [Delta, t]; oracle spectrum of K_4 and Q_2 is exactly [Delta, W]",
              kLimitSmall, [](Check &c) {
                  std::vector<ColoredGraph> tops;
                  ColoredGraph k2{complete_graph(2), EdgeColoring(1, {1})};
                  for (std::uint64_t n : {1, 2, 4, 8, 16})
                      tops.push_back(build_complete_tower(n, k2).result);
                  for (unsigned n = 1; n <= 6; ++n)
                      tops.push_back(build_hypercube_tower(n).result);
                  for (const auto &top : tops) {
                      auto chain = spectrum_colorings(top.graph, top.coloring);
                      const auto delta = static_cast<Color>(top.graph.max_degree());
                      c.require(chain.size() == static_cast<std::size_t>(top.coloring.palette_size() - delta + 1),
                                "chain length on " + name(top.graph));
                      for (std::size_t i = 0; i < chain.size(); ++i) {
                          c.require(chain[i].palette_size() == delta + static_cast<Color>(i),
                                    "chain order on " + name(top.graph));
                          c.require(interval(ColoredGraph{top.graph, chain[i]}),
                                    "t=" + std::to_string(chain[i].palette_size()) + " on " + name(top.graph));
                      }
                  }
                  const std::pair<Graph, Color> small[] = {{complete_graph(4), 4}, {hypercube_graph(2), 3}};
                  for (const auto &[g, W] : small) {
                      const auto delta = static_cast<Color>(g.max_degree());
                      for (Color t = 1; t <= W + 1; ++t) {
                          bool feasible =
                              find_interval_coloring(g, t, SearchBudget{}).status == SearchStatus::feasible;
                          c.require(feasible == (t >= delta && t <= W),
                                    "t=" + std::to_string(t) + " on " + name(g));
                      }
                  }
              });

    criterion(6, "solver agrees with naive enumeration on all connected graphs with <= 7 edges, K_4 and Q_2",
              kLimitSolverCorpus, [](Check &c) {
                  auto corpus = testing::connected_graphs_up_to(7);
                  c.require(corpus.size() == 131, "corpus has " + std::to_string(corpus.size()) + " graphs");
                  corpus.push_back(complete_graph(4));
                  corpus.push_back(hypercube_graph(2));
                  for (const auto &g : corpus) {
                      const auto nv = static_cast<Color>(g.vertex_count());
                      const Color ceiling = nv >= 3 ? 2 * nv - 4 : 2 * nv - 3;
                      for (Color t = 1; t <= ceiling; ++t) {
                          auto outcome = find_interval_coloring(g, t, SearchBudget{});
                          bool expected = testing::naive_interval_colorable(g, t);
                          c.require(outcome.status ==
                                        (expected ? SearchStatus::feasible : SearchStatus::infeasible),
                                    "t=" + std::to_string(t) + " on " + name(g) + " with " +
                                        std::to_string(g.edge_count()) + " edges");
                          if (outcome.witness)
                              c.require(testing::naive_is_interval(g, outcome.witness->colors(), t),
                                        "witness on " + name(g));
                      }
                  }
              });

    criterion(7, "upper bounds: K_4 -> 4, K_6 -> 8, Q_3 -> 7, Q_4 -> 13", kLimitSmall, [](Check &c) {
        const std::pair<Graph, Color> expected[] = {
            {complete_graph(4), 4}, {complete_graph(6), 8}, {hypercube_graph(3), 7}, {hypercube_graph(4), 13}};
        for (const auto &[g, bound] : expected) {
            auto r = upper_bound_W(g);
            c.require(r.upper_W == bound, "bound on " + name(g));

            // the same minimum from the formulas, with the diameter taken by Floyd-Warshall
            const auto nv = static_cast<Color>(g.vertex_count());
            const auto delta = static_cast<Color>(g.max_degree());
            const bool hypercube = g.family().kind == FamilyKind::hypercube;
            Color recomputed = std::min(2 * nv - 3, 2 * nv - 4);
            if (hypercube) {
                recomputed = std::min(recomputed, testing::floyd_diameter(g) * (delta - 1) + 1);
                recomputed = std::min(recomputed, nv - 1);
            }
            c.require(recomputed == bound, "formula recomputation on " + name(g));
        }
    });

    criterion(8, "K_3 and K_5 have no interval t-coloring up to the ceiling", kLimitSmall, [](Check &c) {
        for (std::size_t n : {3, 5}) {
            auto g = complete_graph(n);
            const auto ceiling = *upper_bound_W(g).upper_W;
            c.require(ceiling == static_cast<Color>(2 * n - 4), "ceiling of K_" + std::to_string(n));
            for (Color t = 1; t <= ceiling; ++t) {
                c.require(find_interval_coloring(g, t, SearchBudget{}).status == SearchStatus::infeasible,
                          "solver t=" + std::to_string(t) + " on K_" + std::to_string(n));
                c.require(!testing::naive_interval_colorable(g, t),
                          "naive t=" + std::to_string(t) + " on K_" + std::to_string(n));
            }
            c.require(family_membership(g.family()).status == Membership::not_in_N, "membership");
        }
    });

    std::printf("%d of 8 criteria failed\n", failures);
    return failures;
}
