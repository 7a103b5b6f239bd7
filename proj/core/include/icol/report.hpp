#pragma once

#include "icol/bounds.hpp"
#include "icol/certificate.hpp"
#include "icol/search.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace icol {

/// Closed-form lower bound on W reached by the complete tower from a base at
/// 3p - 2 colors: 4n - 2 - p - q for n = p * 2^q.
Color complete_tower_formula(std::uint64_t n);
/// n(n+1)/2
Color hypercube_tower_formula(std::uint64_t n);

/// Palette size of the tower built from a base with base_t colors on K_{2p}.
Color complete_tower_colors(std::uint64_t n, Color base_t);

struct ReportRow {
    FamilyKind family = FamilyKind::complete;
    std::uint64_t param = 0; // n for K_{2n}, dimension for Q_n
    std::size_t vertices = 0;
    Color delta = 0;
    std::optional<Color> w;
    std::string w_source; // "family" (closed form) or "oracle"
    Color construction_t = 0;
    std::string base;    // where the tower base came from
    Color formula_lower = 0;
    bool construction_meets_formula = false;
    std::optional<Color> upper_W;
    std::optional<BoundSource> upper_source;
    std::string oracle; // "skipped", "W=6 proved", "W in [6,7]", ...
};

struct ReportOptions {
    bool run_oracle = false;
    SearchBudget budget{};
    /// Base certificates for K_{2p}, p > 1. Without one the tower starts from
    /// the round-robin coloring of K_{2p}.
    const CertificateStore *store = nullptr;
};

/// Every number is recomputed per row from the factorization and a fresh
/// construction; nothing is cached between rows.
std::vector<ReportRow> build_report(FamilyKind family, std::uint64_t from, std::uint64_t to,
                                    const ReportOptions &options = {});

std::string render_csv(const std::vector<ReportRow> &rows);
std::string render_json(const std::vector<ReportRow> &rows);
std::string render_markdown(const std::vector<ReportRow> &rows);

} // namespace icol
