#pragma once

#include "icol/coloring.hpp"
#include "icol/constructions.hpp"
#include "icol/graph.hpp"
#include "icol/search.hpp"

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace icol {

inline constexpr std::string_view kCertificateFormat = "ic-certificate/1";
inline constexpr std::string_view kVerifierVersion = "icol-verify/1";

enum class ProvenanceKind { construction, oracle, imported };

std::string to_string(ProvenanceKind kind);

struct Provenance {
    ProvenanceKind kind = ProvenanceKind::imported;
    std::vector<DoublingTrace> trace; // construction
    std::uint64_t nodes = 0;          // oracle
    double elapsed_ms = 0.0;          // oracle
};

/// A (graph, coloring) pair that has passed verify_interval, plus where it
/// came from. The graph is embedded so generic graphs survive a round trip.
struct Certificate {
    Graph graph;
    EdgeColoring coloring;
    Provenance provenance;
    std::string created_at;
    std::string verifier_version = std::string(kVerifierVersion);

    Color palette_size() const noexcept { return coloring.palette_size(); }
    /// Content address: depends on the graph and the colors only.
    std::string id() const;
};

class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Verifies and wraps. Throws CertificateError when the coloring is not an
/// interval coloring of the graph.
Certificate seal_certificate(ColoredGraph colored, Provenance provenance);

std::string write_certificate_json(const Certificate &cert);
/// Parses and re-verifies: embedded graph hash, regenerated family graph,
/// and verify_interval must all agree. Throws CertificateError otherwise.
Certificate read_certificate_json(std::string_view text);

/// Runs find_interval_coloring on the family graph and seals the witness.
/// `param` follows the family: n for K_{2n}, the dimension for Q_n.
struct CertificateAttempt {
    SearchOutcome outcome;
    std::optional<Certificate> certificate;
};

CertificateAttempt make_certificate(FamilyKind family, std::uint64_t param, Color target_t,
                                    const SearchBudget &budget, const SearchOptions &options = {});

/// Graph for a family parameter as the CLI uses it: K_{2n} or Q_n.
Graph family_graph(FamilyKind family, std::uint64_t param);

/// Content-addressed directory of certificate files. Anything that fails
/// re-verification on load is moved to quarantine/ and skipped.
class CertificateStore {
public:
    explicit CertificateStore(std::filesystem::path root);

    const std::filesystem::path &root() const noexcept { return root_; }

    struct Added {
        std::filesystem::path path;
        bool created = false; // false when the same certificate was already stored
    };

    Added add(const Certificate &cert);

    struct Entry {
        std::filesystem::path path;
        Certificate certificate;
    };

    /// Every certificate that verifies, ordered by file name.
    std::vector<Entry> list() const;
    std::vector<std::filesystem::path> quarantined() const;

    /// Highest-t verified certificate on exactly this graph.
    std::optional<Certificate> best_for(const Graph &g) const;

private:
    std::filesystem::path root_;
    mutable std::mutex write_mutex_;
};

} // namespace icol
