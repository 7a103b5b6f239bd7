#pragma once

#include "icol/coloring.hpp"
#include "icol/graph.hpp"
#include "icol/search.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace icol {

inline constexpr std::string_view kGraphFormat = "ic-graph/1";
inline constexpr std::string_view kColoringFormat = "ic-coloring/1";

/// Malformed or inconsistent file contents.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A coloring file names a different graph than the one supplied.
class HashMismatch : public FormatError {
public:
    using FormatError::FormatError;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

/// SHA-256 (hex) of the vertex count and canonical edge list. The family tag
/// is not hashed, so a generic graph equal to K_4 hashes like K_4.
std::string graph_hash(const Graph &g);

std::string write_graph_json(const Graph &g);
/// Rejects loops, duplicates, unsorted edge lists and family tags that do
/// not match the edges.
Graph read_graph_json(std::string_view text);

std::string write_coloring_json(const Graph &g, const EdgeColoring &c);

struct ColoringDocument {
    std::string graph_hash;
    EdgeColoring coloring;
};

ColoringDocument read_coloring_json(std::string_view text);
/// Reads a coloring and checks it belongs to g (hash and edge count).
EdgeColoring read_coloring_json(std::string_view text, const Graph &g);

/// Graphviz, edges labelled with their color when a coloring is given.
std::string write_dot(const Graph &g, const EdgeColoring *c = nullptr);
/// "u,v,color" rows with a header line.
std::string write_csv(const Graph &g, const EdgeColoring &c);

/// {"nodes":..., "elapsed_ms":..., "status":...}
std::string search_stats_json(const SearchOutcome &outcome);

std::string read_text_file(const std::filesystem::path &path);
/// Writes via a temporary sibling and rename, so readers never see a torn file.
void write_text_file(const std::filesystem::path &path, std::string_view text);

} // namespace icol
