#include "icol/serialization.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <system_error>

namespace icol {

using json = nlohmann::ordered_json;

namespace {

json parse(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    }
    catch (const json::parse_error &e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

void expect_format(const json &doc, std::string_view format)
{
    if (!doc.is_object() || !doc.contains("format") || doc["format"] != format)
        throw FormatError("expected a \"" + std::string(format) + "\" document");
}

template <typename T>
T field(const json &doc, const char *name)
{
    if (!doc.contains(name))
        throw FormatError(std::string("missing field \"") + name + "\"");
    try {
        return doc.at(name).get<T>();
    }
    catch (const json::exception &e) {
        throw FormatError(std::string("bad field \"") + name + "\": " + e.what());
    }
}

} // namespace

std::string sha256_hex(std::string_view data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < length; ++i)
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return out.str();
}

std::string graph_hash(const Graph &g)
{
    std::string canonical = std::string(kGraphFormat) + "\n" + std::to_string(g.vertex_count()) + "\n";
    for (const auto &e : g.edges())
        canonical += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return sha256_hex(canonical);
}

std::string write_graph_json(const Graph &g)
{
    json edges = json::array();
    for (const auto &e : g.edges())
        edges.push_back({e.u, e.v});
    json doc;
    doc["format"] = kGraphFormat;
    doc["vertices"] = g.vertex_count();
    doc["edges"] = std::move(edges);
    doc["family"] = {{"kind", to_string(g.family().kind)}, {"param", g.family().param}};
    return doc.dump() + "\n";
}

Graph read_graph_json(std::string_view text)
{
    auto doc = parse(text);
    expect_format(doc, kGraphFormat);
    auto vertices = field<std::size_t>(doc, "vertices");
    auto raw = field<std::vector<std::vector<std::int64_t>>>(doc, "edges");

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto &pair : raw) {
        if (pair.size() != 2 || pair[0] < 0 || pair[1] < 0)
            throw FormatError("each edge must be a pair of non-negative vertex ids");
        if (pair[0] == pair[1])
            throw FormatError("self-loop at vertex " + std::to_string(pair[0]));
        if (pair[0] > pair[1])
            throw FormatError("edge [" + std::to_string(pair[0]) + "," + std::to_string(pair[1]) +
                              "] is not written with u < v");
        Edge e{static_cast<Vertex>(pair[0]), static_cast<Vertex>(pair[1])};
        if (!edges.empty() && !(edges.back() < e))
            throw FormatError(edges.back() == e ? "duplicate edge [" + std::to_string(e.u) + "," +
                                                      std::to_string(e.v) + "]"
                                                : "edge list is not sorted");
        edges.push_back(e);
    }

    Family family;
    if (doc.contains("family")) {
        const auto &f = doc["family"];
        try {
            family.kind = family_kind_from_string(field<std::string>(f, "kind"));
        }
        catch (const GraphError &e) {
            throw FormatError(e.what());
        }
        family.param = f.contains("param") ? field<std::uint32_t>(f, "param") : 0;
    }

    try {
        Graph g(vertices, std::move(edges), family);
        if (family.kind == FamilyKind::complete && g != complete_graph(family.param))
            throw FormatError("edges do not match family complete/" + std::to_string(family.param));
        if (family.kind == FamilyKind::hypercube &&
            (family.param == 0 || family.param > kMaxHypercubeDimension || g != hypercube_graph(family.param)))
            throw FormatError("edges do not match family hypercube/" + std::to_string(family.param));
        return g;
    }
    catch (const GraphError &e) {
        throw FormatError(e.what());
    }
}

std::string write_coloring_json(const Graph &g, const EdgeColoring &c)
{
    require_bound(g, c);
    json doc;
    doc["format"] = kColoringFormat;
    doc["graph_hash"] = graph_hash(g);
    doc["t"] = c.palette_size();
    doc["colors"] = c.colors();
    return doc.dump() + "\n";
}

ColoringDocument read_coloring_json(std::string_view text)
{
    auto doc = parse(text);
    expect_format(doc, kColoringFormat);
    auto hash = field<std::string>(doc, "graph_hash");
    auto t = field<Color>(doc, "t");
    auto colors = field<std::vector<Color>>(doc, "colors");
    try {
        return ColoringDocument{std::move(hash), EdgeColoring(t, std::move(colors))};
    }
    catch (const ColoringError &e) {
        throw FormatError(e.what());
    }
}

EdgeColoring read_coloring_json(std::string_view text, const Graph &g)
{
    auto doc = read_coloring_json(text);
    auto expected = graph_hash(g);
    if (doc.graph_hash != expected)
        throw HashMismatch("coloring is bound to graph " + doc.graph_hash.substr(0, 12) + "..., not " +
                           expected.substr(0, 12) + "...");
    if (doc.coloring.size() != g.edge_count())
        throw HashMismatch("coloring has " + std::to_string(doc.coloring.size()) + " colors for " +
                           std::to_string(g.edge_count()) + " edges");
    return std::move(doc.coloring);
}

std::string write_dot(const Graph &g, const EdgeColoring *c)
{
    if (c)
        require_bound(g, *c);
    std::ostringstream out;
    out << "graph G {\n";
    if (c)
        out << "  label=\"t=" << c->palette_size() << "\";\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out << "  " << v << ";\n";
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
        if (c)
            out << " [label=\"" << (*c)[e] << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string write_csv(const Graph &g, const EdgeColoring &c)
{
    require_bound(g, c);
    std::ostringstream out;
    out << "u,v,color\n";
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        out << g.edge(e).u << "," << g.edge(e).v << "," << c[e] << "\n";
    return out.str();
}

std::string search_stats_json(const SearchOutcome &outcome)
{
    json doc;
    doc["nodes"] = outcome.nodes;
    doc["elapsed_ms"] = outcome.elapsed_ms;
    doc["status"] = to_string(outcome.status);
    return doc.dump();
}

std::string read_text_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot write " + path.string());
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        if (!out)
            throw IoError("write failed for " + path.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot write " + path.string());
    }
}

} // namespace icol
