#include "icol/certificate.hpp"

#include "icol/serialization.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>

namespace icol {

using json = nlohmann::ordered_json;

namespace {

std::string utc_timestamp()
{
    // SOURCE_DATE_EPOCH pins the timestamp for reproducible output
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    if (const char *epoch = std::getenv("SOURCE_DATE_EPOCH"))
        now = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json trace_json(const DoublingTrace &t)
{
    return {{"kind", t.kind == DoublingKind::complete ? "complete" : "hypercube"},
            {"step", t.step},
            {"source_vertices", t.source_vertices},
            {"offsets", t.offsets},
            {"source_t", t.source_t},
            {"result_t", t.result_t}};
}

DoublingTrace trace_from_json(const json &j)
{
    DoublingTrace t;
    t.kind = j.at("kind") == "complete" ? DoublingKind::complete : DoublingKind::hypercube;
    t.step = j.at("step").get<unsigned>();
    t.source_vertices = j.at("source_vertices").get<std::size_t>();
    t.offsets = j.at("offsets").get<std::vector<Color>>();
    t.source_t = j.at("source_t").get<Color>();
    t.result_t = j.at("result_t").get<Color>();
    return t;
}

ProvenanceKind provenance_kind(const std::string &name)
{
    if (name == "construction")
        return ProvenanceKind::construction;
    if (name == "oracle")
        return ProvenanceKind::oracle;
    if (name == "imported")
        return ProvenanceKind::imported;
    throw CertificateError("unknown provenance '" + name + "'");
}

std::string file_name(const Certificate &cert)
{
    const auto &family = cert.graph.family();
    std::string stem = to_string(family.kind);
    if (family.kind != FamilyKind::generic)
        stem += std::to_string(family.param);
    return stem + "-t" + std::to_string(cert.palette_size()) + "-" + cert.id().substr(0, 16) + ".json";
}

} // namespace

std::string to_string(ProvenanceKind kind)
{
    switch (kind) {
    case ProvenanceKind::construction:
        return "construction";
    case ProvenanceKind::oracle:
        return "oracle";
    case ProvenanceKind::imported:
        return "imported";
    }
    return "imported";
}

std::string Certificate::id() const
{
    // the coloring document embeds the graph hash, so this covers both
    return sha256_hex(write_coloring_json(graph, coloring));
}

Graph family_graph(FamilyKind family, std::uint64_t param)
{
    switch (family) {
    case FamilyKind::complete:
        if (param == 0)
            throw GraphError("complete family needs n >= 1 (graph K_{2n})");
        return complete_graph(2 * param);
    case FamilyKind::hypercube:
        if (param == 0 || param > kMaxHypercubeDimension)
            throw GraphError("hypercube dimension must be in 1.." + std::to_string(kMaxHypercubeDimension));
        return hypercube_graph(static_cast<unsigned>(param));
    case FamilyKind::generic:
        break;
    }
    throw GraphError("generic graphs have no family generator");
}

Certificate seal_certificate(ColoredGraph colored, Provenance provenance)
{
    auto verdict = verify_interval(colored.graph, colored.coloring);
    if (!verdict.ok())
        throw CertificateError("refusing to seal: " + verdict.describe(colored.graph));
    return Certificate{std::move(colored.graph), std::move(colored.coloring), std::move(provenance),
                       utc_timestamp(), std::string(kVerifierVersion)};
}

std::string write_certificate_json(const Certificate &cert)
{
    json provenance;
    provenance["kind"] = to_string(cert.provenance.kind);
    if (cert.provenance.kind == ProvenanceKind::construction) {
        json steps = json::array();
        for (const auto &t : cert.provenance.trace)
            steps.push_back(trace_json(t));
        provenance["trace"] = std::move(steps);
    }
    if (cert.provenance.kind == ProvenanceKind::oracle)
        provenance["stats"] = {{"nodes", cert.provenance.nodes},
                               {"elapsed_ms", cert.provenance.elapsed_ms},
                               {"status", "feasible"}};

    json doc;
    doc["format"] = kCertificateFormat;
    doc["graph"] = json::parse(write_graph_json(cert.graph));
    doc["graph_hash"] = graph_hash(cert.graph);
    doc["coloring"] = json::parse(write_coloring_json(cert.graph, cert.coloring));
    doc["t"] = cert.palette_size();
    doc["provenance"] = std::move(provenance);
    doc["created_at"] = cert.created_at;
    doc["verifier_version"] = cert.verifier_version;
    return doc.dump(2) + "\n";
}

Certificate read_certificate_json(std::string_view text)
{
    try {
        auto doc = json::parse(text.begin(), text.end());
        if (!doc.is_object() || doc.value("format", "") != kCertificateFormat)
            throw CertificateError("not an ic-certificate/1 document");

        // read_graph_json regenerates family graphs and rejects mismatches
        Graph graph = read_graph_json(doc.at("graph").dump());
        if (doc.at("graph_hash").get<std::string>() != graph_hash(graph))
            throw CertificateError("graph hash does not match the embedded graph");
        EdgeColoring coloring = read_coloring_json(doc.at("coloring").dump(), graph);
        if (doc.at("t").get<Color>() != coloring.palette_size())
            throw CertificateError("declared t disagrees with the coloring");

        auto verdict = verify_interval(graph, coloring);
        if (!verdict.ok())
            throw CertificateError("re-verification failed: " + verdict.describe(graph));

        Provenance provenance;
        const auto &p = doc.at("provenance");
        provenance.kind = provenance_kind(p.at("kind").get<std::string>());
        if (p.contains("trace"))
            for (const auto &step : p["trace"])
                provenance.trace.push_back(trace_from_json(step));
        if (p.contains("stats")) {
            provenance.nodes = p["stats"].at("nodes").get<std::uint64_t>();
            provenance.elapsed_ms = p["stats"].at("elapsed_ms").get<double>();
        }
        return Certificate{std::move(graph), std::move(coloring), std::move(provenance),
                           doc.at("created_at").get<std::string>(),
                           doc.at("verifier_version").get<std::string>()};
    }
    catch (const json::exception &e) {
        throw CertificateError(std::string("malformed certificate: ") + e.what());
    }
    catch (const FormatError &e) {
        throw CertificateError(e.what());
    }
}

CertificateAttempt make_certificate(FamilyKind family, std::uint64_t param, Color target_t,
                                    const SearchBudget &budget, const SearchOptions &options)
{
    Graph g = family_graph(family, param);
    CertificateAttempt attempt;
    attempt.outcome = find_interval_coloring(g, target_t, budget, options);
    if (attempt.outcome.status != SearchStatus::feasible)
        return attempt;
    Provenance provenance{ProvenanceKind::oracle, {}, attempt.outcome.nodes, attempt.outcome.elapsed_ms};
    attempt.certificate = seal_certificate(ColoredGraph{std::move(g), *attempt.outcome.witness}, provenance);
    return attempt;
}

CertificateStore::CertificateStore(std::filesystem::path root) : root_(std::move(root)) {}

CertificateStore::Added CertificateStore::add(const Certificate &cert)
{
    std::lock_guard lock(write_mutex_);
    std::filesystem::create_directories(root_);
    auto path = root_ / file_name(cert);
    if (std::filesystem::exists(path)) {
        try {
            if (read_certificate_json(read_text_file(path)).id() == cert.id())
                return {path, false};
        }
        catch (const CertificateError &) {
            // a corrupt file under our name gets replaced
        }
    }
    write_text_file(path, write_certificate_json(cert));
    return {path, true};
}

std::vector<CertificateStore::Entry> CertificateStore::list() const
{
    std::vector<Entry> entries;
    if (!std::filesystem::is_directory(root_))
        return entries;

    std::vector<std::filesystem::path> files;
    for (const auto &item : std::filesystem::directory_iterator(root_))
        if (item.is_regular_file() && item.path().extension() == ".json")
            files.push_back(item.path());
    std::sort(files.begin(), files.end());

    for (const auto &path : files) {
        try {
            entries.push_back({path, read_certificate_json(read_text_file(path))});
        }
        catch (const std::exception &) {
            std::lock_guard lock(write_mutex_);
            auto quarantine = root_ / "quarantine";
            std::filesystem::create_directories(quarantine);
            std::error_code ec;
            std::filesystem::rename(path, quarantine / path.filename(), ec);
        }
    }
    return entries;
}

std::vector<std::filesystem::path> CertificateStore::quarantined() const
{
    std::vector<std::filesystem::path> files;
    auto quarantine = root_ / "quarantine";
    if (!std::filesystem::is_directory(quarantine))
        return files;
    for (const auto &item : std::filesystem::directory_iterator(quarantine))
        if (item.is_regular_file())
            files.push_back(item.path());
    std::sort(files.begin(), files.end());
    return files;
}

std::optional<Certificate> CertificateStore::best_for(const Graph &g) const
{
    std::optional<Certificate> best;
    for (auto &entry : list())
        if (entry.certificate.graph == g &&
            (!best || entry.certificate.palette_size() > best->palette_size()))
            best = std::move(entry.certificate);
    return best;
}

} // namespace icol
