#include "alphadom/io.hpp"

#include <charconv>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <unordered_map>

#include "alphadom/error.hpp"

namespace alphadom {

namespace {

// Splits a line into whitespace-separated tokens; empty for blank/comment lines.
std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (out.empty() && tok.front() == '#') return {};
        out.push_back(tok);
    }
    return out;
}

class LabelTable {
public:
    std::optional<VertexId> find(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    VertexId intern(const std::string& label) {
        auto [it, inserted] = index_.emplace(label, static_cast<VertexId>(labels_.size()));
        if (inserted) labels_.push_back(label);
        return it->second;
    }
    std::size_t size() const { return labels_.size(); }
    std::vector<std::string> release() { return std::move(labels_); }

private:
    std::unordered_map<std::string, VertexId> index_;
    std::vector<std::string> labels_;
};

std::ifstream open_input(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw IngestError(p.string(), 0, "cannot open file");
    return in;
}

WeightedGraph assemble(LabelTable& table, const std::set<std::pair<VertexId, VertexId>>& edge_set,
                       std::vector<Weight> weights) {
    std::vector<Edge> edges;
    edges.reserve(edge_set.size());
    for (const auto& [u, v] : edge_set) edges.push_back({u, v});
    const std::size_t n = table.size();
    return WeightedGraph::from_edges(n, edges, std::move(weights), table.release());
}

}  // namespace

WeightedGraph parse_graph(std::istream& edges, const std::string& edges_name, std::istream* weights,
                          const std::string& weights_name) {
    LabelTable table;
    std::vector<Weight> weight_of;
    const bool weighted = weights != nullptr;

    if (weighted) {
        std::string line;
        for (std::size_t lineno = 1; std::getline(*weights, line); ++lineno) {
            auto tok = tokens_of(line);
            if (tok.empty()) continue;
            if (tok.size() != 2) throw IngestError(weights_name, lineno, "expected '<label> <weight>'");
            Weight w = 0;
            auto [ptr, ec] = std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), w);
            if (ec != std::errc() || ptr != tok[1].data() + tok[1].size())
                throw IngestError(weights_name, lineno, "weight '" + tok[1] + "' is not an integer");
            if (w < 1) throw IngestError(weights_name, lineno, "weight must be a positive integer");
            if (table.find(tok[0])) throw IngestError(weights_name, lineno, "duplicate label '" + tok[0] + "'");
            table.intern(tok[0]);
            weight_of.push_back(w);
        }
    }

    std::set<std::pair<VertexId, VertexId>> edge_set;
    std::string line;
    for (std::size_t lineno = 1; std::getline(edges, line); ++lineno) {
        auto tok = tokens_of(line);
        if (tok.empty()) continue;
        if (tok.size() != 2) throw IngestError(edges_name, lineno, "expected '<label> <label>'");
        if (tok[0] == tok[1]) throw IngestError(edges_name, lineno, "self-loop on '" + tok[0] + "'");
        VertexId ends[2];
        for (int e = 0; e < 2; ++e) {
            if (weighted) {
                auto id = table.find(tok[e]);
                if (!id) throw IngestError(edges_name, lineno, "no weight given for label '" + tok[e] + "'");
                ends[e] = *id;
            } else {
                ends[e] = table.intern(tok[e]);
            }
        }
        edge_set.emplace(std::min(ends[0], ends[1]), std::max(ends[0], ends[1]));
    }
    if (!weighted) weight_of.assign(table.size(), 1);
    return assemble(table, edge_set, std::move(weight_of));
}

WeightedGraph ingest_graph(const std::filesystem::path& edge_file,
                           const std::optional<std::filesystem::path>& weight_file) {
    auto edges = open_input(edge_file);
    if (!weight_file) return parse_graph(edges, edge_file.string());
    auto weights = open_input(*weight_file);
    return parse_graph(edges, edge_file.string(), &weights, weight_file->string());
}

WeightedGraph parse_bundle(std::istream& in, const std::string& name) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw IngestError(name, 0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw IngestError(name, 0, "bundle needs 'vertices' and 'edges'");

    LabelTable table;
    std::vector<Weight> weights;
    std::set<std::pair<VertexId, VertexId>> edge_set;
    try {
        for (const auto& v : doc.at("vertices")) {
            const std::string label = v.at("label").is_string() ? v.at("label").get<std::string>()
                                                                 : v.at("label").dump();
            const auto w = v.at("weight").get<Weight>();
            if (w < 1) throw IngestError(name, 0, "vertex '" + label + "' has non-positive weight");
            if (table.find(label)) throw IngestError(name, 0, "duplicate vertex '" + label + "'");
            table.intern(label);
            weights.push_back(w);
        }
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw IngestError(name, 0, "edge entries must be [label, label]");
            VertexId ends[2];
            for (int k = 0; k < 2; ++k) {
                const std::string label = e[k].is_string() ? e[k].get<std::string>() : e[k].dump();
                auto id = table.find(label);
                if (!id) throw IngestError(name, 0, "edge references unknown vertex '" + label + "'");
                ends[k] = *id;
            }
            if (ends[0] == ends[1]) throw IngestError(name, 0, "self-loop in bundle");
            edge_set.emplace(std::min(ends[0], ends[1]), std::max(ends[0], ends[1]));
        }
    } catch (const nlohmann::json::exception& e) {
        throw IngestError(name, 0, std::string("malformed bundle: ") + e.what());
    }
    return assemble(table, edge_set, std::move(weights));
}

WeightedGraph load_graph(const std::filesystem::path& graph_file,
                         const std::optional<std::filesystem::path>& weight_file) {
    if (graph_file.extension() == ".json") {
        if (weight_file) throw InputError("a JSON bundle already carries weights; drop the weight file");
        auto in = open_input(graph_file);
        return parse_bundle(in, graph_file.string());
    }
    return ingest_graph(graph_file, weight_file);
}

void write_edge_list(std::ostream& os, const WeightedGraph& g) {
    for (const Edge& e : g.edges()) os << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

void write_weight_list(std::ostream& os, const WeightedGraph& g) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) os << g.label(v) << ' ' << g.weight(v) << '\n';
}

void write_bundle(std::ostream& os, const WeightedGraph& g) {
    nlohmann::json doc;
    doc["vertices"] = nlohmann::json::array();
    for (VertexId v = 0; v < g.num_vertices(); ++v) doc["vertices"].push_back({{"label", g.label(v)}, {"weight", g.weight(v)}});
    doc["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges()) doc["edges"].push_back({g.label(e.u), g.label(e.v)});
    os << doc.dump(1) << '\n';
}

void write_graph_files(const std::filesystem::path& prefix, const WeightedGraph& g) {
    auto open = [](const std::filesystem::path& p) {
        std::ofstream out(p);
        if (!out) throw InputError("cannot write " + p.string());
        return out;
    };
    auto edges = open(prefix.string() + ".edges");
    write_edge_list(edges, g);
    auto weights = open(prefix.string() + ".weights");
    write_weight_list(weights, g);
}

void write_solution(std::ostream& os, const WeightedGraph& g, const DominatingSet& d) {
    for (VertexId v : d.members()) os << g.label(v) << '\n';
}

DominatingSet parse_solution(std::istream& in, const std::string& name, const WeightedGraph& g) {
    std::unordered_map<std::string, VertexId> index;
    for (VertexId v = 0; v < g.num_vertices(); ++v) index.emplace(g.label(v), v);
    DominatingSet d(g);
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        auto tok = tokens_of(line);
        if (tok.empty()) continue;
        if (tok.size() != 1) throw IngestError(name, lineno, "expected one vertex label per line");
        auto it = index.find(tok[0]);
        if (it == index.end()) throw IngestError(name, lineno, "unknown vertex '" + tok[0] + "'");
        d.insert(it->second);
    }
    return d;
}

void write_partition_csv(std::ostream& os, const WeightedGraph& g, const Partition& p) {
    os << "vertex_label,community_id\n";
    for (VertexId v = 0; v < g.num_vertices(); ++v) os << g.label(v) << ',' << p.community_of(v) << '\n';
}

void write_deficiency(std::ostream& os, const DominationInstance& inst, const DominatingSet& d,
                      const DeficiencyReport& report) {
    const auto& g = inst.graph();
    os << "# label demand coverage shortfall\n";
    for (const auto& [v, l] : report.shortfalls)
        os << g.label(v) << ' ' << inst.demand(v) << ' ' << coverage_count(g, d, v) << ' ' << l << '\n';
}

}  // namespace alphadom
