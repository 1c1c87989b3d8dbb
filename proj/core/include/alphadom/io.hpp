#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "alphadom/community.hpp"
#include "alphadom/graph.hpp"

namespace alphadom {

// Text formats
// ------------
// Edge list:   one edge per line, two whitespace-separated vertex labels.
// Weight list: one vertex per line, label and a positive integer weight.
// Blank lines and lines starting with '#' are ignored in both.
//
// With a weight list, vertex indices follow the weight-list order and every
// edge endpoint must have a weight. Without one, indices follow first
// appearance in the edge list and every weight is 1.
//
// JSON bundle: {"vertices": [{"label": "a", "weight": 5}, ...],
//               "edges": [["a", "b"], ...]}

/// Parses an edge list (and optional weight list) from streams. `*_name`
/// is used in error messages.
WeightedGraph parse_graph(std::istream& edges, const std::string& edges_name, std::istream* weights = nullptr,
                          const std::string& weights_name = {});

WeightedGraph ingest_graph(const std::filesystem::path& edge_file,
                           const std::optional<std::filesystem::path>& weight_file = std::nullopt);

WeightedGraph parse_bundle(std::istream& in, const std::string& name);

/// Dispatches on extension: ".json" is a bundle, anything else an edge list.
WeightedGraph load_graph(const std::filesystem::path& graph_file,
                         const std::optional<std::filesystem::path>& weight_file = std::nullopt);

void write_edge_list(std::ostream& os, const WeightedGraph& g);
void write_weight_list(std::ostream& os, const WeightedGraph& g);
void write_bundle(std::ostream& os, const WeightedGraph& g);

/// Writes `<prefix>.edges` and `<prefix>.weights`.
void write_graph_files(const std::filesystem::path& prefix, const WeightedGraph& g);

/// One vertex label per line, ascending vertex index.
void write_solution(std::ostream& os, const WeightedGraph& g, const DominatingSet& d);
DominatingSet parse_solution(std::istream& in, const std::string& name, const WeightedGraph& g);

/// CSV with header `vertex_label,community_id`.
void write_partition_csv(std::ostream& os, const WeightedGraph& g, const Partition& p);

/// Human-readable deficiency listing: `label demand coverage shortfall`.
void write_deficiency(std::ostream& os, const DominationInstance& inst, const DominatingSet& d,
                      const DeficiencyReport& report);

}  // namespace alphadom
