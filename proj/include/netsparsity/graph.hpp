#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netsparsity/degree_vector.hpp"
#include "netsparsity/rational.hpp"

namespace netsparsity {

using NodeIndex = std::size_t;

struct Edge {
    NodeIndex u;
    NodeIndex v;
    Rational weight;
};

/// Undirected graph on nodes [0, n) without self-loops. Weighted graphs are
/// read as multigraphs: an edge of weight w contributes w to both endpoint
/// degrees. The multigraph reading is literal only for integer weights.
class Graph {
public:
    explicit Graph(std::size_t node_count, bool weighted = false,
                   std::vector<std::string> labels = {});

    /// Builds and validates a graph. Throws std::invalid_argument on a
    /// self-loop, an out-of-range endpoint, a repeated pair, or a
    /// non-positive weight (and a non-unit weight on an unweighted graph).
    static Graph from_edges(std::size_t node_count, const std::vector<Edge>& edges,
                            bool weighted = false, std::vector<std::string> labels = {});

    std::size_t node_count() const noexcept { return node_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool weighted() const noexcept { return weighted_; }

    bool has_edge(NodeIndex u, NodeIndex v) const;
    bool is_complete() const noexcept;

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Per-node degree sum_j a_ij in node-index order.
    std::vector<Rational> node_degrees() const;

    /// Total edge weight (the edge count for unweighted graphs).
    Rational total_weight() const;

    /// Largest a_ij; zero for an edgeless graph.
    Rational max_edge_weight() const;

    /// Original label of a node, or its index when the graph was not parsed.
    std::string label(NodeIndex node) const;

private:
    friend Graph add_edge(const Graph& g, NodeIndex u, NodeIndex v);

    using Key = std::pair<NodeIndex, NodeIndex>;
    static Key key(NodeIndex u, NodeIndex v) { return u < v ? Key{u, v} : Key{v, u}; }

    std::size_t node_count_;
    bool weighted_;
    std::map<Key, Rational> edges_;
    std::vector<std::string> labels_;
};

/// Reads a TSV edge list: "u<TAB>v" or "u<TAB>v<TAB>w" per line, '#' comment
/// lines, blank lines ignored. Labels are mapped to dense indices in order of
/// first appearance. Unweighted duplicates are errors; weighted duplicates
/// accumulate. A weight of 0 registers both labels without storing an edge.
/// Throws ParseError.
Graph parse_edge_list(std::istream& in, bool expect_weighted,
                      std::optional<std::size_t> declared_nodes = std::nullopt);

/// Writes the graph in the format parse_edge_list reads.
void write_edge_list(std::ostream& out, const Graph& g);

OrderedDegreeVector degree_vector(const Graph& g);

/// Copy of `g` with the unit edge {u, v} added. Throws std::invalid_argument
/// on a self-loop, an existing edge, or an out-of-range endpoint.
Graph add_edge(const Graph& g, NodeIndex u, NodeIndex v);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

}  // namespace netsparsity
