#include "netsparsity/graph.hpp"

#include <ostream>
#include <stdexcept>
#include <string_view>
#include <unordered_map>

#include "netsparsity/errors.hpp"

namespace netsparsity {

Graph::Graph(std::size_t node_count, bool weighted, std::vector<std::string> labels)
    : node_count_(node_count), weighted_(weighted), labels_(std::move(labels)) {
    if (node_count_ == 0) throw std::invalid_argument("graph needs at least one node");
    if (!labels_.empty() && labels_.size() != node_count_)
        throw std::invalid_argument("label count does not match node count");
}

Graph Graph::from_edges(std::size_t node_count, const std::vector<Edge>& edges, bool weighted,
                        std::vector<std::string> labels) {
    Graph g(node_count, weighted, std::move(labels));
    for (const auto& e : edges) {
        if (e.u >= node_count || e.v >= node_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop on node " + std::to_string(e.u));
        if (e.weight <= 0) throw std::invalid_argument("edge weight must be positive");
        if (!weighted && e.weight != 1)
            throw std::invalid_argument("unweighted graph edges must have weight 1");
        auto [it, inserted] = g.edges_.emplace(key(e.u, e.v), e.weight);
        if (!inserted)
            throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + ", " +
                                        std::to_string(e.v) + ")");
    }
    return g;
}

bool Graph::has_edge(NodeIndex u, NodeIndex v) const { return edges_.contains(key(u, v)); }

bool Graph::is_complete() const noexcept {
    return edges_.size() == node_count_ * (node_count_ - 1) / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& [k, w] : edges_) out.push_back({k.first, k.second, w});
    return out;
}

std::vector<Rational> Graph::node_degrees() const {
    std::vector<Rational> degrees(node_count_, Rational(0));
    for (const auto& [k, w] : edges_) {
        degrees[k.first] += w;
        degrees[k.second] += w;
    }
    return degrees;
}

Rational Graph::total_weight() const {
    Rational sum = 0;
    for (const auto& [k, w] : edges_) sum += w;
    return sum;
}

Rational Graph::max_edge_weight() const {
    Rational best = 0;
    for (const auto& [k, w] : edges_)
        if (w > best) best = w;
    return best;
}

std::string Graph::label(NodeIndex node) const {
    if (node >= node_count_) throw std::out_of_range("node index out of range");
    return labels_.empty() ? std::to_string(node) : labels_[node];
}

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        auto tab = line.find('\t', start);
        fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
        if (tab == std::string_view::npos) break;
        start = tab + 1;
    }
    return fields;
}

bool is_blank_or_comment(std::string_view line) {
    auto first = line.find_first_not_of(" \t");
    return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

Graph parse_edge_list(std::istream& in, bool expect_weighted, std::optional<std::size_t> declared_nodes) {
    std::unordered_map<std::string, NodeIndex> index_of;
    std::vector<std::string> labels;
    std::map<std::pair<NodeIndex, NodeIndex>, Rational> accumulated;

    auto intern = [&](std::string_view label) {
        auto [it, inserted] = index_of.emplace(std::string(label), labels.size());
        if (inserted) labels.emplace_back(label);
        return it->second;
    };

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (is_blank_or_comment(line)) continue;

        auto fields = split_tabs(line);
        if (fields.size() < 2 || fields.size() > 3)
            throw ParseError("expected 2 or 3 tab-separated fields, got " + std::to_string(fields.size()),
                             line_no);
        if (fields[0].empty() || fields[1].empty()) throw ParseError("empty node label", line_no);
        if (fields.size() == 3 && !expect_weighted)
            throw ParseError("weight column present but the graph is read as unweighted", line_no);
        if (fields[0] == fields[1])
            throw ParseError("self-loop on '" + std::string(fields[0]) + "'", line_no);

        Rational weight = 1;
        if (fields.size() == 3) {
            try {
                weight = parse_rational(fields[2]);
            } catch (const std::invalid_argument&) {
                throw ParseError("non-numeric weight '" + std::string(fields[2]) + "'", line_no);
            }
            if (weight < 0) throw ParseError("negative weight '" + std::string(fields[2]) + "'", line_no);
        }

        const NodeIndex u = intern(fields[0]);
        const NodeIndex v = intern(fields[1]);
        const auto k = u < v ? std::pair{u, v} : std::pair{v, u};
        auto it = accumulated.find(k);
        if (it == accumulated.end()) {
            accumulated.emplace(k, weight);
        } else if (expect_weighted) {
            it->second += weight;
        } else {
            throw ParseError("duplicate edge '" + std::string(fields[0]) + "'-'" + std::string(fields[1]) + "'",
                             line_no);
        }
    }

    std::size_t n = labels.size();
    if (declared_nodes) {
        if (*declared_nodes < n)
            throw ParseError("declared node count " + std::to_string(*declared_nodes) + " is below the " +
                             std::to_string(n) + " distinct labels");
        for (std::size_t extra = n; extra < *declared_nodes; ++extra) {
            // isolated nodes get synthetic labels that cannot clash with parsed ones
            std::string label = "__isolated_" + std::to_string(extra);
            while (index_of.contains(label)) label.insert(0, "_");
            intern(label);
        }
        n = *declared_nodes;
    }
    if (n == 0) throw ParseError("edge list has no nodes");

    std::vector<Edge> edges;
    edges.reserve(accumulated.size());
    for (const auto& [k, w] : accumulated)
        if (w > 0) edges.push_back({k.first, k.second, w});
    return Graph::from_edges(n, edges, expect_weighted, std::move(labels));
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const auto& e : g.edges()) {
        out << g.label(e.u) << '\t' << g.label(e.v);
        if (g.weighted()) out << '\t' << to_string(e.weight);
        out << '\n';
    }
}

OrderedDegreeVector degree_vector(const Graph& g) {
    if (!g.weighted()) {
        std::vector<std::int64_t> degrees(g.node_count(), 0);
        for (const auto& e : g.edges()) {
            ++degrees[e.u];
            ++degrees[e.v];
        }
        return OrderedDegreeVector::from_integers(std::move(degrees));
    }
    const auto degrees = g.node_degrees();
    return OrderedDegreeVector::from_rationals(degrees);
}

Graph add_edge(const Graph& g, NodeIndex u, NodeIndex v) {
    if (u >= g.node_count() || v >= g.node_count()) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop on node " + std::to_string(u));
    if (g.has_edge(u, v))
        throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") already present");
    Graph copy = g;
    copy.edges_.emplace(Graph::key(u, v), Rational(1));
    return copy;
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeIndex u = 0; u < n; ++u)
        for (NodeIndex v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 nodes");
    std::vector<Edge> edges;
    for (NodeIndex u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n, 1});
    return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeIndex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, 1});
    return Graph::from_edges(n, edges);
}

}  // namespace netsparsity
