#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "regconn/rational.hpp"

namespace regconn {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted set of distinct vertices of a parent graph.
class VertexSubset {
public:
    VertexSubset() = default;
    /// Throws IndexOutOfRange if an index is >= parent_count. Duplicates are merged.
    VertexSubset(std::size_t parent_count, std::vector<Vertex> vertices);

    std::size_t parent_count() const noexcept { return parent_count_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }
    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }
    bool contains(Vertex u) const noexcept;

    auto begin() const noexcept { return vertices_.begin(); }
    auto end() const noexcept { return vertices_.end(); }

    friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

private:
    std::size_t parent_count_ = 0;
    std::vector<Vertex> vertices_;
};

/// Immutable simple undirected graph on vertices 0..v-1.
class Graph {
public:
    /// Builds a graph from an edge list. Duplicate pairs (in either orientation)
    /// collapse to one edge. Throws IndexOutOfRange or SelfLoop.
    static Graph from_edge_list(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return neighbours_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::size_t degree(Vertex u) const;
    std::span<const Vertex> neighbours(Vertex u) const;
    bool has_edge(Vertex u, Vertex w) const;

    /// The common degree if every vertex has it.
    std::optional<std::size_t> regularity() const;

    /// Edges (u, w) with u < w in lexicographic order.
    std::vector<Edge> edges() const;

    /// Induced subgraph; vertex i of the result is subset[i].
    Graph induced_subgraph(const VertexSubset& subset) const;

    /// Subgraph induced on the neighbours of u (u excluded), together with the
    /// map from its vertices back to this graph.
    std::pair<Graph, VertexSubset> neighbourhood_graph(Vertex u) const;

    /// Maximal connected blocks, each sorted, ordered by smallest vertex.
    std::vector<VertexSubset> connected_components() const;
    bool is_connected() const;

    /// Mean degree inside the subgraph induced on s. Throws EmptySubset.
    Rational average_degree(const VertexSubset& s) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(Vertex u) const;

    std::vector<std::vector<Vertex>> neighbours_;
    std::vector<unsigned char> adjacency_;  // row-major v*v
    std::size_t edge_count_ = 0;
};

/// Reads the edge-list text format:
///
///     v <count>
///     u w
///     ...
///
/// with 0-based indices; '#' starts a comment that runs to end of line.
/// Throws Error(ParseError) on malformed text, and the from_edge_list errors
/// for out-of-range indices or loops.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace regconn
