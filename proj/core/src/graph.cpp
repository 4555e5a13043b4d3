#include "regconn/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "regconn/error.hpp"

namespace regconn {

VertexSubset::VertexSubset(std::size_t parent_count, std::vector<Vertex> vertices)
    : parent_count_(parent_count), vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    if (!vertices_.empty() && vertices_.back() >= parent_count_) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "vertex " + std::to_string(vertices_.back()) + " out of range for " +
                        std::to_string(parent_count_) + " vertices");
    }
}

bool VertexSubset::contains(Vertex u) const noexcept {
    return std::binary_search(vertices_.begin(), vertices_.end(), u);
}

Graph Graph::from_edge_list(std::size_t vertex_count, std::span<const Edge> edges) {
    if (vertex_count == 0) {
        throw Error(ErrorKind::IndexOutOfRange, "graph needs at least one vertex");
    }
    Graph g;
    g.neighbours_.resize(vertex_count);
    g.adjacency_.assign(vertex_count * vertex_count, 0);
    for (const auto& [a, b] : edges) {
        if (a >= vertex_count || b >= vertex_count) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "edge (" + std::to_string(a) + "," + std::to_string(b) +
                            ") out of range for " + std::to_string(vertex_count) + " vertices");
        }
        if (a == b) {
            throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(a));
        }
        auto& cell = g.adjacency_[a * vertex_count + b];
        if (cell) continue;
        cell = 1;
        g.adjacency_[b * vertex_count + a] = 1;
        g.neighbours_[a].push_back(b);
        g.neighbours_[b].push_back(a);
        ++g.edge_count_;
    }
    for (auto& list : g.neighbours_) std::sort(list.begin(), list.end());
    return g;
}

void Graph::check_vertex(Vertex u) const {
    if (u >= vertex_count()) {
        throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(u) +
                                                    " out of range for " +
                                                    std::to_string(vertex_count()) + " vertices");
    }
}

std::size_t Graph::degree(Vertex u) const {
    check_vertex(u);
    return neighbours_[u].size();
}

std::span<const Vertex> Graph::neighbours(Vertex u) const {
    check_vertex(u);
    return neighbours_[u];
}

bool Graph::has_edge(Vertex u, Vertex w) const {
    check_vertex(u);
    check_vertex(w);
    return adjacency_[u * vertex_count() + w] != 0;
}

std::optional<std::size_t> Graph::regularity() const {
    const auto d = neighbours_.front().size();
    for (const auto& list : neighbours_) {
        if (list.size() != d) return std::nullopt;
    }
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u) {
        for (Vertex w : neighbours_[u]) {
            if (u < w) out.emplace_back(u, w);
        }
    }
    return out;
}

Graph Graph::induced_subgraph(const VertexSubset& subset) const {
    if (subset.parent_count() != vertex_count()) {
        throw Error(ErrorKind::IndexOutOfRange, "subset belongs to a graph of different order");
    }
    if (subset.empty()) throw Error(ErrorKind::EmptySubset, "induced subgraph of empty subset");
    std::vector<Edge> local;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        for (std::size_t j = i + 1; j < subset.size(); ++j) {
            if (adjacency_[subset[i] * vertex_count() + subset[j]]) local.emplace_back(i, j);
        }
    }
    return from_edge_list(subset.size(), local);
}

std::pair<Graph, VertexSubset> Graph::neighbourhood_graph(Vertex u) const {
    check_vertex(u);
    VertexSubset nbrs(vertex_count(), neighbours_[u]);
    if (nbrs.empty()) {
        // An isolated vertex has an empty neighbourhood; there is no 0-vertex Graph.
        throw Error(ErrorKind::EmptySubset,
                    "vertex " + std::to_string(u) + " has no neighbours");
    }
    return {induced_subgraph(nbrs), std::move(nbrs)};
}

std::vector<VertexSubset> Graph::connected_components() const {
    const auto n = vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<VertexSubset> components;
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<Vertex> block;
        stack.push_back(root);
        seen[root] = true;
        while (!stack.empty()) {
            const auto x = stack.back();
            stack.pop_back();
            block.push_back(x);
            for (Vertex y : neighbours_[x]) {
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
        components.emplace_back(n, std::move(block));
    }
    return components;
}

bool Graph::is_connected() const { return connected_components().size() == 1; }

Rational Graph::average_degree(const VertexSubset& s) const {
    if (s.empty()) throw Error(ErrorKind::EmptySubset, "average degree of empty subset");
    if (s.parent_count() != vertex_count()) {
        throw Error(ErrorKind::IndexOutOfRange, "subset belongs to a graph of different order");
    }
    std::int64_t twice_edges = 0;
    for (Vertex u : s) {
        for (Vertex w : neighbours_[u]) {
            if (s.contains(w)) ++twice_edges;
        }
    }
    return {twice_edges, static_cast<std::int64_t>(s.size())};
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

std::size_t parse_index(const std::string& token, std::size_t line_no) {
    if (token.find_first_not_of("0123456789") != std::string::npos) {
        parse_fail(line_no, "not a non-negative integer: '" + token + "'");
    }
    try {
        return std::stoull(token);
    } catch (const std::out_of_range&) {
        parse_fail(line_no, "integer too large: '" + token + "'");
    }
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::optional<std::size_t> vertex_count;
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;) tokens.push_back(std::move(t));
        if (tokens.empty()) continue;
        if (tokens.size() != 2) parse_fail(line_no, "expected exactly two fields");
        if (!vertex_count) {
            if (tokens[0] != "v") parse_fail(line_no, "expected header 'v <count>'");
            vertex_count = parse_index(tokens[1], line_no);
            if (*vertex_count == 0) parse_fail(line_no, "vertex count must be positive");
        } else {
            edges.emplace_back(parse_index(tokens[0], line_no), parse_index(tokens[1], line_no));
        }
    }
    if (!vertex_count) throw Error(ErrorKind::ParseError, "missing header 'v <count>'");
    return Graph::from_edge_list(*vertex_count, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "v " << g.vertex_count() << '\n';
    for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

}  // namespace regconn
