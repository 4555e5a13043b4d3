#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "regconn/generators.hpp"
#include "regconn/graph.hpp"
#include "regconn/linalg.hpp"

namespace regconn::testing {

inline Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
    return Graph::from_edge_list(n, edges);
}

/// Erdos-Renyi G(n, p) sample.
inline Graph random_gnp(std::size_t n, double p, SplitMix64& rng) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (static_cast<double>(rng.next() >> 11) * 0x1.0p-53 < p) edges.emplace_back(a, b);
        }
    }
    return Graph::from_edge_list(n, edges);
}

/// Uniform random labelling into exactly `blocks` nonempty blocks (n >= blocks).
inline Partition random_partition(std::size_t n, std::size_t blocks, SplitMix64& rng) {
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = i < blocks ? i : rng.below(blocks);
    for (std::size_t i = n; i > 1; --i) std::swap(labels[i - 1], labels[rng.below(i)]);
    return Partition::from_labels(labels);
}

/// Regular graphs inside the bound's hypotheses, with names.
inline std::vector<std::pair<std::string, Graph>> regular_corpus() {
    std::vector<std::pair<std::string, Graph>> out;
    for (std::size_t n : {4, 5, 6, 7, 9}) out.emplace_back("cycle" + std::to_string(n), cycle(n));
    out.emplace_back("petersen", petersen());
    for (std::size_t v : {7, 11, 15, 19}) out.emplace_back("tight" + std::to_string(v), tight_family(v));
    for (auto [a, m] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2}, {2, 4}}) {
        out.emplace_back("multipartite" + std::to_string(a) + "x" + std::to_string(m),
                         complete_multipartite(a, m));
    }
    for (std::size_t n : {3, 4}) out.emplace_back("lattice" + std::to_string(n), lattice_square(n));
    for (std::size_t n : {5, 6}) out.emplace_back("triangular" + std::to_string(n), triangular(n));
    for (std::size_t q : {5, 13, 17}) out.emplace_back("paley" + std::to_string(q), paley(q));
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        out.emplace_back("random" + std::to_string(seed), random_connected_regular(12, 3 + seed % 3, seed));
    }
    return out;
}

}  // namespace regconn::testing
