#include "regconn/generators.hpp"

#include <algorithm>
#include <utility>

#include "regconn/error.hpp"

namespace regconn {

namespace {

[[noreturn]] void infeasible(const std::string& what) {
    throw Error(ErrorKind::InfeasibleParams, what);
}

constexpr int kMaxRestarts = 10'000;
constexpr int kMaxConnectAttempts = 1'000;
// Above this degree plain pairing almost never yields a simple graph.
constexpr std::size_t kPlainPairingMaxDegree = 5;

}  // namespace

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    // Rejection sampling removes modulo bias.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
}

Graph complete_multipartite(std::size_t alpha, std::size_t m) {
    if (alpha < 2 || m < 1 || alpha * m < 4) {
        infeasible("complete multipartite graph needs alpha >= 2, m >= 1, alpha*m >= 4");
    }
    const auto n = alpha * m;
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (a / m != b / m) edges.emplace_back(a, b);
        }
    }
    return Graph::from_edge_list(n, edges);
}

Graph tight_family(std::size_t v) {
    if (v < 3 || (v + 1) % 4 != 0) infeasible("tight family needs v + 1 = 0 mod 4");
    const auto small = (v - 1) / 2;
    std::vector<Edge> edges;
    for (Vertex a = 0; a < small; ++a) {
        for (Vertex b = small; b < v; ++b) edges.emplace_back(a, b);
    }
    for (Vertex b = small; b < v; b += 2) edges.emplace_back(b, b + 1);
    return Graph::from_edge_list(v, edges);
}

Graph cycle(std::size_t n) {
    if (n < 3) infeasible("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) edges.emplace_back(a, (a + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph complete(std::size_t n) {
    if (n < 2) infeasible("complete graph needs n >= 2");
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    }
    return Graph::from_edge_list(n, edges);
}

Graph petersen() {
    // Vertices are the 2-subsets of {0..4}; adjacent when disjoint.
    std::vector<std::pair<int, int>> subsets;
    for (int a = 0; a < 5; ++a) {
        for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
    }
    std::vector<Edge> edges;
    for (Vertex i = 0; i < subsets.size(); ++i) {
        for (Vertex j = i + 1; j < subsets.size(); ++j) {
            const auto [a, b] = subsets[i];
            const auto [c, d] = subsets[j];
            if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(subsets.size(), edges);
}

Graph lattice_square(std::size_t n) {
    if (n < 2) infeasible("lattice graph needs n >= 2");
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n * n; ++a) {
        for (Vertex b = a + 1; b < n * n; ++b) {
            if (a / n == b / n || a % n == b % n) edges.emplace_back(a, b);
        }
    }
    return Graph::from_edge_list(n * n, edges);
}

Graph triangular(std::size_t n) {
    if (n < 4) infeasible("triangular graph needs n >= 4");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    }
    std::vector<Edge> edges;
    for (Vertex i = 0; i < pairs.size(); ++i) {
        for (Vertex j = i + 1; j < pairs.size(); ++j) {
            const auto [a, b] = pairs[i];
            const auto [c, d] = pairs[j];
            if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(pairs.size(), edges);
}

Graph paley(std::size_t q) {
    auto is_prime = [](std::size_t x) {
        if (x < 2) return false;
        for (std::size_t f = 2; f * f <= x; ++f) {
            if (x % f == 0) return false;
        }
        return true;
    };
    if (!is_prime(q) || q % 4 != 1) infeasible("Paley graph needs a prime q = 1 mod 4");
    std::vector<bool> square(q, false);
    for (std::size_t x = 1; x < q; ++x) square[x * x % q] = true;
    std::vector<Edge> edges;
    for (Vertex a = 0; a < q; ++a) {
        for (Vertex b = a + 1; b < q; ++b) {
            if (square[b - a]) edges.emplace_back(a, b);
        }
    }
    return Graph::from_edge_list(q, edges);
}

Graph complement(const Graph& g) {
    const auto n = g.vertex_count();
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) edges.emplace_back(a, b);
        }
    }
    return Graph::from_edge_list(n, edges);
}

namespace {

Graph pairing_model(std::size_t v, std::size_t degree, SplitMix64& rng) {
    const auto points = v * degree;
    std::vector<Vertex> slots(points);
    std::vector<unsigned char> used(v * v);
    std::vector<Edge> edges;
    edges.reserve(points / 2);
    for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
        for (std::size_t i = 0; i < points; ++i) slots[i] = i / degree;
        for (std::size_t i = points; i > 1; --i) std::swap(slots[i - 1], slots[rng.below(i)]);
        std::fill(used.begin(), used.end(), 0);
        edges.clear();
        bool simple = true;
        for (std::size_t i = 0; i < points && simple; i += 2) {
            const auto a = slots[i];
            const auto b = slots[i + 1];
            if (a == b || used[a * v + b]) {
                simple = false;
            } else {
                used[a * v + b] = used[b * v + a] = 1;
                edges.emplace_back(a, b);
            }
        }
        if (simple) return Graph::from_edge_list(v, edges);
    }
    throw Error(ErrorKind::GenerationFailure,
                "pairing model found no simple " + std::to_string(degree) + "-regular graph on " +
                    std::to_string(v) + " vertices in " + std::to_string(kMaxRestarts) +
                    " restarts");
}

/// Steger-Wormald variant: points are paired one at a time, redrawing any
/// pair that would create a loop or repeated edge, and the whole matching
/// restarts only when no admissible pair remains.
Graph sequential_pairing(std::size_t v, std::size_t degree, SplitMix64& rng) {
    std::vector<Vertex> points;
    std::vector<unsigned char> used(v * v);
    std::vector<Edge> edges;
    for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
        points.clear();
        for (Vertex u = 0; u < v; ++u) points.insert(points.end(), degree, u);
        std::fill(used.begin(), used.end(), 0);
        edges.clear();
        bool stuck = false;
        while (!points.empty() && !stuck) {
            int misses = 0;
            while (true) {
                const auto i = rng.below(points.size());
                const auto j = rng.below(points.size());
                const auto a = points[i];
                const auto b = points[j];
                if (a != b && !used[a * v + b]) {
                    used[a * v + b] = used[b * v + a] = 1;
                    edges.emplace_back(a, b);
                    // Remove the larger index first so the smaller stays valid.
                    for (auto k : {std::max(i, j), std::min(i, j)}) {
                        points[k] = points.back();
                        points.pop_back();
                    }
                    break;
                }
                if (++misses < 64) continue;
                misses = 0;
                bool admissible = false;
                for (std::size_t x = 0; x < points.size() && !admissible; ++x) {
                    for (std::size_t y = x + 1; y < points.size() && !admissible; ++y) {
                        admissible = points[x] != points[y] && !used[points[x] * v + points[y]];
                    }
                }
                if (!admissible) {
                    stuck = true;
                    break;
                }
            }
        }
        if (!stuck) return Graph::from_edge_list(v, edges);
    }
    throw Error(ErrorKind::GenerationFailure,
                "sequential pairing found no simple " + std::to_string(degree) +
                    "-regular graph on " + std::to_string(v) + " vertices in " +
                    std::to_string(kMaxRestarts) + " restarts");
}

}  // namespace

Graph random_regular(std::size_t v, std::size_t degree, std::uint64_t seed) {
    if (v == 0 || degree >= v || (v * degree) % 2 != 0) {
        infeasible("random regular graph needs degree < v and v*degree even");
    }
    SplitMix64 rng(seed);
    const bool dense = 2 * degree > v - 1;
    const auto reduced = dense ? v - 1 - degree : degree;
    auto g = reduced <= kPlainPairingMaxDegree ? pairing_model(v, reduced, rng)
                                               : sequential_pairing(v, reduced, rng);
    return dense ? complement(g) : g;
}

Graph random_connected_regular(std::size_t v, std::size_t degree, std::uint64_t seed) {
    SplitMix64 seeds(seed);
    for (int attempt = 0; attempt < kMaxConnectAttempts; ++attempt) {
        auto g = random_regular(v, degree, seeds.next());
        if (g.is_connected()) return g;
    }
    throw Error(ErrorKind::GenerationFailure,
                "no connected sample in " + std::to_string(kMaxConnectAttempts) + " attempts");
}

Graph generate(const FamilySpec& spec) {
    const auto& p = spec.params;
    auto arg = [&](std::size_t i) -> std::size_t {
        if (i >= p.size() || p[i] < 0) {
            infeasible("family '" + spec.family + "' is missing parameter " + std::to_string(i));
        }
        return static_cast<std::size_t>(p[i]);
    };
    if (spec.family == "cycle") return cycle(arg(0));
    if (spec.family == "complete") return complete(arg(0));
    if (spec.family == "petersen") return petersen();
    if (spec.family == "multipartite") return complete_multipartite(arg(0), arg(1));
    if (spec.family == "tight") return tight_family(arg(0));
    if (spec.family == "random-regular") return random_connected_regular(arg(0), arg(1), spec.seed);
    if (spec.family == "lattice") return lattice_square(arg(0));
    if (spec.family == "triangular") return triangular(arg(0));
    if (spec.family == "paley") return paley(arg(0));
    infeasible("unknown family '" + spec.family + "'");
}

}  // namespace regconn
