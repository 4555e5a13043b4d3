#include "regconn/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "regconn/error.hpp"

namespace regconn {

BoundParams::BoundParams(std::size_t vertex_count, std::size_t degree)
    : v_(vertex_count), d_(degree) {
    if (v_ < 3 || d_ <= 1 || d_ + 1 >= v_) {
        throw Error(ErrorKind::InvalidParams,
                    "need v >= 3 and 1 < degree < v - 1, got v = " + std::to_string(v_) +
                        ", degree = " + std::to_string(d_));
    }
}

namespace {

struct Coefficients {
    double v;
    double d;
};

Coefficients coefficients(const BoundParams& p) {
    return {static_cast<double>(p.vertex_count()), static_cast<double>(p.degree())};
}

void require_non_negative(double x) {
    if (!(x >= 0.0)) {
        throw Error(ErrorKind::InvalidParams, "F is only defined for x >= 0");
    }
}

}  // namespace

double radicand(double x, const BoundParams& p) {
    require_non_negative(x);
    const auto [v, d] = coefficients(p);
    const double linear = x * (v - 1.0) - d * (d - 1.0);
    return linear * linear + 4.0 * (v - d - 1.0) * d * (v - 2.0 * d + x);
}

double radicand_minimizer(const BoundParams& p) {
    const auto [v, d] = coefficients(p);
    return d * (d * (v + 1.0) - 3.0 * (v - 1.0)) / ((v - 1.0) * (v - 1.0));
}

double radicand_minimum(const BoundParams& p) {
    const auto [v, d] = coefficients(p);
    const double gap = v - d - 1.0;
    return 4.0 * v * d * gap * gap * gap / ((v - 1.0) * (v - 1.0));
}

double eval_F(double x, const BoundParams& p) {
    const auto [v, d] = coefficients(p);
    return (x * (v - 1.0) - d * (d - 1.0) + std::sqrt(radicand(x, p))) / (2.0 * (v - d - 1.0));
}

double eval_F_conjugate(double x, const BoundParams& p) {
    const auto [v, d] = coefficients(p);
    return (x * (v - 1.0) - d * (d - 1.0) - std::sqrt(radicand(x, p))) / (2.0 * (v - d - 1.0));
}

std::string to_string(FixedPointCase c) {
    switch (c) {
        case FixedPointCase::DegreeTwoTouch: return "degree-two-touch";
        case FixedPointCase::DegreeTwoNone: return "degree-two-none";
        case FixedPointCase::OrderAtMostTwiceDegree: return "order-at-most-twice-degree";
        case FixedPointCase::TwoRoots: return "two-roots";
        case FixedPointCase::Touch: return "touch";
        case FixedPointCase::None: return "none";
    }
    return "unknown";
}

FixedPointAnalysis F_fixed_points(const BoundParams& p) {
    // F(x) = x reduces to x^2 - (d-2)x - (2d - v) = 0 with discriminant (d+2)^2 - 4v.
    // The case split uses exact integer comparisons.
    const auto v = static_cast<long long>(p.vertex_count());
    const auto d = static_cast<long long>(p.degree());
    const long long disc = (d + 2) * (d + 2) - 4 * v;
    const double half_shift = 0.5 * static_cast<double>(d - 2);
    const double half_root = disc > 0 ? 0.5 * std::sqrt(static_cast<double>(disc)) : 0.0;

    FixedPointAnalysis out{};
    if (d == 2) {
        if (v == 4) {
            out.branch = FixedPointCase::DegreeTwoTouch;
            out.fixed_points = {0.0};
            out.below_diagonal = std::pair{0.0, 0.0};
        } else {
            out.branch = FixedPointCase::DegreeTwoNone;
        }
        return out;
    }
    if (disc < 0) {
        out.branch = FixedPointCase::None;
        return out;
    }
    if (disc == 0) {
        out.branch = FixedPointCase::Touch;
        out.fixed_points = {half_shift};
        out.below_diagonal = std::pair{half_shift, half_shift};
        return out;
    }
    const double upper = half_shift + half_root;
    if (v <= 2 * d) {
        // The smaller root is <= 0; on x >= 0 the region starts at 0.
        out.branch = FixedPointCase::OrderAtMostTwiceDegree;
        if (v == 2 * d) out.fixed_points.push_back(0.0);
        out.fixed_points.push_back(upper);
        out.below_diagonal = std::pair{0.0, upper};
        return out;
    }
    const double lower = half_shift - half_root;
    out.branch = FixedPointCase::TwoRoots;
    out.fixed_points = {lower, upper};
    out.below_diagonal = std::pair{lower, upper};
    return out;
}

BoundParams bound_params_for(const Graph& g) {
    const auto degree = g.regularity();
    if (!degree) throw Error(ErrorKind::NotRegular, "graph is not regular");
    const auto v = g.vertex_count();
    if (v < 3) {
        throw Error(ErrorKind::BoundNotApplicable, "bound needs v >= 3, got v = " + std::to_string(v));
    }
    if (*degree <= 1) {
        throw Error(ErrorKind::BoundNotApplicable,
                    "bound needs degree > 1, got degree = " + std::to_string(*degree));
    }
    if (*degree + 1 == v) {
        throw Error(ErrorKind::BoundNotApplicable,
                    "bound needs degree < v - 1; complete graphs are excluded");
    }
    if (!g.is_connected()) throw Error(ErrorKind::GraphDisconnected, "graph is not connected");
    return BoundParams(v, *degree);
}

VertexBound vertex_bound(const Graph& g, Vertex u) {
    return vertex_bound(g, u, bound_params_for(g));
}

VertexBound vertex_bound(const Graph& g, Vertex u, const BoundParams& p) {
    const auto [local, members] = g.neighbourhood_graph(u);
    const auto components = local.connected_components();

    VertexBound out;
    out.vertex = u;
    out.neighbourhood_connected = components.size() == 1;
    for (const auto& c : components) {
        out.component_average_degrees.push_back(local.average_degree(c));
        out.component_sizes.push_back(c.size());
    }

    if (out.neighbourhood_connected) {
        out.branch = VertexBoundBranch::ConnectedF;
        out.value = eval_F(out.component_average_degrees.front().to_double(), p);
        return out;
    }

    out.value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < components.size(); ++i) {
        const double avg = out.component_average_degrees[i].to_double();
        const double f = eval_F(avg, p);
        // Ties go to the average degree itself.
        const bool f_wins = f > avg;
        const double candidate = f_wins ? f : avg;
        if (candidate > out.value) {
            out.value = candidate;
            out.branch = f_wins ? VertexBoundBranch::ComponentF : VertexBoundBranch::ComponentAverage;
            out.winning_component = i;
        }
    }
    return out;
}

BoundReport rho(const Graph& g, std::string graph_id) {
    const auto p = bound_params_for(g);
    BoundReport report;
    report.graph_id = std::move(graph_id);
    report.vertex_count = p.vertex_count();
    report.degree = p.degree();
    report.vertices.reserve(g.vertex_count());
    report.rho = -std::numeric_limits<double>::infinity();
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        report.vertices.push_back(vertex_bound(g, u, p));
        report.rho = std::max(report.rho, report.vertices.back().value);
    }
    report.upper_bound = static_cast<double>(p.degree()) - report.rho;
    return report;
}

ExactConnectivity exact_connectivity(const Graph& g) {
    if (g.vertex_count() < 2) {
        throw Error(ErrorKind::InvalidParams, "algebraic connectivity needs at least two vertices");
    }
    const auto adjacency = eigenvalues(adjacency_matrix(g));
    const auto laplacian = eigenvalues(laplacian_matrix(g));
    ExactConnectivity out;
    out.second_adjacency_eigenvalue = adjacency[1];
    out.algebraic_connectivity = laplacian[laplacian.size() - 2];
    if (const auto d = g.regularity()) {
        const double via_adjacency = static_cast<double>(*d) - out.second_adjacency_eigenvalue;
        if (std::abs(via_adjacency - out.algebraic_connectivity) > 1e-8) {
            throw Error(ErrorKind::NumericFailure,
                        "Laplacian and adjacency spectra disagree for a regular graph");
        }
    }
    return out;
}

namespace {

/// Unit-capacity flow network on split vertices: u_in = 2u, u_out = 2u + 1.
class SplitFlowNetwork {
    struct Arc {
        std::size_t to;
        int capacity;
        int next;
    };

public:
    explicit SplitFlowNetwork(const Graph& g) : node_count_(2 * g.vertex_count()), head_(node_count_, -1) {
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            split_arc_.push_back(arcs_.size());
            add_arc(2 * u, 2 * u + 1, 1);
            for (Vertex w : g.neighbours(u)) add_arc(2 * u + 1, 2 * w, kUnbounded);
        }
        initial_capacity_.reserve(arcs_.size());
        for (const auto& a : arcs_) initial_capacity_.push_back(a.capacity);
    }

    /// Number of internally vertex-disjoint s-t paths, stopping once `cap` is reached.
    std::size_t disjoint_paths(Vertex s, Vertex t, std::size_t cap) {
        for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].capacity = initial_capacity_[i];
        // s and t themselves are not removable.
        arcs_[split_arc_[s]].capacity = kUnbounded;
        arcs_[split_arc_[t]].capacity = kUnbounded;
        const std::size_t source = 2 * s + 1;
        const std::size_t sink = 2 * t;
        std::size_t flow = 0;
        std::vector<int> via(node_count_);
        while (flow < cap) {
            std::fill(via.begin(), via.end(), -1);
            std::deque<std::size_t> queue{source};
            via[source] = -2;
            while (!queue.empty() && via[sink] == -1) {
                const auto x = queue.front();
                queue.pop_front();
                for (int a = head_[x]; a != -1; a = arcs_[a].next) {
                    const auto y = arcs_[a].to;
                    if (arcs_[a].capacity > 0 && via[y] == -1) {
                        via[y] = a;
                        queue.push_back(y);
                    }
                }
            }
            if (via[sink] == -1) break;
            for (auto y = sink; y != source;) {
                const int a = via[y];
                arcs_[a].capacity -= 1;
                arcs_[a ^ 1].capacity += 1;
                y = arcs_[a ^ 1].to;
            }
            ++flow;
        }
        return flow;
    }

private:
    static constexpr int kUnbounded = std::numeric_limits<int>::max() / 2;

    void add_arc(std::size_t from, std::size_t to, int capacity) {
        arcs_.push_back({to, capacity, head_[from]});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, 0, head_[to]});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    std::size_t node_count_;
    std::vector<int> head_;
    std::vector<Arc> arcs_;
    std::vector<int> initial_capacity_;
    std::vector<std::size_t> split_arc_;
};

}  // namespace

std::size_t vertex_connectivity(const Graph& g) {
    if (!g.is_connected()) throw Error(ErrorKind::GraphDisconnected, "graph is not connected");
    const auto n = g.vertex_count();
    std::size_t best = n - 1;
    SplitFlowNetwork network(g);
    for (Vertex s = 0; s < n; ++s) {
        for (Vertex t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            best = std::min(best, network.disjoint_paths(s, t, best));
        }
    }
    return best;
}

BoundComparison compare_bounds(const Graph& g, std::string graph_id, double tolerance) {
    const auto report = rho(g, std::move(graph_id));
    const auto exact = exact_connectivity(g);
    BoundComparison out;
    out.graph_id = report.graph_id;
    out.vertex_count = report.vertex_count;
    out.degree = report.degree;
    out.interlacing_bound = report.upper_bound;
    out.fiedler_bound = static_cast<double>(vertex_connectivity(g));
    out.exact = exact.algebraic_connectivity;
    out.gap_interlacing = out.interlacing_bound - out.exact;
    out.gap_fiedler = out.fiedler_bound - out.exact;
    out.sound = out.gap_interlacing >= -tolerance && out.gap_fiedler >= -tolerance;
    return out;
}

QuotientMatrix connected_case_quotient(const BoundParams& p, double avg) {
    const auto [v, d] = coefficients(p);
    const double outside = v - d - 1.0;
    const double across = d - avg - 1.0;
    const double back = d * across / outside;
    return QuotientMatrix({0.0, d, 0.0,
                           1.0, avg, across,
                           0.0, back, d - back},
                          {1.0, d, outside});
}

QuotientMatrix component_case_quotient(const BoundParams& p, double avg, std::size_t gamma) {
    if (gamma == 0 || gamma >= p.degree()) {
        throw Error(ErrorKind::InvalidParams, "component size must satisfy 0 < gamma < degree");
    }
    const auto [v, d] = coefficients(p);
    const double g = static_cast<double>(gamma);
    const double outside = v - d - 1.0;
    const double across = d - avg - 1.0;
    return QuotientMatrix({0.0, g, d - g, 0.0,
                           1.0, avg, 0.0, across,
                           1.0, 0.0, avg, across,
                           0.0, g * across / outside, (d - g) * across / outside, d - d * across / outside},
                          {1.0, g, d - g, outside});
}

}  // namespace regconn
