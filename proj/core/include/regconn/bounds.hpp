#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "regconn/graph.hpp"
#include "regconn/linalg.hpp"
#include "regconn/rational.hpp"

namespace regconn {

/// Order v and degree d of a regular graph, restricted to v >= 3 and
/// 1 < d < v - 1 (the range where F is defined and well behaved).
class BoundParams {
public:
    /// Throws InvalidParams outside the admissible range.
    BoundParams(std::size_t vertex_count, std::size_t degree);

    std::size_t vertex_count() const noexcept { return v_; }
    std::size_t degree() const noexcept { return d_; }

private:
    std::size_t v_;
    std::size_t d_;
};

/// (x(v-1) - d(d-1))^2 + 4(v-d-1)d(v-2d+x); strictly positive for x >= 0.
double radicand(double x, const BoundParams& p);
/// Stationary point of the radicand, d(d(v+1) - 3(v-1)) / (v-1)^2.
double radicand_minimizer(const BoundParams& p);
/// 4vd(v-d-1)^3 / (v-1)^2, the radicand evaluated at its stationary point.
double radicand_minimum(const BoundParams& p);

/// F(x) = (x(v-1) - d(d-1) + sqrt(radicand(x))) / (2(v-d-1)).
/// Throws InvalidParams for x < 0.
double eval_F(double x, const BoundParams& p);

/// The companion root (x(v-1) - d(d-1) - sqrt(radicand(x))) / (2(v-d-1)) of
/// the quadratic factor shared by the 3x3 and 4x4 quotient matrices.
double eval_F_conjugate(double x, const BoundParams& p);

enum class FixedPointCase {
    DegreeTwoTouch,       ///< d = 2, v = 4: F(0) = 0, F(x) > x elsewhere
    DegreeTwoNone,        ///< d = 2, v > 4: F(x) > x everywhere
    OrderAtMostTwiceDegree,  ///< d > 2, v <= 2d: F(x) <= x on [0, x2]
    TwoRoots,             ///< d > 2, 2d < v < (d+2)^2/4: F(x) <= x on [x1, x2]
    Touch,                ///< d > 2, v = (d+2)^2/4: F(x) <= x only at (d-2)/2
    None,                 ///< d > 2, v > (d+2)^2/4: F(x) > x everywhere
};

std::string to_string(FixedPointCase c);

struct FixedPointAnalysis {
    FixedPointCase branch;
    /// Non-negative solutions of F(x) = x, ascending.
    std::vector<double> fixed_points;
    /// Closed interval of x >= 0 on which F(x) <= x; absent when F(x) > x everywhere.
    std::optional<std::pair<double, double>> below_diagonal;
};

FixedPointAnalysis F_fixed_points(const BoundParams& p);

enum class VertexBoundBranch {
    ConnectedF,        ///< neighbourhood connected: value = F(avg)
    ComponentAverage,  ///< disconnected, a component's average degree won
    ComponentF,        ///< disconnected, F(component average) won
};

struct VertexBound {
    Vertex vertex = 0;
    bool neighbourhood_connected = false;
    /// One entry when connected, otherwise one per component in component order.
    std::vector<Rational> component_average_degrees;
    std::vector<std::size_t> component_sizes;
    double value = 0.0;
    VertexBoundBranch branch = VertexBoundBranch::ConnectedF;
    /// Component that attained the value.
    std::size_t winning_component = 0;
};

struct ExactConnectivity {
    double second_adjacency_eigenvalue = 0.0;
    double algebraic_connectivity = 0.0;
};

struct BoundReport {
    std::string graph_id;
    std::size_t vertex_count = 0;
    std::size_t degree = 0;
    double rho = 0.0;
    double upper_bound = 0.0;
    std::vector<VertexBound> vertices;
    std::optional<ExactConnectivity> exact;
};

/// Checks the hypotheses shared by vertex_bound and rho and returns the
/// validated parameters. Throws NotRegular, BoundNotApplicable or
/// GraphDisconnected.
BoundParams bound_params_for(const Graph& g);

VertexBound vertex_bound(const Graph& g, Vertex u);
/// Same as above with hypotheses already validated.
VertexBound vertex_bound(const Graph& g, Vertex u, const BoundParams& p);

/// Lower bound rho(G) on the second adjacency eigenvalue, maximised over every
/// vertex, and the resulting upper bound d - rho(G) on algebraic connectivity.
BoundReport rho(const Graph& g, std::string graph_id = {});

/// Second adjacency eigenvalue and second-smallest Laplacian eigenvalue.
/// Requires at least two vertices. For regular graphs the identity
/// a = d - nu2 is checked and a NumericFailure raised if it does not hold.
ExactConnectivity exact_connectivity(const Graph& g);

/// Minimum number of vertices whose removal disconnects g, v-1 for complete
/// graphs. Throws GraphDisconnected.
std::size_t vertex_connectivity(const Graph& g);

struct BoundComparison {
    std::string graph_id;
    std::size_t vertex_count = 0;
    std::size_t degree = 0;
    double interlacing_bound = 0.0;  ///< d - rho(G)
    double fiedler_bound = 0.0;  ///< vertex connectivity
    double exact = 0.0;  ///< algebraic connectivity
    double gap_interlacing = 0.0;  ///< interlacing_bound - exact
    double gap_fiedler = 0.0;  ///< fiedler_bound - exact
    /// exact <= bound + tolerance for both bounds.
    bool sound = true;
};

BoundComparison compare_bounds(const Graph& g, std::string graph_id = {},
                               double tolerance = kSpectralTolerance);

/// Average-row-sum matrix for u with connected neighbourhood of average
/// degree avg, blocks {u}, N(u), rest. Eigenvalues: d, F(avg), conjugate.
QuotientMatrix connected_case_quotient(const BoundParams& p, double avg);

/// Average-row-sum matrix for a component of size gamma < d and average
/// degree avg, blocks {u}, C, N(u)\C, rest. Eigenvalues: avg, d, F(avg), conjugate.
QuotientMatrix component_case_quotient(const BoundParams& p, double avg, std::size_t gamma);

}  // namespace regconn
