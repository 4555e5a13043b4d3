#include <doctest.h>

#include <cmath>
#include <numbers>

#include "regconn/bounds.hpp"
#include "regconn/error.hpp"
#include "regconn/generators.hpp"
#include "support.hpp"

using namespace regconn;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::NumericFailure;
}

// Reference values computed with 30-digit arithmetic (mpmath) from the
// closed form of F.
constexpr double kF_five_thirds_11_6 = 0.276983964948433490291384292515;
constexpr double kF_zero_5_2 = 0.618033988749894848204586834366;
constexpr double kAlgebraicConnectivityC5 = 1.38196601125010515179541316563;

std::vector<BoundParams> all_valid_params(std::size_t max_v) {
    std::vector<BoundParams> out;
    for (std::size_t v = 4; v <= max_v; ++v) {
        for (std::size_t d = 2; d + 1 < v; ++d) out.emplace_back(v, d);
    }
    return out;
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK(kind_of([] { BoundParams(4, 3); }) == ErrorKind::InvalidParams);
    CHECK(kind_of([] { BoundParams(5, 1); }) == ErrorKind::InvalidParams);
    CHECK(kind_of([] { BoundParams(2, 1); }) == ErrorKind::InvalidParams);
    CHECK_NOTHROW(BoundParams(4, 2));
    CHECK(kind_of([] { eval_F(-0.5, BoundParams(5, 2)); }) == ErrorKind::InvalidParams);
}

TEST_CASE("radicand") {
    CHECK(radicand(1.0, BoundParams(11, 6)) == doctest::Approx(400.0));
    CHECK(radicand(0.0, BoundParams(4, 2)) == doctest::Approx(4.0));
    const BoundParams p(11, 6);
    CHECK(radicand_minimizer(p) == doctest::Approx(2.52));
    CHECK(radicand_minimum(p) == doctest::Approx(168.96));
    CHECK(radicand(radicand_minimizer(p), p) == doctest::Approx(168.96));
}

TEST_CASE("F values") {
    CHECK(eval_F(0.0, BoundParams(4, 2)) == doctest::Approx(0.0));
    CHECK(eval_F(1.0, BoundParams(11, 6)) == doctest::Approx(0.0));
    CHECK(std::abs(eval_F(0.0, BoundParams(5, 2)) - kF_zero_5_2) < 1e-12);
    CHECK(std::abs(eval_F(0.0, BoundParams(5, 2)) - 2 * std::cos(2 * std::numbers::pi / 5)) < 1e-12);
    CHECK(std::abs(eval_F(5.0 / 3.0, BoundParams(11, 6)) - kF_five_thirds_11_6) < 1e-12);
    // (-6 + sqrt(36 + 288)) / 12
    CHECK(eval_F(0.0, BoundParams(10, 3)) == doctest::Approx(1.0));
}

TEST_CASE("radicand positivity, monotonicity and convexity of F on a grid") {
    const double h = 1e-3;
    for (const auto& p : all_valid_params(40)) {
        const auto d = static_cast<double>(p.degree());
        for (double x = 0.0; x <= d + 1e-12; x += 0.1) {
            CHECK(radicand(x, p) > 0.0);
            CHECK(eval_F(x + h, p) > eval_F(x, p));
            if (x >= h) CHECK(eval_F(x - h, p) + eval_F(x + h, p) - 2 * eval_F(x, p) > 0.0);
        }
    }
}

TEST_CASE("fixed points of F") {
    SUBCASE("v <= 2d") {
        const auto fp = F_fixed_points(BoundParams(11, 6));
        CHECK(fp.branch == FixedPointCase::OrderAtMostTwiceDegree);
        REQUIRE(fp.below_diagonal.has_value());
        CHECK(fp.below_diagonal->first == 0.0);
        CHECK(fp.below_diagonal->second == doctest::Approx(2.0 + std::sqrt(5.0)));
    }
    SUBCASE("touch") {
        const auto fp = F_fixed_points(BoundParams(16, 6));
        CHECK(fp.branch == FixedPointCase::Touch);
        REQUIRE(fp.fixed_points.size() == 1);
        CHECK(fp.fixed_points[0] == 2.0);
    }
    SUBCASE("none") {
        const auto fp = F_fixed_points(BoundParams(30, 6));
        CHECK(fp.branch == FixedPointCase::None);
        CHECK(fp.fixed_points.empty());
        CHECK_FALSE(fp.below_diagonal.has_value());
    }
    SUBCASE("two roots") {
        const auto fp = F_fixed_points(BoundParams(14, 6));  // 12 < 14 < 16
        CHECK(fp.branch == FixedPointCase::TwoRoots);
        CHECK(fp.fixed_points.size() == 2);
    }
    SUBCASE("degree two") {
        CHECK(F_fixed_points(BoundParams(4, 2)).branch == FixedPointCase::DegreeTwoTouch);
        CHECK(F_fixed_points(BoundParams(7, 2)).branch == FixedPointCase::DegreeTwoNone);
    }
}

TEST_CASE("fixed points satisfy F(r) = r and bound the region F(x) <= x") {
    for (const auto& p : all_valid_params(40)) {
        const auto fp = F_fixed_points(p);
        for (double r : fp.fixed_points) CHECK(std::abs(eval_F(r, p) - r) <= 1e-9);
        const double d = static_cast<double>(p.degree());
        if (!fp.below_diagonal) {
            for (double x = 0.0; x <= 2 * d; x += 0.25) CHECK(eval_F(x, p) > x);
            continue;
        }
        const auto [lo, hi] = *fp.below_diagonal;
        CHECK(eval_F(0.5 * (lo + hi), p) <= 0.5 * (lo + hi) + 1e-12);
        CHECK(eval_F(hi + 1.0, p) > hi + 1.0);
        if (lo > 0.0) CHECK(eval_F(0.5 * lo, p) > 0.5 * lo);
    }
}

TEST_CASE("vertex bounds") {
    SUBCASE("C5: two isolated neighbours") {
        const auto b = vertex_bound(cycle(5), 2);
        CHECK_FALSE(b.neighbourhood_connected);
        CHECK(b.component_average_degrees == std::vector<Rational>{0, 0});
        CHECK(b.branch == VertexBoundBranch::ComponentF);
        CHECK(std::abs(b.value - kF_zero_5_2) < 1e-12);
    }
    SUBCASE("tight family v = 11") {
        const auto g = tight_family(11);
        const auto small_side = vertex_bound(g, 0);
        CHECK_FALSE(small_side.neighbourhood_connected);
        CHECK(small_side.component_average_degrees == std::vector<Rational>{1, 1, 1});
        CHECK(small_side.branch == VertexBoundBranch::ComponentAverage);
        CHECK(small_side.value == 1.0);

        const auto matched = vertex_bound(g, 7);
        CHECK(matched.neighbourhood_connected);
        CHECK(matched.component_average_degrees == std::vector<Rational>{Rational(5, 3)});
        CHECK(std::abs(matched.value - kF_five_thirds_11_6) < 1e-12);
    }
    SUBCASE("hypotheses") {
        CHECK(kind_of([] { vertex_bound(testing::path(4), 0); }) == ErrorKind::NotRegular);
        CHECK(kind_of([] { vertex_bound(complete(5), 0); }) == ErrorKind::BoundNotApplicable);
        const std::vector<Edge> matching{{0, 1}, {2, 3}};
        CHECK(kind_of([&] { vertex_bound(Graph::from_edge_list(4, matching), 0); }) ==
              ErrorKind::BoundNotApplicable);
        const std::vector<Edge> two_squares{{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                            {4, 5}, {5, 6}, {6, 7}, {7, 4}};
        CHECK(kind_of([&] { rho(Graph::from_edge_list(8, two_squares)); }) ==
              ErrorKind::GraphDisconnected);
    }
}

TEST_CASE("rho and the upper bound") {
    const auto tight = rho(tight_family(11), "tight11");
    CHECK(tight.rho == 1.0);
    CHECK(tight.upper_bound == 5.0);
    CHECK(tight.vertices.size() == 11);

    const auto c4 = rho(cycle(4));
    CHECK(std::abs(c4.rho) < 1e-12);
    CHECK(std::abs(c4.upper_bound - 2.0) < 1e-12);

    const auto c5 = rho(cycle(5));
    CHECK(std::abs(c5.rho - kF_zero_5_2) < 1e-12);
    CHECK(std::abs(c5.upper_bound - kAlgebraicConnectivityC5) < 1e-12);

    for (const auto& [name, g] : testing::regular_corpus()) {
        CAPTURE(name);
        const auto report = rho(g);
        double best = -1e300;
        for (const auto& vb : report.vertices) best = std::max(best, vb.value);
        CHECK(report.rho == best);
        CHECK(report.upper_bound == static_cast<double>(report.degree) - report.rho);
    }
}

TEST_CASE("exact connectivity") {
    CHECK(exact_connectivity(complete(2)).algebraic_connectivity == doctest::Approx(2.0));
    CHECK(std::abs(exact_connectivity(cycle(5)).algebraic_connectivity - kAlgebraicConnectivityC5) <
          1e-10);
    const std::vector<Edge> two{{0, 1}, {2, 3}};
    CHECK(std::abs(exact_connectivity(Graph::from_edge_list(4, two)).algebraic_connectivity) < 1e-10);
    const auto pe = exact_connectivity(petersen());
    CHECK(pe.second_adjacency_eigenvalue == doctest::Approx(1.0));
    CHECK(pe.algebraic_connectivity == doctest::Approx(2.0));
}

TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(cycle(5)) == 2);
    CHECK(vertex_connectivity(complete(4)) == 3);
    CHECK(vertex_connectivity(petersen()) == 3);
    CHECK(vertex_connectivity(testing::path(5)) == 1);
    // Removing the smaller part disconnects the matching edges.
    CHECK(vertex_connectivity(tight_family(11)) == 5);
    CHECK(vertex_connectivity(complete_multipartite(3, 2)) == 4);
    // Two triangles sharing a vertex.
    const std::vector<Edge> bowtie{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}};
    CHECK(vertex_connectivity(Graph::from_edge_list(5, bowtie)) == 1);
    const std::vector<Edge> two{{0, 1}, {2, 3}};
    CHECK(kind_of([&] { vertex_connectivity(Graph::from_edge_list(4, two)); }) ==
          ErrorKind::GraphDisconnected);
}

TEST_CASE("vertex connectivity agrees with brute-force separator search") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 4 + rng.below(6);
        const auto g = testing::random_gnp(n, 0.55, rng);
        if (!g.is_connected()) continue;
        // Smallest subset whose removal leaves >= 2 components.
        std::size_t best = n - 1;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            const auto removed = static_cast<std::size_t>(__builtin_popcount(mask));
            if (removed >= best || n - removed < 2) continue;
            std::vector<Vertex> keep;
            for (Vertex u = 0; u < n; ++u) {
                if (!(mask >> u & 1u)) keep.push_back(u);
            }
            if (!g.induced_subgraph(VertexSubset(n, keep)).is_connected()) best = removed;
        }
        CHECK(vertex_connectivity(g) == best);
    }
}

TEST_CASE("bound comparison") {
    const auto c5 = compare_bounds(cycle(5), "c5");
    CHECK(std::abs(c5.gap_interlacing) < 1e-9);
    CHECK(c5.fiedler_bound == 2.0);
    CHECK(c5.sound);

    const auto tight = compare_bounds(tight_family(11));
    CHECK(tight.interlacing_bound == 5.0);
    CHECK(std::abs(tight.exact - 5.0) < 1e-9);
    CHECK(tight.fiedler_bound == 5.0);

    const auto pe = compare_bounds(petersen());
    CHECK(pe.interlacing_bound == doctest::Approx(2.0));
    CHECK(std::abs(pe.gap_interlacing) < 1e-9);
    CHECK(pe.fiedler_bound == 3.0);
    CHECK(pe.gap_fiedler == doctest::Approx(1.0));
}

TEST_CASE("proof quotient matrices reproduce F") {
    for (const auto& [name, g] : testing::regular_corpus()) {
        CAPTURE(name);
        const auto p = bound_params_for(g);
        const double d = static_cast<double>(p.degree());
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            const auto vb = vertex_bound(g, u, p);
            for (std::size_t c = 0; c < vb.component_average_degrees.size(); ++c) {
                const double avg = vb.component_average_degrees[c].to_double();
                std::vector<double> expected{d, eval_F(avg, p), eval_F_conjugate(avg, p)};
                Spectrum got;
                if (vb.neighbourhood_connected) {
                    got = quotient_eigenvalues(connected_case_quotient(p, avg));
                } else {
                    got = quotient_eigenvalues(component_case_quotient(p, avg, vb.component_sizes[c]));
                    expected.push_back(avg);
                }
                std::sort(expected.rbegin(), expected.rend());
                REQUIRE(got.size() == expected.size());
                for (std::size_t i = 0; i < expected.size(); ++i) {
                    CHECK(std::abs(got[i] - expected[i]) < 1e-8);
                }
            }
        }
    }
}

TEST_CASE("per-component bound is sound where the rest of the neighbourhood matches") {
    // The 4x4 matrix behind eta_u is a true quotient only when the rest of
    // G_u has the same average degree as C. Checked component by component.
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t v = 8 + seed % 9;
        std::size_t d = 3 + seed % 3;
        if ((v * d) % 2) ++d;
        const auto g = random_connected_regular(v, d, seed);
        const auto p = bound_params_for(g);
        const double nu2 = exact_connectivity(g).second_adjacency_eigenvalue;
        for (Vertex u = 0; u < v; ++u) {
            const auto vb = vertex_bound(g, u, p);
            if (vb.neighbourhood_connected) {
                CHECK(vb.value <= nu2 + 1e-9);
                continue;
            }
            Rational total{0};
            for (std::size_t c = 0; c < vb.component_sizes.size(); ++c)
                total = total + vb.component_average_degrees[c] *
                                    Rational{static_cast<std::int64_t>(vb.component_sizes[c])};
            for (std::size_t c = 0; c < vb.component_sizes.size(); ++c) {
                const auto gamma = static_cast<std::int64_t>(vb.component_sizes[c]);
                const auto avg = vb.component_average_degrees[c];
                const auto rest = total - avg * Rational{gamma};
                if (!(rest == avg * Rational{static_cast<std::int64_t>(d) - gamma})) continue;
                const double x = avg.to_double();
                CHECK(std::max(x, eval_F(x, p)) <= nu2 + 1e-9);
            }
        }
    }
}

TEST_CASE("eta overshoots when component averages differ") {
    // Vertex 12 sees K1 and a 5-vertex component of average degree 12/5, so
    // eta_12 = 2.4, above nu_2.
    const auto g = read_edge_list_file(REGCONN_DATA_DIR "/counterexample13.edges");
    REQUIRE(g.regularity() == 6u);
    const auto report = rho(g);
    const auto exact = exact_connectivity(g);
    CHECK(exact.second_adjacency_eigenvalue ==
          doctest::Approx(2.18832322040133111847).epsilon(1e-10));
    CHECK(report.rho == doctest::Approx(2.4).epsilon(1e-12));
    CHECK(report.vertices[12].branch == VertexBoundBranch::ComponentAverage);
    CHECK(report.rho > exact.second_adjacency_eigenvalue + 0.2);
    CHECK_FALSE(compare_bounds(g, "counterexample13").sound);
    // Structural bounds still hold.
    CHECK(exact.algebraic_connectivity <= static_cast<double>(vertex_connectivity(g)) + 1e-9);
}
