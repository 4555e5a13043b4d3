#include "regconn/srg.hpp"

#include <cmath>
#include <cstdint>

#include "regconn/error.hpp"

namespace regconn {

namespace {

using Int = std::int64_t;

Int as_int(std::size_t x) { return static_cast<Int>(x); }

Int discriminant(const SrgParams& p) {
    const Int diff = as_int(p.lambda) - as_int(p.mu);
    return diff * diff + 4 * (as_int(p.degree) - as_int(p.mu));
}

std::optional<Int> exact_sqrt(Int x) {
    if (x < 0) return std::nullopt;
    auto r = static_cast<Int>(std::llround(std::sqrt(static_cast<double>(x))));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    if (r * r != x) return std::nullopt;
    return r;
}

void require_detected(const Graph& g, const SrgParams& p) {
    const auto detected = detect_srg(g);
    if (!detected || !(*detected == p)) {
        throw Error(ErrorKind::ParamMismatch,
                    "graph is not strongly regular with parameters " + to_string(p));
    }
}

}  // namespace

bool SrgParams::satisfies_identity() const noexcept {
    if (mu < 1 || degree >= v) return false;
    return as_int(degree) * (as_int(degree) - as_int(lambda) - 1) ==
           (as_int(v) - as_int(degree) - 1) * as_int(mu);
}

std::string to_string(const SrgParams& p) {
    return "(" + std::to_string(p.v) + "," + std::to_string(p.degree) + "," +
           std::to_string(p.lambda) + "," + std::to_string(p.mu) + ")";
}

std::optional<SrgParams> detect_srg(const Graph& g) {
    if (!g.is_connected()) throw Error(ErrorKind::GraphDisconnected, "graph is not connected");
    const auto degree = g.regularity();
    if (!degree) return std::nullopt;
    const auto n = g.vertex_count();
    std::optional<std::size_t> lambda;
    std::optional<std::size_t> mu;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            std::size_t common = 0;
            for (Vertex w : g.neighbours(a)) {
                if (g.has_edge(b, w)) ++common;
            }
            auto& slot = g.has_edge(a, b) ? lambda : mu;
            if (!slot) {
                slot = common;
            } else if (*slot != common) {
                return std::nullopt;
            }
        }
    }
    if (!lambda || !mu || *mu == 0) return std::nullopt;
    return SrgParams{n, *degree, *lambda, *mu};
}

SrgSpectrum srg_spectrum(const SrgParams& p) {
    if (!p.satisfies_identity()) {
        throw Error(ErrorKind::InfeasibleParams,
                    "parameters " + to_string(p) + " violate k(k-lambda-1) = (v-k-1)mu");
    }
    const Int disc = discriminant(p);
    const Int diff = as_int(p.lambda) - as_int(p.mu);
    const Int v1 = as_int(p.v) - 1;
    const Int skew = 2 * as_int(p.degree) + v1 * diff;

    SrgSpectrum out;
    const double root = std::sqrt(static_cast<double>(disc));
    out.eig1 = 0.5 * (static_cast<double>(diff) + root);
    out.eig2 = 0.5 * (static_cast<double>(diff) - root);

    if (const auto s = exact_sqrt(disc); s && *s > 0) {
        out.rational = true;
        // mult1 = ((v-1)s - skew) / (2s), mult2 = ((v-1)s + skew) / (2s)
        const Int num1 = v1 * *s - skew;
        const Int num2 = v1 * *s + skew;
        if (num1 < 0 || num2 < 0 || num1 % (2 * *s) != 0 || num2 % (2 * *s) != 0) {
            throw Error(ErrorKind::InfeasibleParams,
                        "parameters " + to_string(p) + " give non-integral multiplicities");
        }
        out.mult1 = static_cast<std::size_t>(num1 / (2 * *s));
        out.mult2 = static_cast<std::size_t>(num2 / (2 * *s));
        return out;
    }
    const double m1 = 0.5 * (static_cast<double>(v1) - static_cast<double>(skew) / root);
    const double m2 = 0.5 * (static_cast<double>(v1) + static_cast<double>(skew) / root);
    const double r1 = std::round(m1);
    const double r2 = std::round(m2);
    if (std::abs(m1 - r1) > 1e-6 || std::abs(m2 - r2) > 1e-6 || r1 < 0 || r2 < 0) {
        throw Error(ErrorKind::InfeasibleParams,
                    "parameters " + to_string(p) + " give non-integral multiplicities");
    }
    out.mult1 = static_cast<std::size_t>(r1);
    out.mult2 = static_cast<std::size_t>(r2);
    return out;
}

bool neighbourhood_regular_check(const Graph& g, const SrgParams& p) {
    require_detected(g, p);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        const auto local = g.neighbourhood_graph(u).first.regularity();
        if (!local || *local != p.lambda) return false;
    }
    return true;
}

// lambda vs (lambda - mu + sqrt(D)) / 2 compares lambda + mu with sqrt(D);
// both sides are non-negative, so squaring gives lambda*mu vs k - mu.
bool neighbourhood_connectivity_condition(const SrgParams& p) {
    return as_int(p.mu) * (as_int(p.lambda) + 1) > as_int(p.degree);
}

DivisibilityResult component_divisibility_check(const Graph& g, const SrgParams& p) {
    require_detected(g, p);
    DivisibilityResult out;
    out.applicable = as_int(p.mu) * (as_int(p.lambda) + 1) == as_int(p.degree);
    if (!out.applicable) return out;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (const auto& c : g.neighbourhood_graph(u).first.connected_components()) {
            if (c.size() % (p.lambda + 1) != 0) {
                out.holds = false;
                return out;
            }
        }
    }
    return out;
}

MaximalityCertificate maximality_certificate(const SrgParams& p) {
    MaximalityCertificate out;
    out.condition_lambda = as_int(p.mu) * (as_int(p.lambda) + 1) >= as_int(p.degree);
    out.condition_v = as_int(p.v) <= 2 * as_int(p.degree) - as_int(p.lambda);
    out.certified = out.condition_lambda && out.condition_v;
    return out;
}

}  // namespace regconn
