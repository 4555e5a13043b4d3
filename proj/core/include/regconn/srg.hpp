#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "regconn/graph.hpp"

namespace regconn {

/// Parameters (v, k, lambda, mu) of a strongly regular graph: k-regular on v
/// vertices, adjacent pairs share lambda neighbours, non-adjacent pairs mu.
struct SrgParams {
    std::size_t v = 0;
    std::size_t degree = 0;
    std::size_t lambda = 0;
    std::size_t mu = 0;

    /// mu >= 1 and k(k - lambda - 1) = (v - k - 1) mu.
    bool satisfies_identity() const noexcept;

    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

std::string to_string(const SrgParams& p);

/// The two non-principal adjacency eigenvalues, eig1 > eig2, with multiplicities.
struct SrgSpectrum {
    double eig1 = 0.0;
    double eig2 = 0.0;
    std::size_t mult1 = 0;
    std::size_t mult2 = 0;
    /// Discriminant (lambda - mu)^2 + 4(k - mu) is a perfect square.
    bool rational = false;
};

/// Brute-force common-neighbour counting. Absent when g is not strongly
/// regular (including complete graphs, which have no non-adjacent pair).
/// Throws GraphDisconnected.
std::optional<SrgParams> detect_srg(const Graph& g);

/// Throws InfeasibleParams if the parameter identity fails or a multiplicity
/// is not a non-negative integer.
SrgSpectrum srg_spectrum(const SrgParams& p);

/// Every neighbourhood graph is lambda-regular. Throws ParamMismatch unless
/// detect_srg(g) == p.
bool neighbourhood_regular_check(const Graph& g, const SrgParams& p);

/// lambda > (lambda - mu + sqrt((lambda - mu)^2 + 4(k - mu))) / 2, i.e. lambda
/// exceeds the second adjacency eigenvalue; evaluated exactly as mu(lambda+1) > k.
bool neighbourhood_connectivity_condition(const SrgParams& p);

struct DivisibilityResult {
    /// lambda equals the second adjacency eigenvalue (k = mu(lambda + 1)).
    bool applicable = false;
    /// Every component of every neighbourhood graph has size divisible by
    /// lambda + 1; true when not applicable.
    bool holds = true;
};

/// Throws ParamMismatch unless detect_srg(g) == p.
DivisibilityResult component_divisibility_check(const Graph& g, const SrgParams& p);

/// Sufficient condition for an SRG to have the largest algebraic
/// connectivity among all k-regular graphs on v vertices.
struct MaximalityCertificate {
    bool condition_lambda = false;  ///< lambda >= second adjacency eigenvalue
    bool condition_v = false;  ///< v <= 2k - lambda
    bool certified = false;
};

MaximalityCertificate maximality_certificate(const SrgParams& p);

}  // namespace regconn
