#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "regconn/graph.hpp"

namespace regconn {

/// Family name plus integer parameters, used to label generated graphs.
struct FamilySpec {
    std::string family;
    std::vector<std::int64_t> params;
    std::uint64_t seed = 0;
};

/// K_{m,...,m} with alpha parts: (alpha-1)m-regular on alpha*m vertices.
/// Requires alpha >= 2, m >= 1, alpha*m >= 4.
Graph complete_multipartite(std::size_t alpha, std::size_t m);

/// Complete bipartite graph with parts (v-1)/2 and (v+1)/2 plus a perfect
/// matching on the larger part; (v+1)/2-regular. Requires v + 1 = 0 mod 4.
/// Vertices 0..(v-3)/2 form the smaller part; the larger part is matched in
/// consecutive pairs.
Graph tight_family(std::size_t v);

Graph cycle(std::size_t n);
Graph complete(std::size_t n);
/// Kneser graph K(5,2).
Graph petersen();

/// K_n x K_n (rook's graph), strongly regular (n^2, 2(n-1), n-2, 2).
Graph lattice_square(std::size_t n);
/// Line graph of K_n, strongly regular (n(n-1)/2, 2(n-2), n-2, 4).
Graph triangular(std::size_t n);
/// Paley graph on a prime q = 1 mod 4.
Graph paley(std::size_t q);

/// Random d-regular simple graph from the pairing model. Any loop or
/// repeated pair discards the whole matching and restarts. Above degree 5,
/// where plain restarts almost never succeed, points are paired one at a time
/// with inadmissible pairs redrawn and a restart only at a dead end. Either way
/// GenerationFailure is thrown after 10,000 restarts. For d > (v-1)/2 the
/// complement of a (v-1-d)-regular sample is returned. Deterministic for a
/// given seed.
Graph random_regular(std::size_t v, std::size_t degree, std::uint64_t seed);

/// random_regular retried with derived seeds until the sample is connected
/// (at most 1,000 attempts).
Graph random_connected_regular(std::size_t v, std::size_t degree, std::uint64_t seed);

Graph complement(const Graph& g);

/// Dispatches on spec.family: "cycle" {n}, "complete" {n}, "petersen" {},
/// "multipartite" {alpha, m}, "tight" {v}, "random-regular" {v, d},
/// "lattice" {n}, "triangular" {n}, "paley" {q}.
Graph generate(const FamilySpec& spec);

/// Small deterministic 64-bit generator (splitmix64) so that samples are
/// identical across standard library implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

}  // namespace regconn
