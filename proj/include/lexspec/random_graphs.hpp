#pragma once

#include <cstdint>
#include <random>

#include "lexspec/graph.hpp"

namespace lexspec {

/// Seeded generators for randomized verification sweeps. All draws go through
/// raw 64-bit outputs of std::mt19937_64 so sequences are identical across
/// platforms and standard libraries.
class GraphSampler {
public:
    explicit GraphSampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform integer in [lo, hi].
    int uniform(int lo, int hi);
    bool bernoulli(double p = 0.5);

    /// G(n, p) with independent edges.
    Graph erdos_renyi(int n, double p = 0.5);

    /// Random regular graph drawn from circulants, complete graphs and
    /// balanced complete bipartite graphs.
    Graph random_regular(int max_order);

    /// Rejection-samples an Erdos-Renyi graph until its adjacency is singular
    /// (positive nullity).
    Graph random_with_positive_nullity(int min_order, int max_order);

private:
    std::mt19937_64 rng_;
};

} // namespace lexspec
