#include "lexspec/random_graphs.hpp"

#include "lexspec/spectrum.hpp"

namespace lexspec {

int GraphSampler::uniform(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(rng_() % span);
}

bool GraphSampler::bernoulli(double p) {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p;
}

Graph GraphSampler::erdos_renyi(int n, double p) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (bernoulli(p)) g.add_edge(i, j);
    return g;
}

Graph GraphSampler::random_regular(int max_order) {
    switch (uniform(0, 2)) {
    case 0: { // complete
        return generate(GraphFamily::Complete, {uniform(2, std::max(2, max_order))});
    }
    case 1: { // balanced complete bipartite
        const int m = uniform(1, std::max(1, max_order / 2));
        return generate(GraphFamily::CompleteBipartite, {m, m});
    }
    default: { // circulant with a random nonempty connection set
        const int n = uniform(3, std::max(3, max_order));
        Graph g(n, "circulant");
        bool any = false;
        for (int d = 1; d <= n / 2; ++d) {
            if (bernoulli(0.5)) {
                any = true;
                for (int i = 0; i < n; ++i) g.add_edge(i, (i + d) % n);
            }
        }
        if (!any)
            for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
        return g;
    }
    }
}

Graph GraphSampler::random_with_positive_nullity(int min_order, int max_order) {
    while (true) {
        Graph g = erdos_renyi(uniform(min_order, max_order));
        if (nullity(g).eta > 0) return g;
    }
}

} // namespace lexspec
