#pragma once

#include <graphring/graph.hpp>

#include <cstddef>
#include <random>
#include <vector>

namespace graphring {

/// Erdős–Rényi G(n, p) sample.
template <typename Rng>
auto random_graph(std::size_t n, double p, Rng & rng) -> Graph
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return make_graph(n, edges);
}

/// n uniform in [n_min, n_max], edge density uniform in [0.2, 0.8].
template <typename Rng>
auto random_graph_between(std::size_t n_min, std::size_t n_max, Rng & rng) -> Graph
{
    std::uniform_int_distribution<std::size_t> size(n_min, n_max);
    std::uniform_real_distribution<double> density(0.2, 0.8);
    auto n = size(rng);
    return random_graph(n, density(rng), rng);
}

} // namespace graphring
