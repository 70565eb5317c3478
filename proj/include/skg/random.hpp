#pragma once

// Seed derivation and random instance generators.

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "skg/sgcore.hpp"

namespace skg {

/// Per-task seed derivation (splitmix64 over the base seed and task ids).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0)
{
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(base) ^ a) ^ b);
}

/// Each pair independently: absent, positive, negative or a digon.
inline SignedGraph random_signed_graph(int order, std::mt19937_64& rng, double p_edge = 0.5,
                                       double p_digon = 0.1)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<SignedEdge> edges;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v) {
            double r = unit(rng);
            if (r < p_digon) {
                edges.push_back({u, v, Sign::positive});
                edges.push_back({u, v, Sign::negative});
            } else if (r < p_digon + p_edge) {
                edges.push_back({u, v, (rng() & 1) ? Sign::positive : Sign::negative});
            }
        }
    return SignedGraph(order, edges);
}

/// G(order, p).
inline Graph random_graph(int order, double p, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (unit(rng) < p)
                edges.emplace_back(u, v);
    return Graph(order, edges);
}

inline bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        return true;
    std::vector<char> seen(g.order(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == g.order();
}

/// Gaussian-normalized uniform point of S^(dim-1).
inline std::vector<double> random_unit_vector(int dim, std::mt19937_64& rng)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> p(dim);
    double len = 0.0;
    do {
        len = 0.0;
        for (auto& x : p) {
            x = gauss(rng);
            len += x * x;
        }
        len = std::sqrt(len);
    } while (len < 1e-9);
    for (auto& x : p)
        x /= len;
    return p;
}

} // namespace skg
