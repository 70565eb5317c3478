#pragma once

#include <initializer_list>
#include <random>
#include <tuple>
#include <vector>

#include "skg/sgcore.hpp"

namespace skg::test {

/// Signed graph from (u, v, +1|-1) triples.
inline SignedGraph signed_graph(int order, std::initializer_list<std::tuple<int, int, int>> edges)
{
    std::vector<SignedEdge> es;
    for (auto [u, v, s] : edges)
        es.push_back({u, v, s > 0 ? Sign::positive : Sign::negative});
    return SignedGraph(order, es);
}

inline Graph graph(int order, std::initializer_list<std::pair<int, int>> edges)
{
    std::vector<std::pair<int, int>> es(edges);
    return Graph(order, es);
}

inline Graph complete_graph(int order)
{
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            es.emplace_back(u, v);
    return Graph(order, es);
}

inline Graph cycle_graph(int order)
{
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < order; ++u)
        es.emplace_back(u, (u + 1) % order);
    return Graph(order, es);
}

inline Switching switching_from_mask(int order, std::uint64_t mask)
{
    Switching s(order, Sign::positive);
    for (int v = 0; v < order; ++v)
        if (mask >> v & 1)
            s[v] = Sign::negative;
    return s;
}

} // namespace skg::test
