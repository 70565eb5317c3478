#pragma once

// Bipartite matchings for the k = 2 Schrijver structure theorem, plus a
// subgraph-isomorphism search for small cases of the general conjecture.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "skg/families.hpp"
#include "skg/random.hpp"
#include "skg/sgcore.hpp"
#include "skg/solver.hpp"

namespace skg {

/// Bipartite graph with 0-based left and right vertex ids.
class BipartiteGraph {
public:
    BipartiteGraph(int left, int right, std::vector<std::pair<int, int>> edges)
        : left_(left), right_(right), edges_(std::move(edges)), adj_(left)
    {
        for (auto [l, r] : edges_) {
            if (l < 0 || l >= left_ || r < 0 || r >= right_)
                throw input_error("bipartite edge endpoint out of range");
            adj_[l].push_back(r);
        }
        for (auto& a : adj_) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
        edges_.clear();
        for (int l = 0; l < left_; ++l)
            for (int r : adj_[l])
                edges_.emplace_back(l, r);
    }

    int left() const noexcept { return left_; }
    int right() const noexcept { return right_; }
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
    const std::vector<int>& neighbors(int l) const { return adj_.at(l); }
    bool has_edge(int l, int r) const
    {
        const auto& a = adj_.at(l);
        return std::binary_search(a.begin(), a.end(), r);
    }
    int left_degree(int l) const { return static_cast<int>(adj_.at(l).size()); }
    int right_degree(int r) const
    {
        int d = 0;
        for (const auto& a : adj_)
            d += std::binary_search(a.begin(), a.end(), r);
        return d;
    }

private:
    int left_;
    int right_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// B on parts [n] and -[n] with {i, -j} an edge iff i < j. Left id i-1 is i,
/// right id j-1 is -j.
inline BipartiteGraph gen_B(int n)
{
    if (n < 2)
        throw input_error("B needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            edges.emplace_back(i - 1, j - 1);
    return BipartiteGraph(n, n, std::move(edges));
}

/// A set of edges {i, -j} (i < j) of B to be replaced by {j, -i}.
struct FlipInstance {
    int n = 0;
    std::vector<std::pair<int, int>> flipped;
};

inline BipartiteGraph flip_edges(const FlipInstance& inst)
{
    auto base = gen_B(inst.n);
    std::vector<std::vector<char>> flip(inst.n + 1, std::vector<char>(inst.n + 1, 0));
    for (auto [i, j] : inst.flipped) {
        if (i < 1 || j > inst.n || i >= j)
            throw input_error("flipped pair must satisfy 1 <= i < j <= n");
        flip[i][j] = 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [l, r] : base.edges()) {
        int i = l + 1, j = r + 1;
        if (flip[i][j])
            edges.emplace_back(j - 1, i - 1);
        else
            edges.emplace_back(l, r);
    }
    return BipartiteGraph(inst.n, inst.n, std::move(edges));
}

struct Matching {
    int size = 0;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> mate_left;
    std::vector<int> mate_right;
};

/// Hopcroft-Karp maximum matching.
inline Matching max_matching(const BipartiteGraph& g)
{
    const int nl = g.left(), nr = g.right();
    const int inf = std::numeric_limits<int>::max();
    Matching m;
    m.mate_left.assign(nl, -1);
    m.mate_right.assign(nr, -1);
    std::vector<int> dist(nl);

    auto bfs = [&] {
        std::queue<int> q;
        bool reachable_free = false;
        for (int l = 0; l < nl; ++l) {
            dist[l] = m.mate_left[l] < 0 ? 0 : inf;
            if (dist[l] == 0)
                q.push(l);
        }
        while (!q.empty()) {
            int l = q.front();
            q.pop();
            for (int r : g.neighbors(l)) {
                int next = m.mate_right[r];
                if (next < 0)
                    reachable_free = true;
                else if (dist[next] == inf) {
                    dist[next] = dist[l] + 1;
                    q.push(next);
                }
            }
        }
        return reachable_free;
    };
    auto dfs = [&](auto& self, int l) -> bool {
        for (int r : g.neighbors(l)) {
            int next = m.mate_right[r];
            if (next < 0 || (dist[next] == dist[l] + 1 && self(self, next))) {
                m.mate_left[l] = r;
                m.mate_right[r] = l;
                return true;
            }
        }
        dist[l] = inf;
        return false;
    };
    while (bfs())
        for (int l = 0; l < nl; ++l)
            if (m.mate_left[l] < 0 && dfs(dfs, l))
                ++m.size;
    for (int l = 0; l < nl; ++l)
        if (m.mate_left[l] >= 0)
            m.pairs.emplace_back(l, m.mate_left[l]);
    return m;
}

struct VertexCover {
    int size = 0;
    std::vector<int> left;
    std::vector<int> right;
};

/// Koenig cover from the alternating-reachability cut of a maximum matching:
/// (left not reached) + (right reached) from the free left vertices.
inline VertexCover min_vertex_cover(const BipartiteGraph& g)
{
    auto m = max_matching(g);
    std::vector<char> seen_left(g.left(), 0), seen_right(g.right(), 0);
    std::queue<int> q;
    for (int l = 0; l < g.left(); ++l)
        if (m.mate_left[l] < 0) {
            seen_left[l] = 1;
            q.push(l);
        }
    while (!q.empty()) {
        int l = q.front();
        q.pop();
        for (int r : g.neighbors(l)) {
            if (seen_right[r] || m.mate_left[l] == r)
                continue;
            seen_right[r] = 1;
            int next = m.mate_right[r];
            if (next >= 0 && !seen_left[next]) {
                seen_left[next] = 1;
                q.push(next);
            }
        }
    }
    VertexCover c;
    for (int l = 0; l < g.left(); ++l)
        if (!seen_left[l])
            c.left.push_back(l);
    for (int r = 0; r < g.right(); ++r)
        if (seen_right[r])
            c.right.push_back(r);
    c.size = static_cast<int>(c.left.size() + c.right.size());
    return c;
}

inline bool is_matching(const BipartiteGraph& g, const std::vector<std::pair<int, int>>& pairs)
{
    std::vector<char> ul(g.left(), 0), ur(g.right(), 0);
    for (auto [l, r] : pairs) {
        if (l < 0 || l >= g.left() || r < 0 || r >= g.right() || !g.has_edge(l, r))
            return false;
        if (ul[l]++ || ur[r]++)
            return false;
    }
    return true;
}

inline bool is_vertex_cover(const BipartiteGraph& g, const VertexCover& c)
{
    std::vector<char> in_l(g.left(), 0), in_r(g.right(), 0);
    for (int l : c.left)
        in_l.at(l) = 1;
    for (int r : c.right)
        in_r.at(r) = 1;
    for (auto [l, r] : g.edges())
        if (!in_l[l] && !in_r[r])
            return false;
    return true;
}

enum class CampaignMode { exhaustive, random };

struct K2Report {
    int n = 0;
    long long instances = 0;
    /// Instances whose maximum matching is smaller than n - 1.
    long long failures = 0;
    /// Instances with a matching larger than n - 1 (a perfect matching).
    long long oversize = 0;
    long long cross_check_failures = 0;
    /// Flip sets (as pair lists) of the first few failing instances.
    std::vector<std::vector<std::pair<int, int>>> counterexamples;

    bool ok() const noexcept { return failures == 0 && cross_check_failures == 0; }
};

/// For every (or sampled) flip set, the flipped B must have a matching of size
/// at least n - 1, and the matched pairs must be pairwise negative in the
/// identically switched hat Schrijver graph SS^(n,2).
inline K2Report verify_k2_matchings(int n, CampaignMode mode, long long samples = 0,
                              std::uint64_t seed = 0)
{
    if (n < 2)
        throw input_error("k = 2 check needs n >= 2");
    const auto base = gen_B(n);
    const int edge_count = static_cast<int>(base.edges().size());
    if (mode == CampaignMode::exhaustive && edge_count > 20)
        throw input_error("exhaustive mode needs C(n,2) <= 20");

    auto host = signed_family(SignedFamily::hss, n, 2);
    std::vector<std::vector<int>> vertex_of(n + 1, std::vector<int>(n + 1, -1));
    for (auto [l, r] : base.edges()) {
        int i = l + 1, j = r + 1;
        vertex_of[i][j] = host.index_of(SignedSubset::from_elements(n, {i, -j}));
    }

    K2Report rep;
    rep.n = n;
    const long long total = mode == CampaignMode::exhaustive ? (1LL << edge_count) : samples;
    std::vector<char> flipped(edge_count);
    for (long long t = 0; t < total; ++t) {
        if (mode == CampaignMode::exhaustive) {
            for (int e = 0; e < edge_count; ++e)
                flipped[e] = static_cast<char>((t >> e) & 1);
        } else {
            std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(n),
                                            static_cast<std::uint64_t>(t)));
            for (int e = 0; e < edge_count; ++e)
                flipped[e] = static_cast<char>(rng() & 1);
        }
        FlipInstance inst{n, {}};
        Switching sw(host.graph.order(), Sign::positive);
        for (int e = 0; e < edge_count; ++e)
            if (flipped[e]) {
                auto [l, r] = base.edges()[e];
                inst.flipped.emplace_back(l + 1, r + 1);
                sw[vertex_of[l + 1][r + 1]] = Sign::negative;
            }
        auto bprime = flip_edges(inst);
        auto m = max_matching(bprime);
        ++rep.instances;
        bool bad = m.size < n - 1;
        if (m.size > n - 1)
            ++rep.oversize;

        // Translate matched edges of B' back to vertices of the hat graph.
        std::vector<int> clique;
        for (auto [l, r] : m.pairs) {
            int a = l + 1, b = r + 1;
            clique.push_back(a < b ? vertex_of[a][b] : vertex_of[b][a]);
        }
        bool cross_ok = true;
        for (std::size_t x = 0; x < clique.size() && cross_ok; ++x)
            for (std::size_t y = x + 1; y < clique.size() && cross_ok; ++y) {
                int u = clique[x], v = clique[y];
                // Negative after switching: some edge with sign -(s_u s_v).
                cross_ok = host.graph.has_edge(u, v, -(sw[u] * sw[v]));
            }
        if (!cross_ok)
            ++rep.cross_check_failures;
        if (bad)
            ++rep.failures;
        if ((bad || !cross_ok) && rep.counterexamples.size() < 5)
            rep.counterexamples.push_back(inst.flipped);
    }
    return rep;
}

// Subgraph isomorphism -------------------------------------------------------

enum class EmbedStatus { found, not_found, timeout };

struct SubgraphMatch {
    EmbedStatus status = EmbedStatus::not_found;
    /// pattern vertex -> host vertex
    std::vector<int> mapping;
};

/// Injective map of `pattern` into `host` preserving edges (not necessarily
/// induced). Backtracking with degree pruning; both graphs up to 64 vertices.
inline SubgraphMatch find_subgraph(const Graph& pattern, const Graph& host, Budget budget = {})
{
    const int np = pattern.order(), nh = host.order();
    if (np > 64 || nh > 64)
        throw input_error("subgraph search is limited to 64 vertices");
    SubgraphMatch out;
    if (np > nh)
        return out;
    std::vector<std::uint64_t> hadj(nh, 0);
    for (auto [u, v] : host.edges()) {
        hadj[u] |= std::uint64_t{1} << v;
        hadj[v] |= std::uint64_t{1} << u;
    }
    // Order: highest degree first, then most connections to already ordered.
    std::vector<int> order;
    std::vector<char> placed(np, 0);
    for (int step = 0; step < np; ++step) {
        int best = -1, best_links = -1;
        for (int v = 0; v < np; ++v) {
            if (placed[v])
                continue;
            int links = 0;
            for (int u : pattern.neighbors(v))
                links += placed[u];
            if (links > best_links ||
                (links == best_links && pattern.degree(v) > pattern.degree(best))) {
                best = v;
                best_links = links;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    std::vector<int> map(np, -1);
    std::uint64_t used = 0;
    detail::Deadline deadline(budget);
    long long nodes = 0;
    bool timed_out = false;
    auto rec = [&](auto& self, int depth) -> bool {
        if (depth == np)
            return true;
        if ((++nodes & 1023) == 0 && deadline.check()) {
            timed_out = true;
            return false;
        }
        int p = order[depth];
        std::uint64_t cand = nh == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nh) - 1;
        cand &= ~used;
        for (int q : pattern.neighbors(p))
            if (map[q] >= 0)
                cand &= hadj[map[q]];
        while (cand) {
            int h = std::countr_zero(cand);
            cand &= cand - 1;
            if (std::popcount(hadj[h]) < pattern.degree(p))
                continue;
            map[p] = h;
            used |= std::uint64_t{1} << h;
            if (self(self, depth + 1))
                return true;
            used &= ~(std::uint64_t{1} << h);
            map[p] = -1;
            if (timed_out)
                return false;
        }
        return false;
    };
    if (rec(rec, 0)) {
        out.status = EmbedStatus::found;
        out.mapping = map;
    } else if (timed_out) {
        out.status = EmbedStatus::timeout;
    }
    return out;
}

struct ConjectureReport {
    int n = 0;
    int k = 0;
    int target_vertices = 0;
    int host_vertices = 0;
    long long switchings = 0;
    long long found = 0;
    long long not_found = 0;
    long long timeouts = 0;
    /// Switched vertex sets (bit v = vertex v switched) without the target.
    std::vector<std::uint64_t> misses;
};

/// The Schrijver graph the structure conjecture predicts inside every
/// switching of SS^(n,k): S(n-1, k/2) for even k, S(n, (k+1)/2) for odd k.
inline Graph conjecture_target(int n, int k)
{
    return k % 2 == 0 ? schrijver_graph(n - 1, k / 2) : schrijver_graph(n, (k + 1) / 2);
}

/// Searches every (or sampled) switching of SS^(n,k) for the target inside the
/// negative subgraph. Misses are observations, not errors.
inline ConjectureReport check_conjecture_small(int n, int k, CampaignMode mode, long long samples,
                                               std::uint64_t seed, Budget per_instance = {5.0})
{
    if (k < 1 || k > n)
        throw input_error("conjecture check needs 1 <= k <= n");
    if (k % 2 == 0 && n - 1 < k / 2)
        throw input_error("target Schrijver graph is undefined for these parameters");
    auto target = conjecture_target(n, k);
    auto host = signed_family(SignedFamily::hss, n, k);
    const int nh = host.graph.order();
    if (target.order() > 15)
        throw input_error("target Schrijver graph exceeds 15 vertices");
    if (nh > 40)
        throw input_error("host graph exceeds 40 vertices");
    if (mode == CampaignMode::exhaustive && nh - 1 > 20)
        throw input_error("exhaustive mode needs at most 2^20 switchings");

    ConjectureReport rep;
    rep.n = n;
    rep.k = k;
    rep.target_vertices = target.order();
    rep.host_vertices = nh;
    // Switching X and its complement give the same signature: fix the last vertex.
    const long long total =
        mode == CampaignMode::exhaustive ? (nh == 0 ? 1 : (1LL << (nh - 1))) : samples;
    for (long long t = 0; t < total; ++t) {
        std::uint64_t mask = 0;
        if (mode == CampaignMode::exhaustive) {
            mask = static_cast<std::uint64_t>(t);
        } else {
            std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(n * 64 + k),
                                            static_cast<std::uint64_t>(t)));
            mask = rng() & ((nh >= 64 ? ~0ULL : (1ULL << nh) - 1) >> 1);
        }
        Switching sw(nh, Sign::positive);
        for (int v = 0; v < nh; ++v)
            if (mask >> v & 1)
                sw[v] = Sign::negative;
        auto neg = negative_subgraph(apply_switching(host.graph, sw));
        auto r = find_subgraph(target, neg, per_instance);
        ++rep.switchings;
        if (r.status == EmbedStatus::found)
            ++rep.found;
        else if (r.status == EmbedStatus::timeout)
            ++rep.timeouts;
        else {
            ++rep.not_found;
            if (rep.misses.size() < 16)
                rep.misses.push_back(mask);
        }
    }
    return rep;
}

} // namespace skg
