#pragma once

// Signed graphs: storage, switching, balance, colouring verification.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skg {

/// Raised for malformed arguments and files.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Sign : std::int8_t { negative = -1, positive = +1 };

constexpr Sign operator*(Sign a, Sign b) noexcept
{
    return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
constexpr Sign operator-(Sign a) noexcept { return a * Sign::negative; }
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

struct SignedEdge {
    int u;
    int v;
    Sign sign;

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
    friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

struct Neighbor {
    int vertex;
    Sign sign;
};

/// Plain undirected simple graph.
class Graph {
public:
    Graph() = default;

    explicit Graph(int order, std::span<const std::pair<int, int>> edges = {},
                   std::vector<std::string> labels = {})
        : order_(order), labels_(std::move(labels))
    {
        if (order < 0)
            throw input_error("graph order must be non-negative");
        if (!labels_.empty() && static_cast<int>(labels_.size()) != order)
            throw input_error("label count does not match graph order");
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= order || v >= order)
                throw input_error("edge endpoint out of range");
            if (u == v)
                throw input_error("loops are not allowed in a simple graph");
            edges_.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        adj_.assign(order, {});
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_)
            std::sort(a.begin(), a.end());
    }

    int order() const noexcept { return order_; }
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
    std::span<const int> neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool adjacent(int u, int v) const
    {
        const auto& a = adj_.at(u);
        return std::binary_search(a.begin(), a.end(), v);
    }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

private:
    int order_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

/// Signed multigraph: at most one edge of each sign per vertex pair, no loops.
///
/// Positive loops are implicit on every vertex and never stored; negative loops
/// cannot be represented. A pair carrying both signs is a digon.
class SignedGraph {
public:
    SignedGraph() = default;

    explicit SignedGraph(int order, std::span<const SignedEdge> edges = {},
                         std::vector<std::string> labels = {})
        : order_(order), labels_(std::move(labels))
    {
        if (order < 0)
            throw input_error("graph order must be non-negative");
        if (!labels_.empty() && static_cast<int>(labels_.size()) != order)
            throw input_error("label count does not match graph order");
        edges_.reserve(edges.size());
        for (const auto& e : edges) {
            if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order)
                throw input_error("edge endpoint out of range");
            if (e.u == e.v) {
                if (e.sign == Sign::negative)
                    throw input_error("negative loop at vertex " + std::to_string(e.u));
                continue;
            }
            edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.sign});
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        adj_.assign(order, {});
        for (const auto& e : edges_) {
            adj_[e.u].push_back({e.v, e.sign});
            adj_[e.v].push_back({e.u, e.sign});
        }
        for (auto& a : adj_)
            std::sort(a.begin(), a.end(), [](const Neighbor& x, const Neighbor& y) {
                return x.vertex != y.vertex ? x.vertex < y.vertex : x.sign < y.sign;
            });
    }

    int order() const noexcept { return order_; }
    /// Sorted by (u, v, sign) with u < v.
    const std::vector<SignedEdge>& edges() const noexcept { return edges_; }
    std::span<const Neighbor> neighbors(int v) const { return adj_.at(v); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::string label(int v) const
    {
        return labels_.empty() ? std::to_string(v + 1) : labels_.at(v);
    }

    bool has_edge(int u, int v, Sign s) const
    {
        const auto& a = adj_.at(u);
        auto it = std::lower_bound(a.begin(), a.end(), Neighbor{v, s},
                                   [](const Neighbor& x, const Neighbor& y) {
                                       return x.vertex != y.vertex ? x.vertex < y.vertex
                                                                   : x.sign < y.sign;
                                   });
        return it != a.end() && it->vertex == v && it->sign == s;
    }
    bool is_digon(int u, int v) const
    {
        return has_edge(u, v, Sign::positive) && has_edge(u, v, Sign::negative);
    }

    friend bool operator==(const SignedGraph& a, const SignedGraph& b)
    {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

private:
    int order_ = 0;
    std::vector<SignedEdge> edges_;
    std::vector<std::vector<Neighbor>> adj_;
    std::vector<std::string> labels_;
};

/// One sign per vertex.
using Switching = std::vector<Sign>;

namespace detail {

inline std::vector<char> membership(int order, std::span<const int> subset)
{
    std::vector<char> in(order, 0);
    for (int v : subset) {
        if (v < 0 || v >= order)
            throw input_error("vertex id " + std::to_string(v) + " out of range");
        in[v] = 1;
    }
    return in;
}

} // namespace detail

/// Negates every edge with exactly one end in `subset`.
inline SignedGraph switch_vertices(const SignedGraph& g, std::span<const int> subset)
{
    auto in = detail::membership(g.order(), subset);
    std::vector<SignedEdge> out;
    out.reserve(g.edges().size());
    for (auto e : g.edges()) {
        if (in[e.u] != in[e.v])
            e.sign = -e.sign;
        out.push_back(e);
    }
    return SignedGraph(g.order(), out, g.labels());
}

/// Applies a full switching vector: edge uv gets sign s(u) s(v) sigma(uv).
inline SignedGraph apply_switching(const SignedGraph& g, const Switching& s)
{
    if (static_cast<int>(s.size()) != g.order())
        throw input_error("switching length does not match graph order");
    std::vector<SignedEdge> out;
    out.reserve(g.edges().size());
    for (auto e : g.edges()) {
        e.sign = e.sign * s[e.u] * s[e.v];
        out.push_back(e);
    }
    return SignedGraph(g.order(), out, g.labels());
}

struct BalanceVerdict {
    bool balanced = true;
    /// Valid when balanced: every internal edge satisfies s(u) s(v) sigma = +1.
    /// Vertices outside the tested set carry +1.
    Switching witness;
    /// Valid when unbalanced: closed walk v0 v1 ... v_{m-1} (v_{m-1} adjacent to v0)
    /// whose sign product is -1. A digon yields a 2-vertex cycle.
    std::vector<int> cycle;
    /// Signs of the cycle edges (v_i, v_{i+1 mod m}).
    std::vector<Sign> cycle_signs;
};

namespace detail {

/// Potential assignment over a BFS forest of the vertices with in[v] set.
inline BalanceVerdict balance_on(const SignedGraph& g, const std::vector<char>& in)
{
    const int n = g.order();
    BalanceVerdict out;
    out.witness.assign(n, Sign::positive);
    std::vector<int> parent(n, -1), depth(n, -1);
    std::vector<Sign> parent_sign(n, Sign::positive);
    std::queue<int> q;

    for (int root = 0; root < n; ++root) {
        if (!in[root] || depth[root] >= 0)
            continue;
        depth[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto nb : g.neighbors(u)) {
                int v = nb.vertex;
                if (!in[v])
                    continue;
                if (depth[v] < 0) {
                    depth[v] = depth[u] + 1;
                    parent[v] = u;
                    parent_sign[v] = nb.sign;
                    out.witness[v] = out.witness[u] * nb.sign;
                    q.push(v);
                    continue;
                }
                if (out.witness[u] * out.witness[v] * nb.sign == Sign::positive)
                    continue;
                // Fundamental cycle of the failing edge u-v.
                std::vector<int> left{u}, right{v};
                std::vector<Sign> lsig, rsig;
                int a = u, b = v;
                while (depth[a] > depth[b]) {
                    lsig.push_back(parent_sign[a]);
                    a = parent[a];
                    left.push_back(a);
                }
                while (depth[b] > depth[a]) {
                    rsig.push_back(parent_sign[b]);
                    b = parent[b];
                    right.push_back(b);
                }
                while (a != b) {
                    lsig.push_back(parent_sign[a]);
                    a = parent[a];
                    left.push_back(a);
                    rsig.push_back(parent_sign[b]);
                    b = parent[b];
                    right.push_back(b);
                }
                // left: u .. lca, right: v .. lca. Cycle: lca .. u, v .. (before lca).
                out.balanced = false;
                out.witness.clear();
                std::reverse(left.begin(), left.end());
                std::reverse(lsig.begin(), lsig.end());
                out.cycle = left;
                out.cycle_signs = lsig;
                out.cycle_signs.push_back(nb.sign);
                for (std::size_t i = 0; i + 1 < right.size(); ++i) {
                    out.cycle.push_back(right[i]);
                    out.cycle_signs.push_back(rsig[i]);
                }
                return out;
            }
        }
    }
    return out;
}

} // namespace detail

/// Harary's criterion via spanning-forest potentials.
inline BalanceVerdict is_balanced(const SignedGraph& g)
{
    return detail::balance_on(g, std::vector<char>(g.order(), 1));
}

/// Balance of the induced subgraph g[subset]; vertex ids are those of g.
inline BalanceVerdict is_balanced_set(const SignedGraph& g, std::span<const int> subset)
{
    return detail::balance_on(g, detail::membership(g.order(), subset));
}

/// Induced subgraph on `keep` (renumbered in ascending order of original id).
inline SignedGraph induced_subgraph(const SignedGraph& g, std::span<const int> keep)
{
    auto in = detail::membership(g.order(), keep);
    std::vector<int> index(g.order(), -1);
    std::vector<std::string> labels;
    int next = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (!in[v])
            continue;
        index[v] = next++;
        if (!g.labels().empty())
            labels.push_back(g.labels()[v]);
    }
    std::vector<SignedEdge> edges;
    for (const auto& e : g.edges())
        if (in[e.u] && in[e.v])
            edges.push_back({index[e.u], index[e.v], e.sign});
    return SignedGraph(next, edges, std::move(labels));
}

inline SignedGraph delete_vertex(const SignedGraph& g, int v)
{
    if (v < 0 || v >= g.order())
        throw input_error("vertex id out of range");
    std::vector<int> keep;
    for (int u = 0; u < g.order(); ++u)
        if (u != v)
            keep.push_back(u);
    return induced_subgraph(g, keep);
}

/// Unsigned graph of the negative edges. With `keep_isolated` false, only the
/// vertices touched by a negative edge remain (renumbered in ascending order).
inline Graph negative_subgraph(const SignedGraph& g, bool keep_isolated = true)
{
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges())
        if (e.sign == Sign::negative)
            edges.emplace_back(e.u, e.v);
    if (keep_isolated)
        return Graph(g.order(), edges, g.labels());

    std::vector<int> index(g.order(), -1);
    for (auto [u, v] : edges)
        index[u] = index[v] = 0;
    int next = 0;
    std::vector<std::string> labels;
    for (int v = 0; v < g.order(); ++v) {
        if (index[v] < 0)
            continue;
        index[v] = next++;
        if (!g.labels().empty())
            labels.push_back(g.labels()[v]);
    }
    for (auto& [u, v] : edges) {
        u = index[u];
        v = index[v];
    }
    return Graph(next, edges, std::move(labels));
}

struct EquivalenceVerdict {
    bool equivalent = false;
    /// Side of the cut when equivalent: switching these vertices of g1 yields g2.
    std::vector<int> cut_side;
};

/// True iff the sign-disagreement edges form an edge cut.
inline EquivalenceVerdict switching_equivalent(const SignedGraph& g1, const SignedGraph& g2)
{
    if (g1.order() != g2.order())
        throw input_error("switching equivalence needs graphs of equal order");
    auto underlying = [](const SignedGraph& g) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& e : g.edges())
            pairs.emplace_back(e.u, e.v);
        return pairs;
    };
    if (underlying(g1) != underlying(g2))
        throw input_error("switching equivalence needs a common underlying graph");

    // Both graphs list pairs identically, so signs compare per edge position.
    // A digon looks the same on either side of any cut and constrains nothing.
    std::vector<SignedEdge> diff;
    const auto& e1 = g1.edges();
    const auto& e2 = g2.edges();
    for (std::size_t i = 0; i < e1.size(); ++i) {
        if (g1.is_digon(e1[i].u, e1[i].v))
            continue;
        Sign s = e1[i].sign * e2[i].sign;
        diff.push_back({e1[i].u, e1[i].v, s});
    }
    // The disagreement set is a cut iff the graph with those edges negative is balanced.
    auto verdict = is_balanced(SignedGraph(g1.order(), diff));
    EquivalenceVerdict out;
    out.equivalent = verdict.balanced;
    if (out.equivalent)
        for (int v = 0; v < g1.order(); ++v)
            if (verdict.witness[v] == Sign::negative)
                out.cut_side.push_back(v);
    return out;
}

/// A balanced colouring with per-vertex switching witnesses.
///
/// `witness[v]` is the sign of v in the switching of its own colour class
/// under which every edge inside that class is positive.
struct BalancedColouring {
    int classes = 0;
    std::vector<int> colour;
    Switching witness;
};

struct ColouringVerdict {
    bool accepted = false;
    BalancedColouring colouring;
    int offending_class = -1;
    std::vector<int> cycle;
};

/// Accepts iff every colour class induces a balanced subgraph.
/// Colours are 0-based; the class count is one more than the largest colour.
inline ColouringVerdict verify_balanced_colouring(const SignedGraph& g,
                                                  std::span<const int> colour)
{
    if (static_cast<int>(colour.size()) != g.order())
        throw input_error("colouring must assign a colour to every vertex");
    int classes = 0;
    for (int c : colour) {
        if (c < 0)
            throw input_error("colouring leaves a vertex uncoloured");
        classes = std::max(classes, c + 1);
    }
    std::vector<std::vector<int>> members(classes);
    for (int v = 0; v < g.order(); ++v)
        members[colour[v]].push_back(v);

    ColouringVerdict out;
    out.colouring.classes = classes;
    out.colouring.colour.assign(colour.begin(), colour.end());
    out.colouring.witness.assign(g.order(), Sign::positive);
    for (int c = 0; c < classes; ++c) {
        auto verdict = is_balanced_set(g, members[c]);
        if (!verdict.balanced) {
            out.offending_class = c;
            out.cycle = std::move(verdict.cycle);
            return out;
        }
        for (int v : members[c])
            out.colouring.witness[v] = verdict.witness[v];
    }
    out.accepted = true;
    return out;
}

/// Direct recheck of claimed witnesses: every intra-class edge must satisfy
/// witness(u) witness(v) sign = +1.
inline bool check_witnesses(const SignedGraph& g, const BalancedColouring& c)
{
    if (static_cast<int>(c.colour.size()) != g.order() ||
        static_cast<int>(c.witness.size()) != g.order())
        return false;
    for (int col : c.colour)
        if (col < 0 || col >= c.classes)
            return false;
    for (const auto& e : g.edges())
        if (c.colour[e.u] == c.colour[e.v] &&
            c.witness[e.u] * c.witness[e.v] * e.sign != Sign::positive)
            return false;
    return true;
}

/// Proper colouring check for unsigned graphs.
inline bool is_proper_colouring(const Graph& g, std::span<const int> colour)
{
    if (static_cast<int>(colour.size()) != g.order())
        return false;
    for (int c : colour)
        if (c < 0)
            return false;
    for (auto [u, v] : g.edges())
        if (colour[u] == colour[v])
            return false;
    return true;
}

/// Every edge negative.
inline SignedGraph all_negative(const Graph& g)
{
    std::vector<SignedEdge> edges;
    for (auto [u, v] : g.edges())
        edges.push_back({u, v, Sign::negative});
    return SignedGraph(g.order(), edges, g.labels());
}

/// Every edge replaced by a digon.
inline SignedGraph plus_minus(const Graph& g)
{
    std::vector<SignedEdge> edges;
    for (auto [u, v] : g.edges()) {
        edges.push_back({u, v, Sign::positive});
        edges.push_back({u, v, Sign::negative});
    }
    return SignedGraph(g.order(), edges, g.labels());
}

/// Underlying simple graph (digons collapse to one edge).
inline Graph underlying_graph(const SignedGraph& g)
{
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges())
        edges.emplace_back(e.u, e.v);
    return Graph(g.order(), edges, g.labels());
}

} // namespace skg
