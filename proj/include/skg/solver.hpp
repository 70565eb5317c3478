#pragma once

// Exact balanced chromatic number and classical chromatic number.
//
// Both searches are DSATUR-style backtracking over labels. For chi a label is
// a colour; for chi_b it is a (colour, sign) pair and an edge (u, v, s) whose
// ends share a colour must satisfy sign(u) sign(v) s = +1. This is the
// zero-free colouring of (G, -sigma) with colour pairs {+c, -c} merged.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "skg/sgcore.hpp"

namespace skg {

enum class SolveStatus { exact, timeout };

struct ChiResult {
    SolveStatus status = SolveStatus::exact;
    /// Equals `upper` when exact.
    int value = 0;
    int lower = 0;
    int upper = 0;
    /// Best colouring found (uses `upper` colours), 0-based.
    std::vector<int> colouring;
    /// chi_b only: per-vertex switching witness of the colouring.
    Switching witness;
    std::string lower_bound_reason;
    long long nodes = 0;
    double seconds = 0.0;

    bool exact() const noexcept { return status == SolveStatus::exact; }
};

struct Budget {
    double seconds = 60.0;
};

namespace detail {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    bool expired = false;

    explicit Deadline(Budget b)
        : end(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                 std::chrono::duration<double>(b.seconds)))
    {
    }
    bool check()
    {
        if (!expired && Clock::now() >= end)
            expired = true;
        return expired;
    }
};

struct Arc {
    int to;
    // Label offset forbidden at `to` relative to the colour base, given the
    // sign slot of the coloured endpoint (index 0 for +, 1 for -).
    std::int8_t forbid[2];
};

/// Labelled colouring search over `lpc` labels per colour.
class LabelSearch {
public:
    LabelSearch(int n, std::vector<std::vector<Arc>> arcs, int lpc)
        : n_(n), lpc_(lpc), arcs_(std::move(arcs))
    {
        degree_.resize(n_);
        for (int v = 0; v < n_; ++v)
            degree_[v] = static_cast<int>(arcs_[v].size());
    }

    /// Greedy DSATUR: always succeeds, returns labels.
    std::vector<int> greedy()
    {
        int max_degree = 0;
        for (int d : degree_)
            max_degree = std::max(max_degree, d);
        reset(max_degree + 1);
        for (int step = 0; step < n_; ++step) {
            int v = select();
            int chosen = -1;
            for (int l = 0; l < opened_ * lpc_; ++l)
                if (cnt_[idx(v, l)] == 0) {
                    chosen = l;
                    break;
                }
            if (chosen < 0)
                chosen = opened_ * lpc_;
            assign(v, chosen);
        }
        return label_;
    }

    /// Labels using at most p colours, nullopt if none exist; throws on timeout
    /// via the `timed_out` flag.
    std::optional<std::vector<int>> solve(int p, Deadline& deadline, long long& nodes)
    {
        reset(p);
        deadline_ = &deadline;
        nodes_ = &nodes;
        timed_out_ = false;
        if (n_ == 0)
            return std::vector<int>{};
        if (dfs(0))
            return label_;
        return std::nullopt;
    }

    bool timed_out() const noexcept { return timed_out_; }

private:
    int idx(int v, int l) const { return v * stride_ + l; }

    void reset(int p)
    {
        p_ = p;
        stride_ = (p + 1) * lpc_;
        cnt_.assign(static_cast<std::size_t>(n_) * stride_, 0);
        sat_.assign(n_, 0);
        label_.assign(n_, -1);
        live_degree_ = degree_;
        opened_ = 0;
    }

    int domain(int v) const
    {
        return opened_ * lpc_ - sat_[v] + (opened_ < p_ ? 1 : 0);
    }

    int select() const
    {
        int best = -1;
        for (int v = 0; v < n_; ++v) {
            if (label_[v] >= 0)
                continue;
            if (best < 0 || sat_[v] > sat_[best] ||
                (sat_[v] == sat_[best] && live_degree_[v] > live_degree_[best]))
                best = v;
        }
        return best;
    }

    // Returns false if some uncoloured neighbour loses its last label.
    bool assign(int v, int l)
    {
        label_[v] = l;
        int colour = l / lpc_;
        int slot = l % lpc_;
        if (colour == opened_)
            ++opened_;
        bool ok = true;
        for (const auto& a : arcs_[v]) {
            int u = a.to;
            if (label_[u] >= 0)
                continue;
            int f = colour * lpc_ + a.forbid[slot];
            if (cnt_[idx(u, f)]++ == 0)
                ++sat_[u];
        }
        for (const auto& a : arcs_[v])
            if (label_[a.to] < 0)
                --live_degree_[a.to];
        for (const auto& a : arcs_[v])
            if (label_[a.to] < 0 && domain(a.to) <= 0)
                ok = false;
        return ok;
    }

    void unassign(int v, bool opened_here)
    {
        int l = label_[v];
        int colour = l / lpc_;
        int slot = l % lpc_;
        label_[v] = -1;
        for (const auto& a : arcs_[v]) {
            int u = a.to;
            if (label_[u] >= 0)
                continue;
            int f = colour * lpc_ + a.forbid[slot];
            if (--cnt_[idx(u, f)] == 0)
                --sat_[u];
            ++live_degree_[u];
        }
        if (opened_here)
            --opened_;
    }

    bool dfs(int depth)
    {
        if (depth == n_)
            return true;
        if ((++*nodes_ & 1023) == 0 && deadline_->check()) {
            timed_out_ = true;
            return false;
        }
        int v = select();
        const int limit = opened_ * lpc_;
        for (int l = 0; l <= limit; ++l) {
            if (l == limit) {
                // New colour: its sign slot is a symmetry, fix it to +.
                if (opened_ >= p_)
                    break;
            } else if (cnt_[idx(v, l)] != 0) {
                continue;
            }
            bool opened_here = l == limit;
            bool ok = assign(v, l);
            if (ok && dfs(depth + 1))
                return true;
            unassign(v, opened_here);
            if (timed_out_)
                return false;
        }
        return false;
    }

    int n_;
    int lpc_;
    std::vector<std::vector<Arc>> arcs_;
    std::vector<int> degree_;

    int p_ = 0;
    int stride_ = 0;
    int opened_ = 0;
    std::vector<std::uint16_t> cnt_;
    std::vector<int> sat_;
    std::vector<int> label_;
    std::vector<int> live_degree_;
    Deadline* deadline_ = nullptr;
    long long* nodes_ = nullptr;
    bool timed_out_ = false;
};

inline std::vector<std::vector<Arc>> plain_arcs(const Graph& g)
{
    std::vector<std::vector<Arc>> arcs(g.order());
    for (auto [u, v] : g.edges()) {
        arcs[u].push_back({v, {0, 0}});
        arcs[v].push_back({u, {0, 0}});
    }
    return arcs;
}

// Slot 0 is sign +, slot 1 is sign -. A neighbour across an edge of sign s of a
// vertex with sign t must not take sign -(t s) in the same colour.
inline std::vector<std::vector<Arc>> signed_arcs(const SignedGraph& g)
{
    std::vector<std::vector<Arc>> arcs(g.order());
    for (const auto& e : g.edges()) {
        std::int8_t f[2];
        f[0] = e.sign == Sign::positive ? 1 : 0;  // t=+: forbid -s
        f[1] = e.sign == Sign::positive ? 0 : 1;  // t=-: forbid s
        arcs[e.u].push_back({e.v, {f[0], f[1]}});
        arcs[e.v].push_back({e.u, {f[0], f[1]}});
    }
    return arcs;
}

/// Maximum clique on an adjacency predicate: exact for up to 64 vertices,
/// greedy otherwise.
template <class Adjacent>
std::vector<int> max_clique(const std::vector<int>& candidates, Adjacent adjacent)
{
    const int m = static_cast<int>(candidates.size());
    if (m == 0)
        return {};
    if (m > 64) {
        std::vector<int> best;
        for (int start = 0; start < m; ++start) {
            std::vector<int> clique{candidates[start]};
            for (int j = 0; j < m; ++j) {
                if (j == start)
                    continue;
                bool all = true;
                for (int c : clique)
                    if (!adjacent(c, candidates[j])) {
                        all = false;
                        break;
                    }
                if (all)
                    clique.push_back(candidates[j]);
            }
            if (clique.size() > best.size())
                best = std::move(clique);
        }
        return best;
    }
    std::vector<std::uint64_t> nb(m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && adjacent(candidates[a], candidates[b]))
                nb[a] |= std::uint64_t{1} << b;
    std::uint64_t best_set = 0;
    int best_size = 0;
    auto rec = [&](auto& self, std::uint64_t current, int size, std::uint64_t cand) -> void {
        if (cand == 0) {
            if (size > best_size) {
                best_size = size;
                best_set = current;
            }
            return;
        }
        // Greedy colouring bound on the candidates.
        int colours = 0;
        for (std::uint64_t rest = cand; rest;) {
            std::uint64_t cls = rest;
            std::uint64_t taken = 0;
            while (cls) {
                int v = std::countr_zero(cls);
                taken |= std::uint64_t{1} << v;
                cls &= ~nb[v] & ~(std::uint64_t{1} << v);
            }
            rest &= ~taken;
            ++colours;
        }
        if (size + colours <= best_size)
            return;
        while (cand) {
            if (size + std::popcount(cand) <= best_size)
                return;
            int v = std::countr_zero(cand);
            self(self, current | (std::uint64_t{1} << v), size + 1, cand & nb[v]);
            cand &= ~(std::uint64_t{1} << v);
        }
    };
    rec(rec, 0, 0, m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1));
    std::vector<int> out;
    for (int i = 0; i < m; ++i)
        if (best_set >> i & 1)
            out.push_back(candidates[i]);
    return out;
}


struct Outcome {
    std::vector<int> labels;
    int upper = 0;
    int lower = 0;
    bool exact = true;
    long long nodes = 0;
    double seconds = 0.0;
};

inline Outcome search_minimum(LabelSearch& search, int lpc, int lower,
                              std::optional<int> upper_hint, Budget budget)
{
    auto start = Clock::now();
    Deadline deadline(budget);
    Outcome out;
    out.lower = lower;
    auto colours = [&](const std::vector<int>& lab) {
        int used = 0;
        for (int l : lab)
            used = std::max(used, l / lpc + 1);
        return used;
    };
    out.labels = search.greedy();
    out.upper = colours(out.labels);

    auto attempt = [&](int p) -> std::optional<bool> {
        auto found = search.solve(p, deadline, out.nodes);
        if (search.timed_out())
            return std::nullopt;
        if (found) {
            out.labels = *found;
            out.upper = colours(out.labels);
            return true;
        }
        return false;
    };

    if (upper_hint && *upper_hint < out.upper && *upper_hint >= out.lower) {
        auto r = attempt(*upper_hint);
        if (!r)
            out.exact = false;
        else if (!*r)
            out.lower = std::max(out.lower, *upper_hint + 1);
    }
    while (out.exact && out.upper > out.lower) {
        auto r = attempt(out.upper - 1);
        if (!r) {
            out.exact = false;
            break;
        }
        if (!*r)
            out.lower = out.upper;
    }
    out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
}

} // namespace detail

/// Exact chromatic number by DSATUR branch and bound with a clique lower bound.
inline ChiResult chi_exact(const Graph& h, Budget budget = {},
                           std::optional<int> upper_hint = std::nullopt)
{
    std::vector<int> all(h.order());
    for (int v = 0; v < h.order(); ++v)
        all[v] = v;
    auto clique = detail::max_clique(all, [&](int a, int b) { return h.adjacent(a, b); });
    int lower = h.order() == 0 ? 0 : std::max<int>(1, static_cast<int>(clique.size()));

    detail::LabelSearch search(h.order(), detail::plain_arcs(h), 1);
    auto out = detail::search_minimum(search, 1, lower, upper_hint, budget);

    ChiResult res;
    res.status = out.exact ? SolveStatus::exact : SolveStatus::timeout;
    res.lower = out.exact ? out.upper : out.lower;
    res.upper = out.upper;
    res.value = out.exact ? out.upper : 0;
    res.colouring = out.labels;
    res.lower_bound_reason = "clique of size " + std::to_string(clique.size());
    res.nodes = out.nodes;
    res.seconds = out.seconds;
    return res;
}

/// Exact balanced chromatic number with a verifying certificate.
///
/// The lower bound seed is a maximum clique of the digon graph (digon ends
/// need distinct colours), raised to 2 when the graph is unbalanced.
inline ChiResult chi_b_exact(const SignedGraph& g, Budget budget = {},
                             std::optional<int> upper_hint = std::nullopt)
{
    std::vector<int> digon_vertices;
    for (int v = 0; v < g.order(); ++v) {
        auto nb = g.neighbors(v);
        for (std::size_t i = 0; i + 1 < nb.size(); ++i)
            if (nb[i].vertex == nb[i + 1].vertex) {
                digon_vertices.push_back(v);
                break;
            }
    }
    auto clique =
        detail::max_clique(digon_vertices, [&](int a, int b) { return g.is_digon(a, b); });
    int lower = g.order() == 0 ? 0 : 1;
    std::string reason = "non-empty graph";
    if (clique.size() >= 2) {
        lower = static_cast<int>(clique.size());
        reason = "digon clique of size " + std::to_string(clique.size());
    } else if (g.order() > 0 && !is_balanced(g).balanced) {
        lower = 2;
        reason = "graph is unbalanced";
    }

    detail::LabelSearch search(g.order(), detail::signed_arcs(g), 2);
    auto out = detail::search_minimum(search, 2, lower, upper_hint, budget);

    ChiResult res;
    res.status = out.exact ? SolveStatus::exact : SolveStatus::timeout;
    res.lower = out.exact ? out.upper : out.lower;
    res.upper = out.upper;
    res.value = out.exact ? out.upper : 0;
    res.colouring.resize(g.order());
    res.witness.resize(g.order());
    for (int v = 0; v < g.order(); ++v) {
        res.colouring[v] = out.labels[v] / 2;
        res.witness[v] = out.labels[v] % 2 == 0 ? Sign::positive : Sign::negative;
    }
    res.lower_bound_reason = reason;
    res.nodes = out.nodes;
    res.seconds = out.seconds;
    return res;
}

/// Independent oracle: minimum number of balanced blocks over all set
/// partitions (restricted-growth strings).
inline int chi_b_bruteforce(const SignedGraph& g)
{
    const int n = g.order();
    if (n > 12)
        throw input_error("brute-force oracle is limited to 12 vertices");
    if (n == 0)
        return 0;
    std::vector<int> block(n, 0);
    int best = n;
    auto rec = [&](auto& self, int v, int used) -> void {
        if (used >= best)
            return;
        if (v == n) {
            std::vector<std::vector<int>> members(used);
            for (int u = 0; u < n; ++u)
                members[block[u]].push_back(u);
            for (const auto& m : members)
                if (!is_balanced_set(g, m).balanced)
                    return;
            best = used;
            return;
        }
        for (int b = 0; b <= used && b < best; ++b) {
            block[v] = b;
            self(self, v + 1, std::max(used, b + 1));
        }
    };
    rec(rec, 0, 0);
    return best;
}

/// min over all switchings of chi(negative subgraph).
inline int chi_b_via_switchings(const SignedGraph& g, Budget budget = {})
{
    const int n = g.order();
    if (n > 16)
        throw input_error("switching enumeration is limited to 16 vertices");
    if (n == 0)
        return 0;
    int best = std::numeric_limits<int>::max();
    const std::uint32_t total = std::uint32_t{1} << (n - 1);
    for (std::uint32_t mask = 0; mask < total && best > 1; ++mask) {
        Switching s(n, Sign::positive);
        for (int v = 0; v < n - 1; ++v)
            if (mask >> v & 1)
                s[v] = Sign::negative;
        auto r = chi_exact(negative_subgraph(apply_switching(g, s)), budget, best - 1);
        if (!r.exact())
            throw std::runtime_error("chi_exact timed out inside switching enumeration");
        best = std::min(best, r.value);
    }
    return best;
}

struct CriticalityVerdict {
    bool critical = false;
    bool timed_out = false;
    int chi = 0;
    /// chi_b(g - v) for every v (0 where a deletion timed out).
    std::vector<int> deletion_values;
};

/// Vertex-critical iff every single deletion lowers chi_b to target - 1.
inline CriticalityVerdict is_vertex_critical(const SignedGraph& g, int target, Budget budget = {})
{
    CriticalityVerdict out;
    auto whole = chi_b_exact(g, budget);
    if (!whole.exact()) {
        out.timed_out = true;
        return out;
    }
    out.chi = whole.value;
    if (whole.value != target)
        throw input_error("chi_b is " + std::to_string(whole.value) + ", not the target " +
                          std::to_string(target));
    out.critical = true;
    for (int v = 0; v < g.order(); ++v) {
        auto r = chi_b_exact(delete_vertex(g, v), budget, target - 1);
        if (!r.exact()) {
            out.timed_out = true;
            out.critical = false;
            out.deletion_values.push_back(0);
            continue;
        }
        out.deletion_values.push_back(r.value);
        if (r.value != target - 1)
            out.critical = false;
    }
    return out;
}

} // namespace skg
