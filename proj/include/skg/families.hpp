#pragma once

// Signed k-subsets and the Kneser/Schrijver families built on them.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "skg/sgcore.hpp"

namespace skg {

/// A signed k-subset of [n] as a {-1, 0, +1} vector. Entry i-1 holds the sign
/// of element i (0 when neither i nor -i is present).
class SignedSubset {
public:
    SignedSubset() = default;
    explicit SignedSubset(std::vector<std::int8_t> entries) : entries_(std::move(entries))
    {
        for (auto e : entries_)
            if (e < -1 || e > 1)
                throw input_error("signed subset entries must be -1, 0 or +1");
    }

    /// From signed elements of +-[n], e.g. {1, -3}.
    static SignedSubset from_elements(int n, const std::vector<int>& elements)
    {
        std::vector<std::int8_t> e(n, 0);
        for (int x : elements) {
            int i = std::abs(x);
            if (i < 1 || i > n)
                throw input_error("element " + std::to_string(x) + " outside +-[n]");
            if (e[i - 1] != 0)
                throw input_error("signed subset repeats index " + std::to_string(i));
            e[i - 1] = x > 0 ? 1 : -1;
        }
        return SignedSubset(std::move(e));
    }

    /// Parses "{1,-3}" (spaces allowed).
    static SignedSubset parse(int n, const std::string& text)
    {
        std::string body;
        for (char c : text)
            if (c != '{' && c != '}' && c != ' ')
                body += c;
        std::vector<int> elements;
        std::size_t pos = 0;
        while (pos < body.size()) {
            auto comma = body.find(',', pos);
            auto token = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
            try {
                std::size_t used = 0;
                elements.push_back(std::stoi(token, &used));
                if (used != token.size())
                    throw input_error("bad token");
            } catch (const std::exception&) {
                throw input_error("cannot parse signed subset '" + text + "'");
            }
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
        return from_elements(n, elements);
    }

    int n() const noexcept { return static_cast<int>(entries_.size()); }
    int k() const noexcept
    {
        return static_cast<int>(std::count_if(entries_.begin(), entries_.end(),
                                              [](auto e) { return e != 0; }));
    }
    int operator[](int index) const { return entries_.at(index); }
    const std::vector<std::int8_t>& entries() const noexcept { return entries_; }

    /// Signed elements in increasing order of absolute value.
    std::vector<int> elements() const
    {
        std::vector<int> out;
        for (int i = 0; i < n(); ++i)
            if (entries_[i] != 0)
                out.push_back(entries_[i] * (i + 1));
        return out;
    }

    SignedSubset negated() const
    {
        auto e = entries_;
        for (auto& x : e)
            x = static_cast<std::int8_t>(-x);
        return SignedSubset(std::move(e));
    }

    bool first_nonzero_positive() const
    {
        for (auto e : entries_)
            if (e != 0)
                return e > 0;
        return false;
    }

    std::string label() const
    {
        std::string s = "{";
        bool first = true;
        for (int x : elements()) {
            if (!first)
                s += ',';
            s += std::to_string(x);
            first = false;
        }
        return s + "}";
    }

    friend bool operator==(const SignedSubset&, const SignedSubset&) = default;
    /// Lexicographic on the vector with -1 < 0 < +1.
    friend auto operator<=>(const SignedSubset&, const SignedSubset&) = default;

private:
    std::vector<std::int8_t> entries_;
};

/// All 2^k C(n,k) signed k-subsets of [n] in lexicographic vector order.
inline std::vector<SignedSubset> gen_signed_subsets(int n, int k)
{
    if (k < 1 || k > n)
        throw input_error("signed subsets need 1 <= k <= n");
    std::vector<SignedSubset> out;
    std::vector<std::int8_t> cur(n, 0);
    auto rec = [&](auto& self, int pos, int remaining) -> void {
        if (pos == n) {
            if (remaining == 0)
                out.emplace_back(cur);
            return;
        }
        int free_slots = n - pos;
        for (std::int8_t v : {std::int8_t{-1}, std::int8_t{0}, std::int8_t{1}}) {
            if (v != 0 && remaining == 0)
                continue;
            if (v == 0 && remaining >= free_slots)
                continue;
            cur[pos] = v;
            self(self, pos + 1, remaining - (v != 0));
        }
        cur[pos] = 0;
    };
    rec(rec, 0, k);
    return out;
}

struct Adjacency {
    bool positive = false;
    bool negative = false;

    bool digon() const noexcept { return positive && negative; }
};

/// Positive iff the coordinatewise product is everywhere >= 0 (A and -B
/// disjoint); negative iff everywhere <= 0 (A and B disjoint).
inline Adjacency adjacency(const SignedSubset& a, const SignedSubset& b)
{
    if (a.n() != b.n())
        throw input_error("adjacency needs subsets of the same ground set");
    Adjacency adj{true, true};
    for (int i = 0; i < a.n(); ++i) {
        int p = a[i] * b[i];
        if (p < 0)
            adj.positive = false;
        else if (p > 0)
            adj.negative = false;
    }
    return adj;
}

/// Nonzero entries alternate in sign by increasing index.
inline bool is_alternating(const SignedSubset& a)
{
    int last = 0;
    for (int i = 0; i < a.n(); ++i) {
        if (a[i] == 0)
            continue;
        if (last != 0 && a[i] == last)
            return false;
        last = a[i];
    }
    return true;
}

enum class SignedFamily { ks, hks, ss, hss };

/// A signed family together with the subsets behind its vertex ids.
struct SubsetGraph {
    SignedGraph graph;
    std::vector<SignedSubset> vertices;

    /// Vertex id of `a`, or -1. Vertices are sorted, so this is a binary search.
    int index_of(const SignedSubset& a) const
    {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), a);
        return it != vertices.end() && *it == a ? static_cast<int>(it - vertices.begin()) : -1;
    }
};

inline std::vector<SignedSubset> family_vertices(SignedFamily family, int n, int k)
{
    auto all = gen_signed_subsets(n, k);
    bool hat = family == SignedFamily::hks || family == SignedFamily::hss;
    bool alternating = family == SignedFamily::ss || family == SignedFamily::hss;
    std::vector<SignedSubset> out;
    for (auto& a : all) {
        if (hat && !a.first_nonzero_positive())
            continue;
        if (alternating && !is_alternating(a))
            continue;
        out.push_back(std::move(a));
    }
    return out;
}

/// Signed graph on arbitrary signed subsets with the Kneser adjacency rule.
inline SubsetGraph subset_graph(std::vector<SignedSubset> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    std::vector<SignedEdge> edges;
    std::vector<std::string> labels;
    const int m = static_cast<int>(vertices.size());
    for (int a = 0; a < m; ++a) {
        labels.push_back(vertices[a].label());
        for (int b = a + 1; b < m; ++b) {
            auto adj = adjacency(vertices[a], vertices[b]);
            if (adj.positive)
                edges.push_back({a, b, Sign::positive});
            if (adj.negative)
                edges.push_back({a, b, Sign::negative});
        }
    }
    return {SignedGraph(m, edges, std::move(labels)), std::move(vertices)};
}

/// KS(n,k), its hat restriction, SS(n,k) and its hat restriction.
inline SubsetGraph signed_family(SignedFamily family, int n, int k)
{
    return subset_graph(family_vertices(family, n, k));
}

// Classical families --------------------------------------------------------

/// k-subsets of [m] (1-based elements) in lexicographic order.
inline std::vector<std::vector<int>> k_subsets(int m, int k)
{
    if (k < 1 || k > m)
        throw input_error("k-subsets need 1 <= k <= m");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i)
        cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == m - k + i + 1)
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

/// No two cyclically consecutive elements of [m] (m and 1 are consecutive).
inline bool is_stable(const std::vector<int>& s, int m)
{
    std::vector<char> in(m + 2, 0);
    for (int x : s) {
        if (x < 1 || x > m || in[x])
            return false;
        in[x] = 1;
    }
    for (int i = 1; i < m; ++i)
        if (in[i] && in[i + 1])
            return false;
    return !(m > 1 && in[m] && in[1]);
}

inline std::string set_label(const std::vector<int>& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

inline bool disjoint(const std::vector<int>& a, const std::vector<int>& b)
{
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) != b.end())
            return false;
    return true;
}

inline Graph disjointness_graph(const std::vector<std::vector<int>>& sets)
{
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    const int m = static_cast<int>(sets.size());
    for (int a = 0; a < m; ++a) {
        labels.push_back(set_label(sets[a]));
        for (int b = a + 1; b < m; ++b)
            if (disjoint(sets[a], sets[b]))
                edges.emplace_back(a, b);
    }
    return Graph(m, edges, std::move(labels));
}

/// Kneser graph K(m,k).
inline Graph kneser_graph(int m, int k) { return disjointness_graph(k_subsets(m, k)); }

inline std::vector<std::vector<int>> stable_subsets(int m, int k)
{
    std::vector<std::vector<int>> out;
    for (auto& s : k_subsets(m, k))
        if (is_stable(s, m))
            out.push_back(std::move(s));
    return out;
}

/// Schrijver graph S(m,k): K(m,k) induced on cyclically stable subsets.
inline Graph schrijver_graph(int m, int k) { return disjointness_graph(stable_subsets(m, k)); }

// Embedding S(2n,k) into KS(n,k) ---------------------------------------------

/// Reads [2n] in the cyclic order (1,-1,2,-2,...,n,-n): position 2i-1 is i,
/// position 2i is -i.
inline SignedSubset stable_to_signed(const std::vector<int>& positions, int n)
{
    if (!is_stable(positions, 2 * n))
        throw input_error("subset " + set_label(positions) + " is not stable in [" +
                          std::to_string(2 * n) + "]");
    std::vector<int> elements;
    for (int p : positions)
        elements.push_back(p % 2 == 1 ? (p + 1) / 2 : -(p / 2));
    return SignedSubset::from_elements(n, elements);
}

struct EmbeddingReport {
    bool ok = true;
    int vertices = 0;
    int edges_checked = 0;
    /// Schrijver vertex id -> KS(n,k) vertex id.
    std::vector<int> mapping;
    std::string violation;
};

/// Maps S(2n,k) into KS(n,k) and checks injectivity and that every edge
/// lands on a negative edge.
inline EmbeddingReport embed_schrijver_negative(int n, int k)
{
    if (k < 1 || k > n)
        throw input_error("embedding needs 1 <= k <= n");
    auto stable = stable_subsets(2 * n, k);
    auto host = signed_family(SignedFamily::ks, n, k);
    EmbeddingReport rep;
    rep.vertices = static_cast<int>(stable.size());
    std::vector<SignedSubset> image;
    std::vector<char> used(host.graph.order(), 0);
    for (const auto& s : stable) {
        auto a = stable_to_signed(s, n);
        int id = host.index_of(a);
        if (id < 0 || used[id]) {
            rep.ok = false;
            rep.violation = "vertex " + set_label(s) + (id < 0 ? " has no image" : " collides");
            return rep;
        }
        used[id] = 1;
        rep.mapping.push_back(id);
        image.push_back(std::move(a));
    }
    for (std::size_t x = 0; x < stable.size(); ++x)
        for (std::size_t y = x + 1; y < stable.size(); ++y) {
            if (!disjoint(stable[x], stable[y]))
                continue;
            ++rep.edges_checked;
            if (!host.graph.has_edge(rep.mapping[x], rep.mapping[y], Sign::negative) ||
                !adjacency(image[x], image[y]).negative) {
                rep.ok = false;
                rep.violation = "edge " + set_label(stable[x]) + "~" + set_label(stable[y]) +
                                " is not negative in KS";
                return rep;
            }
        }
    return rep;
}

/// Closed-form vertex counts.
inline long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

inline long long family_count(SignedFamily family, int n, int k)
{
    switch (family) {
    case SignedFamily::ks: return (1LL << k) * binomial(n, k);
    case SignedFamily::hks: return (1LL << (k - 1)) * binomial(n, k);
    case SignedFamily::ss: return 2 * binomial(n, k);
    case SignedFamily::hss: return binomial(n, k);
    }
    return 0;
}

} // namespace skg
