#pragma once

// Sphere embeddings of +-[n], hemisphere searches and Borsuk discretizations.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skg/families.hpp"
#include "skg/sgcore.hpp"

namespace skg {

using Point = std::vector<double>;

inline double dot(const Point& a, const Point& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline double norm(const Point& a) { return std::sqrt(dot(a, a)); }

inline Point negate(Point a)
{
    for (auto& x : a)
        x = -x;
    return a;
}

inline double distance(const Point& a, const Point& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

/// Antipodally consistent placement of +-[n] on S^d.
struct SphereEmbedding {
    int n = 0;
    int k = 0;
    int d = 0;
    /// Unnormalized integer vectors for i = 1..n (index i-1).
    std::vector<std::vector<std::int64_t>> raw;
    /// Unit vectors for i = 1..n (index i-1).
    std::vector<Point> unit;

    /// Image of i in +-[n]; the image of -i is the exact negation of that of i.
    Point point(int i) const
    {
        if (i == 0 || std::abs(i) > n)
            throw input_error("element outside +-[n]");
        return i > 0 ? unit[i - 1] : negate(unit[-i - 1]);
    }
};

/// Normalized odd moment curve: v_i = (-1)^i (i, i^3, ..., i^(2d+1)), d = n - k.
inline SphereEmbedding moment_embedding(int n, int k)
{
    if (k < 1 || k > n)
        throw input_error("moment embedding needs 1 <= k <= n");
    SphereEmbedding emb;
    emb.n = n;
    emb.k = k;
    emb.d = n - k;
    // Coordinates must stay exact as doubles: n^(2d+1) <= 2^53.
    const long double limit = std::ldexp(1.0L, 53);
    if (std::pow(static_cast<long double>(n), 2 * emb.d + 1) > limit)
        throw input_error("moment curve coordinates exceed exact double range");
    for (int i = 1; i <= n; ++i) {
        std::vector<std::int64_t> v;
        std::int64_t power = i;
        const std::int64_t sign = i % 2 == 0 ? 1 : -1;
        for (int j = 0; j <= emb.d; ++j) {
            v.push_back(sign * power);
            power *= static_cast<std::int64_t>(i) * i;
        }
        long double sq = 0.0L;
        for (auto c : v)
            sq += static_cast<long double>(c) * static_cast<long double>(c);
        const long double len = std::sqrt(sq);
        Point w;
        for (auto c : v)
            w.push_back(static_cast<double>(static_cast<long double>(c) / len));
        emb.raw.push_back(std::move(v));
        emb.unit.push_back(std::move(w));
    }
    return emb;
}

/// Exact rank test: true iff no d+1 of the vectors v_1..v_n lie on a common
/// hyperplane through the origin. Every (d+1)-subset determinant is computed
/// with Bareiss elimination over big integers.
inline bool in_general_position(const SphereEmbedding& emb)
{
    using boost::multiprecision::cpp_int;
    const int m = emb.d + 1;
    if (m > emb.n)
        return true;
    for (const auto& subset : k_subsets(emb.n, m)) {
        std::vector<std::vector<cpp_int>> a(m, std::vector<cpp_int>(m));
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c)
                a[r][c] = emb.raw[subset[r] - 1][c];
        cpp_int prev = 1;
        bool singular = false;
        for (int p = 0; p < m - 1 && !singular; ++p) {
            if (a[p][p] == 0) {
                int swap_row = -1;
                for (int r = p + 1; r < m; ++r)
                    if (a[r][p] != 0) {
                        swap_row = r;
                        break;
                    }
                if (swap_row < 0) {
                    singular = true;
                    break;
                }
                std::swap(a[p], a[swap_row]);
            }
            for (int r = p + 1; r < m; ++r)
                for (int c = p + 1; c < m; ++c)
                    a[r][c] = (a[r][c] * a[p][p] - a[r][p] * a[p][c]) / prev;
            prev = a[p][p];
        }
        if (singular || a[m - 1][m - 1] == 0)
            return false;
    }
    return true;
}

inline constexpr double boundary_tolerance = 1e-9;

struct HemisphereMembers {
    /// For each i in [n] (ascending) whichever of i, -i lies in the open hemisphere.
    std::vector<int> members;
    /// Indices i with |w_i . a| <= tolerance; neither i nor -i is listed as member.
    std::vector<int> ambiguous;
};

inline void check_direction(const SphereEmbedding& emb, const Point& a)
{
    if (static_cast<int>(a.size()) != emb.d + 1)
        throw input_error("direction has the wrong dimension");
    if (std::abs(norm(a) - 1.0) > 1e-6)
        throw input_error("direction must be a unit vector");
}

/// Elements i in +-[n] with w_i . a > 0.
inline HemisphereMembers hemisphere_members(const SphereEmbedding& emb, const Point& a)
{
    check_direction(emb, a);
    HemisphereMembers out;
    for (int i = 1; i <= emb.n; ++i) {
        double t = dot(emb.unit[i - 1], a);
        if (std::abs(t) <= boundary_tolerance)
            out.ambiguous.push_back(i);
        else
            out.members.push_back(t > 0 ? i : -i);
    }
    return out;
}

enum class SearchStatus { found, absent, ambiguous };

struct HemisphereSearch {
    SearchStatus status = SearchStatus::absent;
    SignedSubset set;
};

/// First alternating k-set inside the open hemisphere centred at `a`.
///
/// Candidates are scanned by support in lexicographic order of k-subsets of
/// [n]; each support admits at most one alternating set inside an open
/// hemisphere. Because the scan order ignores signs, the result at -a is the
/// negation of the result at a.
inline HemisphereSearch find_alternating_in_hemisphere(const SphereEmbedding& emb, const Point& a)
{
    auto members = hemisphere_members(emb, a);
    HemisphereSearch out;
    if (!members.ambiguous.empty()) {
        out.status = SearchStatus::ambiguous;
        return out;
    }
    std::vector<int> side(emb.n + 1, 0);
    for (int x : members.members)
        side[std::abs(x)] = x > 0 ? 1 : -1;
    for (const auto& support : k_subsets(emb.n, emb.k)) {
        bool alternating = true;
        for (std::size_t j = 1; j < support.size() && alternating; ++j)
            alternating = side[support[j]] != side[support[j - 1]];
        if (!alternating)
            continue;
        std::vector<int> elements;
        for (int i : support)
            elements.push_back(side[i] * i);
        out.status = SearchStatus::found;
        out.set = SignedSubset::from_elements(emb.n, elements);
        return out;
    }
    return out;
}

/// Hemisphere search with boundary retry. When some w_i lies within tolerance
/// of the boundary, the direction is moved to normalize(a + delta_t s(a) u_t),
/// where s(a) is the sign of the first nonzero coordinate of a. The move is odd
/// in a, so the retried search stays equivariant: the result at -a is the
/// negation of the result at a.
inline HemisphereSearch find_alternating_with_retry(const SphereEmbedding& emb, const Point& a,
                                                    int max_retries = 8, int* retries_used = nullptr)
{
    auto r = find_alternating_in_hemisphere(emb, a);
    int t = 0;
    if (r.status == SearchStatus::ambiguous) {
        double s = 0.0;
        for (double x : a)
            if (x != 0.0) {
                s = x > 0 ? 1.0 : -1.0;
                break;
            }
        std::mt19937_64 rng(0x5eed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        while (r.status == SearchStatus::ambiguous && t < max_retries) {
            ++t;
            const double delta = 1e-6 * t;
            Point b = a;
            for (auto& x : b)
                x += delta * s * gauss(rng);
            const double len = norm(b);
            for (auto& x : b)
                x /= len;
            r = find_alternating_in_hemisphere(emb, b);
        }
    }
    if (retries_used)
        *retries_used = t;
    return r;
}

/// Coefficients (c_1, ..., c_{d+1}) of p(x) = lead * x * prod_j (x^2 - r_j^2),
/// written as p(x) = c_1 x + c_2 x^3 + ... + c_{d+1} x^(2d+1).
inline std::vector<double> odd_polynomial_with_roots(const std::vector<int>& roots, double lead = 1.0)
{
    std::vector<double> c{lead};  // polynomial in y = x^2, times x
    for (int r : roots) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= c[j] * static_cast<double>(r) * r;
        }
        c = std::move(next);
    }
    return c;
}

struct SignPattern {
    /// X = { i in +-[n] : (-1)^i p(i) > 0 }, ordered by |i|.
    std::vector<int> members;
    /// i in [n] with p(i) = 0 (to relative tolerance); neither i nor -i is in X.
    std::vector<int> roots;
    bool alternating = false;

    int size() const noexcept { return static_cast<int>(members.size()); }
};

/// Sign rule for p(x) = c_1 x + c_2 x^3 + ... on the integers of +-[n].
inline SignPattern alternating_sign_pattern(const std::vector<double>& coeffs, int n)
{
    if (coeffs.empty())
        throw input_error("polynomial needs at least one coefficient");
    if (n < 1)
        throw input_error("ground set must be non-empty");
    SignPattern out;
    int last = 0;
    out.alternating = true;
    for (int i = 1; i <= n; ++i) {
        long double x = i, value = 0.0L, scale = 0.0L, power = x;
        for (double c : coeffs) {
            value += static_cast<long double>(c) * power;
            scale += std::abs(static_cast<long double>(c) * power);
            power *= x * x;
        }
        if (std::abs(value) <= 1e-12L * std::max(scale, 1.0L)) {
            out.roots.push_back(i);
            continue;
        }
        // (-1)^i p(i) > 0 selects i; p odd, so otherwise -i is selected.
        const int parity = i % 2 == 0 ? 1 : -1;
        const int side = (parity * value > 0) ? 1 : -1;
        out.members.push_back(side * i);
        if (last == side)
            out.alternating = false;
        last = side;
    }
    return out;
}

// Borsuk discretizations ------------------------------------------------------

/// Finite antipodally closed point set of S^d with the BS(d, eps) edge rule.
struct BorsukDiscretization {
    int d = 0;
    double eps = 0.0;
    std::vector<Point> points;
    std::vector<int> antipode;
    SignedGraph graph;
};

inline std::string point_label(const Point& p)
{
    std::string s = "(";
    char buf[32];
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", p[i]);
        s += (i ? "," : "") + std::string(buf);
    }
    return s + ")";
}

/// Builds the signed graph on an antipodally closed point list:
/// positive iff dist(x, y) <= eps, negative iff dist(x, -y) <= eps.
inline BorsukDiscretization borsuk_from_points(int d, double eps, std::vector<Point> points,
                                               std::vector<int> antipode)
{
    if (!(eps > 0.0 && eps < 2.0))
        throw input_error("eps must lie in (0, 2)");
    const int m = static_cast<int>(points.size());
    std::vector<SignedEdge> edges;
    std::vector<std::string> labels;
    for (int x = 0; x < m; ++x) {
        labels.push_back(point_label(points[x]));
        for (int y = x + 1; y < m; ++y) {
            if (distance(points[x], points[y]) <= eps)
                edges.push_back({x, y, Sign::positive});
            if (distance(points[x], points[antipode[y]]) <= eps)
                edges.push_back({x, y, Sign::negative});
        }
    }
    BorsukDiscretization out;
    out.d = d;
    out.eps = eps;
    out.graph = SignedGraph(m, edges, std::move(labels));
    out.points = std::move(points);
    out.antipode = std::move(antipode);
    return out;
}

/// d = 1: 2*resolution equally spaced circle points. d >= 2: `resolution`
/// seeded Gaussian-normalized points followed by their exact negations.
inline BorsukDiscretization gen_borsuk_disc(int d, double eps, int resolution, std::uint64_t seed)
{
    if (d < 1)
        throw input_error("sphere dimension must be at least 1");
    if (resolution < 2)
        throw input_error("resolution must be at least 2");
    if (!(eps > 0.0 && eps < 2.0))
        throw input_error("eps must lie in (0, 2)");
    std::vector<Point> pts;
    if (d == 1) {
        const double pi = std::acos(-1.0);
        for (int j = 0; j < resolution; ++j) {
            double t = pi * j / resolution;
            pts.push_back({std::cos(t), std::sin(t)});
        }
    } else {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        while (static_cast<int>(pts.size()) < resolution) {
            Point p(d + 1);
            for (auto& x : p)
                x = gauss(rng);
            double len = norm(p);
            if (len < 1e-9)
                continue;
            for (auto& x : p)
                x /= len;
            pts.push_back(std::move(p));
        }
    }
    std::vector<int> antipode(2 * resolution);
    for (int j = 0; j < resolution; ++j) {
        pts.push_back(negate(pts[j]));
        antipode[j] = j + resolution;
        antipode[j + resolution] = j;
    }
    return borsuk_from_points(d, eps, std::move(pts), std::move(antipode));
}

struct HomViolation {
    int x = 0;
    int y = 0;
    Sign sign = Sign::positive;
};

struct HomReport {
    bool ok = true;
    /// Image of each point as a signed subset (empty when the search failed).
    std::vector<SignedSubset> image;
    int positive_checked = 0;
    int negative_checked = 0;
    int unresolved = 0;
    /// Points whose search needed a boundary retry.
    int retried = 0;
    bool equivariant = true;
    std::vector<HomViolation> violations;
};

/// x -> first alternating k-set in the open hemisphere at x (boundary hits are
/// retried); checks that every positive edge maps to a positive edge (or a
/// vertex) and every negative edge to a negative edge of SS(n,k).
inline HomReport borsuk_to_schrijver_hom(const BorsukDiscretization& disc, const SphereEmbedding& emb)
{
    if (disc.d != emb.d)
        throw input_error("discretization dimension must equal n - k");
    HomReport rep;
    for (const auto& p : disc.points) {
        int used = 0;
        auto r = find_alternating_with_retry(emb, p, 8, &used);
        if (used)
            ++rep.retried;
        if (r.status != SearchStatus::found) {
            ++rep.unresolved;
            rep.ok = false;
        }
        rep.image.push_back(r.set);
    }
    const int m = static_cast<int>(disc.points.size());
    for (int x = 0; x < m; ++x)
        if (rep.image[x].n() && rep.image[disc.antipode[x]].n() &&
            rep.image[disc.antipode[x]] != rep.image[x].negated())
            rep.equivariant = false;
    for (const auto& e : disc.graph.edges()) {
        const auto& a = rep.image[e.u];
        const auto& b = rep.image[e.v];
        if (!a.n() || !b.n())
            continue;
        auto adj = adjacency(a, b);
        bool good = e.sign == Sign::positive ? adj.positive : adj.negative;
        (e.sign == Sign::positive ? rep.positive_checked : rep.negative_checked)++;
        if (!good) {
            rep.ok = false;
            rep.violations.push_back({e.u, e.v, e.sign});
        }
    }
    return rep;
}

struct AntipodalWitness {
    int class_index = -1;
    int point = -1;
    /// Positive-edge path inside the class from `point` to its antipode.
    std::vector<int> path;
};

namespace detail {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace detail

/// First class in which some point and its antipode share a component of the
/// positive edges restricted to the class.
inline std::optional<AntipodalWitness>
antipodal_connectivity(const BorsukDiscretization& disc, const std::vector<std::vector<int>>& classes)
{
    const int m = disc.graph.order();
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
        std::vector<char> in(m, 0);
        for (int x : classes[c]) {
            if (x < 0 || x >= m)
                throw input_error("class member out of range");
            in[x] = 1;
        }
        for (int x : classes[c])
            if (!in[disc.antipode[x]])
                throw input_error("class " + std::to_string(c) + " is not antipodally symmetric");

        detail::DisjointSets dsu(m);
        for (const auto& e : disc.graph.edges())
            if (e.sign == Sign::positive && in[e.u] && in[e.v])
                dsu.unite(e.u, e.v);
        for (int x : classes[c]) {
            if (dsu.find(x) != dsu.find(disc.antipode[x]))
                continue;
            // BFS for the path witness.
            std::vector<int> prev(m, -2);
            std::vector<int> queue{x};
            prev[x] = -1;
            for (std::size_t h = 0; h < queue.size(); ++h) {
                int u = queue[h];
                for (auto nb : disc.graph.neighbors(u))
                    if (nb.sign == Sign::positive && in[nb.vertex] && prev[nb.vertex] == -2) {
                        prev[nb.vertex] = u;
                        queue.push_back(nb.vertex);
                    }
            }
            AntipodalWitness w{c, x, {}};
            for (int v = disc.antipode[x]; v != -1; v = prev[v])
                w.path.push_back(v);
            std::reverse(w.path.begin(), w.path.end());
            return w;
        }
    }
    return std::nullopt;
}

/// Symmetric cover of the discretization by `classes` classes, each a union of
/// antipodal cap pairs around random centres; points outside every cap join
/// the class of the nearest centre. Every class is closed under negation.
inline std::vector<std::vector<int>> random_symmetric_cap_cover(const BorsukDiscretization& disc,
                                                                int classes, int caps,
                                                                double cap_cos, std::uint64_t seed)
{
    if (classes < 1 || caps < classes)
        throw input_error("cap cover needs at least one cap per class");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Point> centres;
    for (int j = 0; j < caps; ++j) {
        Point p(disc.d + 1);
        double len = 0.0;
        do {
            for (auto& x : p)
                x = gauss(rng);
            len = norm(p);
        } while (len < 1e-9);
        for (auto& x : p)
            x /= len;
        centres.push_back(std::move(p));
    }
    std::vector<std::vector<int>> out(classes);
    const int m = static_cast<int>(disc.points.size());
    for (int x = 0; x < m; ++x) {
        std::vector<char> member(classes, 0);
        int nearest = 0;
        double best = -1.0;
        for (int j = 0; j < caps; ++j) {
            double t = std::abs(dot(disc.points[x], centres[j]));
            if (t >= cap_cos)
                member[j % classes] = 1;
            if (t > best) {
                best = t;
                nearest = j;
            }
        }
        if (std::find(member.begin(), member.end(), 1) == member.end())
            member[nearest % classes] = 1;
        for (int c = 0; c < classes; ++c)
            if (member[c])
                out[c].push_back(x);
    }
    return out;
}

} // namespace skg
