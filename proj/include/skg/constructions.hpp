#pragma once

// Explicit colourings and covers, emitted as checkable certificates.

#include <algorithm>
#include <string>
#include <vector>

#include "skg/families.hpp"
#include "skg/sgcore.hpp"
#include "skg/topo.hpp"

namespace skg {

/// A colouring claimed by a construction, together with the graph it colours.
/// `index[c]` records which coordinate i produced class c.
struct CoverCertificate {
    SignedGraph graph;
    std::vector<SignedSubset> vertices;
    BalancedColouring colouring;
    std::vector<int> index;
};

namespace detail {

inline void colour_by_first_index(const std::vector<SignedSubset>& vertices,
                                  const std::vector<int>& indices, BalancedColouring& out)
{
    out.classes = static_cast<int>(indices.size());
    out.colour.assign(vertices.size(), -1);
    out.witness.assign(vertices.size(), Sign::positive);
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        for (std::size_t c = 0; c < indices.size(); ++c) {
            int s = vertices[v][indices[c] - 1];
            if (s != 0) {
                out.colour[v] = static_cast<int>(c);
                out.witness[v] = s > 0 ? Sign::positive : Sign::negative;
                break;
            }
        }
        if (out.colour[v] < 0)
            throw input_error("vertex " + vertices[v].label() + " meets no index of the cover");
    }
}

inline std::vector<int> checked_indices(int n, std::vector<int> indices)
{
    std::sort(indices.begin(), indices.end());
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] < 1 || indices[j] > n)
            throw input_error("cover index " + std::to_string(indices[j]) + " outside [n]");
        if (j && indices[j] == indices[j - 1])
            throw input_error("cover indices repeat");
    }
    return indices;
}

} // namespace detail

/// Colours each vertex A of the hat Kneser graph by the first i in `indices`
/// (ascending) with A meeting {i, -i}; the witness is the sign of i in A.
inline CoverCertificate cover_B_i(int n, int k, std::vector<int> indices)
{
    if (k < 1 || k > n)
        throw input_error("cover needs 1 <= k <= n");
    if (static_cast<int>(indices.size()) != n - k + 1)
        throw input_error("cover needs exactly n - k + 1 indices");
    indices = detail::checked_indices(n, std::move(indices));
    auto fam = signed_family(SignedFamily::hks, n, k);
    CoverCertificate cert{std::move(fam.graph), std::move(fam.vertices), {}, indices};
    detail::colour_by_first_index(cert.vertices, indices, cert.colouring);
    return cert;
}

/// (n-k)-colouring of the hat Schrijver graph with vertex `a` deleted, using
/// the indices outside the support of `a`.
inline CoverCertificate critical_cover(int n, int k, const SignedSubset& a)
{
    if (k < 1 || k > n)
        throw input_error("cover needs 1 <= k <= n");
    if (a.n() != n || a.k() != k)
        throw input_error("vertex " + a.label() + " is not a signed k-subset of [n]");
    if (!is_alternating(a) || !a.first_nonzero_positive())
        throw input_error("vertex " + a.label() + " is not in the hat Schrijver graph");
    auto fam = signed_family(SignedFamily::hss, n, k);
    int removed = fam.index_of(a);
    std::vector<int> keep;
    std::vector<SignedSubset> kept;
    for (int v = 0; v < fam.graph.order(); ++v)
        if (v != removed) {
            keep.push_back(v);
            kept.push_back(fam.vertices[v]);
        }
    std::vector<int> indices;
    for (int i = 1; i <= n; ++i)
        if (a[i - 1] == 0)
            indices.push_back(i);
    CoverCertificate cert{induced_subgraph(fam.graph, keep), std::move(kept), {}, indices};
    detail::colour_by_first_index(cert.vertices, indices, cert.colouring);
    return cert;
}

enum class PlusTarget { hat_ks, hat_ss, ss };

/// Proper colouring of an unsigned graph claimed by a construction.
struct ProperCertificate {
    Graph graph;
    std::vector<SignedSubset> vertices;
    std::vector<int> colour;
    int classes = 0;
    /// Vertices that lie in none of the classes (the construction is not total).
    std::vector<SignedSubset> uncovered;

    bool total() const noexcept { return uncovered.empty(); }
};

/// Colours the negative subgraph of the target by B_i^+ = {A : i in A},
/// i = 1..count, taking the first class that contains the vertex.
inline ProperCertificate cover_B_i_plus(int n, int k, int count, PlusTarget target)
{
    if (k < 1 || k > n)
        throw input_error("cover needs 1 <= k <= n");
    const int expected = target == PlusTarget::ss ? n - k + 2 : n - k + 1;
    if (count != expected)
        throw input_error("count must be " + std::to_string(expected) + " for this target");
    SignedFamily family = target == PlusTarget::hat_ks   ? SignedFamily::hks
                          : target == PlusTarget::hat_ss ? SignedFamily::hss
                                                         : SignedFamily::ss;
    auto fam = signed_family(family, n, k);
    ProperCertificate cert;
    cert.graph = negative_subgraph(fam.graph);
    cert.vertices = std::move(fam.vertices);
    cert.classes = count;
    cert.colour.assign(cert.vertices.size(), -1);
    for (std::size_t v = 0; v < cert.vertices.size(); ++v) {
        for (int i = 1; i <= std::min(count, n); ++i)
            if (cert.vertices[v][i - 1] > 0) {
                cert.colour[v] = i - 1;
                break;
            }
        if (cert.colour[v] < 0)
            cert.uncovered.push_back(cert.vertices[v]);
    }
    return cert;
}

/// Certificate for a Borsuk discretization.
struct EquatorCertificate {
    BalancedColouring colouring;
    double threshold = 0.0;
};

/// Colours point x by the first coordinate i with |x_i| > tau; witness sign(x_i).
inline EquatorCertificate equator_cover(const BorsukDiscretization& disc, double tau)
{
    if (tau < disc.eps)
        throw input_error("threshold must be at least eps");
    EquatorCertificate cert;
    cert.threshold = tau;
    auto& col = cert.colouring;
    col.classes = disc.d + 1;
    col.colour.assign(disc.points.size(), -1);
    col.witness.assign(disc.points.size(), Sign::positive);
    for (std::size_t x = 0; x < disc.points.size(); ++x) {
        const auto& p = disc.points[x];
        for (int i = 0; i <= disc.d; ++i)
            if (std::abs(p[i]) > tau) {
                col.colour[x] = i;
                col.witness[x] = p[i] > 0 ? Sign::positive : Sign::negative;
                break;
            }
        if (col.colour[x] < 0)
            throw input_error("point " + std::to_string(x) + " " + point_label(p) +
                              " lies within tau of every coordinate hyperplane");
    }
    return cert;
}

} // namespace skg
