#pragma once

// One entry point for every graph family, driven by a descriptor.

#include <cstdint>
#include <optional>
#include <string>

#include "skg/families.hpp"
#include "skg/sgcore.hpp"
#include "skg/topo.hpp"

namespace skg {

enum class Family { ks, hks, ss, hss, kneser, schrijver, all_negative, plus_minus, borsuk_disc };

struct FamilyDescriptor {
    Family family = Family::ks;
    int n = 0;
    int k = 0;
    // borsuk_disc
    int d = 1;
    double eps = 0.05;
    int resolution = 2;
    std::uint64_t seed = 0;
    // all_negative / plus_minus
    std::optional<Graph> base;
};

inline Family parse_family(const std::string& name)
{
    if (name == "ks") return Family::ks;
    if (name == "hks") return Family::hks;
    if (name == "ss") return Family::ss;
    if (name == "hss") return Family::hss;
    if (name == "kneser") return Family::kneser;
    if (name == "schrijver") return Family::schrijver;
    if (name == "all_negative" || name == "all-negative") return Family::all_negative;
    if (name == "plus_minus" || name == "plus-minus") return Family::plus_minus;
    if (name == "borsuk" || name == "borsuk_disc") return Family::borsuk_disc;
    throw input_error("unknown family '" + name + "'");
}

inline std::string family_name(Family f)
{
    switch (f) {
    case Family::ks: return "ks";
    case Family::hks: return "hks";
    case Family::ss: return "ss";
    case Family::hss: return "hss";
    case Family::kneser: return "kneser";
    case Family::schrijver: return "schrijver";
    case Family::all_negative: return "all_negative";
    case Family::plus_minus: return "plus_minus";
    case Family::borsuk_disc: return "borsuk";
    }
    return "?";
}

/// Labelled signed graph for the descriptor. Classical Kneser and Schrijver
/// graphs come out all-negative.
inline SignedGraph gen_family(const FamilyDescriptor& desc)
{
    auto need_nk = [&] {
        if (desc.k < 1 || desc.k > desc.n)
            throw input_error("family parameters need 1 <= k <= n");
    };
    switch (desc.family) {
    case Family::ks: need_nk(); return signed_family(SignedFamily::ks, desc.n, desc.k).graph;
    case Family::hks: need_nk(); return signed_family(SignedFamily::hks, desc.n, desc.k).graph;
    case Family::ss: need_nk(); return signed_family(SignedFamily::ss, desc.n, desc.k).graph;
    case Family::hss: need_nk(); return signed_family(SignedFamily::hss, desc.n, desc.k).graph;
    case Family::kneser: need_nk(); return all_negative(kneser_graph(desc.n, desc.k));
    case Family::schrijver: need_nk(); return all_negative(schrijver_graph(desc.n, desc.k));
    case Family::all_negative:
        if (!desc.base)
            throw input_error("all_negative needs a base graph");
        return all_negative(*desc.base);
    case Family::plus_minus:
        if (!desc.base)
            throw input_error("plus_minus needs a base graph");
        return plus_minus(*desc.base);
    case Family::borsuk_disc:
        return gen_borsuk_disc(desc.d, desc.eps, desc.resolution, desc.seed).graph;
    }
    throw input_error("unknown family");
}

} // namespace skg
