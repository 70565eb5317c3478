#pragma once

// Signed-DIMACS reader and writer.
//
//   c <text>                  comment
//   p sgraph <order> <edges>  header, exactly once, before any e/l line
//   e <u> <v> <+|->           1-indexed, u != v
//   l <u> <text>              optional vertex label

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "skg/sgcore.hpp"

namespace skg::dimacs {

inline void write(std::ostream& os, const SignedGraph& g,
                  const std::vector<std::string>& comments = {})
{
    for (const auto& c : comments)
        os << "c " << c << '\n';
    os << "p sgraph " << g.order() << ' ' << g.edges().size() << '\n';
    for (const auto& e : g.edges())
        os << "e " << e.u + 1 << ' ' << e.v + 1 << ' '
           << (e.sign == Sign::positive ? '+' : '-') << '\n';
    for (int v = 0; v < static_cast<int>(g.labels().size()); ++v)
        os << "l " << v + 1 << ' ' << g.labels()[v] << '\n';
}

inline std::string to_string(const SignedGraph& g, const std::vector<std::string>& comments = {})
{
    std::ostringstream os;
    write(os, g, comments);
    return os.str();
}

inline SignedGraph read(std::istream& is)
{
    bool have_header = false;
    long long order = 0, declared = 0;
    std::vector<SignedEdge> edges;
    std::vector<std::string> labels;
    bool any_label = false;
    std::string line;
    int ln = 0;
    auto fail = [&](const std::string& what) {
        throw input_error("line " + std::to_string(ln) + ": " + what);
    };

    while (std::getline(is, line)) {
        ++ln;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "p") {
            if (have_header)
                fail("duplicate header");
            std::string kind;
            if (!(ss >> kind >> order >> declared) || kind != "sgraph")
                fail("malformed header, expected 'p sgraph <order> <edge-count>'");
            if (order < 0 || declared < 0 || order > (1 << 24))
                fail("header values out of range");
            have_header = true;
            labels.assign(static_cast<std::size_t>(order), std::string{});
        } else if (tag == "e") {
            if (!have_header)
                fail("edge before header");
            long long u = 0, v = 0;
            std::string sign;
            if (!(ss >> u >> v >> sign) || (sign != "+" && sign != "-"))
                fail("malformed edge, expected 'e <u> <v> <+|->'");
            if (u < 1 || v < 1 || u > order || v > order)
                fail("vertex id out of range");
            Sign s = sign == "+" ? Sign::positive : Sign::negative;
            if (u == v && s == Sign::negative)
                fail("negative loop");
            edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), s});
        } else if (tag == "l") {
            if (!have_header)
                fail("label before header");
            long long u = 0;
            if (!(ss >> u) || u < 1 || u > order)
                fail("malformed or out-of-range label line");
            std::string text;
            std::getline(ss >> std::ws, text);
            labels[static_cast<std::size_t>(u - 1)] = text;
            any_label = true;
        } else {
            fail("unknown line type '" + tag + "'");
        }
    }
    if (!have_header)
        throw input_error("missing 'p sgraph' header");
    if (static_cast<long long>(edges.size()) != declared)
        throw input_error("header declares " + std::to_string(declared) + " edges, found " +
                          std::to_string(edges.size()));
    if (!any_label)
        labels.clear();
    return SignedGraph(static_cast<int>(order), edges, std::move(labels));
}

inline SignedGraph read_string(const std::string& text)
{
    std::istringstream is(text);
    return read(is);
}

inline SignedGraph read_file(const std::string& path)
{
    std::ifstream ifs(path);
    if (!ifs)
        throw std::runtime_error("cannot open '" + path + "' for reading");
    return read(ifs);
}

inline void write_file(const std::string& path, const SignedGraph& g,
                       const std::vector<std::string>& comments = {})
{
    std::ofstream ofs(path);
    if (!ofs)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    write(ofs, g, comments);
    if (!ofs)
        throw std::runtime_error("write to '" + path + "' failed");
}

} // namespace skg::dimacs
