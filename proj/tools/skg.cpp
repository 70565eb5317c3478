// skg: generate signed Kneser-type graphs, compute balanced chromatic numbers,
// emit construction certificates and run verification campaigns.
//
// Exit codes: 0 ok, 1 assertion failure, 2 usage error, 3 I/O error,
// 4 timeout (bounds reported).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skg/skg.hpp"

namespace {

enum Exit { ok = 0, assertion = 1, usage = 2, io = 3, timed_out = 4 };

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out)
        throw io_error("write to '" + path + "' failed");
}

skg::SignedGraph load(const std::string& path)
{
    try {
        return skg::dimacs::read_file(path);
    } catch (const std::exception& e) {
        throw io_error(path + ": " + e.what());
    }
}

std::string vertex_name(const skg::SignedGraph& g, int v)
{
    return g.label(v).empty() ? std::to_string(v + 1) : g.label(v);
}

skg::ojson balanced_certificate(const skg::SignedGraph& g, const skg::BalancedColouring& c)
{
    skg::ojson vs = skg::ojson::array();
    for (int v = 0; v < g.order(); ++v)
        vs.push_back({{"vertex", v + 1},
                      {"label", vertex_name(g, v)},
                      {"colour", c.colour[v]},
                      {"witness", c.witness[v] == skg::Sign::positive ? "+" : "-"}});
    return vs;
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size())
            throw skg::input_error("bad integer list '" + text + "'");
        out.push_back(x);
    }
    return out;
}

// gen -----------------------------------------------------------------------

struct GenArgs {
    std::string family;
    int n = 0, k = 0, d = 1, res = 2;
    double eps = 0.05;
    std::uint64_t seed = 0;
    std::string base;
    std::string out;
};

int cmd_gen(const GenArgs& a)
{
    skg::FamilyDescriptor desc;
    desc.family = skg::parse_family(a.family);
    desc.n = a.n;
    desc.k = a.k;
    desc.d = a.d;
    desc.eps = a.eps;
    desc.resolution = a.res;
    desc.seed = a.seed;
    if (desc.family == skg::Family::all_negative || desc.family == skg::Family::plus_minus) {
        if (a.base.empty())
            throw skg::input_error("--base FILE is required for " + a.family);
        desc.base = skg::underlying_graph(load(a.base));
    }
    auto g = skg::gen_family(desc);
    std::vector<std::string> comments{"family " + skg::family_name(desc.family)};
    if (desc.family == skg::Family::borsuk_disc) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "d %d eps %.17g res %d seed %llu", a.d, a.eps, a.res,
                      static_cast<unsigned long long>(a.seed));
        comments.emplace_back(buf);
    } else if (desc.family != skg::Family::all_negative && desc.family != skg::Family::plus_minus) {
        comments.push_back("n " + std::to_string(a.n) + " k " + std::to_string(a.k));
    }
    write_text(a.out, skg::dimacs::to_string(g, comments));
    std::cerr << "wrote " << g.order() << " vertices, " << g.edges().size() << " edges\n";
    return ok;
}

// chib / chi ------------------------------------------------------------------

struct SolveArgs {
    std::string file;
    double budget = 60.0;
    std::string certificate;
    bool negative = false;
};

int report_solve(const skg::ChiResult& r, const std::string& what)
{
    if (r.exact()) {
        std::cout << r.value << "\n";
        return ok;
    }
    std::cout << "timeout " << what << " in [" << r.lower << ", " << r.upper << "]\n";
    return timed_out;
}

int cmd_chib(const SolveArgs& a)
{
    auto g = load(a.file);
    auto r = skg::chi_b_exact(g, skg::Budget{a.budget});
    auto verdict = skg::verify_balanced_colouring(g, r.colouring);
    skg::BalancedColouring claimed{r.upper, r.colouring, r.witness};
    if (!verdict.accepted || !skg::check_witnesses(g, claimed)) {
        std::cerr << "internal error: solver colouring rejected by the checker\n";
        return assertion;
    }
    if (!a.certificate.empty()) {
        skg::ojson cert;
        cert["statistic"] = "chi_b";
        cert["exact"] = r.exact();
        cert["value"] = r.exact() ? skg::ojson(r.value) : skg::ojson(nullptr);
        cert["lower"] = r.lower;
        cert["upper"] = r.upper;
        cert["lower_bound"] = r.lower_bound_reason;
        cert["classes"] = r.upper;
        cert["vertices"] = balanced_certificate(g, claimed);
        write_text(a.certificate, cert.dump(2) + "\n");
    }
    return report_solve(r, "chi_b");
}

int cmd_chi(const SolveArgs& a)
{
    auto sg = load(a.file);
    auto g = a.negative ? skg::negative_subgraph(sg) : skg::underlying_graph(sg);
    auto r = skg::chi_exact(g, skg::Budget{a.budget});
    if (!skg::is_proper_colouring(g, r.colouring)) {
        std::cerr << "internal error: solver colouring is not proper\n";
        return assertion;
    }
    if (!a.certificate.empty()) {
        skg::ojson cert;
        cert["statistic"] = a.negative ? "chi of negative subgraph" : "chi";
        cert["exact"] = r.exact();
        cert["value"] = r.exact() ? skg::ojson(r.value) : skg::ojson(nullptr);
        cert["lower"] = r.lower;
        cert["upper"] = r.upper;
        cert["lower_bound"] = r.lower_bound_reason;
        skg::ojson vs = skg::ojson::array();
        for (int v = 0; v < g.order(); ++v)
            vs.push_back({{"vertex", v + 1}, {"label", vertex_name(sg, v)}, {"colour", r.colouring[v]}});
        cert["vertices"] = vs;
        write_text(a.certificate, cert.dump(2) + "\n");
    }
    return report_solve(r, "chi");
}

// verify ------------------------------------------------------------------------

struct VerifyArgs {
    std::string theorem;
    std::optional<int> max_n;
    std::optional<long long> samples;
    std::uint64_t seed = 1;
    double budget = 60.0;
    std::string report;
    bool timings = false;
};

int cmd_verify(const VerifyArgs& a)
{
    skg::CampaignOptions opt;
    opt.max_n = a.max_n;
    opt.samples = a.samples;
    opt.seed = a.seed;
    opt.budget = a.budget;
    auto rep = skg::run_campaign(a.theorem, opt);
    write_text(a.report, rep.dump(a.timings));
    auto s = rep.summary();
    std::cout << a.theorem << ": " << s.pass << " pass, " << s.fail << " fail, " << s.timeout
              << " timeout, " << s.observed << " observed\n";
    if (a.theorem == "conjecture")
        return ok;
    if (s.fail)
        return assertion;
    if (s.timeout)
        return timed_out;
    return ok;
}

// construct ---------------------------------------------------------------------

struct ConstructArgs {
    std::string what;
    int n = 0, k = 0, d = 1, res = 128;
    std::string indices;
    std::string vertex;
    std::string target = "hks";
    std::optional<int> count;
    double eps = 0.05;
    std::optional<double> tau;
    std::uint64_t seed = 0;
    std::string out;
};

int finish_balanced(const std::string& what, const skg::SignedGraph& g,
                    const skg::BalancedColouring& c, skg::ojson extra, const std::string& out)
{
    auto verdict = skg::verify_balanced_colouring(g, c.colour);
    const bool good = verdict.accepted && skg::check_witnesses(g, c);
    skg::ojson cert;
    cert["construction"] = what;
    for (auto& [key, value] : extra.items())
        cert[key] = value;
    cert["classes"] = c.classes;
    cert["verified"] = good;
    cert["vertices"] = balanced_certificate(g, c);
    write_text(out, cert.dump(2) + "\n");
    if (!good) {
        std::cerr << what << ": certificate rejected";
        if (verdict.offending_class >= 0)
            std::cerr << " (class " << verdict.offending_class << " is unbalanced)";
        std::cerr << "\n";
        return assertion;
    }
    std::cerr << what << ": verified " << c.classes << "-class certificate on " << g.order()
              << " vertices\n";
    return ok;
}

int cmd_construct(const ConstructArgs& a)
{
    if (a.what == "bi-cover") {
        std::vector<int> idx;
        if (a.indices.empty())
            for (int i = 1; i <= a.n - a.k + 1; ++i)
                idx.push_back(i);
        else
            idx = parse_int_list(a.indices);
        auto c = skg::cover_B_i(a.n, a.k, idx);
        return finish_balanced(a.what, c.graph, c.colouring,
                               {{"n", a.n}, {"k", a.k}, {"indices", c.index}}, a.out);
    }
    if (a.what == "critical") {
        if (a.vertex.empty())
            throw skg::input_error("--vertex is required for critical");
        auto v = skg::SignedSubset::parse(a.n, a.vertex);
        auto c = skg::critical_cover(a.n, a.k, v);
        return finish_balanced(a.what, c.graph, c.colouring,
                               {{"n", a.n}, {"k", a.k}, {"deleted", v.label()}, {"indices", c.index}},
                               a.out);
    }
    if (a.what == "bi-plus") {
        skg::PlusTarget t;
        if (a.target == "hks")
            t = skg::PlusTarget::hat_ks;
        else if (a.target == "hss")
            t = skg::PlusTarget::hat_ss;
        else if (a.target == "ss")
            t = skg::PlusTarget::ss;
        else
            throw skg::input_error("--target must be hks, hss or ss");
        const int count = a.count.value_or(t == skg::PlusTarget::ss ? a.n - a.k + 2 : a.n - a.k + 1);
        auto c = skg::cover_B_i_plus(a.n, a.k, count, t);
        const bool good = c.total() && skg::is_proper_colouring(c.graph, c.colour);
        skg::ojson cert;
        cert["construction"] = a.what;
        cert["n"] = a.n;
        cert["k"] = a.k;
        cert["target"] = a.target;
        cert["classes"] = count;
        cert["verified"] = good;
        skg::ojson vs = skg::ojson::array();
        for (std::size_t v = 0; v < c.vertices.size(); ++v)
            vs.push_back({{"vertex", v + 1}, {"label", c.vertices[v].label()},
                          {"colour", c.colour[v] < 0 ? skg::ojson(nullptr) : skg::ojson(c.colour[v])}});
        cert["vertices"] = vs;
        write_text(a.out, cert.dump(2) + "\n");
        if (!good) {
            std::cerr << a.what << ": certificate rejected";
            if (!c.total())
                std::cerr << " (" << c.uncovered.size() << " vertices in no class, first "
                          << c.uncovered.front().label() << ")";
            std::cerr << "\n";
            return assertion;
        }
        std::cerr << a.what << ": verified proper " << count << "-colouring on " << c.graph.order()
                  << " vertices\n";
        return ok;
    }
    if (a.what == "equator") {
        auto disc = skg::gen_borsuk_disc(a.d, a.eps, a.res, a.seed);
        auto c = skg::equator_cover(disc, a.tau.value_or(a.eps));
        return finish_balanced(a.what, disc.graph, c.colouring,
                               {{"d", a.d}, {"eps", a.eps}, {"tau", c.threshold}, {"points", disc.graph.order()}},
                               a.out);
    }
    throw skg::input_error("unknown construction '" + a.what + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Signed Kneser and Schrijver graph toolkit"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate a graph family as a signed DIMACS file");
    g->add_option("--family", gen.family,
                  "ks, hks, ss, hss, kneser, schrijver, borsuk, all_negative, plus_minus")
        ->required();
    g->add_option("--n", gen.n, "Ground set size");
    g->add_option("--k", gen.k, "Subset size");
    g->add_option("--d", gen.d, "Sphere dimension (borsuk)");
    g->add_option("--eps", gen.eps, "Edge distance (borsuk)");
    g->add_option("--res", gen.res, "Resolution (borsuk)");
    g->add_option("--seed", gen.seed, "Seed (borsuk, d >= 2)");
    g->add_option("--base", gen.base, "Base graph file (all_negative, plus_minus)");
    g->add_option("-o,--output", gen.out, "Output file")->required();

    SolveArgs chib;
    auto* cb = app.add_subcommand("chib", "Exact balanced chromatic number");
    cb->add_option("file", chib.file, "Signed DIMACS file")->required();
    cb->add_option("--budget", chib.budget, "Time budget in seconds");
    cb->add_option("--certificate", chib.certificate, "Write a colouring certificate (JSON)");

    SolveArgs chi;
    auto* ch = app.add_subcommand("chi", "Exact chromatic number of the underlying graph");
    ch->add_option("file", chi.file, "Signed DIMACS file")->required();
    ch->add_option("--budget", chi.budget, "Time budget in seconds");
    ch->add_option("--certificate", chi.certificate, "Write a colouring certificate (JSON)");
    ch->add_flag("--negative", chi.negative, "Use the negative subgraph instead");

    VerifyArgs ver;
    std::vector<std::string> names;
    for (const auto& [name, fn] : skg::campaign_registry())
        names.push_back(name);
    auto* v = app.add_subcommand("verify", "Run a verification campaign");
    v->add_option("--theorem", ver.theorem, "Campaign name")->required()->check(CLI::IsMember(names));
    v->add_option("--max-n", ver.max_n, "Largest n (campaign-specific default)");
    v->add_option("--samples", ver.samples, "Random samples (campaign-specific default)");
    v->add_option("--seed", ver.seed, "Base seed");
    v->add_option("--budget", ver.budget, "Per-instance budget in seconds");
    v->add_option("--report", ver.report, "Report file (- for stdout)")->required();
    v->add_flag("--timings", ver.timings, "Include elapsed times in the report");

    ConstructArgs con;
    auto* c = app.add_subcommand("construct", "Emit and re-verify a construction certificate");
    c->add_option("--what", con.what, "bi-cover, critical, bi-plus or equator")
        ->required()
        ->check(CLI::IsMember({"bi-cover", "critical", "bi-plus", "equator"}));
    c->add_option("--n", con.n);
    c->add_option("--k", con.k);
    c->add_option("--indices", con.indices, "Comma-separated cover indices (bi-cover)");
    c->add_option("--vertex", con.vertex, "Deleted vertex, e.g. {1,-2} (critical)");
    c->add_option("--target", con.target, "hks, hss or ss (bi-plus)");
    c->add_option("--count", con.count, "Number of classes (bi-plus)");
    c->add_option("--d", con.d);
    c->add_option("--eps", con.eps);
    c->add_option("--res", con.res);
    c->add_option("--seed", con.seed);
    c->add_option("--tau", con.tau, "Threshold (equator, default eps)");
    c->add_option("-o,--output", con.out, "Certificate file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*g)
            return cmd_gen(gen);
        if (*cb)
            return cmd_chib(chib);
        if (*ch)
            return cmd_chi(chi);
        if (*v)
            return cmd_verify(ver);
        if (*c)
            return cmd_construct(con);
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io;
    } catch (const skg::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return assertion;
    }
    return usage;
}
