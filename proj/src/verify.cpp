#include "domseq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "domseq/family.hpp"
#include "domseq/generators.hpp"
#include "domseq/graph_io.hpp"
#include "domseq/hypergraph.hpp"
#include "domseq/invariants.hpp"
#include "domseq/random_gen.hpp"
#include "domseq/sequence.hpp"
#include "domseq/zero_forcing.hpp"

namespace domseq {

namespace {

struct SuiteBuilder {
    SuiteResult result;
    std::chrono::steady_clock::time_point start;

    explicit SuiteBuilder(std::string name) : start(std::chrono::steady_clock::now()) {
        result.suite = std::move(name);
    }

    void check(const std::string& case_name, bool ok, const std::string& detail = "") {
        result.cases.push_back({case_name, ok, detail});
        if (!ok) ++result.failed;
    }

    void check_eq(const std::string& case_name, long long got, long long want) {
        bool ok = (got == want);
        std::ostringstream detail;
        if (!ok) detail << "expected " << want << ", got " << got;
        check(case_name, ok, detail.str());
    }

    void skip(const std::string& case_name) {
        result.cases.push_back({case_name, true, "skipped (small budget)"});
    }

    SuiteResult finish() {
        result.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return std::move(result);
    }
};

std::string set_to_string(const VertexSet& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    s.for_each([&](int v) {
        if (!first) out << ',';
        out << v;
        first = false;
    });
    out << '}';
    return out.str();
}

std::string order_to_string(const std::vector<int>& order) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out << ',';
        out << order[i];
    }
    out << ')';
    return out.str();
}

// Shared registry of named small graphs used across the suites.
std::vector<std::pair<std::string, Graph>> connected_fixtures() {
    std::vector<std::pair<std::string, Graph>> out;
    for (int n = 2; n <= 8; ++n) out.emplace_back("path:" + std::to_string(n), path(n));
    for (int n = 3; n <= 8; ++n) out.emplace_back("cyc:" + std::to_string(n), cycle(n));
    for (int n = 2; n <= 6; ++n) out.emplace_back("K:" + std::to_string(n), complete(n));
    for (int n = 2; n <= 6; ++n) out.emplace_back("star:" + std::to_string(n), star(n));
    for (int d = 1; d <= 4; ++d) out.emplace_back("Q:" + std::to_string(d), hypercube(d));
    out.emplace_back("sier:2,2", sierpinski(2, 2));
    out.emplace_back("sier:2,3", sierpinski(2, 3));
    out.emplace_back("sier:3,2", sierpinski(3, 2));
    out.emplace_back("sier:4,2", sierpinski(4, 2));
    for (int n = 3; n <= 5; ++n) out.emplace_back("glued:" + std::to_string(n), glued_cliques(n));
    return out;
}

double random_edge_prob(RandomGen& rng) { return 0.3 + 0.5 * rng.unit(); }

}  // namespace

std::vector<std::string> suite_names() {
    return {"duality", "products",   "sierpinski", "lattice", "factor2",
            "alpha-beta", "reduction", "ptime",      "kz"};
}

SuiteResult suite_duality(const SuiteOptions& opt) {
    SuiteBuilder b("duality");
    int samples = opt.samples ? opt.samples : 300;
    int n_max = opt.n_max ? opt.n_max : 7;
    if (opt.small_budget) samples = std::min(samples, 60);

    auto run_case = [&](const std::string& name, const Graph& g) {
        int n = g.vertex_count();
        GrundyResult grz = grundy_number(g, Variant::z);
        ForcingNumberResult zf = zero_forcing_number(g);
        std::ostringstream detail;
        bool ok = (grz.value + zf.value == n);
        if (!ok) {
            detail << "z-grundy " << grz.value << " + forcing " << zf.value << " != " << n;
        } else {
            VertexSet complement = forcing_set_from_z_sequence(g, grz.witness);
            if (complement.count() != zf.value) {
                ok = false;
                detail << "sequence complement " << set_to_string(complement) << " has size "
                       << complement.count() << ", minimum forcing set has " << zf.value;
            }
        }
        if (ok) {
            ForcingProcess process = closure(g, zf.witness, 1).process;
            GrundySequence back = z_sequence_from_forcing(g, process);
            if (static_cast<int>(back.order.size()) != grz.value) {
                ok = false;
                detail << "reversed chronology " << order_to_string(back.order) << " has length "
                       << back.order.size() << ", expected " << grz.value;
            }
        }
        b.check(name, ok, detail.str());
    };

    for (const auto& [name, g] : connected_fixtures()) run_case(name, g);
    RandomGen rng(opt.seed);
    for (int i = 0; i < samples; ++i) {
        int n = 3 + rng.below(n_max - 2);
        Graph g = rng.connected_graph(n, random_edge_prob(rng));
        run_case("random connected n=" + std::to_string(n) + " #" + std::to_string(i), g);
    }
    return b.finish();
}

SuiteResult suite_products_grundy(const SuiteOptions& opt) {
    SuiteBuilder b("products");

    auto cell = [&](const std::string& fam, long long expected) {
        Graph g = instantiate_family(parse_family(fam));
        if (opt.small_budget && g.vertex_count() > 16) {
            b.skip(fam + " grz");
            return;
        }
        b.check_eq(fam + " grz", grundy_number(g, Variant::z).value, expected);
    };

    for (int d = 1; d <= 4; ++d) {
        cell("Q:" + std::to_string(d), 1LL << (d - 1));
    }
    for (int s = 2; s <= 3; ++s) {
        for (int t = 2; t <= 3; ++t) {
            cell("cart(K:" + std::to_string(s) + ",path:" + std::to_string(t) + ")",
                 static_cast<long long>(s) * (t - 1));
        }
    }
    // arbitrary small factors against |V(G)|(t-1), valid while |V(G)| <= t
    RandomGen rng(opt.seed);
    for (int t = 2; t <= 4; ++t) {
        for (int order = 2; order <= t; ++order) {
            for (int i = 0; i < 2; ++i) {
                Graph g = rng.graph(order, 0.5);
                Graph product = cartesian_product(g, path(t));
                std::string name = "cart(random n=" + std::to_string(order) + " #" +
                                   std::to_string(i) + ",path:" + std::to_string(t) + ")";
                b.check_eq(name + " grz", grundy_number(product, Variant::z).value,
                           static_cast<long long>(order) * (t - 1));
            }
        }
    }
    for (int s = 2; s <= 4; ++s) {
        for (int t = s; t <= 4; ++t) {
            cell("cart(path:" + std::to_string(s) + ",path:" + std::to_string(t) + ")",
                 static_cast<long long>(s) * (t - 1));
        }
    }
    for (int s = 3; s <= 5; ++s) {
        for (int t = 2; t <= 3; ++t) {
            cell("cart(cyc:" + std::to_string(s) + ",path:" + std::to_string(t) + ")",
                 static_cast<long long>(s) * t - std::min(s, 2 * t));
        }
    }
    for (int s = 4; s <= 5; ++s) {
        for (int t = 2; t <= 3; ++t) {
            cell("cart(cyc:" + std::to_string(s) + ",K:" + std::to_string(t) + ")",
                 static_cast<long long>(t) * (s - 2));
        }
    }
    for (int s = 2; s <= 4; ++s) {
        for (int t = 2; t <= 4; ++t) {
            cell("strong(path:" + std::to_string(s) + ",path:" + std::to_string(t) + ")",
                 static_cast<long long>(s - 1) * (t - 1));
        }
    }
    cell("cart(cyc:3,cyc:4)", 3 * 4 - 2 * 3);
    cell("cart(cyc:3,cyc:5)", 3 * 5 - 2 * 3);
    cell("cart(cyc:4,cyc:5)", 4 * 5 - 2 * 4);
    cell("cart(cyc:5,cyc:5)", 5 * 5 - 2 * 5 + 1);
    return b.finish();
}

SuiteResult suite_products_forcing(const SuiteOptions& opt) {
    SuiteBuilder b("products-forcing");

    auto cell = [&](const std::string& fam, long long expected) {
        Graph g = instantiate_family(parse_family(fam));
        if (opt.small_budget && g.vertex_count() > 12) {
            b.skip(fam + " zf");
            return;
        }
        b.check_eq(fam + " zf", zero_forcing_number(g).value, expected);
    };

    for (int s = 3; s <= 4; ++s) {
        for (int t = 2; t <= 3; ++t) {
            cell("strong(cyc:" + std::to_string(s) + ",path:" + std::to_string(t) + ")",
                 2LL * t + s - 2);
        }
    }
    for (int s = 3; s <= 4; ++s) {
        for (int t = 3; t <= 4; ++t) {
            long long expected = (s % 2 == 0) ? (s / 2) * (t + 1LL) - 1
                                              : static_cast<long long>(s) * t -
                                                    ((s + 1) / 2) * (t - 1LL);
            cell("lex(path:" + std::to_string(s) + ",path:" + std::to_string(t) + ")", expected);
        }
    }
    for (int s = 3; s <= 4; ++s) {
        for (int t = 3; t <= 4; ++t) {
            long long expected = (s % 2 == 0) ? (s / 2) * (t + 2LL) - 1
                                              : static_cast<long long>(s) * t -
                                                    ((s + 1) / 2) * (t - 2LL);
            cell("lex(path:" + std::to_string(s) + ",cyc:" + std::to_string(t) + ")", expected);
        }
    }
    cell("lex(cyc:4,cyc:4)", (4 / 2) * (4 + 2));
    return b.finish();
}

SuiteResult suite_sierpinski(const SuiteOptions& opt) {
    SuiteBuilder b("sierpinski");

    auto cell = [&](int p, int n, long long expected) {
        std::string name = "sier:" + std::to_string(p) + "," + std::to_string(n) + " zf";
        Graph g = sierpinski(p, n);
        if (opt.small_budget && g.vertex_count() > 16) {
            b.skip(name);
            return;
        }
        b.check_eq(name, zero_forcing_number_via_sequence(g).value, expected);
        if (g.vertex_count() <= 9) {
            b.check_eq(name + " (subset search agrees)", zero_forcing_number(g).value, expected);
        }
    };

    for (int k = 1; k <= 4; ++k) cell(2, k, 1);
    cell(3, 2, 3);
    cell(4, 2, 6);
    cell(3, 3, 6);
    return b.finish();
}

namespace {

// one shared random pool so the chain and factor-2 suites see the same graphs
std::vector<std::pair<std::string, Graph>> isolate_free_pool(const SuiteOptions& opt) {
    int samples = opt.samples ? opt.samples : 200;
    int n_max = opt.n_max ? opt.n_max : 8;
    if (opt.small_budget) samples = std::min(samples, 40);
    RandomGen rng(opt.seed);
    std::vector<std::pair<std::string, Graph>> out;
    out.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        int n = 2 + rng.below(n_max - 1);
        Graph g = rng.isolate_free_graph(n, random_edge_prob(rng));
        out.emplace_back("random isolate-free n=" + std::to_string(n) + " #" + std::to_string(i),
                         std::move(g));
    }
    return out;
}

}  // namespace

SuiteResult suite_lattice(const SuiteOptions& opt) {
    SuiteBuilder b("lattice");
    for (const auto& [name, g] : isolate_free_pool(opt)) {
        int gr = grundy_number(g, Variant::closed).value;
        int grt = grundy_number(g, Variant::total).value;
        int grz = grundy_number(g, Variant::z).value;
        int grl = grundy_number(g, Variant::l).value;
        bool ok = grz <= gr && gr <= grl - 1 && grz <= grt && grt <= grl;
        std::ostringstream detail;
        if (!ok) {
            detail << "z=" << grz << " closed=" << gr << " total=" << grt << " l=" << grl;
        }
        b.check(name + " chain", ok, detail.str());
    }
    return b.finish();
}

SuiteResult suite_factor2(const SuiteOptions& opt) {
    SuiteBuilder b("factor2");
    for (const auto& [name, g] : isolate_free_pool(opt)) {
        int gr = grundy_number(g, Variant::closed).value;
        int grt = grundy_number(g, Variant::total).value;
        int grz = grundy_number(g, Variant::z).value;
        int grl = grundy_number(g, Variant::l).value;
        bool ok = grt <= 2 * grz && grl <= 2 * gr;
        std::ostringstream detail;
        if (!ok) {
            detail << "z=" << grz << " closed=" << gr << " total=" << grt << " l=" << grl;
        }
        b.check(name + " factor-2", ok, detail.str());
    }
    for (int n = 3; n <= 5; ++n) {
        Graph kn = complete(n);
        Graph gl = glued_cliques(n);
        std::string label = std::to_string(n);
        b.check_eq("K:" + label + " total grundy", grundy_number(kn, Variant::total).value, 2);
        b.check_eq("K:" + label + " z grundy", grundy_number(kn, Variant::z).value, 1);
        b.check_eq("K:" + label + " l grundy", grundy_number(kn, Variant::l).value, 2);
        b.check_eq("K:" + label + " closed grundy", grundy_number(kn, Variant::closed).value, 1);
        b.check_eq("glued:" + label + " total grundy", grundy_number(gl, Variant::total).value, 4);
        b.check_eq("glued:" + label + " z grundy", grundy_number(gl, Variant::z).value, 2);
        b.check_eq("glued:" + label + " l grundy", grundy_number(gl, Variant::l).value, 4);
        b.check_eq("glued:" + label + " closed grundy", grundy_number(gl, Variant::closed).value,
                   2);
    }
    return b.finish();
}

SuiteResult suite_alpha_beta(const SuiteOptions& opt) {
    SuiteBuilder b("alpha-beta");
    for (const auto& [name, g] : isolate_free_pool(opt)) {
        int zf = zero_forcing_number(g).value;
        int alpha = independence_number(g);
        int beta = vertex_cover_number(g);
        bool ok = zf >= alpha - beta;
        std::ostringstream detail;
        if (!ok) detail << "forcing " << zf << " < independence " << alpha << " - cover " << beta;
        b.check(name + " forcing >= independence - cover", ok, detail.str());
    }
    for (int n = 2; n <= 5; ++n) {
        Graph g = star(n);
        int zf = zero_forcing_number(g).value;
        int gap = independence_number(g) - vertex_cover_number(g);
        b.check_eq("star:" + std::to_string(n) + " equality", zf, gap);
    }
    for (int k = 1; k <= 3; ++k) {
        int n = 2 * k + 1;
        Graph g = path(n);
        int zf = zero_forcing_number(g).value;
        int gap = independence_number(g) - vertex_cover_number(g);
        b.check_eq("path:" + std::to_string(n) + " equality", zf, gap);
    }
    return b.finish();
}

SuiteResult suite_reduction(const SuiteOptions& opt) {
    SuiteBuilder b("reduction");
    int samples = opt.samples ? opt.samples : 50;
    if (opt.small_budget) samples = std::min(samples, 15);

    auto claim_case = [&](const std::string& name, const BipartiteGraph& bg) {
        ReductionCheck rc = verify_reduction_claim(bg);
        std::ostringstream detail;
        if (!rc.equal) {
            detail << "augmented l-grundy " << rc.lhs << " != parts+cover " << rc.rhs << " on "
                   << serialize_graph(bg.graph);
        }
        b.check(name, rc.equal, detail.str());
    };
    auto cover_invariance = [&](const std::string& name, const BipartiteGraph& bg) {
        int direct = grundy_cover_number(neighborhood_hypergraph(bg)).value;
        int augmented = grundy_cover_number(neighborhood_hypergraph(star_augment(bg))).value;
        b.check_eq(name + " cover number unchanged by augmentation", augmented, direct);
        int plain = edge_cover_number(neighborhood_hypergraph(bg));
        b.check(name + " grundy cover >= cover", direct >= plain,
                "grundy " + std::to_string(direct) + " < " + std::to_string(plain));
    };

    std::vector<std::pair<std::string, BipartiteGraph>> fixtures;
    {
        Graph g(2);
        g.add_edge(0, 1);
        fixtures.emplace_back("single edge",
                              make_bipartite(std::move(g), VertexSet::single(0),
                                             VertexSet::single(1)));
    }
    {
        VertexSet a, bb;
        a.set(0);
        a.set(2);
        bb.set(1);
        bb.set(3);
        fixtures.emplace_back("path:4 bipartition", make_bipartite(path(4), a, bb));
        fixtures.emplace_back("cyc:4 bipartition", make_bipartite(cycle(4), a, bb));
    }
    {
        VertexSet a, bb;
        for (int v = 0; v < 6; v += 2) a.set(v);
        for (int v = 1; v < 6; v += 2) bb.set(v);
        fixtures.emplace_back("cyc:6 bipartition", make_bipartite(cycle(6), a, bb));
    }
    {
        Graph g = star(3);
        VertexSet leaves = g.vertices() - VertexSet::single(0);
        fixtures.emplace_back("star:3 center in B",
                              make_bipartite(std::move(g), leaves, VertexSet::single(0)));
    }
    for (const auto& [name, bg] : fixtures) {
        claim_case(name, bg);
        cover_invariance(name, bg);
    }

    RandomGen rng(opt.seed);
    for (int i = 0; i < samples; ++i) {
        int a = 1 + rng.below(4);
        int bb = 1 + rng.below(4);
        BipartiteGraph bg = rng.bipartite_no_isolated(a, bb, 0.4 + 0.4 * rng.unit());
        claim_case("random bipartite |A|=" + std::to_string(a) + " |B|=" + std::to_string(bb) +
                       " #" + std::to_string(i),
                   bg);
    }
    return b.finish();
}

SuiteResult suite_ptime(const SuiteOptions& opt) {
    SuiteBuilder b("ptime");
    int samples = opt.samples ? opt.samples : 100;
    if (opt.small_budget) samples = std::min(samples, 25);

    auto run_case = [&](const std::string& name, const Graph& g) {
        PropagationResult pt = propagation_time(g);
        BlockPartitionResult blocks = min_permutable_blocks(g);
        bool ok = pt.exact && pt.value == blocks.blocks;
        std::ostringstream detail;
        if (!ok) {
            detail << "propagation " << pt.value << (pt.exact ? "" : " (inexact)")
                   << " with forcing set " << set_to_string(pt.witness) << "; blocks "
                   << blocks.blocks << " on sequence " << order_to_string(blocks.witness.order)
                   << " starting at " << order_to_string(blocks.block_starts);
        }
        b.check(name, ok, detail.str());
    };

    for (const auto& [name, g] : connected_fixtures()) {
        if (g.vertex_count() <= 9) run_case(name, g);
    }
    RandomGen rng(opt.seed);
    for (int i = 0; i < samples; ++i) {
        int n = 3 + rng.below(5);
        Graph g = rng.connected_graph(n, random_edge_prob(rng));
        run_case("random connected n=" + std::to_string(n) + " #" + std::to_string(i), g);
    }
    return b.finish();
}

SuiteResult suite_kz(const SuiteOptions& opt) {
    SuiteBuilder b("kz");
    int samples = opt.samples ? opt.samples : 100;
    if (opt.small_budget) samples = std::min(samples, 25);

    for (int k = 1; k <= 2; ++k) {
        RandomGen rng(opt.seed + static_cast<std::uint64_t>(k));
        for (int i = 0; i < samples; ++i) {
            int n = 3 + rng.below(5);
            Graph g = rng.min_degree_graph(n, k, 0.5 + 0.3 * rng.unit());
            std::string name = "random min-degree>=" + std::to_string(k) + " n=" +
                               std::to_string(n) + " #" + std::to_string(i);
            GrundyResult kz = k_z_grundy_number(g, k);
            int kdom = k_domination_number(g, k);
            std::ostringstream detail;
            bool ok = kz.value >= kdom;
            if (!ok) detail << "k-z grundy " << kz.value << " < k-domination " << kdom;
            b.check(name + " k-z grundy >= k-domination", ok, detail.str());
            if (k == 1) {
                b.check_eq(name + " k=1 matches z grundy", kz.value,
                           grundy_number(g, Variant::z).value);
                b.check_eq(name + " k=1 forcing matches", k_forcing_number(g, 1).value,
                           zero_forcing_number(g).value);
            }
        }
    }
    return b.finish();
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "duality") return suite_duality(opt);
    if (name == "products") {
        SuiteResult grundy = suite_products_grundy(opt);
        SuiteResult forcing = suite_products_forcing(opt);
        for (CaseResult& c : forcing.cases) grundy.cases.push_back(std::move(c));
        grundy.failed += forcing.failed;
        grundy.seconds += forcing.seconds;
        return grundy;
    }
    if (name == "sierpinski") return suite_sierpinski(opt);
    if (name == "lattice") return suite_lattice(opt);
    if (name == "factor2") return suite_factor2(opt);
    if (name == "alpha-beta") return suite_alpha_beta(opt);
    if (name == "reduction") return suite_reduction(opt);
    if (name == "ptime") return suite_ptime(opt);
    if (name == "kz") return suite_kz(opt);
    throw std::invalid_argument("unknown suite \"" + name + "\"");
}

}  // namespace domseq
