// Command-line front end: compute invariants on graph families or input
// files, run the verification suites, and sweep invariants over parameter
// ranges with closed-form predictions where one is registered.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "domseq/family.hpp"
#include "domseq/formulas.hpp"
#include "domseq/graph.hpp"
#include "domseq/graph_io.hpp"
#include "domseq/hypergraph.hpp"
#include "domseq/invariants.hpp"
#include "domseq/sequence.hpp"
#include "domseq/verify.hpp"
#include "domseq/zero_forcing.hpp"

namespace {

using nlohmann::json;

struct Options {
    std::string format = "table";
    std::uint64_t seed = 9181;
    int samples = 0;
    int n_max = 0;
    std::string budget = "full";
    int threads = 1;
    bool allow_large = false;
    int k = 1;
};

// Graphs above this size go through the z-sequence complement identity
// instead of direct minimum-subset search, which is infeasible there.
constexpr int kSubsetSearchLimit = 20;

json set_to_json(const domseq::VertexSet& s) {
    json arr = json::array();
    for (int v : s.elements()) arr.push_back(v);
    return arr;
}

json process_to_json(const domseq::ForcingProcess& p) {
    json forces = json::array();
    for (const domseq::Force& f : p.chronology) {
        forces.push_back({{"round", f.round}, {"forcer", f.forcer}, {"forced", f.forced}});
    }
    return {{"initial", set_to_json(p.initial_blue)},
            {"forces", forces},
            {"rounds", p.rounds}};
}

json sequence_to_json(const domseq::GrundySequence& s) {
    json feet = json::array();
    for (const domseq::VertexSet& f : s.footprints) feet.push_back(set_to_json(f));
    return {{"order", s.order}, {"footprints", feet}};
}

struct Outcome {
    long long value = 0;
    bool exact = true;
    std::string route;
    json witness;  // null when the invariant has none
};

bool uses_k(const std::string& inv) {
    return inv == "grz-k" || inv == "kf" || inv == "gamma-k";
}

bool hypergraph_invariant(const std::string& inv) { return inv == "rho" || inv == "rho-gr"; }

// Witnesses are replayed through the public verifiers before they are
// printed; a witness that fails its own check is a bug, not output.
void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal: ") + what);
}

Outcome compute_on_graph(const domseq::Graph& g, const std::string& inv, const Options& opt,
                         bool want_witness) {
    using namespace domseq;
    Outcome out;

    auto sequence_case = [&](Variant variant) {
        GrundyResult r = grundy_number(g, variant);
        out.value = r.value;
        if (want_witness) {
            require(verify_sequence(g, variant, r.witness.order).ok &&
                        static_cast<int>(r.witness.order.size()) == r.value,
                    "sequence witness failed replay");
            out.witness = sequence_to_json(r.witness);
        }
    };
    auto forcing_witness = [&](const VertexSet& blue, int k) {
        require(is_zero_forcing_set(g, blue, k), "forcing witness is not a forcing set");
        ClosureResult c = closure(g, blue, k);
        out.witness = json{{"set", set_to_json(blue)}, {"process", process_to_json(c.process)}};
    };

    if (inv == "gr") {
        sequence_case(Variant::closed);
    } else if (inv == "grt") {
        sequence_case(Variant::total);
    } else if (inv == "grz") {
        sequence_case(Variant::z);
    } else if (inv == "grl") {
        sequence_case(Variant::l);
    } else if (inv == "grz-k") {
        GrundyResult r = k_z_grundy_number(g, opt.k);
        out.value = r.value;
        if (want_witness) {
            require(verify_k_z_sequence(g, opt.k, r.witness.order).ok &&
                        static_cast<int>(r.witness.order.size()) == r.value,
                    "k-z witness failed replay");
            out.witness = sequence_to_json(r.witness);
        }
    } else if (inv == "zf") {
        if (g.vertex_count() > kSubsetSearchLimit) {
            ForcingNumberResult r = zero_forcing_number_via_sequence(g);
            out.value = r.value;
            out.route = "complement of a maximum z-sequence";
            if (want_witness) forcing_witness(r.witness, 1);
        } else {
            ForcingNumberResult r = zero_forcing_number(g);
            out.value = r.value;
            out.route = "subset search";
            if (want_witness) forcing_witness(r.witness, 1);
        }
    } else if (inv == "kf") {
        ForcingNumberResult r = k_forcing_number(g, opt.k);
        out.value = r.value;
        out.route = "subset search";
        if (want_witness) forcing_witness(r.witness, opt.k);
    } else if (inv == "ptime") {
        PropagationResult r = propagation_time(g);
        out.value = r.value;
        out.exact = r.exact;
        if (want_witness) {
            require(is_zero_forcing_set(g, r.witness), "propagation witness is not a forcing set");
            ClosureResult c = closure(g, r.witness);
            require(c.process.rounds == r.value, "propagation witness rounds mismatch");
            out.witness = json{{"set", set_to_json(r.witness)}, {"process", process_to_json(c.process)}};
        }
    } else if (inv == "alpha") {
        out.value = independence_number(g, opt.allow_large);
    } else if (inv == "beta") {
        out.value = vertex_cover_number(g, opt.allow_large);
    } else if (inv == "gamma-k") {
        out.value = k_domination_number(g, opt.k, opt.allow_large);
    } else {
        throw std::invalid_argument("unknown invariant: " + inv);
    }
    return out;
}

Outcome compute_on_hypergraph(const domseq::Hypergraph& h, const std::string& inv,
                              bool want_witness) {
    Outcome out;
    if (inv == "rho") {
        out.value = domseq::edge_cover_number(h);
    } else {
        domseq::GrundyCoverResult r = domseq::grundy_cover_number(h);
        out.value = r.value;
        if (want_witness) {
            domseq::VertexSet covered;
            for (int e : r.order) {
                domseq::VertexSet fresh = h.edges[static_cast<std::size_t>(e)] - covered;
                require(!fresh.empty(), "covering witness failed replay");
                covered |= h.edges[static_cast<std::size_t>(e)];
            }
            require(static_cast<int>(r.order.size()) == r.value, "covering witness length mismatch");
            out.witness = json{{"order", r.order}};
        }
    }
    return out;
}

domseq::Graph load_graph_spec(const std::string& spec) {
    if (std::filesystem::exists(spec)) return domseq::load_graph_file(spec);
    domseq::FamilySpec fam = domseq::parse_family(spec);
    std::vector<std::string> vars = domseq::family_variables(fam);
    if (!vars.empty()) {
        throw std::invalid_argument("unbound family variable '" + vars.front() +
                                    "' (sweep binds variables with --range)");
    }
    return domseq::instantiate_family(fam);
}

std::string witness_summary(const json& w) {
    if (w.is_null()) return "";
    const json* list = nullptr;
    if (w.contains("order")) list = &w["order"];
    else if (w.contains("set")) list = &w["set"];
    if (!list) return "";
    std::ostringstream out;
    for (std::size_t i = 0; i < list->size(); ++i) {
        if (i) out << ' ';
        out << (*list)[i].get<long long>();
    }
    return out.str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_compute(const std::string& spec, const std::string& inv, const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    if (hypergraph_invariant(inv)) {
        if (!std::filesystem::exists(spec)) {
            throw std::invalid_argument("covering invariants read a hypergraph file, got: " + spec);
        }
        std::ifstream in(spec);
        out = compute_on_hypergraph(domseq::parse_hypergraph(in), inv, true);
    } else {
        out = compute_on_graph(load_graph_spec(spec), inv, opt, true);
    }
    double secs = seconds_since(t0);

    if (opt.format == "json") {
        json report = {{"input", spec},
                       {"invariant", inv},
                       {"value", out.value},
                       {"exact", out.exact},
                       {"seconds", secs}};
        if (uses_k(inv)) report["k"] = opt.k;
        if (!out.route.empty()) report["route"] = out.route;
        if (!out.witness.is_null()) report["witness"] = out.witness;
        std::cout << report.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "input,invariant,value,exact,route,seconds,witness\n"
                  << csv_field(spec) << ',' << inv << ',' << out.value << ','
                  << (out.exact ? "true" : "false") << ',' << csv_field(out.route) << ','
                  << std::setprecision(3) << std::fixed << secs << ','
                  << csv_field(witness_summary(out.witness)) << "\n";
    } else {
        std::cout << "input      " << spec << "\n"
                  << "invariant  " << inv;
        if (uses_k(inv)) std::cout << " (k=" << opt.k << ")";
        std::cout << "\nvalue      " << out.value << "\n"
                  << "exact      " << (out.exact ? "yes" : "no") << "\n";
        if (!out.route.empty()) std::cout << "route      " << out.route << "\n";
        std::cout << "seconds    " << std::setprecision(3) << std::fixed << secs << "\n";
        std::string w = witness_summary(out.witness);
        if (!w.empty()) std::cout << "witness    " << w << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, const Options& opt) {
    domseq::SuiteOptions so;
    so.seed = opt.seed;
    so.samples = opt.samples;
    so.n_max = opt.n_max;
    so.small_budget = (opt.budget == "small");
    domseq::SuiteResult r = domseq::run_suite(suite, so);

    if (opt.format == "json") {
        json cases = json::array();
        for (const domseq::CaseResult& c : r.cases) {
            cases.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
        json report = {{"suite", r.suite},   {"seed", so.seed},
                       {"cases", cases},     {"total", r.cases.size()},
                       {"failed", r.failed}, {"seconds", r.seconds},
                       {"pass", r.pass()}};
        std::cout << report.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "case,pass,detail\n";
        for (const domseq::CaseResult& c : r.cases) {
            std::cout << csv_field(c.name) << ',' << (c.pass ? "true" : "false") << ','
                      << csv_field(c.detail) << "\n";
        }
    } else {
        for (const domseq::CaseResult& c : r.cases) {
            std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name << "\n";
            if (!c.pass && !c.detail.empty()) std::cout << "       " << c.detail << "\n";
        }
        std::cout << r.suite << ": " << (r.cases.size() - static_cast<std::size_t>(r.failed))
                  << "/" << r.cases.size() << " passed, seed " << so.seed << ", "
                  << std::setprecision(1) << std::fixed << r.seconds << "s\n";
    }
    return r.pass() ? 0 : 1;
}

struct RangeSpec {
    std::string var;
    long long lo = 0;
    long long hi = 0;
};

RangeSpec parse_range(const std::string& text) {
    auto bad = [&] { throw std::invalid_argument("range must look like var=lo..hi, got: " + text); };
    std::size_t eq = text.find('=');
    std::size_t dots = text.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq || eq == 0) bad();
    RangeSpec r;
    r.var = text.substr(0, eq);
    try {
        std::size_t used = 0;
        std::string lo_text = text.substr(eq + 1, dots - eq - 1);
        std::string hi_text = text.substr(dots + 2);
        r.lo = std::stoll(lo_text, &used);
        if (used != lo_text.size()) bad();
        r.hi = std::stoll(hi_text, &used);
        if (used != hi_text.size()) bad();
    } catch (const std::logic_error&) {
        bad();
    }
    if (r.lo > r.hi) bad();
    return r;
}

struct SweepRow {
    domseq::Bindings bindings;
    long long n = 0;
    bool computed = false;
    long long value = 0;
    std::string route;
    std::string note;  // skip reason when a cell could not run
    std::optional<domseq::Prediction> predicted;
};

int run_sweep(const std::string& family_text, const std::string& inv,
              const std::vector<std::string>& range_texts, const Options& opt) {
    using namespace domseq;
    if (hypergraph_invariant(inv)) {
        throw std::invalid_argument("sweep works on graph families; " + inv +
                                    " reads a hypergraph file via compute");
    }
    FamilySpec fam = parse_family(family_text);

    std::vector<RangeSpec> ranges;
    for (const std::string& text : range_texts) ranges.push_back(parse_range(text));
    std::vector<std::string> vars = family_variables(fam);
    for (const std::string& v : vars) {
        auto hit = std::find_if(ranges.begin(), ranges.end(),
                                [&](const RangeSpec& r) { return r.var == v; });
        if (hit == ranges.end()) {
            throw std::invalid_argument("family variable '" + v + "' has no --range");
        }
    }
    for (const RangeSpec& r : ranges) {
        if (std::find(vars.begin(), vars.end(), r.var) == vars.end()) {
            throw std::invalid_argument("--range names unknown variable '" + r.var + "'");
        }
    }

    // Cells in odometer order: the first --range varies slowest.
    std::vector<Bindings> cells;
    std::vector<long long> cursor(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i) cursor[i] = ranges[i].lo;
    while (true) {
        Bindings b;
        for (std::size_t i = 0; i < ranges.size(); ++i) b[ranges[i].var] = cursor[i];
        cells.push_back(b);
        std::size_t i = ranges.size();
        while (i > 0 && ++cursor[i - 1] > ranges[i - 1].hi) {
            --i;
            cursor[i] = ranges[i].lo;
        }
        if (i == 0) break;
    }

    std::vector<SweepRow> rows(cells.size());
    auto work = [&](std::size_t i) {
        SweepRow& row = rows[i];
        row.bindings = cells[i];
        row.predicted = predicted_value(fam, inv, row.bindings);
        try {
            Graph g = instantiate_family(fam, row.bindings);
            row.n = g.vertex_count();
            Outcome oc = compute_on_graph(g, inv, opt, false);
            row.value = oc.value;
            row.route = oc.route;
            row.computed = true;
        } catch (const std::exception& e) {
            row.note = e.what();
        }
    };

    std::size_t worker_count = std::min<std::size_t>(static_cast<std::size_t>(opt.threads),
                                                     cells.size());
    if (worker_count > 1) {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < worker_count; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) work(i);
            });
        }
        for (std::thread& th : pool) th.join();
    } else {
        for (std::size_t i = 0; i < cells.size(); ++i) work(i);
    }

    auto match_text = [](const SweepRow& row) -> std::string {
        if (!row.computed || !row.predicted) return "";
        return row.value == row.predicted->value ? "yes" : "NO";
    };

    if (opt.format == "json") {
        json out = json::array();
        for (const SweepRow& row : rows) {
            json item;
            for (const RangeSpec& r : ranges) item[r.var] = row.bindings.at(r.var);
            item["vertices"] = row.n;
            if (row.computed) item["value"] = row.value;
            if (!row.route.empty()) item["route"] = row.route;
            if (row.predicted) {
                item["predicted"] = row.predicted->value;
                item["formula"] = row.predicted->formula;
            }
            if (row.computed && row.predicted) item["match"] = (row.value == row.predicted->value);
            if (!row.note.empty()) item["note"] = row.note;
            out.push_back(item);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::vector<std::vector<std::string>> table;
        std::vector<std::string> header;
        for (const RangeSpec& r : ranges) header.push_back(r.var);
        header.insert(header.end(), {"vertices", inv, "predicted", "formula", "match"});
        table.push_back(header);
        for (const SweepRow& row : rows) {
            std::vector<std::string> line;
            for (const RangeSpec& r : ranges) line.push_back(std::to_string(row.bindings.at(r.var)));
            line.push_back(std::to_string(row.n));
            line.push_back(row.computed ? std::to_string(row.value) : "skip: " + row.note);
            line.push_back(row.predicted ? std::to_string(row.predicted->value) : "-");
            line.push_back(row.predicted ? row.predicted->formula : "none");
            line.push_back(row.predicted ? (match_text(row).empty() ? "-" : match_text(row)) : "-");
            table.push_back(line);
        }
        if (opt.format == "csv") {
            for (const std::vector<std::string>& line : table) {
                for (std::size_t i = 0; i < line.size(); ++i) {
                    if (i) std::cout << ',';
                    std::cout << csv_field(line[i]);
                }
                std::cout << "\n";
            }
        } else {
            std::vector<std::size_t> width(table[0].size(), 0);
            for (const std::vector<std::string>& line : table) {
                for (std::size_t i = 0; i < line.size(); ++i) {
                    width[i] = std::max(width[i], line[i].size());
                }
            }
            for (const std::vector<std::string>& line : table) {
                for (std::size_t i = 0; i < line.size(); ++i) {
                    if (i) std::cout << "  ";
                    std::cout << std::left << std::setw(static_cast<int>(width[i])) << line[i];
                }
                std::cout << "\n";
            }
        }
    }

    for (const SweepRow& row : rows) {
        if (!row.note.empty()) std::cerr << "warning: skipped a cell: " << row.note << "\n";
        if (row.computed && row.predicted && row.value != row.predicted->value) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact grundy domination sequences, zero forcing, and hyperedge covering"};
    app.require_subcommand(1);

    Options opt;
    std::string spec;
    std::string invariant;
    std::string suite;
    std::string family_text;
    std::vector<std::string> ranges;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "table", "csv"}));
        cmd->add_option("--seed", opt.seed, "rng seed for the random suites");
        cmd->add_option("--samples", opt.samples, "random sample count (0 = suite default)");
        cmd->add_option("--n-max", opt.n_max, "random graph size cap (0 = suite default)");
        cmd->add_option("--budget", opt.budget, "search budget")
            ->check(CLI::IsMember({"small", "full"}));
        cmd->add_option("--threads", opt.threads, "worker threads for sweep cells")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--allow-large", opt.allow_large,
                      "lift the small-graph guard on alpha/beta/gamma-k");
        cmd->add_option("--k", opt.k, "parameter for grz-k, kf, gamma-k")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* c_compute =
        app.add_subcommand("compute", "compute one invariant on a family expression or graph file");
    c_compute->add_option("spec", spec, "family expression (e.g. cart(cyc:5,path:3)) or file path")
        ->required();
    c_compute
        ->add_option("invariant", invariant,
                     "one of gr grt grz grl grz-k zf kf ptime alpha beta gamma-k rho rho-gr")
        ->required();
    add_common(c_compute);

    CLI::App* c_verify = app.add_subcommand("verify", "run a named verification suite");
    c_verify
        ->add_option("suite", suite,
                     "one of duality products sierpinski lattice factor2 alpha-beta reduction "
                     "ptime kz")
        ->required();
    add_common(c_verify);

    CLI::App* c_sweep =
        app.add_subcommand("sweep", "tabulate an invariant over family parameter ranges");
    c_sweep->add_option("family", family_text, "family expression with variables, e.g. cart(cyc:s,path:t)")
        ->required();
    c_sweep->add_option("invariant", invariant, "invariant name")->required();
    c_sweep->add_option("--range", ranges, "variable range var=lo..hi (repeat per variable)");
    add_common(c_sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_compute->parsed()) return run_compute(spec, invariant, opt);
        if (c_verify->parsed()) return run_verify(suite, opt);
        return run_sweep(family_text, invariant, ranges, opt);
    } catch (const domseq::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
