// circ: circulant-graph distance partitions, bounds, censuses, exhaustive
// search, and table reproduction on one command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 computational error.

#include <algorithm>
#include <cinttypes>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "circulant/analysis.hpp"
#include "circulant/bounds.hpp"
#include "circulant/catalog.hpp"
#include "circulant/errors.hpp"
#include "circulant/partition.hpp"
#include "circulant/search.hpp"
#include "circulant/tables.hpp"
#include "circulant/verify.hpp"

namespace {

using namespace circulant;

struct GlobalOpts {
    bool json = false;
    bool csv = false;
    int threads = 0;
    std::int64_t budget = 100'000'000;

    SearchOptions search() const { return SearchOptions{threads, budget, false}; }
};

struct SpecArgs {
    std::int64_t n = 0;
    std::string gens;
    bool half = false;
    int degree = 0;
    std::int64_t diameter = 0;
    int class_id = 1;
};

void add_spec_flags(CLI::App* cmd, SpecArgs& a) {
    cmd->add_option("--n", a.n, "order of the graph");
    cmd->add_option("--gens", a.gens, "comma-separated generators, e.g. 1,5");
    cmd->add_flag("--half", a.half, "include the self-inverse element n/2");
    cmd->add_option("--degree", a.degree, "catalog degree (2..9)");
    cmd->add_option("--diameter", a.diameter, "catalog diameter");
    cmd->add_option("--class", a.class_id, "catalog isomorphism class (default 1)");
}

std::vector<std::int64_t> parse_gens(const std::string& text) {
    std::vector<std::int64_t> gens;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) gens.push_back(std::stoll(item));
    return gens;
}

GraphSpec resolve_spec(const SpecArgs& a, Catalog& cat) {
    if (a.n > 0) return GraphSpec(a.n, parse_gens(a.gens), a.half);
    if (a.degree > 0 && a.diameter > 0) {
        for (const FamilyEntry& e : cat.entries(a.degree, a.diameter))
            if (!e.class_id || *e.class_id == a.class_id) return *e.spec;
        throw UnknownFamily("no catalog entry for degree " + std::to_string(a.degree) +
                            ", diameter " + std::to_string(a.diameter) + ", class " +
                            std::to_string(a.class_id));
    }
    throw Error("select a graph with --n/--gens or --degree/--diameter");
}

std::string cell_or_dash(std::int64_t v, bool absent) { return absent ? "-" : std::to_string(v); }

int cmd_profile(const GlobalOpts& g, const SpecArgs& a, bool defects_view) {
    Catalog cat(g.search());
    GraphSpec spec = resolve_spec(a, cat);
    LevelAssignment levels = distance_levels(spec);
    DefectProfile defects = level_defects(levels);
    int d = spec.degree();

    if (g.json) {
        nlohmann::json j;
        j["spec"] = nlohmann::json::parse(spec.to_json());
        j["degree"] = d;
        j["diameter"] = levels.diameter;
        j["profile"] = levels.profile;
        j["defects"] = defects;
        j["total_defect"] = total_defect(levels);
        j["maximal_prefix"] = maximal_prefix(levels);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (g.csv) {
        std::cout << "level,size,lmac,defect\n";
        for (std::size_t l = 0; l < levels.profile.size(); ++l)
            std::cout << l << "," << levels.profile[l] << ","
                      << (l == 0 ? 1 : lmac(d, static_cast<std::int64_t>(l))) << "," << defects[l]
                      << "\n";
        return 0;
    }
    std::cout << spec.to_string() << "  degree " << d << "  diameter " << levels.diameter << "\n";
    std::cout << "level  size  lmac  defect\n";
    for (std::size_t l = 0; l < levels.profile.size(); ++l)
        std::cout << l << "\t" << levels.profile[l] << "\t"
                  << (l == 0 ? 1 : lmac(d, static_cast<std::int64_t>(l))) << "\t" << defects[l]
                  << "\n";
    if (defects_view)
        std::cout << "total defect " << total_defect(levels) << ", maximal through level "
                  << maximal_prefix(levels) << "\n";
    return 0;
}

int cmd_bound(const GlobalOpts& g, int degree, std::int64_t diameter) {
    std::int64_t mac = mac_bound(degree, diameter);
    if (g.json) {
        nlohmann::json j;
        j["degree"] = degree;
        j["diameter"] = diameter;
        j["mac_bound"] = mac;
        if (degree <= 9) j["last_maximal_level"] = last_maximal_level(degree, diameter);
        std::vector<std::int64_t> row;
        for (std::int64_t l = 1; l <= diameter; ++l) row.push_back(lmac(degree, l));
        j["lmac"] = row;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (g.csv) {
        std::cout << "level,lmac\n";
        for (std::int64_t l = 1; l <= diameter; ++l)
            std::cout << l << "," << lmac(degree, l) << "\n";
        return 0;
    }
    std::cout << "M_AC(" << degree << "," << diameter << ") = " << mac << "\n";
    if (degree <= 9)
        std::cout << "last maximal level: " << last_maximal_level(degree, diameter) << "\n";
    std::cout << "level sizes capped at:";
    for (std::int64_t l = 1; l <= diameter; ++l) std::cout << " " << lmac(degree, l);
    std::cout << "\n";
    return 0;
}

int cmd_girth(const GlobalOpts& g, const SpecArgs& a) {
    Catalog cat(g.search());
    GraphSpec spec = resolve_spec(a, cat);
    auto og = odd_girth(spec);
    if (g.json) {
        nlohmann::json j;
        j["spec"] = nlohmann::json::parse(spec.to_json());
        j["odd_girth"] = og ? nlohmann::json(*og) : nlohmann::json();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (og) std::cout << *og << "\n";
    else std::cout << "none (bipartite)\n";
    return 0;
}

int print_array(const GlobalOpts& g, const TotalIntersectionArray& t) {
    std::size_t k = t.levels() - 1;
    if (g.json) {
        nlohmann::json j;
        auto row = [&](const std::vector<std::int64_t>& v, bool skip_first, bool skip_last) {
            nlohmann::json r = nlohmann::json::array();
            for (std::size_t l = 0; l < v.size(); ++l) {
                bool absent = (skip_first && l == 0) || (skip_last && l == v.size() - 1);
                r.push_back(absent ? nlohmann::json() : nlohmann::json(v[l]));
            }
            return r;
        };
        j["back"] = row(t.back, true, false);
        j["same"] = row(t.same, false, false);
        j["forward"] = row(t.fwd, false, true);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (g.csv) {
        std::cout << "level,back,same,forward\n";
        for (std::size_t l = 0; l <= k; ++l)
            std::cout << l << "," << cell_or_dash(t.back[l], l == 0) << "," << t.same[l] << ","
                      << cell_or_dash(t.fwd[l], l == k) << "\n";
        return 0;
    }
    auto line = [&](const char* name, const std::vector<std::int64_t>& v, bool sf, bool sl) {
        std::cout << name << ":";
        for (std::size_t l = 0; l < v.size(); ++l)
            std::cout << " "
                      << cell_or_dash(v[l], (sf && l == 0) || (sl && l == v.size() - 1));
        std::cout << "\n";
    };
    line("back   ", t.back, true, false);
    line("same   ", t.same, false, false);
    line("forward", t.fwd, false, true);
    return 0;
}

int cmd_array(const GlobalOpts& g, const SpecArgs& a, const std::string& file,
              std::int64_t root) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw Error("cannot open adjacency file " + file);
        AdjacencyGraph graph = load_adjacency(in);
        return print_array(g, total_intersection_array(graph, root));
    }
    Catalog cat(g.search());
    GraphSpec spec = resolve_spec(a, cat);
    return print_array(g, total_intersection_array(distance_levels(spec)));
}

int cmd_types(const GlobalOpts& g, const SpecArgs& a) {
    Catalog cat(g.search());
    GraphSpec spec = resolve_spec(a, cat);
    LevelAssignment levels = distance_levels(spec);
    TypeCensus census = vertex_types(levels);
    int d = spec.degree();
    if (g.json) {
        nlohmann::json j;
        j["spec"] = nlohmann::json::parse(spec.to_json());
        j["t1_total"] = census.t1_total;
        j["levels"] = nlohmann::json::array();
        for (std::int64_t l = 0; l <= levels.diameter; ++l)
            j["levels"].push_back({{"level", l}, {"counts", census.counts[l]}});
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (g.csv) {
        std::cout << "level,total";
        for (int s = 0; s <= d; ++s) std::cout << ",T" << s;
        std::cout << "\n";
        for (std::int64_t l = 0; l <= levels.diameter; ++l) {
            std::cout << l << "," << levels.profile[l];
            for (int s = 0; s <= d; ++s) std::cout << "," << census.at(l, s);
            std::cout << "\n";
        }
        return 0;
    }
    std::cout << spec.to_string() << "  T1 total " << census.t1_total << "\n";
    std::cout << "level total";
    for (int s = 0; s <= d; ++s) std::cout << "  T" << s;
    std::cout << "\n";
    for (std::int64_t l = 0; l <= levels.diameter; ++l) {
        std::cout << l << "\t" << levels.profile[l];
        for (int s = 0; s <= d; ++s) std::cout << "\t" << census.at(l, s);
        std::cout << "\n";
    }
    return 0;
}

int cmd_search(const GlobalOpts& g, int degree, std::int64_t diameter, std::int64_t n_max) {
    SearchOptions opts = g.search();
    opts.progress = !g.json;
    if (n_max <= 0) n_max = mac_bound(degree, diameter);
    SearchReport r = extremal_search(degree, diameter, n_max, opts);
    if (g.json) {
        std::cout << r.to_json() << "\n";
        return 0;
    }
    if (r.best_order == 0) {
        std::cout << "no witness up to n=" << n_max << "\n";
        return 0;
    }
    std::cout << "best order " << r.best_order << " (searched n <= " << n_max << ", "
              << r.explored << " candidate sets)\n";
    std::cout << r.multiplier_classes << " multiplier class(es):\n";
    for (const GraphSpec& w : r.witnesses) std::cout << "  " << w.to_string() << "\n";
    return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& scope_name, std::int64_t kmax) {
    Catalog cat(g.search());
    VerifyOutcome outcome = run_verify(parse_scope(scope_name), kmax, cat, g.search());
    if (g.json) {
        std::cout << outcome.to_json() << "\n";
    } else {
        for (const VerifyCheck& c : outcome.checks)
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                      << (c.pass ? "" : "\n       expected: " + c.expected +
                                            "\n       actual:   " + c.actual)
                      << "\n";
        std::cout << outcome.passed() << " passed, " << outcome.failed() << " failed\n";
    }
    return outcome.all_pass() ? 0 : 1;
}

int cmd_tables(const GlobalOpts&, const std::string& id) {
    auto ids = table_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        std::cerr << "error: unknown table id " << id << " (expected";
        for (const auto& t : ids) std::cerr << " " << t;
        std::cerr << ")\n";
        return 2;
    }
    Catalog cat;
    std::cout << table_csv(id, cat);
    return 0;
}

int cmd_catalog(const GlobalOpts& g, std::int64_t kmax, const std::string& out_path) {
    Catalog cat(g.search());
    std::string text = cat.to_json(kmax);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write " + out_path);
        out << text << "\n";
        return 0;
    }
    if (g.json) {
        std::cout << text << "\n";
        return 0;
    }
    for (int d = 2; d <= 9; ++d)
        for (std::int64_t k : cat.coverage(d, kmax))
            for (const FamilyEntry& e : cat.entries(d, k))
                std::cout << "d=" << e.degree << " k=" << e.diameter << " n=" << e.order
                          << (e.class_id ? " class " + std::to_string(*e.class_id) : std::string())
                          << "  " << e.spec->to_string() << "  [" << to_string(e.provenance)
                          << "]\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circulant graph distance partitions, bounds, and search"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_flag("--json", g.json, "machine-readable JSON output");
    app.add_flag("--csv", g.csv, "CSV output");
    app.add_option("--threads", g.threads, "worker cap for search (0 = all cores)");
    app.add_option("--budget", g.budget, "candidate budget for search");

    SpecArgs prof_args, gir_args, arr_args, typ_args, def_args;

    CLI::App* profile = app.add_subcommand("profile", "distance partition profile and defects");
    add_spec_flags(profile, prof_args);

    CLI::App* defects = app.add_subcommand("defects", "level defects against the bound");
    add_spec_flags(defects, def_args);

    int bd_degree = 0;
    std::int64_t bd_diameter = 0;
    CLI::App* bound = app.add_subcommand("bound", "Abelian Cayley order and level bounds");
    bound->add_option("--degree", bd_degree, "degree d >= 2")->required();
    bound->add_option("--diameter", bd_diameter, "diameter k >= 1")->required();

    CLI::App* girth = app.add_subcommand("girth", "odd girth via the parity double cover");
    add_spec_flags(girth, gir_args);

    std::string arr_file;
    std::int64_t arr_root = 0;
    CLI::App* array = app.add_subcommand("array", "total intersection array");
    add_spec_flags(array, arr_args);
    array->add_option("--file", arr_file, "adjacency-list file instead of a circulant spec");
    array->add_option("--root", arr_root, "root vertex for --file graphs");

    CLI::App* types = app.add_subcommand("types", "vertex-type census by level");
    add_spec_flags(types, typ_args);

    int s_degree = 0;
    std::int64_t s_diameter = 0, s_nmax = 0;
    CLI::App* search = app.add_subcommand("search", "exhaustive extremal-order search");
    search->add_option("--degree", s_degree)->required();
    search->add_option("--diameter", s_diameter)->required();
    search->add_option("--nmax", s_nmax, "largest order to scan (default: the Abelian Cayley bound)");

    std::string v_scope = "all";
    std::int64_t v_kmax = 12;
    CLI::App* verify = app.add_subcommand("verify", "run the invariant suites over the catalog");
    verify->add_option("--scope", v_scope, "bounds|defects|girth|types|t1|search|all");
    verify->add_option("--kmax", v_kmax, "largest diameter to verify");

    std::string t_id;
    CLI::App* tables = app.add_subcommand("tables", "emit a reference table as CSV");
    tables->add_option("id", t_id, "t2|t3|t5|t6|t7|t7a|t7b|t7c|t8")->required();

    std::int64_t c_kmax = 12;
    std::string c_out;
    CLI::App* catalog = app.add_subcommand("catalog", "list or export the graph catalog");
    catalog->add_option("--kmax", c_kmax, "largest diameter to include");
    catalog->add_option("--out", c_out, "write catalog JSON to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (profile->parsed()) return cmd_profile(g, prof_args, false);
        if (defects->parsed()) return cmd_profile(g, def_args, true);
        if (bound->parsed()) return cmd_bound(g, bd_degree, bd_diameter);
        if (girth->parsed()) return cmd_girth(g, gir_args);
        if (array->parsed()) return cmd_array(g, arr_args, arr_file, arr_root);
        if (types->parsed()) return cmd_types(g, typ_args);
        if (search->parsed()) return cmd_search(g, s_degree, s_diameter, s_nmax);
        if (verify->parsed()) return cmd_verify(g, v_scope, v_kmax);
        if (tables->parsed()) return cmd_tables(g, t_id);
        if (catalog->parsed()) return cmd_catalog(g, c_kmax, c_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
