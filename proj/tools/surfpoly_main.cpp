#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "surfpoly/embedded_graph.hpp"
#include "surfpoly/enumerate.hpp"
#include "surfpoly/errors.hpp"
#include "surfpoly/invariants.hpp"
#include "surfpoly/io.hpp"
#include "surfpoly/laurent.hpp"
#include "surfpoly/matroid.hpp"

namespace {

using nlohmann::json;
using namespace surfpoly;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;  // verify found a failing identity
constexpr int kExitInput = 2;      // unparseable input
constexpr int kExitSemantic = 3;   // valid input violating a precondition

bool is_matroid_file(const std::string& text) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        std::istringstream ls(line);
        std::string tok;
        if (ls >> tok) {
            if (tok[0] == '#') continue;
            return tok == "matroid";
        }
    }
    return false;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int edge_index(const MapFile& map, const std::string& name) {
    const auto it = std::find(map.edge_names.begin(), map.edge_names.end(), name);
    if (it == map.edge_names.end())
        throw SemanticError("no edge named '" + name + "' in the input");
    return static_cast<int>(it - map.edge_names.begin());
}

void emit_poly(const LaurentPoly& poly, bool as_json) {
    if (as_json)
        std::cout << poly_to_json(poly, 2) << "\n";
    else
        std::cout << poly.str() << "\n";
}

int cmd_compute(const std::string& path, const std::string& poly_name, bool as_json) {
    const std::string text = read_file(path);
    if (is_matroid_file(text)) {
        const std::vector<RankOracle> oracles = parse_matroids(text);
        if (poly_name == "tutte") {
            emit_poly(tutte(oracles.front()), as_json);
            return kExitOk;
        }
        if (poly_name == "lv") {
            if (oracles.size() < 2)
                throw SemanticError("lv on a matroid file needs two rank tables (M, M')");
            emit_poly(tutte_perspective(make_perspective(oracles[0], oracles[1])), as_json);
            return kExitOk;
        }
        throw SemanticError("polynomial '" + poly_name + "' is not defined for matroid input");
    }

    const MapFile map = parse_map(text);
    const EmbeddedGraph embedded =
        map.marked ? EmbeddedGraph(map.graph, *map.marked) : EmbeddedGraph::cellular(map.graph);
    if (poly_name == "krushkal") {
        emit_poly(krushkal(embedded), as_json);
        return kExitOk;
    }
    if (!embedded.is_cellular())
        throw NotCellular("polynomial '" + poly_name +
                          "' requires a cellular map; only krushkal accepts marked input");
    if (poly_name == "lv")
        emit_poly(las_vergnas(map.graph), as_json);
    else if (poly_name == "br")
        emit_poly(bollobas_riordan(map.graph), as_json);
    else if (poly_name == "tutte")
        emit_poly(tutte(cycle_matroid(map.graph)), as_json);
    else
        throw SemanticError("unknown polynomial '" + poly_name + "'");
    return kExitOk;
}

json verification_json(const GraphVerification& row) {
    json identities;
    identities["lv_specialization"] = row.lv_specialization;
    identities["br_reduction"] = row.br_reduction;
    identities["lv_duality"] = row.lv_duality;
    identities["krushkal_duality"] = row.krushkal_duality;
    identities["tutte_recovery"] = row.tutte_recovery;
    identities["parameter_identities"] = row.parameter_identities;
    identities["deletion_contraction"] = row.deletion_contraction;
    identities["matroid_checks"] = row.matroid_checks;
    identities["coefficient_sums"] = row.coefficient_sums;
    json out;
    out["canonical"] = row.canonical;
    out["identities"] = std::move(identities);
    out["pass"] = row.all();
    return out;
}

void print_verification_text(const GraphVerification& row) {
    const auto line = [](const char* name, bool ok) {
        std::cout << name << ": " << (ok ? "pass" : "FAIL") << "\n";
    };
    line("lv_specialization", row.lv_specialization);
    line("br_reduction", row.br_reduction);
    line("lv_duality", row.lv_duality);
    line("krushkal_duality", row.krushkal_duality);
    line("tutte_recovery", row.tutte_recovery);
    line("parameter_identities", row.parameter_identities);
    line("deletion_contraction", row.deletion_contraction);
    line("matroid_checks", row.matroid_checks);
    line("coefficient_sums", row.coefficient_sums);
}

int cmd_verify_file(const std::string& path, bool as_json) {
    const std::string text = read_file(path);
    if (is_matroid_file(text)) {
        const std::vector<RankOracle> oracles = parse_matroids(text);
        bool ok = true;
        json report;
        report["matroids"] = json::array();
        for (const RankOracle& m : oracles) {
            // construction already enforced the rank axioms
            const bool bases = m.bases_complement_dual();
            ok = ok && bases;
            json entry;
            entry["n"] = m.size();
            entry["rank"] = m.rank();
            entry["base_complement_duality"] = bases;
            report["matroids"].push_back(std::move(entry));
        }
        if (oracles.size() >= 2) {
            const Perspective p = make_perspective(oracles[0], oracles[1]);
            const bool recovery = verify_tutte_recovery(p);
            ok = ok && recovery;
            report["perspective"] = true;
            report["tutte_recovery"] = recovery;
        }
        report["pass"] = ok;
        if (as_json)
            std::cout << report.dump(2) << "\n";
        else
            std::cout << (ok ? "all identities hold\n" : "identity violation\n");
        return ok ? kExitOk : kExitViolation;
    }

    const MapFile map = parse_map(text);
    if (map.marked && *map.marked != map.graph.all_edges())
        throw NotCellular("verification requires a cellular map");
    const GraphVerification row = verify_all(map.graph);

    json edit_cases = json::array();
    for (int e = 0; e < map.graph.edge_count(); ++e) {
        const EditCaseReport r = verify_deletion_contraction_case(map.graph, e);
        json jc;
        jc["edge"] = map.edge_names[static_cast<std::size_t>(e)];
        jc["ordinary"] = r.ordinary();
        jc["relations"] = {r.krushkal_embedded_deletion, r.br_ribbon_deletion,
                           r.krushkal_recapped_deletion, r.lv_recapped_deletion};
        edit_cases.push_back(std::move(jc));
    }

    if (as_json) {
        json out = verification_json(row);
        out["edit_cases"] = std::move(edit_cases);
        std::cout << out.dump(2) << "\n";
    } else {
        print_verification_text(row);
    }
    return row.all() ? kExitOk : kExitViolation;
}

int cmd_verify_sweep(int max_edges, int workers, bool as_json) {
    const SweepReport report = sweep_verify(max_edges, workers);
    if (as_json) {
        json out;
        out["maps"] = report.maps_checked;
        out["pass"] = report.all_pass;
        json rows = json::array();
        for (const GraphVerification& row : report.rows) rows.push_back(verification_json(row));
        out["results"] = std::move(rows);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "maps checked: " << report.maps_checked << "\n";
        const auto aggregate = [&](const char* name, auto member) {
            int passed = 0;
            for (const GraphVerification& row : report.rows)
                if (row.*member) ++passed;
            std::cout << name << ": " << (passed == report.maps_checked ? "pass" : "FAIL") << " ("
                      << passed << "/" << report.maps_checked << ")\n";
        };
        aggregate("lv_specialization", &GraphVerification::lv_specialization);
        aggregate("br_reduction", &GraphVerification::br_reduction);
        aggregate("lv_duality", &GraphVerification::lv_duality);
        aggregate("krushkal_duality", &GraphVerification::krushkal_duality);
        aggregate("tutte_recovery", &GraphVerification::tutte_recovery);
        aggregate("parameter_identities", &GraphVerification::parameter_identities);
        aggregate("deletion_contraction", &GraphVerification::deletion_contraction);
        aggregate("matroid_checks", &GraphVerification::matroid_checks);
        aggregate("coefficient_sums", &GraphVerification::coefficient_sums);
    }
    return report.all_pass ? kExitOk : kExitViolation;
}

int cmd_edit(const std::string& path, const std::string& delete_embedded,
             const std::string& delete_ribbon, const std::string& contract,
             const std::string& out_path, bool as_json) {
    const MapFile map = parse_map(read_file(path));
    MapFile result;
    if (!delete_embedded.empty()) {
        const int e = edge_index(map, delete_embedded);
        const EmbeddedGraph embedded = map.marked ? EmbeddedGraph(map.graph, *map.marked)
                                                  : EmbeddedGraph::cellular(map.graph);
        const EmbeddedGraph edited = embedded.delete_marked(e);
        result.graph = edited.carrier();
        result.edge_names = map.edge_names;
        result.marked = edited.marked();
    } else {
        if (map.marked && *map.marked != map.graph.all_edges())
            throw NotCellular("ribbon edits require a cellular map");
        const std::string& name = !delete_ribbon.empty() ? delete_ribbon : contract;
        const int e = edge_index(map, name);
        result.graph = !delete_ribbon.empty() ? map.graph.delete_edge(e)
                                              : map.graph.contract_edge(e);
        result.edge_names = map.edge_names;
        result.edge_names.erase(result.edge_names.begin() + e);
    }

    const std::string text = as_json ? map_to_json(result, 2) + "\n" : format_map(result);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write file: " + out_path);
        out << text;
    }
    return kExitOk;
}

MapInvariant invariant_from_name(const std::string& name) {
    if (name == "krushkal") return MapInvariant::Krushkal;
    if (name == "lv") return MapInvariant::LasVergnas;
    if (name == "br") return MapInvariant::BollobasRiordan;
    if (name == "iso") return MapInvariant::IsoClass;
    throw SemanticError("unknown invariant '" + name + "'");
}

int cmd_search(int edges, const std::string& filters, int max_vertices,
               const std::string& equal, const std::string& distinct, int workers) {
    EnumOptions options;
    options.max_vertices = max_vertices;
    std::istringstream fs(filters);
    for (std::string f; std::getline(fs, f, ',');) {
        if (f.empty()) continue;
        if (f == "connected")
            options.connected = true;
        else if (f == "one-vertex")
            options.one_vertex = true;
        else if (f == "one-face")
            options.one_face = true;
        else
            throw SemanticError("unknown filter '" + f + "'");
    }

    const std::vector<RibbonGraph> pool = all_maps(edges, options);
    const std::vector<CollisionPair> pairs =
        search_collisions(pool, invariant_from_name(equal), invariant_from_name(distinct),
                          workers);

    json out;
    out["pool"] = pool.size();
    out["pairs"] = json::array();
    for (const CollisionPair& pair : pairs) {
        json jp;
        jp["equal_value"] = pair.equal_value;
        for (const char* side : {"first", "second"}) {
            const RibbonGraph& g = (side[0] == 'f') ? pair.first : pair.second;
            json jg;
            jg["canonical"] = g.canonical_form();
            MapFile mf{g, default_edge_names(g.edge_count()), std::nullopt};
            jg["map"] = json::parse(map_to_json(mf));
            jg["value"] = (side[0] == 'f') ? pair.first_value : pair.second_value;
            jp[side] = std::move(jg);
        }
        out["pairs"].push_back(std::move(jp));
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polynomial invariants of graphs embedded in orientable surfaces"};
    app.require_subcommand(1);

    int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    auto* compute = app.add_subcommand("compute", "Compute a polynomial invariant");
    std::string compute_file, compute_poly;
    bool compute_json = false;
    compute->add_option("file", compute_file, "input map or matroid file")->required();
    compute->add_option("--poly", compute_poly, "krushkal | lv | br | tutte")
        ->required()
        ->check(CLI::IsMember({"krushkal", "lv", "br", "tutte"}));
    compute->add_flag("--json", compute_json, "emit JSON");

    auto* verify = app.add_subcommand("verify", "Verify the polynomial identities");
    std::string verify_file;
    int sweep_edges = -1;
    bool verify_json = false;
    verify->add_option("file", verify_file, "input map or matroid file");
    verify->add_option("--sweep", sweep_edges, "verify all connected maps with <= N edges")
        ->check(CLI::Range(0, 6));
    verify->add_option("--workers", workers, "parallel workers (results are independent)");
    verify->add_flag("--json", verify_json, "emit JSON");

    auto* edit = app.add_subcommand("edit", "Delete or contract an edge");
    std::string edit_file, edit_del_emb, edit_del_rib, edit_contract, edit_out;
    bool edit_json = false;
    edit->add_option("file", edit_file, "input map file")->required();
    auto* opt_de = edit->add_option("--delete-embedded", edit_del_emb,
                                    "unmark an edge, keeping the ambient surface");
    auto* opt_dr = edit->add_option("--delete-ribbon", edit_del_rib,
                                    "delete an edge and re-cap the surface");
    auto* opt_co = edit->add_option("--contract", edit_contract, "contract an edge");
    opt_de->excludes(opt_dr, opt_co);
    opt_dr->excludes(opt_de, opt_co);
    opt_co->excludes(opt_de, opt_dr);
    edit->add_option("-o,--output", edit_out, "output file (default stdout)");
    edit->add_flag("--json", edit_json, "emit the JSON map format");

    auto* search = app.add_subcommand("search", "Search a pool for invariant collisions");
    int search_edges = 4, search_max_vertices = 0;
    std::string search_filters, search_equal = "lv", search_distinct = "krushkal";
    search->add_option("--edges", search_edges, "maximum edge count of the pool")
        ->check(CLI::Range(0, 6));
    search->add_option("--filters", search_filters,
                       "comma list of connected, one-vertex, one-face");
    search->add_option("--max-vertices", search_max_vertices, "cap on vertices (0 = none)");
    search->add_option("--equal", search_equal, "invariant that must agree")
        ->check(CLI::IsMember({"krushkal", "lv", "br"}));
    search->add_option("--distinct", search_distinct, "invariant that must differ")
        ->check(CLI::IsMember({"krushkal", "lv", "br", "iso"}));
    search->add_option("--workers", workers, "parallel workers (results are independent)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return cmd_compute(compute_file, compute_poly, compute_json);
        if (verify->parsed()) {
            if ((sweep_edges >= 0) == !verify_file.empty()) {
                std::cerr << "error: verify needs exactly one of a file or --sweep\n";
                return kExitInput;
            }
            return sweep_edges >= 0 ? cmd_verify_sweep(sweep_edges, workers, verify_json)
                                    : cmd_verify_file(verify_file, verify_json);
        }
        if (edit->parsed()) {
            if (edit_del_emb.empty() && edit_del_rib.empty() && edit_contract.empty()) {
                std::cerr << "error: edit needs one of --delete-embedded, --delete-ribbon, "
                             "--contract\n";
                return kExitInput;
            }
            return cmd_edit(edit_file, edit_del_emb, edit_del_rib, edit_contract, edit_out,
                            edit_json);
        }
        if (search->parsed())
            return cmd_search(search_edges, search_filters, search_max_vertices, search_equal,
                              search_distinct, workers);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    }
    return kExitInput;
}
