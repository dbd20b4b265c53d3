#include "surfpoly/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "surfpoly/errors.hpp"

namespace surfpoly {

namespace {

using nlohmann::json;

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> split_ws(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

bool parse_int(const std::string& text, int& out) {
    try {
        std::size_t used = 0;
        out = std::stoi(text, &used);
        return used == text.size();
    } catch (...) {
        return false;
    }
}

struct MapBuilder {
    int vertex_count = -1;
    int isolated = 0;
    std::vector<std::vector<std::string>> rotations;  // end tokens per vertex
    std::optional<std::vector<std::string>> marked_names;

    MapFile build() const {
        if (vertex_count < 0) throw InputError("missing 'vertices:' line");
        if (static_cast<int>(rotations.size()) != vertex_count)
            throw InputError("expected " + std::to_string(vertex_count) + " vertex lines, got " +
                             std::to_string(rotations.size()));

        // edge indices in order of first appearance
        std::vector<std::string> names;
        std::map<std::string, int> index;
        std::map<std::pair<int, int>, int> owner;  // (edge, end) -> declaring count
        std::vector<std::vector<int>> vertex_half_edges(rotations.size());
        for (std::size_t v = 0; v < rotations.size(); ++v) {
            for (const std::string& tok : rotations[v]) {
                const auto dot = tok.rfind('.');
                if (dot == std::string::npos || dot == 0 || dot + 2 != tok.size())
                    throw InputError("bad half-edge token '" + tok + "'");
                const std::string name = tok.substr(0, dot);
                const char end_char = tok[dot + 1];
                if (end_char != '0' && end_char != '1')
                    throw InputError("edge end must be .0 or .1 in '" + tok + "'");
                auto [it, inserted] = index.emplace(name, static_cast<int>(names.size()));
                if (inserted) names.push_back(name);
                const int end = end_char - '0';
                if (++owner[{it->second, end}] > 1)
                    throw InputError("duplicate half-edge '" + tok + "'");
                vertex_half_edges[v].push_back(2 * it->second + end);
            }
        }
        for (int e = 0; e < static_cast<int>(names.size()); ++e)
            for (int end = 0; end < 2; ++end)
                if (!owner.count({e, end}))
                    throw InputError("edge '" + names[e] + "' is missing end ." +
                                     std::to_string(end));

        std::vector<int> sigma(2 * names.size());
        int empty_rotations = 0;
        for (const auto& hs : vertex_half_edges) {
            if (hs.empty()) {
                ++empty_rotations;
                continue;
            }
            for (std::size_t i = 0; i < hs.size(); ++i)
                sigma[static_cast<std::size_t>(hs[i])] = hs[(i + 1) % hs.size()];
        }

        MapFile out;
        out.graph = RibbonGraph::from_sigma(std::move(sigma), isolated + empty_rotations);
        out.edge_names = names;
        if (marked_names) {
            EdgeSubset marked;
            for (const std::string& name : *marked_names) {
                const auto it = index.find(name);
                if (it == index.end())
                    throw InputError("marked edge '" + name + "' is not declared");
                marked = marked.with(it->second);
            }
            out.marked = marked;
        }
        return out;
    }
};

MapFile parse_map_text(const std::string& text) {
    std::istringstream in(text);
    MapBuilder builder;
    bool header_seen = false;
    int next_vertex = 0;
    for (std::string raw; std::getline(in, raw);) {
        const std::vector<std::string> toks = split_ws(strip_comment(raw));
        if (toks.empty()) continue;
        if (!header_seen) {
            if (toks.size() != 2 || toks[0] != "ribbon" || toks[1] != "v1")
                throw InputError("expected header 'ribbon v1'");
            header_seen = true;
            continue;
        }
        if (toks[0] == "vertices:") {
            if (toks.size() != 2 || !parse_int(toks[1], builder.vertex_count) ||
                builder.vertex_count < 0)
                throw InputError("bad 'vertices:' line");
        } else if (toks[0] == "vertex") {
            if (toks.size() < 2 || toks[1].back() != ':')
                throw InputError("bad vertex line: '" + raw + "'");
            int idx = -1;
            if (!parse_int(toks[1].substr(0, toks[1].size() - 1), idx) || idx != next_vertex)
                throw InputError("vertex lines must be numbered consecutively from 0");
            ++next_vertex;
            builder.rotations.emplace_back(toks.begin() + 2, toks.end());
        } else if (toks[0] == "isolated:") {
            if (toks.size() != 2 || !parse_int(toks[1], builder.isolated) ||
                builder.isolated < 0)
                throw InputError("bad 'isolated:' line");
        } else if (toks[0] == "marked:") {
            builder.marked_names.emplace(toks.begin() + 1, toks.end());
        } else {
            throw InputError("unrecognized line: '" + raw + "'");
        }
    }
    if (!header_seen) throw InputError("empty map file");
    return builder.build();
}

MapFile parse_map_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("bad JSON: ") + e.what());
    }
    try {
        if (j.value("format", "") != "ribbon" || j.value("version", 0) != 1)
            throw InputError("expected {\"format\": \"ribbon\", \"version\": 1}");
        MapBuilder builder;
        const auto& vertices = j.at("vertices");
        builder.vertex_count = static_cast<int>(vertices.size());
        for (const auto& rot : vertices)
            builder.rotations.push_back(rot.get<std::vector<std::string>>());
        builder.isolated = j.value("isolated", 0);
        if (j.contains("marked"))
            builder.marked_names = j.at("marked").get<std::vector<std::string>>();
        return builder.build();
    } catch (const json::exception& e) {
        throw InputError(std::string("bad map JSON: ") + e.what());
    }
}

/// Rotation token lists in writer order: vertices by smallest half-edge,
/// each rotation starting at its smallest half-edge.
std::vector<std::vector<std::string>> rotation_tokens(const MapFile& map) {
    const RibbonGraph& g = map.graph;
    std::vector<std::vector<std::string>> out;
    std::vector<char> seen(static_cast<std::size_t>(g.half_edge_count()), 0);
    for (int h = 0; h < g.half_edge_count(); ++h) {
        if (seen[h]) continue;
        std::vector<std::string> rot;
        for (int t = h; !seen[t]; t = g.next_around_vertex(t)) {
            seen[t] = 1;
            rot.push_back(map.edge_names[static_cast<std::size_t>(RibbonGraph::edge_of(t))] +
                          '.' + static_cast<char>('0' + t % 2));
        }
        out.push_back(std::move(rot));
    }
    return out;
}

}  // namespace

std::vector<std::string> default_edge_names(int edge_count) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(edge_count));
    for (int e = 0; e < edge_count; ++e)
        names.push_back(e < 26 ? std::string(1, static_cast<char>('a' + e))
                               : "e" + std::to_string(e));
    return names;
}

MapFile parse_map(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_map_json(text) : parse_map_text(text);
    }
    throw InputError("empty map file");
}

MapFile read_map(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_map(buffer.str());
}

MapFile read_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    return read_map(in);
}

std::string format_map(const MapFile& map) {
    if (static_cast<int>(map.edge_names.size()) != map.graph.edge_count())
        throw Error("edge name list does not match the edge count");
    std::ostringstream out;
    const auto rotations = rotation_tokens(map);
    out << "ribbon v1\n";
    out << "vertices: " << rotations.size() << "\n";
    for (std::size_t v = 0; v < rotations.size(); ++v) {
        out << "vertex " << v << ":";
        for (const std::string& tok : rotations[v]) out << ' ' << tok;
        out << "\n";
    }
    if (map.graph.isolated_vertex_count() > 0)
        out << "isolated: " << map.graph.isolated_vertex_count() << "\n";
    if (map.marked) {
        out << "marked:";
        for (int e : map.marked->elements())
            out << ' ' << map.edge_names[static_cast<std::size_t>(e)];
        out << "\n";
    }
    return out.str();
}

std::string map_to_json(const MapFile& map, int indent) {
    if (static_cast<int>(map.edge_names.size()) != map.graph.edge_count())
        throw Error("edge name list does not match the edge count");
    json j;
    j["format"] = "ribbon";
    j["version"] = 1;
    j["vertices"] = rotation_tokens(map);
    j["isolated"] = map.graph.isolated_vertex_count();
    if (map.marked) {
        std::vector<std::string> names;
        for (int e : map.marked->elements())
            names.push_back(map.edge_names[static_cast<std::size_t>(e)]);
        j["marked"] = names;
    }
    return j.dump(indent);
}

std::vector<RankOracle> parse_matroids(const std::string& text) {
    std::istringstream in(text);
    std::vector<RankOracle> out;

    int n = -1;
    std::vector<std::pair<std::uint32_t, std::uint8_t>> entries;
    auto flush = [&] {
        if (n < 0) return;
        if (n > RankOracle::kMaxGroundSet)
            throw GroundSetTooLarge("matroid ground set exceeds 24");
        std::vector<std::uint8_t> table(std::size_t{1} << n);
        std::vector<char> present(table.size(), 0);
        for (const auto& [mask, rank] : entries) {
            if (mask >= table.size())
                throw InputError("subset mask out of range for n=" + std::to_string(n));
            if (present[mask]) throw InputError("duplicate subset in rank table");
            present[mask] = 1;
            table[mask] = rank;
        }
        if (static_cast<std::size_t>(std::count(present.begin(), present.end(), 1)) !=
            table.size())
            throw InputError("incomplete rank table: expected " +
                             std::to_string(table.size()) + " entries, got " +
                             std::to_string(entries.size()));
        out.push_back(RankOracle::from_table(n, std::move(table)));
        entries.clear();
        n = -1;
    };

    for (std::string raw; std::getline(in, raw);) {
        const std::vector<std::string> toks = split_ws(strip_comment(raw));
        if (toks.empty()) continue;
        if (toks[0] == "matroid") {
            flush();
            if (toks.size() != 2 || toks[1].rfind("n=", 0) != 0)
                throw InputError("expected 'matroid n=<int>'");
            if (!parse_int(toks[1].substr(2), n) || n < 0)
                throw InputError("bad ground set size in '" + raw + "'");
        } else {
            if (n < 0) throw InputError("rank line before 'matroid' header");
            if (toks.size() != 2) throw InputError("expected '<bitmask-hex> <rank>'");
            std::uint32_t mask = 0;
            try {
                std::size_t used = 0;
                mask = static_cast<std::uint32_t>(std::stoul(toks[0], &used, 16));
                if (used != toks[0].size()) throw InputError("");
            } catch (...) {
                throw InputError("bad subset mask '" + toks[0] + "'");
            }
            int rank = -1;
            if (!parse_int(toks[1], rank) || rank < 0 || rank > RankOracle::kMaxGroundSet)
                throw InputError("bad rank '" + toks[1] + "'");
            entries.emplace_back(mask, static_cast<std::uint8_t>(rank));
        }
    }
    flush();
    if (out.empty()) throw InputError("no matroid blocks found");
    return out;
}

std::vector<RankOracle> read_matroids_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matroids(buffer.str());
}

std::string format_matroid(const RankOracle& oracle) {
    std::ostringstream out;
    out << "matroid n=" << oracle.size() << "\n";
    const std::uint32_t full =
        (oracle.size() == 0) ? 0 : ((std::uint32_t{1} << oracle.size()) - 1);
    for (std::uint32_t h = 0;; ++h) {
        out << std::hex << h << std::dec << ' ' << oracle.rank(h) << "\n";
        if (h == full) break;
    }
    return out.str();
}

std::string poly_to_json(const LaurentPoly& poly, int indent) {
    json j;
    j["vars"] = poly.vars().names();
    json terms = json::array();
    for (const auto& [exps, coeff] : poly.terms()) {
        json term;
        term["exps"] = exps;
        term["coeff"] = coeff.get_str();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    j["text"] = poly.str();
    return j.dump(indent);
}

}  // namespace surfpoly
