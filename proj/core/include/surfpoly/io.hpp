#ifndef SURFPOLY_IO_HPP
#define SURFPOLY_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "surfpoly/edge_subset.hpp"
#include "surfpoly/laurent.hpp"
#include "surfpoly/matroid.hpp"
#include "surfpoly/ribbon_graph.hpp"

namespace surfpoly {

/// A ribbon graph together with its file-level edge names; `marked` is
/// present when the file describes an embedded graph (carrier plus marks).
struct MapFile {
    RibbonGraph graph;
    std::vector<std::string> edge_names;
    std::optional<EdgeSubset> marked;
};

/// Default edge names a, b, .., z, e26, e27, ..
std::vector<std::string> default_edge_names(int edge_count);

/// Parses the ribbon-graph text format:
///   ribbon v1
///   vertices: <k>
///   vertex <i>: <name>.<0|1> ...
///   isolated: <n>          (optional)
///   marked: <name> ...     (optional; presence means an embedded graph)
/// Edge indices follow the order of first appearance. '#' starts a comment.
/// A leading '{' selects the JSON mirror of the same data instead.
MapFile parse_map(const std::string& text);
MapFile read_map(std::istream& in);
MapFile read_map_file(const std::string& path);

std::string format_map(const MapFile& map);
std::string map_to_json(const MapFile& map, int indent = -1);

/// Rank-table format, one or more blocks:
///   matroid n=<int>
///   <bitmask-hex> <rank>      (all 2^n lines required)
std::vector<RankOracle> parse_matroids(const std::string& text);
std::vector<RankOracle> read_matroids_file(const std::string& path);
std::string format_matroid(const RankOracle& oracle);

/// {"vars": [...], "terms": [{"exps": [...], "coeff": "..."}], "text": "..."}
std::string poly_to_json(const LaurentPoly& poly, int indent = -1);

}  // namespace surfpoly

#endif
