#pragma once

#include <string>
#include <string_view>

#include "maniplex/coloured_graph.hpp"
#include "maniplex/polytopality.hpp"
#include "maniplex/poset.hpp"

namespace maniplex {

/// Contents of an .mpx file.
///
///   # name: <text>          optional, before the header
///   # provenance: <text>    optional, before the header
///   mpx <n> <F>
///   <F integers>            one row per colour c = 0..n-1, row c is adj_c
///
/// Elsewhere `#` starts a comment that runs to the end of the line.
struct MpxDocument {
  ColouredGraph graph;
  std::string name;
  std::string provenance;
};

/// Throws ParseError with the offending line in the witness. Graph
/// validation failures are reported as ParseError whose cause() is the
/// validation code.
MpxDocument read_mpx_document(std::string_view text);
ColouredGraph read_mpx(std::string_view text);

/// Canonical text: metadata lines (when non-empty), header, rows with single
/// spaces, a trailing newline. read_mpx_document inverts it exactly.
std::string write_mpx(const MpxDocument& doc);
std::string write_mpx(const ColouredGraph& g);

/// Undirected graph, one node per flag, `color=<i>` on colour-i edges.
std::string write_dot(const ColouredGraph& g);
/// Hasse diagram, one row per rank.
std::string write_poset_dot(const RankedPoset& p);

std::string graph_json(const MpxDocument& doc);
std::string report_json(const PolytopalityReport& report, std::size_t flag_count, int rank);
std::string poset_json(const InducedPoset& p, const PosetReport& report);

/// One line verdict followed by one line per criterion, witnesses included.
std::string report_text(const PolytopalityReport& report, std::size_t flag_count, int rank);
std::string poset_text(const InducedPoset& p, const PosetReport& report);

/// Whole-file helpers; throw IoError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace maniplex
