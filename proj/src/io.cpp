#include "maniplex/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "maniplex/error.hpp"

namespace maniplex {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void parse_error(std::size_t line, const std::string& reason) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + reason,
              {.line = static_cast<std::int64_t>(line)});
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto end = text.find('\n');
    lines.push_back(text.substr(0, end));
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    parse_error(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

ordered_json colours_json(ColourSet s) { return s.colours(); }

ordered_json chain_json(const MaximalChain& c) { return c; }

ordered_json face_json(FaceRef f) { return {{"rank", f.rank}, {"index", f.index}}; }

ordered_json poset_report_json(const PosetReport& r) {
  ordered_json j;
  j["is_polytope"] = r.is_polytope;
  j["ranked_bounded"] = r.ranked_bounded;
  j["uniform_chains"] = r.uniform_chains;
  j["chain_count"] = r.chain_count;
  j["diamond"] = {{"holds", r.diamond.holds}, {"witness", nullptr}};
  if (r.diamond.witness) {
    j["diamond"]["witness"] = {{"lower", face_json(r.diamond.witness->lower)},
                               {"upper", face_json(r.diamond.witness->upper)},
                               {"count", r.diamond.witness->count}};
  }
  j["strong_flag_connected"] = {{"holds", r.strong_flag_connected.holds}, {"witness", nullptr}};
  if (r.strong_flag_connected.witness) {
    j["strong_flag_connected"]["witness"] = {{"from", chain_json(r.strong_flag_connected.witness->from)},
                                             {"to", chain_json(r.strong_flag_connected.witness->to)}};
  }
  if (r.faithful) {
    j["faithful"] = {{"holds", r.faithful->holds}, {"witness", nullptr}};
    if (r.faithful->witness) {
      j["faithful"]["witness"] = {{"chain", chain_json(r.faithful->witness->chain)},
                                  {"flags", r.faithful->witness->flags}};
    }
  }
  return j;
}

std::string chain_string(const MaximalChain& c) {
  std::string out = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(c[k]);
  }
  return out + ")";
}

std::string poset_lines(const PosetReport& r) {
  std::ostringstream out;
  out << "  diamond: " << (r.diamond.holds ? "holds" : "fails");
  if (r.diamond.witness) {
    const auto& w = *r.diamond.witness;
    out << " between face " << w.lower.index << " of rank " << w.lower.rank << " and face " << w.upper.index
        << " of rank " << w.upper.rank << " (" << w.count << " faces in between)";
  }
  out << "\n  strongly flag-connected: " << (r.strong_flag_connected.holds ? "yes" : "no");
  if (r.strong_flag_connected.witness) {
    out << " (chains " << chain_string(r.strong_flag_connected.witness->from) << " and "
        << chain_string(r.strong_flag_connected.witness->to) << ")";
  }
  if (r.faithful) {
    out << "\n  faithful: " << (r.faithful->holds ? "yes" : "no");
    if (r.faithful->witness) {
      out << " (" << r.faithful->witness->flags.size() << " flags share chain "
          << chain_string(r.faithful->witness->chain) << ")";
    }
  }
  out << "\n  maximal chains: " << r.chain_count << "\n";
  return out.str();
}

}  // namespace

MpxDocument read_mpx_document(std::string_view text) {
  const auto lines = split_lines(text);
  std::string name;
  std::string provenance;
  std::size_t row = 0;
  bool header = false;
  std::size_t rank = 0;
  std::size_t flags = 0;
  std::vector<std::vector<Flag>> rows;
  std::vector<std::size_t> row_lines;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::size_t lineno = k + 1;
    std::string_view line = lines[k];
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) {
      if (!header) {
        const auto comment = trim(line.substr(hash + 1));
        if (comment.starts_with("name:")) name = std::string(trim(comment.substr(5)));
        if (comment.starts_with("provenance:")) provenance = std::string(trim(comment.substr(11)));
      }
      line = line.substr(0, hash);
    }
    const auto toks = tokens(line);
    if (toks.empty()) continue;
    if (!header) {
      if (toks.size() != 3 || toks[0] != "mpx") parse_error(lineno, "expected header 'mpx <n> <F>'");
      rank = parse_uint(toks[1], lineno);
      flags = parse_uint(toks[2], lineno);
      if (rank > static_cast<std::size_t>(kMaxRank)) parse_error(lineno, "rank exceeds " + std::to_string(kMaxRank));
      if (flags > std::numeric_limits<Flag>::max()) parse_error(lineno, "too many flags");
      header = true;
      continue;
    }
    if (row == rank) parse_error(lineno, "unexpected data after " + std::to_string(rank) + " rows");
    if (toks.size() != flags) {
      parse_error(lineno, "row " + std::to_string(row) + " has " + std::to_string(toks.size()) +
                              " entries, expected " + std::to_string(flags));
    }
    std::vector<Flag> adj;
    adj.reserve(flags);
    for (auto t : toks) {
      const auto value = parse_uint(t, lineno);
      if (value > std::numeric_limits<Flag>::max()) parse_error(lineno, "flag index too large");
      adj.push_back(static_cast<Flag>(value));
    }
    rows.push_back(std::move(adj));
    row_lines.push_back(lineno);
    ++row;
  }
  if (!header) parse_error(lines.empty() ? 1 : lines.size(), "missing header 'mpx <n> <F>'");
  if (row != rank) {
    parse_error(lines.size(), "expected " + std::to_string(rank) + " rows, found " + std::to_string(row));
  }
  try {
    return MpxDocument{build_graph(static_cast<int>(rank), rows), std::move(name), std::move(provenance)};
  } catch (const Error& e) {
    const int colour = e.witness().colour;
    const std::size_t line = colour >= 0 && static_cast<std::size_t>(colour) < row_lines.size()
                                 ? row_lines[static_cast<std::size_t>(colour)]
                                 : (row_lines.empty() ? 1 : row_lines.front());
    Error wrapped(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + e.what(),
                  {.colour = e.witness().colour,
                   .other_colour = e.witness().other_colour,
                   .flag = e.witness().flag,
                   .other_flag = e.witness().other_flag,
                   .line = static_cast<std::int64_t>(line)});
    wrapped.set_cause(e.code());
    throw wrapped;
  }
}

ColouredGraph read_mpx(std::string_view text) { return read_mpx_document(text).graph; }

std::string write_mpx(const MpxDocument& doc) {
  std::string out;
  if (!doc.name.empty()) out += "# name: " + doc.name + "\n";
  if (!doc.provenance.empty()) out += "# provenance: " + doc.provenance + "\n";
  const auto& g = doc.graph;
  out += "mpx " + std::to_string(g.rank()) + " " + std::to_string(g.flag_count()) + "\n";
  for (Colour c = 0; c < g.rank(); ++c) {
    const auto row = g.matching(c);
    for (std::size_t v = 0; v < row.size(); ++v) {
      if (v > 0) out += ' ';
      out += std::to_string(row[v]);
    }
    out += '\n';
  }
  return out;
}

std::string write_mpx(const ColouredGraph& g) { return write_mpx(MpxDocument{g, {}, {}}); }

std::string write_dot(const ColouredGraph& g) {
  std::ostringstream out;
  out << "graph maniplex {\n";
  for (Flag v = 0; v < g.flag_count(); ++v) out << "  " << v << ";\n";
  for (Colour c = 0; c < g.rank(); ++c) {
    for (Flag v = 0; v < g.flag_count(); ++v) {
      const Flag w = g.adj(c, v);
      if (v < w) out << "  " << v << " -- " << w << " [color=" << c << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string write_poset_dot(const RankedPoset& p) {
  auto id = [](int r, std::uint32_t i) {
    return "\"" + std::to_string(r) + ":" + std::to_string(i) + "\"";
  };
  std::ostringstream out;
  out << "graph hasse {\n  rankdir=BT;\n";
  for (int r = -1; r <= p.rank(); ++r) {
    out << "  { rank=same;";
    for (std::uint32_t i = 0; i < p.count(r); ++i) out << " " << id(r, i) << ";";
    out << " }\n";
  }
  for (int r = -1; r < p.rank(); ++r) {
    for (std::uint32_t i = 0; i < p.count(r); ++i) {
      for (std::uint32_t j : p.up({r, i})) out << "  " << id(r, i) << " -- " << id(r + 1, j) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string graph_json(const MpxDocument& doc) {
  ordered_json j;
  j["format"] = "mpx";
  j["name"] = doc.name;
  j["provenance"] = doc.provenance;
  j["rank"] = doc.graph.rank();
  j["flags"] = doc.graph.flag_count();
  j["adjacency"] = doc.graph.matchings();
  return j.dump(2) + "\n";
}

std::string report_json(const PolytopalityReport& r, std::size_t flag_count, int rank) {
  ordered_json j;
  j["rank"] = rank;
  j["flags"] = flag_count;
  j["polytopal"] = r.polytopal();
  j["faces_per_rank"] = r.faces_per_rank;
  j["cip"] = {{"holds", r.cip.holds}, {"witness", nullptr}};
  if (r.cip.witness) {
    j["cip"]["witness"] = {
        {"colours", colours_json(r.cip.witness->colours)}, {"u", r.cip.witness->u}, {"v", r.cip.witness->v}};
  }
  j["wpip"] = {{"holds", r.wpip.holds}, {"witness", nullptr}};
  if (r.wpip.witness) {
    const auto& w = *r.wpip.witness;
    j["wpip"]["witness"] = {{"i", w.i}, {"j", w.j}, {"u", w.u}, {"v", w.v}};
  }
  j["spip"] = {{"holds", r.spip.holds}, {"exhaustive", r.spip.exhaustive}, {"witness", nullptr}};
  if (r.spip.witness) {
    const auto& w = *r.spip.witness;
    j["spip"]["witness"] = {{"a", colours_json(w.a)}, {"b", colours_json(w.b)}, {"u", w.u}, {"v", w.v}};
  }
  j["poset"] = poset_report_json(r.poset);
  j["isomorphism"] = nullptr;
  if (r.isomorphism) j["isomorphism"] = *r.isomorphism;
  return j.dump(2) + "\n";
}

std::string poset_json(const InducedPoset& p, const PosetReport& report) {
  const auto& order = p.order();
  ordered_json j;
  j["rank"] = order.rank();
  j["counts"] = ordered_json::array();
  for (int r = -1; r <= order.rank(); ++r) j["counts"].push_back(order.count(r));
  j["faces"] = ordered_json::array();
  for (int r = 0; r < p.rank(); ++r) {
    ordered_json rank_faces = ordered_json::array();
    for (const auto& f : p.faces(r)) rank_faces.push_back(f.flags);
    j["faces"].push_back(std::move(rank_faces));
  }
  j["covers"] = ordered_json::array();
  for (int r = -1; r < order.rank(); ++r) {
    for (std::uint32_t i = 0; i < order.count(r); ++i) {
      for (std::uint32_t k : order.up({r, i})) j["covers"].push_back({r, i, k});
    }
  }
  j["report"] = poset_report_json(report);
  return j.dump(2) + "\n";
}

std::string report_text(const PolytopalityReport& r, std::size_t flag_count, int rank) {
  std::ostringstream out;
  if (r.polytopal()) {
    out << "polytopal";
  } else {
    out << "non-polytopal; CIP fails at S=" << r.cip.witness->colours.to_string();
  }
  out << "\n  rank " << rank << ", " << flag_count << " flags, faces per rank";
  for (std::size_t k = 0; k < r.faces_per_rank.size(); ++k) out << (k == 0 ? " " : "/") << r.faces_per_rank[k];
  out << "\n  CIP: " << (r.cip.holds ? "holds" : "fails");
  if (r.cip.witness) {
    out << " at S=" << r.cip.witness->colours.to_string() << ": flags " << r.cip.witness->u << " and "
        << r.cip.witness->v << " share every face of rank in S but no path avoids S";
  }
  out << "\n  WPIP: " << (r.wpip.holds ? "holds" : "fails");
  if (r.wpip.witness) {
    const auto& w = *r.wpip.witness;
    out << " at (i,j)=(" << w.i << "," << w.j << "): flags " << w.u << " and " << w.v << " have no "
        << ColourSet::range(w.i + 1, w.j).to_string() << "-path";
  }
  out << "\n  SPIP: " << (r.spip.holds ? "holds" : "fails") << (r.spip.exhaustive ? "" : " (weak form)");
  if (r.spip.witness) {
    const auto& w = *r.spip.witness;
    out << " at A=" << w.a.to_string() << ", B=" << w.b.to_string() << ": flags " << w.u << " and " << w.v;
  }
  out << "\n" << poset_lines(r.poset);
  if (r.isomorphism) out << "  isomorphic to the flag graph of its induced poset\n";
  return out.str();
}

std::string poset_text(const InducedPoset& p, const PosetReport& report) {
  std::ostringstream out;
  out << (report.is_polytope ? "polytope" : "not a polytope") << "\n  elements per rank";
  for (int r = -1; r <= p.rank(); ++r) out << (r == -1 ? " " : "/") << p.order().count(r);
  out << "\n" << poset_lines(report);
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "failed reading '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::kIoError, "failed writing '" + path + "'");
}

}  // namespace maniplex
