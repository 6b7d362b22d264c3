#include "maniplex/maniplex.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "maniplex/error.hpp"

namespace maniplex {

Maniplex validate(ColouredGraph graph) {
  const auto comps = components(graph, ColourSet::all(graph.rank()));
  if (comps.block_count() != 1) {
    const Flag stranger = comps.representative(1);
    throw Error(ErrorCode::kDisconnected,
                "flags 0 and " + std::to_string(stranger) + " lie in different components",
                {.flag = 0, .other_flag = stranger});
  }
  const int n = graph.rank();
  for (Colour i = 0; i < n; ++i) {
    for (Colour j = i + 2; j < n; ++j) {
      for (Flag v = 0; v < graph.flag_count(); ++v) {
        if (graph.adj(i, graph.adj(j, v)) != graph.adj(j, graph.adj(i, v))) {
          throw Error(ErrorCode::kBadTwoFactor,
                      "the {" + std::to_string(i) + "," + std::to_string(j) +
                          "}-component of flag " + std::to_string(v) + " is not a 4-cycle",
                      {.colour = i, .other_colour = j, .flag = v});
        }
      }
    }
  }
  return Maniplex(std::move(graph));
}

std::vector<Face> faces(const Maniplex& m, int rank) {
  if (rank < 0 || rank >= m.rank()) {
    throw Error(ErrorCode::kRankOutOfRange, "no faces of rank " + std::to_string(rank));
  }
  const auto part = components(m.graph(), face_colours(m.rank(), rank));
  auto blocks = part.blocks();
  std::vector<Face> out;
  out.reserve(blocks.size());
  for (std::uint32_t b = 0; b < blocks.size(); ++b) {
    out.push_back(Face{rank, b, part.representative(b), std::move(blocks[b])});
  }
  return out;
}

namespace {

// BFS tree inside the component of `root` restricted to `colours`; returns the
// component flags in discovery order with, for each, the colour word from root.
struct Reach {
  std::vector<Flag> flags;
  std::vector<std::vector<Colour>> words;
};

Reach reach(const ColouredGraph& g, Flag root, ColourSet colours) {
  Reach r;
  std::vector<std::int64_t> slot(g.flag_count(), -1);
  slot[root] = 0;
  r.flags.push_back(root);
  r.words.emplace_back();
  const auto cs = colours.colours();
  for (std::size_t head = 0; head < r.flags.size(); ++head) {
    const Flag v = r.flags[head];
    for (Colour c : cs) {
      const Flag w = g.adj(c, v);
      if (slot[w] >= 0) continue;
      slot[w] = static_cast<std::int64_t>(r.flags.size());
      auto word = r.words[head];
      word.push_back(c);
      r.flags.push_back(w);
      r.words.push_back(std::move(word));
    }
  }
  return r;
}

Flag walk(const ColouredGraph& g, Flag v, std::span<const Colour> word) {
  for (Colour c : word) v = g.adj(c, v);
  return v;
}

}  // namespace

FaceFactors face_factors(const Maniplex& m, const Face& face) {
  const int n = m.rank();
  if (face.rank < 1 || face.rank > n - 2) {
    throw Error(ErrorCode::kRankOutOfRange,
                "face of rank " + std::to_string(face.rank) + " has no product decomposition in rank " +
                    std::to_string(n),
                {.colour = face.rank});
  }
  const auto low = reach(m.graph(), face.representative, ColourSet::range(0, face.rank));
  const auto high = reach(m.graph(), face.representative, ColourSet::range(face.rank + 1, n));

  // Coordinates (a, b) -> high_b(low_a(rep)) must hit every face flag once.
  std::vector<bool> in_face(m.flag_count(), false);
  for (Flag v : face.flags) in_face[v] = true;
  std::vector<bool> hit(m.flag_count(), false);
  std::size_t hits = 0;
  for (std::size_t a = 0; a < low.flags.size(); ++a) {
    for (std::size_t b = 0; b < high.flags.size(); ++b) {
      const Flag w = walk(m.graph(), low.flags[a], high.words[b]);
      if (!in_face[w]) {
        throw Error(ErrorCode::kInternal, "factor walk left the face",
                    {.colour = face.rank, .flag = face.representative});
      }
      if (hit[w]) {
        throw Error(ErrorCode::kNotAProduct,
                    "face through flag " + std::to_string(face.representative) + " has " +
                        std::to_string(face.flags.size()) + " flags but its factors have " +
                        std::to_string(low.flags.size()) + " and " + std::to_string(high.flags.size()),
                    {.colour = face.rank, .flag = face.representative, .other_flag = w});
      }
      hit[w] = true;
      ++hits;
    }
  }
  if (hits != face.flags.size()) {
    throw Error(ErrorCode::kInternal, "factor walks miss part of the face",
                {.colour = face.rank, .flag = face.representative});
  }
  FaceFactors out{low.flags, high.flags};
  std::sort(out.below.begin(), out.below.end());
  std::sort(out.above.begin(), out.above.end());
  return out;
}

Flag ColouredPath::end(const ColouredGraph& g) const { return walk(g, start, colours); }

std::vector<Colour> normal_form(std::vector<Colour> colours) {
  // Leftmost rewriting. Swaps remove one inversion and cancellations shorten
  // the word, so the loop terminates.
  std::size_t i = 0;
  while (i + 1 < colours.size()) {
    const Colour a = colours[i];
    const Colour b = colours[i + 1];
    if (a == b) {
      colours.erase(colours.begin() + static_cast<std::ptrdiff_t>(i),
                    colours.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      i = i > 0 ? i - 1 : 0;
    } else if (a > b + 1) {
      std::swap(colours[i], colours[i + 1]);
      i = i > 0 ? i - 1 : 0;
    } else {
      ++i;
    }
  }
  return colours;
}

std::vector<ColouredPath> normalize_path(const Maniplex& m, const ColouredPath& path,
                                         std::span<const int> pivots) {
  const int n = m.rank();
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] < 0 || pivots[k] >= n || (k > 0 && pivots[k - 1] >= pivots[k])) {
      throw Error(ErrorCode::kOutOfRange, "pivots must be strictly increasing colours in [n]");
    }
  }
  for (Colour c : path.colours) {
    if (c < 0 || c >= n) throw Error(ErrorCode::kOutOfRange, "path colour " + std::to_string(c));
    if (std::binary_search(pivots.begin(), pivots.end(), c)) {
      throw Error(ErrorCode::kPathUsesPivotColour,
                  "path uses pivot colour " + std::to_string(c), {.colour = c});
    }
  }
  if (path.start >= m.flag_count()) throw Error(ErrorCode::kOutOfRange, "path start");

  const auto word = normal_form(path.colours);
  // Window index of a colour = number of pivots below it.
  auto window = [&](Colour c) {
    return static_cast<std::size_t>(std::lower_bound(pivots.begin(), pivots.end(), c) - pivots.begin());
  };
  std::vector<ColouredPath> segments(pivots.size() + 1);
  Flag at = path.start;
  std::size_t pos = 0;
  for (std::size_t j = 0; j < segments.size(); ++j) {
    segments[j].start = at;
    while (pos < word.size() && window(word[pos]) == j) {
      segments[j].colours.push_back(word[pos]);
      at = m.adj(word[pos], at);
      ++pos;
    }
  }
  if (pos != word.size()) {
    throw Error(ErrorCode::kInternal, "normal form is not sorted by pivot window");
  }
  return segments;
}

}  // namespace maniplex
