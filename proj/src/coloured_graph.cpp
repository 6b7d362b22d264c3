#include "maniplex/coloured_graph.hpp"

#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "maniplex/error.hpp"

namespace maniplex {

std::vector<Colour> ColourSet::colours() const {
  std::vector<Colour> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string ColourSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Colour c : colours()) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  os << '}';
  return os.str();
}

ColouredGraph::ColouredGraph(int rank, const std::vector<std::vector<Flag>>& matchings) {
  if (rank < 1 || rank > kMaxRank) {
    throw Error(ErrorCode::kOutOfRange,
                "rank " + std::to_string(rank) + " outside [1, " + std::to_string(kMaxRank) + "]");
  }
  if (matchings.size() != static_cast<std::size_t>(rank)) {
    throw Error(ErrorCode::kOutOfRange, "expected " + std::to_string(rank) + " matchings, got " +
                                            std::to_string(matchings.size()));
  }
  const std::size_t flags = matchings[0].size();
  if (flags == 0 || flags > std::numeric_limits<Flag>::max()) {
    throw Error(ErrorCode::kOutOfRange, "flag count must be positive");
  }
  rank_ = rank;
  flag_count_ = flags;
  adj_.reserve(flags * static_cast<std::size_t>(rank));
  for (Colour c = 0; c < rank; ++c) {
    const auto& row = matchings[static_cast<std::size_t>(c)];
    if (row.size() != flags) {
      throw Error(ErrorCode::kOutOfRange,
                  "matching " + std::to_string(c) + " has " + std::to_string(row.size()) +
                      " entries, expected " + std::to_string(flags),
                  {.colour = c});
    }
    for (Flag v = 0; v < flags; ++v) {
      if (row[v] >= flags) {
        throw Error(ErrorCode::kOutOfRange,
                    "colour " + std::to_string(c) + " maps flag " + std::to_string(v) +
                        " to " + std::to_string(row[v]),
                    {.colour = c, .flag = v, .other_flag = row[v]});
      }
    }
    for (Flag v = 0; v < flags; ++v) {
      if (row[v] == v) {
        throw Error(ErrorCode::kFixedPoint,
                    "colour " + std::to_string(c) + " fixes flag " + std::to_string(v),
                    {.colour = c, .flag = v});
      }
      if (row[row[v]] != v) {
        throw Error(ErrorCode::kNotInvolution,
                    "colour " + std::to_string(c) + " is not an involution at flag " +
                        std::to_string(v),
                    {.colour = c, .flag = v});
      }
    }
    adj_.insert(adj_.end(), row.begin(), row.end());
  }
  for (Flag v = 0; v < flags; ++v) {
    for (Colour c = 0; c < rank; ++c) {
      for (Colour d = c + 1; d < rank; ++d) {
        if (adj(c, v) == adj(d, v)) {
          throw Error(ErrorCode::kMultiEdge,
                      "colours " + std::to_string(c) + " and " + std::to_string(d) +
                          " both join flag " + std::to_string(v) + " to " +
                          std::to_string(adj(c, v)),
                      {.colour = c, .other_colour = d, .flag = v});
        }
      }
    }
  }
}

std::vector<std::vector<Flag>> ColouredGraph::matchings() const {
  std::vector<std::vector<Flag>> out;
  out.reserve(static_cast<std::size_t>(rank_));
  for (Colour c = 0; c < rank_; ++c) {
    auto row = matching(c);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

ColouredGraph build_graph(int rank, const std::vector<std::vector<Flag>>& matchings) {
  return ColouredGraph(rank, matchings);
}

Partition Partition::from_labels(std::span<const std::uint32_t> labels) {
  Partition p;
  p.block_of_.resize(labels.size());
  // Labels may be sparse; map them in first-seen order.
  std::vector<std::uint32_t> remap;
  std::uint32_t max_label = 0;
  for (auto l : labels) max_label = std::max(max_label, l);
  remap.assign(labels.empty() ? 0 : static_cast<std::size_t>(max_label) + 1,
               std::numeric_limits<std::uint32_t>::max());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto& slot = remap[labels[v]];
    if (slot == std::numeric_limits<std::uint32_t>::max()) {
      slot = static_cast<std::uint32_t>(p.representatives_.size());
      p.representatives_.push_back(static_cast<Flag>(v));
    }
    p.block_of_[v] = slot;
  }
  return p;
}

Partition Partition::discrete(std::size_t flag_count) {
  Partition p;
  p.block_of_.resize(flag_count);
  std::iota(p.block_of_.begin(), p.block_of_.end(), 0U);
  p.representatives_.resize(flag_count);
  std::iota(p.representatives_.begin(), p.representatives_.end(), Flag{0});
  return p;
}

Partition Partition::single_block(std::size_t flag_count) {
  Partition p;
  p.block_of_.assign(flag_count, 0U);
  if (flag_count > 0) p.representatives_.push_back(0);
  return p;
}

std::vector<std::vector<Flag>> Partition::blocks() const {
  std::vector<std::vector<Flag>> out(block_count());
  for (Flag v = 0; v < size(); ++v) out[block_of_[v]].push_back(v);
  return out;
}

std::vector<Flag> Partition::members(std::uint32_t block) const {
  std::vector<Flag> out;
  for (Flag v = representatives_[block]; v < size(); ++v) {
    if (block_of_[v] == block) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> Partition::block_sizes() const {
  std::vector<std::size_t> out(block_count(), 0);
  for (auto b : block_of_) ++out[b];
  return out;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0U); }

  std::uint32_t find(std::uint32_t x) {
    std::uint32_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      auto next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Keep the smaller index as root; labels then follow flag order.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

Partition components(const ColouredGraph& g, ColourSet colours) {
  const std::size_t n = g.flag_count();
  UnionFind uf(n);
  for (Colour c : colours.colours()) {
    if (c >= g.rank()) continue;
    auto row = g.matching(c);
    for (Flag v = 0; v < n; ++v) {
      if (v < row[v]) uf.unite(v, row[v]);
    }
  }
  std::vector<std::uint32_t> labels(n);
  for (Flag v = 0; v < n; ++v) labels[v] = uf.find(v);
  return Partition::from_labels(labels);
}

Partition partition_meet(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kSizeMismatch, "partitions over " + std::to_string(p.size()) +
                                              " and " + std::to_string(q.size()) + " flags");
  }
  const std::size_t n = p.size();
  std::vector<std::uint32_t> labels(n);
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  ids.reserve(n);
  for (Flag v = 0; v < n; ++v) {
    const std::uint64_t key = (std::uint64_t{p.block_of(v)} << 32) | q.block_of(v);
    labels[v] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size())).first->second;
  }
  return Partition::from_labels(labels);
}

bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.size() != coarse.size()) return false;
  std::vector<std::uint32_t> image(fine.block_count(), std::numeric_limits<std::uint32_t>::max());
  for (Flag v = 0; v < fine.size(); ++v) {
    auto& slot = image[fine.block_of(v)];
    if (slot == std::numeric_limits<std::uint32_t>::max()) {
      slot = coarse.block_of(v);
    } else if (slot != coarse.block_of(v)) {
      return false;
    }
  }
  return true;
}

bool is_connected(const ColouredGraph& g) {
  return components(g, ColourSet::all(g.rank())).block_count() == 1;
}

std::optional<std::vector<Flag>> propagate_map(const ColouredGraph& source, Flag root,
                                               const ColouredGraph& target, Flag image) {
  constexpr Flag kUnset = std::numeric_limits<Flag>::max();
  if (source.rank() != target.rank()) return std::nullopt;
  std::vector<Flag> map(source.flag_count(), kUnset);
  std::queue<Flag> frontier;
  map[root] = image;
  frontier.push(root);
  while (!frontier.empty()) {
    const Flag v = frontier.front();
    frontier.pop();
    for (Colour c = 0; c < source.rank(); ++c) {
      const Flag w = source.adj(c, v);
      const Flag expected = target.adj(c, map[v]);
      if (map[w] == kUnset) {
        map[w] = expected;
        frontier.push(w);
      } else if (map[w] != expected) {
        return std::nullopt;
      }
    }
  }
  for (Flag m : map) {
    if (m == kUnset) return std::nullopt;  // source not connected
  }
  return map;
}

bool commutes_with_colours(const ColouredGraph& source, const ColouredGraph& target,
                           std::span<const Flag> map) {
  if (source.rank() != target.rank() || map.size() != source.flag_count()) return false;
  for (Flag v = 0; v < source.flag_count(); ++v) {
    if (map[v] >= target.flag_count()) return false;
    for (Colour c = 0; c < source.rank(); ++c) {
      if (map[source.adj(c, v)] != target.adj(c, map[v])) return false;
    }
  }
  return true;
}

std::optional<std::vector<Flag>> are_isomorphic(const ColouredGraph& g, const ColouredGraph& h) {
  if (!is_connected(g) || !is_connected(h)) {
    throw Error(ErrorCode::kDisconnected, "isomorphism test needs connected inputs");
  }
  if (g.rank() != h.rank() || g.flag_count() != h.flag_count()) return std::nullopt;
  for (Flag image = 0; image < h.flag_count(); ++image) {
    auto map = propagate_map(g, 0, h, image);
    if (!map) continue;
    // A colour-commuting map between connected graphs of equal size is onto,
    // hence bijective; the check below guards that reasoning.
    std::vector<bool> hit(h.flag_count(), false);
    bool injective = true;
    for (Flag m : *map) {
      if (hit[m]) {
        injective = false;
        break;
      }
      hit[m] = true;
    }
    if (injective) return map;
  }
  return std::nullopt;
}

}  // namespace maniplex
