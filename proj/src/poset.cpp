#include "maniplex/poset.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

#include "maniplex/error.hpp"

namespace maniplex {

namespace {

struct ChainHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

constexpr std::uint32_t kWildcard = std::numeric_limits<std::uint32_t>::max();

void sort_unique(std::vector<std::uint32_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

RankedPoset::RankedPoset(int rank, std::vector<std::size_t> counts, std::span<const Cover> covers)
    : rank_(rank), counts_(std::move(counts)) {
  if (rank < -1 || counts_.size() != static_cast<std::size_t>(rank + 2)) {
    throw Error(ErrorCode::kOutOfRange, "rank counts must cover ranks -1..n");
  }
  up_.resize(counts_.size());
  down_.resize(counts_.size());
  for (std::size_t s = 0; s < counts_.size(); ++s) {
    up_[s].resize(counts_[s]);
    down_[s].resize(counts_[s]);
  }
  for (const auto& c : covers) {
    if (c.lower.rank < -1 || c.lower.rank >= rank || c.lower.index >= count(c.lower.rank) ||
        c.upper >= count(c.lower.rank + 1)) {
      throw Error(ErrorCode::kOutOfRange, "cover relation outside the poset");
    }
    up_[slot(c.lower.rank)][c.lower.index].push_back(c.upper);
    down_[slot(c.lower.rank + 1)][c.upper].push_back(c.lower.index);
  }
  for (auto& level : up_) {
    for (auto& v : level) sort_unique(v);
  }
  for (auto& level : down_) {
    for (auto& v : level) sort_unique(v);
  }
}

std::size_t RankedPoset::size() const { return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0}); }

bool RankedPoset::leq(FaceRef a, FaceRef b) const {
  if (a.rank > b.rank) return false;
  if (a.rank == b.rank) return a.index == b.index;
  std::vector<std::uint32_t> frontier{a.index};
  for (int r = a.rank; r < b.rank; ++r) {
    std::vector<std::uint32_t> next;
    for (auto x : frontier) {
      const auto& ups = up_[slot(r)][x];
      next.insert(next.end(), ups.begin(), ups.end());
    }
    sort_unique(next);
    frontier = std::move(next);
    if (frontier.empty()) return false;
  }
  return std::binary_search(frontier.begin(), frontier.end(), b.index);
}

InducedPoset induced_poset(const Maniplex& m) {
  const int n = m.rank();
  InducedPoset p;
  p.flag_count_ = m.flag_count();
  std::vector<std::size_t> counts(static_cast<std::size_t>(n) + 2, 1);
  for (int r = 0; r < n; ++r) {
    p.faces_.push_back(faces(m, r));
    p.partitions_.push_back(components(m.graph(), face_colours(n, r)));
    counts[static_cast<std::size_t>(r) + 1] = p.faces_.back().size();
  }
  std::vector<RankedPoset::Cover> covers;
  for (std::uint32_t i = 0; i < counts[1]; ++i) covers.push_back({{-1, 0}, i});
  for (std::uint32_t i = 0; i < counts[static_cast<std::size_t>(n)]; ++i) {
    covers.push_back({{n - 1, i}, 0});
  }
  // Consecutive-rank incidence: the faces through a common flag.
  for (int r = 0; r + 1 < n; ++r) {
    const auto& lo = p.partitions_[static_cast<std::size_t>(r)];
    const auto& hi = p.partitions_[static_cast<std::size_t>(r) + 1];
    for (Flag v = 0; v < m.flag_count(); ++v) covers.push_back({{r, lo.block_of(v)}, hi.block_of(v)});
  }
  p.order_ = RankedPoset(n, std::move(counts), covers);
  return p;
}

std::vector<MaximalChain> maximal_chains(const RankedPoset& p) {
  std::vector<MaximalChain> out;
  const int n = p.rank();
  MaximalChain chain(static_cast<std::size_t>(n) + 2);
  std::function<void(int, std::uint32_t)> extend = [&](int r, std::uint32_t idx) {
    chain[static_cast<std::size_t>(r + 1)] = idx;
    if (r == n) {
      out.push_back(chain);
      return;
    }
    for (auto next : p.up({r, idx})) extend(r + 1, next);
  };
  for (std::uint32_t i = 0; i < p.count(-1); ++i) extend(-1, i);
  return out;
}

std::vector<Flag> chain_intersection(const InducedPoset& p, std::span<const FaceRef> chain) {
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const auto& f = chain[k];
    if (f.rank < 0 || f.rank >= p.rank() || f.index >= p.faces(f.rank).size()) {
      throw Error(ErrorCode::kNotAChain, "element is not a proper face");
    }
    if (k > 0 && chain[k - 1].rank >= f.rank) {
      throw Error(ErrorCode::kNotAChain, "ranks must strictly increase");
    }
  }
  for (std::size_t a = 0; a < chain.size(); ++a) {
    for (std::size_t b = a + 1; b < chain.size(); ++b) {
      if (!p.order().leq(chain[a], chain[b])) {
        throw Error(ErrorCode::kNotAChain, "faces of ranks " + std::to_string(chain[a].rank) + " and " +
                                               std::to_string(chain[b].rank) + " are not incident");
      }
    }
  }
  std::vector<Flag> out;
  for (Flag v = 0; v < p.flag_count(); ++v) {
    bool inside = true;
    for (const auto& f : chain) {
      if (p.face_of(f.rank, v) != f.index) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(v);
  }
  if (out.empty() && !chain.empty()) {
    throw Error(ErrorCode::kInternal, "a chain of proper faces has empty intersection");
  }
  return out;
}

namespace {

MaximalChain chain_through(const InducedPoset& p, Flag v) {
  MaximalChain chain(static_cast<std::size_t>(p.rank()) + 2, 0);
  for (int r = 0; r < p.rank(); ++r) chain[static_cast<std::size_t>(r) + 1] = p.face_of(r, v);
  return chain;
}

}  // namespace

Verdict<FaithfulWitness> is_faithful(const Maniplex& m, const InducedPoset& p) {
  Partition meet = Partition::single_block(m.flag_count());
  for (int r = 0; r < p.rank(); ++r) meet = partition_meet(meet, p.face_partition(r));
  if (meet.is_discrete()) return Verdict<FaithfulWitness>::pass();
  const auto sizes = meet.block_sizes();
  for (std::uint32_t b = 0; b < sizes.size(); ++b) {
    if (sizes[b] > 1) {
      return Verdict<FaithfulWitness>::fail({chain_through(p, meet.representative(b)), meet.members(b)});
    }
  }
  throw Error(ErrorCode::kInternal, "non-discrete meet without a large block");
}

bool is_faithful_by_chains(const InducedPoset& p) {
  for (const auto& chain : maximal_chains(p.order())) {
    std::vector<FaceRef> proper;
    for (int r = 0; r < p.rank(); ++r) proper.push_back({r, chain[static_cast<std::size_t>(r) + 1]});
    if (chain_intersection(p, proper).size() != 1) return false;
  }
  return true;
}

bool is_faithful_by_count(const InducedPoset& p) {
  return maximal_chains(p.order()).size() == p.flag_count();
}

Verdict<DiamondWitness> diamond(const RankedPoset& p) {
  const int n = p.rank();
  for (int i = 0; i < n; ++i) {
    std::vector<std::size_t> between(p.count(i + 1), 0);
    for (std::uint32_t e = 0; e < p.count(i - 1); ++e) {
      std::fill(between.begin(), between.end(), 0);
      for (auto mid : p.up({i - 1, e})) {
        for (auto top : p.up({i, mid})) ++between[top];
      }
      for (std::uint32_t f = 0; f < between.size(); ++f) {
        if (between[f] != 0 && between[f] != 2) {
          return Verdict<DiamondWitness>::fail({{i - 1, e}, {i + 1, f}, between[f]});
        }
      }
    }
  }
  return Verdict<DiamondWitness>::pass();
}

Verdict<ConnectivityWitness> strong_flag_connectivity(const RankedPoset& p) {
  const auto chains = maximal_chains(p);
  return strong_flag_connectivity(p, chains);
}

Verdict<ConnectivityWitness> strong_flag_connectivity(const RankedPoset& p,
                                                      std::span<const MaximalChain> chains) {
  const int n = p.rank();
  const std::size_t c = chains.size();
  if (c <= 1 || n <= 0) return Verdict<ConnectivityWitness>::pass();
  if (n > 24) {
    throw Error(ErrorCode::kRankTooLargeForExhaustive, "strong flag connectivity is exhaustive in the rank");
  }
  // Chains differing only at rank r form a clique; collect those cliques.
  std::vector<std::vector<std::vector<std::uint32_t>>> cliques(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    std::unordered_map<std::vector<std::uint32_t>, std::vector<std::uint32_t>, ChainHash> groups;
    for (std::uint32_t k = 0; k < c; ++k) {
      auto key = chains[k];
      key[static_cast<std::size_t>(r) + 1] = kWildcard;
      groups[std::move(key)].push_back(k);
    }
    for (auto& [key, members] : groups) {
      if (members.size() > 1) cliques[static_cast<std::size_t>(r)].push_back(std::move(members));
    }
  }

  // Two chains sharing the faces at ranks R must be joined through chains that
  // keep those faces; it suffices to check every R and every fixing of R.
  std::vector<std::uint32_t> parent(c);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t kept = 0; kept + 1 < subsets; ++kept) {
    std::iota(parent.begin(), parent.end(), 0U);
    for (int r = 0; r < n; ++r) {
      if ((kept >> r) & 1U) continue;
      for (const auto& clique : cliques[static_cast<std::size_t>(r)]) {
        const auto root = find(clique.front());
        for (auto k : clique) {
          const auto other = find(k);
          if (other != root) parent[other] = root;
        }
      }
    }
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, ChainHash> first_with;
    for (std::uint32_t k = 0; k < c; ++k) {
      auto key = chains[k];
      for (int r = 0; r < n; ++r) {
        if (!((kept >> r) & 1U)) key[static_cast<std::size_t>(r) + 1] = kWildcard;
      }
      auto [it, inserted] = first_with.try_emplace(std::move(key), k);
      if (!inserted && find(it->second) != find(k)) {
        return Verdict<ConnectivityWitness>::fail({chains[it->second], chains[k]});
      }
    }
  }
  return Verdict<ConnectivityWitness>::pass();
}

RankedPoset section(const RankedPoset& p, FaceRef lower, FaceRef upper) {
  if (!p.leq(lower, upper)) {
    throw Error(ErrorCode::kNotComparable, "section needs lower <= upper");
  }
  const int span = upper.rank - lower.rank;
  // Elements above `lower` (ranks lower..upper) and below `upper`.
  std::vector<std::vector<std::uint32_t>> above(static_cast<std::size_t>(span) + 1);
  std::vector<std::vector<std::uint32_t>> below(static_cast<std::size_t>(span) + 1);
  above[0] = {lower.index};
  for (int k = 1; k <= span; ++k) {
    for (auto x : above[static_cast<std::size_t>(k) - 1]) {
      const auto& ups = p.up({lower.rank + k - 1, x});
      above[static_cast<std::size_t>(k)].insert(above[static_cast<std::size_t>(k)].end(), ups.begin(), ups.end());
    }
    sort_unique(above[static_cast<std::size_t>(k)]);
  }
  below[static_cast<std::size_t>(span)] = {upper.index};
  for (int k = span - 1; k >= 0; --k) {
    for (auto x : below[static_cast<std::size_t>(k) + 1]) {
      const auto& downs = p.down({lower.rank + k + 1, x});
      below[static_cast<std::size_t>(k)].insert(below[static_cast<std::size_t>(k)].end(), downs.begin(), downs.end());
    }
    sort_unique(below[static_cast<std::size_t>(k)]);
  }
  std::vector<std::vector<std::uint32_t>> kept(static_cast<std::size_t>(span) + 1);
  std::vector<std::unordered_map<std::uint32_t, std::uint32_t>> renumber(static_cast<std::size_t>(span) + 1);
  std::vector<std::size_t> counts;
  for (int k = 0; k <= span; ++k) {
    auto& out = kept[static_cast<std::size_t>(k)];
    std::set_intersection(above[static_cast<std::size_t>(k)].begin(), above[static_cast<std::size_t>(k)].end(),
                          below[static_cast<std::size_t>(k)].begin(), below[static_cast<std::size_t>(k)].end(),
                          std::back_inserter(out));
    for (std::uint32_t i = 0; i < out.size(); ++i) renumber[static_cast<std::size_t>(k)][out[i]] = i;
    counts.push_back(out.size());
  }
  std::vector<RankedPoset::Cover> covers;
  for (int k = 0; k < span; ++k) {
    for (std::uint32_t i = 0; i < kept[static_cast<std::size_t>(k)].size(); ++i) {
      for (auto up : p.up({lower.rank + k, kept[static_cast<std::size_t>(k)][i]})) {
        auto it = renumber[static_cast<std::size_t>(k) + 1].find(up);
        if (it != renumber[static_cast<std::size_t>(k) + 1].end()) covers.push_back({{k - 1, i}, it->second});
      }
    }
  }
  return RankedPoset(span - 1, std::move(counts), covers);
}

PosetReport is_polytope(const RankedPoset& p) {
  PosetReport report;
  const int n = p.rank();
  bool bounded = p.count(-1) == 1 && p.count(n) == 1;
  for (int r = -1; r <= n && bounded; ++r) {
    for (std::uint32_t i = 0; i < p.count(r); ++i) {
      if ((r < n && p.up({r, i}).empty()) || (r > -1 && p.down({r, i}).empty())) {
        bounded = false;
        break;
      }
    }
  }
  report.ranked_bounded = bounded;
  if (!bounded) {
    report.diamond = Verdict<DiamondWitness>::fail({});
    report.strong_flag_connected = Verdict<ConnectivityWitness>::fail({});
    return report;
  }
  // Covers only join consecutive ranks and every element has covers on both
  // sides, so every maximal chain meets each rank once.
  report.uniform_chains = true;
  const auto chains = maximal_chains(p);
  report.chain_count = chains.size();
  report.diamond = diamond(p);
  report.strong_flag_connected = strong_flag_connectivity(p, chains);
  report.is_polytope = report.diamond.holds && report.strong_flag_connected.holds;
  return report;
}

PosetReport is_polytope(const Maniplex& m, const InducedPoset& p) {
  auto report = is_polytope(p.order());
  report.faithful = is_faithful(m, p);
  return report;
}

std::optional<std::vector<std::vector<std::uint32_t>>> are_isomorphic_posets(const RankedPoset& p,
                                                                             const RankedPoset& q) {
  if (p.rank() != q.rank()) return std::nullopt;
  const int n = p.rank();
  for (int r = -1; r <= n; ++r) {
    if (p.count(r) != q.count(r)) return std::nullopt;
  }
  // Flatten elements in rank order; assign each element of p an image of the
  // same rank whose down-set matches the images of its down-set.
  std::vector<FaceRef> order;
  for (int r = -1; r <= n; ++r) {
    for (std::uint32_t i = 0; i < p.count(r); ++i) order.push_back({r, i});
  }
  std::vector<std::vector<std::uint32_t>> map(static_cast<std::size_t>(n) + 2);
  std::vector<std::vector<bool>> used(static_cast<std::size_t>(n) + 2);
  for (int r = -1; r <= n; ++r) {
    map[static_cast<std::size_t>(r + 1)].assign(p.count(r), kWildcard);
    used[static_cast<std::size_t>(r + 1)].assign(p.count(r), false);
  }
  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == order.size()) return true;
    const FaceRef x = order[k];
    const auto slot = static_cast<std::size_t>(x.rank + 1);
    const auto& xd = p.down(x);
    std::vector<std::uint32_t> image_down;
    for (auto d : xd) image_down.push_back(map[slot - 1][d]);
    std::sort(image_down.begin(), image_down.end());
    for (std::uint32_t y = 0; y < q.count(x.rank); ++y) {
      if (used[slot][y]) continue;
      if (q.up({x.rank, y}).size() != p.up(x).size()) continue;
      if (q.down({x.rank, y}) != image_down) continue;
      map[slot][x.index] = y;
      used[slot][y] = true;
      if (assign(k + 1)) return true;
      used[slot][y] = false;
      map[slot][x.index] = kWildcard;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return map;
}

}  // namespace maniplex
