#include "maniplex/polytopality.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "maniplex/error.hpp"
#include "maniplex/parallel.hpp"

namespace maniplex {

namespace {

constexpr int kMaxSubsetRank = 24;

void require_subset_rank(int n) {
  if (n > kMaxSubsetRank) {
    throw Error(ErrorCode::kRankTooLargeForExhaustive,
                "subset sweeps are limited to rank " + std::to_string(kMaxSubsetRank));
  }
}

/// Smallest (u, v) with u < v in one block of `meet` but different blocks of
/// `target`. `target` is expected to refine `meet`.
std::optional<std::pair<Flag, Flag>> split_pair(const Partition& meet, const Partition& target) {
  if (meet == target) return std::nullopt;
  const auto blocks = meet.blocks();
  for (Flag u = 0; u < meet.size(); ++u) {
    for (Flag v : blocks[meet.block_of(u)]) {
      if (v > u && !target.same_block(u, v)) return std::pair{u, v};
    }
  }
  throw Error(ErrorCode::kInternal, "component partition does not refine the meet");
}

/// Non-empty subsets of [n] ordered by size, then lexicographically.
std::vector<ColourSet> subsets_by_size(int n) {
  std::vector<ColourSet> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) out.emplace_back(bits);
  std::sort(out.begin(), out.end(), [](ColourSet a, ColourSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.colours() < b.colours();
  });
  return out;
}

std::vector<Partition> face_partitions(const Maniplex& m) {
  std::vector<Partition> out;
  for (int i = 0; i < m.rank(); ++i) out.push_back(components(m.graph(), face_colours(m.rank(), i)));
  return out;
}

}  // namespace

Verdict<CipWitness> check_cip(const Maniplex& m) {
  const int n = m.rank();
  require_subset_rank(n);
  const auto faces = face_partitions(m);
  const auto order = subsets_by_size(n);
  std::vector<std::optional<std::pair<Flag, Flag>>> failures(order.size());
  parallel_for(order.size(), [&](std::size_t k) {
    const ColourSet s = order[k];
    if (s.size() == 1) return;
    Partition meet = Partition::single_block(m.flag_count());
    for (Colour i : s.colours()) meet = partition_meet(meet, faces[static_cast<std::size_t>(i)]);
    failures[k] = split_pair(meet, components(m.graph(), s.complement(n)));
  });
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (failures[k]) return Verdict<CipWitness>::fail({order[k], failures[k]->first, failures[k]->second});
  }
  return Verdict<CipWitness>::pass();
}

Verdict<CipWitness> check_cip_by_chains(const Maniplex& m, const InducedPoset& p) {
  const int n = m.rank();
  require_subset_rank(n);
  const auto chains = maximal_chains(p.order());
  // Every chain of proper faces is a sub-chain of some maximal chain.
  std::set<std::pair<std::uint64_t, std::vector<std::uint32_t>>> seen;
  std::map<std::uint64_t, Partition> comps;
  std::optional<CipWitness> best;
  auto better = [](const CipWitness& a, const CipWitness& b) {
    if (a.colours.size() != b.colours.size()) return a.colours.size() < b.colours.size();
    if (a.colours.colours() != b.colours.colours()) return a.colours.colours() < b.colours.colours();
    return std::pair{a.u, a.v} < std::pair{b.u, b.v};
  };
  for (const auto& chain : chains) {
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
      const ColourSet s(bits);
      std::vector<FaceRef> sub;
      std::vector<std::uint32_t> key;
      for (Colour r : s.colours()) {
        sub.push_back({r, chain[static_cast<std::size_t>(r) + 1]});
        key.push_back(chain[static_cast<std::size_t>(r) + 1]);
      }
      if (!seen.emplace(bits, key).second) continue;
      const auto flags = chain_intersection(p, sub);
      auto it = comps.find(bits);
      if (it == comps.end()) it = comps.emplace(bits, components(m.graph(), s.complement(n))).first;
      const auto& part = it->second;
      for (std::size_t a = 0; a < flags.size(); ++a) {
        for (std::size_t b = a + 1; b < flags.size(); ++b) {
          if (!part.same_block(flags[a], flags[b])) {
            CipWitness w{s, flags[a], flags[b]};
            if (!best || better(w, *best)) best = w;
            a = flags.size();
            break;
          }
        }
      }
    }
  }
  if (best) return Verdict<CipWitness>::fail(*best);
  return Verdict<CipWitness>::pass();
}

std::optional<std::pair<Flag, Flag>> wpip_failure(const Maniplex& m, int i, int j) {
  const int n = m.rank();
  if (i < 0 || j >= n || i >= j) throw Error(ErrorCode::kOutOfRange, "need 0 <= i < j < n");
  const auto above = components(m.graph(), ColourSet::range(i + 1, n));
  const auto below = components(m.graph(), ColourSet::range(0, j));
  const auto between = components(m.graph(), ColourSet::range(i + 1, j));
  return split_pair(partition_meet(above, below), between);
}

Verdict<WpipWitness> check_wpip(const Maniplex& m) {
  const int n = m.rank();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::optional<std::pair<Flag, Flag>>> failures(pairs.size());
  parallel_for(pairs.size(),
               [&](std::size_t k) { failures[k] = wpip_failure(m, pairs[k].first, pairs[k].second); });
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (failures[k]) {
      return Verdict<WpipWitness>::fail(
          {pairs[k].first, pairs[k].second, failures[k]->first, failures[k]->second});
    }
  }
  return Verdict<WpipWitness>::pass();
}

SpipVerdict check_spip(const Maniplex& m, SpipMode mode) {
  const int n = m.rank();
  if (n > kMaxExhaustiveSpipRank) {
    if (mode == SpipMode::kExhaustive) {
      throw Error(ErrorCode::kRankTooLargeForExhaustive,
                  "exhaustive SPIP is limited to rank " + std::to_string(kMaxExhaustiveSpipRank));
    }
    // Weak and strong forms agree on maniplexes; use the weak sweep.
    const auto weak = check_wpip(m);
    SpipVerdict out{weak.holds, std::nullopt, false};
    if (weak.witness) {
      out.witness = SpipWitness{ColourSet::range(weak.witness->i + 1, n),
                                ColourSet::range(0, weak.witness->j), weak.witness->u,
                                weak.witness->v};
    }
    return out;
  }
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Partition> comps(subsets);
  parallel_for(subsets, [&](std::size_t bits) { comps[bits] = components(m.graph(), ColourSet(bits)); });
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < subsets; ++a) {
    for (std::size_t b = a + 1; b < subsets; ++b) {
      if ((a & b) != a && (a & b) != b) pairs.emplace_back(a, b);  // nested pairs are trivial
    }
  }
  std::vector<std::optional<std::pair<Flag, Flag>>> failures(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    const auto [a, b] = pairs[k];
    failures[k] = split_pair(partition_meet(comps[a], comps[b]), comps[a & b]);
  });
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (failures[k]) {
      return {false,
              SpipWitness{ColourSet(pairs[k].first), ColourSet(pairs[k].second), failures[k]->first,
                          failures[k]->second},
              true};
    }
  }
  return {true, std::nullopt, true};
}

std::vector<MaximalChain> beta(const Maniplex& m, const InducedPoset& p) {
  std::vector<MaximalChain> out(m.flag_count(), MaximalChain(static_cast<std::size_t>(m.rank()) + 2, 0));
  for (Flag v = 0; v < m.flag_count(); ++v) {
    for (int r = 0; r < m.rank(); ++r) out[v][static_cast<std::size_t>(r) + 1] = p.face_of(r, v);
  }
  return out;
}

std::vector<MaximalChain> beta(const Maniplex& m) { return beta(m, induced_poset(m)); }

ColouredGraph flag_graph(const RankedPoset& p) {
  if (!is_polytope(p).is_polytope) throw Error(ErrorCode::kNotAPolytope, "poset fails the polytope checks");
  const int n = p.rank();
  const auto chains = maximal_chains(p);
  std::map<MaximalChain, Flag> index;
  for (Flag k = 0; k < chains.size(); ++k) index.emplace(chains[k], k);
  std::vector<std::vector<Flag>> matchings(static_cast<std::size_t>(n), std::vector<Flag>(chains.size()));
  for (Flag k = 0; k < chains.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      const auto slot = static_cast<std::size_t>(i) + 1;
      const auto& ups = p.up({i - 1, chains[k][slot - 1]});
      const auto& downs = p.down({i + 1, chains[k][slot + 1]});
      std::vector<std::uint32_t> between;
      std::set_intersection(ups.begin(), ups.end(), downs.begin(), downs.end(), std::back_inserter(between));
      if (between.size() != 2) throw Error(ErrorCode::kInternal, "diamond violated in a polytope");
      auto other = chains[k];
      other[slot] = between[0] == chains[k][slot] ? between[1] : between[0];
      matchings[static_cast<std::size_t>(i)][k] = index.at(other);
    }
  }
  return ColouredGraph(n, matchings);
}

PolytopalityReport is_polytopal(const Maniplex& m) {
  PolytopalityReport report;
  report.cip = check_cip(m);
  report.wpip = check_wpip(m);
  report.spip = check_spip(m);
  const auto poset = induced_poset(m);
  for (int r = 0; r < m.rank(); ++r) report.faces_per_rank.push_back(poset.faces(r).size());
  report.poset = is_polytope(m, poset);

  const bool verdict = report.cip.holds;
  bool consistent = report.wpip.holds == verdict && report.spip.holds == verdict &&
                    report.poset.is_polytope == verdict;
  // A polytopal maniplex has a faithful induced poset.
  if (verdict && !(report.poset.faithful && report.poset.faithful->holds)) consistent = false;
  if (consistent && verdict) {
    report.isomorphism = are_isomorphic(m.graph(), flag_graph(poset.order()));
    if (!report.isomorphism) consistent = false;
  }
  report.verdicts_consistent = consistent;
  if (!consistent) {
    throw Error(ErrorCode::kInconsistentVerdicts,
                std::string("cip=") + (report.cip.holds ? "1" : "0") + " wpip=" +
                    (report.wpip.holds ? "1" : "0") + " spip=" + (report.spip.holds ? "1" : "0") +
                    " poset=" + (report.poset.is_polytope ? "1" : "0"));
  }
  return report;
}

}  // namespace maniplex
