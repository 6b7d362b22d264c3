#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "maniplex/coloured_graph.hpp"
#include "maniplex/maniplex.hpp"
#include "maniplex/poset.hpp"

namespace maniplex {

/// Colour set S and two flags that every i-face (i in S) through u also
/// contains, yet no path avoiding S joins.
struct CipWitness {
  ColourSet colours;
  Flag u = 0;
  Flag v = 0;
};

/// u, v are joined by a path with colours > i and by one with colours < j,
/// but by none with colours strictly between.
struct WpipWitness {
  int i = 0;
  int j = 0;
  Flag u = 0;
  Flag v = 0;
};

/// u, v are joined inside colours A and inside colours B but not inside A∩B.
struct SpipWitness {
  ColourSet a;
  ColourSet b;
  Flag u = 0;
  Flag v = 0;
};

/// Component intersection property, decided subset by subset: for every
/// non-empty S, the meet of the i-face partitions (i in S) must equal the
/// components of [n] \ S. The reported witness uses the smallest S (by size,
/// then lexicographically) and the smallest flag pair.
Verdict<CipWitness> check_cip(const Maniplex& m);

/// The same property checked chain by chain on the induced poset. Exponential
/// in the number of chains; kept as an independent cross-check.
Verdict<CipWitness> check_cip_by_chains(const Maniplex& m, const InducedPoset& p);

Verdict<WpipWitness> check_wpip(const Maniplex& m);

/// The smallest pair violating the weak path property at colours (i, j).
std::optional<std::pair<Flag, Flag>> wpip_failure(const Maniplex& m, int i, int j);

inline constexpr int kMaxExhaustiveSpipRank = 6;

enum class SpipMode {
  kAuto,        ///< exhaustive up to kMaxExhaustiveSpipRank, weak form above
  kExhaustive,  ///< throws RankTooLargeForExhaustive above the cap
};

struct SpipVerdict {
  bool holds = true;
  std::optional<SpipWitness> witness;
  bool exhaustive = true;
};

SpipVerdict check_spip(const Maniplex& m, SpipMode mode = SpipMode::kAuto);

struct PolytopalityReport {
  Verdict<CipWitness> cip;
  Verdict<WpipWitness> wpip;
  SpipVerdict spip;
  PosetReport poset;
  std::vector<std::size_t> faces_per_rank;
  /// When polytopal: flag v of the maniplex -> flag of the poset's flag graph.
  std::optional<std::vector<Flag>> isomorphism;
  bool verdicts_consistent = false;

  bool polytopal() const { return cip.holds; }
};

/// Runs every criterion plus the poset-side checks and confirms they agree.
/// Throws InconsistentVerdicts if they do not (an implementation fault).
PolytopalityReport is_polytopal(const Maniplex& m);

/// Flag graph of a polytope: one flag per maximal chain (lexicographic
/// order), colour i joining chains that differ exactly at rank i.
/// Throws NotAPolytope when the poset fails the polytope checks.
ColouredGraph flag_graph(const RankedPoset& p);

/// v -> (F_-1, F_0^v, ..., F_{n-1}^v, F_n) where F_i^v is the i-face through v.
std::vector<MaximalChain> beta(const Maniplex& m, const InducedPoset& p);
std::vector<MaximalChain> beta(const Maniplex& m);

}  // namespace maniplex
