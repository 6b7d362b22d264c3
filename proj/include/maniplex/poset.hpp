#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "maniplex/coloured_graph.hpp"
#include "maniplex/maniplex.hpp"

namespace maniplex {

/// Outcome of a yes/no check, with a witness when the answer is no.
template <class Witness>
struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  static Verdict pass() { return {true, std::nullopt}; }
  static Verdict fail(Witness w) { return {false, std::move(w)}; }
};

/// An element of a ranked poset, addressed by rank and index within the rank.
struct FaceRef {
  int rank = 0;
  std::uint32_t index = 0;
  friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

/// A poset graded by ranks -1..n, stored as cover relations between
/// consecutive ranks. The order is reachability along covers.
class RankedPoset {
 public:
  struct Cover {
    FaceRef lower;  ///< rank r
    std::uint32_t upper;  ///< index at rank r+1
  };

  RankedPoset() = default;
  /// `counts[r+1]` elements of rank r, for r = -1..n.
  RankedPoset(int rank, std::vector<std::size_t> counts, std::span<const Cover> covers);

  int rank() const { return rank_; }
  std::size_t count(int r) const { return counts_[static_cast<std::size_t>(r + 1)]; }
  std::size_t size() const;
  const std::vector<std::uint32_t>& up(FaceRef f) const { return up_[slot(f.rank)][f.index]; }
  const std::vector<std::uint32_t>& down(FaceRef f) const { return down_[slot(f.rank)][f.index]; }

  /// a <= b in the order.
  bool leq(FaceRef a, FaceRef b) const;

  friend bool operator==(const RankedPoset&, const RankedPoset&) = default;

 private:
  static std::size_t slot(int r) { return static_cast<std::size_t>(r + 1); }

  int rank_ = 0;
  std::vector<std::size_t> counts_;
  std::vector<std::vector<std::vector<std::uint32_t>>> up_;    // sorted
  std::vector<std::vector<std::vector<std::uint32_t>>> down_;  // sorted
};

/// Faces of a maniplex ordered by rank and non-empty intersection, plus the
/// improper faces of ranks -1 and n.
class InducedPoset {
 public:
  const RankedPoset& order() const { return order_; }
  int rank() const { return order_.rank(); }
  std::size_t flag_count() const { return flag_count_; }
  /// Proper faces of rank r (0 <= r < n).
  const std::vector<Face>& faces(int r) const { return faces_[static_cast<std::size_t>(r)]; }
  /// components(graph, [n] \ {r}); block ids coincide with face indices.
  const Partition& face_partition(int r) const { return partitions_[static_cast<std::size_t>(r)]; }
  std::uint32_t face_of(int r, Flag v) const { return face_partition(r).block_of(v); }

 private:
  friend InducedPoset induced_poset(const Maniplex& m);

  RankedPoset order_;
  std::size_t flag_count_ = 0;
  std::vector<std::vector<Face>> faces_;
  std::vector<Partition> partitions_;
};

InducedPoset induced_poset(const Maniplex& m);

/// One element per rank -1..n; entry r+1 holds the index at rank r.
using MaximalChain = std::vector<std::uint32_t>;

/// All maximal chains of a poset whose maximal chains run through every
/// rank, in lexicographic order of their per-rank indices.
std::vector<MaximalChain> maximal_chains(const RankedPoset& p);

/// Intersection of the flag sets of a chain of proper faces (sorted).
/// Throws NotAChain unless ranks strictly increase and faces are incident.
std::vector<Flag> chain_intersection(const InducedPoset& p, std::span<const FaceRef> chain);

struct FaithfulWitness {
  MaximalChain chain;
  std::vector<Flag> flags;  ///< the >= 2 flags sharing every face of the chain
};
/// Decided by whether the meet of all face partitions is discrete.
Verdict<FaithfulWitness> is_faithful(const Maniplex& m, const InducedPoset& p);
/// Same property from chain enumeration: every chain meets in one flag.
bool is_faithful_by_chains(const InducedPoset& p);
/// Same property by counting: #maximal chains == #flags.
bool is_faithful_by_count(const InducedPoset& p);

struct DiamondWitness {
  FaceRef lower;  ///< rank i-1
  FaceRef upper;  ///< rank i+1
  std::size_t count = 0;  ///< elements of rank i between them
};
Verdict<DiamondWitness> diamond(const RankedPoset& p);

struct ConnectivityWitness {
  MaximalChain from;
  MaximalChain to;
};
/// Strong flag connectivity over all maximal chains.
Verdict<ConnectivityWitness> strong_flag_connectivity(const RankedPoset& p);
Verdict<ConnectivityWitness> strong_flag_connectivity(const RankedPoset& p,
                                                      std::span<const MaximalChain> chains);

/// The interval [lower, upper] re-ranked so that `lower` has rank -1.
/// Throws NotComparable unless lower <= upper.
RankedPoset section(const RankedPoset& p, FaceRef lower, FaceRef upper);

struct PosetReport {
  bool ranked_bounded = false;
  bool uniform_chains = false;
  std::size_t chain_count = 0;
  Verdict<DiamondWitness> diamond;
  Verdict<ConnectivityWitness> strong_flag_connected;
  std::optional<Verdict<FaithfulWitness>> faithful;  ///< only for induced posets
  bool is_polytope = false;
};

PosetReport is_polytope(const RankedPoset& p);
PosetReport is_polytope(const Maniplex& m, const InducedPoset& p);

/// Rank-preserving order isomorphism p -> q, as per-rank index maps.
std::optional<std::vector<std::vector<std::uint32_t>>> are_isomorphic_posets(const RankedPoset& p,
                                                                             const RankedPoset& q);

}  // namespace maniplex
