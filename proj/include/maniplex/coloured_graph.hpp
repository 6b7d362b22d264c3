#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace maniplex {

using Flag = std::uint32_t;
using Colour = int;

/// Colours are stored in a single machine word, so ranks are capped here.
inline constexpr int kMaxRank = 64;

/// A subset of the colour set [n] = {0, ..., n-1}.
class ColourSet {
 public:
  constexpr ColourSet() = default;
  constexpr explicit ColourSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ColourSet single(Colour c) { return ColourSet(std::uint64_t{1} << c); }
  /// Colours c with lo <= c < hi.
  static constexpr ColourSet range(Colour lo, Colour hi) {
    ColourSet s;
    for (Colour c = lo < 0 ? 0 : lo; c < hi; ++c) s.bits_ |= std::uint64_t{1} << c;
    return s;
  }
  static constexpr ColourSet all(int rank) { return range(0, rank); }
  static ColourSet of(std::initializer_list<Colour> colours) {
    ColourSet s;
    for (Colour c : colours) s.bits_ |= std::uint64_t{1} << c;
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Colour c) const { return (bits_ >> c) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr ColourSet with(Colour c) const { return ColourSet(bits_ | (std::uint64_t{1} << c)); }
  constexpr ColourSet without(Colour c) const { return ColourSet(bits_ & ~(std::uint64_t{1} << c)); }
  /// [n] \ this.
  constexpr ColourSet complement(int rank) const { return ColourSet(all(rank).bits_ & ~bits_); }
  constexpr bool subset_of(ColourSet other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr ColourSet operator&(ColourSet a, ColourSet b) { return ColourSet(a.bits_ & b.bits_); }
  friend constexpr ColourSet operator|(ColourSet a, ColourSet b) { return ColourSet(a.bits_ | b.bits_); }
  friend constexpr bool operator==(ColourSet, ColourSet) = default;

  std::vector<Colour> colours() const;
  /// "{0,2}" style rendering.
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// A properly n-edge-coloured simple graph: one fixed-point-free involution
/// per colour, and no two colours agree at any flag.
class ColouredGraph {
 public:
  /// Validates and takes ownership of the matchings; `matchings[c][v]` is the
  /// c-neighbour of flag v. Throws Error on the first violated invariant.
  ColouredGraph(int rank, const std::vector<std::vector<Flag>>& matchings);

  int rank() const { return rank_; }
  std::size_t flag_count() const { return flag_count_; }
  Flag adj(Colour c, Flag v) const { return adj_[static_cast<std::size_t>(c) * flag_count_ + v]; }
  std::span<const Flag> matching(Colour c) const {
    return {adj_.data() + static_cast<std::size_t>(c) * flag_count_, flag_count_};
  }
  std::vector<std::vector<Flag>> matchings() const;

  friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;

 private:
  int rank_ = 0;
  std::size_t flag_count_ = 0;
  std::vector<Flag> adj_;  // colour-major
};

ColouredGraph build_graph(int rank, const std::vector<std::vector<Flag>>& matchings);

/// Partition of the flag set. Block ids are canonical: blocks are numbered in
/// order of their smallest flag, so equal partitions compare equal bytewise.
class Partition {
 public:
  Partition() = default;

  /// Canonicalizes arbitrary labels (flags with equal labels share a block).
  static Partition from_labels(std::span<const std::uint32_t> labels);
  static Partition discrete(std::size_t flag_count);
  static Partition single_block(std::size_t flag_count);

  std::size_t size() const { return block_of_.size(); }
  std::size_t block_count() const { return representatives_.size(); }
  std::uint32_t block_of(Flag v) const { return block_of_[v]; }
  /// Smallest flag of the block.
  Flag representative(std::uint32_t block) const { return representatives_[block]; }
  bool same_block(Flag u, Flag v) const { return block_of_[u] == block_of_[v]; }
  bool is_discrete() const { return block_count() == size(); }
  std::span<const std::uint32_t> labels() const { return block_of_; }

  std::vector<std::vector<Flag>> blocks() const;
  std::vector<Flag> members(std::uint32_t block) const;
  std::vector<std::size_t> block_sizes() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint32_t> block_of_;
  std::vector<Flag> representatives_;
};

/// Connected components of the subgraph keeping only edges with colours in A.
Partition components(const ColouredGraph& g, ColourSet colours);

/// Coarsest common refinement. Throws SizeMismatch for different flag sets.
Partition partition_meet(const Partition& p, const Partition& q);

/// True iff every block of `fine` lies inside a block of `coarse`.
bool refines(const Partition& fine, const Partition& coarse);

bool is_connected(const ColouredGraph& g);

/// Colour-preserving map determined by sending `root` to `image`, propagated
/// along edges of the (connected) source. Absent when propagation conflicts.
std::optional<std::vector<Flag>> propagate_map(const ColouredGraph& source, Flag root,
                                               const ColouredGraph& target, Flag image);

/// Checks phi(adj_c(v)) == adj_c(phi(v)) for all flags v and colours c.
bool commutes_with_colours(const ColouredGraph& source, const ColouredGraph& target,
                           std::span<const Flag> map);

/// Colour-preserving isomorphism G -> H if one exists. Both inputs must be
/// connected (throws Disconnected otherwise).
std::optional<std::vector<Flag>> are_isomorphic(const ColouredGraph& g, const ColouredGraph& h);

}  // namespace maniplex
