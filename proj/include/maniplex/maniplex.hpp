#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "maniplex/coloured_graph.hpp"

namespace maniplex {

/// A connected properly n-coloured graph in which colours i, j with |i-j| > 1
/// commute. Only `validate` creates one.
class Maniplex {
 public:
  const ColouredGraph& graph() const { return graph_; }
  int rank() const { return graph_.rank(); }
  std::size_t flag_count() const { return graph_.flag_count(); }
  Flag adj(Colour c, Flag v) const { return graph_.adj(c, v); }

  friend bool operator==(const Maniplex&, const Maniplex&) = default;

 private:
  friend Maniplex validate(ColouredGraph graph);
  explicit Maniplex(ColouredGraph graph) : graph_(std::move(graph)) {}

  ColouredGraph graph_;
};

/// Checks connectivity, then the 4-cycle axiom in its commutation form.
/// Throws Disconnected (witness flags 0 and an unreachable flag) or
/// BadTwoFactor(i, j, flag).
Maniplex validate(ColouredGraph graph);

/// An i-face: a connected component of the graph without colour i.
struct Face {
  int rank = 0;
  std::uint32_t index = 0;  ///< block id in components(graph, [n] \ {rank})
  Flag representative = 0;  ///< smallest flag of the face
  std::vector<Flag> flags;  ///< sorted
};

/// Faces of rank i in block order. The flag sets partition all flags.
std::vector<Face> faces(const Maniplex& m, int rank);

/// Colour set [n] \ {i}.
inline ColourSet face_colours(int rank, int i) { return ColourSet::single(i).complement(rank); }

/// The two factors of a middle-rank face (1 <= rank <= n-2): the component of
/// colours below the rank and the one of colours above it, both through the
/// face representative. Construction checks that the face is their cartesian
/// product. Throws RankOutOfRange for ranks 0 and n-1.
struct FaceFactors {
  std::vector<Flag> below;
  std::vector<Flag> above;
};
FaceFactors face_factors(const Maniplex& m, const Face& face);

struct ColouredPath {
  Flag start = 0;
  std::vector<Colour> colours;

  Flag end(const ColouredGraph& g) const;
};

/// Normal form of a colour word under the rewriting
///   (a, b) -> (b, a)  when a > b + 1,      (a, a) -> ().
/// Both rules preserve the endpoint of a walk in any maniplex.
std::vector<Colour> normal_form(std::vector<Colour> colours);

/// Splits a path avoiding the pivot colours i_1 < ... < i_k into k+1
/// consecutive segments; segment j uses only colours strictly between i_j and
/// i_{j+1} (with i_0 = -1, i_{k+1} = n). Throws PathUsesPivotColour.
std::vector<ColouredPath> normalize_path(const Maniplex& m, const ColouredPath& path,
                                         std::span<const int> pivots);

}  // namespace maniplex
